#pragma once

// Max-plus scalars over R ∪ {-inf}: a ⊕ b = max(a, b), a ⊗ b = a + b.

#include <iosfwd>
#include <string>
#include <string_view>

namespace tropcomm {

inline constexpr double kDefaultTolerance = 1e-9;

/// An element of the max-plus semiring. Bottom (-inf) is a tagged case, not
/// a float sentinel; finite values are never NaN or infinite.
class Scalar {
 public:
  /// Default-constructs Bottom, the additive identity.
  constexpr Scalar() noexcept = default;

  /// Throws Error(kDomain) for NaN or ±infinity.
  explicit Scalar(double value);

  static constexpr Scalar bottom() noexcept { return Scalar(); }
  static Scalar finite(double value) { return Scalar(value); }

  /// Maps -inf to Bottom; any other non-finite value is rejected.
  static Scalar from_double(double value);

  constexpr bool is_bottom() const noexcept { return bottom_; }
  constexpr bool is_finite() const noexcept { return !bottom_; }

  /// Finite payload. Precondition: is_finite().
  double value() const;

  /// -inf for Bottom; convenient at the C boundary and for exp().
  double to_double() const noexcept;

  /// Exact structural equality (no tolerance).
  friend constexpr bool operator==(const Scalar& a, const Scalar& b) noexcept {
    return a.bottom_ == b.bottom_ && (a.bottom_ || a.value_ == b.value_);
  }

 private:
  bool bottom_ = true;
  double value_ = 0.0;
};

Scalar oplus(Scalar a, Scalar b) noexcept;
Scalar otimes(Scalar a, Scalar b) noexcept;

/// Both Bottom, or both finite with |a - b| <= tol.
bool trop_eq(Scalar a, Scalar b, double tol = kDefaultTolerance);

/// a <= b + tol in the order where Bottom is below every finite value.
bool trop_leq(Scalar a, Scalar b, double tol = kDefaultTolerance);

/// Finite values print with 12 significant digits, Bottom as `-inf`.
std::string to_string(Scalar s);
std::ostream& operator<<(std::ostream& os, Scalar s);

/// Accepts decimal literals and `-inf` (any case). Throws ParseError.
Scalar parse_scalar(std::string_view token);

}  // namespace tropcomm
