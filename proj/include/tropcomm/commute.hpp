#pragma once

// Matrices commuting with a finite 2x2 max-plus matrix A.
//
// B commutes with A iff x = (b11, b12, b21, b22) solves the two-sided system
// C ⊗ x = D ⊗ x, whose solution set K is a max-plus cone. Its basis has four
// vectors when a11 != a22 and six when a11 == a22.

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "tropcomm/cone.hpp"
#include "tropcomm/matrix.hpp"

namespace tropcomm {

struct TwoSidedSystem {
  Matrix c;  // 4x4
  Matrix d;  // 4x4
};

enum class DiagonalCase { kAbove, kBelow, kEqual };

/// "AboveDiagonal" / "BelowDiagonal" / "EqualDiagonal".
const char* to_string(DiagonalCase c) noexcept;

/// Which α2 formula to use when a11 < a22.
///
/// kSymmetric mirrors the a11 > a22 case under the index swap 1 <-> 2:
///   α2 = min(a21 - a22, a11 - a12).
/// kRepeatedIndex is the variant min(a21 - a22, a11 - a21). It does not
/// yield a generating set of solutions and is kept only so the verification
/// sweep can demonstrate that.
enum class Alpha2Form { kSymmetric, kRepeatedIndex };

struct ConeBasis {
  DiagonalCase diagonal = DiagonalCase::kEqual;
  /// Generators in the closed form above, before scaling.
  VectorSet generators;
  /// The same vectors scaled: first finite entry 0.
  VectorSet basis;
  /// Present when a11 != a22.
  std::optional<double> alpha1;
  std::optional<double> alpha2;
};

/// Builds C and D with C ⊗ x = (A ⊗ B) and D ⊗ x = (B ⊗ A) entrywise.
/// Throws Error(kDomain) unless A is a finite 2x2 matrix.
TwoSidedSystem build_system(const Matrix& a);

/// A ⊗ B == B ⊗ A within tol.
bool commutes(const Matrix& a, const Matrix& b, double tol = kDefaultTolerance);

bool is_solution(const Vector& x, const TwoSidedSystem& system,
                 double tol = kDefaultTolerance);

/// kEqual iff |a11 - a22| <= tol.
DiagonalCase classify(const Matrix& a, double tol = kDefaultTolerance);

ConeBasis basis_commuting_cone(const Matrix& a, double tol = kDefaultTolerance,
                               Alpha2Form below_alpha2 = Alpha2Form::kSymmetric);

/// Every x ∈ grid^4 solving the system for A, in lexicographic grid order.
/// Includes the all-Bottom vector when the grid contains Bottom.
VectorSet enumerate_commuting(const Matrix& a, std::span<const Scalar> grid,
                              double tol = kDefaultTolerance);

/// Bottom followed by the integers -radius..radius.
std::vector<Scalar> integer_grid(int radius);

struct VerifyOptions {
  double tol = kDefaultTolerance;
  std::uint64_t seed = 1;
  int grid_radius = 5;
  /// Random ⊕ λ_i ⊗ β_i combinations checked for closure.
  int closure_trials = 200;
  /// Probability that a sampled coefficient is Bottom.
  double bottom_probability = 0.3;
  /// Finite coefficients are drawn uniformly from [-range, range].
  double lambda_range = 5.0;
  Alpha2Form below_alpha2 = Alpha2Form::kSymmetric;
  /// Fault injection: drop the last basis vector before checking.
  bool mutate_basis = false;
};

struct CheckResult {
  std::string name;
  bool pass = true;
  std::optional<Vector> witness{};
  std::string detail{};
};

struct VerifyReport {
  Matrix a;
  ConeBasis basis;
  std::uint64_t seed = 0;
  std::vector<CheckResult> checks;
  std::vector<std::string> warnings;

  bool passed() const noexcept;
  /// Human-readable multi-line summary.
  std::string to_text() const;
  /// {case, matrix, seed, basis, alpha1, alpha2, checks: [{name, pass,
  /// witness?, detail}], warnings}.
  std::string to_json() const;
};

/// Runs the five basis checks:
///   solves      every basis vector solves the system
///   independent no basis vector lies in the span of the others
///   extremal    every basis vector is extremal in span(basis)
///   complete    every grid solution lies in span(basis)
///   closure     random combinations of the basis solve the system
VerifyReport verify_basis(const Matrix& a, const VerifyOptions& options = {});

/// Same checks against a caller-supplied basis, e.g. one read back from JSON.
VerifyReport verify_basis(const Matrix& a, const VectorSet& basis,
                          const VerifyOptions& options = {});

/// Parses the JSON written by VerifyReport::to_json and returns the matrix
/// and basis vectors it records.
std::pair<Matrix, VectorSet> parse_report_json(std::string_view text);

}  // namespace tropcomm
