#include "tropcomm/semiring.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <ostream>

#include "tropcomm/error.hpp"

namespace tropcomm {

Scalar::Scalar(double value) : bottom_(false), value_(value) {
  if (!std::isfinite(value)) {
    throw Error(ErrorKind::kDomain,
                "max-plus scalars must be finite or bottom, got " +
                    std::to_string(value));
  }
}

Scalar Scalar::from_double(double value) {
  if (std::isinf(value) && value < 0) return bottom();
  return Scalar(value);
}

double Scalar::value() const {
  if (bottom_) {
    throw Error(ErrorKind::kPrecondition, "value() called on bottom");
  }
  return value_;
}

double Scalar::to_double() const noexcept {
  return bottom_ ? -HUGE_VAL : value_;
}

Scalar oplus(Scalar a, Scalar b) noexcept {
  if (a.is_bottom()) return b;
  if (b.is_bottom()) return a;
  return a.value() >= b.value() ? a : b;
}

Scalar otimes(Scalar a, Scalar b) noexcept {
  if (a.is_bottom() || b.is_bottom()) return Scalar::bottom();
  return Scalar(a.value() + b.value());
}

bool trop_eq(Scalar a, Scalar b, double tol) {
  if (a.is_bottom() || b.is_bottom()) return a.is_bottom() && b.is_bottom();
  return std::abs(a.value() - b.value()) <= tol;
}

bool trop_leq(Scalar a, Scalar b, double tol) {
  if (a.is_bottom()) return true;
  if (b.is_bottom()) return false;
  return a.value() <= b.value() + tol;
}

std::string to_string(Scalar s) {
  if (s.is_bottom()) return "-inf";
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.12g", s.value());
  return buf;
}

std::ostream& operator<<(std::ostream& os, Scalar s) { return os << to_string(s); }

Scalar parse_scalar(std::string_view token) {
  std::string lower(token);
  std::transform(lower.begin(), lower.end(), lower.begin(),
                 [](unsigned char c) { return std::tolower(c); });
  if (lower == "-inf") return Scalar::bottom();

  double value = 0.0;
  const char* first = token.data();
  const char* last = token.data() + token.size();
  if (first != last && *first == '+') ++first;
  auto [ptr, ec] = std::from_chars(first, last, value);
  if (ec != std::errc() || ptr != last || token.empty() ||
      !std::isfinite(value)) {
    throw ParseError(0, "not a max-plus scalar: '" + std::string(token) + "'");
  }
  return Scalar(value);
}

}  // namespace tropcomm
