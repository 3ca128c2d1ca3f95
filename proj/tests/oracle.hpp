#pragma once

// Reference implementations used only by the tests. They work on plain
// doubles (-inf is Bottom, IEEE arithmetic already absorbs it) and search
// coefficients exhaustively instead of using residuation, so they share no
// code with the library beyond the Vector type.

#include <algorithm>
#include <array>
#include <cmath>
#include <functional>
#include <limits>
#include <random>
#include <vector>

#include "tropcomm/matrix.hpp"

namespace oracle {

inline constexpr double kNegInf = -std::numeric_limits<double>::infinity();

using Mat2 = std::array<double, 4>;  // row-major a11 a12 a21 a22

inline Mat2 mul(const Mat2& a, const Mat2& b) {
  auto e = [](double x, double y, double z, double w) { return std::max(x + y, z + w); };
  return {e(a[0], b[0], a[1], b[2]), e(a[0], b[1], a[1], b[3]),
          e(a[2], b[0], a[3], b[2]), e(a[2], b[1], a[3], b[3])};
}

inline bool close(double x, double y, double tol) {
  if (std::isinf(x) || std::isinf(y)) return x == y;
  return std::abs(x - y) <= tol;
}

/// A ⊗ B == B ⊗ A, evaluated entry by entry.
inline bool commutes(const Mat2& a, const Mat2& b, double tol = 1e-9) {
  const Mat2 ab = mul(a, b), ba = mul(b, a);
  for (int i = 0; i < 4; ++i) {
    if (!close(ab[i], ba[i], tol)) return false;
  }
  return true;
}

inline Mat2 as_mat2(const tropcomm::Vector& x) {
  const auto d = x.to_doubles();
  return {d[0], d[1], d[2], d[3]};
}

inline std::vector<double> combine(const std::vector<double>& lambdas,
                                   const std::vector<std::vector<double>>& set) {
  std::vector<double> out(set.front().size(), kNegInf);
  for (std::size_t i = 0; i < set.size(); ++i) {
    for (std::size_t k = 0; k < out.size(); ++k) {
      out[k] = std::max(out[k], lambdas[i] + set[i][k]);
    }
  }
  return out;
}

/// Calls f on every coefficient tuple drawn from {-inf} ∪ {-r..r}; stops
/// early when f returns true and reports whether that happened.
inline bool any_coefficients(std::size_t n, int r,
                             const std::function<bool(const std::vector<double>&)>& f) {
  std::vector<double> lambdas(n, kNegInf);
  std::vector<int> idx(n, 0);
  const int levels = 2 * r + 2;
  for (;;) {
    for (std::size_t i = 0; i < n; ++i) {
      lambdas[i] = idx[i] == 0 ? kNegInf : static_cast<double>(idx[i] - 1 - r);
    }
    if (f(lambdas)) return true;
    std::size_t i = 0;
    while (i < n && ++idx[i] == levels) idx[i++] = 0;
    if (i == n) return false;
  }
}

/// v ∈ span(S) for integer data, by coefficient search.
inline bool in_span(const std::vector<double>& v, const std::vector<std::vector<double>>& set,
                    int r) {
  return any_coefficients(set.size(), r,
                          [&](const std::vector<double>& l) { return combine(l, set) == v; });
}

/// v is extremal in span(S) iff every way of writing v as ⊕ λ_i s_i has a
/// term equal to v. For integer data the maximal coefficients are integers,
/// so a bounded integer search decides it.
inline bool extremal(const std::vector<double>& v, const std::vector<std::vector<double>>& set,
                     int r) {
  const bool split = any_coefficients(set.size(), r, [&](const std::vector<double>& l) {
    if (combine(l, set) != v) return false;
    for (std::size_t i = 0; i < set.size(); ++i) {
      if (std::isinf(l[i])) continue;
      std::vector<double> term(v.size());
      for (std::size_t k = 0; k < v.size(); ++k) term[k] = l[i] + set[i][k];
      if (term == v) return false;
    }
    return true;
  });
  return !split;
}

inline std::vector<std::vector<double>> doubles(const std::vector<tropcomm::Vector>& set) {
  std::vector<std::vector<double>> out;
  for (const auto& v : set) out.push_back(v.to_doubles());
  return out;
}

}  // namespace oracle
