#include "tropcomm/cone.hpp"

#include <cmath>

#include "tropcomm/error.hpp"

namespace tropcomm {

namespace {

void require_dim(const Vector& v, std::size_t dim, const char* what) {
  if (v.dim() != dim) {
    throw Error(ErrorKind::kDimension,
                std::string(what) + ": dimension " + std::to_string(v.dim()) +
                    " does not match " + std::to_string(dim));
  }
}

}  // namespace

Support support(const Vector& v) {
  Support out;
  for (std::size_t i = 0; i < v.dim(); ++i) {
    if (v[i].is_finite()) out.push_back(i);
  }
  return out;
}

Vector scale(const Vector& v) {
  for (std::size_t i = 0; i < v.dim(); ++i) {
    if (v[i].is_finite()) return otimes(Scalar(-v[i].value()), v);
  }
  throw Error(ErrorKind::kDegenerate, "cannot scale the all-bottom vector");
}

bool is_scaled(const Vector& v, double tol) {
  for (std::size_t i = 0; i < v.dim(); ++i) {
    if (v[i].is_finite()) return std::abs(v[i].value()) <= tol;
  }
  return false;
}

VectorSet shift_set(const VectorSet& set, const Vector& u, std::size_t t) {
  if (t >= u.dim() || u[t].is_bottom()) {
    throw Error(ErrorKind::kPrecondition,
                "shift index " + std::to_string(t + 1) +
                    " is outside the support of the reference vector");
  }
  VectorSet out;
  for (const Vector& v : set) {
    require_dim(v, u.dim(), "shift_set");
    if (v[t].is_bottom()) continue;
    out.push_back(otimes(Scalar(u[t].value() - v[t].value()), v));
  }
  return out;
}

bool is_leq(const Vector& u, const Vector& v, double tol) {
  require_dim(u, v.dim(), "is_leq");
  for (std::size_t i = 0; i < u.dim(); ++i) {
    if (!trop_leq(u[i], v[i], tol)) return false;
  }
  return true;
}

bool is_minimal(const Vector& v, const VectorSet& set, double tol) {
  for (const Vector& u : set) {
    if (is_leq(u, v, tol) && !approx_equal(u, v, tol)) return false;
  }
  return true;
}

bool is_extremal(const Vector& v, const VectorSet& set, double tol) {
  const Support supp = support(v);
  if (supp.empty()) {
    throw Error(ErrorKind::kDegenerate, "the all-bottom vector is never extremal");
  }
  for (std::size_t t : supp) {
    if (is_minimal(v, shift_set(set, v, t), tol)) return true;
  }
  return false;
}

Scalar span_lambda(const Vector& v, const Vector& w) {
  require_dim(w, v.dim(), "span_lambda");
  bool any = false;
  double lambda = 0.0;
  for (std::size_t i = 0; i < w.dim(); ++i) {
    if (w[i].is_bottom()) continue;
    if (v[i].is_bottom()) return Scalar::bottom();
    const double d = v[i].value() - w[i].value();
    lambda = any ? std::min(lambda, d) : d;
    any = true;
  }
  return any ? Scalar(lambda) : Scalar::bottom();
}

Vector principal_combination(const Vector& v, const VectorSet& set) {
  Vector acc(v.dim());
  for (const Vector& w : set) {
    acc = oplus(acc, otimes(span_lambda(v, w), w));
  }
  return acc;
}

bool in_span(const Vector& v, const VectorSet& set, double tol) {
  if (v.is_bottom()) return true;
  return approx_equal(principal_combination(v, set), v, tol);
}

bool is_independent(const VectorSet& set, double tol) {
  for (std::size_t i = 0; i < set.size(); ++i) {
    VectorSet others;
    others.reserve(set.size() - 1);
    for (std::size_t j = 0; j < set.size(); ++j) {
      if (j != i) others.push_back(set[j]);
    }
    if (in_span(set[i], others, tol)) return false;
  }
  return true;
}

Vector combine(std::span<const Scalar> lambdas, const VectorSet& set) {
  if (set.empty() || lambdas.size() != set.size()) {
    throw Error(ErrorKind::kDimension,
                "need one coefficient per vector (got " +
                    std::to_string(lambdas.size()) + " for " +
                    std::to_string(set.size()) + ")");
  }
  Vector acc(set.front().dim());
  for (std::size_t i = 0; i < set.size(); ++i) {
    acc = oplus(acc, otimes(lambdas[i], set[i]));
  }
  return acc;
}

VectorSet extract_basis(const VectorSet& set, double tol) {
  VectorSet scaled;
  for (const Vector& v : set) {
    if (v.is_bottom()) continue;
    Vector s = scale(v);
    bool duplicate = false;
    for (const Vector& seen : scaled) {
      if (approx_equal(seen, s, tol)) {
        duplicate = true;
        break;
      }
    }
    if (!duplicate) scaled.push_back(std::move(s));
  }
  VectorSet out;
  for (const Vector& v : scaled) {
    if (is_extremal(v, scaled, tol)) out.push_back(v);
  }
  return out;
}

}  // namespace tropcomm
