#pragma once

// Finitely generated max-plus cones: span membership, supports, scaling,
// minimality and extremality tests.
//
// Indices are 0-based throughout the API; text output adds 1.

#include <cstddef>
#include <optional>
#include <vector>

#include "tropcomm/matrix.hpp"

namespace tropcomm {

/// A finite list of same-dimension vectors (generators, bases, solutions).
using VectorSet = std::vector<Vector>;

/// Strictly increasing positions of the finite entries.
using Support = std::vector<std::size_t>;

Support support(const Vector& v);

/// Shifts v so its first finite entry is 0. Throws Error(kDegenerate) for
/// the all-Bottom vector.
Vector scale(const Vector& v);

/// Whether the first finite entry equals 0 within tol.
bool is_scaled(const Vector& v, double tol = kDefaultTolerance);

/// {(u_t - v_t) ⊗ v : v ∈ S, v_t finite}. Throws Error(kPrecondition) if
/// u_t is Bottom.
VectorSet shift_set(const VectorSet& set, const Vector& u, std::size_t t);

/// Componentwise u_i <= v_i + tol, Bottom below every finite value.
bool is_leq(const Vector& u, const Vector& v, double tol = kDefaultTolerance);

/// No u ∈ S with u <= v and u != v. Mutual domination within tol counts as
/// equality, so ties never break minimality.
bool is_minimal(const Vector& v, const VectorSet& set,
                double tol = kDefaultTolerance);

/// Extremality of v in span(S) via minimality: true iff some t ∈ supp(v)
/// leaves v minimal in shift_set(S, v, t). Assumes v ∈ span(S). Throws
/// Error(kDegenerate) for the all-Bottom vector.
bool is_extremal(const Vector& v, const VectorSet& set,
                 double tol = kDefaultTolerance);

/// Residual: the greatest λ with λ ⊗ w <= v. Bottom when some finite entry
/// of w sits over a Bottom of v; w all-Bottom is treated as Bottom too.
Scalar span_lambda(const Vector& v, const Vector& w);

/// ⊕_{w ∈ S} span_lambda(v, w) ⊗ w, the greatest span element below v.
Vector principal_combination(const Vector& v, const VectorSet& set);

/// v ∈ span(S), decided by comparing v with its principal combination.
/// The all-Bottom vector is in every span.
bool in_span(const Vector& v, const VectorSet& set,
             double tol = kDefaultTolerance);

/// No member lies in the span of the others. Duplicates make a set
/// dependent.
bool is_independent(const VectorSet& set, double tol = kDefaultTolerance);

/// ⊕ λ_i ⊗ S_i. Throws Error(kDimension) on length mismatch or an empty set.
Vector combine(std::span<const Scalar> lambdas, const VectorSet& set);

/// Scaled extremals of span(S): every generator is scaled, duplicates are
/// merged and the non-extremal ones dropped. The result is a basis of
/// span(S).
VectorSet extract_basis(const VectorSet& set, double tol = kDefaultTolerance);

}  // namespace tropcomm
