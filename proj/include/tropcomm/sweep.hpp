#pragma once

// Batch verification: seeded random matrices in every diagonal case, the
// exhaustive grid oracle, the rejected α2 variant, the α2 - α1 identity and
// the cevian concurrency sweep.

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "tropcomm/commute.hpp"

namespace tropcomm {

struct SweepOptions {
  VerifyOptions verify;
  /// Random integer matrices (entries in [-entry_radius, entry_radius]) per
  /// diagonal case for the exhaustive checks.
  int matrices_per_case = 50;
  int entry_radius = 3;
  /// a11 < a22 matrices used to compare the two α2 forms.
  int alpha2_matrices = 100;
  /// Random a11 > a22 matrices for the α2 - α1 = a21 - a12 identity.
  int identity_matrices = 1000;
  double identity_tol = 1e-12;
  /// Random a11 > a22 matrices with entries in [-10, 10] for concurrency.
  int concurrency_matrices = 100;
};

struct SweepReport {
  std::uint64_t seed = 0;
  std::vector<CheckResult> checks;
  /// Which α2 formula for a11 < a22 survived the oracle.
  std::string alpha2_resolution;

  bool passed() const noexcept;
  std::string to_text() const;
  std::string to_json() const;
};

/// Uniform random integer matrix in [-radius, radius] whose diagonal falls
/// in the requested case.
Matrix random_integer_matrix(std::mt19937_64& rng, int radius, DiagonalCase diagonal);

/// Uniform real matrix in [-bound, bound]^4 with a11 - a22 beyond min_gap
/// in the requested direction (kAbove or kBelow).
Matrix random_real_matrix(std::mt19937_64& rng, double bound, DiagonalCase diagonal,
                          double min_gap = 1e-6);

/// The six-vector equal-diagonal basis with β2, β3 swapped for the
/// unequal-diagonal shapes (0, α1, -inf, 0), (0, -inf, α2, 0) where
/// α1 = min(a12 - a11, a11 - a21) and α2 = min(a21 - a11, a11 - a12).
/// That set does not generate K; the sweep uses it as a negative fixture.
VectorSet substituted_equal_diagonal_set(const Matrix& a);

SweepReport run_sweep(const SweepOptions& options = {});

}  // namespace tropcomm
