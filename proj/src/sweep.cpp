#include "tropcomm/sweep.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include <json.hpp>

#include "json_util.hpp"
#include "tropcomm/bary.hpp"
#include "tropcomm/error.hpp"

namespace tropcomm {

namespace {

bool in_case(double a11, double a22, DiagonalCase diagonal, double gap) {
  switch (diagonal) {
    case DiagonalCase::kAbove:
      return a11 - a22 > gap;
    case DiagonalCase::kBelow:
      return a22 - a11 > gap;
    case DiagonalCase::kEqual:
      return a11 == a22;
  }
  return false;
}

std::string matrix_label(const Matrix& a) { return "[" + to_string(a) + "]"; }

// Records the first failing verify report of a batch.
struct BatchTally {
  int runs = 0;
  int failures = 0;
  std::optional<std::string> first_failure;
  std::optional<Vector> witness;

  void add(const VerifyReport& r) {
    ++runs;
    if (r.passed()) return;
    ++failures;
    if (first_failure) return;
    for (const CheckResult& c : r.checks) {
      if (c.pass) continue;
      first_failure = matrix_label(r.a) + " check '" + c.name + "'" +
                      (c.detail.empty() ? "" : ": " + c.detail);
      witness = c.witness;
      break;
    }
  }

  CheckResult result(std::string name) const {
    CheckResult c{std::move(name), failures == 0};
    c.witness = witness;
    c.detail = std::to_string(runs - failures) + "/" + std::to_string(runs) + " matrices pass";
    if (first_failure) c.detail += "; first failure " + *first_failure;
    return c;
  }
};

}  // namespace

Matrix random_integer_matrix(std::mt19937_64& rng, int radius, DiagonalCase diagonal) {
  if (radius < 1 && diagonal != DiagonalCase::kEqual) {
    throw Error(ErrorKind::kPrecondition, "radius must be at least 1");
  }
  std::uniform_int_distribution<int> entry(-radius, radius);
  for (;;) {
    const double a11 = entry(rng), a12 = entry(rng), a21 = entry(rng);
    const double a22 = diagonal == DiagonalCase::kEqual ? a11 : entry(rng);
    if (in_case(a11, a22, diagonal, 0.0)) {
      return Matrix{{Scalar(a11), Scalar(a12)}, {Scalar(a21), Scalar(a22)}};
    }
  }
}

Matrix random_real_matrix(std::mt19937_64& rng, double bound, DiagonalCase diagonal,
                          double min_gap) {
  if (diagonal == DiagonalCase::kEqual) {
    throw Error(ErrorKind::kPrecondition, "random_real_matrix draws unequal diagonals only");
  }
  std::uniform_real_distribution<double> entry(-bound, bound);
  for (;;) {
    const double a11 = entry(rng), a12 = entry(rng), a21 = entry(rng), a22 = entry(rng);
    if (in_case(a11, a22, diagonal, min_gap)) {
      return Matrix{{Scalar(a11), Scalar(a12)}, {Scalar(a21), Scalar(a22)}};
    }
  }
}

VectorSet substituted_equal_diagonal_set(const Matrix& a) {
  const ConeBasis cone = basis_commuting_cone(a, 0.0);
  if (cone.diagonal != DiagonalCase::kEqual) {
    throw Error(ErrorKind::kPrecondition, "substituted set needs a11 == a22");
  }
  const double a11 = a(0, 0).value(), a12 = a(0, 1).value(), a21 = a(1, 0).value();
  const double alpha1 = std::min(a12 - a11, a11 - a21);
  const double alpha2 = std::min(a21 - a11, a11 - a12);
  VectorSet out = cone.generators;
  out[1] = Vector{Scalar(0.0), Scalar(alpha1), Scalar::bottom(), Scalar(0.0)};
  out[2] = Vector{Scalar(0.0), Scalar::bottom(), Scalar(alpha2), Scalar(0.0)};
  return out;
}

bool SweepReport::passed() const noexcept {
  return std::all_of(checks.begin(), checks.end(),
                     [](const CheckResult& c) { return c.pass; });
}

SweepReport run_sweep(const SweepOptions& options) {
  SweepReport report;
  report.seed = options.verify.seed;
  std::mt19937_64 rng(options.verify.seed);
  const double tol = options.verify.tol;

  auto verify_with_seed = [&](const Matrix& a, Alpha2Form form) {
    VerifyOptions vo = options.verify;
    vo.seed = rng();
    vo.below_alpha2 = form;
    return verify_basis(a, vo);
  };

  // Exhaustive and randomized basis checks in each case.
  for (DiagonalCase diagonal :
       {DiagonalCase::kAbove, DiagonalCase::kBelow, DiagonalCase::kEqual}) {
    BatchTally tally;
    for (int i = 0; i < options.matrices_per_case; ++i) {
      const Matrix a = random_integer_matrix(rng, options.entry_radius, diagonal);
      tally.add(verify_with_seed(a, Alpha2Form::kSymmetric));
    }
    report.checks.push_back(tally.result(std::string("basis/") + to_string(diagonal)));
  }

  // The worked example with non-integer entries.
  {
    const Matrix example{{Scalar(0.166), Scalar(0.861)}, {Scalar(-0.62), Scalar(-0.76)}};
    BatchTally tally;
    tally.add(verify_with_seed(example, Alpha2Form::kSymmetric));
    report.checks.push_back(tally.result("basis/example-0.166"));
  }

  // Both α2 forms for a11 < a22, each on the same matrices.
  {
    BatchTally symmetric, repeated;
    for (int i = 0; i < options.alpha2_matrices; ++i) {
      const Matrix a = random_integer_matrix(rng, options.entry_radius, DiagonalCase::kBelow);
      const std::uint64_t seed = rng();
      VerifyOptions vo = options.verify;
      vo.seed = seed;
      vo.below_alpha2 = Alpha2Form::kSymmetric;
      symmetric.add(verify_basis(a, vo));
      vo.below_alpha2 = Alpha2Form::kRepeatedIndex;
      vo.mutate_basis = false;
      repeated.add(verify_basis(a, vo));
    }
    CheckResult c = symmetric.result("alpha2/symmetric-form");
    report.checks.push_back(c);
    std::ostringstream msg;
    msg << "a11 < a22 uses alpha2 = min(a21 - a22, a11 - a12): passed on "
        << symmetric.runs - symmetric.failures << "/" << symmetric.runs
        << " matrices; the variant min(a21 - a22, a11 - a21) failed on " << repeated.failures
        << "/" << repeated.runs;
    if (repeated.first_failure) msg << " (first: " << *repeated.first_failure << ")";
    report.alpha2_resolution = msg.str();
  }

  // Substituted β2', β3' do not generate K when 2 a11 > a12 + a21.
  {
    CheckResult c{"equal-diagonal/substitution-fails"};
    std::mt19937_64 local(rng());
    std::vector<Matrix> fixtures{Matrix{{Scalar(0.0), Scalar(-2.0)}, {Scalar(-3.0), Scalar(0.0)}}};
    while (fixtures.size() < 20) {
      Matrix a = random_integer_matrix(local, options.entry_radius, DiagonalCase::kEqual);
      if (2 * a(0, 0).value() > a(0, 1).value() + a(1, 0).value()) fixtures.push_back(a);
    }
    int ok = 0;
    for (const Matrix& a : fixtures) {
      const double a11 = a(0, 0).value(), a21 = a(1, 0).value();
      const Vector b{Scalar(0.0), Scalar(a11 - a21), Scalar(a21 - a11), Scalar(0.0)};
      const bool solves = is_solution(b, build_system(a), tol);
      const bool outside = !in_span(b, substituted_equal_diagonal_set(a), tol);
      const bool inside = in_span(b, basis_commuting_cone(a, tol).basis, tol);
      if (solves && outside && inside) {
        ++ok;
      } else if (c.pass) {
        c.pass = false;
        c.witness = b;
        c.detail = "fixture " + matrix_label(a) + ": solves=" + std::to_string(solves) +
                   " outside-substituted=" + std::to_string(outside) +
                   " inside-basis=" + std::to_string(inside);
      }
    }
    if (c.pass) c.detail = std::to_string(ok) + "/" + std::to_string(fixtures.size()) + " fixtures";
    report.checks.push_back(c);
  }

  // α2 = α1 + (a21 - a12) for a11 > a22.
  {
    CheckResult c{"alpha-identity"};
    double worst = 0.0;
    for (int i = 0; i < options.identity_matrices; ++i) {
      const Matrix a = random_real_matrix(rng, 10.0, DiagonalCase::kAbove);
      const ConeBasis cone = basis_commuting_cone(a, tol);
      const double gap = *cone.alpha2 - *cone.alpha1 - (a(1, 0).value() - a(0, 1).value());
      worst = std::max(worst, std::abs(gap));
      if (std::abs(gap) > options.identity_tol && c.pass) {
        c.pass = false;
        c.detail = "matrix " + matrix_label(a);
      }
    }
    std::ostringstream msg;
    msg << options.identity_matrices << " matrices, max |alpha2 - alpha1 - (a21 - a12)| = "
        << worst;
    c.detail = c.detail.empty() ? msg.str() : msg.str() + "; first failure " + c.detail;
    report.checks.push_back(c);
  }

  // Concurrency of the three cevians.
  {
    CheckResult c{"concurrency"};
    double worst = 0.0;
    for (int i = 0; i < options.concurrency_matrices; ++i) {
      const Matrix a = random_real_matrix(rng, 10.0, DiagonalCase::kAbove);
      const ConcurrencyReport r = concurrency_check(basis_commuting_cone(a, tol), tol);
      worst = std::max({worst, r.residual, r.foot_residual});
      if (!r.holds && c.pass) {
        c.pass = false;
        c.detail = "matrix " + matrix_label(a);
      }
    }
    std::ostringstream msg;
    msg << options.concurrency_matrices << " matrices, max residual " << worst;
    c.detail = c.detail.empty() ? msg.str() : msg.str() + "; first failure " + c.detail;
    report.checks.push_back(c);
  }

  return report;
}

std::string SweepReport::to_text() const {
  std::ostringstream out;
  out << "seed: " << seed << '\n';
  for (const CheckResult& c : checks) {
    out << "[" << (c.pass ? "PASS" : "FAIL") << "] " << c.name;
    if (!c.detail.empty()) out << "  (" << c.detail << ')';
    if (c.witness) out << "  witness " << *c.witness;
    out << '\n';
  }
  if (!alpha2_resolution.empty()) out << "alpha2 resolution: " << alpha2_resolution << '\n';
  out << "verdict: " << (passed() ? "PASS" : "FAIL") << '\n';
  return out.str();
}

std::string SweepReport::to_json() const {
  using nlohmann::json;
  json doc;
  doc["seed"] = seed;
  doc["checks"] = json::array();
  for (const CheckResult& c : checks) {
    json entry{{"name", c.name}, {"pass", c.pass}, {"detail", c.detail}};
    if (c.witness) entry["witness"] = detail::vector_to_json(*c.witness);
    doc["checks"].push_back(std::move(entry));
  }
  doc["alpha2_resolution"] = alpha2_resolution;
  doc["pass"] = passed();
  return doc.dump(2);
}

}  // namespace tropcomm
