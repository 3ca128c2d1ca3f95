#include "tropcomm/commute.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <sstream>

#include <json.hpp>

#include "json_util.hpp"
#include "tropcomm/error.hpp"

namespace tropcomm {

namespace {

const Scalar kBot = Scalar::bottom();

void require_finite_2x2(const Matrix& a) {
  if (a.rows() != 2 || a.cols() != 2) {
    throw Error(ErrorKind::kDimension,
                "expected a 2x2 matrix, got " + std::to_string(a.rows()) + "x" +
                    std::to_string(a.cols()));
  }
  if (!a.is_finite()) {
    throw Error(ErrorKind::kDomain, "A must have finite entries, got " + to_string(a));
  }
}

struct Entries {
  double a11, a12, a21, a22;
};

Entries entries_of(const Matrix& a) {
  require_finite_2x2(a);
  return {a(0, 0).value(), a(0, 1).value(), a(1, 0).value(), a(1, 1).value()};
}

Vector vec(Scalar x1, Scalar x2, Scalar x3, Scalar x4) { return Vector{x1, x2, x3, x4}; }

Scalar fin(double v) { return Scalar(v); }

// Draws one closure coefficient: Bottom with probability p, else uniform.
class CoefficientSampler {
 public:
  CoefficientSampler(std::uint64_t seed, double p, double range)
      : rng_(seed), bottom_(p), value_(-range, range) {}

  Scalar operator()() {
    if (bottom_(rng_)) return kBot;
    return Scalar(value_(rng_));
  }

 private:
  std::mt19937_64 rng_;
  std::bernoulli_distribution bottom_;
  std::uniform_real_distribution<double> value_;
};

}  // namespace

const char* to_string(DiagonalCase c) noexcept {
  switch (c) {
    case DiagonalCase::kAbove:
      return "AboveDiagonal";
    case DiagonalCase::kBelow:
      return "BelowDiagonal";
    case DiagonalCase::kEqual:
      return "EqualDiagonal";
  }
  return "?";
}

TwoSidedSystem build_system(const Matrix& a) {
  require_finite_2x2(a);
  const Scalar a11 = a(0, 0), a12 = a(0, 1), a21 = a(1, 0), a22 = a(1, 1);
  // Row i of C ⊗ x is (A ⊗ B)_i and row i of D ⊗ x is (B ⊗ A)_i, with rows
  // ordered 11, 12, 21, 22.
  TwoSidedSystem sys{
      Matrix{{a11, kBot, a12, kBot},
             {kBot, a11, kBot, a12},
             {a21, kBot, a22, kBot},
             {kBot, a21, kBot, a22}},
      Matrix{{a11, a21, kBot, kBot},
             {a12, a22, kBot, kBot},
             {kBot, kBot, a11, a21},
             {kBot, kBot, a12, a22}},
  };
  return sys;
}

bool commutes(const Matrix& a, const Matrix& b, double tol) {
  if (a.rows() != a.cols() || b.rows() != b.cols() || a.rows() != b.rows()) {
    return false;
  }
  return approx_equal(otimes(a, b), otimes(b, a), tol);
}

bool is_solution(const Vector& x, const TwoSidedSystem& system, double tol) {
  return approx_equal(otimes(system.c, x), otimes(system.d, x), tol);
}

DiagonalCase classify(const Matrix& a, double tol) {
  const Entries e = entries_of(a);
  const double gap = e.a11 - e.a22;
  if (std::abs(gap) <= tol) return DiagonalCase::kEqual;
  return gap > 0 ? DiagonalCase::kAbove : DiagonalCase::kBelow;
}

ConeBasis basis_commuting_cone(const Matrix& a, double tol, Alpha2Form below_alpha2) {
  const auto [a11, a12, a21, a22] = entries_of(a);
  ConeBasis out;
  out.diagonal = classify(a, tol);

  const Vector beta1 = vec(fin(0), kBot, kBot, fin(0));
  switch (out.diagonal) {
    case DiagonalCase::kAbove: {
      const double alpha1 = std::min(a12 - a11, a22 - a21);
      const double alpha2 = std::min(a21 - a11, a22 - a12);
      out.alpha1 = alpha1;
      out.alpha2 = alpha2;
      out.generators = {beta1, vec(fin(0), fin(alpha1), kBot, fin(0)),
                        vec(fin(0), kBot, fin(alpha2), fin(0)),
                        vec(fin(a11), fin(a12), fin(a21), kBot)};
      break;
    }
    case DiagonalCase::kBelow: {
      const double alpha1 = std::min(a12 - a22, a11 - a21);
      const double alpha2 = below_alpha2 == Alpha2Form::kSymmetric
                                ? std::min(a21 - a22, a11 - a12)
                                : std::min(a21 - a22, a11 - a21);
      out.alpha1 = alpha1;
      out.alpha2 = alpha2;
      out.generators = {beta1, vec(fin(0), fin(alpha1), kBot, fin(0)),
                        vec(fin(0), kBot, fin(alpha2), fin(0)),
                        vec(kBot, fin(a12), fin(a21), fin(a22))};
      break;
    }
    case DiagonalCase::kEqual:
      out.generators = {beta1,
                        vec(fin(a21), fin(a11), kBot, fin(a21)),
                        vec(fin(a12), kBot, fin(a11), fin(a12)),
                        vec(fin(a11), fin(a12), fin(a21), kBot),
                        vec(kBot, fin(a12), fin(a21), fin(a22)),
                        vec(kBot, fin(a12), fin(a21), kBot)};
      break;
  }
  out.basis.reserve(out.generators.size());
  for (const Vector& g : out.generators) out.basis.push_back(scale(g));
  return out;
}

VectorSet enumerate_commuting(const Matrix& a, std::span<const Scalar> grid, double tol) {
  const TwoSidedSystem sys = build_system(a);
  VectorSet out;
  Vector x(4);
  for (Scalar x1 : grid) {
    x[0] = x1;
    for (Scalar x2 : grid) {
      x[1] = x2;
      for (Scalar x3 : grid) {
        x[2] = x3;
        for (Scalar x4 : grid) {
          x[3] = x4;
          if (is_solution(x, sys, tol)) out.push_back(x);
        }
      }
    }
  }
  return out;
}

std::vector<Scalar> integer_grid(int radius) {
  if (radius < 0) {
    throw Error(ErrorKind::kPrecondition, "grid radius must be non-negative");
  }
  std::vector<Scalar> grid{kBot};
  for (int v = -radius; v <= radius; ++v) grid.push_back(Scalar(static_cast<double>(v)));
  return grid;
}

bool VerifyReport::passed() const noexcept {
  return std::all_of(checks.begin(), checks.end(),
                     [](const CheckResult& c) { return c.pass; });
}

VerifyReport verify_basis(const Matrix& a, const VerifyOptions& options) {
  ConeBasis cone = basis_commuting_cone(a, options.tol, options.below_alpha2);
  VectorSet basis = cone.basis;
  if (options.mutate_basis && !basis.empty()) basis.pop_back();
  VerifyReport report = verify_basis(a, basis, options);
  cone.basis = std::move(basis);
  if (options.mutate_basis) cone.generators.pop_back();
  report.basis = std::move(cone);
  return report;
}

VerifyReport verify_basis(const Matrix& a, const VectorSet& basis,
                          const VerifyOptions& options) {
  const TwoSidedSystem sys = build_system(a);
  const double tol = options.tol;

  VerifyReport report;
  report.a = a;
  report.seed = options.seed;
  report.basis.diagonal = classify(a, tol);
  report.basis.basis = basis;
  report.basis.generators = basis;

  const double gap = std::abs(a(0, 0).value() - a(1, 1).value());
  if (gap != 0.0 && gap <= 10.0 * tol) {
    std::ostringstream msg;
    msg << "|a11 - a22| = " << gap << " is within 10x the tolerance " << tol
        << "; the case classification is sensitive to rounding";
    report.warnings.push_back(msg.str());
  }

  {
    CheckResult c{"solves"};
    for (const Vector& v : basis) {
      if (!is_solution(v, sys, tol)) {
        c.pass = false;
        c.witness = v;
        c.detail = "basis vector does not solve C x = D x";
        break;
      }
    }
    report.checks.push_back(std::move(c));
  }
  {
    CheckResult c{"independent"};
    for (std::size_t i = 0; i < basis.size() && c.pass; ++i) {
      VectorSet others;
      for (std::size_t j = 0; j < basis.size(); ++j) {
        if (j != i) others.push_back(basis[j]);
      }
      if (in_span(basis[i], others, tol)) {
        c.pass = false;
        c.witness = basis[i];
        c.detail = "lies in the span of the other basis vectors";
      }
    }
    report.checks.push_back(std::move(c));
  }
  {
    CheckResult c{"extremal"};
    for (const Vector& v : basis) {
      if (v.is_bottom() || !is_extremal(v, basis, tol)) {
        c.pass = false;
        c.witness = v;
        c.detail = "not minimal in any shifted set";
        break;
      }
    }
    report.checks.push_back(std::move(c));
  }
  {
    CheckResult c{"complete"};
    const std::vector<Scalar> grid = integer_grid(options.grid_radius);
    const VectorSet solutions = enumerate_commuting(a, grid, tol);
    for (const Vector& x : solutions) {
      if (!in_span(x, basis, tol)) {
        c.pass = false;
        c.witness = x;
        c.detail = "grid solution outside span(basis)";
        break;
      }
    }
    if (c.pass) {
      c.detail = std::to_string(solutions.size()) + " grid solutions in span";
    }
    report.checks.push_back(std::move(c));
  }
  {
    CheckResult c{"closure"};
    if (basis.empty()) {
      c.detail = "empty basis";
    } else {
      CoefficientSampler sample(options.seed, options.bottom_probability,
                                options.lambda_range);
      std::vector<Scalar> lambdas(basis.size());
      for (int trial = 0; trial < options.closure_trials; ++trial) {
        for (Scalar& l : lambdas) l = sample();
        const Vector x = combine(lambdas, basis);
        if (!is_solution(x, sys, tol)) {
          c.pass = false;
          c.witness = x;
          c.detail = "combination from trial " + std::to_string(trial) +
                     " does not solve C x = D x";
          break;
        }
      }
      if (c.pass) {
        c.detail = std::to_string(options.closure_trials) + " random combinations";
      }
    }
    report.checks.push_back(std::move(c));
  }
  return report;
}

std::string VerifyReport::to_text() const {
  std::ostringstream out;
  out << "matrix: " << tropcomm::to_string(a) << '\n';
  out << "case: " << tropcomm::to_string(basis.diagonal) << '\n';
  out << "seed: " << seed << '\n';
  if (basis.alpha1) out << "alpha1: " << tropcomm::to_string(Scalar(*basis.alpha1)) << '\n';
  if (basis.alpha2) out << "alpha2: " << tropcomm::to_string(Scalar(*basis.alpha2)) << '\n';
  out << "basis (" << basis.basis.size() << " vectors, scaled):\n";
  for (std::size_t i = 0; i < basis.basis.size(); ++i) {
    out << "  beta" << i + 1 << " = " << basis.basis[i] << '\n';
  }
  out << "checks:\n";
  for (const CheckResult& c : checks) {
    out << "  [" << (c.pass ? "PASS" : "FAIL") << "] " << c.name;
    if (c.witness) out << "  witness " << *c.witness;
    if (!c.detail.empty()) out << "  (" << c.detail << ')';
    out << '\n';
  }
  for (const std::string& w : warnings) out << "warning: " << w << '\n';
  out << "verdict: " << (passed() ? "PASS" : "FAIL") << '\n';
  return out.str();
}

std::string VerifyReport::to_json() const {
  using nlohmann::json;
  json doc;
  doc["case"] = tropcomm::to_string(basis.diagonal);
  doc["matrix"] = detail::matrix_to_json(a);
  doc["seed"] = seed;
  doc["basis"] = json::array();
  for (const Vector& v : basis.basis) doc["basis"].push_back(detail::vector_to_json(v));
  doc["alpha1"] = basis.alpha1 ? json(*basis.alpha1) : json(nullptr);
  doc["alpha2"] = basis.alpha2 ? json(*basis.alpha2) : json(nullptr);
  doc["checks"] = json::array();
  for (const CheckResult& c : checks) {
    json entry{{"name", c.name}, {"pass", c.pass}};
    if (c.witness) entry["witness"] = detail::vector_to_json(*c.witness);
    if (!c.detail.empty()) entry["detail"] = c.detail;
    doc["checks"].push_back(std::move(entry));
  }
  doc["warnings"] = warnings;
  doc["pass"] = passed();
  return doc.dump(2);
}

std::pair<Matrix, VectorSet> parse_report_json(std::string_view text) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw ParseError(e.byte, e.what());
  }
  if (!doc.is_object() || !doc.contains("matrix") || !doc.contains("basis")) {
    throw ParseError(0, "report JSON needs 'matrix' and 'basis'");
  }
  VectorSet basis;
  for (const auto& v : doc["basis"]) basis.push_back(detail::vector_from_json(v));
  return {detail::matrix_from_json(doc["matrix"]), std::move(basis)};
}

}  // namespace tropcomm
