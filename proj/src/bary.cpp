#include "tropcomm/bary.hpp"

#include <algorithm>
#include <cmath>

#include "tropcomm/error.hpp"

namespace tropcomm {

namespace {

constexpr double kGeomEps = 1e-12;

Point2 operator-(Point2 p, Point2 q) { return {p.x - q.x, p.y - q.y}; }
Point2 operator+(Point2 p, Point2 q) { return {p.x + q.x, p.y + q.y}; }
Point2 operator*(double k, Point2 p) { return {k * p.x, k * p.y}; }
double cross(Point2 p, Point2 q) { return p.x * q.y - p.y * q.x; }
double dot(Point2 p, Point2 q) { return p.x * q.x + p.y * q.y; }
double norm(Point2 p) { return std::hypot(p.x, p.y); }

// Which coordinates of a 4-vector land on corners (b12, b21, top).
std::array<std::size_t, 3> projected_axes(DiagonalCase diagonal) {
  if (diagonal == DiagonalCase::kBelow) return {1, 2, 0};
  return {1, 2, 3};
}

void require_four_extremal(const ConeBasis& basis) {
  if (basis.diagonal == DiagonalCase::kEqual) {
    throw Error(ErrorKind::kUnsupported,
                "projection undefined for equal diagonal (six extremals)");
  }
  if (basis.basis.size() != 4) {
    throw Error(ErrorKind::kDimension,
                "projection needs exactly four extremals, got " +
                    std::to_string(basis.basis.size()));
  }
  for (const Vector& v : basis.basis) {
    if (v.dim() != 4) throw Error(ErrorKind::kDimension, "extremals must be 4-vectors");
  }
}

bool on_segment(Point2 p, Point2 a, Point2 b) {
  const Point2 ab = b - a;
  const double len = norm(ab);
  if (len == 0.0) return norm(p - a) <= kGeomEps;
  if (std::abs(cross(ab, p - a)) > kGeomEps * len) return false;
  const double t = dot(p - a, ab) / (len * len);
  return t >= -kGeomEps && t <= 1.0 + kGeomEps;
}

// Cevian from corner i to a foot on the opposite edge (foot.phi[i] == 0).
struct Cevian {
  std::size_t corner;
  const BaryPoint* foot;
};

Cevian require_cevian(std::size_t corner, const BaryPoint& foot) {
  const auto& f = foot.phi;
  const std::size_t a = (corner + 1) % 3, b = (corner + 2) % 3;
  if (f[corner] != 0.0 || f[a] == 0.0 || f[b] == 0.0) {
    throw Error(ErrorKind::kDegenerate,
                "'" + foot.label + "' is not interior to the edge opposite corner " +
                    std::to_string(corner + 1));
  }
  return {corner, &foot};
}

// Two cevians from corners i and j meet where phi_j : phi_l = Fi_j : Fi_l and
// phi_i : phi_l = Fj_i : Fj_l (l the third corner). All terms are positive
// products, so the result stays accurate when a foot sits next to a corner.
BaryPoint meet(const Cevian& ci, const Cevian& cj) {
  const std::size_t i = ci.corner, j = cj.corner, l = 3 - i - j;
  const auto& fi = ci.foot->phi;
  const auto& fj = cj.foot->phi;
  BaryPoint p;
  p.phi[i] = fj[i] * fi[l];
  p.phi[j] = fi[j] * fj[l];
  p.phi[l] = fi[l] * fj[l];
  const double sum = p.phi[0] + p.phi[1] + p.phi[2];
  for (double& w : p.phi) w /= sum;
  return p;
}

}  // namespace

double distance(Point2 p, Point2 q) noexcept { return std::hypot(p.x - q.x, p.y - q.y); }

BaryPoint bary_from_log_weights(const std::array<Scalar, 3>& log_weights,
                                std::string label) {
  std::optional<double> top;
  for (Scalar s : log_weights) {
    if (s.is_finite()) top = top ? std::max(*top, s.value()) : s.value();
  }
  if (!top) {
    throw Error(ErrorKind::kDegenerate, "point '" + label + "' has no finite coordinate");
  }
  BaryPoint p{{}, std::move(label)};
  double sum = 0.0;
  for (std::size_t i = 0; i < 3; ++i) {
    p.phi[i] = log_weights[i].is_finite() ? std::exp(log_weights[i].value() - *top) : 0.0;
    sum += p.phi[i];
  }
  for (double& w : p.phi) w /= sum;
  return p;
}

Triangle reference_triangle(DiagonalCase diagonal) {
  Triangle t;
  if (diagonal == DiagonalCase::kBelow) t.corner_label[2] = "b11";
  return t;
}

Point2 to_cartesian(const BaryPoint& p, const Triangle& triangle) {
  Point2 out;
  for (std::size_t i = 0; i < 3; ++i) out = out + p.phi[i] * triangle.vertex[i];
  return out;
}

std::vector<BaryPoint> project_extremals(const ConeBasis& basis) {
  require_four_extremal(basis);
  const auto axes = projected_axes(basis.diagonal);
  std::vector<BaryPoint> out;
  for (std::size_t k = 0; k < basis.basis.size(); ++k) {
    const Vector& v = basis.basis[k];
    out.push_back(bary_from_log_weights({v[axes[0]], v[axes[1]], v[axes[2]]},
                                        "beta" + std::to_string(k + 1)));
  }
  return out;
}

std::optional<Point2> segment_intersection(Point2 p1, Point2 p2, Point2 p3, Point2 p4) {
  const Point2 r = p2 - p1;
  const Point2 s = p4 - p3;
  const double lr = norm(r);
  const double ls = norm(s);
  if (lr == 0.0 || ls == 0.0) {
    // A degenerate segment is a point.
    if (lr == 0.0 && on_segment(p1, p3, p4)) return p1;
    if (ls == 0.0 && on_segment(p3, p1, p2)) return p3;
    return std::nullopt;
  }

  const Point2 qp = p3 - p1;
  const double denom = cross(r, s);
  if (std::abs(denom) <= kGeomEps * lr * ls) {
    if (std::abs(cross(qp, r)) > kGeomEps * lr * std::max(1.0, norm(qp))) {
      return std::nullopt;  // parallel, distinct lines
    }
    const double t0 = dot(qp, r) / (lr * lr);
    const double t1 = t0 + dot(s, r) / (lr * lr);
    const double lo = std::max(0.0, std::min(t0, t1));
    const double hi = std::min(1.0, std::max(t0, t1));
    if (hi - lo > kGeomEps) {
      throw Error(ErrorKind::kAmbiguous, "collinear segments overlap");
    }
    if (hi - lo >= -kGeomEps) return p1 + lo * r;
    return std::nullopt;
  }

  const double t = cross(qp, s) / denom;
  const double u = cross(qp, r) / denom;
  if (t < -kGeomEps || t > 1.0 + kGeomEps || u < -kGeomEps || u > 1.0 + kGeomEps) {
    return std::nullopt;
  }
  return p1 + t * r;
}

ConcurrencyReport concurrency_check(const ConeBasis& basis, double tol) {
  require_four_extremal(basis);
  if (!basis.alpha1 || !basis.alpha2) {
    throw Error(ErrorKind::kDegenerate, "projection needs finite alpha1 and alpha2");
  }
  const Triangle tri = reference_triangle(basis.diagonal);
  const std::vector<BaryPoint> pts = project_extremals(basis);
  if (pts[0].phi != std::array<double, 3>{0.0, 0.0, 1.0}) {
    throw Error(ErrorKind::kDegenerate, "beta1 does not project to the top corner");
  }
  const Cevian from_top = require_cevian(2, pts[3]);  // β1 β4
  const Cevian from_b21 = require_cevian(1, pts[1]);  // b21 β2
  const Cevian from_b12 = require_cevian(0, pts[2]);  // b12 β3

  ConcurrencyReport r;
  r.omega_bary = meet(from_b21, from_b12);
  r.omega_bary.label = "omega";
  r.omega = to_cartesian(r.omega_bary, tri);
  r.omega_via_beta4 = to_cartesian(meet(from_top, from_b21), tri);
  r.omega_third = to_cartesian(meet(from_top, from_b12), tri);
  r.residual = std::max({distance(r.omega, r.omega_via_beta4), distance(r.omega, r.omega_third),
                         distance(r.omega_via_beta4, r.omega_third)});

  // The ray from the top corner through ω keeps ω's b12 : b21 ratio.
  const auto& w = r.omega_bary.phi;
  BaryPoint foot;
  foot.phi = {w[0] / (w[0] + w[1]), w[1] / (w[0] + w[1]), 0.0};
  r.foot = to_cartesian(foot, tri);
  r.foot_residual = distance(r.foot, to_cartesian(pts[3], tri));

  // β4 carries a12 and a21 in positions 2 and 3 in both cases; scaling
  // preserves their difference.
  const Vector& beta4_vec = basis.basis[3];
  if (beta4_vec[1].is_bottom() || beta4_vec[2].is_bottom()) {
    throw Error(ErrorKind::kDegenerate, "beta4 must be finite in b12 and b21");
  }
  const double a12_minus_a21 = beta4_vec[1].value() - beta4_vec[2].value();
  r.ratio_residual = (*basis.alpha1 - *basis.alpha2) - a12_minus_a21;
  r.holds = r.residual <= tol && r.foot_residual <= tol;
  return r;
}

}  // namespace tropcomm
