#pragma once

// Barycentric picture of the four-extremal commuting cones.
//
// For a11 > a22 every scaled extremal has b11 = 0, so the cone is drawn in the
// triangle spanned by the remaining axes (b12, b21, b22): entries are
// exponentiated (Bottom -> 0) and normalized to sum 1. For a11 < a22 the
// mirror image drops b22 and puts b11 on the top corner.

#include <array>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "tropcomm/commute.hpp"

namespace tropcomm {

struct Point2 {
  double x = 0.0;
  double y = 0.0;
};

double distance(Point2 p, Point2 q) noexcept;

/// Nonnegative weights summing to 1.
struct BaryPoint {
  std::array<double, 3> phi{};
  std::string label;
};

/// Normalizes log-weights (Bottom -> weight 0) with the max-shift trick so
/// large entries do not overflow. Throws Error(kDegenerate) if all three are
/// Bottom.
BaryPoint bary_from_log_weights(const std::array<Scalar, 3>& log_weights,
                                std::string label);

/// Equilateral reference triangle: v1 = (0, 0) left, v2 = (1, 0) right,
/// v3 = (1/2, √3/2) top.
struct Triangle {
  std::array<Point2, 3> vertex{Point2{0.0, 0.0}, Point2{1.0, 0.0},
                               Point2{0.5, 0.86602540378443864676}};
  std::array<std::string, 3> corner_label{"b12", "b21", "b22"};
};

/// Triangle labelled for the given case: top corner b22 above the diagonal,
/// b11 below it.
Triangle reference_triangle(DiagonalCase diagonal);

Point2 to_cartesian(const BaryPoint& p, const Triangle& triangle);

/// Images of β1..β4 labelled beta1..beta4. Throws Error(kUnsupported) for
/// an EqualDiagonal basis and Error(kDimension) for anything other than
/// four 4-vectors.
std::vector<BaryPoint> project_extremals(const ConeBasis& basis);

/// Unique intersection of segments [p1, p2] and [p3, p4], endpoints
/// included. Empty for parallel or disjoint segments; throws
/// Error(kAmbiguous) when collinear segments overlap in more than a point.
std::optional<Point2> segment_intersection(Point2 p1, Point2 p2, Point2 p3, Point2 p4);

struct ConcurrencyReport {
  /// β2–b21 ∩ β3–b12.
  Point2 omega;
  BaryPoint omega_bary;
  /// β1–β4 ∩ β2–b21.
  Point2 omega_via_beta4;
  /// β1–β4 ∩ β3–b12.
  Point2 omega_third;
  /// Largest distance between the three pairwise intersections.
  double residual = 0.0;
  /// Where the ray from the top corner through ω meets the bottom edge.
  Point2 foot;
  /// |foot - β4'|.
  double foot_residual = 0.0;
  /// (α1 - α2) - (a12 - a21): the log of exp(α1)/exp(α2) against the β4'
  /// coordinate ratio.
  double ratio_residual = 0.0;
  bool holds = false;
};

/// Checks that the three cevians β1β4, b21β2 and b12β3 are concurrent
/// within tol. Throws Error(kUnsupported) for EqualDiagonal and
/// Error(kDegenerate) when an α is missing or the cevians do not meet.
ConcurrencyReport concurrency_check(const ConeBasis& basis,
                                    double tol = kDefaultTolerance);

enum class SegmentStyle { kCevian, kHull };

struct PlotEndpoint {
  enum class Kind { kCorner, kPoint, kOmega };
  Kind kind = Kind::kPoint;
  std::size_t index = 0;  // corner 0..2 or position in TrianglePlot::points
};

struct PlotSegment {
  PlotEndpoint from;
  PlotEndpoint to;
  SegmentStyle style = SegmentStyle::kHull;
};

struct TrianglePlot {
  Triangle triangle;
  std::vector<BaryPoint> points;
  std::vector<PlotSegment> segments;
  std::optional<BaryPoint> omega;
};

/// Projected extremals, the three cevians (dotted) and the boundary of the
/// projected cone (solid), as in the usual picture.
TrianglePlot build_plot(const ConeBasis& basis, double tol = kDefaultTolerance);

enum class PlotFormat { kSvg, kTsv };

/// Throws Error(kPrecondition) when a segment references a missing point.
std::string emit_plot(const TrianglePlot& plot, PlotFormat format);

/// Writes to a stream; throws Error(kIo) if the stream fails.
void emit_plot(const TrianglePlot& plot, PlotFormat format, std::ostream& out);

}  // namespace tropcomm
