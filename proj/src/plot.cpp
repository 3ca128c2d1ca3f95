#include <cstdio>
#include <ostream>
#include <sstream>

#include "tropcomm/bary.hpp"
#include "tropcomm/error.hpp"

namespace tropcomm {

namespace {

constexpr double kCanvas = 600.0;
constexpr double kMargin = 60.0;
constexpr double kSide = kCanvas - 2 * kMargin;

std::string num(double v, int digits = 9) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.*g", digits, v);
  return buf;
}

std::string xml_escape(const std::string& s) {
  std::string out;
  for (char c : s) {
    switch (c) {
      case '&': out += "&amp;"; break;
      case '<': out += "&lt;"; break;
      case '>': out += "&gt;"; break;
      case '"': out += "&quot;"; break;
      default: out += c;
    }
  }
  return out;
}

// Triangle coordinates to SVG pixels (y grows downward).
struct Canvas {
  double px(Point2 p) const { return kMargin + p.x * kSide; }
  double py(Point2 p) const { return kCanvas - kMargin - p.y * kSide; }
};

Point2 resolve(const TrianglePlot& plot, const PlotEndpoint& end) {
  switch (end.kind) {
    case PlotEndpoint::Kind::kCorner:
      if (end.index < 3) return plot.triangle.vertex[end.index];
      break;
    case PlotEndpoint::Kind::kPoint:
      if (end.index < plot.points.size()) {
        return to_cartesian(plot.points[end.index], plot.triangle);
      }
      break;
    case PlotEndpoint::Kind::kOmega:
      if (plot.omega) return to_cartesian(*plot.omega, plot.triangle);
      break;
  }
  throw Error(ErrorKind::kPrecondition, "plot segment references a missing point");
}

void write_svg(const TrianglePlot& plot, std::ostream& out) {
  const Canvas c;
  const auto& v = plot.triangle.vertex;
  out << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
      << "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"" << kCanvas
      << "\" height=\"" << kCanvas << "\" viewBox=\"0 0 " << kCanvas << ' ' << kCanvas
      << "\">\n"
      << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";

  if (plot.omega && plot.points.size() == 4) {
    // Shaded region β1, β2, ω, β3.
    const Point2 region[] = {to_cartesian(plot.points[0], plot.triangle),
                             to_cartesian(plot.points[1], plot.triangle),
                             to_cartesian(*plot.omega, plot.triangle),
                             to_cartesian(plot.points[2], plot.triangle)};
    out << "<polygon class=\"region\" fill=\"#cccccc\" fill-opacity=\"0.6\" stroke=\"none\" points=\"";
    for (const Point2& p : region) out << num(c.px(p), 6) << ',' << num(c.py(p), 6) << ' ';
    out << "\"/>\n";
  }

  out << "<polygon class=\"triangle\" fill=\"none\" stroke=\"black\" stroke-width=\"1\" points=\"";
  for (const Point2& p : v) out << num(c.px(p), 6) << ',' << num(c.py(p), 6) << ' ';
  out << "\"/>\n";

  const char* anchors[] = {"end", "start", "middle"};
  const double dx[] = {-8, 8, 0};
  const double dy[] = {14, 14, -10};
  for (std::size_t i = 0; i < 3; ++i) {
    out << "<text class=\"corner\" fill=\"gray\" font-family=\"sans-serif\" font-size=\"16\" "
        << "text-anchor=\"" << anchors[i] << "\" x=\"" << num(c.px(v[i]) + dx[i], 6)
        << "\" y=\"" << num(c.py(v[i]) + dy[i], 6) << "\">"
        << xml_escape(plot.triangle.corner_label[i]) << "</text>\n";
  }

  for (const PlotSegment& s : plot.segments) {
    const Point2 a = resolve(plot, s.from);
    const Point2 b = resolve(plot, s.to);
    const bool cevian = s.style == SegmentStyle::kCevian;
    out << "<line class=\"" << (cevian ? "cevian" : "hull") << "\" x1=\"" << num(c.px(a), 6)
        << "\" y1=\"" << num(c.py(a), 6) << "\" x2=\"" << num(c.px(b), 6) << "\" y2=\""
        << num(c.py(b), 6) << "\" stroke=\"black\" stroke-width=\"" << (cevian ? 1.5 : 3) << '"'
        << (cevian ? " stroke-dasharray=\"2 4\"" : "") << "/>\n";
  }

  for (const BaryPoint& p : plot.points) {
    const Point2 q = to_cartesian(p, plot.triangle);
    out << "<circle class=\"point\" cx=\"" << num(c.px(q), 6) << "\" cy=\"" << num(c.py(q), 6)
        << "\" r=\"4\" fill=\"black\"/>\n"
        << "<text class=\"label\" font-family=\"sans-serif\" font-size=\"14\" x=\""
        << num(c.px(q) + 6, 6) << "\" y=\"" << num(c.py(q) - 6, 6) << "\">"
        << xml_escape(p.label) << "</text>\n";
  }
  if (plot.omega) {
    const Point2 q = to_cartesian(*plot.omega, plot.triangle);
    out << "<circle class=\"omega\" cx=\"" << num(c.px(q), 6) << "\" cy=\"" << num(c.py(q), 6)
        << "\" r=\"3\" fill=\"white\" stroke=\"black\"/>\n"
        << "<text class=\"label\" font-family=\"sans-serif\" font-size=\"14\" x=\""
        << num(c.px(q) - 6, 6) << "\" y=\"" << num(c.py(q) + 16, 6)
        << "\" text-anchor=\"end\">" << xml_escape(plot.omega->label) << "</text>\n";
  }
  out << "</svg>\n";
}

void write_tsv(const TrianglePlot& plot, std::ostream& out) {
  out << "label\tphi1\tphi2\tphi3\tx\ty\n";
  for (const BaryPoint& p : plot.points) {
    const Point2 q = to_cartesian(p, plot.triangle);
    out << p.label << '\t' << num(p.phi[0]) << '\t' << num(p.phi[1]) << '\t' << num(p.phi[2])
        << '\t' << num(q.x) << '\t' << num(q.y) << '\n';
  }
}

}  // namespace

TrianglePlot build_plot(const ConeBasis& basis, double tol) {
  TrianglePlot plot;
  plot.triangle = reference_triangle(basis.diagonal);
  plot.points = project_extremals(basis);
  const ConcurrencyReport r = concurrency_check(basis, tol);
  plot.omega = r.omega_bary;

  using K = PlotEndpoint::Kind;
  const auto corner = [](std::size_t i) { return PlotEndpoint{K::kCorner, i}; };
  const auto point = [](std::size_t i) { return PlotEndpoint{K::kPoint, i}; };
  const PlotEndpoint omega{K::kOmega, 0};

  plot.segments = {
      {corner(2), point(3), SegmentStyle::kCevian},  // β1 = top corner to β4
      {corner(1), point(1), SegmentStyle::kCevian},  // b21 to β2
      {corner(0), point(2), SegmentStyle::kCevian},  // b12 to β3
      {point(0), point(1), SegmentStyle::kHull},
      {point(0), point(2), SegmentStyle::kHull},
      {omega, point(1), SegmentStyle::kHull},
      {omega, point(2), SegmentStyle::kHull},
      {omega, point(3), SegmentStyle::kHull},
  };
  return plot;
}

std::string emit_plot(const TrianglePlot& plot, PlotFormat format) {
  std::ostringstream out;
  emit_plot(plot, format, out);
  return out.str();
}

void emit_plot(const TrianglePlot& plot, PlotFormat format, std::ostream& out) {
  // Validate every endpoint before writing anything.
  for (const PlotSegment& s : plot.segments) {
    resolve(plot, s.from);
    resolve(plot, s.to);
  }
  if (format == PlotFormat::kSvg) {
    write_svg(plot, out);
  } else {
    write_tsv(plot, out);
  }
  out.flush();
  if (!out) throw Error(ErrorKind::kIo, "failed writing plot output");
}

}  // namespace tropcomm
