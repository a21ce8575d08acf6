#include "dissect/render.hpp"

#include <cmath>
#include <cstdio>
#include <numbers>
#include <sstream>

namespace dissect::cli {

namespace {

constexpr double kCanvas = 480.0;
constexpr double kCenter = kCanvas / 2;
constexpr double kRadius = 190.0;
constexpr double kLabelRadius = 214.0;

const char* const kPalette[] = {"#1f77b4", "#2ca02c", "#9467bd", "#8c564b", "#e377c2", "#17becf", "#bcbd22"};

std::string fmt(double x) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.3f", std::abs(x) < 5e-4 ? 0.0 : x);
  return buf;
}

struct Point {
  double x, y;
};

// Vertex 0 at the bottom, positions increasing anticlockwise on screen.
Point vertex_point(int position, int size, double radius) {
  const double angle = -std::numbers::pi / 2 + 2 * std::numbers::pi * position / size;
  return {kCenter + radius * std::cos(angle), kCenter - radius * std::sin(angle)};
}

void line(std::ostringstream& out, const Chord& c, const char* color, const char* extra) {
  const Point p = vertex_point(c.low().position, c.polygon_size(), kRadius);
  const Point q = vertex_point(c.high().position, c.polygon_size(), kRadius);
  out << "  <line x1=\"" << fmt(p.x) << "\" y1=\"" << fmt(p.y) << "\" x2=\"" << fmt(q.x) << "\" y2=\"" << fmt(q.y)
      << "\" stroke=\"" << color << "\" stroke-width=\"2\"" << extra << "/>\n";
}

}  // namespace

std::string render_svg(const Face& face) {
  const ComplexParams& params = face.params();
  const int size = params.polygon_size();
  std::ostringstream out;
  out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << kCanvas << "\" height=\"" << kCanvas
      << "\" viewBox=\"0 0 " << kCanvas << ' ' << kCanvas << "\">\n";
  out << "  <title>" << params.describe() << ", " << face.size() << " diagonals</title>\n";

  out << "  <polygon fill=\"none\" stroke=\"#000000\" stroke-width=\"1.5\" points=\"";
  for (int p = 0; p < size; ++p) {
    const Point pt = vertex_point(p, size, kRadius);
    out << (p ? " " : "") << fmt(pt.x) << ',' << fmt(pt.y);
  }
  out << "\"/>\n";

  std::size_t pair_index = 0;
  for (const Diagonal& d : face.diagonals()) {
    switch (d.kind()) {
      case DiagonalKind::AChord:
        line(out, d.chord(), "#000000", "");
        break;
      case DiagonalKind::BDiameter:
        line(out, d.chord(), "#d62728", " stroke-dasharray=\"6 3\"");
        break;
      case DiagonalKind::BPair: {
        const char* color = kPalette[pair_index++ % std::size(kPalette)];
        for (const Chord& c : d.constituents()) line(out, c, color, "");
        break;
      }
    }
  }

  for (int p = 0; p < size; ++p) {
    const Point pt = vertex_point(p, size, kRadius);
    const Point lp = vertex_point(p, size, kLabelRadius);
    const int value = signed_label(Label{p}, params);
    out << "  <circle cx=\"" << fmt(pt.x) << "\" cy=\"" << fmt(pt.y) << "\" r=\"2.5\" fill=\"#000000\"/>\n";
    out << "  <text x=\"" << fmt(lp.x) << "\" y=\"" << fmt(lp.y)
        << "\" font-family=\"serif\" font-size=\"13\" text-anchor=\"middle\" dominant-baseline=\"central\"";
    if (value < 0) out << " text-decoration=\"overline\">" << -value;
    else out << ">" << value;
    out << "</text>\n";
  }
  out << "</svg>\n";
  return out.str();
}

}  // namespace dissect::cli
