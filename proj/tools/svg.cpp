#include "svg.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <optional>
#include <sstream>
#include <vector>

#include "gcn/usage.hpp"

namespace gcn {

namespace {

constexpr double kPlot = 600.0;
constexpr double kMargin = 30.0;
constexpr double kLegend = 170.0;

std::string num(double v) {
  if (std::fabs(v) < 5e-7) v = 0.0;
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.6g", v);
  return buf;
}

struct Frame {
  double x0, y0, scale;
  double sx(double x) const { return kMargin + (x - x0) * scale; }
  double sy(double y) const { return kMargin + kPlot - (y - y0) * scale; }
};

struct Segment {
  double x1, y1, x2, y2;
};

// Part of a*x + b*y + c = 0 inside [lo_x, hi_x] x [lo_y, hi_y].
std::optional<Segment> clip(const Line& l, double lo_x, double hi_x, double lo_y, double hi_y) {
  const double a = l.a().get_d(), b = l.b().get_d(), c = l.c().get_d();
  std::vector<std::pair<double, double>> pts;
  const double eps = 1e-12 * std::max({1.0, hi_x - lo_x, hi_y - lo_y});
  if (b != 0) {
    for (double x : {lo_x, hi_x}) {
      const double y = -(a * x + c) / b;
      if (y >= lo_y - eps && y <= hi_y + eps) pts.emplace_back(x, y);
    }
  }
  if (a != 0) {
    for (double y : {lo_y, hi_y}) {
      const double x = -(b * y + c) / a;
      if (x >= lo_x - eps && x <= hi_x + eps) pts.emplace_back(x, y);
    }
  }
  if (pts.size() < 2) return std::nullopt;
  std::sort(pts.begin(), pts.end());
  return Segment{pts.front().first, pts.front().second, pts.back().first, pts.back().second};
}

const char* node_color(NodeClass c) {
  switch (c) {
    case NodeClass::ZeroM: return "#2b8a3e";
    case NodeClass::OneM: return "#1c7ed6";
    case NodeClass::TwoM: return "#e03131";
  }
  return "#000000";
}

}  // namespace

std::string render_svg(const GcContext& ctx) {
  const auto& X = ctx.nodes();
  double min_x = X[0].x.get_d(), max_x = min_x, min_y = X[0].y.get_d(), max_y = min_y;
  for (const auto& p : X.nodes()) {
    min_x = std::min(min_x, p.x.get_d());
    max_x = std::max(max_x, p.x.get_d());
    min_y = std::min(min_y, p.y.get_d());
    max_y = std::max(max_y, p.y.get_d());
  }
  double span = std::max({max_x - min_x, max_y - min_y, 1e-9});
  const double pad = 0.08 * span;
  span += 2 * pad;
  const double cx = (min_x + max_x) / 2, cy = (min_y + max_y) / 2;
  const Frame f{cx - span / 2, cy - span / 2, kPlot / span};
  const double lo_x = cx - span / 2, hi_x = cx + span / 2, lo_y = cy - span / 2, hi_y = cy + span / 2;

  std::vector<std::pair<Line, const char*>> styled;  // dash pattern, empty for solid
  for (const auto& l : ctx.maximal_lines()) styled.emplace_back(l, "");
  const bool classes = ctx.n_correct() && ctx.is_gc();
  if (classes) {
    for (const auto& rep : all_line_reports(ctx)) {
      if (rep.classification.kind == LineKind::Proper) styled.emplace_back(rep.line, "8,5");
      if (rep.classification.kind == LineKind::ProperMinus) styled.emplace_back(rep.line, "2,4");
    }
  }

  std::ostringstream os;
  const double width = kPlot + 2 * kMargin + kLegend, height = kPlot + 2 * kMargin;
  os << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
     << "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"" << num(width) << "\" height=\""
     << num(height) << "\" viewBox=\"0 0 " << num(width) << " " << num(height) << "\">\n"
     << "<rect x=\"0\" y=\"0\" width=\"" << num(width) << "\" height=\"" << num(height) << "\" fill=\"#ffffff\"/>\n"
     << "<g id=\"lines\" fill=\"none\" stroke=\"#495057\" stroke-width=\"1.2\">\n";
  for (const auto& [l, dash] : styled) {
    const auto seg = clip(l, lo_x, hi_x, lo_y, hi_y);
    if (!seg) continue;
    os << "<line x1=\"" << num(f.sx(seg->x1)) << "\" y1=\"" << num(f.sy(seg->y1)) << "\" x2=\"" << num(f.sx(seg->x2))
       << "\" y2=\"" << num(f.sy(seg->y2)) << "\"";
    if (*dash) os << " stroke-dasharray=\"" << dash << "\"";
    os << "/>\n";
  }
  os << "</g>\n<g id=\"nodes\" stroke=\"#212529\" stroke-width=\"0.8\">\n";
  for (std::size_t i = 0; i < X.size(); ++i) {
    os << "<circle cx=\"" << num(f.sx(X[i].x.get_d())) << "\" cy=\"" << num(f.sy(X[i].y.get_d()))
       << "\" r=\"5\" fill=\"" << node_color(ctx.node_class(i)) << "\"/>\n";
  }
  os << "</g>\n";

  const double lx = kPlot + 2 * kMargin;
  os << "<g id=\"legend\" font-family=\"sans-serif\" font-size=\"12\" fill=\"#212529\">\n";
  double y = kMargin + 10;
  os << "<text x=\"" << num(lx) << "\" y=\"" << num(y) << "\">n=" << X.degree() << " defect=" << ctx.defect()
     << "</text>\n";
  y += 24;
  for (auto c : {NodeClass::ZeroM, NodeClass::OneM, NodeClass::TwoM}) {
    os << "<circle cx=\"" << num(lx + 6) << "\" cy=\"" << num(y - 4) << "\" r=\"5\" fill=\"" << node_color(c)
       << "\" stroke=\"#212529\" stroke-width=\"0.8\"/>\n"
       << "<text x=\"" << num(lx + 18) << "\" y=\"" << num(y) << "\">" << static_cast<unsigned>(c) << "m-node</text>\n";
    y += 20;
  }
  const std::pair<const char*, const char*> keys[] = {{"", "maximal line"}, {"8,5", "proper line"}, {"2,4", "other used line"}};
  for (const auto& [dash, label] : keys) {
    if (*dash && !classes) continue;
    os << "<line x1=\"" << num(lx) << "\" y1=\"" << num(y - 4) << "\" x2=\"" << num(lx + 24) << "\" y2=\"" << num(y - 4)
       << "\" stroke=\"#495057\" stroke-width=\"1.2\"";
    if (*dash) os << " stroke-dasharray=\"" << dash << "\"";
    os << "/>\n<text x=\"" << num(lx + 30) << "\" y=\"" << num(y) << "\">" << label << "</text>\n";
    y += 20;
  }
  os << "</g>\n</svg>\n";
  return os.str();
}

}  // namespace gcn
