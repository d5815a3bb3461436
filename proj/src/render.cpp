#include "softdisc/render.hpp"

#include <algorithm>
#include <cstdio>
#include <limits>
#include <sstream>

#include "softdisc/bond_graph.hpp"
#include "softdisc/faces.hpp"

namespace softdisc {

namespace {

constexpr double kScale = 40.0;
constexpr double kPad = 30.0;

std::string fmt(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.2f", v);
  return buf;
}

}  // namespace

std::string render_svg(const Configuration& config, const PotentialParams& params) {
  BondGraph graph = build_bond_graph(config, params);
  FaceDecomposition d = classify_faces(graph);

  double min_x = 0.0, min_y = 0.0, max_x = 0.0, max_y = 0.0;
  if (!config.empty()) {
    min_x = max_x = config.point(0).x;
    min_y = max_y = config.point(0).y;
    for (const auto& p : config.points()) {
      min_x = std::min(min_x, p.x);
      max_x = std::max(max_x, p.x);
      min_y = std::min(min_y, p.y);
      max_y = std::max(max_y, p.y);
    }
  }
  double width = (max_x - min_x) * kScale + 2.0 * kPad;
  double height = (max_y - min_y) * kScale + 2.0 * kPad;
  auto px = [&](const EuclidPoint& p) { return kPad + (p.x - min_x) * kScale; };
  auto py = [&](const EuclidPoint& p) { return kPad + (max_y - p.y) * kScale; };

  std::ostringstream svg;
  svg << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << fmt(width) << "\" height=\""
      << fmt(height) << "\" viewBox=\"0 0 " << fmt(width) << " " << fmt(height) << "\">\n";
  svg << "<rect width=\"100%\" height=\"100%\" fill=\"#ffffff\"/>\n";

  for (const auto& face : d.faces) {
    if (face.perimeter == 3) continue;
    svg << "<polygon points=\"";
    const auto& verts = d.walks[face.walk].vertices;
    for (std::size_t i = 0; i < verts.size(); ++i) {
      const EuclidPoint& p = config.point(verts[i]);
      if (i) svg << " ";
      svg << fmt(px(p)) << "," << fmt(py(p));
    }
    svg << "\" fill=\"#fde68a\" fill-opacity=\"0.55\" stroke=\"none\"/>\n";
  }

  for (int e = 0; e < graph.edge_count(); ++e) {
    const auto& [u, v] = graph.edges[e];
    const EuclidPoint& p = config.point(u);
    const EuclidPoint& q = config.point(v);
    const char* stroke = "#9aa0a6";
    const char* extra = "";
    double w = 2.0;
    switch (d.edge_class[e]) {
      case EdgeClass::boundary:
        stroke = "#1a1a1a";
        w = 4.0;
        break;
      case EdgeClass::interior:
        break;
      case EdgeClass::wire_int:
      case EdgeClass::wire_ext:
        stroke = "#cc6677";
        extra = " stroke-dasharray=\"6 4\"";
        break;
    }
    svg << "<line x1=\"" << fmt(px(p)) << "\" y1=\"" << fmt(py(p)) << "\" x2=\"" << fmt(px(q))
        << "\" y2=\"" << fmt(py(q)) << "\" stroke=\"" << stroke << "\" stroke-width=\""
        << fmt(w) << "\"" << extra << "/>\n";
  }

  std::vector<char> boundary(config.size(), 0);
  for (int v : d.boundary_vertices) boundary[v] = 1;
  for (std::size_t i = 0; i < config.size(); ++i) {
    const EuclidPoint& p = config.point(i);
    svg << "<circle cx=\"" << fmt(px(p)) << "\" cy=\"" << fmt(py(p)) << "\" r=\"5\" fill=\""
        << (boundary[i] ? "#c0392b" : "#1f6feb") << "\"/>\n";
  }
  svg << "</svg>\n";
  return svg.str();
}

}  // namespace softdisc
