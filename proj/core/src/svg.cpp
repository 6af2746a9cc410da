#include "ctv/svg.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <numeric>
#include <stdexcept>

namespace ctv {
namespace {

constexpr double kCanvas = 800.0;
constexpr double kPad = 40.0;

const char* kPalette[] = {"#d33", "#36c", "#2a2", "#a3c", "#e80", "#0aa", "#964", "#555"};
constexpr size_t kPaletteSize = sizeof(kPalette) / sizeof(kPalette[0]);

std::string fmt(double v) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.6f", v);
  return buf;
}

struct Mapper {
  double minx = 0, miny = 0, scale = 1;

  double x(double v) const { return kPad + (v - minx) * scale; }
  double y(double v) const { return kCanvas - kPad - (v - miny) * scale; }
};

}  // namespace

std::string emit_svg(const ColoredFamily& family, const Certificate* cert) {
  if (family.d != 2) throw std::invalid_argument("emit_svg: only d = 2 is supported");
  family.validate();

  double minx = 0, maxx = 0, miny = 0, maxy = 0;
  bool first = true;
  for (const auto& m : family.members) {
    for (const auto& v : m.vertices) {
      double vx = v[0].to_double(), vy = v[1].to_double();
      if (first) {
        minx = maxx = vx;
        miny = maxy = vy;
        first = false;
      } else {
        minx = std::min(minx, vx);
        maxx = std::max(maxx, vx);
        miny = std::min(miny, vy);
        maxy = std::max(maxy, vy);
      }
    }
  }
  double w = std::max(maxx - minx, 1e-9), h = std::max(maxy - miny, 1e-9);
  Mapper map;
  map.minx = minx;
  map.miny = miny;
  map.scale = (kCanvas - 2 * kPad) / std::max(w, h);

  std::string out;
  out += "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"800\" height=\"800\" "
         "viewBox=\"0 0 800 800\">\n";
  out += "<rect width=\"800\" height=\"800\" fill=\"#fff\"/>\n";

  // A full-dimensional witness line is clipped well outside the canvas.
  auto draw_line = [&](const OrientedHyperplane& hp, const char* style) {
    double nx = hp.normal[0].to_double(), ny = hp.normal[1].to_double();
    double t = hp.offset.to_double();
    double n2 = nx * nx + ny * ny;
    if (n2 <= 0) return;
    double bx = t * nx / n2, by = t * ny / n2;  // base point on the line
    double dx = -ny / std::sqrt(n2), dy = nx / std::sqrt(n2);
    double span = 4.0 * std::max(w, h) + 4.0;
    out += "<line x1=\"" + fmt(map.x(bx - span * dx)) + "\" y1=\"" + fmt(map.y(by - span * dy)) +
           "\" x2=\"" + fmt(map.x(bx + span * dx)) + "\" y2=\"" + fmt(map.y(by + span * dy)) +
           "\" " + style + "/>\n";
  };

  const RadonViolation* rv = cert ? std::get_if<RadonViolation>(cert) : nullptr;
  auto emphasized = [&](size_t i) {
    if (!rv) return false;
    return std::binary_search(rv->pair.part1.begin(), rv->pair.part1.end(), i) ||
           std::binary_search(rv->pair.part2.begin(), rv->pair.part2.end(), i);
  };

  for (size_t i = 0; i < family.size(); ++i) {
    const auto& verts = family.members[i].vertices;
    const char* color = kPalette[(family.coloring.color[i] - 1) % kPaletteSize];
    std::string stroke = std::string("stroke=\"") + color + "\" stroke-width=\"" +
                         (emphasized(i) ? "4" : "2") + "\"";
    if (verts.size() == 1) {
      out += "<circle cx=\"" + fmt(map.x(verts[0][0].to_double())) + "\" cy=\"" +
             fmt(map.y(verts[0][1].to_double())) + "\" r=\"4\" fill=\"" + color + "\"/>\n";
      continue;
    }
    if (verts.size() == 2) {
      out += "<line x1=\"" + fmt(map.x(verts[0][0].to_double())) + "\" y1=\"" +
             fmt(map.y(verts[0][1].to_double())) + "\" x2=\"" +
             fmt(map.x(verts[1][0].to_double())) + "\" y2=\"" +
             fmt(map.y(verts[1][1].to_double())) + "\" " + stroke + "/>\n";
      continue;
    }
    // Outline: vertices ordered by angle around the centroid (vertices of a
    // V-polytope are in convex position for rendering purposes).
    double cx = 0, cy = 0;
    for (const auto& v : verts) {
      cx += v[0].to_double();
      cy += v[1].to_double();
    }
    cx /= static_cast<double>(verts.size());
    cy /= static_cast<double>(verts.size());
    std::vector<size_t> order(verts.size());
    std::iota(order.begin(), order.end(), size_t{0});
    std::stable_sort(order.begin(), order.end(), [&](size_t a, size_t b) {
      return std::atan2(verts[a][1].to_double() - cy, verts[a][0].to_double() - cx) <
             std::atan2(verts[b][1].to_double() - cy, verts[b][0].to_double() - cx);
    });
    out += "<polygon points=\"";
    for (size_t j = 0; j < order.size(); ++j) {
      if (j) out += " ";
      out += fmt(map.x(verts[order[j]][0].to_double())) + "," +
             fmt(map.y(verts[order[j]][1].to_double()));
    }
    out += "\" fill=\"" + std::string(color) + "\" fill-opacity=\"0.25\" " + stroke + "/>\n";
  }

  if (cert) {
    if (const auto* t = std::get_if<TransversalWitness>(cert)) {
      draw_line(t->h, "stroke=\"#000\" stroke-width=\"2\"");
    } else if (rv) {
      draw_line(rv->separator, "stroke=\"#000\" stroke-width=\"2\" stroke-dasharray=\"8 4\"");
    }
  }

  out += "</svg>\n";
  return out;
}

}  // namespace ctv
