#pragma once

// Text, CSV, JSON and SVG output. Every record carries the exact coefficients
// next to a double shadow used only for display.

#include <cstdint>
#include <string>
#include <vector>

#include <json.hpp>

#include "pwrot/critical.hpp"
#include "pwrot/tiles.hpp"

namespace pwrot {

enum class PointFormat { Coeff, Phi, Sqrt3 };

/// Pretty form of a point: coefficient text, golden basis or sqrt(3) basis.
std::string format_point(const CycloNum& a, PointFormat fmt);

/// "index value address" lines.
std::string orbit_text(const std::vector<CycloNum>& orbit, PointFormat fmt);
/// "index,re,im,address" with a header row.
std::string orbit_csv(const std::vector<CycloNum>& orbit);

nlohmann::json point_json(const CycloNum& a);
nlohmann::json polygon_json(const ConvexPolygon& poly);
nlohmann::json tile_json(const Tile& t);
nlohmann::json layers_json(const std::vector<CriticalLayer>& layers);

/// tile-id,ell,k,sides,regular,center_re,center_im,period
std::string inventory_csv(const ScanReport& rep);
nlohmann::json inventory_json(const ScanReport& rep);

/// A drawing in plane coordinates; y grows upward.
class Scene {
 public:
  explicit Scene(Box viewport) : viewport_(std::move(viewport)) {}

  void add_layers(const std::vector<CriticalLayer>& layers);
  void add_polygon(const ConvexPolygon& poly, std::uint64_t period);
  void add_orbit(const std::vector<CycloNum>& points);
  void add_point(const CycloNum& p, std::string label);

  std::string svg(int width_px = 800) const;

 private:
  struct Line {
    double x0, y0, x1, y1;
    int depth;
  };
  struct Poly {
    std::vector<std::pair<double, double>> pts;
    std::uint64_t period;
  };
  struct Dot {
    double x, y;
    std::string label;
    bool orbit;
  };

  Box viewport_;
  std::vector<Line> lines_;
  std::vector<Poly> polys_;
  std::vector<Dot> dots_;
};

}  // namespace pwrot
