#include "pwrot/render.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <sstream>

namespace pwrot {

namespace {

constexpr const char* kDepthPalette[] = {"#202020", "#1f77b4", "#ff7f0e", "#2ca02c", "#d62728", "#9467bd",
                                         "#8c564b", "#e377c2", "#7f7f7f", "#bcbd22", "#17becf"};
constexpr const char* kPeriodPalette[] = {"#fde0dd", "#c6dbef", "#c7e9c0", "#fdd0a2", "#dadaeb", "#fcbba1",
                                          "#d9f0a3", "#bfd3e6"};

std::string num(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.6g", v);
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

char address_of(const CycloNum& z) { return address_char(address(z)); }

}  // namespace

std::string format_point(const CycloNum& a, PointFormat fmt) {
  switch (fmt) {
    case PointFormat::Phi: return format_golden(a);
    case PointFormat::Sqrt3: return format_sqrt3(a);
    case PointFormat::Coeff: break;
  }
  return to_string(a);
}

std::string orbit_text(const std::vector<CycloNum>& orbit, PointFormat fmt) {
  std::string out;
  for (std::size_t i = 0; i < orbit.size(); ++i)
    out += std::to_string(i) + "  " + format_point(orbit[i], fmt) + "  " + address_of(orbit[i]) + "\n";
  return out;
}

std::string orbit_csv(const std::vector<CycloNum>& orbit) {
  std::ostringstream os;
  os.precision(17);
  os << "index,re,im,address\n";
  for (std::size_t i = 0; i < orbit.size(); ++i) {
    const auto c = to_complex(orbit[i]);
    os << i << ',' << c.real() << ',' << c.imag() << ',' << address_of(orbit[i]) << '\n';
  }
  return os.str();
}

nlohmann::json point_json(const CycloNum& a) {
  nlohmann::json coeffs = nlohmann::json::array();
  for (const Rational& c : a.coeffs()) coeffs.push_back(rational_string(c));
  const auto c = to_complex(a);
  return {{"coeffs", coeffs}, {"x", c.real()}, {"y", c.imag()}};
}

nlohmann::json polygon_json(const ConvexPolygon& poly) {
  nlohmann::json verts = nlohmann::json::array();
  for (const CycloNum& v : poly.vertices) verts.push_back(point_json(v));
  nlohmann::json out = {{"vertices", verts}};
  if (!poly.vertices.empty()) {
    const FieldContext& f = *poly.vertices.front().field();
    out["field"] = {{"alpha", f.alpha_string()}, {"conductor", f.conductor()}, {"degree", f.degree()}};
  }
  return out;
}

nlohmann::json tile_json(const Tile& t) {
  return {{"ell", t.ell},
          {"k", t.k},
          {"period", static_cast<std::uint64_t>(t.k) * t.ell},
          {"word", t.word.word},
          {"sides", t.sides()},
          {"regular", polygon_is_regular(t.polygon)},
          {"rotational", t.rotational},
          {"center", point_json(t.center)},
          {"seed", point_json(t.seed)},
          {"polygon", polygon_json(t.polygon)}};
}

nlohmann::json layers_json(const std::vector<CriticalLayer>& layers) {
  nlohmann::json out = nlohmann::json::array();
  for (const CriticalLayer& l : layers) {
    nlohmann::json segs = nlohmann::json::array();
    for (const ExactSegment& s : l.segments) segs.push_back({{"a", point_json(s.a)}, {"b", point_json(s.b)}});
    out.push_back({{"depth", l.depth},
                   {"kind", l.kind == LayerKind::Pullback ? "pullback" : "forward"},
                   {"segments", segs}});
  }
  return out;
}

std::string inventory_csv(const ScanReport& rep) {
  std::ostringstream os;
  os.precision(17);
  os << "tile_id,ell,k,sides,regular,center_re,center_im,period,multiplicity\n";
  for (std::size_t i = 0; i < rep.inventory.size(); ++i) {
    const Tile& t = rep.inventory[i].tile;
    const auto c = to_complex(t.center);
    os << i << ',' << t.ell << ',' << t.k << ',' << t.sides() << ',' << (polygon_is_regular(t.polygon) ? "yes" : "no")
       << ',' << c.real() << ',' << c.imag() << ',' << static_cast<std::uint64_t>(t.k) * t.ell << ','
       << rep.inventory[i].multiplicity << '\n';
  }
  return os.str();
}

nlohmann::json inventory_json(const ScanReport& rep) {
  nlohmann::json tiles = nlohmann::json::array();
  for (std::size_t i = 0; i < rep.inventory.size(); ++i) {
    nlohmann::json t = tile_json(rep.inventory[i].tile);
    t["id"] = i;
    t["multiplicity"] = rep.inventory[i].multiplicity;
    tiles.push_back(std::move(t));
  }
  nlohmann::json hist = nlohmann::json::object();
  for (const auto& [period, count] : rep.histogram) hist[std::to_string(period)] = count;
  return {{"box", {rational_string(rep.box.x0), rational_string(rep.box.y0), rational_string(rep.box.x1),
                   rational_string(rep.box.y1)}},
          {"step", rational_string(rep.step)},
          {"budget", rep.budget},
          {"samples", rep.samples.size()},
          {"on_critical", rep.on_critical},
          {"budget_exceeded", rep.exhausted},
          {"period_histogram", hist},
          {"tiles", tiles}};
}

void Scene::add_layers(const std::vector<CriticalLayer>& layers) {
  for (const CriticalLayer& l : layers)
    for (const ExactSegment& s : l.segments) {
      const auto a = to_complex(s.a);
      const auto b = to_complex(s.b);
      lines_.push_back(Line{a.real(), a.imag(), b.real(), b.imag(), l.depth});
    }
}

void Scene::add_polygon(const ConvexPolygon& poly, std::uint64_t period) {
  Poly p{{}, period};
  for (const CycloNum& v : poly.vertices) {
    const auto c = to_complex(v);
    p.pts.emplace_back(c.real(), c.imag());
  }
  polys_.push_back(std::move(p));
}

void Scene::add_orbit(const std::vector<CycloNum>& points) {
  for (const CycloNum& v : points) {
    const auto c = to_complex(v);
    dots_.push_back(Dot{c.real(), c.imag(), "", true});
  }
}

void Scene::add_point(const CycloNum& p, std::string label) {
  const auto c = to_complex(p);
  dots_.push_back(Dot{c.real(), c.imag(), std::move(label), false});
}

std::string Scene::svg(int width_px) const {
  const double x0 = viewport_.x0.get_d(), x1 = viewport_.x1.get_d();
  const double y0 = viewport_.y0.get_d(), y1 = viewport_.y1.get_d();
  const double scale = width_px / (x1 - x0);
  const int height_px = static_cast<int>(std::lround((y1 - y0) * scale));
  auto px = [&](double x) { return num((x - x0) * scale); };
  auto py = [&](double y) { return num((y1 - y) * scale); };
  const double stroke = 1.0;

  std::ostringstream os;
  os << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
  os << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << width_px << "\" height=\"" << height_px
     << "\" viewBox=\"0 0 " << width_px << ' ' << height_px << "\">\n";
  os << "<rect x=\"0\" y=\"0\" width=\"" << width_px << "\" height=\"" << height_px << "\" fill=\"white\"/>\n";
  os << "<g id=\"tiles\" stroke=\"#404040\" stroke-width=\"0.5\">\n";
  for (const Poly& p : polys_) {
    os << "<polygon fill=\"" << kPeriodPalette[p.period % std::size(kPeriodPalette)] << "\" points=\"";
    for (std::size_t i = 0; i < p.pts.size(); ++i) os << (i ? " " : "") << px(p.pts[i].first) << ',' << py(p.pts[i].second);
    os << "\"><title>period " << p.period << "</title></polygon>\n";
  }
  os << "</g>\n<g id=\"critical\" stroke-width=\"" << num(stroke) << "\" stroke-linecap=\"round\">\n";
  for (const Line& l : lines_)
    os << "<line x1=\"" << px(l.x0) << "\" y1=\"" << py(l.y0) << "\" x2=\"" << px(l.x1) << "\" y2=\"" << py(l.y1)
       << "\" stroke=\"" << kDepthPalette[static_cast<std::size_t>(l.depth) % std::size(kDepthPalette)] << "\"/>\n";
  os << "</g>\n<g id=\"points\">\n";
  for (const Dot& d : dots_) {
    os << "<circle cx=\"" << px(d.x) << "\" cy=\"" << py(d.y) << "\" r=\"" << (d.orbit ? 1.5 : 3.0) << "\" fill=\""
       << (d.orbit ? "#000080" : "#c00000") << "\"/>\n";
    if (!d.label.empty())
      os << "<text x=\"" << px(d.x) << "\" y=\"" << py(d.y) << "\" dx=\"4\" dy=\"-4\" font-size=\"12\">"
         << xml_escape(d.label) << "</text>\n";
  }
  os << "</g>\n</svg>\n";
  return os.str();
}

}  // namespace pwrot
