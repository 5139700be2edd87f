// pwrot: command-line front end for the piecewise rotation library.

#include <cmath>
#include <cstdint>
#include <fstream>
#include <iostream>
#include <limits>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "pwrot/casestudy.hpp"
#include "pwrot/critical.hpp"
#include "pwrot/errors.hpp"
#include "pwrot/pointexpr.hpp"
#include "pwrot/render.hpp"

namespace {

using namespace pwrot;

enum Exit { kOk = 0, kBudget = 2, kFalsified = 3, kBadInput = 4 };

struct Options {
  std::string alpha;
  std::string point;
  std::string box;
  std::string grid = "1/4";
  std::string format;
  std::string out;
  std::string kind = "pullback";
  std::uint64_t n = 10;
  int depth = 6;
  std::uint64_t budget = 0;
  std::uint64_t rng_seed = 1;
  std::size_t cap = 1000000;
  int samples = 5;
  int max_n = 6;
  std::uint64_t returns = 220;
  unsigned threads = 0;
  int width = 800;
  bool table = false;
  bool show_returns = false;
};

// Text being parsed, for the caret under a ParseError.
std::string g_input;

class BadInput : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

FieldPtr field_of(const Options& o) {
  if (o.alpha.empty()) throw BadInput("--alpha p/q is required");
  g_input = o.alpha;
  const auto [p, q] = parse_alpha(o.alpha);
  return make_field(p, q);
}

CycloNum point_of(const FieldPtr& f, const Options& o, const char* flag) {
  if (o.point.empty()) throw BadInput(std::string(flag) + " is required");
  g_input = o.point;
  return parse_point(f, o.point);
}

std::uint64_t budget_or(const Options& o, std::uint64_t fallback) { return o.budget ? o.budget : fallback; }

std::string format_or(const Options& o, const std::string& fallback, std::initializer_list<const char*> allowed) {
  const std::string fmt = o.format.empty() ? fallback : o.format;
  for (const char* a : allowed)
    if (fmt == a) return fmt;
  std::string list;
  for (const char* a : allowed) list += (list.empty() ? "" : ", ") + std::string(a);
  throw BadInput("--format " + fmt + " is not available here (choose " + list + ")");
}

PointFormat point_format(const std::string& fmt) {
  if (fmt == "phi") return PointFormat::Phi;
  if (fmt == "sqrt3") return PointFormat::Sqrt3;
  return PointFormat::Coeff;
}

void emit(const Options& o, const std::string& text) {
  if (o.out.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream f(o.out, std::ios::binary);
  if (!f) throw BadInput("cannot write " + o.out);
  f << text;
}

// Square-ish integer viewport around the points with a unit margin.
Box viewport_of(const std::vector<std::complex<double>>& pts) {
  double x0 = 0, y0 = 0, x1 = 0, y1 = 0;
  bool first = true;
  for (const auto& c : pts) {
    if (first) {
      x0 = x1 = c.real();
      y0 = y1 = c.imag();
      first = false;
    }
    x0 = std::min(x0, c.real());
    x1 = std::max(x1, c.real());
    y0 = std::min(y0, c.imag());
    y1 = std::max(y1, c.imag());
  }
  auto lo = [](double v) { return Rational(static_cast<long>(std::floor(v)) - 1); };
  auto hi = [](double v) { return Rational(static_cast<long>(std::ceil(v)) + 1); };
  return Box{lo(x0), lo(y0), hi(x1), hi(y1)};
}

Box box_or(const Options& o, const std::string& fallback) {
  g_input = o.box.empty() ? fallback : o.box;
  return parse_box(g_input);
}

std::string report_text(const std::string& title, const VerificationReport& r) {
  std::string out = title + "\n";
  for (const CheckResult& c : r.checks)
    out += std::string("  ") + (c.pass ? "ok    " : "FAIL  ") + c.name + (c.detail.empty() ? "" : "  " + c.detail) + "\n";
  return out;
}

nlohmann::json report_json(const VerificationReport& r) {
  nlohmann::json out = nlohmann::json::array();
  for (const CheckResult& c : r.checks) out.push_back({{"name", c.name}, {"pass", c.pass}, {"detail", c.detail}});
  return out;
}

int cmd_iterate(const Options& o) {
  const FieldPtr f = field_of(o);
  const CycloNum z = point_of(f, o, "--point");
  const std::string fmt = format_or(o, "coeff", {"coeff", "phi", "sqrt3", "csv", "json", "svg"});
  const std::vector<CycloNum> pts = orbit(z, o.n);
  if (fmt == "csv") {
    emit(o, orbit_csv(pts));
  } else if (fmt == "json") {
    nlohmann::json arr = nlohmann::json::array();
    for (std::size_t i = 0; i < pts.size(); ++i) {
      nlohmann::json e = point_json(pts[i]);
      e["index"] = i;
      e["address"] = std::string(1, address_char(address(pts[i])));
      arr.push_back(std::move(e));
    }
    emit(o, arr.dump(2) + "\n");
  } else if (fmt == "svg") {
    std::vector<std::complex<double>> shadow;
    for (const CycloNum& p : pts) shadow.push_back(to_complex(p));
    Scene scene(o.box.empty() ? viewport_of(shadow) : box_or(o, o.box));
    scene.add_orbit(pts);
    scene.add_point(pts.front(), "0");
    emit(o, scene.svg(o.width));
  } else {
    emit(o, orbit_text(pts, point_format(fmt)));
  }
  return kOk;
}

int cmd_period(const Options& o) {
  const FieldPtr f = field_of(o);
  const CycloNum z = point_of(f, o, "--point");
  const std::string fmt = format_or(o, "coeff", {"coeff", "json"});
  const std::uint64_t budget = budget_or(o, 10000000);
  const OrbitRecord rec = minimal_period(z, budget);
  if (fmt == "json") {
    nlohmann::json j = {{"point", point_json(z)}, {"budget", budget}, {"steps", rec.budget_used},
                        {"line_touches", rec.iterates_on_line.size()}};
    j["period"] = rec.period ? nlohmann::json(*rec.period) : nlohmann::json(nullptr);
    emit(o, j.dump(2) + "\n");
  } else if (rec.period) {
    emit(o, "period " + std::to_string(*rec.period) + "\nline touches " +
                std::to_string(rec.iterates_on_line.size()) + "\n");
  } else {
    emit(o, "no return within " + std::to_string(budget) + " steps\n");
  }
  return rec.period ? kOk : kBudget;
}

int cmd_tile(const Options& o) {
  const FieldPtr f = field_of(o);
  const CycloNum z = point_of(f, o, "--seed");
  const std::string fmt = format_or(o, "coeff", {"coeff", "phi", "sqrt3", "json", "svg"});
  const Tile t = tile_from_seed(z, budget_or(o, 10000000));
  if (fmt == "json") {
    emit(o, tile_json(t).dump(2) + "\n");
    return kOk;
  }
  if (fmt == "svg") {
    std::vector<std::complex<double>> shadow;
    std::vector<ConvexPolygon> images = tile_images(t);
    for (const ConvexPolygon& p : images)
      for (const CycloNum& v : p.vertices) shadow.push_back(to_complex(v));
    Scene scene(o.box.empty() ? viewport_of(shadow) : box_or(o, o.box));
    for (const ConvexPolygon& p : images) scene.add_polygon(p, t.ell * static_cast<std::uint64_t>(t.k));
    scene.add_point(t.center, "center");
    emit(o, scene.svg(o.width));
    return kOk;
  }
  const PointFormat pf = point_format(fmt);
  std::ostringstream os;
  os << "ell " << t.ell << "  k " << t.k << "  interior period " << t.ell * static_cast<std::uint64_t>(t.k) << "\n";
  os << "sides " << t.sides() << "  " << (polygon_is_regular(t.polygon) ? "regular" : "irregular") << "  "
     << (t.rotational ? "rotational" : "non-rotational") << "\n";
  os << "word " << t.word.word << "\n";
  os << "center " << format_point(t.center, pf) << "\n";
  for (std::size_t i = 0; i < t.polygon.vertices.size(); ++i)
    os << "vertex " << i << "  " << format_point(t.polygon.vertices[i], pf) << "\n";
  emit(o, os.str());
  return kOk;
}

int cmd_critical(const Options& o) {
  const FieldPtr f = field_of(o);
  const Box box = box_or(o, "-4,-4,4,4");
  const std::string fmt = format_or(o, "coeff", {"coeff", "json", "svg"});
  BundleKind kind = BundleKind::Pullback;
  if (o.kind == "forward")
    kind = BundleKind::Forward;
  else if (o.kind == "both")
    kind = BundleKind::Both;
  else if (o.kind != "pullback")
    throw BadInput("--kind must be pullback, forward or both");
  const CriticalBundle b = critical_bundle(f, o.depth, box, kind, o.cap, o.threads);
  std::vector<CriticalLayer> all = b.pullback;
  all.insert(all.end(), b.forward.begin(), b.forward.end());
  if (fmt == "json") {
    nlohmann::json j = {{"depth", o.depth},
                        {"depth_reached", b.depth_reached},
                        {"segments", b.segment_count},
                        {"truncated", b.truncated},
                        {"layers", layers_json(all)}};
    if (!b.note.empty()) j["note"] = b.note;
    emit(o, j.dump(2) + "\n");
  } else if (fmt == "svg") {
    Scene scene(box);
    scene.add_layers(all);
    emit(o, scene.svg(o.width));
  } else {
    std::string text;
    for (const CriticalLayer& l : all) text += layer_dump(l);
    emit(o, text);
  }
  if (b.truncated) {
    std::cerr << b.note << "\n";
    return kBudget;
  }
  return kOk;
}

int cmd_scan(const Options& o) {
  const FieldPtr f = field_of(o);
  const Box box = box_or(o, "-3,-3,3,3");
  g_input = o.grid;
  const Rational step = parse_rational(o.grid);
  if (step <= 0) throw BadInput("--grid must be positive");
  const std::string fmt = format_or(o, "csv", {"csv", "json", "svg"});
  const ScanReport rep = scan_region(f, box, step, budget_or(o, 100000), true, o.threads);
  if (fmt == "json") {
    emit(o, inventory_json(rep).dump(2) + "\n");
  } else if (fmt == "svg") {
    Scene scene(box);
    for (const InventoryEntry& e : rep.inventory)
      for (const ConvexPolygon& p : tile_images(e.tile))
        scene.add_polygon(p, e.tile.ell * static_cast<std::uint64_t>(e.tile.k));
    emit(o, scene.svg(o.width));
  } else {
    emit(o, inventory_csv(rep));
  }
  std::cerr << rep.samples.size() << " samples, " << rep.inventory.size() << " tiles, " << rep.on_critical
            << " on the critical set, " << rep.exhausted << " over budget\n";
  return kOk;
}

int casestudy_golden(const Options& o) {
  const GoldenContext g = golden_context();
  if (o.table) {
    const std::string fmt = format_or(o, "coeff", {"coeff", "csv", "json"});
    const std::vector<PeriodRow> rows = pentagon_center_periods(o.max_n, budget_or(o, 20000000), o.threads);
    bool exhausted = false;
    std::ostringstream os;
    nlohmann::json arr = nlohmann::json::array();
    if (fmt == "csv") os << "n,period,steps\n";
    for (const PeriodRow& r : rows) {
      exhausted = exhausted || !r.period;
      const std::string period = r.period ? std::to_string(*r.period) : "none";
      if (fmt == "csv")
        os << r.n << ',' << period << ',' << r.steps << '\n';
      else if (fmt == "json")
        arr.push_back({{"n", r.n}, {"period", r.period ? nlohmann::json(*r.period) : nlohmann::json(nullptr)},
                       {"point", point_json(r.point)}});
      else
        os << "P" << r.n << "  " << period << "\n";
    }
    emit(o, fmt == "json" ? arr.dump(2) + "\n" : os.str());
    return exhausted ? kBudget : kOk;
  }
  if (o.show_returns) {
    const std::string fmt = format_or(o, "phi", {"phi", "coeff", "json"});
    const std::vector<ReturnEntry> rs = q_orbit_returns(o.returns);
    std::ostringstream os;
    nlohmann::json arr = nlohmann::json::array();
    for (const ReturnEntry& r : rs) {
      if (fmt == "json")
        arr.push_back({{"index", r.index}, {"value", point_json(r.value)}, {"integer_phi_form", r.integer_phi_form}});
      else
        os << r.index << "  " << format_point(r.value, point_format(fmt)) << "\n";
    }
    emit(o, fmt == "json" ? arr.dump(2) + "\n" : os.str());
    return kOk;
  }
  const std::string fmt = format_or(o, "coeff", {"coeff", "json", "svg"});
  if (fmt == "svg") {
    Scene scene(box_or(o, "-2,-1,3,7/2"));
    scene.add_layers(critical_bundle(g.field, o.depth, box_or(o, "-2,-1,3,7/2"), BundleKind::Pullback,
                                     o.cap, o.threads).pullback);
    CycloNum r = g.R, s = g.S;
    for (int i = 0; i < 3; ++i) {
      ConvexPolygon tri;
      tri.vertices = {g.Q, r, s};
      scene.add_polygon(tri, static_cast<std::uint64_t>(i));
      r = golden_rescale(r);
      s = golden_rescale(s);
    }
    for (int n = 0; n < 3; ++n) scene.add_point(pentagon_center(g, n), "P" + std::to_string(n));
    scene.add_point(g.Q, "Q");
    emit(o, scene.svg(o.width));
    return kOk;
  }
  const VerificationReport rep = golden_checks();
  emit(o, fmt == "json" ? report_json(rep).dump(2) + "\n" : report_text("golden", rep));
  return rep.passed() ? kOk : kFalsified;
}

int casestudy_hexagon(const Options& o) {
  const std::string fmt = format_or(o, "coeff", {"coeff", "json", "svg"});
  if (fmt == "svg") {
    const HexagonContext h = hexagon_context();
    const Tile t = tile_from_seed(h.center, 1000);
    std::vector<std::complex<double>> shadow;
    const std::vector<ConvexPolygon> images = tile_images(t);
    for (const ConvexPolygon& p : images)
      for (const CycloNum& v : p.vertices) shadow.push_back(to_complex(v));
    Scene scene(o.box.empty() ? viewport_of(shadow) : box_or(o, o.box));
    for (const ConvexPolygon& p : images) scene.add_polygon(p, 20);
    scene.add_point(h.center, "C");
    emit(o, scene.svg(o.width));
    return kOk;
  }
  const VerificationReport rep = hexagon_case();
  emit(o, fmt == "json" ? report_json(rep).dump(2) + "\n" : report_text("hexagon", rep));
  return rep.passed() ? kOk : kFalsified;
}

int cmd_verify(const Options& o) {
  const FieldPtr f = field_of(o);
  const CycloNum z = point_of(f, o, "--seed");
  const std::string fmt = format_or(o, "coeff", {"coeff", "json"});
  const Tile t = tile_from_seed(z, budget_or(o, 10000000));
  const VerificationReport a = verify_theorem_A(t, o.samples, o.rng_seed);
  const VerificationReport b = verify_theorem_B(t);
  const VerificationReport c = verify_boundary_critical(t);
  if (fmt == "json") {
    nlohmann::json j = {{"tile", tile_json(t)},
                        {"rotation", report_json(a)},
                        {"shape", report_json(b)},
                        {"boundary", report_json(c)}};
    emit(o, j.dump(2) + "\n");
  } else {
    emit(o, report_text("rotation (ell " + std::to_string(t.ell) + ", k " + std::to_string(t.k) + ")", a) +
                report_text("shape", b) + report_text("boundary", c));
  }
  return a.passed() && b.passed() && c.passed() ? kOk : kFalsified;
}

void print_parse_error(const std::string& input, const ParseError& e) {
  std::cerr << "error: " << e.what() << "\n";
  if (!input.empty() && e.position() <= input.size())
    std::cerr << "  " << input << "\n  " << std::string(e.position(), ' ') << "^\n";
}

}  // namespace

int main(int argc, char** argv) {
  Options o;
  CLI::App app{"Exact dynamics of the piecewise rotation F(z) = lambda (z - H(z))"};
  app.set_config("--config", "", "key = value file presetting any option");
  app.require_subcommand(1);
  app.fallthrough();
  app.add_option("--alpha", o.alpha, "rotation as the fraction p/q of a full turn");
  app.add_option("--box", o.box, "viewport or region x0,y0,x1,y1");
  app.add_option("--depth", o.depth, "critical layer depth")->check(CLI::NonNegativeNumber);
  app.add_option("--budget", o.budget, "iteration budget (0 = command default)");
  app.add_option("--format", o.format, "coeff, phi, sqrt3, csv, json or svg");
  app.add_option("--out", o.out, "write to this file instead of stdout");
  app.add_option("--rng-seed", o.rng_seed, "seed for sampling")->capture_default_str();
  app.add_option("--threads", o.threads, "worker threads (0 = hardware)");
  app.add_option("--cap", o.cap, "segment cap for critical bundles")->capture_default_str();
  app.add_option("--width", o.width, "SVG width in pixels")->capture_default_str();

  auto* iterate = app.add_subcommand("iterate", "print F^0(z) .. F^n(z)");
  iterate->add_option("--point", o.point, "start point")->required();
  iterate->add_option("--n", o.n, "number of steps")->capture_default_str();

  auto* period = app.add_subcommand("period", "exact minimal period");
  period->add_option("--point,--seed", o.point, "point")->required();

  auto* tile = app.add_subcommand("tile", "tile of a periodic seed");
  tile->add_option("--seed,--point", o.point, "periodic seed")->required();

  auto* critical = app.add_subcommand("critical", "critical segment layers");
  critical->add_option("--kind", o.kind, "pullback, forward or both")->capture_default_str();

  auto* scan = app.add_subcommand("scan", "grid scan for tiles");
  scan->add_option("--grid", o.grid, "grid spacing")->capture_default_str();

  auto* casestudy = app.add_subcommand("casestudy", "golden renormalization or the hexagon");
  casestudy->require_subcommand(1);
  auto* golden = casestudy->add_subcommand("golden", "rotation 4/5");
  golden->add_flag("--table", o.table, "periods of the pentagon centers");
  golden->add_option("--max-n", o.max_n, "last table row")->capture_default_str();
  golden->add_flag("--returns", o.show_returns, "returns of Q to the real axis");
  golden->add_option("--n", o.returns, "steps for --returns")->capture_default_str();
  auto* hexagon = casestudy->add_subcommand("hexagon", "rotation 11/12");

  auto* verify = app.add_subcommand("verify", "check the tile theorems for a seed");
  verify->add_option("--seed,--point", o.point, "periodic seed")->required();
  verify->add_option("--samples", o.samples, "interior samples")->capture_default_str();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return e.get_exit_code() == 0 ? code : kBadInput;
  }

  try {
    if (*iterate) return cmd_iterate(o);
    if (*period) return cmd_period(o);
    if (*tile) return cmd_tile(o);
    if (*critical) return cmd_critical(o);
    if (*scan) return cmd_scan(o);
    if (*golden) return casestudy_golden(o);
    if (*hexagon) return casestudy_hexagon(o);
    if (*verify) return cmd_verify(o);
  } catch (const ParseError& e) {
    print_parse_error(g_input, e);
    return kBadInput;
  } catch (const BudgetExceeded& e) {
    std::cerr << "budget exhausted: " << e.what() << "\n";
    return kBudget;
  } catch (const Falsified& e) {
    std::cerr << "falsified: " << e.what() << "\n";
    return kFalsified;
  } catch (const CriticalLineHit& e) {
    std::cerr << "error: orbit meets the critical line at step " << e.index() << ": " << e.what() << "\n";
    return kBadInput;
  } catch (const BadInput& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kBadInput;
  } catch (const ParameterError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kBadInput;
  } catch (const DomainError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kBadInput;
  }
  return kBadInput;
}
