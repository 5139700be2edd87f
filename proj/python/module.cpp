#include <pybind11/pybind11.h>
#include <pybind11/complex.h>
#include <pybind11/stl.h>

#include "pwrot/casestudy.hpp"
#include "pwrot/critical.hpp"
#include "pwrot/errors.hpp"
#include "pwrot/pointexpr.hpp"
#include "pwrot/render.hpp"

namespace py = pybind11;
using namespace pwrot;

namespace {

// pybind11 holders cannot be shared_ptr<const T>.
using PyField = std::shared_ptr<FieldContext>;
PyField expose(const FieldPtr& f) { return std::const_pointer_cast<FieldContext>(f); }

py::object to_fraction(const Rational& r) {
  static py::object fraction = py::module_::import("fractions").attr("Fraction");
  return fraction(r.get_str());
}

Rational from_python(const py::handle& v) {
  Rational r(py::str(v).cast<std::string>());
  r.canonicalize();
  return r;
}

Box box_from(const py::sequence& s) {
  if (py::len(s) != 4) throw ParameterError("box needs four numbers x0, y0, x1, y1");
  return Box{from_python(s[0]), from_python(s[1]), from_python(s[2]), from_python(s[3])};
}

py::tuple box_tuple(const Box& b) {
  return py::make_tuple(to_fraction(b.x0), to_fraction(b.y0), to_fraction(b.x1), to_fraction(b.y1));
}

py::list layers_list(const std::vector<CriticalLayer>& layers) {
  py::list out;
  for (const CriticalLayer& l : layers) {
    py::list segs;
    for (const ExactSegment& s : l.segments) segs.append(py::make_tuple(s.a, s.b, s.direction));
    out.append(py::dict(py::arg("depth") = l.depth, py::arg("segments") = segs));
  }
  return out;
}

py::list checks_list(const VerificationReport& r) {
  py::list out;
  for (const CheckResult& c : r.checks)
    out.append(py::dict(py::arg("name") = c.name, py::arg("pass") = c.pass, py::arg("detail") = c.detail));
  return out;
}

}  // namespace

PYBIND11_MODULE(_pwrot, m) {
  m.doc() = "Exact dynamics of piecewise rotations over cyclotomic fields.";

  py::register_exception<ParameterError>(m, "ParameterError", PyExc_ValueError);
  py::register_exception<DomainError>(m, "DomainError", PyExc_ArithmeticError);
  py::register_exception<BudgetExceeded>(m, "BudgetExceeded", PyExc_RuntimeError);
  py::register_exception<Falsified>(m, "Falsified", PyExc_RuntimeError);
  static py::exception<CriticalLineHit> line_hit(m, "CriticalLineHit", PyExc_RuntimeError);
  static py::exception<ParseError> parse_error(m, "ParseError", PyExc_ValueError);
  py::register_exception_translator([](std::exception_ptr p) {
    try {
      if (p) std::rethrow_exception(p);
    } catch (const CriticalLineHit& e) {
      py::object err = py::handle(line_hit.ptr())(e.what());
      err.attr("index") = e.index();
      PyErr_SetObject(line_hit.ptr(), err.ptr());
    } catch (const ParseError& e) {
      py::object err = py::handle(parse_error.ptr())(e.what());
      err.attr("position") = e.position();
      PyErr_SetObject(parse_error.ptr(), err.ptr());
    }
  });

  py::class_<FieldContext, PyField>(m, "Field")
      .def_property_readonly("p", &FieldContext::p)
      .def_property_readonly("q", &FieldContext::q)
      .def_property_readonly("conductor", &FieldContext::conductor)
      .def_property_readonly("degree", &FieldContext::degree)
      .def_property_readonly("alpha", &FieldContext::alpha_string)
      .def("__repr__", [](const FieldContext& f) { return "Field(" + f.alpha_string() + ")"; });

  m.def("make_field", [](int p, int q) { return expose(make_field(p, q)); }, py::arg("p"), py::arg("q"), "Field for rotation by p/q turns.");
  m.def("field", [](const std::string& alpha) {
    const auto [p, q] = parse_alpha(alpha);
    return expose(make_field(p, q));
  }, py::arg("alpha"), "Field from text such as \"4/5\".");

  py::class_<CycloNum>(m, "Element")
      .def_property_readonly("field", [](const CycloNum& a) { return expose(a.field()); })
      .def_property_readonly("coeffs", [](const CycloNum& a) {
        py::list out;
        for (const Rational& c : a.coeffs()) out.append(to_fraction(c));
        return out;
      })
      .def("__add__", [](const CycloNum& a, const CycloNum& b) { return a + b; })
      .def("__sub__", [](const CycloNum& a, const CycloNum& b) { return a - b; })
      .def("__mul__", [](const CycloNum& a, const CycloNum& b) { return a * b; })
      .def("__truediv__", [](const CycloNum& a, const CycloNum& b) { return a / b; })
      .def("__neg__", [](const CycloNum& a) { return -a; })
      .def("__eq__", [](const CycloNum& a, const CycloNum& b) { return a == b; })
      .def("__ne__", [](const CycloNum& a, const CycloNum& b) { return a != b; })
      .def("__hash__", &CycloNum::hash)
      .def("__complex__", &to_complex)
      .def("__str__", [](const CycloNum& a) { return to_string(a); })
      .def("__repr__", [](const CycloNum& a) { return "Element(" + to_string(a) + ")"; })
      .def("conj", &conj)
      .def("is_real", &is_real)
      .def("format", [](const CycloNum& a, const std::string& style) {
        if (style == "golden") return format_golden(a);
        if (style == "sqrt3") return format_sqrt3(a);
        if (style == "coeff") return to_string(a);
        throw ParameterError("format style must be coeff, golden or sqrt3");
      }, py::arg("style") = "coeff");

  m.def("parse_point", [](const PyField& f, const std::string& text) { return parse_point(f, text); },
        py::arg("field"), py::arg("text"), "Exact element from text, e.g. \"(1/2, sqrt(2+phi)^3/10)\" or \"Q\".");
  m.def("element", [](const PyField& f, const py::sequence& coeffs) {
    std::vector<Rational> c;
    for (const auto& v : coeffs) c.push_back(from_python(v));
    return CycloNum(f, std::move(c));
  }, py::arg("field"), py::arg("coeffs"), "Element from power-basis coefficients.");
  m.def("point", [](const PyField& f, const py::handle& x, const py::handle& y) {
    return embed_rational_point(f, from_python(x), from_python(y));
  }, py::arg("field"), py::arg("x"), py::arg("y"));

  m.def("step", &step, py::arg("z"));
  m.def("inverse_step", &inverse_step, py::arg("z"));
  m.def("orbit", &orbit, py::arg("z"), py::arg("n"), "[z, F(z), ..., F^n(z)].");
  m.def("itinerary", [](const CycloNum& z, std::size_t n) { return itinerary(z, n).word; }, py::arg("z"),
        py::arg("n"));
  m.def("minimal_period", [](const CycloNum& z, std::uint64_t budget) {
    const OrbitRecord r = minimal_period(z, budget);
    py::list touches;
    for (const auto& [j, w] : r.iterates_on_line) touches.append(py::make_tuple(j, w));
    return py::dict(py::arg("period") = r.period, py::arg("line_touches") = touches,
                    py::arg("budget_used") = r.budget_used);
  }, py::arg("z"), py::arg("budget"));

  py::class_<Tile>(m, "Tile")
      .def_readonly("ell", &Tile::ell)
      .def_readonly("k", &Tile::k)
      .def_readonly("center", &Tile::center)
      .def_readonly("rotational", &Tile::rotational)
      .def_property_readonly("word", [](const Tile& t) { return t.word.word; })
      .def_property_readonly("vertices", [](const Tile& t) { return t.polygon.vertices; })
      .def_property_readonly("sides", &Tile::sides)
      .def_property_readonly("regular", [](const Tile& t) { return polygon_is_regular(t.polygon); })
      .def("images", [](const Tile& t) {
        std::vector<std::vector<CycloNum>> out;
        for (const ConvexPolygon& p : tile_images(t)) out.push_back(p.vertices);
        return out;
      })
      .def("to_json", [](const Tile& t) { return tile_json(t).dump(); })
      .def("__repr__", [](const Tile& t) {
        return "Tile(ell=" + std::to_string(t.ell) + ", k=" + std::to_string(t.k) +
               ", sides=" + std::to_string(t.sides()) + ")";
      });

  m.def("tile_from_seed", &tile_from_seed, py::arg("z"), py::arg("budget") = 1000000);
  m.def("verify_tile", [](const Tile& t, int samples, std::uint64_t rng_seed) {
    py::list out;
    for (const auto& r : {verify_theorem_A(t, samples, rng_seed), verify_theorem_B(t), verify_boundary_critical(t)})
      out += checks_list(r);
    return out;
  }, py::arg("tile"), py::arg("samples") = 5, py::arg("rng_seed") = 1);

  m.def("scan", [](const PyField& f, const py::sequence& box, const py::handle& grid, std::uint64_t budget,
                   unsigned threads) {
    const ScanReport r = scan_region(f, box_from(box), from_python(grid), budget, true, threads);
    py::list tiles;
    for (const InventoryEntry& e : r.inventory)
      tiles.append(py::dict(py::arg("tile") = e.tile, py::arg("multiplicity") = e.multiplicity));
    return py::dict(py::arg("samples") = r.samples.size(), py::arg("on_critical") = r.on_critical,
                    py::arg("exhausted") = r.exhausted, py::arg("histogram") = r.histogram,
                    py::arg("tiles") = tiles);
  }, py::arg("field"), py::arg("box"), py::arg("grid"), py::arg("budget") = 100000, py::arg("threads") = 0);

  m.def("critical", [](const PyField& f, int depth, const py::sequence& box, const std::string& kind,
                       std::size_t cap) {
    BundleKind k = BundleKind::Both;
    if (kind == "pullback")
      k = BundleKind::Pullback;
    else if (kind == "forward")
      k = BundleKind::Forward;
    else if (kind != "both")
      throw ParameterError("kind must be pullback, forward or both");
    const CriticalBundle b = critical_bundle(f, depth, box_from(box), k, cap);
    return py::dict(py::arg("pullback") = layers_list(b.pullback), py::arg("forward") = layers_list(b.forward),
                    py::arg("truncated") = b.truncated, py::arg("depth_reached") = b.depth_reached,
                    py::arg("segment_count") = b.segment_count);
  }, py::arg("field"), py::arg("depth"), py::arg("box"), py::arg("kind") = "both", py::arg("cap") = 1000000);
  m.def("first_line_hit", &first_line_hit, py::arg("z"), py::arg("budget"));
  m.def("pullback_trace", [](const CycloNum& z, int depth, const py::sequence& box) {
    return layers_list(pullback_trace(z, depth, box_from(box)));
  }, py::arg("z"), py::arg("depth"), py::arg("box"));

  m.def("golden_rescale", &golden_rescale, py::arg("z"));
  m.def("pentagon_center_periods", [](int max_n, std::uint64_t budget) {
    py::list out;
    for (const PeriodRow& r : pentagon_center_periods(max_n, budget))
      out.append(py::dict(py::arg("n") = r.n, py::arg("point") = r.point, py::arg("period") = r.period,
                          py::arg("line_touches") = r.line_touches));
    return out;
  }, py::arg("max_n"), py::arg("budget") = 20000000);
  m.def("q_orbit_returns", [](std::uint64_t n) {
    py::list out;
    for (const ReturnEntry& e : q_orbit_returns(n)) out.append(py::make_tuple(e.index, e.value));
    return out;
  }, py::arg("n") = 220);
  m.def("golden_checks", [] { return checks_list(golden_checks()); });
  m.def("hexagon_case", [] { return checks_list(hexagon_case()); });
  m.def("named_point", [](const PyField& f, const std::string& name) { return named_point(f, name); }, py::arg("field"), py::arg("name"));
  m.def("box", [](const std::string& text) { return box_tuple(parse_box(text)); }, py::arg("text"));
}
