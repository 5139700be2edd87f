#include "pwrot/casestudy.hpp"

#include <charconv>
#include <string>

#include "parallel.hpp"
#include "pwrot/errors.hpp"

namespace pwrot {

namespace {

CycloNum rat(const FieldPtr& f, long num, long den = 1) { return CycloNum::constant(f, Rational(num, den)); }

struct GoldenPoints {
  CycloNum phi, s, i, P0, Q, R, S;
};

GoldenPoints golden_points(const FieldPtr& f) {
  GoldenPoints g;
  g.phi = golden_ratio(f);
  g.s = sqrt_two_plus_phi(f);
  g.i = i_unit(f);
  const CycloNum two_plus_phi = rat(f, 2) + g.phi;
  g.P0 = rat(f, 1, 2) + g.i * two_plus_phi * g.s * Rational(1, 10);
  g.Q = -g.phi;
  g.R = rat(f, 1, 2) + g.i * (rat(f, 1) + g.phi * Rational(2)) * g.phi * g.s * Rational(1, 2);
  g.S = rat(f, 1) + g.phi;
  return g;
}

CycloNum rescale_in(const FieldPtr& f, const CycloNum& phi, const CycloNum& z) {
  return (phi * Rational(2) - rat(f, 3)) * z + rat(f, 2) - phi * Rational(2);
}

struct HexPoints {
  CycloNum sqrt3;
  std::array<CycloNum, 6> v;
  CycloNum c;
};

HexPoints hex_points(const FieldPtr& f) {
  HexPoints h;
  const CycloNum r3 = sqrt_three(f);
  const CycloNum i = i_unit(f);
  auto pt = [&](const CycloNum& x, const CycloNum& y) { return x + i * y; };
  h.sqrt3 = r3;
  h.v[0] = rat(f, 2);
  h.v[1] = (r3 + rat(f, 3)) * Rational(1, 2);
  h.v[2] = pt((r3 + rat(f, 3)) * Rational(1, 2), (r3 - rat(f, 1)) * Rational(1, 2));
  h.v[3] = pt((r3 + rat(f, 7)) * Rational(1, 4), (r3 + rat(f, 1)) * Rational(1, 4));
  h.v[4] = pt((r3 + rat(f, 2)) * Rational(1, 2), rat(f, 1, 2));
  h.v[5] = pt((r3 + rat(f, 5)) * Rational(1, 4), (r3 - rat(f, 1)) * Rational(1, 4));
  h.c = pt(r3 * Rational(1, 3) + rat(f, 3, 2), r3 * Rational(1, 6));
  return h;
}

bool is_golden_field(const FieldContext& f) { return f.p() == 4 && f.q() == 5; }

}  // namespace

GoldenContext golden_context() {
  GoldenContext g;
  g.field = make_field(4, 5);
  const GoldenPoints pts = golden_points(g.field);
  g.phi = pts.phi;
  g.sqrt_two_plus_phi = pts.s;
  g.r_scale = pts.phi * Rational(2) - rat(g.field, 3);
  g.P0 = pts.P0;
  g.Q = pts.Q;
  g.R = pts.R;
  g.S = pts.S;
  return g;
}

CycloNum golden_rescale(const CycloNum& z) {
  const FieldPtr& f = z.field();
  if (!is_golden_field(*f))
    throw ParameterError("golden_rescale: needs rotation 4/5, got " + f->alpha_string());
  return rescale_in(f, golden_ratio(f), z);
}

CycloNum pentagon_center(const GoldenContext& g, int n) {
  if (n < 0) throw ParameterError("pentagon_center: n must be >= 0");
  CycloNum p = g.P0;
  for (int j = 0; j < n; ++j) p = golden_rescale(p);
  return p;
}

std::vector<PeriodRow> pentagon_center_periods(int max_n, std::uint64_t budget, unsigned threads) {
  if (max_n < 0) throw ParameterError("pentagon_center_periods: N must be >= 0");
  const GoldenContext g = golden_context();
  std::vector<PeriodRow> rows(static_cast<std::size_t>(max_n) + 1);
  for (int n = 0; n <= max_n; ++n) {
    rows[static_cast<std::size_t>(n)].n = n;
    rows[static_cast<std::size_t>(n)].point = pentagon_center(g, n);
  }
  // largest rows first so the slowest orbit starts immediately
  detail::parallel_for(rows.size(), threads, [&](std::size_t idx) {
    PeriodRow& row = rows[rows.size() - 1 - idx];
    const OrbitRecord rec = minimal_period(row.point, budget);
    row.period = rec.period;
    row.steps = rec.budget_used;
    row.line_touches = rec.iterates_on_line.size();
  });
  return rows;
}

std::vector<ReturnEntry> q_orbit_returns(std::uint64_t max_n) {
  const GoldenContext g = golden_context();
  std::vector<ReturnEntry> out;
  for_each_iterate(g.Q, max_n, [&](std::uint64_t idx, const CycloNum& z, Address a) {
    if (a != Address::OnLine) return true;
    const auto c = golden_coordinates(z);
    bool integral = true;
    for (std::size_t j = 0; j < c.size(); ++j) {
      if (j >= 2 && c[j] != 0) integral = false;
      if (c[j].get_den() != 1) integral = false;
    }
    out.push_back(ReturnEntry{idx, z, integral});
    return true;
  });
  return out;
}

VerificationReport golden_checks() {
  VerificationReport rep;
  const GoldenContext g = golden_context();
  const FieldPtr& f = g.field;
  const CycloNum one = rat(f, 1);
  rep.add("phi^2 = phi + 1", g.phi * g.phi == g.phi + one);
  rep.add("sqrt(2+phi)^2 = 2 + phi", g.sqrt_two_plus_phi * g.sqrt_two_plus_phi == rat(f, 2) + g.phi);
  rep.add("r_scale * phi^3 = 1", g.r_scale * g.phi * g.phi * g.phi == one);
  rep.add("P0 is fixed", step(g.P0) == g.P0);
  rep.add("r(Q) = Q", golden_rescale(g.Q) == g.Q);
  const CycloNum p1 = golden_rescale(g.P0);
  const OrbitRecord rec = minimal_period(p1, 100);
  rep.add("r(P0) has period 7", rec.period && *rec.period == 7,
          rec.period ? "period " + std::to_string(*rec.period) : std::string("no return"));
  const CycloNum s1 = golden_rescale(g.S);
  rep.add("r(S) on segment QS", point_on_segment(s1, ExactSegment{g.Q, g.S, 0, 0}));
  const CycloNum r1 = golden_rescale(g.R);
  // r is a similarity fixing Q, so the image triangle is Q R1 S1 with sides scaled exactly
  const CycloNum k2 = g.r_scale * g.r_scale;
  auto sq = [](const CycloNum& v) { return v * conj(v); };
  rep.add("triangle QRS maps to Q R1 S1",
          sq(r1 - g.Q) == k2 * sq(g.R - g.Q) && sq(s1 - g.Q) == k2 * sq(g.S - g.Q) &&
              sq(r1 - s1) == k2 * sq(g.R - g.S));
  return rep;
}

HexagonContext hexagon_context() {
  HexagonContext h;
  h.field = make_field(11, 12);
  const HexPoints pts = hex_points(h.field);
  h.sqrt3 = pts.sqrt3;
  h.vertices = pts.v;
  h.center = pts.c;
  return h;
}

VerificationReport hexagon_case() {
  VerificationReport rep;
  const HexagonContext h = hexagon_context();
  const OrbitRecord rec = minimal_period(h.center, 100);
  rep.add("C has minimal period 20", rec.period && *rec.period == 20,
          rec.period ? "period " + std::to_string(*rec.period) : std::string("no return"));

  const Tile t = tile_from_seed(h.center, 1000);
  ConvexPolygon expected;
  expected.vertices.assign(h.vertices.begin(), h.vertices.end());
  rep.add("tile of C is H", same_polygon(t.polygon, expected), std::to_string(t.sides()) + " vertices");
  rep.add("H is not regular", !polygon_is_regular(t.polygon));

  const auto images = tile_images(t);
  bool distinct = true;
  for (std::size_t a = 0; a < 20 && distinct; ++a)
    for (std::size_t b = a + 1; b < 20 && distinct; ++b) distinct = !same_polygon(images[a], images[b]);
  rep.add("H_0..H_19 pairwise distinct", distinct && t.ell == 20);
  rep.add("H_20 = H_0", images.size() > 20 && same_polygon(images[20], images[0]));

  bool misses = true;
  std::string where;
  for (std::size_t n = 0; n < 20 && n < images.size(); ++n) {
    bool pos = false, neg = false;
    for (const CycloNum& v : images[n].vertices) {
      const Sign s = sign_of_im(v);
      pos |= s == Sign::Positive;
      neg |= s == Sign::Negative;
    }
    if (pos && neg) {
      misses = false;
      where = "H_" + std::to_string(n) + " crosses the axis";
      break;
    }
  }
  rep.add("no open image meets the real axis", misses, where);
  return rep;
}

std::optional<CycloNum> named_point(const FieldPtr& field, std::string_view name) {
  if (name.size() >= 2 && name[0] == 'P') {
    int n = 0;
    const auto [ptr, ec] = std::from_chars(name.data() + 1, name.data() + name.size(), n);
    if (ec != std::errc() || ptr != name.data() + name.size()) return std::nullopt;
    const GoldenPoints g = golden_points(field);
    CycloNum p = g.P0;
    for (int j = 0; j < n; ++j) p = rescale_in(field, g.phi, p);
    return p;
  }
  if (name == "Q" || name == "R" || name == "S") {
    const GoldenPoints g = golden_points(field);
    return name == "Q" ? g.Q : (name == "R" ? g.R : g.S);
  }
  if (name == "C") return hex_points(field).c;
  if (name.size() == 4 && name.substr(0, 3) == "H.v" && name[3] >= '1' && name[3] <= '6')
    return hex_points(field).v[static_cast<std::size_t>(name[3] - '1')];
  return std::nullopt;
}

}  // namespace pwrot
