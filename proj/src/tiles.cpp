#include "pwrot/tiles.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <unordered_map>

#include "parallel.hpp"
#include "pwrot/errors.hpp"

namespace pwrot {

namespace {

std::string coeff_key(const CycloNum& a) {
  std::string out;
  for (const Rational& c : a.coeffs()) {
    out += c.get_str();
    out += ',';
  }
  return out;
}

std::string polygon_key(const ConvexPolygon& p) {
  std::string out;
  for (const CycloNum& v : p.vertices) {
    out += coeff_key(v);
    out += ';';
  }
  return out;
}

int linear_order(int power, int q) {
  for (int j = 1; j <= q; ++j)
    if (static_cast<long>(power) * j % q == 0) return j;
  return q;
}

}  // namespace

std::vector<HalfPlane> itinerary_constraints(const FieldPtr& field, std::string_view block, std::uint64_t count) {
  std::vector<HalfPlane> out;
  out.reserve(count);
  AffineMap g = AffineMap::identity(field);
  const AffineMap plus = AffineMap::branch(field, '+');
  const AffineMap minus = AffineMap::branch(field, '-');
  for (std::uint64_t j = 0; j < count; ++j) {
    const char s = block[j % block.size()];
    out.push_back(halfplane_from_constraint(g, s));
    g = compose(s == '-' ? minus : plus, g);
  }
  return out;
}

Tile tile_from_seed(const CycloNum& z, std::uint64_t budget) {
  const FieldPtr& f = z.field();
  const OrbitRecord rec = minimal_period(z, budget, true);
  if (!rec.iterates_on_line.empty()) {
    const std::uint64_t idx = rec.iterates_on_line.front().first;
    throw CriticalLineHit(idx, "tile_from_seed: seed orbit meets the critical line at iterate " + std::to_string(idx));
  }
  if (!rec.period) throw BudgetExceeded("tile_from_seed: no return within " + std::to_string(budget) + " steps");

  Tile t;
  t.seed = z;
  t.seed_period = *rec.period;
  const Itinerary full = itinerary(z, *rec.period);
  t.ell = itinerary_period(full);
  t.word.word = full.word.substr(0, t.ell);
  t.word.periodic = true;
  t.word.period = t.ell;

  const int q = f->q();
  if (t.ell % static_cast<std::uint64_t>(q) != 0) {
    t.k = rotation_order(q, t.ell);
    t.center = rotation_center(affine_along(f, t.word.word));
  } else {
    t.k = 1;
    t.rotational = false;
  }

  const auto constraints = itinerary_constraints(f, t.word.word, static_cast<std::uint64_t>(t.k) * t.ell);
  HalfPlaneIntersection cell = intersect_halfplanes(constraints);
  if (cell.status == IntersectionStatus::Empty) throw Falsified("tile_from_seed: itinerary cell is empty");
  if (cell.status == IntersectionStatus::Unbounded) throw Falsified("tile_from_seed: itinerary cell is unbounded");
  t.polygon = std::move(cell.polygon);
  if (!t.rotational) t.center = vertex_centroid(t.polygon);
  return t;
}

std::vector<ConvexPolygon> tile_images(const Tile& t) {
  std::vector<ConvexPolygon> out;
  out.reserve(t.ell + 1);
  out.push_back(t.polygon);
  for (std::uint64_t j = 0; j < t.ell; ++j) {
    const char s = t.word.word[j];
    ConvexPolygon next;
    for (const CycloNum& v : out.back().vertices) next.vertices.push_back(branch_step(v, s));
    canonicalize(next);
    out.push_back(std::move(next));
  }
  return out;
}

bool VerificationReport::passed() const {
  return std::all_of(checks.begin(), checks.end(), [](const CheckResult& c) { return c.pass; });
}

void VerificationReport::add(std::string name, bool pass, std::string detail) {
  checks.push_back(CheckResult{std::move(name), pass, std::move(detail)});
}

CycloNum interior_sample(const ConvexPolygon& poly, std::mt19937_64& rng) {
  std::uniform_int_distribution<long> weight(1, 7);
  const FieldPtr& f = poly.vertices.front().field();
  CycloNum sum(f);
  long total = 0;
  for (const CycloNum& v : poly.vertices) {
    const long w = weight(rng);
    sum += v * Rational(w);
    total += w;
  }
  return sum * Rational(1, total);
}

VerificationReport verify_theorem_A(const Tile& t, int samples, std::uint64_t rng_seed) {
  VerificationReport rep;
  const FieldPtr& f = t.seed.field();
  const std::uint64_t kl = static_cast<std::uint64_t>(t.k) * t.ell;

  const auto images = tile_images(t);
  std::unordered_map<std::string, std::uint64_t> seen;
  bool distinct = true;
  std::string clash;
  for (std::uint64_t j = 0; j < t.ell; ++j) {
    auto [it, fresh] = seen.emplace(polygon_key(images[j]), j);
    if (!fresh) {
      distinct = false;
      clash = "images " + std::to_string(it->second) + " and " + std::to_string(j) + " coincide";
      break;
    }
  }
  rep.add("images pairwise distinct", distinct, clash);
  rep.add("image returns at ell", same_polygon(images[t.ell], images[0]));

  const AffineMap g = affine_along(f, t.word.word);
  const auto& verts = t.polygon.vertices;
  const std::size_t n = verts.size();
  bool cyclic = false;
  std::size_t shift = 0;
  const CycloNum g0 = g(verts[0]);
  for (std::size_t s = 0; s < n && !cyclic; ++s) {
    if (verts[s] != g0) continue;
    cyclic = true;
    shift = s;
    for (std::size_t i = 1; i < n && cyclic; ++i) cyclic = g(verts[i]) == verts[(i + s) % n];
  }
  rep.add("return map permutes vertices cyclically", cyclic && g(t.center) == t.center,
          "vertex shift " + std::to_string(shift));
  const int order = linear_order(g.power, f->q());
  rep.add("return map order", order == t.k,
          "order " + std::to_string(order) + ", expected " + std::to_string(t.k));

  const OrbitRecord c = minimal_period(t.center, t.ell + 1);
  rep.add("center period", c.period && *c.period == t.ell,
          c.period ? "period " + std::to_string(*c.period) : std::string("no return"));

  std::mt19937_64 rng(rng_seed);
  int accepted = 0;
  int bad = 0;
  int rejected = 0;
  std::string first_bad;
  for (int attempt = 0; accepted < samples && attempt < samples * 20; ++attempt) {
    const CycloNum w = interior_sample(t.polygon, rng);
    const OrbitRecord r = minimal_period(w, kl + 1, true);
    if (!r.iterates_on_line.empty()) {
      ++rejected;
      continue;
    }
    ++accepted;
    const std::uint64_t want = w == t.center ? t.ell : kl;
    if (!r.period || *r.period != want) {
      if (bad++ == 0)
        first_bad = "sample period " + (r.period ? std::to_string(*r.period) : std::string("none")) + ", expected " +
                    std::to_string(want);
    }
  }
  rep.add("interior sample periods", accepted == samples && bad == 0,
          std::to_string(accepted) + " samples, " + std::to_string(rejected) + " rejected" +
              (first_bad.empty() ? "" : ", " + first_bad));
  return rep;
}

std::vector<int> slope_census(const ConvexPolygon& poly) {
  std::set<int> classes;
  const std::size_t n = poly.size();
  for (std::size_t i = 0; i < n; ++i) classes.insert(direction_class(poly.vertices[(i + 1) % n] - poly.vertices[i]));
  return {classes.begin(), classes.end()};
}

VerificationReport verify_theorem_B(const Tile& t) {
  VerificationReport rep;
  const FieldContext& f = *t.seed.field();
  const int q = f.q();
  const std::size_t bound = q % 2 == 0 ? static_cast<std::size_t>(q) : static_cast<std::size_t>(2 * q);
  rep.add("side bound", t.sides() <= bound, std::to_string(t.sides()) + " sides, bound " + std::to_string(bound));

  const auto census = slope_census(t.polygon);
  bool in_theta = true;
  std::string dirs;
  for (int k : census) {
    in_theta &= k >= 0 && direction_in_theta(f, k);
    dirs += (dirs.empty() ? "" : " ") + std::to_string(k);
  }
  const std::size_t max_classes = q % 2 == 0 ? static_cast<std::size_t>(q / 2) : static_cast<std::size_t>(q);
  rep.add("edge directions in rotation set", in_theta && census.size() <= max_classes,
          "zeta exponents {" + dirs + "}");

  const bool regular = polygon_is_regular(t.polygon);
  if (std::gcd(t.ell, static_cast<std::uint64_t>(q)) == 1) {
    const bool ok = (t.sides() == static_cast<std::size_t>(q) && regular) ||
                    (q % 2 == 1 && t.sides() == static_cast<std::size_t>(2 * q));
    rep.add("coprime dichotomy", ok,
            std::to_string(t.sides()) + " sides, " + (regular ? "regular" : "irregular"));
  }
  return rep;
}

VerificationReport verify_boundary_critical(const Tile& t) {
  VerificationReport rep;
  const std::uint64_t kl = static_cast<std::uint64_t>(t.k) * t.ell;
  std::size_t idx = 0;
  for (const CycloNum& v : t.polygon.vertices) {
    std::optional<std::uint64_t> hit;
    for_each_iterate(v, kl, [&](std::uint64_t j, const CycloNum&, Address a) {
      if (a != Address::OnLine) return true;
      hit = j;
      return false;
    });
    rep.add("vertex " + std::to_string(idx++) + " meets the line", hit.has_value(),
            hit ? "iterate " + std::to_string(*hit) : std::string("no touch"));
  }
  return rep;
}

ScanReport scan_region(const FieldPtr& field, const Box& box, const Rational& step, std::uint64_t budget,
                       bool collect_tiles, unsigned threads) {
  if (sgn(step) <= 0) throw ParameterError("scan_region: step must be positive");
  if (box.x1 < box.x0 || box.y1 < box.y0) throw ParameterError("scan_region: empty box");
  ScanReport rep;
  rep.box = box;
  rep.step = step;
  rep.budget = budget;

  std::vector<Rational> xs, ys;
  for (Rational x = box.x0; x <= box.x1; x += step) xs.push_back(x);
  for (Rational y = box.y0; y <= box.y1; y += step) ys.push_back(y);
  rep.samples.resize(xs.size() * ys.size());
  std::vector<std::string> keys(rep.samples.size());
  std::vector<std::size_t> shifts(rep.samples.size(), 0);

  detail::parallel_for(rep.samples.size(), threads, [&](std::size_t i) {
    ScanSample& s = rep.samples[i];
    s.x = xs[i % xs.size()];
    s.y = ys[i / xs.size()];
    const CycloNum z = embed_rational_point(field, s.x, s.y);
    const OrbitRecord r = minimal_period(z, budget, true);
    s.period = r.period;
    if (!r.iterates_on_line.empty()) {
      s.kind = SampleKind::OnCritical;
      s.line_index = r.iterates_on_line.front().first;
      s.period.reset();
      return;
    }
    if (!r.period) {
      s.kind = SampleKind::BudgetExceeded;
      return;
    }
    s.kind = SampleKind::Periodic;
    if (!collect_tiles) return;
    const Itinerary full = itinerary(z, *r.period);
    const std::size_t ell = itinerary_period(full);
    auto [rot, shift] = least_rotation(std::string_view(full.word).substr(0, ell));
    shifts[i] = shift;
    if (ell % static_cast<std::size_t>(field->q()) != 0)
      keys[i] = rot + "|" + coeff_key(rotation_center(affine_along(field, rot)));
    else
      keys[i] = rot + "|fixed";
  });

  std::unordered_map<std::string, int> index;
  std::vector<std::size_t> representative;
  for (std::size_t i = 0; i < rep.samples.size(); ++i) {
    ScanSample& s = rep.samples[i];
    switch (s.kind) {
      case SampleKind::OnCritical: ++rep.on_critical; break;
      case SampleKind::BudgetExceeded: ++rep.exhausted; break;
      case SampleKind::Periodic: ++rep.histogram[*s.period]; break;
    }
    if (s.kind != SampleKind::Periodic || !collect_tiles) continue;
    auto [it, fresh] = index.emplace(keys[i], static_cast<int>(representative.size()));
    if (fresh) representative.push_back(i);
    s.tile = it->second;
  }

  rep.inventory.resize(representative.size());
  detail::parallel_for(representative.size(), threads, [&](std::size_t t) {
    const std::size_t i = representative[t];
    CycloNum seed = embed_rational_point(field, rep.samples[i].x, rep.samples[i].y);
    for (std::size_t j = 0; j < shifts[i]; ++j) seed = pwrot::step(seed);
    rep.inventory[t].tile = tile_from_seed(seed, budget);
    rep.inventory[t].key = keys[i];
  });
  for (const ScanSample& s : rep.samples)
    if (s.tile >= 0) ++rep.inventory[static_cast<std::size_t>(s.tile)].multiplicity;
  return rep;
}

}  // namespace pwrot
