#include <doctest.h>

#include <algorithm>

#include "pwrot/casestudy.hpp"
#include "pwrot/errors.hpp"
#include "pwrot/geometry.hpp"
#include "pwrot/tiles.hpp"
#include "support.hpp"

using namespace pwrot;

namespace {

CycloNum pt(const FieldPtr& f, Rational x, Rational y) { return embed_rational_point(f, x, y); }

// |Re w| < 1, |Im w| < 1 written with the unit normals 1 and i.
std::vector<HalfPlane> unit_square(const FieldPtr& f) {
  const long quarter = f->conductor() / 4;
  const CycloNum i = i_unit(f);
  return {make_halfplane(0, i, '+'), make_halfplane(0, -i, '-'), make_halfplane(quarter, i, '+'),
          make_halfplane(quarter, -i, '-')};
}

}  // namespace

TEST_CASE("square from four half-planes") {
  const FieldPtr f = make_field(4, 5);
  const HalfPlaneIntersection r = intersect_halfplanes(unit_square(f));
  REQUIRE(r.status == IntersectionStatus::Bounded);
  ConvexPolygon expected;
  expected.vertices = {pt(f, -1, -1), pt(f, 1, -1), pt(f, 1, 1), pt(f, -1, 1)};
  CHECK(same_polygon(r.polygon, expected));
  CHECK(r.polygon.edges.size() == 4);
  CHECK(is_strictly_convex(r.polygon));
  CHECK(polygon_is_regular(r.polygon));
  CHECK(twice_area(r.polygon) == CycloNum::constant(f, 8));
  CHECK(vertex_centroid(r.polygon) == CycloNum(f));
  CHECK(contains(r.polygon, CycloNum(f)) == Location::Interior);
  CHECK(contains(r.polygon, pt(f, 1, 0)) == Location::Boundary);
  CHECK(contains(r.polygon, pt(f, 1, -1)) == Location::Boundary);
  CHECK(contains(r.polygon, pt(f, 2, 0)) == Location::Exterior);
}

TEST_CASE("empty and unbounded intersections") {
  const FieldPtr f = make_field(4, 5);
  const CycloNum i = i_unit(f);
  // Im w > 1 and Im w < -1
  CHECK(intersect_halfplanes({make_halfplane(0, -i, '+'), make_halfplane(0, i, '-')}).status ==
        IntersectionStatus::Empty);
  // opposite sides of one line
  CHECK(intersect_halfplanes({make_halfplane(0, i, '+'), make_halfplane(0, i, '-')}).status ==
        IntersectionStatus::Empty);
  CHECK(intersect_halfplanes({make_halfplane(0, i, '+')}).status == IntersectionStatus::Unbounded);
  auto three = unit_square(f);
  three.pop_back();
  CHECK(intersect_halfplanes(three).status == IntersectionStatus::Unbounded);
}

TEST_CASE("redundant and repeated constraints do not change the polygon") {
  const FieldPtr f = make_field(4, 5);
  auto hs = unit_square(f);
  const ConvexPolygon base = intersect_halfplanes(hs).polygon;
  hs.push_back(hs[0]);
  // Im(w) > -5 is implied
  hs.push_back(make_halfplane(0, CycloNum::constant(f, 5) * i_unit(f), '+'));
  // a rotated half-plane that only touches a corner: Im(lambda w + ...) is loose
  hs.push_back(make_halfplane(f->lambda_exponent(), CycloNum::constant(f, 10) * i_unit(f), '+'));
  const HalfPlaneIntersection r = intersect_halfplanes(hs);
  REQUIRE(r.status == IntersectionStatus::Bounded);
  CHECK(same_polygon(r.polygon, base));
}

TEST_CASE("intersection does not depend on constraint order") {
  const GoldenContext g = golden_context();
  const Tile t = tile_from_seed(pentagon_center(g, 2), 10000);
  std::vector<HalfPlane> hs = itinerary_constraints(g.field, t.word.word, t.ell * static_cast<std::uint64_t>(t.k));
  std::mt19937_64 rng(31);
  for (int trial = 0; trial < 5; ++trial) {
    std::shuffle(hs.begin(), hs.end(), rng);
    const HalfPlaneIntersection r = intersect_halfplanes(hs);
    REQUIRE(r.status == IntersectionStatus::Bounded);
    CHECK(same_polygon(r.polygon, t.polygon));
    CHECK(r.polygon.vertices == t.polygon.vertices);
  }
}

TEST_CASE("every vertex lies on its two edge lines and inside every constraint") {
  const GoldenContext g = golden_context();
  const Tile t = tile_from_seed(pentagon_center(g, 1), 10000);
  const std::size_t n = t.polygon.size();
  REQUIRE(t.polygon.edges.size() == n);
  for (std::size_t i = 0; i < n; ++i) {
    CHECK(line_side(t.polygon.edges[i], t.polygon.vertices[i]) == Sign::Zero);
    CHECK(line_side(t.polygon.edges[i], t.polygon.vertices[(i + 1) % n]) == Sign::Zero);
  }
  for (const HalfPlane& h : itinerary_constraints(g.field, t.word.word, t.ell * 5)) {
    CHECK(strictly_inside(h, t.center));
    for (const CycloNum& v : t.polygon.vertices) CHECK(line_side(h.line, v) != (h.side == '+' ? Sign::Negative : Sign::Positive));
  }
}

TEST_CASE("line intersections") {
  std::mt19937_64 rng(37);
  const FieldPtr f = make_field(3, 7);
  const int half = f->conductor() / 2;
  for (int t = 0; t < 60; ++t) {
    const CycloNum a = testsupport::random_point(f, rng);
    const CycloNum b = testsupport::random_point(f, rng);
    const long d1 = static_cast<long>(rng() % static_cast<unsigned>(half));
    const long d2 = static_cast<long>(rng() % static_cast<unsigned>(half));
    const ExactLine l1 = line_with_direction(a, d1);
    const ExactLine l2 = line_with_direction(b, d2);
    CHECK(line_side(l1, a) == Sign::Zero);
    CHECK(line_side(l1, a + CycloNum::zeta_pow(f, d1) * Rational(3)) == Sign::Zero);
    const auto x = line_intersection(l1, l2);
    if (d1 == d2) {
      CHECK(!x);
      continue;
    }
    REQUIRE(x);
    CHECK(line_side(l1, *x) == Sign::Zero);
    CHECK(line_side(l2, *x) == Sign::Zero);
  }
  const CycloNum p = pt(f, 1, 2), q = p + CycloNum::zeta_pow(f, 5) * Rational(7, 3);
  const ExactLine l = line_through(p, q);
  CHECK(line_side(l, (p + q) * Rational(1, 2)) == Sign::Zero);
  CHECK(line_through(q, p) == l);
  CHECK_THROWS(line_through(pt(f, 1, 2), pt(f, -3, 5)));
}

TEST_CASE("canonical lines compare equal") {
  const FieldPtr f = make_field(4, 5);
  const CycloNum a = pt(f, Rational(1, 3), 2);
  const CycloNum v = CycloNum::zeta_pow(f, 7);
  CHECK(line_through(a, a + v) == line_through(a - v * Rational(5), a + v * Rational(2)));
  CHECK(line_with_direction(a, 7) == line_with_direction(a + v, 7 + f->conductor() / 2));
}

TEST_CASE("direction classes") {
  for (auto [p, q] : {std::pair{4, 5}, {11, 12}, {3, 7}}) {
    const FieldPtr f = make_field(p, q);
    const int m = f->conductor();
    for (int k = 0; k < m; ++k) {
      const CycloNum v = CycloNum::zeta_pow(f, k) * Rational(-7, 3);
      CHECK(direction_class(v) == k % (m / 2));
    }
    CHECK(direction_class(pt(f, 1, 3)) == -1);
    CHECK(direction_class(CycloNum(f)) == -1);
    // theta: directions of lambda^t up to sign
    const CycloNum lam = lambda(f);
    for (int k = 0; k < m / 2; ++k) {
      bool brute = false;
      for (int t = 0; t < q; ++t) {
        const CycloNum u = power(lam, static_cast<unsigned long>(t));
        const CycloNum z = CycloNum::zeta_pow(f, k);
        brute = brute || z == u || z == -u;
      }
      CHECK(direction_in_theta(*f, k) == brute);
    }
  }
}

TEST_CASE("segment clipping and incidence") {
  std::mt19937_64 rng(41);
  const FieldPtr f = make_field(4, 5);
  const Box box{Rational(-1), Rational(-1), Rational(2), Rational(3, 2)};
  int clipped = 0;
  for (int t = 0; t < 80; ++t) {
    const CycloNum a = testsupport::random_point(f, rng, 3);
    const int dir = static_cast<int>(rng() % 10);
    const CycloNum b = a + CycloNum::zeta_pow(f, dir) * testsupport::random_rational(rng, 40, 4);
    if (a == b) continue;
    const ExactSegment s{a, b, 0, -1};
    const auto c = clip_segment_to_box(s, box);
    const CycloNum mid = midpoint(s);
    CHECK(point_on_segment(mid, s));
    CHECK(point_on_segment(a, s));
    if (box.contains(mid)) CHECK(c);
    if (!c) continue;
    ++clipped;
    CHECK(box.contains(c->a));
    CHECK(box.contains(c->b));
    CHECK(point_on_segment(c->a, s));
    CHECK(point_on_segment(c->b, s));
    CHECK(c->direction == dir % 10);
  }
  CHECK(clipped > 10);
  const ExactSegment s{pt(f, 0, 0), pt(f, 2, 0), 0, 0};
  CHECK(!point_on_segment(pt(f, 3, 0), s));
  CHECK(!point_on_segment(pt(f, 1, Rational(1, 100)), s));
  CHECK(point_on_segment(pt(f, 2, 0), s));
}

TEST_CASE("regularity predicate") {
  const FieldPtr f = make_field(4, 5);
  ConvexPolygon rect;
  rect.vertices = {pt(f, 0, 0), pt(f, 2, 0), pt(f, 2, 1), pt(f, 0, 1)};
  CHECK(!polygon_is_regular(rect));
  CHECK(is_strictly_convex(rect));
  ConvexPolygon penta;
  for (int k = 0; k < 5; ++k) penta.vertices.push_back(CycloNum::zeta_pow(f, 4 * k) + pt(f, 1, 1));
  CHECK(polygon_is_regular(penta));
  ConvexPolygon rotated = penta;
  std::rotate(rotated.vertices.begin(), rotated.vertices.begin() + 2, rotated.vertices.end());
  CHECK(same_polygon(penta, rotated));
  canonicalize(rotated);
  ConvexPolygon again = penta;
  canonicalize(again);
  CHECK(rotated.vertices == again.vertices);
}
