#include <doctest.h>

#include "pwrot/casestudy.hpp"
#include "pwrot/errors.hpp"
#include "pwrot/pointexpr.hpp"
#include "pwrot/render.hpp"
#include "support.hpp"

using namespace pwrot;

namespace {

std::size_t error_position(const FieldPtr& f, const char* text) {
  try {
    (void)parse_point(f, text);
  } catch (const ParseError& e) {
    return e.position();
  }
  FAIL("no parse error for " << text);
  return 0;
}

}  // namespace

TEST_CASE("coordinate pairs and arithmetic") {
  const FieldPtr f = make_field(4, 5);
  CHECK(parse_point(f, "(1/2, -3)") == embed_rational_point(f, Rational(1, 2), -3));
  CHECK(parse_point(f, "(0,0)") == CycloNum(f));
  CHECK(parse_point(f, "2*i - 1") == embed_rational_point(f, -1, 2));
  CHECK(parse_point(f, "1.25") == CycloNum::constant(f, Rational(5, 4)));
  CHECK(parse_point(f, "-phi") == -golden_ratio(f));
  CHECK(parse_point(f, "phi^2 - phi") == CycloNum::constant(f, 1));
  CHECK(parse_point(f, "phi^-1") == golden_ratio(f) - CycloNum::constant(f, 1));
  CHECK(parse_point(f, "lambda^5") == CycloNum::constant(f, 1));
  CHECK(parse_point(f, "z^20") == CycloNum::constant(f, 1));
  CHECK(parse_point(f, "sqrt(5)") == golden_ratio(f) * Rational(2) - CycloNum::constant(f, 1));
  CHECK(parse_point(f, "sqrt(9/4)") == CycloNum::constant(f, Rational(3, 2)));
  CHECK(parse_point(f, "sqrt(2+phi)") == sqrt_two_plus_phi(f));
  CHECK(parse_point(f, "(1 + 2) * (3 - 1) / 4") == CycloNum::constant(f, Rational(3, 2)));
  CHECK(parse_point(f, "[1, 0, 1/2]") == CycloNum(f, {Rational(1), Rational(0), Rational(1, 2)}));
}

TEST_CASE("named constants") {
  const FieldPtr g = make_field(4, 5);
  CHECK(parse_point(g, "Q") == golden_context().Q);
  CHECK(parse_point(g, "P1") == pentagon_center(golden_context(), 1));
  CHECK(parse_point(g, "(1/2, sqrt(2+phi)^3/10)") == golden_context().P0);
  const FieldPtr h = make_field(11, 12);
  CHECK(parse_point(h, "C") == hexagon_context().center);
  CHECK(parse_point(h, "(sqrt3/3 + 3/2, sqrt3/6)") == hexagon_context().center);
  CHECK(parse_point(h, "H.v2") == hexagon_context().vertices[1]);
}

TEST_CASE("printed forms parse back to the same element") {
  std::mt19937_64 rng(59);
  for (auto [p, q] : {std::pair{4, 5}, {11, 12}, {3, 7}}) {
    const FieldPtr f = make_field(p, q);
    for (int t = 0; t < 30; ++t) {
      const CycloNum a = testsupport::random_element(f, rng);
      CHECK(parse_point(f, to_string(a)) == a);
      if (f->conductor() % 20 == 0) CHECK(parse_point(f, format_golden(a)) == a);
      if (f->conductor() % 12 == 0) {
        const CycloNum r = real_part(a);
        CHECK(parse_point(f, format_sqrt3(a)) == a);
        CHECK(parse_point(f, format_sqrt3(r)) == r);
      }
    }
  }
}

TEST_CASE("parse errors carry positions") {
  const FieldPtr f = make_field(4, 5);
  CHECK(error_position(f, "1 + ") == 4);
  CHECK(error_position(f, "(1, 2") == 5);
  CHECK(error_position(f, "1 + foo") == 4);
  CHECK(error_position(f, "(i, 2)") == 1);
  CHECK(error_position(f, "(1, i)") == 4);
  CHECK(error_position(f, "1/0") == 2);
  CHECK(error_position(f, "sqrt(7)") == 5);
  CHECK(error_position(f, "[1, i]") == 4);
  CHECK(error_position(f, "[1,2,3,4,5,6,7,8,9]") == 0);
  CHECK(error_position(f, "2 $") == 2);
  CHECK(error_position(f, "C") == 0);
  CHECK(error_position(make_field(11, 12), "phi") == 0);
}

TEST_CASE("rotation fractions, rationals and boxes") {
  CHECK(parse_alpha("4/5") == std::pair{4, 5});
  CHECK(parse_alpha("11/12") == std::pair{11, 12});
  CHECK_THROWS_AS(parse_alpha("4"), ParseError);
  CHECK_THROWS_AS(parse_alpha("4/x"), ParseError);
  CHECK_THROWS_AS(parse_alpha("a/5"), ParseError);
  CHECK(parse_rational("-3/4") == Rational(-3, 4));
  CHECK(parse_rational("0.5") == Rational(1, 2));
  CHECK_THROWS_AS(parse_rational("i"), ParseError);
  const Box b = parse_box("-3,-2,3,7/2");
  CHECK(b.x0 == -3);
  CHECK(b.y1 == Rational(7, 2));
  CHECK_THROWS_AS(parse_box("1,2,3"), ParseError);
  CHECK_THROWS_AS(parse_box("3,0,1,1"), ParseError);
  try {
    (void)parse_box("0,0,x,1");
    FAIL("expected a parse error");
  } catch (const ParseError& e) {
    CHECK(e.position() == 4);
  }
}
