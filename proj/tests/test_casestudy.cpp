#include <doctest.h>

#include "pwrot/casestudy.hpp"
#include "pwrot/errors.hpp"
#include "support.hpp"

using namespace pwrot;

TEST_CASE("golden constants") {
  const VerificationReport r = golden_checks();
  for (const CheckResult& c : r.checks) {
    CAPTURE(c.name);
    CHECK(c.pass);
  }
  const GoldenContext g = golden_context();
  CHECK(step(g.P0) == g.P0);
  CHECK(golden_rescale(g.Q) == g.Q);
  CHECK(g.r_scale * power(g.phi, 3) == CycloNum::constant(g.field, 1));
}

TEST_CASE("rescaling contracts distances by phi^-3") {
  const GoldenContext g = golden_context();
  std::mt19937_64 rng(53);
  for (int t = 0; t < 30; ++t) {
    const CycloNum a = testsupport::random_point(g.field, rng);
    const CycloNum b = testsupport::random_point(g.field, rng);
    CHECK(testsupport::norm2(golden_rescale(a) - golden_rescale(b)) == g.r_scale * g.r_scale * testsupport::norm2(a - b));
  }
  CHECK_THROWS_AS(golden_rescale(CycloNum::constant(make_field(3, 7), 1)), ParameterError);
}

TEST_CASE("pentagon centers") {
  const GoldenContext g = golden_context();
  CHECK(pentagon_center(g, 0) == g.P0);
  CHECK(pentagon_center(g, 2) == golden_rescale(golden_rescale(g.P0)));
  const std::vector<PeriodRow> rows = pentagon_center_periods(3, 100000);
  REQUIRE(rows.size() == 4);
  const std::uint64_t expected[] = {1, 7, 38, 232};
  for (int n = 0; n < 4; ++n) {
    CHECK(rows[static_cast<std::size_t>(n)].n == n);
    CHECK(rows[static_cast<std::size_t>(n)].period == std::optional<std::uint64_t>(expected[n]));
    CHECK(rows[static_cast<std::size_t>(n)].line_touches == 0);
    CHECK(sign_of_im(rows[static_cast<std::size_t>(n)].point) == Sign::Positive);
  }
  const std::vector<PeriodRow> short_budget = pentagon_center_periods(3, 100);
  CHECK(!short_budget[3].period);
}

TEST_CASE("returns of Q to the real axis") {
  const std::vector<ReturnEntry> r = q_orbit_returns(220);
  std::vector<std::uint64_t> idx;
  for (const ReturnEntry& e : r) {
    idx.push_back(e.index);
    CHECK(e.integer_phi_form);
    CHECK(is_real(e.value));
  }
  CHECK(idx == std::vector<std::uint64_t>{0, 3, 10, 15, 38, 48, 53, 78, 83, 93, 220});
  CHECK(q_orbit_returns(0).size() == 1);
}

TEST_CASE("hexagon case") {
  const VerificationReport r = hexagon_case();
  CHECK(r.checks.size() == 6);
  for (const CheckResult& c : r.checks) {
    CAPTURE(c.name);
    CHECK(c.pass);
  }
  const HexagonContext h = hexagon_context();
  CHECK(minimal_period(h.center, 100).period == std::optional<std::uint64_t>(20));
}

TEST_CASE("named points") {
  const FieldPtr g = make_field(4, 5);
  CHECK(named_point(g, "Q") == golden_context().Q);
  CHECK(named_point(g, "P3") == pentagon_center(golden_context(), 3));
  CHECK(!named_point(g, "nothing"));
  CHECK_THROWS_AS(named_point(g, "C"), ParameterError);
  const FieldPtr h = make_field(11, 12);
  CHECK(named_point(h, "C") == hexagon_context().center);
  CHECK(named_point(h, "H.v1") == hexagon_context().vertices[0]);
  CHECK_THROWS_AS(named_point(h, "Q"), ParameterError);
}
