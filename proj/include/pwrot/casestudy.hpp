#pragma once

// The golden-ratio renormalization at rotation 4/5 and the irregular hexagon
// at rotation 11/12.

#include <array>
#include <cstdint>
#include <optional>
#include <string_view>
#include <vector>

#include "pwrot/tiles.hpp"

namespace pwrot {

struct GoldenContext {
  FieldPtr field;  // (p, q) = (4, 5)
  CycloNum phi;
  CycloNum sqrt_two_plus_phi;
  CycloNum r_scale;  // 2 phi - 3 = phi^-3
  CycloNum P0, Q, R, S;
};

GoldenContext golden_context();

/// r(x, y) = ((2 phi - 3) x + 2 - 2 phi, (2 phi - 3) y). Requires the 4/5 field.
CycloNum golden_rescale(const CycloNum& z);
/// r^n(P0).
CycloNum pentagon_center(const GoldenContext& g, int n);

struct PeriodRow {
  int n = 0;
  CycloNum point;
  std::optional<std::uint64_t> period;
  std::uint64_t steps = 0;
  std::size_t line_touches = 0;
};

/// Exact minimal periods of P0..PN; rows run in parallel.
std::vector<PeriodRow> pentagon_center_periods(int max_n, std::uint64_t budget, unsigned threads = 0);

struct ReturnEntry {
  std::uint64_t index = 0;
  CycloNum value;
  bool integer_phi_form = false;  // value = a + b*phi with a, b integers
};

/// Every index <= N at which the orbit of Q = -phi is on the real axis.
std::vector<ReturnEntry> q_orbit_returns(std::uint64_t max_n);

/// Checks of the golden constants: fixed point, r_scale, r(Q) = Q, r(P0) has
/// period 7, r(S) on segment QS, the triangle map.
VerificationReport golden_checks();

struct HexagonContext {
  FieldPtr field;  // (p, q) = (11, 12)
  CycloNum sqrt3;
  std::array<CycloNum, 6> vertices;
  CycloNum center;
};

HexagonContext hexagon_context();

/// Period of C, tile of C equals H, irregularity, the 20 images, and that no
/// open image meets the real axis.
VerificationReport hexagon_case();

/// Named constants P<n>, Q, R, S, C, H.v1..H.v6 built in `field`; nullopt for an
/// unknown name. Throws ParameterError when the field lacks the needed surds.
std::optional<CycloNum> named_point(const FieldPtr& field, std::string_view name);

}  // namespace pwrot
