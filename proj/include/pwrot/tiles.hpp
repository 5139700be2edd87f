#pragma once

// Regular-set tiles: the itinerary cell of a periodic seed as an exact convex
// polygon, its verification, and grid scans that collect tiles.

#include <cstdint>
#include <map>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "pwrot/dynamics.hpp"
#include "pwrot/geometry.hpp"

namespace pwrot {

struct Tile {
  ConvexPolygon polygon;
  Itinerary word;  // minimal block, word.period == ell
  std::uint64_t ell = 0;
  int k = 1;
  CycloNum center;
  CycloNum seed;
  std::uint64_t seed_period = 0;
  bool rotational = true;  // false when lambda^ell = 1 and center is the vertex centroid

  std::size_t sides() const { return polygon.size(); }
};

/// Extracts the tile of a periodic seed. Throws BudgetExceeded, CriticalLineHit
/// (seed orbit meets the line) or Falsified (empty or unbounded cell).
Tile tile_from_seed(const CycloNum& z, std::uint64_t budget);

/// The k*ell constraints cutting out the tile of `block`.
std::vector<HalfPlane> itinerary_constraints(const FieldPtr& field, std::string_view block, std::uint64_t count);

/// Tile polygon images under the branch maps along the block, j = 0..ell.
std::vector<ConvexPolygon> tile_images(const Tile& t);

struct CheckResult {
  std::string name;
  bool pass = false;
  std::string detail;
};

struct VerificationReport {
  std::vector<CheckResult> checks;
  bool passed() const;
  void add(std::string name, bool pass, std::string detail = {});
};

/// Component permutation, return-map rotation, center period and interior
/// sample periods. Samples are positive-weight vertex combinations drawn from
/// an RNG seeded with `rng_seed`.
VerificationReport verify_theorem_A(const Tile& t, int samples, std::uint64_t rng_seed = 1);

/// Side bound, slope census against the rotation directions, and the
/// regular / 2q-gon dichotomy when gcd(ell, q) = 1.
VerificationReport verify_theorem_B(const Tile& t);

/// Every vertex meets the line within k*ell steps.
VerificationReport verify_boundary_critical(const Tile& t);

/// Random interior point of the polygon with small-denominator weights.
CycloNum interior_sample(const ConvexPolygon& poly, std::mt19937_64& rng);

/// Distinct edge direction classes, each a zeta_m exponent in [0, m/2).
std::vector<int> slope_census(const ConvexPolygon& poly);

enum class SampleKind { Periodic, OnCritical, BudgetExceeded };

struct ScanSample {
  Rational x, y;
  SampleKind kind = SampleKind::BudgetExceeded;
  std::optional<std::uint64_t> period;
  std::optional<std::uint64_t> line_index;
  int tile = -1;  // inventory index for periodic samples
};

struct InventoryEntry {
  Tile tile;
  std::string key;
  std::size_t multiplicity = 0;
};

struct ScanReport {
  Box box;
  Rational step;
  std::uint64_t budget = 0;
  std::vector<ScanSample> samples;
  std::vector<InventoryEntry> inventory;
  std::map<std::uint64_t, std::size_t> histogram;  // period -> sample count
  std::size_t on_critical = 0;
  std::size_t exhausted = 0;
};

/// Grid scan over box with spacing `step`. threads = 0 uses the hardware count.
/// Tiles are collected for periodic samples when `collect_tiles` is set.
ScanReport scan_region(const FieldPtr& field, const Box& box, const Rational& step, std::uint64_t budget,
                       bool collect_tiles = true, unsigned threads = 0);

}  // namespace pwrot
