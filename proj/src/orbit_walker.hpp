#pragma once

// Iteration engine shared by the period search, scans and case studies.
//
// While the scaled coordinates fit, the orbit is carried as an integer
// vector c with z = (sum c_j zeta^j) / D for a fixed D: multiplication by
// lambda is an integer matrix and the translation by H(z) only touches c_0.
// Overflow switches to exact rational field arithmetic from the current point.

#include <cstdint>
#include <optional>
#include <vector>

#include "pwrot/cyclo.hpp"

namespace pwrot::detail {

class OrbitWalker {
 public:
  explicit OrbitWalker(const CycloNum& start);

  /// Exact sign of Im of the current point.
  Sign imag_sign();
  /// Apply F once.
  void advance();
  bool at_start() const;
  CycloNum current() const;
  bool on_integer_path() const { return fast_; }

 private:
  bool try_fast_step(Sign s);
  void leave_fast_path();

  FieldPtr field_;
  CycloNum start_;
  CycloNum slow_;  // current point when !fast_

  bool fast_ = false;
  std::size_t d_ = 0;
  std::int64_t denom_ = 1;
  mpz_class denom_mpz_;
  std::vector<std::int64_t> cur_;
  std::vector<std::int64_t> start_ints_;
  std::vector<std::int64_t> matrix_;  // row-major d x d, multiplication by lambda
  std::vector<std::int64_t> tmp_;
  std::vector<std::int64_t> next_;
  std::optional<Sign> cached_sign_;
};

}  // namespace pwrot::detail
