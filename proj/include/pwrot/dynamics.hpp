#pragma once

// The piecewise rotation F(z) = lambda * (z - H(z)), H = +1 on Im z >= 0 and
// -1 below, together with its symbolic coding.

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "pwrot/cyclo.hpp"

namespace pwrot {

enum class Address { Plus, Minus, OnLine };

char address_char(Address a);

/// Finite word over {'+', '-'}; when `periodic` the word is one block of the
/// infinite repetition and `period` its minimal shift period.
struct Itinerary {
  std::string word;
  bool periodic = false;
  std::size_t period = 0;
};

/// w -> lambda^power * w + offset.
struct AffineMap {
  int power = 0;  // modulo q
  CycloNum offset;

  static AffineMap identity(const FieldPtr& field);
  /// One branch of F: symbol '+' gives lambda*w - lambda, '-' gives lambda*w + lambda.
  static AffineMap branch(const FieldPtr& field, char symbol);

  const FieldPtr& field() const { return offset.field(); }
  CycloNum operator()(const CycloNum& w) const;
  /// Linear part lambda^power.
  CycloNum linear() const;

  friend bool operator==(const AffineMap& a, const AffineMap& b) {
    return a.power == b.power && a.offset == b.offset;
  }
};

/// second o first.
AffineMap compose(const AffineMap& second, const AffineMap& first);

struct OrbitRecord {
  CycloNum start;
  std::optional<std::uint64_t> period;
  std::vector<std::pair<std::uint64_t, CycloNum>> iterates_on_line;
  std::uint64_t budget_used = 0;
};

CycloNum step(const CycloNum& z);
CycloNum inverse_step(const CycloNum& z);
/// The branch map for `symbol` regardless of where z lies.
CycloNum branch_step(const CycloNum& z, char symbol);

Address address(const CycloNum& z);

/// [z, F(z), ..., F^n(z)].
std::vector<CycloNum> orbit(const CycloNum& z, std::size_t n);

/// Streams F^0(z) .. F^n(z) with their addresses; stop early by returning false.
void for_each_iterate(const CycloNum& z, std::uint64_t n,
                      const std::function<bool(std::uint64_t, const CycloNum&, Address)>& visit);

/// First exact return to z within `budget` steps, plus every line touch seen.
/// With stop_at_line the search ends at the first touch.
OrbitRecord minimal_period(const CycloNum& z, std::uint64_t budget, bool stop_at_line = false);

/// Length-n address word; throws CriticalLineHit when an iterate is on the line.
Itinerary itinerary(const CycloNum& z, std::size_t n);

/// Minimal cyclic shift period of a full-period word.
std::size_t itinerary_period(std::string_view word);
std::size_t itinerary_period(const Itinerary& it);

/// Composition of branch maps along `word`, first symbol applied first.
AffineMap affine_along(const FieldPtr& field, std::string_view word);

/// Fixed point of G; throws DomainError when lambda^power = 1.
CycloNum rotation_center(const AffineMap& g);

/// Multiplicative order of lambda^ell: q / gcd(ell, q).
int rotation_order(int q, std::uint64_t ell);

/// Lexicographically least rotation of a cyclic word and its shift.
std::pair<std::string, std::size_t> least_rotation(std::string_view word);

}  // namespace pwrot
