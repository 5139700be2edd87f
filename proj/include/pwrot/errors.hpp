#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace pwrot {

/// Invalid parameters (bad rotation fraction, wrong context, bad budget).
class ParameterError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Mathematical domain violations: inverse of zero, sign of a non-real element.
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// An orbit touched the critical line where a symbolic word was required.
class CriticalLineHit : public std::runtime_error {
 public:
  CriticalLineHit(std::size_t index, const std::string& what)
      : std::runtime_error(what), index_(index) {}
  std::size_t index() const noexcept { return index_; }

 private:
  std::size_t index_;
};

/// Iteration budget ran out before the requested event.
class BudgetExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A checked mathematical property failed on computed data.
class Falsified : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class ParseError : public std::runtime_error {
 public:
  ParseError(std::size_t position, const std::string& what)
      : std::runtime_error(what + " at position " + std::to_string(position)),
        position_(position) {}
  std::size_t position() const noexcept { return position_; }

 private:
  std::size_t position_;
};

}  // namespace pwrot
