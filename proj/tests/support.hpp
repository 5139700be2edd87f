#pragma once

// Independent oracles and random generators shared by the test suites.

#include <cmath>
#include <complex>
#include <cstdint>
#include <numeric>
#include <random>
#include <vector>

#include "pwrot/cyclo.hpp"

namespace testsupport {

using pwrot::CycloNum;
using pwrot::FieldPtr;
using pwrot::Rational;

// Phi_n from its complex roots, coefficients rounded to integers.
inline std::vector<long> cyclotomic_from_roots(int n) {
  std::vector<std::complex<long double>> poly{1.0L};
  const long double two_pi = 2.0L * std::acos(-1.0L);
  for (int k = 1; k <= n; ++k) {
    if (std::gcd(k, n) != 1) continue;
    const std::complex<long double> root = std::polar(1.0L, two_pi * k / n);
    std::vector<std::complex<long double>> next(poly.size() + 1, 0.0L);
    for (std::size_t j = 0; j < poly.size(); ++j) {
      next[j + 1] += poly[j];
      next[j] -= root * poly[j];
    }
    poly = std::move(next);
  }
  std::vector<long> out;
  for (const auto& c : poly) out.push_back(std::lround(c.real()));
  return out;
}

// Schoolbook product of power-basis vectors reduced by long division by a
// monic integer polynomial.
inline std::vector<Rational> reduce_mod(std::vector<Rational> a, const std::vector<long>& modulus) {
  const std::size_t d = modulus.size() - 1;
  for (std::size_t top = a.size(); top-- > d;) {
    const Rational lead = a[top];
    if (lead == 0) continue;
    for (std::size_t j = 0; j <= d; ++j) a[top - d + j] -= lead * modulus[j];
  }
  a.resize(d);
  for (auto& c : a) c.canonicalize();
  return a;
}

inline std::vector<Rational> naive_product(const std::vector<Rational>& x, const std::vector<Rational>& y,
                                           const std::vector<long>& modulus) {
  std::vector<Rational> prod(x.size() + y.size(), Rational(0));
  for (std::size_t i = 0; i < x.size(); ++i)
    for (std::size_t j = 0; j < y.size(); ++j) prod[i + j] += x[i] * y[j];
  return reduce_mod(std::move(prod), modulus);
}

inline Rational random_rational(std::mt19937_64& rng, int num_range = 9, int max_den = 8) {
  std::uniform_int_distribution<int> num(-num_range, num_range);
  std::uniform_int_distribution<int> den(1, max_den);
  Rational r(num(rng), den(rng));
  r.canonicalize();
  return r;
}

inline CycloNum random_element(const FieldPtr& f, std::mt19937_64& rng) {
  std::vector<Rational> c;
  for (int j = 0; j < f->degree(); ++j) c.push_back(random_rational(rng));
  return CycloNum(f, std::move(c));
}

// Point with rational coordinates, i.e. x + i y.
inline CycloNum random_point(const FieldPtr& f, std::mt19937_64& rng, int range = 4) {
  return pwrot::embed_rational_point(f, random_rational(rng, range * 8, 8), random_rational(rng, range * 8, 8));
}

// |a|^2 as a field element.
inline CycloNum norm2(const CycloNum& a) { return a * pwrot::conj(a); }

}  // namespace testsupport
