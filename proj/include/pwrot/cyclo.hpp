#pragma once

// Exact arithmetic in the cyclotomic field Q(zeta_m), m = lcm(4, q).
//
// Elements are stored in the power basis 1, z, ..., z^(d-1) with z = zeta_m
// and d = phi(m), reduced modulo the m-th cyclotomic polynomial. The numeric
// embedding used for signs and plotting is z = exp(2*pi*i/m).

#include <array>
#include <complex>
#include <cstddef>
#include <memory>
#include <string>
#include <vector>

#include <gmpxx.h>

#include "pwrot/bigfloat.hpp"

namespace pwrot {

using Rational = mpq_class;
using IntPoly = std::vector<long>;  // index j holds the coefficient of x^j

long euler_phi(long n);

/// Phi_n, by exact division of x^n - 1 by Phi_e for every proper divisor e.
IntPoly cyclotomic_polynomial(int n);

enum class Sign : int { Negative = -1, Zero = 0, Positive = 1 };

inline Sign operator-(Sign s) { return static_cast<Sign>(-static_cast<int>(s)); }
char sign_char(Sign s);

class FieldContext {
 public:
  FieldContext(int p, int q);

  int p() const { return p_; }
  int q() const { return q_; }
  int conductor() const { return m_; }
  int degree() const { return d_; }
  const IntPoly& cyclotomic() const { return phi_m_; }

  /// lambda = zeta^lambda_exponent(); i = zeta^i_exponent().
  int lambda_exponent() const { return lambda_exp_; }
  int i_exponent() const { return m_ / 4; }

  /// Reduced power-basis coefficients of zeta^k (k taken mod m).
  const std::vector<long>& zeta_power(long k) const;

  /// Coefficients of 1/(1 - zeta^e); e must not be 0 mod m.
  const std::vector<Rational>& inv_one_minus_zeta(long e) const;

  long double cos_table(int j) const { return cos_[static_cast<std::size_t>(j)]; }
  long double sin_table(int j) const { return sin_[static_cast<std::size_t>(j)]; }

  /// Rotation fraction as text, e.g. "4/5".
  std::string alpha_string() const;

 private:
  int p_;
  int q_;
  int m_;
  int d_;
  int lambda_exp_;
  IntPoly phi_m_;
  std::vector<std::vector<long>> zeta_powers_;
  std::vector<std::vector<Rational>> inv_one_minus_;
  std::vector<long double> cos_;
  std::vector<long double> sin_;
};

using FieldPtr = std::shared_ptr<const FieldContext>;

/// Field for the rotation angle 2*pi*p/q. Requires q >= 3, 0 < p < q, gcd(p,q) = 1.
FieldPtr make_field(int p, int q);

/// An element of Q(zeta_m); canonical coefficient vector of length d.
class CycloNum {
 public:
  CycloNum() = default;
  explicit CycloNum(FieldPtr field);
  /// Takes any number of power-basis coefficients and reduces them.
  CycloNum(FieldPtr field, std::vector<Rational> coeffs);

  static CycloNum constant(const FieldPtr& field, const Rational& value);
  static CycloNum zeta_pow(const FieldPtr& field, long k);

  const FieldPtr& field() const { return field_; }
  const std::vector<Rational>& coeffs() const { return c_; }
  bool valid() const { return static_cast<bool>(field_); }
  bool is_zero() const;
  std::size_t hash() const;

  CycloNum& operator+=(const CycloNum& o);
  CycloNum& operator-=(const CycloNum& o);
  CycloNum& operator*=(const CycloNum& o);
  CycloNum& operator*=(const Rational& r);

  friend CycloNum operator+(CycloNum a, const CycloNum& b) { return a += b; }
  friend CycloNum operator-(CycloNum a, const CycloNum& b) { return a -= b; }
  friend CycloNum operator*(const CycloNum& a, const CycloNum& b);
  friend CycloNum operator*(CycloNum a, const Rational& r) { return a *= r; }
  friend CycloNum operator*(const Rational& r, CycloNum a) { return a *= r; }
  friend CycloNum operator/(const CycloNum& a, const CycloNum& b);
  friend CycloNum operator-(CycloNum a);
  friend bool operator==(const CycloNum& a, const CycloNum& b);
  friend bool operator!=(const CycloNum& a, const CycloNum& b) { return !(a == b); }

 private:
  void check_same_field(const CycloNum& o) const;

  FieldPtr field_;
  std::vector<Rational> c_;
};

struct CycloHash {
  std::size_t operator()(const CycloNum& a) const { return a.hash(); }
};

CycloNum lambda(const FieldPtr& field);
CycloNum i_unit(const FieldPtr& field);
CycloNum embed_rational_point(const FieldPtr& field, const Rational& x, const Rational& y);

/// Multiplication by zeta^k without a full polynomial product.
CycloNum mul_zeta_power(const CycloNum& a, long k);
CycloNum power(CycloNum base, unsigned long exponent);
CycloNum inverse(const CycloNum& a);
CycloNum conj(const CycloNum& a);
CycloNum real_part(const CycloNum& a);
CycloNum imag_part(const CycloNum& a);
bool is_real(const CycloNum& a);

/// Exact sign of a real element; throws DomainError when a is not real.
Sign sign_of_real(const CycloNum& a);
/// Exact signs of Re(a) and Im(a) for any element.
Sign sign_of_re(const CycloNum& a);
Sign sign_of_im(const CycloNum& a);

/// Enclosure of the embedding of a, each side of width <= 2^(1-bits).
ComplexInterval approx(const CycloNum& a, int bits);
/// Nearest double shadow of the embedding (plotting only).
std::complex<double> to_complex(const CycloNum& a);

/// "c0 + c1*z + c2*z^2 + ..." with z = zeta_m.
std::string to_string(const CycloNum& a);

/// Rational coordinates of a in the given basis; throws DomainError when a is
/// outside the span.
std::vector<Rational> coordinates_in_basis(const std::vector<CycloNum>& basis, const CycloNum& a);

// Named surds. Each requires the conductor to contain the needed root of unity.
CycloNum golden_ratio(const FieldPtr& field);         // (1+sqrt5)/2, needs 5 | m
CycloNum sqrt_two_plus_phi(const FieldPtr& field);    // needs 20 | m
CycloNum sqrt_three(const FieldPtr& field);           // needs 12 | m

/// Coordinates (a,b,c,d,e,f,g,h) with
/// x = a + b*phi + (c + d*phi)*s + i*(e + f*phi + (g + h*phi)*s), s = sqrt(2+phi).
std::array<Rational, 8> golden_coordinates(const CycloNum& a);
/// "a + b*phi + (c + d*phi)*sqrt(2+phi)*i" style text (zero groups omitted).
std::string format_golden(const CycloNum& a);

/// Coordinates (a,b,c,d) with x = a + b*sqrt3 + i*(c + d*sqrt3).
std::array<Rational, 4> sqrt3_coordinates(const CycloNum& a);
std::string format_sqrt3(const CycloNum& a);

std::string rational_string(const Rational& r);

}  // namespace pwrot
