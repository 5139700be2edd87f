#include "pwrot/cyclo.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <limits>
#include <numeric>
#include <sstream>

#include "pwrot/errors.hpp"

namespace pwrot {

namespace {

using QPoly = std::vector<Rational>;

void trim(QPoly& p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
}

// Polynomial long division over Q; b must be non-zero after trimming.
void divmod(QPoly a, const QPoly& b, QPoly& quot, QPoly& rem) {
  trim(a);
  quot.assign(a.size() >= b.size() ? a.size() - b.size() + 1 : 0, Rational(0));
  const Rational& lead = b.back();
  while (a.size() >= b.size()) {
    const std::size_t shift = a.size() - b.size();
    Rational f = a.back() / lead;
    quot[shift] = f;
    for (std::size_t j = 0; j < b.size(); ++j) a[shift + j] -= f * b[j];
    trim(a);
  }
  rem = std::move(a);
}

QPoly mul_poly(const QPoly& a, const QPoly& b) {
  if (a.empty() || b.empty()) return {};
  QPoly r(a.size() + b.size() - 1, Rational(0));
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
  }
  return r;
}

QPoly sub_poly(QPoly a, const QPoly& b) {
  if (a.size() < b.size()) a.resize(b.size(), Rational(0));
  for (std::size_t j = 0; j < b.size(); ++j) a[j] -= b[j];
  trim(a);
  return a;
}

// Inverse of a modulo an irreducible modulus, by the extended Euclidean algorithm.
QPoly inverse_mod(QPoly a, const QPoly& modulus) {
  trim(a);
  if (a.empty()) throw DomainError("inverse of zero field element");
  QPoly r0 = modulus, r1 = a;
  QPoly s0, s1{Rational(1)};
  while (!r1.empty()) {
    QPoly quot, rem;
    divmod(r0, r1, quot, rem);
    r0 = std::move(r1);
    r1 = std::move(rem);
    QPoly s2 = sub_poly(s0, mul_poly(quot, s1));
    s0 = std::move(s1);
    s1 = std::move(s2);
  }
  if (r0.size() != 1) throw DomainError("element is not invertible modulo the cyclotomic polynomial");
  const Rational c = r0[0];
  for (auto& v : s0) v /= c;
  QPoly quot, rem;
  divmod(s0, modulus, quot, rem);
  return rem;
}

long gcd_ll(long a, long b) { return std::gcd(a, b); }

enum class Trig { Cos, Sin };

long ceil_log2_abs(const Rational& r) {
  if (r == 0) return 0;
  return static_cast<long>(mpz_sizeinbase(r.get_num_mpz_t(), 2)) -
         static_cast<long>(mpz_sizeinbase(r.get_den_mpz_t(), 2)) + 1;
}

// Machine-precision enclosure. Returns Zero when the enclosure contains 0.
Sign filter_sign(const std::vector<Rational>& c, Trig trig, const FieldContext& f) {
  long double sum = 0.0L;
  long double abs_sum = 0.0L;
  for (std::size_t j = 0; j < c.size(); ++j) {
    if (c[j] == 0) continue;
    const long lg = ceil_log2_abs(c[j]);
    if (lg > 900 || lg < -900) return Sign::Zero;
    const long double cj = mpq_get_d(c[j].get_mpq_t());
    const long double t = trig == Trig::Cos ? f.cos_table(static_cast<int>(j)) : f.sin_table(static_cast<int>(j));
    sum += cj * t;
    abs_sum += std::fabs(cj);
  }
  constexpr long double eps_ld = std::numeric_limits<long double>::epsilon();
  const long double n = static_cast<long double>(c.size());
  // Conversion to double truncates (rel. 2^-52); tables, products and the sum
  // contribute at most (n + 4) unit roundoffs of long double each.
  const long double err = abs_sum * (std::ldexp(1.0L, -51) + (n + 4.0L) * eps_ld) * 2.0L +
                          std::numeric_limits<long double>::min();
  if (sum > err) return Sign::Positive;
  if (sum < -err) return Sign::Negative;
  return Sign::Zero;
}

// Ball enclosure at working precision prec: value in [mid - rad, mid + rad].
void ball_eval(const std::vector<Rational>& c, Trig trig, const FieldContext& f, mpfr_prec_t prec,
               BigFloat& mid, BigFloat& rad) {
  mid = BigFloat(prec);
  rad = BigFloat(prec);
  BigFloat pi(prec), ang(prec), t(prec), cj(prec), abs_sum(prec), ab(prec);
  mpfr_const_pi(pi.get(), MPFR_RNDN);
  mpfr_set_zero(abs_sum.get(), 1);
  Rational absval;
  for (std::size_t j = 0; j < c.size(); ++j) {
    if (c[j] == 0) continue;
    mpfr_mul_ui(ang.get(), pi.get(), 2 * static_cast<unsigned long>(j), MPFR_RNDN);
    mpfr_div_ui(ang.get(), ang.get(), static_cast<unsigned long>(f.conductor()), MPFR_RNDN);
    if (trig == Trig::Cos)
      mpfr_cos(t.get(), ang.get(), MPFR_RNDN);
    else
      mpfr_sin(t.get(), ang.get(), MPFR_RNDN);
    mpfr_set_q(cj.get(), c[j].get_mpq_t(), MPFR_RNDN);
    mpfr_mul(t.get(), t.get(), cj.get(), MPFR_RNDN);
    mpfr_add(mid.get(), mid.get(), t.get(), MPFR_RNDN);
    absval = abs(c[j]);
    mpfr_set_q(ab.get(), absval.get_mpq_t(), MPFR_RNDU);
    mpfr_add(abs_sum.get(), abs_sum.get(), ab.get(), MPFR_RNDU);
  }
  // angle: 3 roundings, cos/sin: 1, coefficient: 1, product: 1, sum: n-1.
  mpfr_mul_ui(rad.get(), abs_sum.get(), 32 + 2 * static_cast<unsigned long>(c.size()), MPFR_RNDU);
  mpfr_div_2si(rad.get(), rad.get(), prec, MPFR_RNDU);
}

Sign refine_sign(const std::vector<Rational>& c, Trig trig, const FieldContext& f) {
  BigFloat mid, rad, absmid;
  for (mpfr_prec_t prec = 64;; prec *= 2) {
    ball_eval(c, trig, f, prec, mid, rad);
    absmid = BigFloat(prec);
    mpfr_abs(absmid.get(), mid.get(), MPFR_RNDN);
    if (mpfr_greater_p(absmid.get(), rad.get())) return mid.sign() > 0 ? Sign::Positive : Sign::Negative;
  }
}

RealInterval to_interval(const BigFloat& mid, const BigFloat& rad) {
  RealInterval iv{BigFloat(mid.precision()), BigFloat(mid.precision())};
  mpfr_sub(iv.lo.get(), mid.get(), rad.get(), MPFR_RNDD);
  mpfr_add(iv.hi.get(), mid.get(), rad.get(), MPFR_RNDU);
  return iv;
}

std::string coeff_term(const Rational& c, const std::string& sym) {
  if (sym.empty()) return rational_string(c);
  if (c == 1) return sym;
  if (c == -1) return "-" + sym;
  return rational_string(c) + "*" + sym;
}

// "x + y*sym" with zero parts dropped; empty when both vanish.
std::string linear_text(const Rational& x, const Rational& y, const std::string& sym) {
  std::string out;
  if (x != 0) out = rational_string(x);
  if (y != 0) {
    if (out.empty())
      out = coeff_term(y, sym);
    else if (y < 0)
      out += " - " + coeff_term(-y, sym);
    else
      out += " + " + coeff_term(y, sym);
  }
  return out;
}

std::string join_groups(const std::vector<std::string>& groups) {
  std::string out;
  for (const auto& g : groups) {
    if (g.empty()) continue;
    if (!out.empty()) out += " + ";
    out += g;
  }
  return out.empty() ? "0" : out;
}

}  // namespace

std::string rational_string(const Rational& r) { return r.get_str(); }

char sign_char(Sign s) {
  switch (s) {
    case Sign::Negative: return '-';
    case Sign::Zero: return '0';
    case Sign::Positive: return '+';
  }
  return '?';
}

long euler_phi(long n) {
  long result = n;
  for (long pr = 2; pr * pr <= n; ++pr) {
    if (n % pr == 0) {
      while (n % pr == 0) n /= pr;
      result -= result / pr;
    }
  }
  if (n > 1) result -= result / n;
  return result;
}

IntPoly cyclotomic_polynomial(int n) {
  if (n < 1) throw ParameterError("cyclotomic_polynomial: n must be >= 1");
  IntPoly num(static_cast<std::size_t>(n) + 1, 0);
  num[0] = -1;
  num[static_cast<std::size_t>(n)] = 1;
  for (int e = 1; e < n; ++e) {
    if (n % e != 0) continue;
    const IntPoly div = cyclotomic_polynomial(e);
    // exact division by a monic polynomial
    IntPoly quot(num.size() - div.size() + 1, 0);
    for (std::size_t k = quot.size(); k-- > 0;) {
      const long f = num[k + div.size() - 1];
      quot[k] = f;
      for (std::size_t j = 0; j < div.size(); ++j) num[k + j] -= f * div[j];
    }
    num = std::move(quot);
  }
  return num;
}

FieldContext::FieldContext(int p, int q) : p_(p), q_(q) {
  if (q < 3) throw ParameterError("rotation denominator q must be >= 3");
  if (p <= 0 || p >= q) throw ParameterError("rotation numerator must satisfy 0 < p < q");
  if (gcd_ll(p, q) != 1) throw ParameterError("rotation fraction p/q must be in lowest terms");
  m_ = static_cast<int>(std::lcm(4, q));
  d_ = static_cast<int>(euler_phi(m_));
  lambda_exp_ = m_ / q_ * p_;
  phi_m_ = cyclotomic_polynomial(m_);

  const auto m = static_cast<std::size_t>(m_);
  const auto d = static_cast<std::size_t>(d_);
  zeta_powers_.assign(m, std::vector<long>(d, 0));
  zeta_powers_[0][0] = 1;
  for (std::size_t k = 1; k < m; ++k) {
    const auto& prev = zeta_powers_[k - 1];
    auto& cur = zeta_powers_[k];
    const long top = prev[d - 1];
    for (std::size_t j = 0; j < d; ++j) {
      cur[j] = (j > 0 ? prev[j - 1] : 0) - top * phi_m_[j];
    }
  }

  QPoly modulus(phi_m_.begin(), phi_m_.end());
  inv_one_minus_.assign(m, {});
  for (std::size_t e = 1; e < m; ++e) {
    QPoly a(d, Rational(0));
    a[0] = 1;
    for (std::size_t j = 0; j < d; ++j) a[j] -= zeta_powers_[e][j];
    QPoly inv = inverse_mod(a, modulus);
    inv.resize(d, Rational(0));
    inv_one_minus_[e] = std::move(inv);
  }

  cos_.resize(m);
  sin_.resize(m);
  BigFloat ang(256), val(256);
  for (std::size_t j = 0; j < m; ++j) {
    mpfr_const_pi(ang.get(), MPFR_RNDN);
    mpfr_mul_ui(ang.get(), ang.get(), 2 * j, MPFR_RNDN);
    mpfr_div_ui(ang.get(), ang.get(), m, MPFR_RNDN);
    mpfr_cos(val.get(), ang.get(), MPFR_RNDN);
    cos_[j] = mpfr_get_ld(val.get(), MPFR_RNDN);
    mpfr_sin(val.get(), ang.get(), MPFR_RNDN);
    sin_[j] = mpfr_get_ld(val.get(), MPFR_RNDN);
  }
}

const std::vector<long>& FieldContext::zeta_power(long k) const {
  long r = k % m_;
  if (r < 0) r += m_;
  return zeta_powers_[static_cast<std::size_t>(r)];
}

const std::vector<Rational>& FieldContext::inv_one_minus_zeta(long e) const {
  long r = e % m_;
  if (r < 0) r += m_;
  if (r == 0) throw DomainError("1 - zeta^e is zero for e = 0 mod m");
  return inv_one_minus_[static_cast<std::size_t>(r)];
}

std::string FieldContext::alpha_string() const { return std::to_string(p_) + "/" + std::to_string(q_); }

FieldPtr make_field(int p, int q) { return std::make_shared<const FieldContext>(p, q); }

// ---------------------------------------------------------------------------

namespace {

std::vector<Rational> reduce(const FieldContext& f, std::vector<Rational> c) {
  const auto d = static_cast<std::size_t>(f.degree());
  if (c.size() <= d) {
    c.resize(d, Rational(0));
    return c;
  }
  std::vector<Rational> out(c.begin(), c.begin() + static_cast<std::ptrdiff_t>(d));
  for (std::size_t k = d; k < c.size(); ++k) {
    if (c[k] == 0) continue;
    const auto& zp = f.zeta_power(static_cast<long>(k));
    for (std::size_t j = 0; j < d; ++j)
      if (zp[j] != 0) out[j] += c[k] * zp[j];
  }
  return out;
}

}  // namespace

CycloNum::CycloNum(FieldPtr field) : field_(std::move(field)) {
  c_.assign(static_cast<std::size_t>(field_->degree()), Rational(0));
}

CycloNum::CycloNum(FieldPtr field, std::vector<Rational> coeffs) : field_(std::move(field)) {
  for (auto& v : coeffs) v.canonicalize();
  c_ = reduce(*field_, std::move(coeffs));
}

CycloNum CycloNum::constant(const FieldPtr& field, const Rational& value) {
  CycloNum a(field);
  a.c_[0] = value;
  a.c_[0].canonicalize();
  return a;
}

CycloNum CycloNum::zeta_pow(const FieldPtr& field, long k) {
  CycloNum a(field);
  const auto& zp = field->zeta_power(k);
  for (std::size_t j = 0; j < zp.size(); ++j) a.c_[j] = zp[j];
  return a;
}

bool CycloNum::is_zero() const {
  return std::all_of(c_.begin(), c_.end(), [](const Rational& r) { return r == 0; });
}

std::size_t CycloNum::hash() const {
  std::size_t h = 1469598103934665603ULL;
  for (const auto& r : c_) {
    const std::size_t a = mpz_get_ui(r.get_num_mpz_t()) ^ (mpz_sgn(r.get_num_mpz_t()) < 0 ? 0x9e3779b9ULL : 0);
    const std::size_t b = mpz_get_ui(r.get_den_mpz_t());
    h = (h ^ a) * 1099511628211ULL;
    h = (h ^ b) * 1099511628211ULL;
  }
  return h;
}

void CycloNum::check_same_field(const CycloNum& o) const {
  if (!field_ || !o.field_) throw DomainError("operation on an uninitialised field element");
  if (field_ != o.field_ && field_->conductor() != o.field_->conductor())
    throw DomainError("field elements from different cyclotomic fields");
}

CycloNum& CycloNum::operator+=(const CycloNum& o) {
  check_same_field(o);
  for (std::size_t j = 0; j < c_.size(); ++j) c_[j] += o.c_[j];
  return *this;
}

CycloNum& CycloNum::operator-=(const CycloNum& o) {
  check_same_field(o);
  for (std::size_t j = 0; j < c_.size(); ++j) c_[j] -= o.c_[j];
  return *this;
}

CycloNum& CycloNum::operator*=(const CycloNum& o) {
  *this = *this * o;
  return *this;
}

CycloNum& CycloNum::operator*=(const Rational& r) {
  Rational f = r;
  f.canonicalize();
  for (auto& v : c_) v *= f;
  return *this;
}

CycloNum operator*(const CycloNum& a, const CycloNum& b) {
  a.check_same_field(b);
  const std::size_t d = a.c_.size();
  std::vector<Rational> prod(2 * d - 1, Rational(0));
  for (std::size_t i = 0; i < d; ++i) {
    if (a.c_[i] == 0) continue;
    for (std::size_t j = 0; j < d; ++j) {
      if (b.c_[j] == 0) continue;
      prod[i + j] += a.c_[i] * b.c_[j];
    }
  }
  return CycloNum(a.field_, std::move(prod));
}

CycloNum operator/(const CycloNum& a, const CycloNum& b) { return a * inverse(b); }

CycloNum operator-(CycloNum a) {
  for (auto& v : a.c_) v = -v;
  return a;
}

bool operator==(const CycloNum& a, const CycloNum& b) {
  a.check_same_field(b);
  return a.c_ == b.c_;
}

CycloNum lambda(const FieldPtr& field) { return CycloNum::zeta_pow(field, field->lambda_exponent()); }

CycloNum i_unit(const FieldPtr& field) { return CycloNum::zeta_pow(field, field->i_exponent()); }

CycloNum embed_rational_point(const FieldPtr& field, const Rational& x, const Rational& y) {
  CycloNum z = CycloNum::constant(field, x);
  if (y != 0) z += i_unit(field) * y;
  return z;
}

CycloNum mul_zeta_power(const CycloNum& a, long k) {
  const FieldContext& f = *a.field();
  const std::size_t d = a.coeffs().size();
  std::vector<Rational> out(d, Rational(0));
  for (std::size_t j = 0; j < d; ++j) {
    const Rational& cj = a.coeffs()[j];
    if (cj == 0) continue;
    const auto& zp = f.zeta_power(static_cast<long>(j) + k);
    for (std::size_t t = 0; t < d; ++t)
      if (zp[t] != 0) out[t] += cj * zp[t];
  }
  return CycloNum(a.field(), std::move(out));
}

CycloNum power(CycloNum base, unsigned long exponent) {
  CycloNum result = CycloNum::constant(base.field(), Rational(1));
  while (exponent > 0) {
    if (exponent & 1UL) result = result * base;
    exponent >>= 1UL;
    if (exponent > 0) base = base * base;
  }
  return result;
}

CycloNum inverse(const CycloNum& a) {
  if (a.is_zero()) throw DomainError("inverse of zero field element");
  const auto& phi = a.field()->cyclotomic();
  QPoly modulus(phi.begin(), phi.end());
  QPoly inv = inverse_mod(a.coeffs(), modulus);
  return CycloNum(a.field(), std::move(inv));
}

CycloNum conj(const CycloNum& a) {
  const FieldContext& f = *a.field();
  const std::size_t d = a.coeffs().size();
  std::vector<Rational> out(d, Rational(0));
  for (std::size_t j = 0; j < d; ++j) {
    const Rational& cj = a.coeffs()[j];
    if (cj == 0) continue;
    const auto& zp = f.zeta_power(-static_cast<long>(j));
    for (std::size_t t = 0; t < d; ++t)
      if (zp[t] != 0) out[t] += cj * zp[t];
  }
  return CycloNum(a.field(), std::move(out));
}

CycloNum real_part(const CycloNum& a) { return (a + conj(a)) * Rational(1, 2); }

CycloNum imag_part(const CycloNum& a) {
  // (a - conj a) / (2i) = (a - conj a) * (-i) / 2
  const CycloNum diff = a - conj(a);
  return mul_zeta_power(diff, 3L * a.field()->conductor() / 4) * Rational(1, 2);
}

bool is_real(const CycloNum& a) { return a == conj(a); }

Sign sign_of_re(const CycloNum& a) {
  const Sign fast = filter_sign(a.coeffs(), Trig::Cos, *a.field());
  if (fast != Sign::Zero) return fast;
  if ((a + conj(a)).is_zero()) return Sign::Zero;
  return refine_sign(a.coeffs(), Trig::Cos, *a.field());
}

Sign sign_of_im(const CycloNum& a) {
  const Sign fast = filter_sign(a.coeffs(), Trig::Sin, *a.field());
  if (fast != Sign::Zero) return fast;
  if (is_real(a)) return Sign::Zero;
  return refine_sign(a.coeffs(), Trig::Sin, *a.field());
}

Sign sign_of_real(const CycloNum& a) {
  if (!is_real(a)) throw DomainError("sign_of_real: element is not real");
  if (a.is_zero()) return Sign::Zero;
  const Sign fast = filter_sign(a.coeffs(), Trig::Cos, *a.field());
  if (fast != Sign::Zero) return fast;
  return refine_sign(a.coeffs(), Trig::Cos, *a.field());
}

ComplexInterval approx(const CycloNum& a, int bits) {
  if (bits < 16) throw ParameterError("approx: bits must be >= 16");
  long max_lg = 0;
  for (const auto& c : a.coeffs()) max_lg = std::max(max_lg, ceil_log2_abs(c));
  const auto d = static_cast<long>(a.coeffs().size());
  long extra = 8 + max_lg + 1;
  for (long v = 32 + 2 * d; v > 1; v = (v + 1) / 2) ++extra;
  for (long v = d; v > 1; v = (v + 1) / 2) ++extra;
  const auto prec = static_cast<mpfr_prec_t>(bits + std::max(extra, 8L));
  BigFloat mid, rad;
  ball_eval(a.coeffs(), Trig::Cos, *a.field(), prec, mid, rad);
  RealInterval re = to_interval(mid, rad);
  ball_eval(a.coeffs(), Trig::Sin, *a.field(), prec, mid, rad);
  RealInterval im = to_interval(mid, rad);
  return ComplexInterval{std::move(re), std::move(im)};
}

std::complex<double> to_complex(const CycloNum& a) {
  const ComplexInterval iv = approx(a, 64);
  return {iv.re.midpoint(), iv.im.midpoint()};
}

std::string to_string(const CycloNum& a) {
  std::ostringstream os;
  bool first = true;
  for (std::size_t j = 0; j < a.coeffs().size(); ++j) {
    const Rational& c = a.coeffs()[j];
    if (c == 0) continue;
    const std::string sym = j == 0 ? "" : (j == 1 ? "z" : "z^" + std::to_string(j));
    if (first) {
      os << (sym.empty() ? rational_string(c) : rational_string(c) + "*" + sym);
    } else {
      const Rational mag = abs(c);
      os << (c < 0 ? " - " : " + ") << (sym.empty() ? rational_string(mag) : rational_string(mag) + "*" + sym);
    }
    first = false;
  }
  if (first) os << "0";
  return os.str();
}

std::vector<Rational> coordinates_in_basis(const std::vector<CycloNum>& basis, const CycloNum& a) {
  const std::size_t n = basis.size();
  const std::size_t d = a.coeffs().size();
  // rows: power-basis coefficients; columns: basis elements, then a
  std::vector<std::vector<Rational>> mat(d, std::vector<Rational>(n + 1, Rational(0)));
  for (std::size_t r = 0; r < d; ++r) {
    for (std::size_t col = 0; col < n; ++col) mat[r][col] = basis[col].coeffs()[r];
    mat[r][n] = a.coeffs()[r];
  }
  std::vector<std::size_t> pivot_col;
  std::size_t row = 0;
  for (std::size_t col = 0; col < n && row < d; ++col) {
    std::size_t piv = row;
    while (piv < d && mat[piv][col] == 0) ++piv;
    if (piv == d) throw ParameterError("coordinates_in_basis: basis is linearly dependent");
    std::swap(mat[piv], mat[row]);
    const Rational inv = 1 / mat[row][col];
    for (auto& v : mat[row]) v *= inv;
    for (std::size_t r = 0; r < d; ++r) {
      if (r == row || mat[r][col] == 0) continue;
      const Rational f = mat[r][col];
      for (std::size_t cc = col; cc <= n; ++cc) mat[r][cc] -= f * mat[row][cc];
    }
    pivot_col.push_back(col);
    ++row;
  }
  if (pivot_col.size() < n) throw ParameterError("coordinates_in_basis: basis is linearly dependent");
  for (std::size_t r = row; r < d; ++r)
    if (mat[r][n] != 0) throw DomainError("element is outside the span of the basis");
  std::vector<Rational> out(n);
  for (std::size_t r = 0; r < n; ++r) out[pivot_col[r]] = mat[r][n];
  return out;
}

CycloNum golden_ratio(const FieldPtr& field) {
  const int m = field->conductor();
  if (m % 5 != 0) throw ParameterError("golden ratio requires 5 | conductor");
  const long e = m / 5;
  return CycloNum::constant(field, Rational(1)) + CycloNum::zeta_pow(field, e) + CycloNum::zeta_pow(field, -e);
}

CycloNum sqrt_two_plus_phi(const FieldPtr& field) {
  const int m = field->conductor();
  if (m % 20 != 0) throw ParameterError("sqrt(2+phi) requires 20 | conductor");
  const long e = m / 5;
  // i*sqrt(2+phi) = zeta_5 - zeta_5^-1
  const CycloNum diff = CycloNum::zeta_pow(field, e) - CycloNum::zeta_pow(field, -e);
  return mul_zeta_power(diff, 3L * m / 4);
}

CycloNum sqrt_three(const FieldPtr& field) {
  const int m = field->conductor();
  if (m % 12 != 0) throw ParameterError("sqrt(3) requires 12 | conductor");
  const long e = m / 12;
  return CycloNum::zeta_pow(field, e) + CycloNum::zeta_pow(field, -e);
}

std::array<Rational, 8> golden_coordinates(const CycloNum& a) {
  const FieldPtr& f = a.field();
  const CycloNum one = CycloNum::constant(f, Rational(1));
  const CycloNum phi = golden_ratio(f);
  const CycloNum s = sqrt_two_plus_phi(f);
  const CycloNum i = i_unit(f);
  const std::vector<CycloNum> basis{one, phi, s, phi * s, i, i * phi, i * s, i * phi * s};
  const auto v = coordinates_in_basis(basis, a);
  std::array<Rational, 8> out;
  std::copy(v.begin(), v.end(), out.begin());
  return out;
}

std::string format_golden(const CycloNum& a) {
  const auto c = golden_coordinates(a);
  std::vector<std::string> groups;
  groups.push_back(linear_text(c[0], c[1], "phi"));
  std::string g = linear_text(c[2], c[3], "phi");
  groups.push_back(g.empty() ? "" : "(" + g + ")*sqrt(2+phi)");
  g = linear_text(c[4], c[5], "phi");
  groups.push_back(g.empty() ? "" : "(" + g + ")*i");
  g = linear_text(c[6], c[7], "phi");
  groups.push_back(g.empty() ? "" : "(" + g + ")*sqrt(2+phi)*i");
  return join_groups(groups);
}

std::array<Rational, 4> sqrt3_coordinates(const CycloNum& a) {
  const FieldPtr& f = a.field();
  const CycloNum one = CycloNum::constant(f, Rational(1));
  const CycloNum r3 = sqrt_three(f);
  const CycloNum i = i_unit(f);
  const auto v = coordinates_in_basis({one, r3, i, i * r3}, a);
  return {v[0], v[1], v[2], v[3]};
}

std::string format_sqrt3(const CycloNum& a) {
  const auto c = sqrt3_coordinates(a);
  std::vector<std::string> groups;
  groups.push_back(linear_text(c[0], c[1], "sqrt3"));
  const std::string g = linear_text(c[2], c[3], "sqrt3");
  groups.push_back(g.empty() ? "" : "(" + g + ")*i");
  return join_groups(groups);
}

}  // namespace pwrot
