#include "orbit_walker.hpp"

#include <cmath>
#include <limits>

#include "pwrot/dynamics.hpp"

namespace pwrot::detail {

namespace {

constexpr std::int64_t kLimit = std::int64_t{1} << 61;

bool fits(const mpz_class& v) { return mpz_sizeinbase(v.get_mpz_t(), 2) <= 60; }

}  // namespace

OrbitWalker::OrbitWalker(const CycloNum& start) : field_(start.field()), start_(start), slow_(start) {
  d_ = start.coeffs().size();
  mpz_class lcm = 1;
  for (const auto& c : start.coeffs()) mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), c.get_den_mpz_t());
  if (!fits(lcm)) return;
  std::vector<std::int64_t> ints(d_);
  for (std::size_t j = 0; j < d_; ++j) {
    const mpz_class scaled = start.coeffs()[j].get_num() * (lcm / start.coeffs()[j].get_den());
    if (!fits(scaled)) return;
    ints[j] = scaled.get_si();
  }
  denom_mpz_ = lcm;
  denom_ = lcm.get_si();
  cur_ = ints;
  start_ints_ = std::move(ints);
  tmp_.resize(d_);
  next_.resize(d_);
  matrix_.assign(d_ * d_, 0);
  const long e = field_->lambda_exponent();
  for (std::size_t j = 0; j < d_; ++j) {
    const auto& col = field_->zeta_power(static_cast<long>(j) + e);
    for (std::size_t t = 0; t < d_; ++t) matrix_[t * d_ + j] = col[t];
  }
  fast_ = true;
}

Sign OrbitWalker::imag_sign() {
  if (cached_sign_) return *cached_sign_;
  Sign s;
  if (fast_) {
    long double sum = 0.0L, abs_sum = 0.0L;
    for (std::size_t j = 0; j < d_; ++j) {
      if (cur_[j] == 0) continue;
      const auto c = static_cast<long double>(cur_[j]);
      sum += c * field_->sin_table(static_cast<int>(j));
      abs_sum += std::fabs(c);
    }
    constexpr long double eps = std::numeric_limits<long double>::epsilon();
    // int64 -> long double is exact for |c| < 2^61 when long double has a
    // 64-bit mantissa; otherwise the conversion adds one rounding per term.
    const long double err = abs_sum * (static_cast<long double>(d_) + 6.0L) * eps * 2.0L +
                            std::numeric_limits<long double>::min();
    if (sum > err)
      s = Sign::Positive;
    else if (sum < -err)
      s = Sign::Negative;
    else
      s = sign_of_im(current());
  } else {
    s = sign_of_im(slow_);
  }
  cached_sign_ = s;
  return s;
}

bool OrbitWalker::try_fast_step(Sign s) {
  const std::int64_t shift = s == Sign::Negative ? -denom_ : denom_;
  for (std::size_t j = 0; j < d_; ++j) tmp_[j] = cur_[j];
  tmp_[0] -= shift;
  if (tmp_[0] > kLimit || tmp_[0] < -kLimit) return false;
  for (std::size_t t = 0; t < d_; ++t) {
    __int128 acc = 0;
    const std::int64_t* row = &matrix_[t * d_];
    for (std::size_t j = 0; j < d_; ++j) acc += static_cast<__int128>(row[j]) * tmp_[j];
    if (acc > kLimit || acc < -kLimit) return false;
    next_[t] = static_cast<std::int64_t>(acc);
  }
  cur_.swap(next_);
  return true;
}

void OrbitWalker::leave_fast_path() {
  slow_ = current();
  fast_ = false;
}

void OrbitWalker::advance() {
  const Sign s = imag_sign();
  cached_sign_.reset();
  if (fast_) {
    if (try_fast_step(s)) return;
    leave_fast_path();
  }
  slow_ = branch_step(slow_, s == Sign::Negative ? '-' : '+');
}

bool OrbitWalker::at_start() const {
  if (fast_) return cur_ == start_ints_;
  return slow_ == start_;
}

CycloNum OrbitWalker::current() const {
  if (!fast_) return slow_;
  std::vector<Rational> c(d_);
  for (std::size_t j = 0; j < d_; ++j) {
    c[j] = Rational(mpz_class(static_cast<long>(cur_[j])), denom_mpz_);
    c[j].canonicalize();
  }
  return CycloNum(field_, std::move(c));
}

}  // namespace pwrot::detail
