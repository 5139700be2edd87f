#pragma once

#include <mpfr.h>

#include <string>
#include <utility>

namespace pwrot {

/// Owning wrapper around an mpfr_t with fixed precision.
class BigFloat {
 public:
  explicit BigFloat(mpfr_prec_t prec = 64) { mpfr_init2(v_, prec); mpfr_set_zero(v_, 1); }
  BigFloat(const BigFloat& o) {
    mpfr_init2(v_, mpfr_get_prec(o.v_));
    mpfr_set(v_, o.v_, MPFR_RNDN);
  }
  BigFloat(BigFloat&& o) noexcept {
    mpfr_init2(v_, mpfr_get_prec(o.v_));
    mpfr_swap(v_, o.v_);
  }
  BigFloat& operator=(BigFloat o) noexcept {
    swap(o);
    return *this;
  }
  ~BigFloat() { mpfr_clear(v_); }

  void swap(BigFloat& o) noexcept { mpfr_swap(v_, o.v_); }

  mpfr_ptr get() { return v_; }
  mpfr_srcptr get() const { return v_; }
  mpfr_prec_t precision() const { return mpfr_get_prec(v_); }

  double to_double() const { return mpfr_get_d(v_, MPFR_RNDN); }
  int sign() const { return mpfr_sgn(v_); }

  std::string to_string(int digits = 20) const {
    char* s = nullptr;
    mpfr_asprintf(&s, "%.*Rg", digits, v_);
    std::string out(s);
    mpfr_free_str(s);
    return out;
  }

 private:
  mpfr_t v_;
};

/// Closed real interval [lo, hi].
struct RealInterval {
  BigFloat lo;
  BigFloat hi;

  bool contains_zero() const { return lo.sign() <= 0 && hi.sign() >= 0; }
  double midpoint() const { return 0.5 * (lo.to_double() + hi.to_double()); }
  double width() const { return hi.to_double() - lo.to_double(); }
  bool overlaps(const RealInterval& o) const {
    return mpfr_lessequal_p(lo.get(), o.hi.get()) && mpfr_lessequal_p(o.lo.get(), hi.get());
  }
};

/// Axis-aligned enclosure of a complex number.
struct ComplexInterval {
  RealInterval re;
  RealInterval im;
};

}  // namespace pwrot
