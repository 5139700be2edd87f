#include "pwrot/dynamics.hpp"

#include <numeric>

#include "orbit_walker.hpp"
#include "pwrot/errors.hpp"

namespace pwrot {

char address_char(Address a) {
  switch (a) {
    case Address::Plus: return '+';
    case Address::Minus: return '-';
    case Address::OnLine: return '0';
  }
  return '?';
}

AffineMap AffineMap::identity(const FieldPtr& field) { return AffineMap{0, CycloNum(field)}; }

AffineMap AffineMap::branch(const FieldPtr& field, char symbol) {
  const CycloNum lam = lambda(field);
  return AffineMap{1 % field->q(), symbol == '-' ? lam : -lam};
}

CycloNum AffineMap::linear() const {
  const FieldPtr& f = field();
  return CycloNum::zeta_pow(f, static_cast<long>(power) * f->lambda_exponent());
}

CycloNum AffineMap::operator()(const CycloNum& w) const {
  return mul_zeta_power(w, static_cast<long>(power) * field()->lambda_exponent()) + offset;
}

AffineMap compose(const AffineMap& second, const AffineMap& first) {
  const FieldPtr& f = first.field();
  AffineMap out;
  out.power = (first.power + second.power) % f->q();
  out.offset = mul_zeta_power(first.offset, static_cast<long>(second.power) * f->lambda_exponent()) + second.offset;
  return out;
}

CycloNum branch_step(const CycloNum& z, char symbol) {
  const FieldPtr& f = z.field();
  const CycloNum shifted = z - CycloNum::constant(f, Rational(symbol == '-' ? -1 : 1));
  return mul_zeta_power(shifted, f->lambda_exponent());
}

Address address(const CycloNum& z) {
  switch (sign_of_im(z)) {
    case Sign::Positive: return Address::Plus;
    case Sign::Negative: return Address::Minus;
    case Sign::Zero: return Address::OnLine;
  }
  return Address::OnLine;
}

CycloNum step(const CycloNum& z) { return branch_step(z, address(z) == Address::Minus ? '-' : '+'); }

CycloNum inverse_step(const CycloNum& z) {
  const FieldPtr& f = z.field();
  const CycloNum w = mul_zeta_power(z, -f->lambda_exponent());
  const Rational h = sign_of_im(w) == Sign::Negative ? -1 : 1;
  return w + CycloNum::constant(f, h);
}

std::vector<CycloNum> orbit(const CycloNum& z, std::size_t n) {
  std::vector<CycloNum> out;
  out.reserve(n + 1);
  for_each_iterate(z, n, [&](std::uint64_t, const CycloNum& w, Address) {
    out.push_back(w);
    return true;
  });
  return out;
}

void for_each_iterate(const CycloNum& z, std::uint64_t n,
                      const std::function<bool(std::uint64_t, const CycloNum&, Address)>& visit) {
  detail::OrbitWalker walker(z);
  for (std::uint64_t idx = 0;; ++idx) {
    const Sign s = walker.imag_sign();
    const Address a = s == Sign::Positive ? Address::Plus : (s == Sign::Negative ? Address::Minus : Address::OnLine);
    if (!visit(idx, walker.current(), a)) return;
    if (idx == n) return;
    walker.advance();
  }
}

OrbitRecord minimal_period(const CycloNum& z, std::uint64_t budget, bool stop_at_line) {
  if (budget < 1) throw ParameterError("minimal_period: budget must be >= 1");
  OrbitRecord rec;
  rec.start = z;
  detail::OrbitWalker walker(z);
  std::uint64_t idx = 0;
  while (idx < budget) {
    if (walker.imag_sign() == Sign::Zero) {
      rec.iterates_on_line.emplace_back(idx, walker.current());
      if (stop_at_line) break;
    }
    walker.advance();
    ++idx;
    if (walker.at_start()) {
      rec.period = idx;
      break;
    }
  }
  rec.budget_used = idx;
  return rec;
}

Itinerary itinerary(const CycloNum& z, std::size_t n) {
  Itinerary it;
  it.word.reserve(n);
  detail::OrbitWalker walker(z);
  for (std::size_t idx = 0; idx < n; ++idx) {
    const Sign s = walker.imag_sign();
    if (s == Sign::Zero)
      throw CriticalLineHit(idx, "itinerary: iterate " + std::to_string(idx) + " lies on the critical line");
    it.word.push_back(s == Sign::Positive ? '+' : '-');
    walker.advance();
  }
  return it;
}

std::size_t itinerary_period(std::string_view word) {
  const std::size_t n = word.size();
  if (n == 0) return 0;
  for (std::size_t ell = 1; ell <= n; ++ell) {
    if (n % ell != 0) continue;
    bool ok = true;
    for (std::size_t i = 0; i + ell < n && ok; ++i) ok = word[i] == word[i + ell];
    if (ok) return ell;
  }
  return n;
}

std::size_t itinerary_period(const Itinerary& it) { return itinerary_period(it.word); }

AffineMap affine_along(const FieldPtr& field, std::string_view word) {
  AffineMap g = AffineMap::identity(field);
  const AffineMap plus = AffineMap::branch(field, '+');
  const AffineMap minus = AffineMap::branch(field, '-');
  for (char s : word) g = compose(s == '-' ? minus : plus, g);
  return g;
}

CycloNum rotation_center(const AffineMap& g) {
  const FieldPtr& f = g.field();
  if (g.power % f->q() == 0) throw DomainError("rotation_center: linear part is the identity (no unique center)");
  const CycloNum inv(f, f->inv_one_minus_zeta(static_cast<long>(g.power) * f->lambda_exponent()));
  return g.offset * inv;
}

int rotation_order(int q, std::uint64_t ell) {
  if (ell < 1) throw ParameterError("rotation_order: ell must be >= 1");
  return q / static_cast<int>(std::gcd(static_cast<std::uint64_t>(q), ell));
}

std::pair<std::string, std::size_t> least_rotation(std::string_view word) {
  std::string best(word);
  std::size_t shift = 0;
  for (std::size_t s = 1; s < word.size(); ++s) {
    std::string cand = std::string(word.substr(s)) + std::string(word.substr(0, s));
    if (cand < best) {
      best = std::move(cand);
      shift = s;
    }
  }
  return {best, shift};
}

}  // namespace pwrot
