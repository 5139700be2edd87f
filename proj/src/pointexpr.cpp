#include "pwrot/pointexpr.hpp"

#include <cctype>
#include <charconv>
#include <string>
#include <vector>

#include "pwrot/casestudy.hpp"
#include "pwrot/errors.hpp"

namespace pwrot {

namespace {

bool is_rational_constant(const CycloNum& a) {
  for (std::size_t j = 1; j < a.coeffs().size(); ++j)
    if (a.coeffs()[j] != 0) return false;
  return true;
}

std::optional<Rational> exact_rational_sqrt(const Rational& r) {
  if (r < 0) return std::nullopt;
  mpz_class n = r.get_num(), d = r.get_den();
  mpz_class rn, rd;
  mpz_sqrt(rn.get_mpz_t(), n.get_mpz_t());
  mpz_sqrt(rd.get_mpz_t(), d.get_mpz_t());
  if (rn * rn != n || rd * rd != d) return std::nullopt;
  return Rational(rn, rd);
}

class Parser {
 public:
  Parser(FieldPtr field, std::string_view text) : f_(std::move(field)), s_(text) {}

  CycloNum parse() {
    CycloNum v = expr();
    skip();
    if (pos_ != s_.size()) fail("unexpected '" + std::string(1, s_[pos_]) + "'");
    return v;
  }

 private:
  [[noreturn]] void fail(const std::string& msg) const { throw ParseError(pos_, msg); }
  [[noreturn]] void fail_at(std::size_t at, const std::string& msg) const { throw ParseError(at, msg); }

  void skip() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }

  bool accept(char c) {
    skip();
    if (pos_ < s_.size() && s_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  void expect(char c) {
    if (!accept(c)) fail(std::string("expected '") + c + "'");
  }

  CycloNum expr() {
    CycloNum v = term();
    for (;;) {
      if (accept('+'))
        v += term();
      else if (accept('-'))
        v -= term();
      else
        return v;
    }
  }

  CycloNum term() {
    CycloNum v = unary();
    for (;;) {
      if (accept('*')) {
        v = v * unary();
      } else if (accept('/')) {
        const std::size_t at = pos_;
        const CycloNum d = unary();
        if (d.is_zero()) fail_at(at, "division by zero");
        v = v / d;
      } else {
        return v;
      }
    }
  }

  CycloNum unary() {
    if (accept('-')) return -unary();
    if (accept('+')) return unary();
    return power_expr();
  }

  CycloNum power_expr() {
    CycloNum base = primary();
    if (!accept('^')) return base;
    const bool neg = accept('-');
    skip();
    const std::size_t at = pos_;
    unsigned long e = 0;
    const auto [ptr, ec] = std::from_chars(s_.data() + pos_, s_.data() + s_.size(), e);
    if (ec != std::errc()) fail("expected integer exponent");
    pos_ = static_cast<std::size_t>(ptr - s_.data());
    if (neg) {
      if (base.is_zero()) fail_at(at, "zero to a negative power");
      base = inverse(base);
    }
    return power(base, e);
  }

  CycloNum number() {
    const std::size_t start = pos_;
    while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    std::string digits(s_.substr(start, pos_ - start));
    Rational value(mpz_class(digits, 10));
    if (pos_ < s_.size() && s_[pos_] == '.') {
      ++pos_;
      const std::size_t fs = pos_;
      while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
      if (pos_ == fs) fail("expected digits after '.'");
      const std::string frac(s_.substr(fs, pos_ - fs));
      mpz_class scale;
      mpz_ui_pow_ui(scale.get_mpz_t(), 10, frac.size());
      value += Rational(mpz_class(frac, 10), scale);
      value.canonicalize();
    }
    return CycloNum::constant(f_, value);
  }

  std::string identifier() {
    const std::size_t start = pos_;
    while (pos_ < s_.size() &&
           (std::isalnum(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '_' || s_[pos_] == '.'))
      ++pos_;
    return std::string(s_.substr(start, pos_ - start));
  }

  CycloNum surd(const CycloNum& x, std::size_t at) {
    if (is_rational_constant(x)) {
      const Rational& r = x.coeffs()[0];
      if (auto root = exact_rational_sqrt(r)) return CycloNum::constant(f_, *root);
      try {
        if (r == 3) return sqrt_three(f_);
        if (r == 5) return golden_ratio(f_) * Rational(2) - CycloNum::constant(f_, Rational(1));
      } catch (const ParameterError& e) {
        fail_at(at, e.what());
      }
      fail_at(at, "sqrt of " + rational_string(r) + " is not available");
    }
    if (f_->conductor() % 20 == 0 && x == CycloNum::constant(f_, Rational(2)) + golden_ratio(f_))
      return sqrt_two_plus_phi(f_);
    fail_at(at, "sqrt argument must be 2+phi, 3, 5 or a rational square");
  }

  CycloNum primary() {
    skip();
    if (pos_ >= s_.size()) fail("unexpected end of input");
    const char c = s_[pos_];
    const std::size_t at = pos_;
    if (std::isdigit(static_cast<unsigned char>(c))) return number();
    if (c == '(') {
      ++pos_;
      CycloNum x = expr();
      if (accept(',')) {
        skip();
        const std::size_t yat = pos_;
        CycloNum y = expr();
        expect(')');
        if (!is_real(x)) fail_at(at + 1, "x coordinate is not real");
        if (!is_real(y)) fail_at(yat, "y coordinate is not real");
        return x + i_unit(f_) * y;
      }
      expect(')');
      return x;
    }
    if (c == '[') {
      ++pos_;
      std::vector<Rational> coeffs;
      do {
        skip();
        const std::size_t cat = pos_;
        CycloNum v = expr();
        if (!is_rational_constant(v)) fail_at(cat, "coefficient must be rational");
        coeffs.push_back(v.coeffs()[0]);
      } while (accept(','));
      expect(']');
      if (coeffs.size() > static_cast<std::size_t>(f_->degree()))
        fail_at(at, "vector has " + std::to_string(coeffs.size()) + " coefficients, field degree is " +
                        std::to_string(f_->degree()));
      return CycloNum(f_, std::move(coeffs));
    }
    if (std::isalpha(static_cast<unsigned char>(c))) {
      const std::string name = identifier();
      if (name == "sqrt") {
        expect('(');
        const std::size_t aat = pos_;
        CycloNum x = expr();
        expect(')');
        return surd(x, aat);
      }
      try {
        if (name == "i") return i_unit(f_);
        if (name == "z") return CycloNum::zeta_pow(f_, 1);
        if (name == "lambda") return lambda(f_);
        if (name == "phi") return golden_ratio(f_);
        if (name == "sqrt3") return sqrt_three(f_);
        if (auto p = named_point(f_, name)) return *p;
      } catch (const ParameterError& e) {
        fail_at(at, name + ": " + e.what());
      }
      fail_at(at, "unknown name '" + name + "'");
    }
    fail("unexpected '" + std::string(1, c) + "'");
  }

  FieldPtr f_;
  std::string_view s_;
  std::size_t pos_ = 0;
};

}  // namespace

CycloNum parse_point(const FieldPtr& field, std::string_view text) { return Parser(field, text).parse(); }

std::pair<int, int> parse_alpha(std::string_view text) {
  const auto slash = text.find('/');
  if (slash == std::string_view::npos) throw ParseError(0, "rotation must be written p/q");
  int p = 0, q = 0;
  const auto r1 = std::from_chars(text.data(), text.data() + slash, p);
  if (r1.ec != std::errc() || r1.ptr != text.data() + slash) throw ParseError(0, "bad numerator");
  const auto r2 = std::from_chars(text.data() + slash + 1, text.data() + text.size(), q);
  if (r2.ec != std::errc() || r2.ptr != text.data() + text.size()) throw ParseError(slash + 1, "bad denominator");
  return {p, q};
}

Rational parse_rational(std::string_view text) {
  const FieldPtr f = make_field(1, 4);
  const CycloNum v = parse_point(f, text);
  if (!is_rational_constant(v)) throw ParseError(0, "expected a rational number");
  return v.coeffs()[0];
}

Box parse_box(std::string_view text) {
  std::vector<Rational> parts;
  std::size_t start = 0;
  for (;;) {
    const auto comma = text.find(',', start);
    const std::string_view piece = text.substr(start, comma == std::string_view::npos ? text.size() - start : comma - start);
    try {
      parts.push_back(parse_rational(piece));
    } catch (const ParseError& e) {
      throw ParseError(start + e.position(), "bad box coordinate");
    }
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  if (parts.size() != 4) throw ParseError(0, "box must be x0,y0,x1,y1");
  if (!(parts[0] < parts[2]) || !(parts[1] < parts[3])) throw ParseError(0, "box must have x0 < x1 and y0 < y1");
  return Box{parts[0], parts[1], parts[2], parts[3]};
}

}  // namespace pwrot
