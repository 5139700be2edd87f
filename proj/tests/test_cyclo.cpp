#include <doctest.h>

#include <numeric>

#include "pwrot/cyclo.hpp"
#include "pwrot/errors.hpp"
#include "support.hpp"

using namespace pwrot;
using testsupport::random_element;

TEST_CASE("cyclotomic polynomials match the product over primitive roots") {
  for (int n : {1, 2, 3, 4, 5, 8, 12, 20, 28, 36, 60}) {
    CAPTURE(n);
    CHECK(cyclotomic_polynomial(n) == testsupport::cyclotomic_from_roots(n));
  }
  // Phi_20 = x^8 - x^6 + x^4 - x^2 + 1
  CHECK(cyclotomic_polynomial(20) == IntPoly{1, 0, -1, 0, 1, 0, -1, 0, 1});
}

TEST_CASE("euler phi counts units") {
  for (int n = 1; n <= 120; ++n) {
    long brute = 0;
    for (int k = 1; k <= n; ++k) brute += std::gcd(k, n) == 1;
    CHECK(euler_phi(n) == brute);
  }
}

TEST_CASE("field parameters") {
  const FieldPtr f = make_field(4, 5);
  CHECK(f->conductor() == 20);
  CHECK(f->degree() == 8);
  CHECK(f->alpha_string() == "4/5");
  CHECK(make_field(11, 12)->conductor() == 12);
  CHECK(make_field(3, 7)->conductor() == 28);
  CHECK(make_field(3, 7)->degree() == 12);
  CHECK_THROWS_AS(make_field(2, 4), ParameterError);
  CHECK_THROWS_AS(make_field(0, 5), ParameterError);
  CHECK_THROWS_AS(make_field(5, 5), ParameterError);
  CHECK_THROWS_AS(make_field(1, 2), ParameterError);
}

TEST_CASE("roots of unity") {
  for (auto [p, q] : {std::pair{4, 5}, {11, 12}, {3, 7}, {1, 3}, {5, 8}}) {
    const FieldPtr f = make_field(p, q);
    const int m = f->conductor();
    const CycloNum one = CycloNum::constant(f, 1);
    const CycloNum z = CycloNum::zeta_pow(f, 1);
    CHECK(power(z, static_cast<unsigned long>(m)) == one);
    CHECK(power(z, static_cast<unsigned long>(m / 2)) == -one);
    CHECK(i_unit(f) * i_unit(f) == -one);
    const CycloNum lam = lambda(f);
    CHECK(power(lam, static_cast<unsigned long>(q)) == one);
    for (int j = 1; j < q; ++j) CHECK(power(lam, static_cast<unsigned long>(j)) != one);
    CHECK(conj(z) * z == one);
    for (long k = -2 * m; k <= 2 * m; k += 3) CHECK(mul_zeta_power(one, k) == power(z, static_cast<unsigned long>((k % m + m) % m)));
  }
}

TEST_CASE("multiplication matches schoolbook product modulo the oracle polynomial") {
  std::mt19937_64 rng(7);
  for (auto [p, q] : {std::pair{4, 5}, {11, 12}, {3, 7}}) {
    const FieldPtr f = make_field(p, q);
    const auto modulus = testsupport::cyclotomic_from_roots(f->conductor());
    for (int t = 0; t < 50; ++t) {
      const CycloNum a = random_element(f, rng);
      const CycloNum b = random_element(f, rng);
      CHECK((a * b).coeffs() == testsupport::naive_product(a.coeffs(), b.coeffs(), modulus));
    }
  }
}

TEST_CASE("field axioms on random elements") {
  std::mt19937_64 rng(11);
  const FieldPtr f = make_field(3, 7);
  const CycloNum one = CycloNum::constant(f, 1);
  for (int t = 0; t < 40; ++t) {
    const CycloNum a = random_element(f, rng);
    const CycloNum b = random_element(f, rng);
    const CycloNum c = random_element(f, rng);
    CHECK(a * (b + c) == a * b + a * c);
    CHECK((a * b) * c == a * (b * c));
    CHECK(a - a == CycloNum(f));
    if (!a.is_zero()) {
      CHECK(inverse(a) * a == one);
      CHECK((b / a) * a == b);
    }
    CHECK(conj(a + b) == conj(a) + conj(b));
    CHECK(conj(a * b) == conj(a) * conj(b));
    CHECK(conj(conj(a)) == a);
    CHECK(real_part(a) + i_unit(f) * imag_part(a) == a);
    CHECK(is_real(a + conj(a)));
    CHECK(is_real(real_part(a)));
    CHECK(is_real(imag_part(a)));
  }
  CHECK_THROWS_AS(inverse(CycloNum(f)), DomainError);
}

TEST_CASE("exact signs agree with the numeric shadow away from zero") {
  std::mt19937_64 rng(3);
  for (auto [p, q] : {std::pair{4, 5}, {11, 12}, {3, 7}}) {
    const FieldPtr f = make_field(p, q);
    for (int t = 0; t < 200; ++t) {
      const CycloNum a = random_element(f, rng);
      const auto c = to_complex(a);
      if (std::abs(c.imag()) > 1e-9) CHECK(sign_of_im(a) == (c.imag() > 0 ? Sign::Positive : Sign::Negative));
      if (std::abs(c.real()) > 1e-9) CHECK(sign_of_re(a) == (c.real() > 0 ? Sign::Positive : Sign::Negative));
    }
    CHECK(sign_of_im(CycloNum::constant(f, Rational(-5, 3))) == Sign::Zero);
    CHECK(sign_of_real(CycloNum::constant(f, Rational(-5, 3))) == Sign::Negative);
    CHECK_THROWS_AS(sign_of_real(i_unit(f)), DomainError);
  }
}

TEST_CASE("tiny imaginary parts are resolved exactly") {
  // 1/phi^k shrinks geometrically; the sign stays exact
  const FieldPtr f = make_field(4, 5);
  const CycloNum phi = golden_ratio(f);
  const CycloNum tiny = power(inverse(phi), 60);
  CHECK(sign_of_im(i_unit(f) * tiny) == Sign::Positive);
  CHECK(sign_of_im(-i_unit(f) * tiny) == Sign::Negative);
  // phi^60 = L_60 - phi^-60 with L_60 the Lucas number
  const CycloNum big = power(phi, 60);
  CHECK(sign_of_real(big - CycloNum::constant(f, Rational(mpz_class("3461452808002")))) == Sign::Negative);
}

TEST_CASE("named surds") {
  const FieldPtr g = make_field(4, 5);
  const CycloNum phi = golden_ratio(g);
  const CycloNum one = CycloNum::constant(g, 1);
  CHECK(phi * phi == phi + one);
  const CycloNum s = sqrt_two_plus_phi(g);
  CHECK(s * s == CycloNum::constant(g, 2) + phi);
  CHECK(sign_of_real(s) == Sign::Positive);
  CHECK(std::abs(to_complex(phi).real() - 1.6180339887498949) < 1e-12);

  const FieldPtr h = make_field(11, 12);
  const CycloNum r3 = sqrt_three(h);
  CHECK(r3 * r3 == CycloNum::constant(h, 3));
  CHECK(sign_of_real(r3) == Sign::Positive);
  CHECK_THROWS_AS(golden_ratio(h), ParameterError);
  CHECK_THROWS_AS(sqrt_three(g), ParameterError);
}

TEST_CASE("basis coordinates") {
  const FieldPtr g = make_field(4, 5);
  const CycloNum phi = golden_ratio(g);
  const CycloNum s = sqrt_two_plus_phi(g);
  const CycloNum x = CycloNum::constant(g, Rational(1, 2)) - Rational(3) * phi + i_unit(g) * (phi * s * Rational(2, 7));
  const auto c = golden_coordinates(x);
  CHECK(c[0] == Rational(1, 2));
  CHECK(c[1] == -3);
  CHECK(c[7] == Rational(2, 7));
  for (int j : {2, 3, 4, 5, 6}) CHECK(c[static_cast<std::size_t>(j)] == 0);

  const FieldPtr h = make_field(11, 12);
  const CycloNum y = CycloNum::constant(h, 2) + i_unit(h) * sqrt_three(h) * Rational(1, 6);
  const auto d = sqrt3_coordinates(y);
  CHECK(d == std::array<Rational, 4>{Rational(2), Rational(0), Rational(0), Rational(1, 6)});
}

TEST_CASE("mixing fields is rejected") {
  const CycloNum a = CycloNum::constant(make_field(4, 5), 1);
  const CycloNum b = CycloNum::constant(make_field(3, 7), 1);
  CHECK_THROWS_AS(a + b, DomainError);
}

TEST_CASE("unreduced fractions are accepted") {
  const FieldPtr f = make_field(4, 5);
  const CycloNum a = CycloNum::zeta_pow(f, 3) + CycloNum::constant(f, 1);
  CHECK(a * Rational(64, 128) == a * Rational(1, 2));
  CHECK(CycloNum::constant(f, Rational(6, 4)) == CycloNum::constant(f, Rational(3, 2)));
  CHECK(CycloNum(f, {Rational(2, 4), Rational(0, 7)}) == CycloNum::constant(f, Rational(1, 2)));
  CHECK(is_real(CycloNum::constant(f, 4) * Rational(0, 128)));
}
