#include <doctest.h>

#include "hankel/errors.hpp"
#include "hankel/field.hpp"
#include "hankel/polynomial.hpp"
#include "hankel/sampling.hpp"
#include "oracles.hpp"

using namespace hankel;

namespace {

using QPoly = Polynomial<Rational>;

QPoly poly(std::vector<Rational> c) { return QPoly::from_coefficients(std::move(c)); }

Rational random_rational(SampleRng& rng) {
  return Rational(mpz_class(rng.uniform(-50, 50)), mpz_class(rng.uniform(1, 12)));
}

QPoly random_poly(SampleRng& rng, std::size_t max_degree) {
  std::vector<Rational> c;
  const auto d = static_cast<std::size_t>(rng.uniform(0, static_cast<long>(max_degree)));
  for (std::size_t k = 0; k <= d; ++k) c.push_back(random_rational(rng));
  return QPoly(std::move(c), Rational(0));
}

}  // namespace

TEST_CASE("rationals are kept in lowest terms with a positive denominator") {
  const Rational q(mpz_class(6), mpz_class(-4));
  CHECK(q.numerator() == -3);
  CHECK(q.denominator() == 2);
  CHECK(q.str() == "-3/2");
  CHECK(Rational::parse("10/5").str() == "2");
  CHECK(Rational::parse("-0/7").str() == "0");
  CHECK(Rational::parse("+3").str() == "3");
  CHECK((Rational(1) / Rational(3) + Rational(1) / Rational(6)).str() == "1/2");
  CHECK_THROWS_AS(Rational::parse("1/0"), ParseError);
  CHECK_THROWS_AS(Rational::parse("1.5"), ParseError);
  CHECK_THROWS_AS(Rational::parse("a/b"), ParseError);
  CHECK_THROWS_AS(Rational::parse(""), ParseError);
  CHECK_THROWS_AS(Rational(0).inverse(), std::domain_error);
  CHECK_THROWS_AS(Rational(1) / Rational(0), std::domain_error);
}

TEST_CASE("rational field axioms hold exactly on random samples") {
  SampleRng rng(11);
  for (int k = 0; k < 300; ++k) {
    const Rational a = random_rational(rng);
    const Rational b = random_rational(rng);
    const Rational c = random_rational(rng);
    CHECK((a + b) + c == a + (b + c));
    CHECK(a * (b + c) == a * b + a * c);
    CHECK((a + (-a)).is_zero());
    if (!a.is_zero()) CHECK((a * a.inverse()).is_one());
    const Rational sum = a + b;
    CHECK(gcd(sum.numerator(), sum.denominator()) == 1);
    CHECK(sum.denominator() > 0);
  }
}

TEST_CASE("primality test") {
  CHECK_FALSE(is_prime(0));
  CHECK_FALSE(is_prime(1));
  CHECK(is_prime(2));
  CHECK(is_prime(97));
  CHECK_FALSE(is_prime(561));  // Carmichael
  CHECK(is_prime(1000000007ULL));
  CHECK_FALSE(is_prime(1000000007ULL * 3ULL));
  CHECK(is_prime(9223372036854775783ULL));  // largest prime below 2^63
  CHECK_FALSE(is_prime(3215031751ULL));     // strong pseudoprime to bases 2, 3, 5, 7
}

TEST_CASE("GF(p) elements stay canonical and obey the field axioms") {
  const std::uint64_t p = 101;
  CHECK(ModP(-1, p).residue() == 100);
  CHECK(ModP(205, p).residue() == 3);
  CHECK((ModP(7, p) * ModP(7, p).inverse()).is_one());
  CHECK((ModP(50, p) + ModP(51, p)).is_zero());
  CHECK(ModP(3, p) - ModP(5, p) == ModP(99, p));
  CHECK_THROWS_AS(ModP(0, p).inverse(), std::domain_error);
  CHECK_THROWS_AS(ModP(1, 5) + ModP(1, 7), std::domain_error);
  CHECK_THROWS_AS(ModP::checked(1, 91), PreconditionError);
  CHECK(ModP::from_rational(Rational(mpz_class(1), mpz_class(2)), 7) == ModP(4, 7));
  CHECK_THROWS_AS(ModP::from_rational(Rational(mpz_class(1), mpz_class(7)), 7), std::domain_error);

  SampleRng rng(5);
  const std::uint64_t big = 9223372036854775783ULL;
  for (int k = 0; k < 200; ++k) {
    const ModP a(rng.uniform(-1000000, 1000000) * 1000003, big);
    const ModP b(rng.uniform(-1000000, 1000000) * 999983, big);
    CHECK(a.residue() < big);
    CHECK((a + (-a)).is_zero());
    CHECK((a * b) * b.make(1) == b * a);
    if (!a.is_zero()) CHECK((a * a.inverse()).is_one());
  }
}

TEST_CASE("GF(p) arithmetic agrees with rational arithmetic reduced mod p") {
  SampleRng rng(99);
  const std::uint64_t p = 10007;
  auto red = [&](const Rational& q) { return ModP::from_rational(q, p); };
  for (int k = 0; k < 300; ++k) {
    const Rational a = random_rational(rng);
    const Rational b = random_rational(rng);
    CHECK(red(a + b) == red(a) + red(b));
    CHECK(red(a - b) == red(a) - red(b));
    CHECK(red(a * b) == red(a) * red(b));
    if (!b.is_zero() && !red(b).is_zero()) CHECK(red(a / b) == red(a) / red(b));
  }
}

TEST_CASE("poly_divrem examples") {
  auto [q1, r1] = divrem(poly({-1, 0, 1}), poly({-1, 1}));
  CHECK(q1 == poly({1, 1}));
  CHECK(r1.is_zero());

  auto [q2, r2] = divrem(poly({0, 1}), poly({0, 0, 1}));
  CHECK(q2.is_zero());
  CHECK(r2 == poly({0, 1}));

  auto [q3, r3] = divrem(poly({2, -3, 1}), poly({2}));
  CHECK(q3 == poly({1, Rational(mpz_class(-3), mpz_class(2)), Rational(mpz_class(1), mpz_class(2))}));
  CHECK(r3.is_zero());

  CHECK_THROWS_AS(divrem(poly({1, 1}), QPoly()), std::domain_error);
}

TEST_CASE("zero polynomial has no degree") {
  const QPoly zero;
  CHECK(zero.is_zero());
  CHECK_THROWS_AS(zero.degree(), std::domain_error);
  CHECK_THROWS_AS(zero.leading_coefficient(), std::domain_error);
  CHECK(poly({0, 0, 0}).is_zero());
  CHECK(poly({1, 2, 0}).degree() == 1);
  CHECK(poly({2, -3, 1}).str() == "x^2 - 3*x + 2");
}

TEST_CASE("division reconstructs the dividend on random pairs") {
  SampleRng rng(3);
  for (int k = 0; k < 200; ++k) {
    const QPoly a = random_poly(rng, 7);
    QPoly b = random_poly(rng, 4);
    if (b.is_zero()) continue;
    auto [q, r] = divrem(a, b);
    CHECK(q * b + r == a);
    if (!r.is_zero()) CHECK(r.degree() < b.degree());
  }
}

TEST_CASE("poly_gcd examples") {
  CHECK(gcd(poly({-1, 0, 1}), poly({-1, 1})) == poly({-1, 1}));
  CHECK(gcd(oracle::poly_power(poly({-1, 1}), 2), poly({-2, 1})) == poly({1}));
  CHECK(gcd(QPoly(), poly({0, 0, 1})) == poly({0, 0, 1}));
  CHECK(gcd(poly({0, 0, 3}), QPoly()) == poly({0, 0, 1}));
  CHECK_THROWS_AS(gcd(QPoly(), QPoly()), std::domain_error);
}

TEST_CASE("gcd divides both inputs and absorbs every planted common factor") {
  SampleRng rng(17);
  for (int k = 0; k < 100; ++k) {
    const QPoly common = random_poly(rng, 3);
    const QPoly a = common * random_poly(rng, 3);
    const QPoly b = common * random_poly(rng, 3);
    if (a.is_zero() && b.is_zero()) continue;
    const QPoly g = gcd(a, b);
    CHECK(g.is_monic());
    CHECK(divrem(a, g).remainder.is_zero());
    CHECK(divrem(b, g).remainder.is_zero());
    if (!common.is_zero()) CHECK(divrem(g, common).remainder.is_zero());
  }
}

TEST_CASE("squarefree_part examples") {
  const QPoly x1 = oracle::linear(Rational(1));
  const QPoly x2 = oracle::linear(Rational(2));
  // (x-1)^2 (x-2) -> (x-1)(x-2), built here by multiplication.
  CHECK(squarefree_part(x1 * x1 * x2) == x1 * x2);
  CHECK(squarefree_part(x1 * x1 * x2) == poly({2, -3, 1}));
  CHECK(squarefree_part(oracle::linear(Rational(5))) == poly({-5, 1}));
  CHECK(squarefree_part(poly({0, 0, 0, 1})) == poly({0, 1}));
  CHECK(squarefree_part(poly({1})) == poly({1}));
  CHECK_THROWS_AS(squarefree_part(QPoly()), std::domain_error);
  CHECK_THROWS_AS(squarefree_part(poly({1, 2})), PreconditionError);
}

TEST_CASE("squarefree_part is squarefree with the same roots") {
  SampleRng rng(23);
  for (int k = 0; k < 60; ++k) {
    QPoly f = poly({1});
    std::vector<Rational> roots;
    const long distinct = rng.uniform(1, 4);
    for (long r = 0; r < distinct; ++r) {
      const Rational root(rng.uniform(-6, 6));
      if (std::find(roots.begin(), roots.end(), root) != roots.end()) continue;
      roots.push_back(root);
      f = f * oracle::poly_power(oracle::linear(root), static_cast<std::size_t>(rng.uniform(1, 3)));
    }
    const QPoly s = squarefree_part(f);
    CHECK(s.degree() == roots.size());
    CHECK(gcd(s, s.derivative()) == poly({1}));
    for (const auto& root : roots) CHECK(s.evaluate(root).is_zero());
    CHECK(divrem(f, s).remainder.is_zero());
  }
}

TEST_CASE("squarefree_part guards inseparable cases in characteristic p") {
  const std::uint64_t p = 3;
  // x^3 - 1 = (x - 1)^3 over GF(3) and its derivative vanishes.
  const auto f = Polynomial<ModP>::from_coefficients({ModP(-1, p), ModP(0, p), ModP(0, p), ModP(1, p)});
  CHECK_THROWS_AS(squarefree_part(f), UnsupportedFieldError);
  const auto g = Polynomial<ModP>::from_coefficients({ModP(1, p), ModP(-2, p), ModP(1, p)});  // (x-1)^2
  CHECK(squarefree_part(g) == Polynomial<ModP>::from_coefficients({ModP(-1, p), ModP(1, p)}));
}
