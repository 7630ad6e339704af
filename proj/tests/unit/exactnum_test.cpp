#include <gtest/gtest.h>

#include <random>

#include "symirr/errors.hpp"
#include "symirr/exactnum.hpp"

using symirr::BigRational;
using symirr::Cyclotomic;

namespace {

Cyclotomic z(std::uint64_t n, std::int64_t k) { return Cyclotomic::root_of_unity(n, k); }

// Random element of Q(zeta_n) for n drawn from a small menu.
Cyclotomic random_cyc(std::mt19937_64& rng) {
  static const std::uint64_t conductors[] = {1, 3, 4, 5, 8, 9, 12, 15, 20};
  std::uniform_int_distribution<int> pick(0, 8), coef(-4, 4), den(1, 3), terms(1, 4);
  const std::uint64_t n = conductors[pick(rng)];
  Cyclotomic x;
  for (int t = terms(rng); t > 0; --t) {
    std::uniform_int_distribution<std::int64_t> e(0, static_cast<std::int64_t>(n) - 1);
    x += Cyclotomic(BigRational(coef(rng), den(rng))) * z(n, e(rng));
  }
  return x;
}

}  // namespace

TEST(Exactnum, RootOfUnityIdentity) {
  EXPECT_EQ(z(1, 0), Cyclotomic(1L));
  EXPECT_EQ(z(7, 7), Cyclotomic(1L));
  EXPECT_EQ(z(2, 1), Cyclotomic(-1L));
  EXPECT_THROW(z(0, 1), symirr::DomainError);
}

TEST(Exactnum, ZetaThreeMinimalPolynomial) { EXPECT_EQ(z(3, 1) + z(3, 2), Cyclotomic(-1L)); }

TEST(Exactnum, GoldenRatioConjugateSatisfiesQuadratic) {
  const Cyclotomic e = z(5, 2) + z(5, 3);
  EXPECT_FALSE(e.is_rational());
  EXPECT_EQ(e.conductor(), 5u);
  EXPECT_EQ(e * e + e, Cyclotomic(1L));
}

TEST(Exactnum, MultiplicationExamples) {
  EXPECT_EQ(z(5, 1) * z(5, 4), Cyclotomic(1L));
  EXPECT_EQ(z(4, 1) * z(4, 1), Cyclotomic(-1L));
  std::mt19937_64 rng(7);
  for (int i = 0; i < 20; ++i) {
    const Cyclotomic x = random_cyc(rng);
    EXPECT_EQ((z(3, 1) + z(3, 2)) * x, -x);
  }
}

TEST(Exactnum, Conjugation) {
  EXPECT_EQ(z(7, 3).conj(), z(7, 4));
  EXPECT_EQ(Cyclotomic(BigRational(-5, 3)).conj(), Cyclotomic(BigRational(-5, 3)));
  std::mt19937_64 rng(11);
  for (int i = 0; i < 50; ++i) {
    const Cyclotomic a = random_cyc(rng);
    const Cyclotomic b = random_cyc(rng);
    const Cyclotomic n = a.conj() * a;
    EXPECT_EQ(n.conj(), n);
    EXPECT_EQ(a.conj().conj(), a);
    EXPECT_EQ((a * b).conj(), a.conj() * b.conj());
    EXPECT_EQ((a + b).conj(), a.conj() + b.conj());
  }
}

TEST(Exactnum, ToRational) {
  EXPECT_EQ(Cyclotomic(1L).to_rational(), BigRational(1));
  EXPECT_EQ((z(3, 1) + z(3, 2)).to_rational(), BigRational(-1));
  EXPECT_THROW(z(5, 1).to_rational(), symirr::DomainError);
}

TEST(Exactnum, ConductorIsMinimal) {
  EXPECT_EQ(z(12, 4), z(3, 1));
  EXPECT_EQ(z(12, 4).conductor(), 3u);
  EXPECT_EQ(z(6, 1).conductor(), 3u);  // zeta_6 = -zeta_3^2
  EXPECT_EQ(z(6, 1), -z(3, 2));
  const Cyclotomic sqrt2 = z(8, 1) + z(8, 7);
  EXPECT_EQ(sqrt2.conductor(), 8u);
  EXPECT_EQ(sqrt2 * sqrt2, Cyclotomic(2L));
  // sqrt(-3) = zeta_3 - zeta_3^2 lives in conductor 3 even when built from zeta_12.
  const Cyclotomic s = z(12, 4) - z(12, 8);
  EXPECT_EQ(s.conductor(), 3u);
  EXPECT_EQ(s * s, Cyclotomic(-3L));
  // zeta_15 + zeta_15^4 + ... sums of Galois orbits collapse.
  Cyclotomic sum;
  for (int k = 0; k < 15; ++k) sum += z(15, k);
  EXPECT_TRUE(sum.is_zero());
}

TEST(Exactnum, FieldAxiomsRandomized) {
  std::mt19937_64 rng(2024);
  for (int i = 0; i < 60; ++i) {
    const Cyclotomic a = random_cyc(rng), b = random_cyc(rng), c = random_cyc(rng);
    EXPECT_EQ((a + b) + c, a + (b + c));
    EXPECT_EQ((a * b) * c, a * (b * c));
    EXPECT_EQ(a * (b + c), a * b + a * c);
    EXPECT_EQ(a + b, b + a);
    EXPECT_EQ(a * b, b * a);
    EXPECT_TRUE((a - a).is_zero());
    if (!a.is_zero()) EXPECT_EQ(a * a.inverse(), Cyclotomic(1L));
  }
}

TEST(Exactnum, CanonicalizationIsIdempotent) {
  std::mt19937_64 rng(99);
  for (int i = 0; i < 60; ++i) {
    const Cyclotomic a = random_cyc(rng) * random_cyc(rng);
    EXPECT_EQ(a.recanonicalized(), a);
    EXPECT_EQ(a.recanonicalized().recanonicalized(), a.recanonicalized());
  }
}

TEST(Exactnum, ParseAndPrintRoundTrip) {
  const Cyclotomic x = Cyclotomic::parse("3-E(5)^2-E(5)^3");
  EXPECT_EQ(x, Cyclotomic(3L) - z(5, 2) - z(5, 3));
  EXPECT_EQ(Cyclotomic::parse("-2*E(3)+E(3)^2"), -Cyclotomic(2L) * z(3, 1) + z(3, 2));
  EXPECT_EQ(Cyclotomic::parse("(1+E(4))^2"), Cyclotomic(2L) * z(4, 1));
  EXPECT_EQ(Cyclotomic::parse("1/2 - 3/4"), Cyclotomic(BigRational(-1, 4)));
  EXPECT_EQ(Cyclotomic::parse("E(5)^-1"), z(5, 4));
  std::mt19937_64 rng(5);
  for (int i = 0; i < 80; ++i) {
    const Cyclotomic a = random_cyc(rng);
    EXPECT_EQ(Cyclotomic::parse(a.to_string()), a) << a.to_string();
  }
}

TEST(Exactnum, ParseErrors) {
  EXPECT_THROW(Cyclotomic::parse(""), symirr::ParseError);
  EXPECT_THROW(Cyclotomic::parse("E(5"), symirr::ParseError);
  EXPECT_THROW(Cyclotomic::parse("1.5"), symirr::ParseError);
  EXPECT_THROW(Cyclotomic::parse("E(0)"), symirr::ParseError);
  EXPECT_THROW(Cyclotomic::parse("1/0"), symirr::ParseError);
}

TEST(Exactnum, IntegralityOnIntegralBasis) {
  EXPECT_TRUE((z(5, 1) + z(5, 4)).is_integral());
  EXPECT_FALSE(Cyclotomic(BigRational(1, 2)).is_integral());
  // (1 + sqrt(5))/2 = -(zeta_5^2 + zeta_5^3) is an algebraic integer.
  EXPECT_TRUE((-(z(5, 2) + z(5, 3))).is_integral());
  EXPECT_FALSE((Cyclotomic(BigRational(1, 2)) * (z(5, 1) + z(5, 4))).is_integral());
}

TEST(Exactnum, Helpers) {
  EXPECT_EQ(symirr::factorize(360), (std::vector<std::pair<std::uint64_t, unsigned>>{{2, 3}, {3, 2}, {5, 1}}));
  EXPECT_EQ(symirr::prime_power_base(49), 7u);
  EXPECT_EQ(symirr::prime_power_base(12), 0u);
  EXPECT_TRUE(symirr::is_prime(97));
  EXPECT_FALSE(symirr::is_prime(1));
  EXPECT_EQ(symirr::binomial(10, 3), 120);
}
