#include <gtest/gtest.h>

#include <random>

#include "support/fixtures.hpp"
#include "symirr/analysis.hpp"
#include "symirr/errors.hpp"
#include "symirr/tablegen.hpp"

using namespace symirr;
using testing_support::fixture;

namespace {

const char* kFixtures[] = {"a5.json", "s5.json", "sl25.json", "sp43.json"};

ClassFunction combination(const CharacterTable& t, const std::vector<long>& m) {
  ClassFunction f = ClassFunction::constant(t.irreducible(0).table(), Cyclotomic());
  for (std::size_t i = 0; i < m.size(); ++i) f += t.irreducible(i) * Cyclotomic(m[i]);
  return f;
}

}  // namespace

TEST(Analysis, DecomposeIrreduciblesGivesBasisVectors) {
  for (const char* f : kFixtures) {
    const auto t = fixture(f);
    for (std::size_t i = 0; i < t->irreducible_count(); ++i) {
      const auto d = decompose(t->irreducible(i));
      for (std::size_t j = 0; j < d.multiplicities.size(); ++j) EXPECT_EQ(d.multiplicities[j], i == j ? 1 : 0);
      EXPECT_TRUE(is_irreducible(t->irreducible(i)));
    }
  }
}

TEST(Analysis, DecomposeRecoversRandomCombinations) {
  std::mt19937_64 rng(17);
  std::uniform_int_distribution<long> dist(-3, 3);
  for (const char* f : kFixtures) {
    const auto t = fixture(f);
    for (int trial = 0; trial < 4; ++trial) {
      std::vector<long> m(t->irreducible_count());
      for (auto& x : m) x = dist(rng);
      const auto d = decompose(combination(*t, m));
      bool proper = true;
      for (std::size_t i = 0; i < m.size(); ++i) {
        EXPECT_EQ(d.multiplicities[i], m[i]);
        proper &= m[i] >= 0;
      }
      EXPECT_EQ(d.is_proper, proper);
    }
  }
}

TEST(Analysis, DecomposeRejectsNonCharacters) {
  const auto t = fixture("a5.json");
  ClassFunction half = t->irreducible(1) * Cyclotomic(BigRational(1, 2));
  EXPECT_THROW(decompose(half), DomainError);
  const ClassFunction spike(t, {Cyclotomic(1L), Cyclotomic(), Cyclotomic(), Cyclotomic(), Cyclotomic()});
  EXPECT_THROW(decompose(spike), DomainError);
}

TEST(Analysis, SL25SymSixIsReducible) {
  const auto f = fixture("sl25.json")->irreducible(1);
  const auto d = decompose(sym_power(f, 6));
  EXPECT_GE(d.nonzero_count(), 2u);
  EXPECT_TRUE(d.is_proper);
}

TEST(Analysis, IrreducibilityVerdicts) {
  const auto t = fixture("s5.json");
  EXPECT_FALSE(is_irreducible(t->irreducible(1) + t->irreducible(2)));
  EXPECT_THROW(is_irreducible(-t->irreducible(1)), DomainError);
  EXPECT_TRUE(is_irreducible(sym_power(fixture("sl25.json")->irreducible(1), 4)));
}

TEST(Analysis, IndicatorExamples) {
  const auto sl = fixture("sl25.json");
  EXPECT_EQ(frobenius_schur(sl->irreducible(0)), IndicatorType::Orthogonal);
  EXPECT_EQ(frobenius_schur(sl->irreducible(1)), IndicatorType::Symplectic);
  const auto c5 = cyclic_table(5);
  EXPECT_EQ(frobenius_schur(c5->irreducible(2)), IndicatorType::Complex);
}

TEST(Analysis, IndicatorVanishesExactlyOnNonRealCharacters) {
  for (const char* f : {"a5.json", "s5.json", "sl25.json", "sp43.json", "2j2.json"}) {
    const auto t = fixture(f);
    for (const auto& chi : t->irreducibles()) {
      EXPECT_EQ(frobenius_schur(chi) == IndicatorType::Complex, chi != chi.conj()) << f;
    }
  }
}

TEST(Analysis, IndicatorSumCountsSquareRootsOfIdentity) {
  for (const char* f : {"a5.json", "s5.json", "sl25.json", "sp43.json", "2j2.json"}) {
    const auto t = fixture(f);
    BigInt lhs = 0;
    for (const auto& chi : t->irreducibles()) lhs += to_int(frobenius_schur(chi)) * chi.degree().to_rational().get_num();
    BigInt rhs = 1;
    for (const auto& c : t->classes()) {
      if (c.element_order == 2) rhs += c.size;
    }
    EXPECT_EQ(lhs, rhs) << f;
  }
}

TEST(Analysis, ContainmentExamples) {
  const auto s5 = fixture("s5.json");
  for (const auto& chi : s5->irreducibles()) {
    if (chi.degree() != Cyclotomic(4L)) continue;
    const auto r = containment_by_type(chi, 4);
    EXPECT_EQ(r.indicator, IndicatorType::Orthogonal);
    EXPECT_TRUE(r.target_trivial);
    EXPECT_TRUE(r.holds());
  }
  const auto triv = s5->irreducible(0);
  for (unsigned k = 2; k <= 6; k += 2) EXPECT_EQ(containment_by_type(triv, k).multiplicity, 1);
}

TEST(Analysis, ContainmentRejectsNonSelfDualXi) {
  const auto t = fixture("sp43.json");
  for (const auto& chi : t->irreducibles()) {
    if (chi.degree() != Cyclotomic(5L)) continue;
    EXPECT_EQ(frobenius_schur(chi), IndicatorType::Complex);
    EXPECT_THROW(containment_by_type(chi, 2), DomainError);
  }
}

TEST(Analysis, SymplecticContainmentOnSp43) {
  const auto t = fixture("sp43.json");
  bool seen = false;
  for (const auto& chi : t->irreducibles()) {
    if (frobenius_schur(chi) != IndicatorType::Symplectic) continue;
    seen = true;
    const auto r = containment_by_type(chi, 2);
    EXPECT_EQ(r.power, PowerKind::Ext);
    EXPECT_TRUE(r.holds());
    break;
  }
  EXPECT_TRUE(seen);
  const auto f = fixture("sl25.json")->irreducible(1);
  EXPECT_THROW(containment_by_type(f, 2), DomainError);  // k must stay below deg = 2
  EXPECT_TRUE(containment_by_type(f, 1).holds());
}

TEST(Analysis, ContainmentHoldsForAllSelfDualIrreducibles) {
  for (const char* f : {"a5.json", "s5.json", "sl25.json"}) {
    const auto t = fixture(f);
    for (const auto& chi : t->irreducibles()) {
      const auto ind = frobenius_schur(chi);
      if (ind == IndicatorType::Complex) continue;
      PowerOperations ops(chi);
      const unsigned deg = static_cast<unsigned>(chi.degree().to_rational().get_num().get_ui());
      for (unsigned k = 1; k <= 6; ++k) {
        if (ind == IndicatorType::Symplectic && k >= deg) break;
        EXPECT_TRUE(containment_by_type(ops, k).holds()) << f << " k=" << k;
      }
    }
  }
}

TEST(Analysis, IndexBoundCheck) {
  EXPECT_TRUE(index_bound_check(70, 5, 100, Parity::Even).holds());
  EXPECT_FALSE(index_bound_check(126, 6, 100, Parity::Even).holds());
  EXPECT_TRUE(index_bound_check(100, 6, 100, Parity::Even).holds());  // non-strict
  EXPECT_TRUE(index_bound_check(126, 6, 100, Parity::Odd).holds());
  const BigInt monster = sym_dim(196882, 4);
  EXPECT_FALSE(index_bound_check(monster, 196882, 100, Parity::Even).holds());
}
