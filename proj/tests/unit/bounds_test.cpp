#include <gtest/gtest.h>

#include "symirr/bounds.hpp"
#include "symirr/errors.hpp"
#include "symirr/plethysm.hpp"

using namespace symirr;

TEST(Bounds, SteinbergExamples) {
  auto r = steinberg_product_bound(3, 3, 4);
  EXPECT_EQ(r.lhs, 9);
  EXPECT_EQ(r.rhs, 15);
  EXPECT_TRUE(r.holds());
  r = steinberg_product_bound(3, 2, 2);
  EXPECT_EQ(r.lhs, 3);
  EXPECT_EQ(r.rhs, 6);
  r = steinberg_product_bound(5, 5, 5);
  EXPECT_EQ(r.lhs, 5);
  EXPECT_EQ(r.rhs, 126);
  EXPECT_TRUE(r.holds());
  EXPECT_EQ(r.to_line(), "steinberg(d=5,l=5,k=5) 5 126 holds");
  EXPECT_THROW(steinberg_product_bound(2, 2, 2), DomainError);
  EXPECT_THROW(steinberg_product_bound(3, 4, 5), DomainError);
  EXPECT_THROW(steinberg_product_bound(3, 5, 4), DomainError);
}

TEST(Bounds, SteinbergGridHoldsStrictly) {
  for (unsigned d = 3; d <= 10; ++d)
    for (unsigned ell : {2u, 3u, 5u, 7u})
      for (unsigned k = ell; k <= 12; ++k) EXPECT_TRUE(steinberg_product_bound(d, ell, k).holds()) << d << ell << k;
}

TEST(Bounds, WeilDegrees) {
  EXPECT_EQ(weil_degree_sp(2, 3, 1), 5);
  EXPECT_EQ(weil_degree_sp(2, 3, -1), 4);
  EXPECT_EQ(weil_degree_sp(1, 5, -1), 2);
  EXPECT_THROW(weil_degree_sp(2, 4, 1), DomainError);
}

TEST(Bounds, UnitaryZetaZeroFormulaIsNeverIntegral) {
  auto r = weil_degree_su0(3, 3);
  EXPECT_EQ(r.value, BigRational(15, 2));
  EXPECT_FALSE(r.integral);
  r = weil_degree_su0(4, 2);
  EXPECT_EQ(r.value, BigRational(14, 3));
  EXPECT_FALSE(r.integral);
  r = weil_degree_su0(6, 2);
  EXPECT_EQ(r.value, BigRational(62, 3));
  EXPECT_FALSE(r.integral);
  for (unsigned n = 3; n <= 9; ++n) {
    for (std::uint64_t q : {2u, 3u, 4u, 5u, 7u, 8u, 9u}) {
      EXPECT_FALSE(weil_degree_su0(n, q).integral) << n << "," << q;
      const BigInt u = unitary_weil_degree(n, q);
      BigRational gap(2 * ((n % 2) ? -1 : 1) * static_cast<long>(q), static_cast<long>(q + 1));
      gap.canonicalize();
      EXPECT_EQ(BigRational(u), weil_degree_su0(n, q).value + gap);
    }
  }
  EXPECT_EQ(unitary_weil_degree(4, 2), 6);  // SU4(2) has an irreducible of degree 6
  EXPECT_EQ(unitary_weil_degree(3, 3), 6);
}

TEST(Bounds, BasicSpinDims) {
  auto s = basic_spin_dims(14, 7);
  EXPECT_EQ(s.kappa, 1u);
  EXPECT_EQ(s.d1, 32);
  EXPECT_EQ(s.d2, 64);
  s = basic_spin_dims(14, 0);
  EXPECT_EQ(s.kappa, 0u);
  EXPECT_EQ(s.d1, 64);
  s = basic_spin_dims(12, 5);
  EXPECT_EQ(s.d1, 32);
  EXPECT_EQ(s.d2, 32);
  // 5 | 10, so D1_10 = 8 and D2_10 = 16; both terms give 56.
  EXPECT_EQ(s.d3_lower, 56);
  EXPECT_EQ(basic_spin_dims(9, 0).d3_lower, 16);  // max(4*D1_7, 2*D2_7) = max(16, 16)
  EXPECT_THROW(basic_spin_dims(7, 0), DomainError);
  EXPECT_THROW(basic_spin_dims(10, 4), DomainError);
}

TEST(Bounds, WeilPowerDegreesMatchBinomials) {
  EXPECT_EQ(weil_sp3_power_degrees(2).d1, 35);
  EXPECT_EQ(weil_sp3_power_degrees(2).d2, 5);
  EXPECT_EQ(weil_sp3_power_degrees(3).d1, 1820);
  EXPECT_EQ(weil_sp3_power_degrees(3).d2, 1001);
  for (unsigned n = 2; n <= 12; ++n) {
    const BigInt t = pow_int(3, n);
    const auto w = weil_sp3_power_degrees(n);
    EXPECT_EQ(w.d1, sym_dim((t - 1) / 2, 4));
    EXPECT_EQ(w.d2, ext_dim((t + 1) / 2, 4));
  }
}

TEST(Bounds, TracelessDims) {
  EXPECT_EQ(traceless_power_dims(7).four_omega1, 182);
  EXPECT_EQ(traceless_power_dims(6).four_omega1, 105);
  EXPECT_EQ(traceless_power_dims(12).omega4, 429);
  EXPECT_EQ(traceless_power_dims(3).two_omega1, 5);
  EXPECT_FALSE(traceless_power_dims(7).has_omega4);
}

TEST(Bounds, GenericCaseExamples) {
  auto r = generic_case_check({LieFamily::PSL, 6, 2});
  EXPECT_EQ(r.lhs, 65536);
  EXPECT_EQ(r.rhs, 29295);
  EXPECT_FALSE(r.holds());
  r = generic_case_check({LieFamily::PSU, 8, 2});
  EXPECT_EQ(r.lhs, 1 << 24);
  EXPECT_EQ(r.rhs, 24 * 255 * 258);
  EXPECT_FALSE(r.holds());
  r = generic_case_check({LieFamily::E8, 0, 2});
  EXPECT_EQ(r.lhs, BigRational(pow_int(2, 112)));
  EXPECT_FALSE(r.holds());
}

TEST(Bounds, GenericCaseRangeChecks) {
  EXPECT_THROW(generic_case_check({LieFamily::PSL, 5, 2}), DomainError);
  EXPECT_THROW(generic_case_check({LieFamily::PSU, 6, 2}), DomainError);
  EXPECT_THROW(generic_case_check({LieFamily::PSU, 7, 2}), DomainError);
  EXPECT_THROW(generic_case_check({LieFamily::PSp_odd, 2, 3}), DomainError);
  EXPECT_THROW(generic_case_check({LieFamily::PSp_odd, 2, 5}), DomainError);
  EXPECT_THROW(generic_case_check({LieFamily::PSp_odd, 3, 4}), DomainError);
  EXPECT_THROW(generic_case_check({LieFamily::Omega_odd, 3, 3}), DomainError);
  EXPECT_THROW(generic_case_check({LieFamily::POmega_even, 4, 2}), DomainError);
  EXPECT_THROW(generic_case_check({LieFamily::E6_twisted, 0, 2}), DomainError);
  EXPECT_THROW(generic_case_check({LieFamily::F4_odd, 0, 4}), DomainError);
  EXPECT_THROW(generic_case_check({LieFamily::D4_triality, 0, 2}), DomainError);
  EXPECT_THROW(generic_case_check({LieFamily::G2, 0, 9}), DomainError);
  EXPECT_THROW(generic_case_check({LieFamily::G2, 0, 4}), DomainError);
  EXPECT_THROW(generic_case_check({LieFamily::PSL, 6, 6}), DomainError);
}

TEST(Bounds, GenericCaseGridFailsEverywhere) {
  // Once the contradiction appears it persists as q and n grow.
  for (LieFamily fam : all_lie_families()) {
    const unsigned nmax = is_exceptional(fam) ? 0 : 12;
    for (unsigned n = 0; n <= nmax; ++n) {
      for (std::uint64_t q : {2u, 3u, 4u, 5u, 7u, 8u, 9u, 11u, 13u, 16u, 25u, 27u}) {
        try {
          EXPECT_FALSE(generic_case_check({fam, n, q}).holds()) << to_string(fam) << " n=" << n << " q=" << q;
        } catch (const DomainError&) {
        }
      }
    }
  }
}

TEST(Bounds, KeyInequality) {
  EXPECT_TRUE(key_inequality_check(KeyVariant::Key1, 4, 100).holds());
  EXPECT_EQ(key_inequality_check(KeyVariant::Key1, 4, 100).rhs, 150);
  EXPECT_FALSE(key_inequality_check(KeyVariant::Key1, 100, 100).holds());
  // PSL(6,2): (Q:Z) = q^{2n-4}, (G:Z(G)C) <= (q^n-1)(q^n-q).
  const auto k = key_inequality_check(KeyVariant::Key2Wide, pow_int(2, 8), 63 * 62);
  const auto g = generic_case_check({LieFamily::PSL, 6, 2});
  EXPECT_EQ(k.lhs, g.lhs);
  EXPECT_EQ(k.rhs, g.rhs);
  EXPECT_EQ(k.holds(), g.holds());
  EXPECT_EQ(key_constant(KeyVariant::Key2Narrow), 24);
}

TEST(Bounds, SporadicWindows) {
  const BigInt monster_m = BigInt(26) * pow_int(10, 25);
  EXPECT_TRUE(sporadic_window_check(196882, monster_m, 6, PowerKind::Ext).holds());
  EXPECT_TRUE(sporadic_window_check(8900000, monster_m, 4, PowerKind::Sym).holds());
  EXPECT_FALSE(sporadic_window_check(8800000, monster_m, 4, PowerKind::Sym).holds());
  const BigInt baby_m("29823129106907136");
  EXPECT_TRUE(sporadic_window_check(29130, baby_m, 4, PowerKind::Sym).holds());
  EXPECT_TRUE(sporadic_window_check(4370, baby_m, 6, PowerKind::Ext).holds());
  // Exact largest Monster degree sits under the decimal bound.
  EXPECT_LT(BigInt("258823477531055064045234375"), monster_m);
}

TEST(Bounds, MBound) {
  EXPECT_EQ(m_bound(120, 2), 7);
  EXPECT_EQ(m_bound(1, 1), 1);
  EXPECT_THROW(m_bound(120, 7), DomainError);
  BigInt prev = 0;
  for (long n = 1; n <= 200; ++n) {
    const BigInt m = m_bound(n, 1);
    EXPECT_GE(m, prev);
    prev = m;
  }
}

TEST(Bounds, ParsersRejectUnknownNames) {
  EXPECT_EQ(parse_lie_family("2E6"), LieFamily::E6_twisted);
  EXPECT_THROW(parse_lie_family("B2"), ParseError);
  EXPECT_THROW(parse_key_variant("key3"), ParseError);
  EXPECT_THROW(parse_power_kind("tensor"), ParseError);
}
