#pragma once

#include <string>
#include <utility>
#include <vector>

#include "symirr/exactnum.hpp"

namespace symirr {

// Outcome of an exact inequality lhs < rhs (or lhs <= rhs when strict is false).
struct BoundReport {
  std::string label;
  BigRational lhs;
  BigRational rhs;
  bool strict = true;
  std::vector<std::pair<std::string, std::string>> context;

  bool holds() const { return strict ? lhs < rhs : lhs <= rhs; }
  std::string verdict() const { return holds() ? "holds" : "fails"; }
  // "label lhs rhs verdict"
  std::string to_line() const;
};

BoundReport steinberg_product_bound(unsigned d, unsigned ell, unsigned k);

BigInt weil_degree_sp(unsigned n, std::uint64_t q, int sign);

struct RationalDegree {
  BigRational value;
  bool integral = false;
};
// (q^n - (-1)^n q)/(q+1), evaluated literally; integrality is reported, never forced.
RationalDegree weil_degree_su0(unsigned n, std::uint64_t q);
// (q^n + (-1)^n q)/(q+1), the smallest unitary Weil degree; always an integer.
BigInt unitary_weil_degree(unsigned n, std::uint64_t q);

struct SpinDims {
  unsigned kappa = 0;
  BigInt d1;
  BigInt d2;
  BigRational d3_lower;
};
SpinDims basic_spin_dims(unsigned n, std::uint64_t ell);

struct WeilPowerDegrees {
  BigInt d1;  // dim Sym^4 of the (3^n-1)/2 Weil module, closed form
  BigInt d2;  // dim Wedge^4 of the (3^n+1)/2 Weil module, closed form
};
WeilPowerDegrees weil_sp3_power_degrees(unsigned n);

struct TracelessDims {
  BigInt two_omega1;
  BigInt four_omega1;
  bool has_omega4 = false;
  BigInt omega4;
};
TracelessDims traceless_power_dims(unsigned d);

enum class LieFamily { PSL, PSU, PSp_odd, Omega_odd, POmega_even, E6, E6_twisted, E7, E8, F4_odd, D4_triality, G2 };

LieFamily parse_lie_family(const std::string& s);
std::string to_string(LieFamily f);
std::vector<LieFamily> all_lie_families();
bool is_exceptional(LieFamily f);

struct LieFamilyCase {
  LieFamily family;
  unsigned n = 0;  // ignored by the exceptional families
  std::uint64_t q = 0;
};

// Throws DomainError for parameters outside the family's admissible range.
BoundReport generic_case_check(const LieFamilyCase& c);

enum class KeyVariant { Key1, Key2Wide, Key2Narrow };
KeyVariant parse_key_variant(const std::string& s);
BigRational key_constant(KeyVariant v);
BoundReport key_inequality_check(KeyVariant v, const BigInt& q_mod_z, const BigInt& index_gc);

enum class PowerKind { Sym, Ext };
PowerKind parse_power_kind(const std::string& s);
std::string to_string(PowerKind k);

// lhs = m(G), rhs = dim X^k(V) at d = d_min; holds means the window closes.
BoundReport sporadic_window_check(const BigInt& d_min, const BigInt& m_g, unsigned k, PowerKind kind,
                                  const std::string& label = "window");

// floor(sqrt(|G|/|Z|)).
BigInt m_bound(const BigInt& group_order, const BigInt& center_order);

}  // namespace symirr
