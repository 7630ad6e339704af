#pragma once

#include <string>
#include <vector>

#include "symirr/bounds.hpp"
#include "symirr/chartab.hpp"
#include "symirr/plethysm.hpp"

namespace symirr {

struct Decomposition {
  std::vector<BigInt> multiplicities;
  bool is_proper = true;

  // "e8", "2*e1+e3-e4"; 1-based indices.
  std::string to_string() const;
  std::size_t nonzero_count() const;
};

// Throws DomainError unless every <f, chi_i> is a rational integer.
Decomposition decompose(const ClassFunction& f);
// Throws DomainError for virtual (improper) input.
bool is_irreducible(const ClassFunction& f);

enum class IndicatorType { Symplectic = -1, Complex = 0, Orthogonal = 1 };

// (1/|G|) sum_c |c| f(c^2) for any class function.
Cyclotomic frobenius_schur_value(const ClassFunction& f);
// For irreducible f only; a value outside {-1,0,1} raises DomainError.
IndicatorType frobenius_schur(const ClassFunction& f);
int to_int(IndicatorType t);

struct ContainmentReport {
  IndicatorType indicator;
  unsigned k;
  PowerKind power;      // Sym for orthogonal, Ext for symplectic
  bool target_trivial;  // true: multiplicity of 1; false: multiplicity of f
  BigInt multiplicity;
  bool holds() const { return multiplicity >= 1; }
  std::string describe() const;
};

// Even k: X^k(f) contains 1; odd k: X^k(f) contains f, with X = Sym for
// indicator +1 and X = Wedge for indicator -1 (then 1 <= k <= f(1)-1).
ContainmentReport containment_by_type(const ClassFunction& f, unsigned k);
ContainmentReport containment_by_type(PowerOperations& ops, unsigned k);

enum class Parity { Even, Odd };
Parity parse_parity(const std::string& s);

// dim <= index (k even) or dim <= d * index (k odd); non-strict.
BoundReport index_bound_check(const BigInt& dim, const BigInt& degree, const BigInt& index, Parity parity);

}  // namespace symirr
