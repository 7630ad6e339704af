#include "symirr/analysis.hpp"

#include <sstream>

#include "symirr/errors.hpp"

namespace symirr {

std::string Decomposition::to_string() const {
  std::ostringstream os;
  bool first = true;
  for (std::size_t i = 0; i < multiplicities.size(); ++i) {
    const BigInt& m = multiplicities[i];
    if (m == 0) continue;
    if (m < 0) {
      os << '-';
    } else if (!first) {
      os << '+';
    }
    first = false;
    if (abs(m) != 1) os << BigInt(abs(m)).get_str() << '*';
    os << 'e' << i + 1;
  }
  return first ? "0" : os.str();
}

std::size_t Decomposition::nonzero_count() const {
  std::size_t n = 0;
  for (const auto& m : multiplicities) n += (m != 0);
  return n;
}

Decomposition decompose(const ClassFunction& f) {
  const CharacterTable& t = *f.table();
  Decomposition d;
  for (std::size_t i = 0; i < t.irreducible_count(); ++i) {
    const Cyclotomic ip = inner_product(f, t.irreducible(i));
    if (!ip.is_rational() || !ip.is_integral()) {
      throw DomainError("multiplicity of irreducible " + std::to_string(i + 1) + " is " + ip.to_string() +
                        ", not an integer; input is not a virtual character");
    }
    BigInt m = ip.to_rational().get_num();
    if (m < 0) d.is_proper = false;
    d.multiplicities.push_back(std::move(m));
  }
  return d;
}

bool is_irreducible(const ClassFunction& f) {
  const Decomposition d = decompose(f);
  if (!d.is_proper) throw DomainError("irreducibility is only defined for proper characters");
  // For a proper character, <f,f> = sum m_i^2.
  BigInt n2 = 0;
  for (const auto& m : d.multiplicities) n2 += m * m;
  return n2 == 1;
}

Cyclotomic frobenius_schur_value(const ClassFunction& f) {
  const CharacterTable& t = *f.table();
  Cyclotomic s;
  for (std::size_t c = 0; c < t.class_count(); ++c) s += Cyclotomic(t.cls(c).size) * f[power_class(t, c, 2)];
  s *= BigRational(1) / BigRational(t.order());
  return s;
}

IndicatorType frobenius_schur(const ClassFunction& f) {
  const Cyclotomic v = frobenius_schur_value(f);
  if (v == Cyclotomic(1L)) return IndicatorType::Orthogonal;
  if (v == Cyclotomic(-1L)) return IndicatorType::Symplectic;
  if (v.is_zero()) return IndicatorType::Complex;
  throw DomainError("indicator value " + v.to_string() + " is outside {-1,0,1}; the table is inconsistent");
}

int to_int(IndicatorType t) { return static_cast<int>(t); }

std::string ContainmentReport::describe() const {
  std::ostringstream os;
  os << "<" << to_string(power) << "^" << k << "(f), " << (target_trivial ? "1" : "f") << "> = " << multiplicity.get_str();
  return os.str();
}

ContainmentReport containment_by_type(PowerOperations& ops, unsigned k) {
  const ClassFunction& f = ops.base();
  if (k == 0) throw DomainError("containment needs k >= 1");
  if (!is_irreducible(f)) throw DomainError("containment_by_type needs an irreducible character");
  const IndicatorType ind = frobenius_schur(f);
  if (ind == IndicatorType::Complex) throw DomainError("character has indicator 0 (not self-dual)");
  ContainmentReport r{ind, k, ind == IndicatorType::Orthogonal ? PowerKind::Sym : PowerKind::Ext, k % 2 == 0, 0};
  if (r.power == PowerKind::Ext) {
    const BigRational deg = f.degree().to_rational();
    if (BigRational(k) >= deg) {
      throw DomainError("exterior containment needs 1 <= k <= deg-1, got k = " + std::to_string(k));
    }
  }
  const ClassFunction& power = r.power == PowerKind::Sym ? ops.sym(k) : ops.ext(k);
  const ClassFunction target = r.target_trivial ? ClassFunction::constant(f.table(), Cyclotomic(1L)) : f;
  r.multiplicity = inner_product(power, target).to_rational().get_num();
  return r;
}

ContainmentReport containment_by_type(const ClassFunction& f, unsigned k) {
  PowerOperations ops(f);
  return containment_by_type(ops, k);
}

Parity parse_parity(const std::string& s) {
  if (s == "even") return Parity::Even;
  if (s == "odd") return Parity::Odd;
  throw ParseError("parity must be 'even' or 'odd', got '" + s + "'");
}

BoundReport index_bound_check(const BigInt& dim, const BigInt& degree, const BigInt& index, Parity parity) {
  BoundReport r;
  r.label = "index_bound";
  r.lhs = dim;
  r.rhs = parity == Parity::Even ? index : degree * index;
  r.strict = false;
  r.context = {{"d", degree.get_str()}, {"index", index.get_str()}, {"k", parity == Parity::Even ? "even" : "odd"}};
  return r;
}

}  // namespace symirr
