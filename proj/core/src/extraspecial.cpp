#include "symirr/extraspecial.hpp"

#include "symirr/errors.hpp"
#include "symirr/plethysm.hpp"

namespace symirr {

namespace {

BigInt trivial_multiplicity(const ClassFunction& f) {
  const Cyclotomic m = inner_product(f, ClassFunction::constant(f.table(), Cyclotomic(1L)));
  if (!m.is_rational() || !m.is_integral()) throw DomainError("fixed-space dimension " + m.to_string() + " is not an integer");
  return m.to_rational().get_num();
}

FixedDims fixed_dims_of(const ClassFunction& chi, unsigned k) {
  PowerOperations ops(chi);
  return {trivial_multiplicity(ops.sym(k)), trivial_multiplicity(ops.ext(k))};
}

}  // namespace

ExtraspecialVariant default_extraspecial_variant(std::uint64_t p) {
  return p == 2 ? ExtraspecialVariant::EvenPlus : ExtraspecialVariant::OddExponentP;
}

std::vector<FixedDims> extraspecial_fixed_dims_all(std::uint64_t p, unsigned n, unsigned k, ExtraspecialVariant variant) {
  if (k == 0) throw DomainError("k must be positive");
  const TablePtr t = extraspecial_table(p, n, variant);
  const Cyclotomic deg(pow_int(BigInt(std::to_string(p)), n));
  std::vector<FixedDims> out;
  for (const auto& chi : t->irreducibles()) {
    if (chi.degree() == deg) out.push_back(fixed_dims_of(chi, k));
  }
  return out;
}

FixedDims extraspecial_fixed_dims(std::uint64_t p, unsigned n, unsigned k, ExtraspecialVariant variant) {
  if (k == 0) throw DomainError("k must be positive");
  const TablePtr t = extraspecial_table(p, n, variant);
  const Cyclotomic deg(pow_int(BigInt(std::to_string(p)), n));
  for (std::size_t i = 0; i < t->irreducible_count(); ++i) {
    const ClassFunction chi = t->irreducible(i);
    if (chi.degree() == deg) return fixed_dims_of(chi, k);
  }
  throw DomainError("no faithful irreducible found");
}

FixedDims extraspecial_fixed_dims(std::uint64_t p, unsigned n, unsigned k) {
  return extraspecial_fixed_dims(p, n, k, default_extraspecial_variant(p));
}

std::optional<FixedDims> extraspecial_closed_form(std::uint64_t p, unsigned n, unsigned k) {
  const BigInt d = pow_int(BigInt(std::to_string(p)), n);
  if (p == 3 && k == 3) return FixedDims{(d + 1) / 2, (d - 1) / 2};
  if (p == 2 && k == 4) return FixedDims{(d + 1) * (d + 2) / 6, (d - 1) * (d - 2) / 6};
  return std::nullopt;
}

}  // namespace symirr
