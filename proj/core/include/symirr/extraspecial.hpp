#pragma once

#include <optional>
#include <vector>

#include "symirr/tablegen.hpp"

namespace symirr {

struct FixedDims {
  BigInt sym_fixed;
  BigInt ext_fixed;
  friend bool operator==(const FixedDims&, const FixedDims&) = default;
};

// Dimensions of the P-fixed subspaces of Sym^k and Wedge^k of the faithful
// module of degree p^n (lowest-index faithful irreducible). p = 2 defaults to the plus type.
FixedDims extraspecial_fixed_dims(std::uint64_t p, unsigned n, unsigned k);
FixedDims extraspecial_fixed_dims(std::uint64_t p, unsigned n, unsigned k, ExtraspecialVariant variant);
// Same computation for every faithful irreducible, in table order.
std::vector<FixedDims> extraspecial_fixed_dims_all(std::uint64_t p, unsigned n, unsigned k, ExtraspecialVariant variant);

// Closed forms for (p, k) = (3, 3): ((d+1)/2, (d-1)/2) and (2, 4):
// ((d+1)(d+2)/6, (d-1)(d-2)/6), with d = p^n; nullopt for other (p, k).
std::optional<FixedDims> extraspecial_closed_form(std::uint64_t p, unsigned n, unsigned k);

ExtraspecialVariant default_extraspecial_variant(std::uint64_t p);

}  // namespace symirr
