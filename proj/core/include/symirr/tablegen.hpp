#pragma once

#include <string>

#include "symirr/chartab.hpp"

namespace symirr {

enum class ExtraspecialVariant { OddExponentP, EvenPlus, EvenMinus };

ExtraspecialVariant parse_extraspecial_variant(const std::string& s);
std::string to_string(ExtraspecialVariant v);

TablePtr cyclic_table(std::uint64_t n);

// Table of p^{1+2n}. Noncentral classes are indexed by the nonzero vectors of
// F_p^{2n} (coordinates x_1..x_n, y_1..y_n) in lexicographic order.
TablePtr extraspecial_table(std::uint64_t p, unsigned n, ExtraspecialVariant variant);

TablePtr direct_product_table(const CharacterTable& a, const CharacterTable& b);

}  // namespace symirr
