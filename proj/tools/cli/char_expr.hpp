#pragma once

#include <string_view>

#include "symirr/chartab.hpp"

namespace symirr::cli {

// A bare integer i selects irreducible i (1-based). Otherwise the grammar is
//   expr  := term (('+'|'-') term)*
//   term  := unary ('*' unary)*
//   unary := '-' unary | atom
//   atom  := 'X' INT | INT | 'conj(' expr ')' | 'sym(' expr ',' INT ')'
//          | 'ext(' expr ',' INT ')' | '(' expr ')'
// where an INT inside an expression is a constant class function.
ClassFunction parse_character(const TablePtr& table, std::string_view text);

}  // namespace symirr::cli
