#include "symirr/plethysm.hpp"

#include <algorithm>
#include <bit>
#include <optional>
#include <sstream>

#include "symirr/errors.hpp"

namespace symirr {

Partition::Partition(std::vector<unsigned> p) : parts(std::move(p)) {
  for (std::size_t i = 0; i < parts.size(); ++i) {
    if (parts[i] == 0) throw DomainError("partition parts must be positive");
    if (i > 0 && parts[i] > parts[i - 1]) throw DomainError("partition parts must be weakly decreasing");
  }
}

Partition Partition::parse(std::string_view text) {
  std::string s;
  for (char c : text) {
    if (c == '(' || c == ')' || c == '[' || c == ']') continue;
    s.push_back(c == ',' ? ' ' : c);
  }
  std::istringstream is(s);
  std::vector<unsigned> parts;
  std::string tok;
  while (is >> tok) {
    if (tok.find_first_not_of("0123456789") != std::string::npos || tok.size() > 6) {
      throw ParseError("bad partition part '" + tok + "'");
    }
    parts.push_back(static_cast<unsigned>(std::stoul(tok)));
  }
  try {
    return Partition(std::move(parts));
  } catch (const DomainError& e) {
    throw ParseError(std::string("partition '") + std::string(text) + "': " + e.what());
  }
}

unsigned Partition::size() const {
  unsigned s = 0;
  for (unsigned p : parts) s += p;
  return s;
}

Partition Partition::conjugate() const {
  std::vector<unsigned> c(parts.empty() ? 0 : parts.front(), 0);
  for (unsigned p : parts) {
    for (unsigned i = 0; i < p; ++i) ++c[i];
  }
  return Partition(std::move(c));
}

std::string Partition::to_string() const {
  std::string s = "(";
  for (std::size_t i = 0; i < parts.size(); ++i) {
    if (i) s += ",";
    s += std::to_string(parts[i]);
  }
  return s + ")";
}

namespace {

void partitions_rec(unsigned rest, unsigned cap, std::vector<unsigned>& cur, std::vector<Partition>& out) {
  if (rest == 0) {
    out.emplace_back(cur);
    return;
  }
  for (unsigned p = std::min(rest, cap); p >= 1; --p) {
    cur.push_back(p);
    partitions_rec(rest - p, p, cur, out);
    cur.pop_back();
  }
}

bool all_integral(const ClassFunction& f) {
  return std::all_of(f.values().begin(), f.values().end(), [](const Cyclotomic& v) { return v.is_integral(); });
}

}  // namespace

std::vector<Partition> partitions_of(unsigned k) {
  std::vector<Partition> out;
  std::vector<unsigned> cur;
  partitions_rec(k, k, cur, out);
  return out;
}

ClassFunction adams(const ClassFunction& f, std::int64_t m) {
  if (m < 1) throw DomainError("Adams operation needs a positive exponent");
  const CharacterTable& t = *f.table();
  std::vector<Cyclotomic> v(t.class_count());
  for (std::size_t c = 0; c < v.size(); ++c) v[c] = f[power_class(t, c, m)];
  return ClassFunction(f.table(), std::move(v));
}

PowerOperations::PowerOperations(ClassFunction f) : f_(std::move(f)), integral_(all_integral(f_)) {}

const ClassFunction& PowerOperations::adams(unsigned m) {
  auto it = adams_.find(m);
  if (it != adams_.end()) return it->second;
  return adams_.emplace(m, symirr::adams(f_, m)).first->second;
}

const ClassFunction& PowerOperations::newton(std::map<unsigned, ClassFunction>& cache, unsigned k, bool alternating) {
  if (cache.empty()) cache.emplace(0, ClassFunction::constant(f_.table(), Cyclotomic(1L)));
  for (unsigned j = cache.rbegin()->first + 1; j <= k; ++j) {
    ClassFunction acc = ClassFunction::constant(f_.table(), Cyclotomic());
    for (unsigned m = 1; m <= j; ++m) {
      ClassFunction term = adams(m) * cache.at(j - m);
      if (alternating && m % 2 == 0) {
        acc -= term;
      } else {
        acc += term;
      }
    }
    acc *= Cyclotomic(BigRational(1, j));
    if (integral_ && !all_integral(acc)) {
      throw DomainError("power recursion produced a non-integral value at degree " + std::to_string(j) +
                        "; the table data is inconsistent");
    }
    cache.emplace(j, std::move(acc));
  }
  return cache.at(k);
}

const ClassFunction& PowerOperations::sym(unsigned k) { return newton(sym_, k, false); }
const ClassFunction& PowerOperations::ext(unsigned k) { return newton(ext_, k, true); }

ClassFunction PowerOperations::schur(const Partition& lambda) {
  const std::size_t l = lambda.length();
  if (l == 0) return ClassFunction::constant(f_.table(), Cyclotomic(1L));
  if (l > 20) throw DomainError("partition too long for the determinant expansion");
  auto entry = [&](std::size_t i, std::size_t j) -> const ClassFunction* {
    const long idx = static_cast<long>(lambda.parts[i]) - static_cast<long>(i) + static_cast<long>(j);
    if (idx < 0) return nullptr;
    return &sym(static_cast<unsigned>(idx));
  };
  // Row-by-row subset expansion: dp[mask] sums signed products over the rows placed so far.
  std::vector<std::optional<ClassFunction>> dp(std::size_t{1} << l);
  dp[0] = ClassFunction::constant(f_.table(), Cyclotomic(1L));
  for (std::size_t mask = 0; mask < dp.size(); ++mask) {
    if (!dp[mask]) continue;
    const std::size_t row = static_cast<std::size_t>(std::popcount(mask));
    if (row == l) continue;
    for (std::size_t j = 0; j < l; ++j) {
      if (mask & (std::size_t{1} << j)) continue;
      const ClassFunction* a = entry(row, j);
      if (a == nullptr) continue;
      ClassFunction term = *dp[mask] * *a;
      const bool odd = std::popcount(mask >> (j + 1)) % 2 == 1;
      auto& slot = dp[mask | (std::size_t{1} << j)];
      if (!slot) {
        slot = odd ? -term : term;
      } else if (odd) {
        *slot -= term;
      } else {
        *slot += term;
      }
    }
    if (mask != 0) dp[mask].reset();
  }
  auto& full = dp.back();
  return full ? *full : ClassFunction::constant(f_.table(), Cyclotomic());
}

ClassFunction sym_power(const ClassFunction& f, unsigned k) { return PowerOperations(f).sym(k); }
ClassFunction ext_power(const ClassFunction& f, unsigned k) { return PowerOperations(f).ext(k); }
ClassFunction schur_functor(const ClassFunction& f, const Partition& lambda) { return PowerOperations(f).schur(lambda); }

BigInt sym_dim(const BigInt& d, unsigned long k) {
  if (d < 0) throw DomainError("dimension must be non-negative");
  if (k == 0) return 1;
  return binomial(d + k - 1, k);
}

BigInt ext_dim(const BigInt& d, unsigned long k) {
  if (d < 0) throw DomainError("dimension must be non-negative");
  return binomial(d, k);
}

}  // namespace symirr
