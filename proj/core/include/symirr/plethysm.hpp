#pragma once

#include <compare>
#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "symirr/chartab.hpp"

namespace symirr {

struct Partition {
  std::vector<unsigned> parts;  // weakly decreasing, all positive

  Partition() = default;
  explicit Partition(std::vector<unsigned> p);
  // Accepts "2,1", "(2,1)", "2 1"; "" and "()" give the empty partition.
  static Partition parse(std::string_view text);

  unsigned size() const;
  std::size_t length() const { return parts.size(); }
  Partition conjugate() const;
  std::string to_string() const;

  friend auto operator<=>(const Partition&, const Partition&) = default;
};

// All partitions of k, in decreasing lexicographic order.
std::vector<Partition> partitions_of(unsigned k);

// g -> f(g^m).
ClassFunction adams(const ClassFunction& f, std::int64_t m);

// Memoized Adams, symmetric and exterior powers of one class function.
// Not safe for concurrent use; share results, not the cache.
class PowerOperations {
 public:
  explicit PowerOperations(ClassFunction f);

  const ClassFunction& base() const { return f_; }
  const ClassFunction& adams(unsigned m);
  const ClassFunction& sym(unsigned k);
  const ClassFunction& ext(unsigned k);
  // Jacobi-Trudi determinant det(h_{lambda_i - i + j}).
  ClassFunction schur(const Partition& lambda);

 private:
  ClassFunction f_;
  bool integral_;
  std::map<unsigned, ClassFunction> adams_;
  std::map<unsigned, ClassFunction> sym_;
  std::map<unsigned, ClassFunction> ext_;

  const ClassFunction& newton(std::map<unsigned, ClassFunction>& cache, unsigned k, bool alternating);
};

ClassFunction sym_power(const ClassFunction& f, unsigned k);
ClassFunction ext_power(const ClassFunction& f, unsigned k);
ClassFunction schur_functor(const ClassFunction& f, const Partition& lambda);

// C(d+k-1, k) and C(d, k).
BigInt sym_dim(const BigInt& d, unsigned long k);
BigInt ext_dim(const BigInt& d, unsigned long k);

}  // namespace symirr
