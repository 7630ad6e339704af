#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace symirr {

using BigInt = mpz_class;
using BigRational = mpq_class;

std::string to_string(const BigInt& v);
std::string to_string(const BigRational& v);
BigInt binomial(const BigInt& n, unsigned long k);
BigInt pow_int(const BigInt& base, unsigned long exp);
bool is_prime(std::uint64_t n);
// Returns the prime p when n = p^a with a >= 1, otherwise 0.
std::uint64_t prime_power_base(std::uint64_t n);
std::vector<std::pair<std::uint64_t, unsigned>> factorize(std::uint64_t n);

// An element of Q(zeta_n) stored on the integral basis
//   { zeta_n^e : for every p^a || n, t_p(e) avoids the excluded residues }
// with t_p(e) = e * (n/p^a)^{-1} mod p^a. Odd p excludes t_p < p^{a-1};
// p = 2 excludes t_2 >= 2^{a-1}. The conductor is always the smallest n
// whose field contains the value, so equality is a plain member comparison.
class Cyclotomic {
 public:
  using Term = std::pair<std::uint32_t, BigRational>;

  Cyclotomic() = default;
  Cyclotomic(long v);  // NOLINT(google-explicit-constructor)
  Cyclotomic(const BigInt& v);  // NOLINT(google-explicit-constructor)
  Cyclotomic(const BigRational& v);  // NOLINT(google-explicit-constructor)

  // zeta_n^k; throws DomainError for n == 0.
  static Cyclotomic root_of_unity(std::uint64_t n, std::int64_t k);
  // Sum of coeffs[e] * zeta_n^e; coeffs may have any length (indices taken mod n).
  static Cyclotomic from_dense(std::uint64_t n, std::vector<BigRational> coeffs);
  static Cyclotomic parse(std::string_view text);

  std::uint32_t conductor() const { return conductor_; }
  const std::vector<Term>& terms() const { return terms_; }

  bool is_zero() const { return terms_.empty(); }
  bool is_rational() const { return conductor_ == 1; }
  // True iff the value is an algebraic integer.
  bool is_integral() const;
  BigRational to_rational() const;  // throws DomainError when irrational

  Cyclotomic conj() const { return galois(-1); }
  // The automorphism zeta_n -> zeta_n^a; a must be coprime to the conductor.
  Cyclotomic galois(std::int64_t a) const;
  Cyclotomic inverse() const;

  Cyclotomic operator-() const;
  Cyclotomic& operator+=(const Cyclotomic& o);
  Cyclotomic& operator-=(const Cyclotomic& o);
  Cyclotomic& operator*=(const Cyclotomic& o);
  Cyclotomic& operator/=(const Cyclotomic& o);
  Cyclotomic& operator*=(const BigRational& r);

  friend Cyclotomic operator+(Cyclotomic a, const Cyclotomic& b) { return a += b; }
  friend Cyclotomic operator-(Cyclotomic a, const Cyclotomic& b) { return a -= b; }
  friend Cyclotomic operator*(const Cyclotomic& a, const Cyclotomic& b);
  friend Cyclotomic operator/(Cyclotomic a, const Cyclotomic& b) { return a /= b; }
  friend bool operator==(const Cyclotomic& a, const Cyclotomic& b) {
    return a.conductor_ == b.conductor_ && a.terms_ == b.terms_;
  }

  std::string to_string() const;

  // Re-runs canonicalization; exposed so tests can check idempotence.
  Cyclotomic recanonicalized() const;

 private:
  std::uint32_t conductor_ = 1;
  std::vector<Term> terms_;  // sorted by exponent, nonzero coefficients only

  static Cyclotomic canonical(std::uint64_t n, std::vector<BigRational> dense);
  std::vector<BigRational> dense(std::uint64_t n) const;
};

std::ostream& operator<<(std::ostream& os, const Cyclotomic& c);

}  // namespace symirr
