#include "symirr/exactnum.hpp"

#include <algorithm>
#include <numeric>
#include <ostream>
#include <sstream>

#include "symirr/errors.hpp"

namespace symirr {

namespace {

constexpr std::uint64_t kMaxConductor = 1u << 20;

std::uint64_t mod_inverse(std::uint64_t a, std::uint64_t m) {
  if (m == 1) return 0;
  std::int64_t t = 0, new_t = 1;
  std::int64_t r = static_cast<std::int64_t>(m), new_r = static_cast<std::int64_t>(a % m);
  while (new_r != 0) {
    std::int64_t q = r / new_r;
    t = std::exchange(new_t, t - q * new_t);
    r = std::exchange(new_r, r - q * new_r);
  }
  if (t < 0) t += static_cast<std::int64_t>(m);
  return static_cast<std::uint64_t>(t);
}

std::uint64_t ipow(std::uint64_t b, unsigned e) {
  std::uint64_t r = 1;
  while (e-- > 0) r *= b;
  return r;
}

std::uint64_t reduce_exp(std::int64_t k, std::uint64_t n) {
  std::int64_t r = k % static_cast<std::int64_t>(n);
  if (r < 0) r += static_cast<std::int64_t>(n);
  return static_cast<std::uint64_t>(r);
}

void check_conductor(std::uint64_t n) {
  if (n == 0) throw DomainError("cyclotomic conductor must be positive");
  if (n > kMaxConductor) throw DomainError("cyclotomic conductor " + std::to_string(n) + " exceeds supported size");
}

// Rewrites dense[] (length n) onto the integral basis, prime by prime.
void reduce_to_basis(std::uint64_t n, std::vector<BigRational>& dense) {
  for (auto [p, a] : factorize(n)) {
    const std::uint64_t pa = ipow(p, a);
    const std::uint64_t pa1 = pa / p;
    const std::uint64_t u = mod_inverse((n / pa) % pa, pa);
    const std::uint64_t step = n / p;
    for (std::uint64_t e = 0; e < n; ++e) {
      if (sgn(dense[e]) == 0) continue;
      const std::uint64_t t = (e * u) % pa;
      if (p == 2) {
        if (t >= pa1) {
          dense[(e + step) % n] -= dense[e];
          dense[e] = 0;
        }
      } else if (t < pa1) {
        const BigRational c = dense[e];
        dense[e] = 0;
        for (std::uint64_t i = 1; i < p; ++i) dense[(e + i * step) % n] -= c;
      }
    }
  }
}

// Tries to move a canonical dense vector into a proper subfield.
// Returns the new conductor, or 0 when n is already minimal.
std::uint64_t shrink(std::uint64_t n, std::vector<BigRational>& dense) {
  if (n % 4 == 2) {
    std::vector<BigRational> out(n / 2);
    for (std::uint64_t e = 0; e < n; e += 2) out[e / 2] = dense[e];
    dense = std::move(out);
    return n / 2;
  }
  for (auto [p, a] : factorize(n)) {
    const std::uint64_t m = n / p;
    if (a >= 2) {
      bool ok = true;
      for (std::uint64_t e = 0; e < n && ok; ++e) ok = (e % p == 0) || sgn(dense[e]) == 0;
      if (!ok) continue;
      std::vector<BigRational> out(m);
      for (std::uint64_t e = 0; e < n; e += p) out[e / p] = dense[e];
      dense = std::move(out);
      return m;
    }
    // a == 1 and p odd: each residue class mod m must carry one repeated coefficient.
    std::vector<BigRational> out(m);
    bool ok = true;
    for (std::uint64_t r = 0; r < m && ok; ++r) {
      std::uint64_t e0 = 0;
      const BigRational* first = nullptr;
      for (std::uint64_t j = 0; j < p; ++j) {
        const std::uint64_t e = r + j * m;
        if (e % p == 0) {
          e0 = e;
          continue;
        }
        if (first == nullptr) {
          first = &dense[e];
        } else if (dense[e] != *first) {
          ok = false;
          break;
        }
      }
      if (ok && first != nullptr) out[e0 / p] = -*first;
    }
    if (!ok) continue;
    dense = std::move(out);
    return m;
  }
  return 0;
}

class LiteralParser {
 public:
  explicit LiteralParser(std::string_view s) : s_(s) {}

  Cyclotomic run() {
    Cyclotomic v = expr();
    skip_ws();
    if (pos_ != s_.size()) fail("unexpected character");
    return v;
  }

 private:
  std::string_view s_;
  std::size_t pos_ = 0;

  [[noreturn]] void fail(const std::string& what) const {
    throw ParseError("cyclotomic literal '" + std::string(s_) + "': " + what + " at offset " +
                     std::to_string(pos_));
  }
  void skip_ws() {
    while (pos_ < s_.size() && (s_[pos_] == ' ' || s_[pos_] == '\t')) ++pos_;
  }
  bool accept(char c) {
    skip_ws();
    if (pos_ < s_.size() && s_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }
  BigInt integer() {
    skip_ws();
    const std::size_t start = pos_;
    while (pos_ < s_.size() && s_[pos_] >= '0' && s_[pos_] <= '9') ++pos_;
    if (start == pos_) fail("expected integer");
    return BigInt(std::string(s_.substr(start, pos_ - start)));
  }
  Cyclotomic expr() {
    Cyclotomic v = term();
    for (;;) {
      if (accept('+')) {
        v += term();
      } else if (accept('-')) {
        v -= term();
      } else {
        return v;
      }
    }
  }
  Cyclotomic term() {
    Cyclotomic v = unary();
    for (;;) {
      if (accept('*')) {
        v *= unary();
      } else if (accept('/')) {
        Cyclotomic d = unary();
        if (d.is_zero()) fail("division by zero");
        v /= d;
      } else {
        return v;
      }
    }
  }
  Cyclotomic unary() {
    if (accept('-')) return -unary();
    if (accept('+')) return unary();
    return power();
  }
  Cyclotomic power() {
    Cyclotomic base = primary();
    if (!accept('^')) return base;
    const bool neg = accept('-');
    BigInt e = integer();
    if (!e.fits_slong_p()) fail("exponent too large");
    long k = e.get_si();
    if (neg) {
      if (base.is_zero()) fail("zero to a negative power");
      base = base.inverse();
    }
    Cyclotomic r(1L);
    while (k > 0) {
      if (k & 1) r *= base;
      base *= base;
      k >>= 1;
    }
    return r;
  }
  Cyclotomic primary() {
    skip_ws();
    if (accept('(')) {
      Cyclotomic v = expr();
      if (!accept(')')) fail("expected ')'");
      return v;
    }
    if (accept('E')) {
      if (!accept('(')) fail("expected '(' after E");
      BigInt n = integer();
      if (!accept(')')) fail("expected ')'");
      if (n <= 0 || n > kMaxConductor) fail("root-of-unity order out of range");
      return Cyclotomic::root_of_unity(n.get_ui(), 1);
    }
    return Cyclotomic(integer());
  }
};

}  // namespace

std::string to_string(const BigInt& v) { return v.get_str(); }
std::string to_string(const BigRational& v) { return v.get_str(); }

BigInt binomial(const BigInt& n, unsigned long k) {
  BigInt r;
  mpz_bin_ui(r.get_mpz_t(), n.get_mpz_t(), k);
  return r;
}

BigInt pow_int(const BigInt& base, unsigned long exp) {
  BigInt r;
  mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), exp);
  return r;
}

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d) {
    if (n % d == 0) return false;
  }
  return true;
}

std::uint64_t prime_power_base(std::uint64_t n) {
  if (n < 2) return 0;
  auto f = factorize(n);
  return f.size() == 1 ? f.front().first : 0;
}

std::vector<std::pair<std::uint64_t, unsigned>> factorize(std::uint64_t n) {
  std::vector<std::pair<std::uint64_t, unsigned>> out;
  for (std::uint64_t p = 2; p * p <= n; ++p) {
    if (n % p != 0) continue;
    unsigned a = 0;
    while (n % p == 0) {
      n /= p;
      ++a;
    }
    out.emplace_back(p, a);
  }
  if (n > 1) out.emplace_back(n, 1);
  return out;
}

Cyclotomic::Cyclotomic(long v) : Cyclotomic(BigRational(v)) {}
Cyclotomic::Cyclotomic(const BigInt& v) : Cyclotomic(BigRational(v)) {}
Cyclotomic::Cyclotomic(const BigRational& v) {
  if (sgn(v) != 0) {
    terms_.emplace_back(0, v);
    terms_.back().second.canonicalize();
  }
}

Cyclotomic Cyclotomic::root_of_unity(std::uint64_t n, std::int64_t k) {
  check_conductor(n);
  std::vector<BigRational> d(n);
  d[reduce_exp(k, n)] = 1;
  return canonical(n, std::move(d));
}

Cyclotomic Cyclotomic::from_dense(std::uint64_t n, std::vector<BigRational> coeffs) {
  check_conductor(n);
  for (auto& c : coeffs) c.canonicalize();
  if (coeffs.size() != n) {
    std::vector<BigRational> d(n);
    for (std::size_t i = 0; i < coeffs.size(); ++i) d[i % n] += coeffs[i];
    coeffs = std::move(d);
  }
  return canonical(n, std::move(coeffs));
}

Cyclotomic Cyclotomic::parse(std::string_view text) { return LiteralParser(text).run(); }

Cyclotomic Cyclotomic::canonical(std::uint64_t n, std::vector<BigRational> dense) {
  for (;;) {
    if (n == 1) break;
    reduce_to_basis(n, dense);
    const std::uint64_t m = shrink(n, dense);
    if (m == 0) break;
    n = m;
  }
  Cyclotomic out;
  out.conductor_ = static_cast<std::uint32_t>(n);
  for (std::uint64_t e = 0; e < n; ++e) {
    if (sgn(dense[e]) != 0) out.terms_.emplace_back(static_cast<std::uint32_t>(e), std::move(dense[e]));
  }
  return out;
}

std::vector<BigRational> Cyclotomic::dense(std::uint64_t n) const {
  std::vector<BigRational> d(n);
  const std::uint64_t s = n / conductor_;
  for (const auto& [e, c] : terms_) d[e * s] += c;
  return d;
}

Cyclotomic Cyclotomic::recanonicalized() const { return canonical(conductor_, dense(conductor_)); }

bool Cyclotomic::is_integral() const {
  return std::all_of(terms_.begin(), terms_.end(),
                     [](const Term& t) { return t.second.get_den() == 1; });
}

BigRational Cyclotomic::to_rational() const {
  if (!is_rational()) throw DomainError("value " + to_string() + " is not rational");
  return terms_.empty() ? BigRational(0) : terms_.front().second;
}

Cyclotomic Cyclotomic::galois(std::int64_t a) const {
  if (is_rational()) return *this;
  const std::uint64_t n = conductor_;
  const std::uint64_t r = reduce_exp(a, n);
  if (std::gcd(r, n) != 1) throw DomainError("Galois exponent must be coprime to the conductor");
  std::vector<BigRational> d(n);
  for (const auto& [e, c] : terms_) d[(e * r) % n] += c;
  return canonical(n, std::move(d));
}

Cyclotomic Cyclotomic::inverse() const {
  if (is_zero()) throw DomainError("division by zero");
  if (is_rational()) return Cyclotomic(BigRational(1) / terms_.front().second);
  Cyclotomic others(1L);
  for (std::uint64_t a = 2; a < conductor_; ++a) {
    if (std::gcd(a, static_cast<std::uint64_t>(conductor_)) == 1) others *= galois(static_cast<std::int64_t>(a));
  }
  const BigRational norm = (*this * others).to_rational();
  others *= BigRational(1) / norm;
  return others;
}

Cyclotomic Cyclotomic::operator-() const {
  Cyclotomic r = *this;
  for (auto& t : r.terms_) t.second = -t.second;
  return r;
}

Cyclotomic& Cyclotomic::operator+=(const Cyclotomic& o) {
  if (o.is_zero()) return *this;
  if (is_zero()) return *this = o;
  if (is_rational() && o.is_rational()) {
    BigRational s = terms_.front().second + o.terms_.front().second;
    return *this = Cyclotomic(s);
  }
  const std::uint64_t n = std::lcm<std::uint64_t>(conductor_, o.conductor_);
  check_conductor(n);
  std::vector<BigRational> d = dense(n);
  const std::uint64_t s = n / o.conductor_;
  for (const auto& [e, c] : o.terms_) d[e * s] += c;
  return *this = canonical(n, std::move(d));
}

Cyclotomic& Cyclotomic::operator-=(const Cyclotomic& o) { return *this += -o; }

Cyclotomic& Cyclotomic::operator*=(const BigRational& r) {
  if (sgn(r) == 0) return *this = Cyclotomic();
  BigRational c = r;
  c.canonicalize();
  for (auto& t : terms_) t.second *= c;
  return *this;
}

Cyclotomic operator*(const Cyclotomic& a, const Cyclotomic& b) {
  if (a.is_zero() || b.is_zero()) return Cyclotomic();
  if (a.is_rational()) return Cyclotomic(b) *= a.terms_.front().second;
  if (b.is_rational()) return Cyclotomic(a) *= b.terms_.front().second;
  const std::uint64_t n = std::lcm<std::uint64_t>(a.conductor_, b.conductor_);
  check_conductor(n);
  const std::uint64_t sa = n / a.conductor_;
  const std::uint64_t sb = n / b.conductor_;
  std::vector<BigRational> d(n);
  BigRational prod;
  for (const auto& [ea, ca] : a.terms_) {
    for (const auto& [eb, cb] : b.terms_) {
      mpq_mul(prod.get_mpq_t(), ca.get_mpq_t(), cb.get_mpq_t());
      d[(ea * sa + eb * sb) % n] += prod;
    }
  }
  return Cyclotomic::canonical(n, std::move(d));
}

Cyclotomic& Cyclotomic::operator*=(const Cyclotomic& o) { return *this = *this * o; }
Cyclotomic& Cyclotomic::operator/=(const Cyclotomic& o) { return *this = *this * o.inverse(); }

std::string Cyclotomic::to_string() const {
  if (terms_.empty()) return "0";
  if (is_rational()) return terms_.front().second.get_str();
  std::ostringstream os;
  bool first = true;
  for (const auto& [e, c] : terms_) {
    const bool neg = sgn(c) < 0;
    const BigRational mag = abs(c);
    if (neg) {
      os << '-';
    } else if (!first) {
      os << '+';
    }
    first = false;
    if (e == 0) {
      os << mag.get_str();
      continue;
    }
    if (mag != 1) os << mag.get_str() << '*';
    os << "E(" << conductor_ << ')';
    if (e != 1) os << '^' << e;
  }
  return os.str();
}

std::ostream& operator<<(std::ostream& os, const Cyclotomic& c) { return os << c.to_string(); }

}  // namespace symirr
