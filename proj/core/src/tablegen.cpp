#include "symirr/tablegen.hpp"

#include <numeric>

#include "symirr/errors.hpp"

namespace symirr {

namespace {

std::vector<std::uint64_t> primes_up_to(std::uint64_t n) {
  std::vector<std::uint64_t> out;
  for (std::uint64_t p = 2; p <= n; ++p) {
    if (is_prime(p)) out.push_back(p);
  }
  return out;
}

std::vector<unsigned> digits(std::uint64_t index, std::uint64_t p, unsigned len) {
  std::vector<unsigned> v(len);
  for (unsigned i = len; i-- > 0;) {
    v[i] = static_cast<unsigned>(index % p);
    index /= p;
  }
  return v;
}

std::uint64_t undigits(const std::vector<unsigned>& v, std::uint64_t p) {
  std::uint64_t r = 0;
  for (unsigned d : v) r = r * p + d;
  return r;
}

}  // namespace

ExtraspecialVariant parse_extraspecial_variant(const std::string& s) {
  if (s == "odd" || s == "odd_exponent_p") return ExtraspecialVariant::OddExponentP;
  if (s == "plus" || s == "even_plus") return ExtraspecialVariant::EvenPlus;
  if (s == "minus" || s == "even_minus") return ExtraspecialVariant::EvenMinus;
  throw ParseError("unknown extraspecial variant '" + s + "' (use odd, plus or minus)");
}

std::string to_string(ExtraspecialVariant v) {
  switch (v) {
    case ExtraspecialVariant::OddExponentP: return "odd_exponent_p";
    case ExtraspecialVariant::EvenPlus: return "even_plus";
    case ExtraspecialVariant::EvenMinus: return "even_minus";
  }
  return "?";
}

TablePtr cyclic_table(std::uint64_t n) {
  if (n == 0) throw DomainError("cyclic group order must be positive");
  TableData d;
  d.name = "C" + std::to_string(n);
  d.order = BigInt(std::to_string(n));
  for (std::uint64_t k = 0; k < n; ++k) {
    d.classes.push_back({k == 0 ? "1" : "g^" + std::to_string(k), 1, n / std::gcd(n, k)});
  }
  for (std::uint64_t p : primes_up_to(n)) {
    std::vector<std::size_t> img(n);
    for (std::uint64_t k = 0; k < n; ++k) img[k] = (k * p) % n;
    d.power_maps.emplace(p, std::move(img));
  }
  for (std::uint64_t j = 0; j < n; ++j) {
    std::vector<Cyclotomic> row;
    row.reserve(n);
    for (std::uint64_t k = 0; k < n; ++k) row.push_back(Cyclotomic::root_of_unity(n, static_cast<std::int64_t>((j * k) % n)));
    d.irreducibles.push_back(std::move(row));
  }
  return CharacterTable::create(std::move(d));
}

TablePtr extraspecial_table(std::uint64_t p, unsigned n, ExtraspecialVariant variant) {
  const bool odd = variant == ExtraspecialVariant::OddExponentP;
  if (!is_prime(p)) throw DomainError("extraspecial prime " + std::to_string(p) + " is not prime");
  if (n == 0) throw DomainError("extraspecial rank n must be positive");
  if (odd != (p != 2)) throw DomainError("variant " + to_string(variant) + " does not apply to p = " + std::to_string(p));
  const unsigned dim = 2 * n;
  std::uint64_t nvec = 1;
  for (unsigned i = 0; i < dim; ++i) {
    nvec *= p;
    if (nvec > 100000) throw DomainError("extraspecial group too large to tabulate");
  }
  const std::uint64_t central = p;  // classes 0..p-1 are z^j
  const std::size_t k = central + nvec - 1;

  // Q(v) decides element orders for p = 2.
  auto quad = [&](const std::vector<unsigned>& v) {
    unsigned q = 0;
    for (unsigned i = 0; i < n; ++i) q ^= v[i] & v[n + i];
    if (variant == ExtraspecialVariant::EvenMinus) q ^= v[0] ^ v[n];
    return q;
  };

  TableData d;
  d.name = odd ? std::to_string(p) + "^(1+" + std::to_string(dim) + ")+"
               : std::string("2^(1+") + std::to_string(dim) + ")" + (variant == ExtraspecialVariant::EvenPlus ? "+" : "-");
  d.order = pow_int(BigInt(std::to_string(p)), 1 + dim);
  for (std::uint64_t j = 0; j < central; ++j) {
    d.classes.push_back({j == 0 ? "1" : (j == 1 ? "z" : "z^" + std::to_string(j)), 1, j == 0 ? 1 : p});
  }
  for (std::uint64_t idx = 1; idx < nvec; ++idx) {
    const auto v = digits(idx, p, dim);
    std::string label = "v";
    for (unsigned c : v) label += std::to_string(c);
    const std::uint64_t ord = odd ? p : (quad(v) ? 4 : 2);
    d.classes.push_back({label, BigInt(std::to_string(p)), ord});
  }
  auto vec_class = [&](std::uint64_t idx) { return static_cast<std::size_t>(central + idx - 1); };

  const std::uint64_t max_order = odd ? p : 4;
  for (std::uint64_t r : primes_up_to(max_order)) {
    std::vector<std::size_t> img(k);
    for (std::uint64_t j = 0; j < central; ++j) img[j] = (j * r) % p;
    for (std::uint64_t idx = 1; idx < nvec; ++idx) {
      auto v = digits(idx, p, dim);
      std::size_t target;
      if (odd) {
        if (r == p) {
          target = 0;
        } else {
          for (auto& c : v) c = static_cast<unsigned>((c * r) % p);
          target = vec_class(undigits(v, p));
        }
      } else if (r == 2) {
        target = quad(v) ? 1 : 0;
      } else {
        target = vec_class(idx);  // odd powers of g stay in {g, gz}
      }
      img[vec_class(idx)] = target;
    }
    d.power_maps.emplace(r, std::move(img));
  }

  // Linear characters inflated from P/Z, indexed by a in lexicographic order.
  for (std::uint64_t a = 0; a < nvec; ++a) {
    const auto av = digits(a, p, dim);
    std::vector<Cyclotomic> row(central, Cyclotomic(1L));
    for (std::uint64_t idx = 1; idx < nvec; ++idx) {
      const auto v = digits(idx, p, dim);
      std::uint64_t dot = 0;
      for (unsigned i = 0; i < dim; ++i) dot += av[i] * v[i];
      row.push_back(Cyclotomic::root_of_unity(p, static_cast<std::int64_t>(dot % p)));
    }
    d.irreducibles.push_back(std::move(row));
  }
  const BigInt deg = pow_int(BigInt(std::to_string(p)), n);
  for (std::uint64_t t = 1; t < p; ++t) {
    std::vector<Cyclotomic> row(k);
    for (std::uint64_t j = 0; j < central; ++j) {
      row[j] = Cyclotomic(deg) * Cyclotomic::root_of_unity(p, static_cast<std::int64_t>((t * j) % p));
    }
    d.irreducibles.push_back(std::move(row));
  }
  return CharacterTable::create(std::move(d));
}

TablePtr direct_product_table(const CharacterTable& a, const CharacterTable& b) {
  const std::size_t ka = a.class_count();
  const std::size_t kb = b.class_count();
  TableData d;
  d.name = a.name() + "x" + b.name();
  d.order = a.order() * b.order();
  std::uint64_t max_order = 1;
  for (std::size_t i = 0; i < ka; ++i) {
    for (std::size_t j = 0; j < kb; ++j) {
      const std::uint64_t o = std::lcm(a.cls(i).element_order, b.cls(j).element_order);
      max_order = std::max(max_order, o);
      d.classes.push_back({a.cls(i).name + "*" + b.cls(j).name, a.cls(i).size * b.cls(j).size, o});
    }
  }
  for (std::uint64_t p : primes_up_to(max_order)) {
    std::vector<std::size_t> img(ka * kb);
    for (std::size_t i = 0; i < ka; ++i) {
      const std::size_t pi = power_class(a, i, static_cast<std::int64_t>(p));
      for (std::size_t j = 0; j < kb; ++j) img[i * kb + j] = pi * kb + power_class(b, j, static_cast<std::int64_t>(p));
    }
    d.power_maps.emplace(p, std::move(img));
  }
  const auto& ra = a.data().irreducibles;
  const auto& rb = b.data().irreducibles;
  for (const auto& x : ra) {
    for (const auto& y : rb) {
      std::vector<Cyclotomic> row;
      row.reserve(ka * kb);
      for (std::size_t i = 0; i < ka; ++i) {
        for (std::size_t j = 0; j < kb; ++j) row.push_back(x[i] * y[j]);
      }
      d.irreducibles.push_back(std::move(row));
    }
  }
  return CharacterTable::create(std::move(d));
}

}  // namespace symirr
