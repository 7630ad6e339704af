#pragma once
// Explicit monomial matrix groups for extraspecial groups, with fixed-space
// dimensions of Sym^k / Wedge^k obtained by averaging traces over every element.
// Phases are exponents of a primitive N-th root of unity; only the final average
// is converted to a complex number and rounded.

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstdint>
#include <map>
#include <numbers>
#include <set>
#include <stdexcept>
#include <vector>

namespace oracle {

struct Monomial {
  std::vector<int> perm;   // e_i -> phase[i] * e_{perm[i]}
  std::vector<int> phase;  // exponent mod N
  auto operator<=>(const Monomial&) const = default;
};

class MonomialGroup {
 public:
  MonomialGroup(int dim, int n_roots, const std::vector<Monomial>& gens) : dim_(dim), N_(n_roots) {
    Monomial id{std::vector<int>(dim), std::vector<int>(dim, 0)};
    for (int i = 0; i < dim; ++i) id.perm[i] = i;
    std::set<Monomial> seen{id};
    std::vector<Monomial> frontier{id};
    while (!frontier.empty()) {
      std::vector<Monomial> next;
      for (const auto& g : frontier) {
        for (const auto& s : gens) {
          Monomial h = mul(s, g);
          if (seen.insert(h).second) next.push_back(h);
        }
      }
      frontier = std::move(next);
      if (seen.size() > 100000) throw std::runtime_error("group too large");
    }
    elements_.assign(seen.begin(), seen.end());
  }

  std::size_t order() const { return elements_.size(); }
  const std::vector<Monomial>& elements() const { return elements_; }

  Monomial mul(const Monomial& a, const Monomial& b) const {  // a * b: apply b then a
    Monomial r{std::vector<int>(dim_), std::vector<int>(dim_)};
    for (int i = 0; i < dim_; ++i) {
      const int j = b.perm[i];
      r.perm[i] = a.perm[j];
      r.phase[i] = (b.phase[i] + a.phase[j]) % N_;
    }
    return r;
  }

  std::size_t conjugacy_class_count() const {
    std::set<Monomial> done;
    std::size_t classes = 0;
    for (const auto& g : elements_) {
      if (done.count(g)) continue;
      ++classes;
      for (const auto& h : elements_) done.insert(mul(mul(h, g), inverse(h)));
    }
    return classes;
  }

  Monomial inverse(const Monomial& a) const {
    Monomial r{std::vector<int>(dim_), std::vector<int>(dim_)};
    for (int i = 0; i < dim_; ++i) {
      r.perm[a.perm[i]] = i;
      r.phase[a.perm[i]] = (N_ - a.phase[i]) % N_;
    }
    return r;
  }

  // Average over the group of the trace on Sym^k (exterior=false) or Wedge^k.
  long fixed_dim(int k, bool exterior) const {
    std::vector<std::vector<int>> monos;
    std::vector<int> cur;
    enumerate(0, k, exterior, cur, monos);
    std::vector<long long> phase_count(N_, 0);
    for (const auto& g : elements_) {
      for (const auto& m : monos) {
        std::vector<int> img(m.size());
        int ph = 0;
        for (std::size_t t = 0; t < m.size(); ++t) {
          img[t] = g.perm[m[t]];
          ph += g.phase[m[t]];
        }
        int sign = 1;
        if (exterior) {
          // sign of the sorting permutation
          for (std::size_t a = 0; a < img.size(); ++a)
            for (std::size_t b = a + 1; b < img.size(); ++b)
              if (img[a] > img[b]) sign = -sign;
        }
        std::vector<int> sorted = img;
        std::sort(sorted.begin(), sorted.end());
        if (sorted != m) continue;
        phase_count[ph % N_] += sign;
      }
    }
    std::complex<double> total = 0;
    for (int j = 0; j < N_; ++j) {
      total += static_cast<double>(phase_count[j]) * std::polar(1.0, 2 * std::numbers::pi * j / N_);
    }
    total /= static_cast<double>(elements_.size());
    const double r = std::round(total.real());
    if (std::abs(total.imag()) > 1e-6 || std::abs(total.real() - r) > 1e-6) throw std::runtime_error("non-integral average");
    return static_cast<long>(r);
  }

 private:
  int dim_;
  int N_;
  std::vector<Monomial> elements_;

  void enumerate(int start, int left, bool strict, std::vector<int>& cur, std::vector<std::vector<int>>& out) const {
    if (left == 0) {
      out.push_back(cur);
      return;
    }
    for (int i = start; i < dim_; ++i) {
      cur.push_back(i);
      enumerate(strict ? i + 1 : i, left - 1, strict, cur, out);
      cur.pop_back();
    }
  }
};

// Heisenberg (odd p) or Pauli (p = 2) generators acting on C^{p^n}, indexed by F_p^n.
// For p = 2 with minus = true the first tensor factor is replaced by Q8.
inline MonomialGroup extraspecial_group(int p, int n, bool minus = false) {
  int dim = 1;
  for (int i = 0; i < n; ++i) dim *= p;
  const int N = (p == 2) ? 4 : p;
  auto coord = [&](int idx, int i) {
    for (int t = n - 1; t > i; --t) idx /= p;
    return idx % p;
  };
  auto with_coord = [&](int idx, int i, int val) {
    int w = 1;
    for (int t = n - 1; t > i; --t) w *= p;
    return idx + (val - coord(idx, i)) * w;
  };
  const int unit = (p == 2) ? 2 : 1;  // exponent of the primitive p-th root inside N-th roots
  std::vector<Monomial> gens;
  for (int i = 0; i < n; ++i) {
    Monomial x{std::vector<int>(dim), std::vector<int>(dim, 0)};
    Monomial z{std::vector<int>(dim), std::vector<int>(dim, 0)};
    for (int v = 0; v < dim; ++v) {
      const int c = coord(v, i);
      x.perm[v] = with_coord(v, i, (c + 1) % p);
      z.perm[v] = v;
      z.phase[v] = (c * unit) % N;
    }
    if (p == 2 && minus && i == 0) {
      // a: e0 -> e1, e1 -> -e0 ; b: e_c -> i^(1-2c) e_c
      for (int v = 0; v < dim; ++v) {
        if (coord(v, 0) == 1) x.phase[v] = 2;
        z.phase[v] = coord(v, 0) == 0 ? 1 : 3;
      }
    }
    gens.push_back(x);
    gens.push_back(z);
  }
  return MonomialGroup(dim, N, gens);
}

// Upper unitriangular 3x3 matrices over F_3, as triples (a, b, c) for [[1,a,c],[0,1,b],[0,0,1]].
inline std::size_t unitriangular3_class_count() {
  struct M {
    int a, b, c;
  };
  auto mul = [](M x, M y) { return M{(x.a + y.a) % 3, (x.b + y.b) % 3, (x.c + y.c + x.a * y.b) % 3}; };
  auto inv = [&](M x) {
    for (int a = 0; a < 3; ++a)
      for (int b = 0; b < 3; ++b)
        for (int c = 0; c < 3; ++c) {
          M y{a, b, c};
          M r = mul(x, y);
          if (r.a == 0 && r.b == 0 && r.c == 0) return y;
        }
    return x;
  };
  auto key = [](M x) { return x.a * 9 + x.b * 3 + x.c; };
  std::set<int> done;
  std::size_t classes = 0;
  for (int g = 0; g < 27; ++g) {
    if (done.count(g)) continue;
    ++classes;
    M x{g / 9, (g / 3) % 3, g % 3};
    for (int h = 0; h < 27; ++h) {
      M y{h / 9, (h / 3) % 3, h % 3};
      done.insert(key(mul(mul(y, x), inv(y))));
    }
  }
  return classes;
}

}  // namespace oracle
