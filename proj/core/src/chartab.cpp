#include "symirr/chartab.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

#include "symirr/errors.hpp"

namespace symirr {

ClassFunction::ClassFunction(TablePtr table, std::vector<Cyclotomic> values)
    : table_(std::move(table)), values_(std::move(values)) {
  if (!table_) throw DomainError("class function without a table");
  if (values_.size() != table_->class_count()) {
    throw DomainError("class function has " + std::to_string(values_.size()) + " values but table " +
                      table_->name() + " has " + std::to_string(table_->class_count()) + " classes");
  }
}

ClassFunction ClassFunction::constant(TablePtr table, const Cyclotomic& c) {
  const std::size_t n = table->class_count();
  return ClassFunction(std::move(table), std::vector<Cyclotomic>(n, c));
}

void ClassFunction::require_same_table(const ClassFunction& o) const {
  if (table_ != o.table_) throw DomainError("class functions live on different tables");
}

ClassFunction ClassFunction::conj() const {
  ClassFunction r = *this;
  for (auto& v : r.values_) v = v.conj();
  return r;
}

bool ClassFunction::is_zero() const {
  return std::all_of(values_.begin(), values_.end(), [](const Cyclotomic& v) { return v.is_zero(); });
}

ClassFunction& ClassFunction::operator+=(const ClassFunction& o) {
  require_same_table(o);
  for (std::size_t i = 0; i < values_.size(); ++i) values_[i] += o.values_[i];
  return *this;
}

ClassFunction& ClassFunction::operator-=(const ClassFunction& o) {
  require_same_table(o);
  for (std::size_t i = 0; i < values_.size(); ++i) values_[i] -= o.values_[i];
  return *this;
}

ClassFunction& ClassFunction::operator*=(const ClassFunction& o) {
  require_same_table(o);
  for (std::size_t i = 0; i < values_.size(); ++i) values_[i] *= o.values_[i];
  return *this;
}

ClassFunction& ClassFunction::operator*=(const Cyclotomic& s) {
  for (auto& v : values_) v *= s;
  return *this;
}

bool operator==(const ClassFunction& a, const ClassFunction& b) {
  return a.table_ == b.table_ && a.values_ == b.values_;
}

TablePtr CharacterTable::create(TableData data) {
  const std::size_t k = data.classes.size();
  if (k == 0) throw ValidationError("table " + data.name + " has no classes");
  if (data.order <= 0) throw ValidationError("table " + data.name + ": group order must be positive");
  for (const auto& c : data.classes) {
    if (c.size <= 0) throw ValidationError("class " + c.name + " has non-positive size");
    if (c.element_order == 0) throw ValidationError("class " + c.name + " has element order 0");
  }
  for (const auto& [p, img] : data.power_maps) {
    if (!is_prime(p)) throw ValidationError("power map key " + std::to_string(p) + " is not prime");
    if (img.size() != k) throw ValidationError("power map for " + std::to_string(p) + " has wrong length");
    for (std::size_t i : img) {
      if (i >= k) throw ValidationError("power map for " + std::to_string(p) + " has index out of range");
    }
  }
  for (std::size_t i = 0; i < data.irreducibles.size(); ++i) {
    if (data.irreducibles[i].size() != k) {
      throw ValidationError("irreducible " + std::to_string(i + 1) + " has wrong length");
    }
  }
  return TablePtr(new CharacterTable(std::move(data)));
}

ClassFunction CharacterTable::irreducible(std::size_t i) const {
  if (i >= data_.irreducibles.size()) throw DomainError("irreducible index out of range");
  return ClassFunction(shared_from_this(), data_.irreducibles[i]);
}

std::vector<ClassFunction> CharacterTable::irreducibles() const {
  std::vector<ClassFunction> out;
  out.reserve(data_.irreducibles.size());
  for (std::size_t i = 0; i < data_.irreducibles.size(); ++i) out.push_back(irreducible(i));
  return out;
}

std::uint64_t CharacterTable::max_element_order() const {
  std::uint64_t m = 1;
  for (const auto& c : data_.classes) m = std::max(m, c.element_order);
  return m;
}

std::size_t power_class(const CharacterTable& t, std::size_t c, std::int64_t m) {
  for (;;) {
    const auto ord = static_cast<std::int64_t>(t.cls(c).element_order);
    std::int64_t r = m % ord;
    if (r < 0) r += ord;
    if (r == 0) return 0;
    if (r == 1) return c;
    const std::uint64_t p = factorize(static_cast<std::uint64_t>(r)).front().first;
    auto it = t.power_maps().find(p);
    if (it == t.power_maps().end()) {
      throw DomainError("table " + t.name() + " lacks the " + std::to_string(p) + "-power map");
    }
    c = it->second[c];
    m = r / static_cast<std::int64_t>(p);
  }
}

ValidationReport validate_table(const CharacterTable& t) {
  ValidationReport rep;
  auto add = [&](const std::string& s) { rep.violations.push_back(s); };
  const std::size_t k = t.class_count();
  const auto& cl = t.classes();

  BigInt total = 0;
  for (const auto& c : cl) total += c.size;
  if (total != t.order()) add("class sizes sum to " + to_string(total) + ", not the group order " + to_string(t.order()));
  if (cl[0].size != 1 || cl[0].element_order != 1) add("class 0 is not the identity class");
  for (std::size_t i = 0; i < k; ++i) {
    if (t.order() % cl[i].size != 0) add("size of class " + cl[i].name + " does not divide the group order");
    if (t.order() % cl[i].element_order != 0) {
      add("element order of class " + cl[i].name + " does not divide the group order");
    }
  }

  for (std::size_t i = 0; i < k; ++i) {
    for (auto [p, a] : factorize(cl[i].element_order)) {
      (void)a;
      if (!t.power_maps().count(p)) {
        add("missing power map for prime " + std::to_string(p) + " (element order of class " + cl[i].name + ")");
      }
    }
  }
  for (const auto& [p, img] : t.power_maps()) {
    for (std::size_t i = 0; i < k; ++i) {
      const std::uint64_t o = cl[i].element_order;
      const std::uint64_t expect = o / std::gcd(o, p);
      if (cl[img[i]].element_order != expect) {
        add(std::to_string(p) + "-power map sends class " + cl[i].name + " to a class of element order " +
            std::to_string(cl[img[i]].element_order) + ", expected " + std::to_string(expect));
      }
    }
  }

  if (t.irreducible_count() != k) {
    add("table has " + std::to_string(t.irreducible_count()) + " irreducibles for " + std::to_string(k) + " classes");
    return rep;
  }
  const auto irr = t.irreducibles();
  for (std::size_t i = 0; i < k; ++i) {
    const Cyclotomic& d = irr[i].degree();
    if (!d.is_rational() || !d.is_integral() || sgn(d.to_rational()) <= 0) {
      add("degree of irreducible " + std::to_string(i + 1) + " is not a positive integer");
    }
  }

  // Row orthogonality, using unnormalized sums to stay in the value field.
  std::vector<ClassFunction> weighted_conj;
  weighted_conj.reserve(k);
  for (const auto& chi : irr) {
    std::vector<Cyclotomic> v(k);
    for (std::size_t c = 0; c < k; ++c) v[c] = chi[c].conj() * Cyclotomic(cl[c].size);
    weighted_conj.emplace_back(chi.table(), std::move(v));
  }
  for (std::size_t i = 0; i < k; ++i) {
    for (std::size_t j = i; j < k; ++j) {
      Cyclotomic s;
      for (std::size_t c = 0; c < k; ++c) s += irr[i][c] * weighted_conj[j][c];
      const Cyclotomic expect = (i == j) ? Cyclotomic(t.order()) : Cyclotomic();
      if (s != expect) {
        std::ostringstream os;
        os << "row orthogonality fails for irreducibles " << i + 1 << " and " << j + 1 << ": <chi,psi> = "
           << (s * Cyclotomic(BigRational(1) / BigRational(t.order())));
        add(os.str());
      }
    }
  }
  for (std::size_t a = 0; a < k; ++a) {
    for (std::size_t b = a; b < k; ++b) {
      Cyclotomic s;
      for (std::size_t i = 0; i < k; ++i) s += irr[i][a] * irr[i][b].conj();
      const Cyclotomic expect = (a == b) ? Cyclotomic(t.centralizer_order(a)) : Cyclotomic();
      if (s != expect) {
        add("column orthogonality fails for classes " + cl[a].name + " and " + cl[b].name + ": sum = " +
            s.to_string() + ", expected " + expect.to_string());
      }
    }
  }
  return rep;
}

Cyclotomic inner_product(const ClassFunction& f, const ClassFunction& g) {
  if (f.table() != g.table()) throw DomainError("inner product of class functions on different tables");
  const CharacterTable& t = *f.table();
  Cyclotomic s;
  for (std::size_t c = 0; c < t.class_count(); ++c) s += Cyclotomic(t.cls(c).size) * f[c] * g[c].conj();
  s *= BigRational(1) / BigRational(t.order());
  return s;
}

Cyclotomic norm(const ClassFunction& f) { return inner_product(f, f); }

ValidationReport validate_fusion(const FusionMap& fus) {
  ValidationReport rep;
  auto add = [&](const std::string& s) { rep.violations.push_back(s); };
  const CharacterTable& h = *fus.subgroup;
  const CharacterTable& g = *fus.overgroup;
  if (fus.map.size() != h.class_count()) {
    add("fusion map length " + std::to_string(fus.map.size()) + " differs from the subgroup class count");
    return rep;
  }
  for (std::size_t i : fus.map) {
    if (i >= g.class_count()) {
      add("fusion map index " + std::to_string(i) + " out of range");
      return rep;
    }
  }
  if (fus.map[0] != 0) add("identity class does not fuse to the identity");
  if (g.order() % h.order() != 0) add("subgroup order does not divide the overgroup order");
  for (std::size_t c = 0; c < h.class_count(); ++c) {
    if (h.cls(c).element_order != g.cls(fus.map[c]).element_order) {
      add("fusion changes the element order of class " + h.cls(c).name);
    }
  }
  for (const auto& [p, img] : h.power_maps()) {
    auto it = g.power_maps().find(p);
    if (it == g.power_maps().end()) continue;
    for (std::size_t c = 0; c < h.class_count(); ++c) {
      if (fus.map[img[c]] != it->second[fus.map[c]]) {
        add("fusion does not commute with the " + std::to_string(p) + "-power map at class " + h.cls(c).name);
      }
    }
  }
  return rep;
}

ClassFunction restrict_to(const FusionMap& fus, const ClassFunction& f) {
  if (f.table() != fus.overgroup) throw DomainError("restriction needs a class function on the overgroup");
  std::vector<Cyclotomic> v;
  v.reserve(fus.map.size());
  for (std::size_t i : fus.map) v.push_back(f[i]);
  return ClassFunction(fus.subgroup, std::move(v));
}

ClassFunction induce(const FusionMap& fus, const ClassFunction& f) {
  if (f.table() != fus.subgroup) throw DomainError("induction needs a class function on the subgroup");
  const CharacterTable& h = *fus.subgroup;
  const CharacterTable& g = *fus.overgroup;
  std::vector<Cyclotomic> sums(g.class_count());
  for (std::size_t d = 0; d < h.class_count(); ++d) sums[fus.map[d]] += f[d] * Cyclotomic(h.cls(d).size);
  for (std::size_t c = 0; c < g.class_count(); ++c) {
    if (sums[c].is_zero()) continue;
    sums[c] *= BigRational(g.centralizer_order(c)) / BigRational(h.order());
  }
  return ClassFunction(fus.overgroup, std::move(sums));
}

}  // namespace symirr
