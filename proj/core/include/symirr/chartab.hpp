#pragma once

#include <cstddef>
#include <map>
#include <memory>
#include <string>
#include <vector>

#include "symirr/exactnum.hpp"

namespace symirr {

struct ConjugacyClass {
  std::string name;
  BigInt size;
  std::uint64_t element_order = 1;
};

class CharacterTable;
using TablePtr = std::shared_ptr<const CharacterTable>;

// Values of a class function on the classes of one table.
class ClassFunction {
 public:
  ClassFunction() = default;
  ClassFunction(TablePtr table, std::vector<Cyclotomic> values);

  // The constant function c on every class.
  static ClassFunction constant(TablePtr table, const Cyclotomic& c);

  const TablePtr& table() const { return table_; }
  const std::vector<Cyclotomic>& values() const { return values_; }
  std::size_t size() const { return values_.size(); }
  const Cyclotomic& operator[](std::size_t c) const { return values_[c]; }
  const Cyclotomic& degree() const { return values_.front(); }

  ClassFunction conj() const;
  bool is_zero() const;

  ClassFunction& operator+=(const ClassFunction& o);
  ClassFunction& operator-=(const ClassFunction& o);
  ClassFunction& operator*=(const ClassFunction& o);
  ClassFunction& operator*=(const Cyclotomic& s);

  friend ClassFunction operator+(ClassFunction a, const ClassFunction& b) { return a += b; }
  friend ClassFunction operator-(ClassFunction a, const ClassFunction& b) { return a -= b; }
  friend ClassFunction operator*(ClassFunction a, const ClassFunction& b) { return a *= b; }
  friend ClassFunction operator*(ClassFunction a, const Cyclotomic& s) { return a *= s; }
  friend ClassFunction operator-(ClassFunction a) { return a *= Cyclotomic(-1L); }
  // Equal iff both live on the same table object and agree on every class.
  friend bool operator==(const ClassFunction& a, const ClassFunction& b);

 private:
  TablePtr table_;
  std::vector<Cyclotomic> values_;

  void require_same_table(const ClassFunction& o) const;
};

// Plain data used to build a table; rows of `irreducibles` are class-indexed values.
struct TableData {
  std::string name;
  BigInt order;
  std::vector<ConjugacyClass> classes;
  std::map<std::uint64_t, std::vector<std::size_t>> power_maps;
  std::vector<std::vector<Cyclotomic>> irreducibles;
};

class CharacterTable : public std::enable_shared_from_this<CharacterTable> {
 public:
  // Checks shape only (lengths, index ranges, positive sizes); semantic
  // checks live in validate_table. Throws ValidationError.
  static TablePtr create(TableData data);

  const std::string& name() const { return data_.name; }
  const BigInt& order() const { return data_.order; }
  std::size_t class_count() const { return data_.classes.size(); }
  const std::vector<ConjugacyClass>& classes() const { return data_.classes; }
  const ConjugacyClass& cls(std::size_t c) const { return data_.classes.at(c); }
  const std::map<std::uint64_t, std::vector<std::size_t>>& power_maps() const { return data_.power_maps; }
  std::size_t irreducible_count() const { return data_.irreducibles.size(); }
  ClassFunction irreducible(std::size_t i) const;
  std::vector<ClassFunction> irreducibles() const;
  // |C_G(g)| for g in class c.
  BigInt centralizer_order(std::size_t c) const { return data_.order / data_.classes[c].size; }
  std::uint64_t max_element_order() const;
  const TableData& data() const { return data_; }

 private:
  explicit CharacterTable(TableData data) : data_(std::move(data)) {}
  TableData data_;
};

// Class of g^m for g in class c. Throws DomainError if a needed prime map is absent.
std::size_t power_class(const CharacterTable& t, std::size_t c, std::int64_t m);

struct ValidationReport {
  std::vector<std::string> violations;
  bool ok() const { return violations.empty(); }
};

ValidationReport validate_table(const CharacterTable& t);

// (1/|G|) sum_c |c| f(c) conj(g(c)).
Cyclotomic inner_product(const ClassFunction& f, const ClassFunction& g);
Cyclotomic norm(const ClassFunction& f);

struct FusionMap {
  TablePtr subgroup;
  TablePtr overgroup;
  std::vector<std::size_t> map;
};

ValidationReport validate_fusion(const FusionMap& fus);
ClassFunction restrict_to(const FusionMap& fus, const ClassFunction& f);
ClassFunction induce(const FusionMap& fus, const ClassFunction& f);

}  // namespace symirr
