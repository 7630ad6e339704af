#include "symirr/chartab_io.hpp"

#include <fstream>
#include <sstream>

#include "json.hpp"
#include "symirr/errors.hpp"

namespace symirr {

namespace {

using nlohmann::json;

[[noreturn]] void bad(const std::string& source, const std::string& what) {
  throw ParseError(source + ": " + what);
}

json parse_json(const std::string& text, const std::string& source) {
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    bad(source, std::string("invalid JSON: ") + e.what());
  }
}

void reject_floats(const json& j, const std::string& source) {
  if (j.is_number_float()) bad(source, "floating-point literal " + j.dump() + " is not allowed");
  if (j.is_array() || j.is_object()) {
    for (const auto& v : j) reject_floats(v, source);
  }
}

const json& field(const json& obj, const char* key, const std::string& source) {
  if (!obj.is_object() || !obj.contains(key)) bad(source, std::string("missing field '") + key + "'");
  return obj.at(key);
}

BigInt big_integer(const json& j, const std::string& source, const std::string& what) {
  if (j.is_number_unsigned()) return BigInt(std::to_string(j.get<std::uint64_t>()));
  if (j.is_number_integer()) return BigInt(std::to_string(j.get<std::int64_t>()));
  if (j.is_string()) {
    const auto& s = j.get_ref<const std::string&>();
    if (s.empty() || s.find_first_not_of("0123456789") != std::string::npos) bad(source, what + " is not a decimal integer");
    return BigInt(s);
  }
  bad(source, what + " must be an integer");
}

std::size_t index_value(const json& j, const std::string& source, const std::string& what) {
  if (!j.is_number_unsigned()) bad(source, what + " must be a non-negative integer index");
  return j.get<std::size_t>();
}

Cyclotomic value_literal(const json& j, const std::string& source) {
  if (j.is_number_integer()) return Cyclotomic(big_integer(j, source, "character value"));
  if (!j.is_string()) bad(source, "character value must be a string literal or integer");
  return Cyclotomic::parse(j.get_ref<const std::string&>());
}

json big_json(const BigInt& v) {
  if (v.fits_slong_p()) return json(v.get_si());
  return json(v.get_str());
}

}  // namespace

std::string read_text_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError("cannot open " + path.string());
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

TablePtr parse_table_json(const std::string& text, const std::string& source) {
  const json j = parse_json(text, source);
  reject_floats(j, source);
  TableData d;
  const json& name = field(j, "name", source);
  if (!name.is_string()) bad(source, "'name' must be a string");
  d.name = name.get<std::string>();
  d.order = big_integer(field(j, "order", source), source, "'order'");

  const json& classes = field(j, "classes", source);
  if (!classes.is_array()) bad(source, "'classes' must be an array");
  for (const auto& c : classes) {
    ConjugacyClass cc;
    const json& cn = field(c, "name", source);
    cc.name = cn.is_string() ? cn.get<std::string>() : cn.dump();
    cc.size = big_integer(field(c, "size", source), source, "class size");
    const BigInt o = big_integer(field(c, "order", source), source, "element order");
    if (!o.fits_ulong_p()) bad(source, "element order too large");
    cc.element_order = o.get_ui();
    d.classes.push_back(std::move(cc));
  }

  const json& pm = field(j, "powermaps", source);
  if (!pm.is_object()) bad(source, "'powermaps' must be an object keyed by prime");
  for (const auto& [key, arr] : pm.items()) {
    if (key.empty() || key.find_first_not_of("0123456789") != std::string::npos) {
      bad(source, "power map key '" + key + "' is not a decimal prime");
    }
    if (!arr.is_array()) bad(source, "power map '" + key + "' must be an array");
    std::vector<std::size_t> img;
    for (const auto& v : arr) img.push_back(index_value(v, source, "power map entry"));
    d.power_maps.emplace(std::stoull(key), std::move(img));
  }

  const json& irr = field(j, "irreducibles", source);
  if (!irr.is_array()) bad(source, "'irreducibles' must be an array");
  for (const auto& row : irr) {
    if (!row.is_array()) bad(source, "each irreducible must be an array");
    std::vector<Cyclotomic> vals;
    vals.reserve(row.size());
    for (const auto& v : row) vals.push_back(value_literal(v, source));
    d.irreducibles.push_back(std::move(vals));
  }
  return CharacterTable::create(std::move(d));
}

TablePtr load_table(const std::filesystem::path& path) {
  return parse_table_json(read_text_file(path), path.string());
}

std::string table_to_json(const CharacterTable& t) {
  json j;
  j["name"] = t.name();
  j["order"] = big_json(t.order());
  json classes = json::array();
  for (const auto& c : t.classes()) {
    classes.push_back({{"name", c.name}, {"size", big_json(c.size)}, {"order", c.element_order}});
  }
  j["classes"] = std::move(classes);
  json pm = json::object();
  for (const auto& [p, img] : t.power_maps()) pm[std::to_string(p)] = img;
  j["powermaps"] = std::move(pm);
  json irr = json::array();
  for (const auto& row : t.data().irreducibles) {
    json r = json::array();
    for (const auto& v : row) r.push_back(v.to_string());
    irr.push_back(std::move(r));
  }
  j["irreducibles"] = std::move(irr);
  return j.dump(1) + "\n";
}

FusionHeader parse_fusion_header(const std::string& text, const std::string& source) {
  const json j = parse_json(text, source);
  reject_floats(j, source);
  const json& s = field(j, "subgroup", source);
  const json& o = field(j, "overgroup", source);
  if (!s.is_string() || !o.is_string()) bad(source, "'subgroup' and 'overgroup' must be table names");
  return {s.get<std::string>(), o.get<std::string>()};
}

FusionMap parse_fusion_json(const std::string& text, TablePtr subgroup, TablePtr overgroup, const std::string& source) {
  const FusionHeader h = parse_fusion_header(text, source);
  if (h.subgroup != subgroup->name() || h.overgroup != overgroup->name()) {
    throw ValidationError(source + ": fusion is " + h.subgroup + " -> " + h.overgroup + ", tables are " +
                          subgroup->name() + " -> " + overgroup->name());
  }
  const json j = json::parse(text);
  const json& m = field(j, "map", source);
  if (!m.is_array()) bad(source, "'map' must be an array");
  FusionMap fus{std::move(subgroup), std::move(overgroup), {}};
  for (const auto& v : m) fus.map.push_back(index_value(v, source, "fusion entry"));
  if (fus.map.size() != fus.subgroup->class_count()) throw ValidationError(source + ": fusion map has wrong length");
  for (std::size_t i : fus.map) {
    if (i >= fus.overgroup->class_count()) throw ValidationError(source + ": fusion index out of range");
  }
  return fus;
}

std::string fusion_to_json(const FusionMap& fus) {
  json j;
  j["subgroup"] = fus.subgroup->name();
  j["overgroup"] = fus.overgroup->name();
  j["map"] = fus.map;
  return j.dump() + "\n";
}

}  // namespace symirr
