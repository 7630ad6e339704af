#pragma once

#include <map>
#include <string>

#include "symirr/chartab.hpp"
#include "symirr/chartab_io.hpp"

namespace testing_support {

inline std::string data_path(const std::string& file) { return std::string(SYMIRR_TEST_DATA_DIR) + "/" + file; }

// Loads each bundled table once per process.
inline symirr::TablePtr fixture(const std::string& file) {
  static std::map<std::string, symirr::TablePtr> cache;
  auto it = cache.find(file);
  if (it != cache.end()) return it->second;
  return cache[file] = symirr::load_table(data_path(file));
}

inline symirr::FusionMap a5_s5_fusion() {
  return symirr::parse_fusion_json(symirr::read_text_file(data_path("a5_s5.fusion.json")), fixture("a5.json"),
                                   fixture("s5.json"));
}

// First class index with the given element order and class size.
inline std::size_t find_class(const symirr::CharacterTable& t, std::uint64_t order, long size) {
  for (std::size_t c = 0; c < t.class_count(); ++c) {
    if (t.cls(c).element_order == order && t.cls(c).size == size) return c;
  }
  throw std::runtime_error("class not found");
}

}  // namespace testing_support
