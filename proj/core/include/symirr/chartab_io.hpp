#pragma once

#include <filesystem>
#include <string>

#include "symirr/chartab.hpp"

namespace symirr {

// JSON table contract: {name, order, classes:[{name,size,order}],
// powermaps:{"p":[0-based images]}, irreducibles:[[literal,...],...]}.
// Orders and sizes may be JSON integers or decimal strings; floats are rejected.
TablePtr parse_table_json(const std::string& text, const std::string& source = "<string>");
TablePtr load_table(const std::filesystem::path& path);
std::string table_to_json(const CharacterTable& t);

struct FusionHeader {
  std::string subgroup;
  std::string overgroup;
};

FusionHeader parse_fusion_header(const std::string& text, const std::string& source = "<string>");
// Builds the fusion and checks that the named tables match the header.
FusionMap parse_fusion_json(const std::string& text, TablePtr subgroup, TablePtr overgroup,
                            const std::string& source = "<string>");
std::string fusion_to_json(const FusionMap& fus);

std::string read_text_file(const std::filesystem::path& path);

}  // namespace symirr
