#pragma once

#include <filesystem>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "symirr/chartab.hpp"

namespace symirr::cli {

enum class CheckStatus { Pass, Fail, Skip, Info };

std::string to_string(CheckStatus s);

struct Check {
  std::string label;
  CheckStatus status = CheckStatus::Pass;
  std::string detail;
};

struct SuiteResult {
  std::string suite;
  std::vector<Check> checks;

  bool ok() const;
  std::size_t count(CheckStatus s) const;
};

struct SuiteOptions {
  std::filesystem::path data_dir;
  unsigned jobs = 1;
};

std::filesystem::path default_data_dir();

// Suite names in the order `all` runs them.
const std::vector<std::string>& suite_names();
bool is_suite(const std::string& name);
// Runs one named suite; throws DomainError for unknown names.
SuiteResult run_suite(const std::string& name, const SuiteOptions& opts);
// Runs every suite, up to opts.jobs at a time; results keep the declared order.
std::vector<SuiteResult> run_all_suites(const SuiteOptions& opts);

std::string format_text(const SuiteResult& r);
std::string format_json(const std::vector<SuiteResult>& results);

// Weil characters of Sp4(3): the non-real degree-5 xi and the non-real
// degree-4 eta with xi*eta real-valued.
struct WeilPair {
  ClassFunction xi;
  ClassFunction eta;
};
WeilPair find_weil_pair(const TablePtr& sp43);

// First irreducible of the given degree and indicator, or nullopt.
std::optional<ClassFunction> select_character(const TablePtr& t, long degree, int indicator);

}  // namespace symirr::cli
