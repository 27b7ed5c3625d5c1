#pragma once

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "lefschetz/constructions.hpp"

namespace lefschetz {

/// A small named algebra used by the cross-check corpus.
struct NamedAlgebra {
  std::string name;
  GradedAlgebra algebra;
};

/// Monomial complete intersections in two and three variables, a
/// non-Gorenstein algebra, and the weighted bases of the free-extension
/// families. Checks run over every degree-one basis form of each.
std::vector<NamedAlgebra> cross_check_corpus();

struct SuiteEntry {
  std::string theorem;
  std::size_t ordinal = 0;
  std::string instance;
  std::function<CheckReport(const SearchConfig&)> run;
};

struct SuiteResult {
  std::string theorem;
  std::size_t ordinal = 0;
  std::string instance;
  bool consistent = false;
  std::optional<std::string> error;
  nlohmann::json report;
};

nlohmann::json to_json(const SuiteResult& r);

/// Identifiers accepted by the suite filter, in run order.
std::vector<std::string> suite_theorems();

/// The built-in corpus, ordered by (theorem, ordinal).
std::vector<SuiteEntry> verification_corpus();

/// Runs the entries whose theorem matches `filter` (all if empty). Errors
/// thrown by a check are recorded as inconsistent results, never rethrown.
/// Throws OutOfRange for an unknown filter.
std::vector<SuiteResult> run_suite(const std::string& filter, const SearchConfig& search = {});

}  // namespace lefschetz
