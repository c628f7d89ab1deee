#pragma once

#include <string>
#include <vector>

#include "json.hpp"

namespace polyzeta {

inline constexpr int kReportSchemaVersion = 1;

struct CaseResult {
  nlohmann::json input;
  std::string lhs, rhs;
  bool pass = false;
  double deviation = 0.0;  // |lhs - rhs| for numeric comparisons (0 for exact)
};

// Result of one verification suite: machine-checkable, JSON-serializable.
struct Report {
  std::string suite;
  nlohmann::json params;
  std::vector<CaseResult> cases;
  // "proved" for identities established in full, "experiment" for numerical
  // explorations that are not theorems.
  std::string status = "proved";

  bool all_pass() const;
  std::size_t passed() const;
  double max_deviation() const;

  void add_case(nlohmann::json input, std::string lhs, std::string rhs, bool pass,
                double deviation = 0.0);

  nlohmann::json to_json() const;
  // One line per failing case plus a summary line.
  std::string summary_text() const;
};

}  // namespace polyzeta
