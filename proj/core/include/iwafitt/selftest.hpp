#pragma once

#include <string>
#include <vector>

namespace iwafitt::selftest {

struct CriterionResult {
  int id = 0;
  std::string tag;  ///< "fitting", "lambda" or "euler"
  std::string title;
  bool pass = false;
  std::string detail;
  double seconds = 0.0;
};

/// Filter syntax: empty (everything), a tag, a criterion number, or a
/// comma-separated list of those.
bool filter_matches(const std::string& filter, int id, const std::string& tag);

/// Runs the acceptance criteria 1-10 selected by `filter`, in order.
/// Deterministic: every randomized check uses a fixed seed.
std::vector<CriterionResult> run(const std::string& filter = "");

}  // namespace iwafitt::selftest
