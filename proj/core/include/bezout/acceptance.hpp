#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace bezout::acceptance {

// small runs a fraction of each sample size; full runs the stated sizes.
enum class Scale { small, full };

struct CriterionResult {
  int id = 0;
  std::string title;
  bool passed = false;
  std::string detail;  // counts and the first failing instance, if any
  double seconds = 0.0;
};

CriterionResult run_criterion(int id, Scale scale, std::uint64_t seed = 0);
// Criteria 1 through 9 in order.
std::vector<CriterionResult> run_all(Scale scale, std::uint64_t seed = 0);

// "PASS [3] title: detail (0.42 s)"
std::string format_line(const CriterionResult& r);

}  // namespace bezout::acceptance
