#pragma once

// The acceptance suite: nine exact checks at desk scale with pinned values.

#include <string>
#include <vector>

namespace qnil {

struct CriterionResult {
  int id = 0;
  std::string name;
  bool pass = false;
  long checked = 0;
  std::string detail;  // first failure, or a summary
};

inline constexpr int kCriteria = 9;

CriterionResult run_criterion(int id);
std::vector<CriterionResult> run_acceptance();

}  // namespace qnil
