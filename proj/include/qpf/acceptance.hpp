#pragma once

#include <string>
#include <vector>

namespace qpf {

// One verification criterion: `measured` is the figure the bound applies to
// (a maximum deviation, a mismatch count, or a ratio distance), and the
// criterion passes when measured <= bound and any pinned runtime is met.
struct CriterionResult {
  int id = 0;
  std::string name;
  bool passed = false;
  double measured = 0.0;
  double bound = 0.0;
  double seconds = 0.0;
  std::string note;
};

// Criteria are numbered 1..14. Throws std::out_of_range otherwise.
CriterionResult run_criterion(int id);

// fast: criteria 1..9 (a few seconds). all: criteria 1..14 (minutes).
std::vector<CriterionResult> run_suite(bool all);

}  // namespace qpf
