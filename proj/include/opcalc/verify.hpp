#pragma once

#include <functional>
#include <string>
#include <vector>

namespace opcalc {

struct CriterionResult {
  int id = 0;
  std::string title;
  bool pass = false;
  std::vector<std::string> failures;
  std::vector<std::string> notes;
  double seconds = 0;
};

enum class Suite { Paper, Duality, Adjunction, All };

Suite parse_suite(const std::string& s);
std::vector<int> criteria_of(Suite s);

CriterionResult run_criterion(int id);
// Runs the criteria of a suite in order; on_result is called after each one.
std::vector<CriterionResult> run_suite(Suite s,
                                       const std::function<void(const CriterionResult&)>& on_result = {});

std::string summary_line(const CriterionResult& r);

}  // namespace opcalc
