#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace tate {

struct CriterionResult {
  int id;
  std::string name;
  bool pass;
  std::string detail;  // filled on failure
};

// Runs every acceptance criterion at the default truncation parameters.
// All checks are exact; independent checks may run in parallel but results
// are collected in criterion order.
std::vector<CriterionResult> runAcceptance();

// One pass/fail line per criterion; returns 0 iff everything passed.
int printAcceptanceReport(std::ostream& os, const std::vector<CriterionResult>& results);

}  // namespace tate
