#pragma once

#include <string>
#include <vector>

namespace srsphere {

struct CheckResult {
  std::string id;       // stable machine name, e.g. "frames.s7_gram"
  std::string label;    // the identity being certified, human readable
  bool exact = false;   // true when the check is a zero-tolerance polynomial identity
  bool pass = false;
  double error = 0;     // worst numeric error for tolerance checks; 0 for exact passes
  std::string detail;   // extra context (counts, norms, notes)
};

/// Runs the identity certificates of one module ("frames", "htype",
/// "subelliptic", "geodesics") or "all". `degree` bounds the exact quotient
/// certificates of the subelliptic module.
std::vector<CheckResult> run_verify(const std::string& module, int degree = 2);

}  // namespace srsphere
