#pragma once

#include <string>
#include <vector>

namespace leibniz {

struct CheckResult {
  enum class Status { pass, fail, skipped };
  std::string id;
  std::string description;
  Status status = Status::skipped;
  std::string details;
};

struct VerifyReport {
  std::vector<CheckResult> checks;
  bool all_passed() const;
};

std::string status_name(CheckResult::Status s);

/// Runs the full acceptance suite against the bundled corpus directory.
/// The check list is fixed and ordered; every check runs even after a
/// failure, except that a corpus that fails to load skips the rest. An
/// exception inside a check marks that check failed, never aborts the run.
VerifyReport verify_paper(const std::string& corpus_dir);

}  // namespace leibniz
