#pragma once

#include <string>
#include <vector>

namespace xha {

enum class CheckStatus { Pass, Fail, Skip, InputError };

struct CheckResult {
  std::string name;
  CheckStatus status = CheckStatus::Pass;
  std::string witness;  // offending tuple / entry, empty on pass
};

/// Ordered list of named checks. Aggregation is deterministic: results are
/// kept sorted by name, ties broken by witness.
class Report {
 public:
  void add(CheckResult r);
  void pass(std::string name) { add({std::move(name), CheckStatus::Pass, ""}); }
  void fail(std::string name, std::string witness) { add({std::move(name), CheckStatus::Fail, std::move(witness)}); }
  void skip(std::string name, std::string witness) { add({std::move(name), CheckStatus::Skip, std::move(witness)}); }
  void input_error(std::string name, std::string witness) {
    add({std::move(name), CheckStatus::InputError, std::move(witness)});
  }
  void merge(const Report& other);

  bool all_passed() const;
  bool has_input_error() const;
  bool check_passed(const std::string& name) const;
  const std::vector<CheckResult>& results() const { return results_; }

  std::string to_text() const;
  std::string to_json() const;

 private:
  std::vector<CheckResult> results_;
};

std::string status_name(CheckStatus s);

}  // namespace xha
