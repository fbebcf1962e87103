#include "xha/report.hpp"

#include <algorithm>
#include <sstream>

namespace xha {

std::string status_name(CheckStatus s) {
  switch (s) {
    case CheckStatus::Pass:
      return "pass";
    case CheckStatus::Fail:
      return "FAIL";
    case CheckStatus::Skip:
      return "skip";
    case CheckStatus::InputError:
      return "input-error";
  }
  return "?";
}

void Report::add(CheckResult r) {
  auto pos = std::lower_bound(results_.begin(), results_.end(), r, [](const CheckResult& a, const CheckResult& b) {
    return std::tie(a.name, a.witness) < std::tie(b.name, b.witness);
  });
  // Exact duplicates collapse: repeated passes of the same check are one line.
  if (pos != results_.end() && pos->name == r.name && pos->witness == r.witness && pos->status == r.status) return;
  results_.insert(pos, std::move(r));
}

void Report::merge(const Report& other) {
  for (const auto& r : other.results_) add(r);
}

bool Report::all_passed() const {
  for (const auto& r : results_)
    if (r.status == CheckStatus::Fail || r.status == CheckStatus::InputError) return false;
  return true;
}

bool Report::has_input_error() const {
  for (const auto& r : results_)
    if (r.status == CheckStatus::InputError) return true;
  return false;
}

bool Report::check_passed(const std::string& name) const {
  bool seen = false;
  for (const auto& r : results_) {
    if (r.name != name) continue;
    seen = true;
    if (r.status != CheckStatus::Pass && r.status != CheckStatus::Skip) return false;
  }
  return seen;
}

std::string Report::to_text() const {
  std::ostringstream os;
  for (const auto& r : results_) {
    os << "  [" << status_name(r.status) << "] " << r.name;
    if (!r.witness.empty()) os << "  @ " << r.witness;
    os << "\n";
  }
  return os.str();
}

namespace {
std::string json_escape(const std::string& s) {
  std::string out;
  for (char c : s) {
    if (c == '"' || c == '\\')
      out += std::string("\\") + c;
    else if (c == '\n')
      out += "\\n";
    else
      out += c;
  }
  return out;
}
}  // namespace

std::string Report::to_json() const {
  std::ostringstream os;
  os << "{\"checks\":[";
  for (std::size_t i = 0; i < results_.size(); ++i) {
    const auto& r = results_[i];
    if (i) os << ",";
    os << "{\"check\":\"" << json_escape(r.name) << "\",\"status\":\"" << status_name(r.status) << "\",\"witness\":\""
       << json_escape(r.witness) << "\"}";
  }
  os << "],\"ok\":" << (all_passed() ? "true" : "false") << "}";
  return os.str();
}

}  // namespace xha
