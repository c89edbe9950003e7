#include "monalg/report.hpp"

#include "json.hpp"
#include <sstream>

namespace monalg {

const char* to_string(CheckStatus s) {
  switch (s) {
    case CheckStatus::pass:
      return "pass";
    case CheckStatus::fail:
      return "fail";
    default:
      return "skip";
  }
}

bool Report::all_passed() const {
  for (const auto& c : checks)
    if (c.status == CheckStatus::fail) return false;
  return true;
}

int Report::exit_status() const { return all_passed() ? 0 : 1; }

std::string emit_report(const Report& r, ReportFormat format) {
  if (format == ReportFormat::json) {
    nlohmann::ordered_json j;
    j["suite"] = r.suite;
    j["seed"] = r.seed;
    j["checks"] = nlohmann::ordered_json::array();
    for (const auto& c : r.checks) {
      nlohmann::ordered_json jc;
      jc["id"] = c.id;
      jc["anchor"] = c.anchor;
      jc["status"] = to_string(c.status);
      jc["details"] = c.details;
      j["checks"].push_back(std::move(jc));
    }
    j["elapsed_ms"] = r.elapsed_ms;
    return j.dump(2) + "\n";
  }

  std::ostringstream os;
  os << "suite " << r.suite << " (seed " << r.seed << ")\n";
  std::size_t passed = 0, failed = 0, skipped = 0;
  for (const auto& c : r.checks) {
    const char* tag = c.status == CheckStatus::pass   ? "PASS"
                      : c.status == CheckStatus::fail ? "FAIL"
                                                      : "SKIP";
    os << "[" << tag << "] " << c.id << ": " << c.anchor;
    if (!c.details.empty()) os << " -- " << c.details;
    os << "\n";
    if (c.status == CheckStatus::pass)
      ++passed;
    else if (c.status == CheckStatus::fail)
      ++failed;
    else
      ++skipped;
  }
  os << r.checks.size() << " checks: " << passed << " passed, " << failed
     << " failed, " << skipped << " skipped (" << r.elapsed_ms << " ms)\n";
  return os.str();
}

}  // namespace monalg
