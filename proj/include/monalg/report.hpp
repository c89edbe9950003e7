#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace monalg {

enum class CheckStatus { pass, fail, skip };

const char* to_string(CheckStatus s);

struct CheckRecord {
  std::string id;
  std::string anchor;  // the mathematical statement the check verifies
  CheckStatus status = CheckStatus::pass;
  std::string details;
};

struct Report {
  std::string suite;
  std::uint64_t seed = 0;
  std::vector<CheckRecord> checks;
  long elapsed_ms = 0;

  bool all_passed() const;
  int exit_status() const;  // 0 iff no check failed
};

enum class ReportFormat { human, json };

std::string emit_report(const Report& r, ReportFormat format);

}  // namespace monalg
