#pragma once

// Check reports shared by the verification suites, the CLI and the acceptance
// runner.

#include <chrono>
#include <functional>
#include <map>
#include <string>
#include <vector>

#include "json.hpp"

namespace cherednik {

enum class Status { pass, fail, skipped };

std::string status_name(Status s);

struct CheckReport {
  std::string name;
  std::map<std::string, std::string> params;
  Status status = Status::pass;
  std::vector<std::string> witness;
  std::map<std::string, std::string> details;
  double elapsed_ms = 0;
  long long failures = 0;

  bool passed() const { return status == Status::pass; }
  // Marks the check failed; keeps the first few witnesses only.
  void fail(const std::string& witness_text);
  void skip(const std::string& reason);
  // Records a mismatch between two printed values unless they agree.
  bool expect_equal(const std::string& label, const std::string& lhs, const std::string& rhs);
  bool expect(bool condition, const std::string& witness_text);
};

inline constexpr std::size_t kMaxWitnesses = 5;

using ReportParams = std::map<std::string, std::string>;

// Runs body with timing; library errors become a failed report.
CheckReport run_check(const std::string& name, const ReportParams& params,
                      const std::function<void(CheckReport&)>& body);

bool all_passed(const std::vector<CheckReport>& reports);

nlohmann::json to_json(const CheckReport& r, bool timings);
std::string to_text(const CheckReport& r);

}  // namespace cherednik
