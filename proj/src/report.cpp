#include "cherednik/report.hpp"

#include <iomanip>
#include <sstream>

#include "cherednik/errors.hpp"

namespace cherednik {

std::string status_name(Status s) {
  switch (s) {
    case Status::pass:
      return "pass";
    case Status::fail:
      return "fail";
    case Status::skipped:
      return "skipped";
  }
  return "fail";
}

void CheckReport::fail(const std::string& witness_text) {
  status = Status::fail;
  ++failures;
  if (witness.size() < kMaxWitnesses) witness.push_back(witness_text);
}

void CheckReport::skip(const std::string& reason) {
  if (status == Status::pass) status = Status::skipped;
  details["skip_reason"] = reason;
}

bool CheckReport::expect_equal(const std::string& label, const std::string& lhs, const std::string& rhs) {
  if (lhs == rhs) return true;
  fail(label + ": lhs = " + lhs + " ; rhs = " + rhs);
  return false;
}

bool CheckReport::expect(bool condition, const std::string& witness_text) {
  if (!condition) fail(witness_text);
  return condition;
}

CheckReport run_check(const std::string& name, const ReportParams& params,
                      const std::function<void(CheckReport&)>& body) {
  CheckReport r;
  r.name = name;
  r.params = params;
  const auto start = std::chrono::steady_clock::now();
  try {
    body(r);
  } catch (const Error& e) {
    r.fail(std::string("error: ") + e.what());
  }
  r.elapsed_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
  return r;
}

bool all_passed(const std::vector<CheckReport>& reports) {
  for (const auto& r : reports)
    if (r.status == Status::fail) return false;
  return true;
}

nlohmann::json to_json(const CheckReport& r, bool timings) {
  nlohmann::json j;
  j["check_name"] = r.name;
  j["params"] = r.params;
  j["status"] = status_name(r.status);
  j["witness"] = r.witness;
  j["details"] = r.details;
  j["failures"] = r.failures;
  if (timings) j["elapsed_ms"] = r.elapsed_ms;
  return j;
}

std::string to_text(const CheckReport& r) {
  std::ostringstream os;
  os << "[" << status_name(r.status) << "] " << r.name;
  for (const auto& [k, v] : r.params) os << " " << k << "=" << v;
  os << " (" << std::fixed << std::setprecision(1) << r.elapsed_ms << " ms)";
  for (const auto& [k, v] : r.details) os << "\n    " << k << ": " << v;
  for (const auto& w : r.witness) os << "\n    witness: " << w;
  if (r.failures > static_cast<long long>(r.witness.size()))
    os << "\n    (" << r.failures - static_cast<long long>(r.witness.size()) << " more failures)";
  return os.str();
}

}  // namespace cherednik
