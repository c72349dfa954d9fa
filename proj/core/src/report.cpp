#include "metra/report.hpp"

#include <cstdint>
#include <sstream>

namespace metra {

bool Report::all_pass() const {
  for (const auto& c : checks)
    if (!c.pass) return false;
  return true;
}

void Report::add(std::string name, double lhs, double rhs, double tol) {
  CheckRecord r;
  r.name = std::move(name);
  r.lhs = lhs;
  r.rhs = rhs;
  r.slack = rhs - lhs;
  r.pass = r.slack >= -tol;
  checks.push_back(std::move(r));
}

void Report::add_flag(std::string name, bool pass, double value) {
  CheckRecord r;
  r.name = std::move(name);
  r.lhs = value;
  r.rhs = value;
  r.slack = 0.0;
  r.pass = pass;
  checks.push_back(std::move(r));
}

nlohmann::ordered_json Report::to_json(bool include_timing) const {
  nlohmann::ordered_json j;
  j["command"] = command;
  j["inputs_digest"] = inputs_digest;
  nlohmann::ordered_json arr = nlohmann::ordered_json::array();
  for (const auto& c : checks) {
    nlohmann::ordered_json r;
    r["name"] = c.name;
    r["lhs"] = c.lhs;
    r["rhs"] = c.rhs;
    r["slack"] = c.slack;
    r["pass"] = c.pass;
    arr.push_back(std::move(r));
  }
  j["checks"] = std::move(arr);
  j["pass"] = all_pass();
  if (include_timing) j["timing_s"] = elapsed_s;
  return j;
}

std::string Report::to_csv() const {
  std::ostringstream os;
  os << "name,lhs,rhs,slack,pass\n";
  os.precision(17);
  for (const auto& c : checks)
    os << c.name << ',' << c.lhs << ',' << c.rhs << ',' << c.slack << ','
       << (c.pass ? 1 : 0) << '\n';
  return os.str();
}

std::string digest_bytes(const std::string& bytes) {
  std::uint64_t h = 1469598103934665603ull;
  for (unsigned char b : bytes) {
    h ^= b;
    h *= 1099511628211ull;
  }
  std::ostringstream os;
  os << std::hex << h;
  return os.str();
}

}  // namespace metra
