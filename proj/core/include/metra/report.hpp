#pragma once

#include <string>
#include <vector>

#include "json.hpp"

namespace metra {

struct CheckRecord {
  std::string name;  // stable identifier of the checked property
  double lhs = 0.0;
  double rhs = 0.0;
  double slack = 0.0;  // rhs - lhs (or tolerance margin)
  bool pass = false;
};

struct Report {
  std::string command;
  std::string inputs_digest;
  std::vector<CheckRecord> checks;
  double elapsed_s = 0.0;

  bool all_pass() const;
  void add(std::string name, double lhs, double rhs, double tol);
  // pass/fail with an explicit verdict (for non-inequality checks)
  void add_flag(std::string name, bool pass, double value = 0.0);

  nlohmann::ordered_json to_json(bool include_timing = true) const;
  std::string to_csv() const;
};

// FNV-1a over the raw bytes; used to fingerprint inputs in reports.
std::string digest_bytes(const std::string& bytes);

}  // namespace metra
