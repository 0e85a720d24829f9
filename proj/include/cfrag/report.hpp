#pragma once

#include <string>
#include <vector>

#include <json.hpp>

namespace cfrag {

struct Check {
  std::string name;
  double residual;
  double tolerance;
  bool pass;
};

/// Residuals of one command run with their tolerances. The JSON form has
/// no timing information, so equal inputs give byte-identical reports.
class RunReport {
 public:
  RunReport(std::string command, const std::string& inputs);

  /// Passes when residual < tolerance (NaN fails).
  void check_below(const std::string& name, double residual, double tolerance);
  /// Exact check: residual 0 on success, 1 on failure, tolerance 0.
  void check_exact(const std::string& name, bool ok);
  /// Informational value that is not a check.
  void note(const std::string& name, nlohmann::ordered_json value);

  /// Appends the checks and notes of `other`, names prefixed by `prefix`.
  void merge(const RunReport& other, const std::string& prefix);

  const std::string& command() const { return command_; }
  const std::string& inputs_digest() const { return digest_; }
  const std::vector<Check>& checks() const { return checks_; }
  bool pass() const;

  nlohmann::ordered_json to_json() const;
  std::string to_text() const;

 private:
  std::string command_;
  std::string digest_;
  std::vector<Check> checks_;
  nlohmann::ordered_json info_ = nlohmann::ordered_json::object();
};

/// 64-bit FNV-1a of `text`, as 16 hex digits.
std::string digest(const std::string& text);

}  // namespace cfrag
