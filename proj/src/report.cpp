#include "cfrag/report.hpp"

#include <cmath>
#include <cstdint>
#include <cstdio>

namespace cfrag {

std::string digest(const std::string& text) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char ch : text) {
    h ^= ch;
    h *= 0x100000001b3ULL;
  }
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

RunReport::RunReport(std::string command, const std::string& inputs)
    : command_(std::move(command)), digest_(digest(command_ + "\n" + inputs)) {}

void RunReport::check_below(const std::string& name, double residual, double tolerance) {
  checks_.push_back({name, residual, tolerance, residual < tolerance});
}

void RunReport::check_exact(const std::string& name, bool ok) { checks_.push_back({name, ok ? 0.0 : 1.0, 0.0, ok}); }

void RunReport::note(const std::string& name, nlohmann::ordered_json value) { info_[name] = std::move(value); }

void RunReport::merge(const RunReport& other, const std::string& prefix) {
  for (auto c : other.checks_) {
    c.name = prefix + c.name;
    checks_.push_back(std::move(c));
  }
  for (const auto& [k, v] : other.info_.items()) info_[prefix + k] = v;
}

bool RunReport::pass() const {
  for (const auto& c : checks_)
    if (!c.pass) return false;
  return true;
}

nlohmann::ordered_json RunReport::to_json() const {
  nlohmann::ordered_json j;
  j["command"] = command_;
  j["inputs_digest"] = digest_;
  j["checks"] = nlohmann::ordered_json::array();
  for (const auto& c : checks_) {
    nlohmann::ordered_json e;
    e["name"] = c.name;
    // JSON has no infinity or NaN.
    e["residual"] = std::isfinite(c.residual) ? nlohmann::ordered_json(c.residual) : nlohmann::ordered_json(nullptr);
    e["tol"] = c.tolerance;
    e["pass"] = c.pass;
    j["checks"].push_back(std::move(e));
  }
  if (!info_.empty()) j["info"] = info_;
  j["pass"] = pass();
  return j;
}

std::string RunReport::to_text() const {
  std::string out = command_ + " (" + digest_ + ")\n";
  char buf[256];
  for (const auto& c : checks_) {
    std::snprintf(buf, sizeof buf, "  %-4s %-40s residual %-12.4g tol %.3g\n", c.pass ? "ok" : "FAIL", c.name.c_str(),
                  c.residual, c.tolerance);
    out += buf;
  }
  for (const auto& [k, v] : info_.items()) out += "  " + k + ": " + (v.is_string() ? v.get<std::string>() : v.dump()) + "\n";
  out += pass() ? "all checks passed\n" : "some checks FAILED\n";
  return out;
}

}  // namespace cfrag
