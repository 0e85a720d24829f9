#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>

#include "cfrag/cover.hpp"
#include "cfrag/report.hpp"

namespace cfrag {

struct VerifyOptions {
  std::string suite = "all";  // all | diff | loop | cocycle | verma
  std::uint64_t seed = 42;
  std::size_t trials = 100;
  unsigned threads = 1;
  /// Fixed grid; when empty the grid starts at 1024 and doubles on AliasingError.
  std::optional<std::size_t> grid;
  CoverConfig cover = CoverConfig::default_cover();
  double epsilon = 0.01;
};

bool is_verify_suite(const std::string& suite);

/// Runs the property checks of the selected suites. The report depends only on the options
/// (thread count included only through the result, which it does not change).
RunReport run_verify(const VerifyOptions& options);

}  // namespace cfrag
