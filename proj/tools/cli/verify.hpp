#pragma once

// Randomized invariant sweeps behind `affblocks verify`.

#include <cstdint>
#include <string>
#include <vector>

namespace affblocks::cli {

struct VerifyOptions {
  std::string suite = "all";
  std::uint64_t seed = 0;
  int iters = 500;
  int max_n = 6;
  int max_r = 10;
};

struct PropertyResult {
  std::string suite;
  std::string property;
  bool passed = true;
  int checks = 0;
  std::string detail;  // first counterexample when failed
};

const std::vector<std::string>& verify_suites();

/// Runs the selected suite ("all" for every suite). Deterministic in the seed.
/// Throws std::invalid_argument on an unknown suite name.
std::vector<PropertyResult> run_verify(const VerifyOptions& options);

}  // namespace affblocks::cli
