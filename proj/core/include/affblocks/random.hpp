#pragma once

// Seeded generators for randomized sweeps (tests, benchmarks, `verify`).
// Roots are drawn from a small base pool with |vexp| <= max_vexp so that
// collisions, cancellations and shared blocks actually occur.

#include "affblocks/characters.hpp"
#include "affblocks/drinfeld.hpp"
#include "affblocks/hecke.hpp"
#include "affblocks/lattice.hpp"

#include <cstdint>
#include <random>
#include <vector>

namespace affblocks {

struct RandomConfig {
  std::vector<Base> bases;
  std::int64_t max_vexp = 10;

  /// Atoms a, b and the rational -2.
  static RandomConfig standard();
};

class RandomSource {
 public:
  explicit RandomSource(std::uint64_t seed, RandomConfig config = RandomConfig::standard());

  std::mt19937_64& engine() noexcept { return engine_; }
  const RandomConfig& config() const noexcept { return config_; }

  std::int64_t uniform(std::int64_t lo, std::int64_t hi);
  bool coin(double p = 0.5);

  Root root();
  RatFun ratfun(int max_support, std::int64_t max_mult);
  Poly poly(int max_degree);

  XnElement xn(int n, int max_terms, std::int64_t max_exp = 3);
  BetaCoordinates beta(int n, int max_terms, std::int64_t max_exp = 3);
  /// Half of the draws are expanded beta-coordinates, half are unconstrained.
  XnElement xn_mixed(int n, int max_terms);

  std::vector<FundamentalFactor> fundamentals(int n, int max_len);
  DominantTuple dominant_tuple(int n, int max_len);
  SubsetWeight subset(int n);

  /// A multisegment with total length exactly r and every length <= max_length.
  Multisegment multisegment(std::int64_t r, std::int64_t max_length);
  /// Re-cuts segments: random splits and merges of adjacent progressions.
  /// Keeps the juxtaposition; lengths stay <= max_length.
  std::vector<Segment> recut(std::vector<Segment> segments, std::int64_t max_length, int moves);

 private:
  std::mt19937_64 engine_;
  RandomConfig config_;
};

/// Fundamental factors (i, a) <-> segments (center a, length i).
std::vector<Segment> factors_to_segments(const std::vector<FundamentalFactor>& factors);
std::vector<FundamentalFactor> segments_to_factors(const std::vector<Segment>& segments);

}  // namespace affblocks
