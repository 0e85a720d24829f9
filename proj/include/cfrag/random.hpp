#pragma once

#include <cstdint>
#include <random>

#include "cfrag/diffeo.hpp"
#include "cfrag/interval.hpp"
#include "cfrag/loop_group.hpp"

namespace cfrag {

/// Independent stream for trial `index` of a run seeded with `seed`.
std::mt19937_64 trial_rng(std::uint64_t seed, std::uint64_t index);

/// Uniform in [0, 1), 53 random bits; identical on every platform.
double uniform01(std::mt19937_64& rng);
double uniform(std::mt19937_64& rng, double lo, double hi);

/// Random trigonometric polynomial with modes 1..max_mode (plus a constant if requested).
PeriodicFunction random_trig(std::mt19937_64& rng, std::size_t n, int max_mode = 4, bool with_constant = false);

/// Random gamma with max(|gamma - id|, |gamma' - 1|) = u eps, u uniform in (0.1, 0.95).
CircleDiffeo random_diffeo(std::mt19937_64& rng, double epsilon, std::size_t n = kDefaultGrid);

/// As random_diffeo, but the periodic part is a random polynomial times a cutoff on `arc`.
CircleDiffeo random_diffeo_in(std::mt19937_64& rng, const IntervalArc& arc, double epsilon,
                              std::size_t n = kDefaultGrid);

/// Random real function supported in `arc`, sup norm 1.
PeriodicFunction random_function_in(std::mt19937_64& rng, const IntervalArc& arc, std::size_t n = kDefaultGrid);

/// Random su(2) loop with max operator norm u * bound, u uniform in (0.1, 0.95).
LoopAlgebraElement random_loop_algebra(std::mt19937_64& rng, double bound, std::size_t n = kDefaultGrid);
LoopAlgebraElement random_loop_algebra_in(std::mt19937_64& rng, const IntervalArc& arc, double bound,
                                          std::size_t n = kDefaultGrid);

}  // namespace cfrag
