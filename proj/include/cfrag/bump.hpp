#pragma once

#include <cstddef>

#include "cfrag/interval.hpp"
#include "cfrag/periodic_function.hpp"

namespace cfrag {

/// Spectral tail allowed for sampled cutoff functions. Cutoffs only enter
/// the group constructions multiplied by small amplitudes, so this is
/// looser than kDefaultTailTolerance.
inline constexpr double kCutoffTailTolerance = 1e-7;

/// Widest plateau, as a fraction of the support, make_normalized_bump builds.
inline constexpr double kMaxPlateauFraction = 0.95;

/// s(x) = sigma(x) / (sigma(x) + sigma(1 - x)) with sigma(x) = exp(-1/x);
/// 0 for x <= 0, 1 for x >= 1, and s(x) + s(1 - x) = 1.
double smooth_step(double x);
double smooth_step_derivative(double x);

/// A smooth periodic cutoff: 0 outside `support`, 1 on the plateau
/// [plateau_begin, plateau_end] (lifted into the support), monotone
/// smooth-step transitions in between, all multiplied by `scale` <= 1.
class BumpFunction {
 public:
  double operator()(double t) const;
  double derivative(double t) const;

  const IntervalArc& support() const { return support_; }
  double plateau_begin() const { return plateau_begin_; }
  double plateau_end() const { return plateau_end_; }
  double scale() const { return scale_; }
  double max_value() const { return scale_; }

  /// Grid samples of the cutoff.
  const PeriodicFunction& function() const { return samples_; }
  std::size_t size() const { return samples_.size(); }
  double tail() const { return samples_.tail(); }

  /// Full-period integral of the sampled cutoff.
  double integral() const { return samples_.integral(); }

 private:
  friend BumpFunction make_bump_raw(const IntervalArc&, double, double, double, std::size_t, double);

  BumpFunction(IntervalArc support, double plateau_begin, double plateau_end, double scale, std::size_t n);

  IntervalArc support_;
  double plateau_begin_;
  double plateau_end_;
  double scale_;
  PeriodicFunction samples_;
};

/// Cutoff equal to 1 on `plateau` and vanishing outside `support`.
/// Throws GeometryError unless the closed plateau lies inside the support,
/// AliasingError if the sampled cutoff's tail exceeds `tail_tolerance`.
BumpFunction make_bump(const IntervalArc& support, const IntervalArc& plateau, std::size_t n = kDefaultGrid,
                       double tail_tolerance = kCutoffTailTolerance);

/// Cutoff supported in `support` with values in [0, 1] whose full-period
/// integral equals `target_integral`. Starts from the bump whose plateau
/// makes the exact integral equal the target, widens the plateau until the
/// sampled integral reaches the target, then scales down.
/// Throws MassError when the plateau would exceed kMaxPlateauFraction of the support.
BumpFunction make_normalized_bump(const IntervalArc& support, double target_integral,
                                  std::size_t n = kDefaultGrid, double tail_tolerance = kCutoffTailTolerance);

/// Lower-level constructor used by the cutoff builders: plateau given by lifted endpoints
/// (plateau_begin == plateau_end allowed), values scaled by `scale`.
BumpFunction make_bump_raw(const IntervalArc& support, double plateau_begin, double plateau_end, double scale,
                           std::size_t n, double tail_tolerance);

}  // namespace cfrag
