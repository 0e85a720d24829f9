#include "cfrag/bump.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "cfrag/errors.hpp"

namespace cfrag {
namespace {

// s = logistic(q) with q = 1/(1-x) - 1/x, the overflow-free form of the ratio.
double logistic(double q) {
  if (q >= 0) return 1.0 / (1.0 + std::exp(-q));
  const double e = std::exp(q);
  return e / (1.0 + e);
}

}  // namespace

double smooth_step(double x) {
  if (x <= 0.0) return 0.0;
  if (x >= 1.0) return 1.0;
  return logistic(1.0 / (1.0 - x) - 1.0 / x);
}

double smooth_step_derivative(double x) {
  if (x <= 0.0 || x >= 1.0) return 0.0;
  const double s = smooth_step(x);
  const double dq = 1.0 / ((1.0 - x) * (1.0 - x)) + 1.0 / (x * x);
  return s * (1.0 - s) * dq;
}

BumpFunction::BumpFunction(IntervalArc support, double plateau_begin, double plateau_end, double scale,
                           std::size_t n)
    : support_(support),
      plateau_begin_(plateau_begin),
      plateau_end_(plateau_end),
      scale_(scale),
      samples_(PeriodicFunction::zero(n)) {
  samples_ = PeriodicFunction::sample([this](double t) { return (*this)(t); }, n);
}

double BumpFunction::operator()(double t) const {
  const double s = support_.lift(t);
  if (s <= support_.a() || s >= support_.b()) return 0.0;
  if (s < plateau_begin_) return scale_ * smooth_step((s - support_.a()) / (plateau_begin_ - support_.a()));
  if (s > plateau_end_) return scale_ * smooth_step((support_.b() - s) / (support_.b() - plateau_end_));
  return scale_;
}

double BumpFunction::derivative(double t) const {
  const double s = support_.lift(t);
  if (s <= support_.a() || s >= support_.b()) return 0.0;
  if (s < plateau_begin_) {
    const double w = plateau_begin_ - support_.a();
    return scale_ * smooth_step_derivative((s - support_.a()) / w) / w;
  }
  if (s > plateau_end_) {
    const double w = support_.b() - plateau_end_;
    return -scale_ * smooth_step_derivative((support_.b() - s) / w) / w;
  }
  return 0.0;
}

BumpFunction make_bump_raw(const IntervalArc& support, double plateau_begin, double plateau_end, double scale,
                           std::size_t n, double tail_tolerance) {
  if (!(support.a() < plateau_begin && plateau_begin <= plateau_end && plateau_end < support.b()))
    throw GeometryError("plateau [" + std::to_string(plateau_begin) + ", " + std::to_string(plateau_end) +
                        "] is not strictly inside support " + support.to_string());
  BumpFunction bump(support, plateau_begin, plateau_end, scale, n);
  if (bump.tail() > tail_tolerance)
    throw AliasingError("cutoff on " + support.to_string() + " is under-resolved on " + std::to_string(n) +
                        " points (tail " + std::to_string(bump.tail()) + ")");
  return bump;
}

BumpFunction make_bump(const IntervalArc& support, const IntervalArc& plateau, std::size_t n,
                       double tail_tolerance) {
  const double begin = support.lift(plateau.a());
  return make_bump_raw(support, begin, begin + plateau.length(), 1.0, n, tail_tolerance);
}

BumpFunction make_normalized_bump(const IntervalArc& support, double target_integral, std::size_t n,
                                  double tail_tolerance) {
  const double length = support.length();
  if (!(target_integral > 0.0)) throw std::invalid_argument("target integral must be positive");
  if (target_integral >= length)
    throw MassError("no cutoff bounded by 1 on " + support.to_string() + " has integral " +
                    std::to_string(target_integral));

  const double centre = support.midpoint();
  const double max_plateau = kMaxPlateauFraction * length;
  auto base = [&](double plateau) {
    return make_bump_raw(support, centre - 0.5 * plateau, centre + 0.5 * plateau, 1.0, n, tail_tolerance);
  };

  // With symmetric transitions the exact integral is (length + plateau) / 2.
  double plateau = std::max(0.0, 2.0 * target_integral - length);
  if (plateau > max_plateau)
    throw MassError("cutoff with integral " + std::to_string(target_integral) + " on " + support.to_string() +
                    " needs a plateau wider than " + std::to_string(kMaxPlateauFraction) + " of the support");

  BumpFunction bump = base(plateau);
  if (bump.integral() < target_integral) {
    // Grow the bracket from the small end; the widest plateau has the sharpest transitions.
    double lo = plateau, hi = plateau, step = 1e-3 * length;
    do {
      lo = hi;
      hi = std::min(max_plateau, hi + step);
      step *= 2.0;
    } while (hi < max_plateau && base(hi).integral() < target_integral);
    if (base(hi).integral() < target_integral)
      throw MassError("cutoff on " + support.to_string() + " cannot reach integral " +
                      std::to_string(target_integral));
    for (int it = 0; it < 200 && hi - lo > 1e-15 * length; ++it) {
      const double mid = 0.5 * (lo + hi);
      (base(mid).integral() < target_integral ? lo : hi) = mid;
    }
    plateau = hi;
    bump = base(plateau);
  }
  const double scale = target_integral / bump.integral();
  return make_bump_raw(support, centre - 0.5 * plateau, centre + 0.5 * plateau, scale, n, tail_tolerance);
}

}  // namespace cfrag
