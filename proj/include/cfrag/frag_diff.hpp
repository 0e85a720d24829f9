#pragma once

#include <cstddef>
#include <utility>

#include "cfrag/bump.hpp"
#include "cfrag/cover.hpp"
#include "cfrag/diffeo.hpp"

namespace cfrag {

/// U_eps = {gamma : |gamma(t) - t| < eps and |gamma'(t) - 1| < eps}.
struct EpsilonNeighbourhood {
  double epsilon;

  /// max(sup |gamma - id|, sup |gamma' - 1|) over the grid.
  static double distance(const CircleDiffeo& gamma);
  bool contains(const CircleDiffeo& gamma) const { return distance(gamma) < epsilon; }
};

/// The three cutoffs attached to an interval I = (a, b) with inner interval
/// Ihat = (ah, bh): D_c is 1 on [ah, bh] and supported in I, D_l and D_r
/// live on (a, ah) and (bh, b) with integrals (ah - a)/2 and (b - bh)/2.
struct IntervalCutoffs {
  IntervalArc outer;
  double a, ahat, bhat, b;  // lifted so that a < ahat < bhat < b
  BumpFunction centre;
  BumpFunction left;
  BumpFunction right;

  static IntervalCutoffs build(const IntervalArc& interval, const IntervalArc& inner, std::size_t n = kDefaultGrid,
                               double tail_tolerance = kCutoffTailTolerance);

  std::size_t size() const { return centre.size(); }

  /// Largest eps for which the alpha/beta bounds keep the localized map's derivative positive.
  double epsilon_bound() const;
};

/// alpha = 2/(ah - a) (gamma(ah) - ah - int_a^ah (gamma' - 1) D_c).
double alpha(const CircleDiffeo& gamma, const IntervalCutoffs& c);
/// beta = 2/(b - bh) (bh - gamma(bh) - int_bh^b (gamma' - 1) D_c).
double beta(const CircleDiffeo& gamma, const IntervalCutoffs& c);
/// beta = -2/(b - bh) int_0^2pi ((gamma' - 1) D_c + alpha D_l).
double beta_full_integral_form(const CircleDiffeo& gamma, const IntervalCutoffs& c, double alpha_value);

/// 2 eps (1 + ah) / (ah - a).
double alpha_bound(double epsilon, const IntervalCutoffs& c);
/// 2 eps (1 + b - bh) / (b - bh).
double beta_bound(double epsilon, const IntervalCutoffs& c);

struct Localization {
  CircleDiffeo factor;  // equals gamma on [ah, bh], the identity outside (a, b)
  double alpha;
  double beta;
  double periodicity_defect;  // factor(t + 2pi) - factor(t) - 2pi before projection
  double min_derivative;
};

/// The map theta -> a + int_a^theta ((gamma' - 1) D_c + 1 + alpha D_l + beta D_r).
/// Throws DerivativeError when its derivative is not positive.
Localization localize(const CircleDiffeo& gamma, const IntervalCutoffs& c);

struct FragmentOptions {
  double epsilon = 0.01;
  double tail_tolerance = kDefaultTailTolerance;
};

struct FragmentationResult {
  CircleDiffeo xi1, xi2, xi3;
  double alpha1 = 0, beta1 = 0, alpha2 = 0, beta2 = 0;
  double reconstruction_error = 0;
  double periodicity_defect = 0;
  double min_derivative1 = 0;  // min gamma1'
  double min_derivative2 = 0;  // min gamma2'
};

/// Fragmentation gamma = Xi1 Xi2 Xi3 with supp Xi_j in I_j, for a fixed
/// cover and grid. Cutoffs are built once.
class DiffFragmenter {
 public:
  DiffFragmenter(const CoverConfig& cover, std::size_t n = kDefaultGrid, FragmentOptions options = {});

  /// Throws NeighbourhoodError when gamma is not in U_eps or eps >= eps1,
  /// DerivativeError when a localized factor fails to be increasing.
  FragmentationResult operator()(const CircleDiffeo& gamma) const;

  const CoverConfig& cover() const { return cover_; }
  const IntervalCutoffs& cutoffs(int j) const { return j == 1 ? c1_ : c2_; }
  double epsilon1() const { return c1_.epsilon_bound(); }
  const FragmentOptions& options() const { return options_; }
  std::size_t size() const { return c1_.size(); }

 private:
  CoverConfig cover_;
  FragmentOptions options_;
  IntervalCutoffs c1_;
  IntervalCutoffs c2_;
};

FragmentationResult fragment(const CircleDiffeo& gamma, const CoverConfig& cover, FragmentOptions options = {});

/// gamma = gamma_L o gamma_R with supp gamma_L in I_left and supp gamma_R in
/// I_right. Transitions span the middle 90% of the overlaps, or in the
/// identity gap next to an end of I_left that I_right does not contain.
/// Throws GeometryError when supp gamma is not inside I_left u I_right.
std::pair<CircleDiffeo, CircleDiffeo> fragment_pair(const CircleDiffeo& gamma, const IntervalArc& left,
                                                    const IntervalArc& right,
                                                    double tail_tolerance = kDefaultTailTolerance);

}  // namespace cfrag
