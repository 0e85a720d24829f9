#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "cfrag/interval.hpp"
#include "cfrag/periodic_function.hpp"

namespace cfrag {

/// Element of the universal cover of Diff+(S^1): gamma(t) = t + p(t) with
/// p periodic and gamma' > 0.
class CircleDiffeo {
 public:
  /// Throws DerivativeError unless 1 + p' > 0 at every grid point.
  explicit CircleDiffeo(PeriodicFunction periodic_part);

  static CircleDiffeo identity(std::size_t n = kDefaultGrid);
  static CircleDiffeo rotation(double s, std::size_t n = kDefaultGrid);

  struct FourierTerm {
    int k;
    double a;  // cos coefficient
    double b;  // sin coefficient
  };
  /// gamma(t) = t + sum a_k cos kt + b_k sin kt.
  static CircleDiffeo from_fourier(const std::vector<FourierTerm>& terms, std::size_t n = kDefaultGrid);

  const PeriodicFunction& periodic_part() const { return p_; }
  std::size_t size() const { return p_.size(); }

  double operator()(double t) const { return t + p_(t); }

  /// gamma(t_k) at the grid points.
  std::vector<double> values() const;

  /// gamma' = 1 + p'.
  PeriodicFunction derivative() const;
  double min_derivative() const;
  double tail() const { return p_.tail(); }

 private:
  PeriodicFunction p_;
};

/// outer o inner, sampled at the grid and re-interpolated.
/// Throws AliasingError when the result's tail exceeds `tail_tolerance`.
CircleDiffeo compose(const CircleDiffeo& outer, const CircleDiffeo& inner,
                     double tail_tolerance = kDefaultTailTolerance);

/// Pointwise Newton solve of gamma(s) = t_k, safeguarded by bisection.
/// Throws ConvergenceError if a residual stays above 1e-12.
CircleDiffeo inverse(const CircleDiffeo& gamma);

/// Numerical support: arc around the grid points with |gamma(t) - t| > tol, one cell wider.
Support support(const CircleDiffeo& gamma, double tol = 1e-10);

/// sup over the grid of |gamma1 - gamma2|.
double distance(const CircleDiffeo& g1, const CircleDiffeo& g2);

/// Largest |gamma(t_k) - t_k| over grid points outside the open arc.
double deviation_outside(const CircleDiffeo& gamma, const IntervalArc& arc);

/// Rows "t,gamma(t)" at the grid points.
std::string to_csv(const CircleDiffeo& gamma);

}  // namespace cfrag
