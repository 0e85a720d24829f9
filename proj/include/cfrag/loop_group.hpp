#pragma once

#include <cstddef>
#include <functional>
#include <string>
#include <vector>

#include "cfrag/bump.hpp"
#include "cfrag/cover.hpp"
#include "cfrag/diffeo.hpp"
#include "cfrag/su_n.hpp"

namespace cfrag {

using su::Matrix;

namespace detail {

/// Grid samples of a matrix-valued loop with entrywise spectral operations.
class MatrixLoop {
 public:
  MatrixLoop() = default;
  explicit MatrixLoop(std::vector<Matrix> samples);

  std::size_t size() const { return samples_.size(); }
  Eigen::Index dim() const { return samples_.empty() ? 0 : samples_.front().rows(); }
  const std::vector<Matrix>& samples() const { return samples_; }
  const Matrix& operator[](std::size_t k) const { return samples_[k]; }

  ComplexPeriodicFunction entry(Eigen::Index i, Eigen::Index j) const;
  /// Largest spectral tail over all entries.
  double tail() const;

 protected:
  std::vector<Matrix> samples_;
};

}  // namespace detail

/// Loop in su(n): anti-hermitian traceless samples.
class LoopAlgebraElement : public detail::MatrixLoop {
 public:
  /// Throws std::invalid_argument if a sample is not in su(n) within 1e-12 (relative).
  explicit LoopAlgebraElement(std::vector<Matrix> samples);

  static LoopAlgebraElement zero(std::size_t n, Eigen::Index dim = 2);
  static LoopAlgebraElement constant(const Matrix& x, std::size_t n);
  static LoopAlgebraElement sample(const std::function<Matrix(double)>& f, std::size_t n);
  /// sum_j f_j(t) i sigma_j.
  static LoopAlgebraElement su2(const PeriodicFunction& fx, const PeriodicFunction& fy, const PeriodicFunction& fz);

  LoopAlgebraElement derivative() const;
  /// max over the grid of the operator norm.
  double sup_norm() const;

  LoopAlgebraElement operator+(const LoopAlgebraElement& other) const;
  LoopAlgebraElement operator-(const LoopAlgebraElement& other) const;
  LoopAlgebraElement operator*(double s) const;
  /// Pointwise product with a real function.
  LoopAlgebraElement operator*(const PeriodicFunction& f) const;
};

/// Loop in SU(n).
class LoopElement : public detail::MatrixLoop {
 public:
  /// Throws std::invalid_argument if a sample is not in SU(n) within 1e-10.
  explicit LoopElement(std::vector<Matrix> samples);

  static LoopElement identity(std::size_t n, Eigen::Index dim = 2);
};

/// Pointwise product; AliasingError if the result's tail exceeds the tolerance.
LoopElement multiply(const LoopElement& g1, const LoopElement& g2, double tail_tolerance = kDefaultTailTolerance);
/// Pointwise inverse (adjoint).
LoopElement inverse(const LoopElement& g);
LoopElement exp_loop(const LoopAlgebraElement& xi);
/// Pointwise principal logarithm; BranchError if a sample is at distance >= 1 from I.
LoopAlgebraElement log_loop(const LoopElement& g);

/// Pointwise bracket [xi(t), eta(t)].
LoopAlgebraElement bracket(const LoopAlgebraElement& xi, const LoopAlgebraElement& eta);
/// omega(xi, eta) = 1/2pi int <xi(t), eta'(t)> dt.
double omega(const LoopAlgebraElement& xi, const LoopAlgebraElement& eta);
/// xi o f, sampled at the grid.
LoopAlgebraElement compose(const LoopAlgebraElement& xi, const CircleDiffeo& f);

/// max over the grid of ||g1(t) - g2(t)||.
double distance(const LoopElement& g1, const LoopElement& g2);
double distance(const LoopAlgebraElement& x1, const LoopAlgebraElement& x2);

/// Arc where ||g(t) - I|| > tol, one cell wider.
Support support(const LoopElement& g, double tol = 1e-10);
Support support(const LoopAlgebraElement& xi, double tol = 1e-10);
/// Largest ||g(t_k) - I|| at grid points outside the open arc.
double deviation_outside(const LoopElement& g, const IntervalArc& arc);

/// Rows "t,re00,im00,re01,im01,..." with entries in row-major order.
std::string to_csv(const detail::MatrixLoop& g);

/// The cutoffs chi1 (support I1, 1 a bit beyond S^1 minus I2 u I3) and chi2
/// (support (b3, b2), 1 from a bit before a2 to a bit after a3). "A bit" is
/// the cover's margin times the adjacent overlap.
struct LoopCutoffs {
  BumpFunction chi1;
  BumpFunction chi2;

  static LoopCutoffs build(const CoverConfig& cover, std::size_t n = kDefaultGrid,
                           double tail_tolerance = kCutoffTailTolerance);
};

struct LoopFragmentation {
  LoopElement xi1, xi2, xi3;
  double reconstruction_error = 0;
};

/// gamma = Xi1 Xi2 Xi3 with Xi1 = Exp(chi1 eta), Xi2 = Exp(chi2 (1 - chi1) eta),
/// Xi3 = Exp((1 - chi1)(1 - chi2) eta), eta = log gamma.
class LoopFragmenter {
 public:
  LoopFragmenter(const CoverConfig& cover, std::size_t n = kDefaultGrid);

  LoopFragmentation operator()(const LoopElement& gamma) const;
  /// Xi1 = Exp(chi1 eta), Xi2 = Exp(chi2 log(Xi1^-1 gamma)), Xi3 = Xi2^-1 Xi1^-1 gamma.
  LoopFragmentation sequential(const LoopElement& gamma) const;

  const LoopCutoffs& cutoffs() const { return cutoffs_; }
  const CoverConfig& cover() const { return cover_; }

 private:
  CoverConfig cover_;
  LoopCutoffs cutoffs_;
};

LoopFragmentation fragment_loop(const LoopElement& gamma, const CoverConfig& cover);
LoopFragmentation fragment_loop_sequential(const LoopElement& gamma, const CoverConfig& cover);

}  // namespace cfrag
