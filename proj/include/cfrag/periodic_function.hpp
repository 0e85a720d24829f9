#pragma once

#include <complex>
#include <cstddef>
#include <functional>
#include <numbers>
#include <span>
#include <string>
#include <vector>

namespace cfrag {

inline constexpr double kTwoPi = 2.0 * std::numbers::pi;

/// Default grid size for sampled periodic data.
inline constexpr std::size_t kDefaultGrid = 1024;

/// Spectral tail above which a group or algebra element is considered
/// under-resolved (see BasicPeriodicFunction::tail).
inline constexpr double kDefaultTailTolerance = 1e-9;

/// Angle of the k-th point of an n-point uniform grid on [0, 2pi).
inline double grid_point(std::size_t k, std::size_t n) {
  return kTwoPi * static_cast<double>(k) / static_cast<double>(n);
}

std::vector<double> grid(std::size_t n);

/// True when n >= 16 and n is a power of two.
bool is_valid_grid_size(std::size_t n);

template <class Scalar>
class Interpolant;

/// A smooth 2pi-periodic function held as samples on a uniform grid.
///
/// Values between grid points come from the unique trigonometric
/// polynomial of degree < N/2 through the samples; the Nyquist mode is
/// interpreted as a cosine so that real samples interpolate to a real
/// function. Instances are immutable.
template <class Scalar>
class BasicPeriodicFunction {
 public:
  using value_type = Scalar;

  /// Throws std::invalid_argument unless the sample count is a valid grid size.
  explicit BasicPeriodicFunction(std::vector<Scalar> samples);

  static BasicPeriodicFunction sample(const std::function<Scalar(double)>& f, std::size_t n);
  static BasicPeriodicFunction constant(Scalar value, std::size_t n);
  static BasicPeriodicFunction zero(std::size_t n) { return constant(Scalar{}, n); }

  /// Builds the function from its DFT coefficients c_k (samples are sum c_k e^{ik t_j}).
  static BasicPeriodicFunction from_coefficients(std::span<const std::complex<double>> coeffs);

  std::size_t size() const { return samples_.size(); }
  std::span<const Scalar> samples() const { return samples_; }
  Scalar operator[](std::size_t k) const { return samples_[k]; }

  /// Normalized DFT coefficients c_k = (1/N) sum_j f_j e^{-ik t_j}, index k in [0, N).
  std::vector<std::complex<double>> coefficients() const;

  /// Trigonometric interpolant at t (any real t; exact at grid points).
  Scalar operator()(double t) const;

  /// Interpolant at many points; uses an oversampled table and local
  /// Lagrange interpolation, accurate to ~1e-14 relative for resolved data.
  std::vector<Scalar> evaluate(std::span<const double> ts) const;

  /// Spectral derivative; order must be 1, 2 or 3.
  BasicPeriodicFunction derivative(int order = 1) const;

  Scalar mean() const;

  /// Full-period integral (trapezoid rule).
  Scalar integral() const { return mean() * kTwoPi; }

  /// Integral over [a, b] with a <= b <= a + 2pi, via the spectral antiderivative.
  Scalar integrate(double a, double b) const;

  /// The values int_0^{t_k} f(s) ds at the grid points.
  std::vector<Scalar> cumulative_integral() const;

  /// Periodic antiderivative of f - mean(f), normalized to vanish at t = 0.
  BasicPeriodicFunction periodic_antiderivative() const;

  /// Largest coefficient magnitude in the top octave N/4 <= |k| <= N/2.
  double tail() const;

  /// Spectral resampling onto m points (zero padding or truncation).
  BasicPeriodicFunction resample(std::size_t m) const;

  /// Largest sample magnitude.
  double sup_norm() const;

  BasicPeriodicFunction map(const std::function<Scalar(Scalar)>& f) const;

  BasicPeriodicFunction operator-() const;
  BasicPeriodicFunction& operator+=(const BasicPeriodicFunction& other);
  BasicPeriodicFunction& operator-=(const BasicPeriodicFunction& other);
  BasicPeriodicFunction& operator*=(const BasicPeriodicFunction& other);
  BasicPeriodicFunction& operator*=(Scalar s);

  friend BasicPeriodicFunction operator+(BasicPeriodicFunction a, const BasicPeriodicFunction& b) { return a += b; }
  friend BasicPeriodicFunction operator-(BasicPeriodicFunction a, const BasicPeriodicFunction& b) { return a -= b; }
  friend BasicPeriodicFunction operator*(BasicPeriodicFunction a, const BasicPeriodicFunction& b) { return a *= b; }
  friend BasicPeriodicFunction operator*(BasicPeriodicFunction a, Scalar s) { return a *= s; }
  friend BasicPeriodicFunction operator*(Scalar s, BasicPeriodicFunction a) { return a *= s; }

 private:
  void check_same_grid(const BasicPeriodicFunction& other) const;

  std::vector<Scalar> samples_;
};

using PeriodicFunction = BasicPeriodicFunction<double>;
using ComplexPeriodicFunction = BasicPeriodicFunction<std::complex<double>>;

/// Fast repeated evaluation of one interpolant at off-grid points.
template <class Scalar>
class Interpolant {
 public:
  explicit Interpolant(const BasicPeriodicFunction<Scalar>& f);

  Scalar operator()(double t) const;
  std::vector<Scalar> operator()(std::span<const double> ts) const;

 private:
  std::vector<Scalar> table_;
};

ComplexPeriodicFunction to_complex(const PeriodicFunction& f);
PeriodicFunction real_part(const ComplexPeriodicFunction& f);

/// CSV with rows "t,value" at the grid points, 17 significant digits.
std::string to_csv(const PeriodicFunction& f);

extern template class BasicPeriodicFunction<double>;
extern template class BasicPeriodicFunction<std::complex<double>>;
extern template class Interpolant<double>;
extern template class Interpolant<std::complex<double>>;

}  // namespace cfrag
