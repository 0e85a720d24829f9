#include "cfrag/periodic_function.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <cstdio>
#include <limits>
#include <stdexcept>

#include "cfrag/fft.hpp"

namespace cfrag {
namespace {

using cplx = std::complex<double>;

constexpr std::size_t kOversample = 8;
constexpr int kStencil = 14;
constexpr int kStencilLeft = kStencil / 2 - 1;  // nodes j-6 .. j+7 around cell [j, j+1]

template <class Scalar>
Scalar from_cplx(cplx z) {
  if constexpr (std::is_same_v<Scalar, double>) {
    return z.real();
  } else {
    return z;
  }
}

// Signed frequency of DFT index k; the Nyquist index maps to +n/2.
long frequency(std::size_t k, std::size_t n) {
  return k <= n / 2 ? static_cast<long>(k) : static_cast<long>(k) - static_cast<long>(n);
}

template <class Scalar>
std::vector<cplx> as_complex(std::span<const Scalar> s) {
  return std::vector<cplx>(s.begin(), s.end());
}

struct LagrangeDenominators {
  std::array<double, kStencil> inv{};
  LagrangeDenominators() {
    for (int i = 0; i < kStencil; ++i) {
      double d = 1.0;
      for (int m = 0; m < kStencil; ++m)
        if (m != i) d *= static_cast<double>(i - m);
      inv[i] = 1.0 / d;
    }
  }
};

const LagrangeDenominators& denominators() {
  static const LagrangeDenominators d;
  return d;
}

}  // namespace

std::vector<double> grid(std::size_t n) {
  std::vector<double> t(n);
  for (std::size_t k = 0; k < n; ++k) t[k] = grid_point(k, n);
  return t;
}

bool is_valid_grid_size(std::size_t n) { return n >= 16 && (n & (n - 1)) == 0; }

template <class Scalar>
BasicPeriodicFunction<Scalar>::BasicPeriodicFunction(std::vector<Scalar> samples)
    : samples_(std::move(samples)) {
  if (!is_valid_grid_size(samples_.size()))
    throw std::invalid_argument("periodic function needs a power-of-two grid with at least 16 points, got " +
                                std::to_string(samples_.size()));
}

template <class Scalar>
BasicPeriodicFunction<Scalar> BasicPeriodicFunction<Scalar>::sample(const std::function<Scalar(double)>& f,
                                                                    std::size_t n) {
  std::vector<Scalar> s(n);
  for (std::size_t k = 0; k < n; ++k) s[k] = f(grid_point(k, n));
  return BasicPeriodicFunction(std::move(s));
}

template <class Scalar>
BasicPeriodicFunction<Scalar> BasicPeriodicFunction<Scalar>::constant(Scalar value, std::size_t n) {
  return BasicPeriodicFunction(std::vector<Scalar>(n, value));
}

template <class Scalar>
BasicPeriodicFunction<Scalar> BasicPeriodicFunction<Scalar>::from_coefficients(std::span<const cplx> coeffs) {
  auto values = fft::backward(coeffs);
  std::vector<Scalar> s(values.size());
  std::transform(values.begin(), values.end(), s.begin(), from_cplx<Scalar>);
  return BasicPeriodicFunction(std::move(s));
}

template <class Scalar>
std::vector<cplx> BasicPeriodicFunction<Scalar>::coefficients() const {
  auto c = fft::forward(as_complex<Scalar>(samples_));
  const double inv_n = 1.0 / static_cast<double>(size());
  for (auto& z : c) z *= inv_n;
  return c;
}

template <class Scalar>
Scalar BasicPeriodicFunction<Scalar>::operator()(double t) const {
  const std::size_t n = size();
  const auto c = coefficients();
  // e^{ikt} by recurrence, re-seeded periodically to bound drift.
  cplx sum = c[0];
  const cplx step = std::polar(1.0, t);
  cplx rot = step;
  for (std::size_t k = 1; k < n / 2; ++k) {
    if (k % 32 == 0) rot = std::polar(1.0, static_cast<double>(k) * t);
    sum += c[k] * rot + c[n - k] * std::conj(rot);
    rot *= step;
  }
  sum += c[n / 2] * std::cos(0.5 * static_cast<double>(n) * t);
  return from_cplx<Scalar>(sum);
}

template <class Scalar>
std::vector<Scalar> BasicPeriodicFunction<Scalar>::evaluate(std::span<const double> ts) const {
  return Interpolant<Scalar>(*this)(ts);
}

template <class Scalar>
BasicPeriodicFunction<Scalar> BasicPeriodicFunction<Scalar>::derivative(int order) const {
  if (order < 1 || order > 3) throw std::invalid_argument("derivative order must be 1, 2 or 3");
  const std::size_t n = size();
  auto c = coefficients();
  // Coefficients at the FFT rounding floor are dropped; (ik)^3 would amplify them by up to (n/2)^3.
  double largest = 0.0;
  for (const auto& x : c) largest = std::max(largest, std::abs(x));
  const double floor = 64 * std::numeric_limits<double>::epsilon() * largest;
  for (std::size_t k = 0; k < n; ++k) {
    if (std::abs(c[k]) < floor) {
      c[k] = cplx{};
      continue;
    }
    const long f = frequency(k, n);
    if (k == n / 2) {
      // cos((n/2) t): odd derivatives vanish on the grid, even ones flip sign.
      c[k] = (order % 2 == 1) ? cplx{} : c[k] * std::pow(-1.0, order / 2) * std::pow(static_cast<double>(f), order);
      continue;
    }
    c[k] *= std::pow(cplx(0.0, static_cast<double>(f)), order);
  }
  return from_coefficients(c);
}

template <class Scalar>
Scalar BasicPeriodicFunction<Scalar>::mean() const {
  // Pairwise summation keeps the trapezoid rule at rounding level.
  std::vector<Scalar> buf(samples_);
  std::size_t len = buf.size();
  while (len > 1) {
    for (std::size_t i = 0; i < len / 2; ++i) buf[i] = buf[2 * i] + buf[2 * i + 1];
    len /= 2;
  }
  return buf[0] / static_cast<double>(size());
}

template <class Scalar>
BasicPeriodicFunction<Scalar> BasicPeriodicFunction<Scalar>::periodic_antiderivative() const {
  const std::size_t n = size();
  auto c = coefficients();
  c[0] = 0.0;
  c[n / 2] = 0.0;
  for (std::size_t k = 1; k < n; ++k) {
    if (k == n / 2) continue;
    c[k] /= cplx(0.0, static_cast<double>(frequency(k, n)));
  }
  auto antiderivative = from_coefficients(c);
  const Scalar at_zero = antiderivative.samples_[0];
  for (auto& v : antiderivative.samples_) v -= at_zero;
  return antiderivative;
}

template <class Scalar>
Scalar BasicPeriodicFunction<Scalar>::integrate(double a, double b) const {
  if (!(a <= b) || b - a > kTwoPi * (1.0 + 1e-15))
    throw std::invalid_argument("integrate needs a <= b <= a + 2pi");
  const Scalar m = mean();
  if (b - a >= kTwoPi) return m * kTwoPi;
  const auto anti = periodic_antiderivative();
  return m * (b - a) + (anti(b) - anti(a));
}

template <class Scalar>
std::vector<Scalar> BasicPeriodicFunction<Scalar>::cumulative_integral() const {
  const Scalar m = mean();
  const auto anti = periodic_antiderivative();
  std::vector<Scalar> out(size());
  for (std::size_t k = 0; k < size(); ++k) out[k] = m * grid_point(k, size()) + anti.samples_[k];
  return out;
}

template <class Scalar>
double BasicPeriodicFunction<Scalar>::tail() const {
  const std::size_t n = size();
  const auto c = coefficients();
  double t = 0.0;
  for (std::size_t k = n / 4; k <= n - n / 4; ++k) t = std::max(t, std::abs(c[k]));
  return t;
}

template <class Scalar>
BasicPeriodicFunction<Scalar> BasicPeriodicFunction<Scalar>::resample(std::size_t m) const {
  if (!is_valid_grid_size(m)) throw std::invalid_argument("invalid resample size");
  const std::size_t n = size();
  const auto c = coefficients();
  std::vector<cplx> d(m, cplx{});
  if (m >= n) {
    d[0] = c[0];
    for (std::size_t k = 1; k < n / 2; ++k) {
      d[k] = c[k];
      d[m - k] = c[n - k];
    }
    if (m == n) {
      d[n / 2] = c[n / 2];
    } else {
      d[n / 2] = 0.5 * c[n / 2];
      d[m - n / 2] = 0.5 * c[n / 2];
    }
  } else {
    d[0] = c[0];
    for (std::size_t k = 1; k < m / 2; ++k) {
      d[k] = c[k];
      d[m - k] = c[n - k];
    }
    d[m / 2] = c[m / 2] + c[n - m / 2];
  }
  return from_coefficients(d);
}

template <class Scalar>
double BasicPeriodicFunction<Scalar>::sup_norm() const {
  double s = 0.0;
  for (const auto& v : samples_) s = std::max(s, std::abs(v));
  return s;
}

template <class Scalar>
BasicPeriodicFunction<Scalar> BasicPeriodicFunction<Scalar>::map(const std::function<Scalar(Scalar)>& f) const {
  std::vector<Scalar> s(size());
  std::transform(samples_.begin(), samples_.end(), s.begin(), f);
  return BasicPeriodicFunction(std::move(s));
}

template <class Scalar>
BasicPeriodicFunction<Scalar> BasicPeriodicFunction<Scalar>::operator-() const {
  auto r = *this;
  for (auto& v : r.samples_) v = -v;
  return r;
}

template <class Scalar>
void BasicPeriodicFunction<Scalar>::check_same_grid(const BasicPeriodicFunction& other) const {
  if (other.size() != size()) throw std::invalid_argument("periodic functions live on different grids");
}

template <class Scalar>
BasicPeriodicFunction<Scalar>& BasicPeriodicFunction<Scalar>::operator+=(const BasicPeriodicFunction& other) {
  check_same_grid(other);
  for (std::size_t k = 0; k < size(); ++k) samples_[k] += other.samples_[k];
  return *this;
}

template <class Scalar>
BasicPeriodicFunction<Scalar>& BasicPeriodicFunction<Scalar>::operator-=(const BasicPeriodicFunction& other) {
  check_same_grid(other);
  for (std::size_t k = 0; k < size(); ++k) samples_[k] -= other.samples_[k];
  return *this;
}

template <class Scalar>
BasicPeriodicFunction<Scalar>& BasicPeriodicFunction<Scalar>::operator*=(const BasicPeriodicFunction& other) {
  check_same_grid(other);
  for (std::size_t k = 0; k < size(); ++k) samples_[k] *= other.samples_[k];
  return *this;
}

template <class Scalar>
BasicPeriodicFunction<Scalar>& BasicPeriodicFunction<Scalar>::operator*=(Scalar s) {
  for (auto& v : samples_) v *= s;
  return *this;
}

template <class Scalar>
Interpolant<Scalar>::Interpolant(const BasicPeriodicFunction<Scalar>& f) {
  const std::size_t n = f.size();
  const std::size_t m = n * kOversample;
  const auto c = f.coefficients();
  std::vector<cplx> padded(m, cplx{});
  padded[0] = c[0];
  for (std::size_t k = 1; k < n / 2; ++k) {
    padded[k] = c[k];
    padded[m - k] = c[n - k];
  }
  padded[n / 2] = 0.5 * c[n / 2];
  padded[m - n / 2] = 0.5 * c[n / 2];
  const auto values = fft::backward(padded);
  table_.resize(m);
  std::transform(values.begin(), values.end(), table_.begin(), from_cplx<Scalar>);
  // Grid nodes reproduce the samples exactly.
  for (std::size_t k = 0; k < n; ++k) table_[k * kOversample] = f[k];
}

template <class Scalar>
Scalar Interpolant<Scalar>::operator()(double t) const {
  const auto m = static_cast<long>(table_.size());
  double x = t / kTwoPi * static_cast<double>(m);
  // Grid points may land an ulp off their node.
  if (const double r = std::round(x); std::abs(x - r) <= 8 * std::numeric_limits<double>::epsilon() * std::abs(r))
    x = r;
  const double cell = std::floor(x);
  const double u = x - cell;
  long j = static_cast<long>(cell) % m;
  if (j < 0) j += m;
  if (u == 0.0) return table_[static_cast<std::size_t>(j)];

  const auto& den = denominators();
  std::array<double, kStencil> diff{};
  double full = 1.0;
  for (int i = 0; i < kStencil; ++i) {
    diff[i] = u - static_cast<double>(i - kStencilLeft);
    full *= diff[i];
  }
  Scalar sum{};
  for (int i = 0; i < kStencil; ++i) {
    long idx = (j + i - kStencilLeft) % m;
    if (idx < 0) idx += m;
    sum += table_[static_cast<std::size_t>(idx)] * (full / diff[i] * den.inv[i]);
  }
  return sum;
}

template <class Scalar>
std::vector<Scalar> Interpolant<Scalar>::operator()(std::span<const double> ts) const {
  std::vector<Scalar> out(ts.size());
  for (std::size_t i = 0; i < ts.size(); ++i) out[i] = (*this)(ts[i]);
  return out;
}

ComplexPeriodicFunction to_complex(const PeriodicFunction& f) {
  return ComplexPeriodicFunction(std::vector<cplx>(f.samples().begin(), f.samples().end()));
}

PeriodicFunction real_part(const ComplexPeriodicFunction& f) {
  std::vector<double> s(f.size());
  for (std::size_t k = 0; k < f.size(); ++k) s[k] = f[k].real();
  return PeriodicFunction(std::move(s));
}

std::string to_csv(const PeriodicFunction& f) {
  std::string out = "t,value\n";
  char line[96];
  for (std::size_t k = 0; k < f.size(); ++k) {
    std::snprintf(line, sizeof line, "%.17g,%.17g\n", grid_point(k, f.size()), f[k]);
    out += line;
  }
  return out;
}

template class BasicPeriodicFunction<double>;
template class BasicPeriodicFunction<std::complex<double>>;
template class Interpolant<double>;
template class Interpolant<std::complex<double>>;

}  // namespace cfrag
