#include "cfrag/diffeo.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>

#include "cfrag/errors.hpp"

namespace cfrag {

CircleDiffeo::CircleDiffeo(PeriodicFunction periodic_part) : p_(std::move(periodic_part)) {
  const double m = min_derivative();
  if (!(m > 0.0))
    throw DerivativeError("map is not orientation preserving: min derivative " + std::to_string(m));
}

CircleDiffeo CircleDiffeo::identity(std::size_t n) { return CircleDiffeo(PeriodicFunction::zero(n)); }

CircleDiffeo CircleDiffeo::rotation(double s, std::size_t n) {
  return CircleDiffeo(PeriodicFunction::constant(s, n));
}

CircleDiffeo CircleDiffeo::from_fourier(const std::vector<FourierTerm>& terms, std::size_t n) {
  return CircleDiffeo(PeriodicFunction::sample(
      [&](double t) {
        double v = 0.0;
        for (const auto& term : terms) v += term.a * std::cos(term.k * t) + term.b * std::sin(term.k * t);
        return v;
      },
      n));
}

std::vector<double> CircleDiffeo::values() const {
  std::vector<double> v(size());
  for (std::size_t k = 0; k < v.size(); ++k) v[k] = grid_point(k, v.size()) + p_[k];
  return v;
}

PeriodicFunction CircleDiffeo::derivative() const {
  auto d = p_.derivative(1);
  return d + PeriodicFunction::constant(1.0, size());
}

double CircleDiffeo::min_derivative() const {
  const auto d = p_.derivative(1);
  double m = INFINITY;
  for (double v : d.samples()) m = std::min(m, 1.0 + v);
  return m;
}

CircleDiffeo compose(const CircleDiffeo& outer, const CircleDiffeo& inner, double tail_tolerance) {
  if (outer.size() != inner.size()) throw std::invalid_argument("compose needs diffeomorphisms on the same grid");
  const auto at = inner.values();
  const auto outer_p = Interpolant<double>(outer.periodic_part())(at);
  std::vector<double> p(at.size());
  for (std::size_t k = 0; k < p.size(); ++k) p[k] = inner.periodic_part()[k] + outer_p[k];
  PeriodicFunction result(std::move(p));
  if (result.tail() > tail_tolerance)
    throw AliasingError("composition is under-resolved on " + std::to_string(result.size()) + " points (tail " +
                        std::to_string(result.tail()) + ")");
  return CircleDiffeo(std::move(result));
}

CircleDiffeo inverse(const CircleDiffeo& gamma) {
  const std::size_t n = gamma.size();
  const auto& p = gamma.periodic_part();
  const Interpolant<double> pv(p);
  const Interpolant<double> dv(p.derivative(1));
  const auto [lo_it, hi_it] = std::minmax_element(p.samples().begin(), p.samples().end());
  // Interpolant overshoot between grid points is far below this pad.
  const double pad = 1e-6 + 1e-3 * (*hi_it - *lo_it);
  const double pmin = *lo_it - pad, pmax = *hi_it + pad;

  std::vector<double> q(n);
  for (std::size_t k = 0; k < n; ++k) {
    const double t = grid_point(k, n);
    double lo = t - pmax, hi = t - pmin;
    double s = t - p[k];
    double r = 0.0;
    bool done = false;
    for (int it = 0; it < 100; ++it) {
      r = s + pv(s) - t;
      if (std::abs(r) < 1e-13) {
        done = true;
        break;
      }
      (r > 0 ? hi : lo) = s;
      double next = s - r / (1.0 + dv(s));
      if (!(next > lo && next < hi)) next = 0.5 * (lo + hi);
      s = next;
    }
    if (!done) {
      r = s + pv(s) - t;
      if (!(std::abs(r) < 1e-12))
        throw ConvergenceError("inverse did not converge at t = " + std::to_string(t) + " (residual " +
                               std::to_string(r) + ")");
    }
    q[k] = s - t;
  }
  return CircleDiffeo(PeriodicFunction(std::move(q)));
}

Support support(const CircleDiffeo& gamma, double tol) {
  const auto& p = gamma.periodic_part();
  std::vector<double> dev(p.size());
  for (std::size_t k = 0; k < dev.size(); ++k) dev[k] = std::abs(p[k]);
  return support_from_deviation(dev, tol);
}

double distance(const CircleDiffeo& g1, const CircleDiffeo& g2) {
  return (g1.periodic_part() - g2.periodic_part()).sup_norm();
}

double deviation_outside(const CircleDiffeo& gamma, const IntervalArc& arc) {
  const auto& p = gamma.periodic_part();
  std::vector<double> dev(p.size());
  for (std::size_t k = 0; k < dev.size(); ++k) dev[k] = std::abs(p[k]);
  return max_deviation_outside(dev, arc);
}

std::string to_csv(const CircleDiffeo& gamma) {
  std::string out = "t,value\n";
  const auto v = gamma.values();
  char buf[64];
  for (std::size_t k = 0; k < v.size(); ++k) {
    std::snprintf(buf, sizeof buf, "%.17g,%.17g\n", grid_point(k, v.size()), v[k]);
    out += buf;
  }
  return out;
}

}  // namespace cfrag
