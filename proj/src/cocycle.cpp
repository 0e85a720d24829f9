#include "cfrag/cocycle.hpp"

#include <cmath>
#include <numbers>

#include "cfrag/errors.hpp"

namespace cfrag {

VectField::VectField(PeriodicFunction f, double tail_tolerance) : f_(std::move(f)) {
  if (f_.tail() > tail_tolerance)
    throw AliasingError("vector field is under-resolved (tail " + std::to_string(f_.tail()) + ")");
}

VectField vect_bracket(const VectField& f, const VectField& g, double tail_tolerance) {
  const auto& ff = f.function();
  const auto& gg = g.function();
  return VectField(ff.derivative(1) * gg - ff * gg.derivative(1), tail_tolerance);
}

std::complex<double> vect_cocycle(const ComplexPeriodicFunction& f, const ComplexPeriodicFunction& g) {
  const auto integral = (f * (g.derivative(1) + g.derivative(3))).integral();
  return -integral / std::complex<double>(0.0, 2.0 * std::numbers::pi);
}

std::complex<double> vect_cocycle(const VectField& f, const VectField& g) {
  return vect_cocycle(to_complex(f.function()), to_complex(g.function()));
}

double bott(const CircleDiffeo& g1, const CircleDiffeo& g2, double tail_tolerance) {
  if (g1.size() != g2.size()) throw std::invalid_argument("bott needs diffeomorphisms on the same grid");
  const auto d1 = g1.derivative();
  const auto d2 = g2.derivative();
  const auto dd2 = g2.periodic_part().derivative(2);
  const auto outer = Interpolant<double>(d1)(g2.values());
  std::vector<double> integrand(g2.size());
  for (std::size_t k = 0; k < integrand.size(); ++k)
    integrand[k] = std::log(outer[k] * d2[k]) * dd2[k] / d2[k];
  const PeriodicFunction h(std::move(integrand));
  if (h.tail() > tail_tolerance)
    throw AliasingError("Bott integrand is under-resolved (tail " + std::to_string(h.tail()) + ")");
  return -h.integral() / (48.0 * std::numbers::pi);
}

VirasoroElement vir_multiply(const VirasoroElement& x, const VirasoroElement& y) {
  return VirasoroElement{x.a + y.a + bott(x.gamma, y.gamma), compose(x.gamma, y.gamma)};
}

double cocycle_identity_residual(const GroupCocycle& c, const CircleDiffeo& g1, const CircleDiffeo& g2,
                                 const CircleDiffeo& g3) {
  const auto g12 = compose(g1, g2);
  const auto g23 = compose(g2, g3);
  return std::abs(c(g1, g2) + c(g12, g3) - c(g1, g23) - c(g2, g3));
}

double bott_mixed_derivative(const PeriodicFunction& f, const PeriodicFunction& g, double h) {
  auto phi = [&](double s, double t) {
    const CircleDiffeo gs(f * s);
    const CircleDiffeo gt(g * t);
    return bott(gs, gt) - bott(gt, gs);
  };
  auto central = [&](double step) {
    return (phi(step, step) - phi(step, -step) - phi(-step, step) + phi(-step, -step)) / (4.0 * step * step);
  };
  return (4.0 * central(0.5 * h) - central(h)) / 3.0;
}

double bott_mixed_derivative_exact(const PeriodicFunction& f, const PeriodicFunction& g) {
  return -(f.derivative(1) * g.derivative(2)).integral() / (24.0 * std::numbers::pi);
}

}  // namespace cfrag
