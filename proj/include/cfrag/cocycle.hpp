#pragma once

#include <complex>
#include <functional>

#include "cfrag/diffeo.hpp"
#include "cfrag/periodic_function.hpp"

namespace cfrag {

/// Smooth vector field f(t) d/dt on the circle.
class VectField {
 public:
  /// Throws AliasingError when f's tail exceeds `tail_tolerance`.
  explicit VectField(PeriodicFunction f, double tail_tolerance = kDefaultTailTolerance);

  const PeriodicFunction& function() const { return f_; }
  std::size_t size() const { return f_.size(); }

 private:
  PeriodicFunction f_;
};

/// [f, g] = f' g - f g'.
VectField vect_bracket(const VectField& f, const VectField& g, double tail_tolerance = kDefaultTailTolerance);

/// c(f, g) = -1/(2 pi i) int f (g' + g''') dt, also for complex f, g.
std::complex<double> vect_cocycle(const ComplexPeriodicFunction& f, const ComplexPeriodicFunction& g);
std::complex<double> vect_cocycle(const VectField& f, const VectField& g);

/// B(g1, g2) = -1/(48 pi) int log((g1 o g2)'(t)) g2''(t) / g2'(t) dt.
/// Throws AliasingError when the integrand is under-resolved.
double bott(const CircleDiffeo& g1, const CircleDiffeo& g2, double tail_tolerance = kDefaultTailTolerance);

struct VirasoroElement {
  double a;
  CircleDiffeo gamma;
};

/// (a1, g1)(a2, g2) = (a1 + a2 + B(g1, g2), g1 o g2).
VirasoroElement vir_multiply(const VirasoroElement& x, const VirasoroElement& y);

using GroupCocycle = std::function<double(const CircleDiffeo&, const CircleDiffeo&)>;

/// |c(g1, g2) + c(g1 g2, g3) - c(g1, g2 g3) - c(g2, g3)|.
double cocycle_identity_residual(const GroupCocycle& c, const CircleDiffeo& g1, const CircleDiffeo& g2,
                                 const CircleDiffeo& g3);

/// Mixed derivative at 0 of B(id + s f, id + t g) - B(id + t g, id + s f),
/// central differences with step h, one Richardson step.
double bott_mixed_derivative(const PeriodicFunction& f, const PeriodicFunction& g, double h = 1e-3);

/// -1/(24 pi) int f' g'', the value bott_mixed_derivative approximates.
double bott_mixed_derivative_exact(const PeriodicFunction& f, const PeriodicFunction& g);

}  // namespace cfrag
