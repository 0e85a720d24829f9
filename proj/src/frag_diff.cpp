#include "cfrag/frag_diff.hpp"

#include <algorithm>
#include <cmath>

#include "cfrag/errors.hpp"

namespace cfrag {
namespace {

// (gamma' - 1) D_c on the grid.
PeriodicFunction weighted_slope(const CircleDiffeo& gamma, const IntervalCutoffs& c) {
  return gamma.periodic_part().derivative(1) * c.centre.function();
}

void check_grid(const CircleDiffeo& gamma, const IntervalCutoffs& c) {
  if (gamma.size() != c.size())
    throw std::invalid_argument("diffeomorphism and cutoffs live on different grids (" +
                                std::to_string(gamma.size()) + " vs " + std::to_string(c.size()) + ")");
}

}  // namespace

double EpsilonNeighbourhood::distance(const CircleDiffeo& gamma) {
  const auto& p = gamma.periodic_part();
  return std::max(p.sup_norm(), p.derivative(1).sup_norm());
}

IntervalCutoffs IntervalCutoffs::build(const IntervalArc& interval, const IntervalArc& inner, std::size_t n,
                                       double tail_tolerance) {
  if (!interval.contains(inner))
    throw GeometryError("inner interval " + inner.to_string() + " is not inside " + interval.to_string());
  const double a = interval.a(), b = interval.b();
  const double ahat = interval.lift(inner.a());
  const double bhat = ahat + inner.length();
  if (!(a < ahat && bhat < b))
    throw GeometryError("inner interval " + inner.to_string() + " must be strictly inside " + interval.to_string());
  auto centre = make_bump_raw(interval, ahat, bhat, 1.0, n, tail_tolerance);
  auto left = make_normalized_bump(IntervalArc(a, ahat), 0.5 * (ahat - a), n, tail_tolerance);
  auto right = make_normalized_bump(IntervalArc(bhat, b), 0.5 * (b - bhat), n, tail_tolerance);
  return IntervalCutoffs{interval, a, ahat, bhat, b, std::move(centre), std::move(left), std::move(right)};
}

double IntervalCutoffs::epsilon_bound() const {
  return 1.0 / (1.0 + alpha_bound(1.0, *this) * left.max_value() + beta_bound(1.0, *this) * right.max_value());
}

double alpha(const CircleDiffeo& gamma, const IntervalCutoffs& c) {
  check_grid(gamma, c);
  const double boundary = gamma.periodic_part()(c.ahat);
  return 2.0 / (c.ahat - c.a) * (boundary - weighted_slope(gamma, c).integrate(c.a, c.ahat));
}

double beta(const CircleDiffeo& gamma, const IntervalCutoffs& c) {
  check_grid(gamma, c);
  const double boundary = -gamma.periodic_part()(c.bhat);
  return 2.0 / (c.b - c.bhat) * (boundary - weighted_slope(gamma, c).integrate(c.bhat, c.b));
}

double beta_full_integral_form(const CircleDiffeo& gamma, const IntervalCutoffs& c, double alpha_value) {
  check_grid(gamma, c);
  const double total = weighted_slope(gamma, c).integral() + alpha_value * c.left.integral();
  return -2.0 / (c.b - c.bhat) * total;
}

double alpha_bound(double epsilon, const IntervalCutoffs& c) {
  return 2.0 * epsilon * (1.0 + c.ahat) / (c.ahat - c.a);
}

double beta_bound(double epsilon, const IntervalCutoffs& c) {
  return 2.0 * epsilon * (1.0 + c.b - c.bhat) / (c.b - c.bhat);
}

Localization localize(const CircleDiffeo& gamma, const IntervalCutoffs& c) {
  const double al = alpha(gamma, c);
  const double be = beta(gamma, c);
  const auto g = weighted_slope(gamma, c) + al * c.left.function() + be * c.right.function();

  double min_derivative = INFINITY;
  for (double v : g.samples()) min_derivative = std::min(min_derivative, 1.0 + v);
  if (!(min_derivative > 0.0))
    throw DerivativeError("localized factor on " + c.outer.to_string() + " is not increasing (min derivative " +
                          std::to_string(min_derivative) + ")");

  const auto anti = g.periodic_antiderivative();
  const double at_a = anti(c.a);
  std::vector<double> q(anti.size());
  for (std::size_t k = 0; k < q.size(); ++k) q[k] = anti[k] - at_a;
  return Localization{CircleDiffeo(PeriodicFunction(std::move(q))), al, be, g.integral(), min_derivative};
}

DiffFragmenter::DiffFragmenter(const CoverConfig& cover, std::size_t n, FragmentOptions options)
    : cover_(cover),
      options_(options),
      c1_(IntervalCutoffs::build(cover.I(1), cover.Ihat(1), n)),
      c2_(IntervalCutoffs::build(cover.I(2), cover.Ihat(2), n)) {
  cover_.validate();
}

FragmentationResult DiffFragmenter::operator()(const CircleDiffeo& gamma) const {
  const double dist = EpsilonNeighbourhood::distance(gamma);
  if (!(dist < options_.epsilon))
    throw NeighbourhoodError("diffeomorphism is not in U_eps: distance " + std::to_string(dist) + " >= eps " +
                             std::to_string(options_.epsilon));
  if (!(options_.epsilon < epsilon1()))
    throw NeighbourhoodError("eps " + std::to_string(options_.epsilon) + " is not below eps1 = " +
                             std::to_string(epsilon1()) + " for this cover");

  const double tol = options_.tail_tolerance;
  const auto l1 = localize(gamma, c1_);
  const auto rest = compose(inverse(l1.factor), gamma, tol);
  const auto l2 = localize(rest, c2_);
  auto xi3 = compose(inverse(l2.factor), rest, tol);

  const auto rebuilt = compose(l1.factor, compose(l2.factor, xi3, tol), tol);
  FragmentationResult r{l1.factor, l2.factor, std::move(xi3)};
  r.alpha1 = l1.alpha;
  r.beta1 = l1.beta;
  r.alpha2 = l2.alpha;
  r.beta2 = l2.beta;
  r.reconstruction_error = distance(rebuilt, gamma);
  r.periodicity_defect = std::max(std::abs(l1.periodicity_defect), std::abs(l2.periodicity_defect));
  r.min_derivative1 = l1.min_derivative;
  r.min_derivative2 = l2.min_derivative;
  return r;
}

FragmentationResult fragment(const CircleDiffeo& gamma, const CoverConfig& cover, FragmentOptions options) {
  return DiffFragmenter(cover, gamma.size(), options)(gamma);
}

std::pair<CircleDiffeo, CircleDiffeo> fragment_pair(const CircleDiffeo& gamma, const IntervalArc& left,
                                                    const IntervalArc& right, double tail_tolerance) {
  const std::size_t n = gamma.size();
  const auto id = CircleDiffeo::identity(n);
  const Support s = support(gamma);
  if (s.is_empty()) return {id, id};

  const bool left_in = right.contains(left.a());
  const bool right_in = right.contains(left.b());
  const auto parts = intersection(left, right);
  auto outside = [&] {
    return GeometryError("support " + s.to_string() + " is not inside " + left.to_string() + " u " +
                         right.to_string());
  };
  // Degenerate layouts: disjoint intervals or one containing the other.
  if (parts.empty() || (!left_in && !right_in) || (left_in && right_in && parts.size() == 1)) {
    if (s.inside(left) && !(left_in && right_in)) return {gamma, id};
    if (s.inside(right)) return {id, gamma};
    throw outside();
  }

  // Union of the two arcs when only one end of `left` lies in `right`.
  std::optional<IntervalArc> uni;
  if (!(left_in && right_in)) {
    if (right_in) {
      const double end = left.lift(right.a()) + right.length();
      if (end - left.a() < kTwoPi) uni = IntervalArc(left.a(), end);
    } else {
      const double begin = left.lift(right.b()) - right.length();
      if (left.b() - begin < kTwoPi) uni = IntervalArc(begin, left.b());
    }
    if (!uni || s.is_full() || !s.inside(*uni)) throw outside();
  }

  const double quarter = 0.25 * left.length();  // cap on a gap used for a transition
  double a_j, ahat_j, bhat_j, b_j;
  if (left_in) {
    const auto& o = *std::find_if(parts.begin(), parts.end(), [&](const IntervalArc& p) { return p.a() == left.a(); });
    a_j = o.a() + 0.05 * o.length();
    ahat_j = o.a() + 0.95 * o.length();
  } else {
    const double gap = std::min(uni->lift(s.arc->a()) - left.a(), quarter);
    if (!(gap > 0.0)) throw outside();
    a_j = left.a() + 0.05 * gap;
    ahat_j = left.a() + 0.95 * gap;
  }
  if (right_in) {
    const auto& o = *std::find_if(parts.begin(), parts.end(), [&](const IntervalArc& p) { return p.b() == left.b(); });
    bhat_j = o.a() + 0.05 * o.length();
    b_j = o.a() + 0.95 * o.length();
  } else {
    const double gap = std::min(left.b() - (uni->lift(s.arc->a()) + s.arc->length()), quarter);
    if (!(gap > 0.0)) throw outside();
    bhat_j = left.b() - 0.95 * gap;
    b_j = left.b() - 0.05 * gap;
  }
  if (!(ahat_j < bhat_j)) throw GeometryError("intervals leave no room for a plateau inside " + left.to_string());

  const auto cutoffs = IntervalCutoffs::build(IntervalArc(a_j, b_j), IntervalArc(ahat_j, bhat_j), n);
  auto gamma_left = localize(gamma, cutoffs).factor;
  auto gamma_right = compose(inverse(gamma_left), gamma, tail_tolerance);
  return {std::move(gamma_left), std::move(gamma_right)};
}

}  // namespace cfrag
