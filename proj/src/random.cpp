#include "cfrag/random.hpp"

#include <cmath>
#include <deque>
#include <tuple>

#include "cfrag/bump.hpp"

namespace cfrag {
namespace {

std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

// Cutoff on `arc` with transitions a quarter of its length.
const PeriodicFunction& arc_cutoff(const IntervalArc& arc, std::size_t n) {
  thread_local std::deque<std::tuple<double, double, std::size_t, PeriodicFunction>> cache;
  for (const auto& [a, b, m, f] : cache)
    if (a == arc.a() && b == arc.b() && m == n) return f;
  const double q = 0.25 * arc.length();
  auto bump = make_bump_raw(arc, arc.a() + q, arc.b() - q, 1.0, n, 1.0);
  cache.emplace_back(arc.a(), arc.b(), n, bump.function());
  return std::get<3>(cache.back());
}

PeriodicFunction scaled(PeriodicFunction p, double target) {
  const double size = std::max(p.sup_norm(), p.derivative(1).sup_norm());
  return size > 0 ? p * (target / size) : p;
}

}  // namespace

std::mt19937_64 trial_rng(std::uint64_t seed, std::uint64_t index) {
  return std::mt19937_64(splitmix64(splitmix64(seed) ^ splitmix64(index + 0x632be59bd9b4e019ULL)));
}

double uniform01(std::mt19937_64& rng) { return static_cast<double>(rng() >> 11) * 0x1.0p-53; }

double uniform(std::mt19937_64& rng, double lo, double hi) { return lo + (hi - lo) * uniform01(rng); }

PeriodicFunction random_trig(std::mt19937_64& rng, std::size_t n, int max_mode, bool with_constant) {
  std::vector<double> a(max_mode + 1), b(max_mode + 1);
  for (int k = 0; k <= max_mode; ++k) {
    a[k] = uniform(rng, -1, 1) / (1 + k);
    b[k] = uniform(rng, -1, 1) / (1 + k);
  }
  if (!with_constant) a[0] = 0;
  return PeriodicFunction::sample(
      [&](double t) {
        double v = a[0];
        for (int k = 1; k <= max_mode; ++k) v += a[k] * std::cos(k * t) + b[k] * std::sin(k * t);
        return v;
      },
      n);
}

CircleDiffeo random_diffeo(std::mt19937_64& rng, double epsilon, std::size_t n) {
  const double u = uniform(rng, 0.1, 0.95);
  return CircleDiffeo(scaled(random_trig(rng, n, 4, true), u * epsilon));
}

PeriodicFunction random_function_in(std::mt19937_64& rng, const IntervalArc& arc, std::size_t n) {
  auto p = random_trig(rng, n, 3, true) + PeriodicFunction::constant(uniform(rng, 0.5, 1.0), n);
  p *= arc_cutoff(arc, n);
  const double s = p.sup_norm();
  return s > 0 ? p * (1.0 / s) : p;
}

CircleDiffeo random_diffeo_in(std::mt19937_64& rng, const IntervalArc& arc, double epsilon, std::size_t n) {
  const double u = uniform(rng, 0.1, 0.95);
  return CircleDiffeo(scaled(random_function_in(rng, arc, n), u * epsilon));
}

LoopAlgebraElement random_loop_algebra(std::mt19937_64& rng, double bound, std::size_t n) {
  const double u = uniform(rng, 0.1, 0.95);
  auto fx = random_trig(rng, n, 3, true), fy = random_trig(rng, n, 3, true), fz = random_trig(rng, n, 3, true);
  auto xi = LoopAlgebraElement::su2(fx, fy, fz);
  return xi * (u * bound / xi.sup_norm());
}

LoopAlgebraElement random_loop_algebra_in(std::mt19937_64& rng, const IntervalArc& arc, double bound,
                                          std::size_t n) {
  const double u = uniform(rng, 0.1, 0.95);
  const auto& cut = arc_cutoff(arc, n);
  auto fx = random_trig(rng, n, 3, true) * cut, fy = random_trig(rng, n, 3, true) * cut,
       fz = random_trig(rng, n, 3, true) * cut;
  auto xi = LoopAlgebraElement::su2(fx, fy, fz);
  const double s = xi.sup_norm();
  return s > 0 ? xi * (u * bound / s) : xi;
}

}  // namespace cfrag
