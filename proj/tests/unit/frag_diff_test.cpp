#include <doctest.h>

#include <cmath>
#include <functional>

#include "cfrag/errors.hpp"
#include "cfrag/frag_diff.hpp"
#include "cfrag/random.hpp"

using namespace cfrag;

namespace {

constexpr std::size_t kGrid = 4096;  // resolves the default cover's cutoffs

// Composite Simpson rule with `m` (even) subintervals.
double simpson(const std::function<double(double)>& f, double a, double b, int m = 1000000) {
  const double h = (b - a) / m;
  double s = f(a) + f(b);
  for (int i = 1; i < m; ++i) s += (i % 2 ? 4.0 : 2.0) * f(a + i * h);
  return s * h / 3.0;
}

double max_deviation_on(const CircleDiffeo& g, const IntervalArc& arc) {
  double worst = 0;
  for (std::size_t k = 0; k < g.size(); ++k)
    if (arc.contains(grid_point(k, g.size()))) worst = std::max(worst, std::abs(g.periodic_part()[k]));
  return worst;
}

const DiffFragmenter& default_fragmenter() {
  static const DiffFragmenter f(CoverConfig::default_cover(), kGrid);
  return f;
}

}  // namespace

TEST_CASE("alpha and beta vanish on the identity and away from I1") {
  const auto& c1 = default_fragmenter().cutoffs(1);
  const auto id = CircleDiffeo::identity(kGrid);
  CHECK(alpha(id, c1) == 0.0);
  CHECK(beta(id, c1) == 0.0);
  // gamma = id on [0, b1].
  auto rng = trial_rng(1, 0);
  const auto g = random_diffeo_in(rng, IntervalArc(c1.b + 0.1, kTwoPi - 0.1), 0.01, kGrid);
  CHECK(std::abs(alpha(g, c1)) < 1e-12);
  CHECK(std::abs(beta(g, c1)) < 1e-12);
}

TEST_CASE("alpha and beta match an independent quadrature") {
  const auto& c1 = default_fragmenter().cutoffs(1);
  const auto g = CircleDiffeo::from_fourier({{1, 0.0, 0.005}}, kGrid);
  auto integrand = [&](double t) { return 0.005 * std::cos(t) * c1.centre(t); };
  const double alpha_oracle = 2.0 / (c1.ahat - c1.a) * (0.005 * std::sin(c1.ahat) - simpson(integrand, c1.a, c1.ahat));
  const double beta_oracle = 2.0 / (c1.b - c1.bhat) * (-0.005 * std::sin(c1.bhat) - simpson(integrand, c1.bhat, c1.b));
  CHECK(std::abs(alpha(g, c1) - alpha_oracle) < 1e-9);
  CHECK(std::abs(beta(g, c1) - beta_oracle) < 1e-9);
  CHECK(std::abs(beta_full_integral_form(g, c1, alpha(g, c1)) - beta(g, c1)) < 1e-9);
}

TEST_CASE("fragmenting the identity gives identities") {
  const auto id = CircleDiffeo::identity(kGrid);
  const auto r = default_fragmenter()(id);
  CHECK(distance(r.xi1, id) == 0.0);
  CHECK(distance(r.xi2, id) == 0.0);
  CHECK(distance(r.xi3, id) == 0.0);
  CHECK(r.reconstruction_error < 1e-12);
}

TEST_CASE("random elements fragment with localized factors") {
  const auto& frag = default_fragmenter();
  const auto& cover = frag.cover();
  const auto& c1 = frag.cutoffs(1);
  for (std::uint64_t i = 0; i < 10; ++i) {
    auto rng = trial_rng(21, i);
    const auto g = random_diffeo(rng, 0.01, kGrid);
    const auto r = frag(g);
    CHECK(r.reconstruction_error < 1e-7);
    CHECK(distance(compose(r.xi1, compose(r.xi2, r.xi3)), g) < 1e-7);
    CHECK(deviation_outside(r.xi1, cover.I(1)) < 1e-9);
    CHECK(deviation_outside(r.xi2, cover.I(2)) < 1e-9);
    CHECK(deviation_outside(r.xi3, cover.I(3)) < 1e-9);
    CHECK(std::abs(r.alpha1) < alpha_bound(0.01, c1));
    CHECK(std::abs(r.beta1) < beta_bound(0.01, c1));
    CHECK(r.min_derivative1 > 0);
    // gamma1 = gamma on the plateau, alpha2 of gamma1^-1 gamma is zero,
    // and the third factor is the identity on Ihat1 and Ihat2.
    const auto g1 = localize(g, c1).factor;
    CHECK(max_deviation_on(CircleDiffeo(g1.periodic_part() - g.periodic_part()), cover.Ihat(1)) < 1e-9);
    CHECK(std::abs(r.alpha2) < 1e-9);
    CHECK(max_deviation_on(r.xi3, cover.Ihat(1)) < 1e-9);
    CHECK(max_deviation_on(r.xi3, cover.Ihat(2)) < 1e-9);
  }
}

TEST_CASE("support refinements") {
  const auto& frag = default_fragmenter();
  const auto& cover = frag.cover();
  const auto i12 = connected_intersection(cover.I(1), cover.I(2));
  const auto i13 = connected_intersection(cover.I(1), cover.I(3));
  const IntervalArc away(cover.I(1).b(), cover.I(1).lift(cover.I(2).a()) + kTwoPi);
  const IntervalArc a2b1(cover.I(1).lift(cover.I(2).a()), cover.I(1).b());
  for (std::uint64_t i = 0; i < 5; ++i) {
    auto rng = trial_rng(22, i);
    const auto in1 = frag(random_diffeo_in(rng, cover.I(1), 0.01, kGrid));
    CHECK(deviation_outside(in1.xi2, i12) < 1e-9);
    CHECK(deviation_outside(in1.xi3, i13) < 1e-9);
    const auto out = frag(random_diffeo_in(rng, away, 0.01, kGrid));
    CHECK(max_deviation_on(out.xi1, a2b1) < 1e-9);
  }
}

TEST_CASE("elements outside the neighbourhood are rejected") {
  const auto big = CircleDiffeo::from_fourier({{1, 0.0, 0.05}}, kGrid);
  CHECK(EpsilonNeighbourhood::distance(big) == doctest::Approx(0.05).epsilon(1e-9));
  CHECK_FALSE(EpsilonNeighbourhood{0.01}.contains(big));
  CHECK_THROWS_AS(default_fragmenter()(big), NeighbourhoodError);
  CHECK_THROWS_AS(fragment(CircleDiffeo::identity(kGrid), CoverConfig::default_cover(), {0.5, 1e-9}),
                  NeighbourhoodError);
}

TEST_CASE("two-interval refactoring") {
  const auto& cover = default_fragmenter().cover();
  const auto id = CircleDiffeo::identity(kGrid);
  const auto [l0, r0] = fragment_pair(id, cover.I(1), cover.I(2));
  CHECK(distance(l0, id) == 0.0);
  CHECK(distance(r0, id) == 0.0);

  const auto i12 = connected_intersection(cover.I(1), cover.I(2));
  const IntervalArc union_arc(cover.Ihat(1).a(), cover.Ihat(2).b());
  for (std::uint64_t i = 0; i < 5; ++i) {
    auto rng = trial_rng(23, i);
    const auto g = random_diffeo_in(rng, union_arc, 0.01, kGrid);
    const auto [l, r] = fragment_pair(g, cover.I(1), cover.I(2));
    CHECK(distance(compose(l, r), g) < 1e-7);
    CHECK(deviation_outside(l, cover.I(1)) < 1e-9);
    CHECK(deviation_outside(r, cover.I(2)) < 1e-9);

    const auto only_left = random_diffeo_in(rng, cover.Ihat(1), 0.01, kGrid);
    const auto [ll, rr] = fragment_pair(only_left, cover.I(1), cover.I(2));
    CHECK(distance(compose(ll, rr), only_left) < 1e-7);
    CHECK(deviation_outside(rr, i12) < 1e-9);
  }
  auto rng = trial_rng(24, 0);
  const auto stray = random_diffeo_in(rng, IntervalArc(5.0, 6.0), 0.01, kGrid);
  CHECK_THROWS_AS(fragment_pair(stray, cover.I(1), cover.I(2)), GeometryError);
}

TEST_CASE("fragments depend continuously on the element") {
  const auto& frag = default_fragmenter();
  auto rng = trial_rng(25, 0);
  const auto g = random_diffeo(rng, 0.005, kGrid);
  const auto base = frag(g);
  double previous = 1.0;
  for (double delta : {1e-4, 1e-5, 1e-6}) {
    const CircleDiffeo near(g.periodic_part() +
                            PeriodicFunction::sample([&](double t) { return delta * std::sin(2 * t); }, kGrid));
    const auto r = frag(near);
    const double change = std::max({distance(r.xi1, base.xi1), distance(r.xi2, base.xi2), distance(r.xi3, base.xi3)});
    CHECK(change < previous);
    previous = change;
  }
  CHECK(previous < 1e-4);
}
