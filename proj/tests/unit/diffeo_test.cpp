#include <doctest.h>

#include <cmath>
#include <numbers>

#include "cfrag/bump.hpp"
#include "cfrag/diffeo.hpp"
#include "cfrag/errors.hpp"
#include "cfrag/random.hpp"

using namespace cfrag;
using std::numbers::pi;

TEST_CASE("rotations compose and invert") {
  const auto r = compose(CircleDiffeo::rotation(0.3), CircleDiffeo::rotation(0.5));
  CHECK(distance(r, CircleDiffeo::rotation(0.8)) < 1e-10);
  CHECK(distance(inverse(CircleDiffeo::rotation(0.7)), CircleDiffeo::rotation(-0.7)) < 1e-10);
  CHECK(distance(inverse(CircleDiffeo::identity()), CircleDiffeo::identity()) == 0.0);
}

TEST_CASE("composition with the identity is exact on the grid") {
  auto rng = trial_rng(3, 0);
  const auto g = random_diffeo(rng, 0.05);
  const auto gi = compose(g, CircleDiffeo::identity());
  for (std::size_t k = 0; k < g.size(); ++k) CHECK(gi.periodic_part()[k] == g.periodic_part()[k]);
}

TEST_CASE("inverse solves gamma(s) = t") {
  const auto g = CircleDiffeo::from_fourier({{1, 0.0, 0.1}});
  const auto gi = inverse(g);
  CHECK(std::abs(gi(g(1.0)) - 1.0) < 1e-10);
  CHECK(distance(compose(g, gi), CircleDiffeo::identity()) < 1e-8);
  CHECK(distance(compose(gi, g), CircleDiffeo::identity()) < 1e-8);
}

TEST_CASE("non-monotone maps are rejected") {
  CHECK_THROWS_AS(CircleDiffeo::from_fourier({{1, 0.0, 1.5}}), DerivativeError);
}

TEST_CASE("group axioms on random elements") {
  for (std::uint64_t i = 0; i < 10; ++i) {
    auto rng = trial_rng(5, i);
    const auto g1 = random_diffeo(rng, 0.01), g2 = random_diffeo(rng, 0.01), g3 = random_diffeo(rng, 0.01);
    CHECK(distance(compose(compose(g1, g2), g3), compose(g1, compose(g2, g3))) < 1e-8);
    CHECK(distance(compose(g1, inverse(g1)), CircleDiffeo::identity()) < 1e-8);
  }
}

TEST_CASE("supports") {
  CHECK(support(CircleDiffeo::identity()).is_empty());
  CHECK(support(CircleDiffeo::rotation(0.3)).is_full());
  const auto bump = make_bump(IntervalArc(0.5, 1.5), IntervalArc(0.8, 1.2), 4096);
  const CircleDiffeo g(bump.function() * 0.01);
  const auto s = support(g);
  REQUIRE(s.arc.has_value());
  const double cell = 2 * pi / 4096;
  CHECK(IntervalArc(0.5 - cell, 1.5 + cell).contains(*s.arc, 1e-12));

  // Support of a composition stays inside the hull of both supports.
  const auto b2 = make_bump(IntervalArc(1.0, 2.0), IntervalArc(1.3, 1.7), 4096);
  const CircleDiffeo h(b2.function() * 0.01);
  const auto sc = support(compose(g, h));
  REQUIRE(sc.arc.has_value());
  CHECK(IntervalArc(0.5 - 2 * cell, 2.0 + 2 * cell).contains(*sc.arc, 1e-12));
}

TEST_CASE("disjointly supported elements commute") {
  auto rng = trial_rng(9, 0);
  const auto a = random_diffeo_in(rng, IntervalArc(0.2, 2.0), 0.01, 2048);
  const auto b = random_diffeo_in(rng, IntervalArc(3.0, 5.5), 0.01, 2048);
  CHECK(distance(compose(a, b), compose(b, a)) < 1e-10);
}

TEST_CASE("bump functions") {
  const auto b = make_bump(IntervalArc(0, 1), IntervalArc(0.25, 0.75), 2048);
  CHECK(b(0.5) == 1.0);
  CHECK(b(-0.1) == 0.0);
  CHECK(b(0.25) == 1.0);
  CHECK(std::abs(b.derivative(0.25)) < 1e-8);
  for (double x : {0.05, 0.1, 0.2, 0.24}) CHECK(std::abs(b(x) - b(1 - x)) < 1e-12);
  for (std::size_t k = 0; k < b.size(); ++k) {
    CHECK(b.function()[k] >= 0.0);
    CHECK(b.function()[k] <= 1.0);
  }
  CHECK_THROWS_AS(make_bump(IntervalArc(0, 1), IntervalArc(0.0, 0.5), 2048), GeometryError);
}

TEST_CASE("smooth step matches the sigma ratio") {
  auto sigma = [](double x) { return x > 0 ? std::exp(-1 / x) : 0.0; };
  for (double x : {0.05, 0.3, 0.5, 0.71, 0.93})
    CHECK(std::abs(smooth_step(x) - sigma(x) / (sigma(x) + sigma(1 - x))) < 1e-14);
}

TEST_CASE("normalized bumps") {
  const auto b = make_normalized_bump(IntervalArc(0, 1), 0.5, 4096);
  CHECK(std::abs(b.integral() - 0.5) < 1e-10);
  CHECK(b.max_value() <= 1.0);
  const auto wide = make_normalized_bump(IntervalArc(0, 1), 0.8, 4096);
  CHECK(std::abs(wide.integral() - 0.8) < 1e-10);
  CHECK(wide.max_value() <= 1.0);
  CHECK_THROWS_AS(make_normalized_bump(IntervalArc(0, 1), 0.999, 4096), MassError);
  CHECK_THROWS_AS(make_normalized_bump(IntervalArc(0, 1), 1.5, 4096), MassError);
}

TEST_CASE("under-resolved cutoffs are reported") {
  CHECK_THROWS_AS(make_bump(IntervalArc(0, 0.5), IntervalArc(0.2, 0.3), 64), AliasingError);
}
