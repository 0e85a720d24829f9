#include <doctest.h>

#include <algorithm>
#include <cmath>

#include "cfrag/errors.hpp"
#include "cfrag/periodic_function.hpp"
#include "cfrag/random.hpp"
#include "cfrag/specs.hpp"

using namespace cfrag;

TEST_CASE("diffeomorphism specs") {
  CHECK(distance(parse_diffeo("identity", 64), CircleDiffeo::identity(64)) == 0.0);
  CHECK(distance(parse_diffeo("rot:0.25", 64), CircleDiffeo::rotation(0.25, 64)) < 1e-15);
  const auto g = parse_diffeo("fourier:[(1,0,0.005), (2, 0.001, 0)]", 64);
  CHECK(std::abs(g(0.7) - (0.7 + 0.005 * std::sin(0.7) + 0.001 * std::cos(1.4))) < 1e-13);
  CHECK_THROWS_AS(parse_diffeo("fourier:[(1,0,2)]", 64), ParseError);
  CHECK_THROWS_AS(parse_diffeo("spiral", 64), ParseError);
  CHECK_THROWS_AS(parse_diffeo("rot:abc", 64), ParseError);
}

TEST_CASE("scalar and algebra specs") {
  const auto m = parse_scalar("mono:3", 64);
  CHECK(std::abs(m(0.2) - std::polar(1.0, 0.6)) < 1e-13);
  CHECK(std::abs(parse_scalar("const:2.5", 64)(1.0) - 2.5) < 1e-15);
  const auto b = parse_real_scalar("bump:(1,2)", 1024);
  CHECK(b(1.5) == doctest::Approx(1.0));
  CHECK(std::abs(b(4.0)) < 1e-9);
  double outside = 0;
  for (std::size_t k = 0; k < b.size(); ++k) {
    const double t = kTwoPi * static_cast<double>(k) / static_cast<double>(b.size());
    if (t > 2.01 || t < 0.99) outside = std::max(outside, std::abs(b.samples()[k]));
  }
  CHECK(outside == 0.0);
  const auto x = parse_algebra("x*const:0.1+z*fourier:[(1,0.2,0)]", 64);
  CHECK(x.sup_norm() > 0.0);
  CHECK_THROWS_AS(parse_algebra("w*const:1", 64), ParseError);
  CHECK_NOTHROW(parse_loop("exp:y*const:0.3", 64));
  CHECK_THROWS_AS(parse_loop("log:y", 64), ParseError);
}

TEST_CASE("seeded streams are reproducible") {
  auto a = trial_rng(42, 17), b = trial_rng(42, 17), c = trial_rng(42, 18);
  const double x = uniform01(a);
  CHECK(x == uniform01(b));
  CHECK(x != uniform01(c));
  CHECK(x >= 0.0);
  CHECK(x < 1.0);
}
