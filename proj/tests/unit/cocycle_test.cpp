#include <doctest.h>

#include <cmath>

#include "cfrag/cocycle.hpp"
#include "cfrag/errors.hpp"
#include "cfrag/random.hpp"

using namespace cfrag;
using cplx = std::complex<double>;

namespace {

constexpr std::size_t kGrid = 2048;

ComplexPeriodicFunction mono(int m) {
  return ComplexPeriodicFunction::sample([m](double t) { return std::polar(1.0, m * t); }, kGrid);
}

PeriodicFunction real(double (*f)(double)) {
  return PeriodicFunction::sample([f](double t) { return f(t); }, kGrid);
}

}  // namespace

TEST_CASE("vector field bracket") {
  const VectField s(real([](double t) { return std::sin(t); }));
  const VectField c(real([](double t) { return std::cos(t); }));
  CHECK((vect_bracket(s, c).function() - PeriodicFunction::constant(1.0, kGrid)).sup_norm() < 1e-12);
  CHECK(vect_bracket(s, s).function().sup_norm() < 1e-14);
  const VectField one(PeriodicFunction::constant(1.0, kGrid));
  auto rng = trial_rng(41, 0);
  const VectField g(random_trig(rng, kGrid, 4, true));
  // f'g - fg' with f = 1 is -g'
  CHECK((vect_bracket(one, g).function() + g.function().derivative(1)).sup_norm() < 1e-12);
}

TEST_CASE("Lie algebra cocycle on monomials") {
  CHECK(std::abs(vect_cocycle(mono(2), mono(-2)) - cplx(-6, 0)) < 1e-9);
  CHECK(std::abs(vect_cocycle(mono(1), mono(-1))) < 1e-10);
  CHECK(std::abs(vect_cocycle(mono(3), mono(-2))) < 1e-10);
  // n(n^2 - 1) with n = -m: m = 3 gives -24.
  CHECK(std::abs(vect_cocycle(mono(3), mono(-3)) - cplx(-24, 0)) < 1e-9);
}

TEST_CASE("Lie algebra cocycle identities") {
  auto rng = trial_rng(42, 0);
  const VectField f(random_trig(rng, kGrid, 3, true)), g(random_trig(rng, kGrid, 3, true)),
      h(random_trig(rng, kGrid, 3, true));
  CHECK(std::abs(vect_cocycle(f, f)) < 1e-10);
  CHECK(std::abs(vect_cocycle(f, g) + vect_cocycle(g, f)) < 1e-10);
  CHECK(std::abs(vect_cocycle(f, g).real()) < 1e-10);
  const cplx jacobi =
      vect_cocycle(vect_bracket(f, g), h) + vect_cocycle(vect_bracket(g, h), f) + vect_cocycle(vect_bracket(h, f), g);
  CHECK(std::abs(jacobi) < 1e-8);
  const VectField a(random_function_in(rng, IntervalArc(0.3, 2.0), kGrid));
  const VectField b(random_function_in(rng, IntervalArc(3.0, 5.0), kGrid));
  CHECK(std::abs(vect_cocycle(a, b)) < 1e-10);
}

TEST_CASE("Bott cocycle special values") {
  const auto id = CircleDiffeo::identity(kGrid);
  CHECK(std::abs(bott(CircleDiffeo::rotation(0.4, kGrid), CircleDiffeo::rotation(1.1, kGrid))) < 1e-12);
  auto rng = trial_rng(43, 0);
  const auto g = random_diffeo(rng, 0.05, kGrid);
  CHECK(std::abs(bott(id, g)) < 1e-10);
  CHECK(std::abs(bott(g, id)) < 1e-12);
}

TEST_CASE("Bott cocycle identity") {
  const auto r1 = CircleDiffeo::rotation(0.2, kGrid), r2 = CircleDiffeo::rotation(-1.0, kGrid),
             r3 = CircleDiffeo::rotation(2.5, kGrid);
  CHECK(cocycle_identity_residual([](const auto& a, const auto& b) { return bott(a, b); }, r1, r2, r3) < 1e-12);
  for (std::uint64_t i = 0; i < 10; ++i) {
    auto rng = trial_rng(44, i);
    const auto g1 = random_diffeo(rng, 0.05, kGrid), g2 = random_diffeo(rng, 0.05, kGrid),
               g3 = random_diffeo(rng, 0.05, kGrid);
    CHECK(cocycle_identity_residual([](const auto& a, const auto& b) { return bott(a, b); }, g1, g2, g3) < 1e-8);
    CHECK(cocycle_identity_residual([](const auto& a, const auto& b) { return bott(a, b); }, g1,
                                    CircleDiffeo::identity(kGrid), g3) < 1e-10);
  }
}

TEST_CASE("Virasoro group law") {
  const auto id = CircleDiffeo::identity(kGrid);
  const auto e = vir_multiply({1.0, id}, {2.0, id});
  CHECK(e.a == 3.0);
  CHECK(distance(e.gamma, id) == 0.0);
  const auto r = vir_multiply({0.0, CircleDiffeo::rotation(0.3, kGrid)}, {0.0, CircleDiffeo::rotation(0.9, kGrid)});
  CHECK(std::abs(r.a) < 1e-12);
  CHECK(distance(r.gamma, CircleDiffeo::rotation(1.2, kGrid)) < 1e-10);
  auto rng = trial_rng(45, 0);
  const VirasoroElement x{0.1, random_diffeo(rng, 0.05, kGrid)}, y{-0.2, random_diffeo(rng, 0.05, kGrid)},
      z{0.3, random_diffeo(rng, 0.05, kGrid)};
  const auto left = vir_multiply(vir_multiply(x, y), z), right = vir_multiply(x, vir_multiply(y, z));
  CHECK(std::abs(left.a - right.a) < 1e-8);
  CHECK(distance(left.gamma, right.gamma) < 1e-8);
  CHECK(distance(vir_multiply(x, y).gamma, compose(x.gamma, y.gamma)) == 0.0);
}

TEST_CASE("antisymmetrized Bott derivative at the identity") {
  auto rng = trial_rng(46, 0);
  const auto f = random_trig(rng, kGrid, 3, false) * 0.3, g = random_trig(rng, kGrid, 3, false) * 0.3;
  const double d = bott_mixed_derivative(f, g);
  CHECK(std::abs(d + bott_mixed_derivative(g, f)) < 1e-5);
  CHECK(std::abs(d - bott_mixed_derivative_exact(f, g)) < 1e-6);
  // On the mode-2 pair the ratio to Im c is 1/9.
  const auto c2 = real([](double t) { return std::cos(2 * t); }), s2 = real([](double t) { return std::sin(2 * t); });
  const double ratio = bott_mixed_derivative_exact(c2, s2) / vect_cocycle(VectField(c2), VectField(s2)).imag();
  CHECK(ratio == doctest::Approx(1.0 / 9.0).epsilon(1e-12));
}

TEST_CASE("under-resolved vector fields are rejected") {
  const auto rough = PeriodicFunction::sample([](double t) { return t < 3 ? 1.0 : 0.0; }, 256);
  CHECK_THROWS_AS(VectField{rough}, AliasingError);
}
