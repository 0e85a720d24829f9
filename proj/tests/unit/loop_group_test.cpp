#include <doctest.h>

#include <cmath>

#include "cfrag/errors.hpp"
#include "cfrag/loop_group.hpp"
#include "cfrag/random.hpp"

using namespace cfrag;
using cplx = std::complex<double>;

namespace {

constexpr std::size_t kGrid = 2048;

Matrix diag(cplx a, cplx b) {
  Matrix m = Matrix::Zero(2, 2);
  m(0, 0) = a;
  m(1, 1) = b;
  return m;
}

}  // namespace

TEST_CASE("closed-form SU(2) exponential") {
  const auto& basis = su::su2_basis();
  for (double theta : {0.0, 0.3, 1.2, 2.9}) {
    const Matrix x = basis[1];  // X^2 = -I
    const Matrix expected = std::cos(theta) * Matrix::Identity(2, 2) + std::sin(theta) * x;
    CHECK(su::operator_norm(su::exp(theta * x) - expected) < 1e-12);
  }
  const Matrix y = 0.2 * basis[0] - 0.4 * basis[1] + 0.1 * basis[2];
  CHECK(su::group_residual(su::exp(y)) < 1e-14);
  CHECK(su::operator_norm(su::log(su::exp(y)) - y) < 1e-12);
}

TEST_CASE("general SU(3) exponential and logarithm") {
  Matrix x = Matrix::Zero(3, 3);
  x(0, 1) = cplx(0.1, 0.2);
  x(1, 0) = cplx(-0.1, 0.2);
  x(0, 0) = cplx(0, 0.3);
  x(2, 2) = cplx(0, -0.3);
  CHECK(su::algebra_residual(x) < 1e-15);
  const Matrix u = su::exp(x);
  CHECK(su::group_residual(u) < 1e-12);
  CHECK(su::operator_norm(su::log(u) - x) < 1e-12);
}

TEST_CASE("principal logarithm branch") {
  CHECK_THROWS_AS(su::log(diag(-1, -1)), BranchError);
  const LoopElement flip(std::vector<Matrix>(16, diag(-1, -1)));
  CHECK_THROWS_AS(log_loop(flip), BranchError);
}

TEST_CASE("Killing form normalization") {
  const Matrix h = diag(1, -1);
  CHECK(su::killing_form(h, h) == cplx(2, 0));
  Matrix h3 = Matrix::Zero(3, 3);
  h3(0, 0) = 1;
  h3(1, 1) = -1;
  CHECK(su::killing_form(h3, h3) == cplx(2, 0));
  auto rng = trial_rng(31, 0);
  const auto x = random_loop_algebra(rng, 1.0, 16)[0], y = random_loop_algebra(rng, 1.0, 16)[0],
             z = random_loop_algebra(rng, 1.0, 16)[0];
  CHECK(std::abs(su::killing_form(x, y) - su::killing_form(y, x)) < 1e-15);
  CHECK(std::abs(su::killing_form(2.0 * x + z, y) - 2.0 * su::killing_form(x, y) - su::killing_form(z, y)) < 1e-14);
}

TEST_CASE("pointwise exp and log on loops") {
  const auto zero = LoopAlgebraElement::zero(kGrid);
  CHECK(distance(exp_loop(zero), LoopElement::identity(kGrid)) == 0.0);
  CHECK(log_loop(LoopElement::identity(kGrid)).sup_norm() == 0.0);
  for (std::uint64_t i = 0; i < 5; ++i) {
    auto rng = trial_rng(32, i);
    const auto xi = random_loop_algebra(rng, 0.9, kGrid);
    CHECK(distance(log_loop(exp_loop(xi)), xi) < 1e-9);
  }
}

TEST_CASE("loop multiplication") {
  auto rng = trial_rng(33, 0);
  const auto g = exp_loop(random_loop_algebra(rng, 0.5, kGrid));
  CHECK(distance(multiply(g, LoopElement::identity(kGrid)), g) == 0.0);
  CHECK(distance(multiply(g, inverse(g)), LoopElement::identity(kGrid)) < 1e-10);
  const auto a = exp_loop(random_loop_algebra_in(rng, IntervalArc(0.3, 2.0), 1.0, kGrid));
  const auto b = exp_loop(random_loop_algebra_in(rng, IntervalArc(3.0, 5.0), 1.0, kGrid));
  CHECK(distance(multiply(a, b), multiply(b, a)) < 1e-10);
}

TEST_CASE("loop algebra cocycle") {
  const auto& basis = su::su2_basis();
  const auto c = PeriodicFunction::sample([](double t) { return std::cos(t); }, kGrid);
  const auto s = PeriodicFunction::sample([](double t) { return std::sin(t); }, kGrid);
  const auto x = LoopAlgebraElement::constant(basis[0], kGrid);
  // <X, X> / 2 with <X, X> = tr(X^2) = -2.
  CHECK(std::abs(omega(x * c, x * s) - su::killing_form(basis[0], basis[0]).real() / 2) < 1e-10);
  auto rng = trial_rng(34, 0);
  const auto xi = random_loop_algebra(rng, 1.0, kGrid);
  CHECK(std::abs(omega(xi, x)) < 1e-12);
  const auto a = random_loop_algebra_in(rng, IntervalArc(0.3, 2.0), 1.0, kGrid);
  const auto b = random_loop_algebra_in(rng, IntervalArc(3.0, 5.0), 1.0, kGrid);
  CHECK(std::abs(omega(a, b)) < 1e-10);
  const auto eta = random_loop_algebra(rng, 1.0, kGrid), zeta = random_loop_algebra(rng, 1.0, kGrid);
  CHECK(std::abs(omega(xi, eta) + omega(eta, xi)) < 1e-10);
  CHECK(std::abs(omega(bracket(xi, eta), zeta) + omega(bracket(eta, zeta), xi) + omega(bracket(zeta, xi), eta)) <
        1e-9);
  const auto f = random_diffeo(rng, 0.05, kGrid);
  CHECK(std::abs(omega(compose(xi, f), compose(eta, f)) - omega(xi, eta)) < 1e-8);
}

TEST_CASE("loop fragmentation") {
  const auto cover = CoverConfig::default_cover();
  const LoopFragmenter frag(cover, kGrid);
  const auto id = LoopElement::identity(kGrid);
  const auto r0 = frag(id);
  CHECK(distance(r0.xi1, id) == 0.0);
  CHECK(distance(r0.xi2, id) == 0.0);
  CHECK(distance(r0.xi3, id) == 0.0);

  const auto i12 = connected_intersection(cover.I(1), cover.I(2));
  const auto i13 = connected_intersection(cover.I(1), cover.I(3));
  for (std::uint64_t i = 0; i < 5; ++i) {
    auto rng = trial_rng(35, i);
    const auto g = exp_loop(random_loop_algebra(rng, 0.05, kGrid));
    const auto r = frag(g);
    CHECK(distance(multiply(r.xi1, multiply(r.xi2, r.xi3)), g) < 1e-9);
    CHECK(deviation_outside(r.xi1, cover.I(1)) < 1e-9);
    CHECK(deviation_outside(r.xi2, cover.I(2)) < 1e-9);
    CHECK(deviation_outside(r.xi3, cover.I(3)) < 1e-9);
    const auto s = frag.sequential(g);
    CHECK(distance(s.xi1, r.xi1) < 1e-9);
    CHECK(distance(s.xi2, r.xi2) < 1e-9);
    CHECK(distance(s.xi3, r.xi3) < 1e-9);

    const auto in1 = frag(exp_loop(random_loop_algebra_in(rng, cover.I(1), 0.05, kGrid)));
    CHECK(deviation_outside(in1.xi2, i12) < 1e-9);
    CHECK(deviation_outside(in1.xi3, i13) < 1e-9);
  }
}

TEST_CASE("loop csv has one column pair per entry") {
  const auto csv = to_csv(LoopElement::identity(16));
  CHECK(csv.rfind("t,re00,im00,re01,im01,re10,im10,re11,im11\n", 0) == 0);
}
