#include "cfrag/verify.hpp"

#include <atomic>
#include <cmath>
#include <exception>
#include <functional>
#include <limits>
#include <numbers>
#include <thread>

#include "cfrag/cocycle.hpp"
#include "cfrag/errors.hpp"
#include "cfrag/frag_diff.hpp"
#include "cfrag/loop_group.hpp"
#include "cfrag/random.hpp"
#include "cfrag/verma.hpp"

namespace cfrag {
namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

struct CheckSpec {
  const char* name;
  double tolerance;  // NaN marks an informational maximum
};

bool is_note(const CheckSpec& c) { return std::isnan(c.tolerance); }

using Trial = std::function<std::vector<double>(std::mt19937_64&, std::size_t)>;

// Runs trials on `threads` workers and reduces each residual by max in
// index order. An AliasingError in any trial is rethrown (lowest index first);
// other errors turn the trial's residuals into infinity.
void run_trials(RunReport& report, const std::vector<CheckSpec>& specs, std::size_t trials, unsigned threads,
                std::uint64_t stream, const Trial& trial) {
  std::vector<std::vector<double>> results(trials);
  std::vector<std::string> errors(trials);
  std::vector<std::exception_ptr> aliasing(trials);
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i = next++; i < trials; i = next++) {
      auto rng = trial_rng(stream, i);
      try {
        results[i] = trial(rng, i);
      } catch (const AliasingError&) {
        aliasing[i] = std::current_exception();
      } catch (const std::exception& e) {
        errors[i] = e.what();
      }
    }
  };
  const unsigned workers = std::max(1u, std::min<unsigned>(threads, static_cast<unsigned>(std::max<std::size_t>(trials, 1))));
  std::vector<std::thread> pool;
  for (unsigned w = 1; w < workers; ++w) pool.emplace_back(worker);
  worker();
  for (auto& t : pool) t.join();

  for (const auto& a : aliasing)
    if (a) std::rethrow_exception(a);

  std::vector<double> worst(specs.size(), trials ? -kInf : kInf);
  std::size_t failed_trials = 0;
  std::string first_error;
  for (std::size_t i = 0; i < trials; ++i) {
    if (!errors[i].empty()) {
      if (failed_trials++ == 0) first_error = "trial " + std::to_string(i) + ": " + errors[i];
      for (auto& w : worst) w = kInf;
      continue;
    }
    for (std::size_t c = 0; c < specs.size(); ++c) {
      const double r = std::isnan(results[i][c]) ? kInf : results[i][c];
      worst[c] = std::max(worst[c], r);
    }
  }
  for (std::size_t c = 0; c < specs.size(); ++c) {
    if (is_note(specs[c])) {
      report.note(specs[c].name, std::isfinite(worst[c]) ? nlohmann::ordered_json(worst[c]) : nlohmann::ordered_json(nullptr));
    } else {
      report.check_below(specs[c].name, worst[c], specs[c].tolerance);
    }
  }
  if (failed_trials) {
    report.note("failed_trials", failed_trials);
    report.note("first_error", first_error);
  }
}

std::uint64_t stream_for(std::uint64_t seed, std::uint64_t suite) { return seed * 16 + suite; }

double inside_deviation(const CircleDiffeo& g, const IntervalArc& arc) {
  const auto& p = g.periodic_part();
  double worst = 0.0;
  for (std::size_t k = 0; k < p.size(); ++k)
    if (arc.contains(grid_point(k, p.size()))) worst = std::max(worst, std::abs(p[k]));
  return worst;
}

IntervalArc overlap(const IntervalArc& x, const IntervalArc& y) { return connected_intersection(x, y); }

// I1 \ I2 and I2 \ I1: disjoint arcs inside the cover.
std::pair<IntervalArc, IntervalArc> disjoint_arcs(const CoverConfig& cover) {
  const auto& i1 = cover.I(1);
  const auto& i2 = cover.I(2);
  return {IntervalArc(i1.a(), i1.lift(i2.a())), IntervalArc(i2.lift(i1.b()), i2.b())};
}

RunReport diff_suite(const VerifyOptions& o, std::size_t n) {
  RunReport report("verify", "");
  const auto& cover = o.cover;
  const DiffFragmenter frag(cover, n, FragmentOptions{o.epsilon, kDefaultTailTolerance});
  const auto& c1 = frag.cutoffs(1);
  const auto id = CircleDiffeo::identity(n);

  {
    const auto r = frag(id);
    const double dev = std::max({distance(r.xi1, id), distance(r.xi2, id), distance(r.xi3, id)});
    report.check_below("identity_fragments", std::max(dev, r.reconstruction_error), 1e-12);
    report.note("epsilon1", frag.epsilon1());
  }

  const auto i12 = overlap(cover.I(1), cover.I(2));
  const auto i13 = overlap(cover.I(1), cover.I(3));
  const IntervalArc not_a2b1(cover.I(1).b(), cover.I(1).lift(cover.I(2).a()) + kTwoPi);
  const auto [only1, only2] = disjoint_arcs(cover);
  const IntervalArc pair_arc(cover.Ihat(1).a(), cover.I(1).lift(cover.Ihat(2).a()) + cover.Ihat(2).length());
  const double eps = o.epsilon;

  const std::vector<CheckSpec> specs{
      {"reconstruction_error", 1e-7},
      {"leakage_outside_I", 1e-9},
      {"alpha1_over_estalpha", 1.0},
      {"beta1_over_estbeta", 1.0},
      {"gamma1_derivative_deficit", 0.0},
      {"beta1_forms_agree", 1e-9},
      {"gamma1_periodicity", 1e-10},
      {"support_in_I1_refinement", 1e-9},
      {"xi1_identity_on_a2_b1", 1e-9},
      {"compose_associativity", 1e-8},
      {"inverse_identity", 1e-8},
      {"disjoint_commute", 1e-10},
      {"fragment_pair_reconstruction", 1e-7},
      {"fragment_pair_leakage", 1e-9},
      {"continuity_constant", std::numeric_limits<double>::quiet_NaN()},
  };
  run_trials(report, specs, o.trials, o.threads, stream_for(o.seed, 1), [&](std::mt19937_64& rng, std::size_t) {
    std::vector<double> r;
    const auto gamma = random_diffeo(rng, eps, n);
    const auto f = frag(gamma);
    r.push_back(f.reconstruction_error);
    r.push_back(std::max({deviation_outside(f.xi1, cover.I(1)), deviation_outside(f.xi2, cover.I(2)),
                          deviation_outside(f.xi3, cover.I(3))}));
    r.push_back(std::abs(f.alpha1) / alpha_bound(eps, c1));
    r.push_back(std::abs(f.beta1) / beta_bound(eps, c1));
    r.push_back(-f.min_derivative1);
    r.push_back(std::abs(f.beta1 - beta_full_integral_form(gamma, c1, f.alpha1)));
    r.push_back(std::abs(localize(gamma, c1).periodicity_defect));

    const auto in1 = frag(random_diffeo_in(rng, cover.I(1), eps, n));
    r.push_back(std::max({deviation_outside(in1.xi1, cover.I(1)), deviation_outside(in1.xi2, i12),
                          deviation_outside(in1.xi3, i13)}));

    const auto away = frag(random_diffeo_in(rng, not_a2b1, eps, n));
    r.push_back(inside_deviation(away.xi1, IntervalArc(cover.I(1).lift(cover.I(2).a()), cover.I(1).b())));

    const auto g1 = random_diffeo(rng, eps, n), g2 = random_diffeo(rng, eps, n), g3 = random_diffeo(rng, eps, n);
    r.push_back(distance(compose(compose(g1, g2), g3), compose(g1, compose(g2, g3))));
    r.push_back(std::max(distance(compose(g1, inverse(g1)), id), distance(compose(inverse(g1), g1), id)));

    const auto ga = random_diffeo_in(rng, only1, eps, n), gb = random_diffeo_in(rng, only2, eps, n);
    r.push_back(distance(compose(ga, gb), compose(gb, ga)));

    const auto gp = random_diffeo_in(rng, pair_arc, eps, n);
    const auto [gl, gr] = fragment_pair(gp, cover.I(1), cover.I(2));
    r.push_back(distance(compose(gl, gr), gp));
    r.push_back(std::max(deviation_outside(gl, cover.I(1)), deviation_outside(gr, cover.I(2))));

    // Continuity: perturb gamma by a small smooth amount.
    const auto bump = random_trig(rng, n, 4, true);
    const double size = std::max(bump.sup_norm(), bump.derivative(1).sup_norm());
    const double target = 0.01 * (eps - EpsilonNeighbourhood::distance(gamma));
    const CircleDiffeo near(gamma.periodic_part() + bump * (target / size));
    const double delta = distance(near, gamma) +
                         (near.derivative() - gamma.derivative()).sup_norm();
    const auto fn = frag(near);
    r.push_back(std::max({distance(fn.xi1, f.xi1), distance(fn.xi2, f.xi2), distance(fn.xi3, f.xi3)}) / delta);
    return r;
  });
  return report;
}

RunReport loop_suite(const VerifyOptions& o, std::size_t n) {
  RunReport report("verify", "");
  const auto& cover = o.cover;
  const LoopFragmenter frag(cover, n);
  const auto id = LoopElement::identity(n);

  {
    const auto r = frag(id);
    const double dev = std::max({distance(r.xi1, id), distance(r.xi2, id), distance(r.xi3, id)});
    report.check_below("identity_fragments", std::max(dev, r.reconstruction_error), 1e-12);
    Matrix h = Matrix::Zero(2, 2);
    h(0, 0) = 1;
    h(1, 1) = -1;
    report.check_below("killing_coroot_normalization", std::abs(su::killing_form(h, h) - 2.0), 1e-15);
    Matrix flip = Matrix::Zero(2, 2);  // rotation by pi: eigenvalues -1
    flip(0, 0) = -1;
    flip(1, 1) = -1;
    bool branch = false;
    try {
      (void)log_loop(LoopElement(std::vector<Matrix>(n, flip)));
    } catch (const BranchError&) {
      branch = true;
    }
    report.check_exact("log_branch_error_at_minus_identity", branch);
  }

  const auto i12 = overlap(cover.I(1), cover.I(2));
  const auto i13 = overlap(cover.I(1), cover.I(3));
  const auto [only1, only2] = disjoint_arcs(cover);
  const std::vector<CheckSpec> specs{
      {"reconstruction_error", 1e-9},
      {"leakage_outside_I", 1e-9},
      {"sequential_vs_closed_form", 1e-9},
      {"log_exp_round_trip", 1e-9},
      {"support_in_I1_refinement", 1e-9},
      {"omega_antisymmetry", 1e-10},
      {"omega_jacobi", 1e-9},
      {"omega_diff_invariance", 1e-8},
      {"omega_locality", 1e-10},
      {"disjoint_loops_commute", 1e-10},
  };
  run_trials(report, specs, o.trials, o.threads, stream_for(o.seed, 2), [&](std::mt19937_64& rng, std::size_t) {
    std::vector<double> r;
    const auto xi = random_loop_algebra(rng, 0.05, n);
    const auto gamma = exp_loop(xi);
    const auto f = frag(gamma);
    const auto s = frag.sequential(gamma);
    r.push_back(f.reconstruction_error);
    r.push_back(std::max({deviation_outside(f.xi1, cover.I(1)), deviation_outside(f.xi2, cover.I(2)),
                          deviation_outside(f.xi3, cover.I(3))}));
    r.push_back(std::max({distance(f.xi1, s.xi1), distance(f.xi2, s.xi2), distance(f.xi3, s.xi3)}));
    r.push_back(distance(log_loop(gamma), xi));

    const auto in1 = frag(exp_loop(random_loop_algebra_in(rng, cover.I(1), 0.05, n)));
    r.push_back(std::max({deviation_outside(in1.xi1, cover.I(1)), deviation_outside(in1.xi2, i12),
                          deviation_outside(in1.xi3, i13)}));

    const auto a = random_loop_algebra(rng, 1.0, n), b = random_loop_algebra(rng, 1.0, n),
               c = random_loop_algebra(rng, 1.0, n);
    r.push_back(std::abs(omega(a, b) + omega(b, a)));
    r.push_back(std::abs(omega(bracket(a, b), c) + omega(bracket(b, c), a) + omega(bracket(c, a), b)));
    const auto diffeo = random_diffeo(rng, 0.05, n);
    r.push_back(std::abs(omega(compose(a, diffeo), compose(b, diffeo)) - omega(a, b)));

    const auto la = random_loop_algebra_in(rng, only1, 1.0, n), lb = random_loop_algebra_in(rng, only2, 1.0, n);
    r.push_back(std::abs(omega(la, lb)));
    const auto ga = exp_loop(la), gb = exp_loop(lb);
    r.push_back(distance(multiply(ga, gb), multiply(gb, ga)));
    return r;
  });
  return report;
}

RunReport cocycle_suite(const VerifyOptions& o, std::size_t n) {
  RunReport report("verify", "");
  const auto id = CircleDiffeo::identity(n);
  const auto [only1, only2] = disjoint_arcs(o.cover);

  {
    const auto e2 = ComplexPeriodicFunction::sample([](double t) { return std::polar(1.0, 2 * t); }, n);
    const auto em2 = ComplexPeriodicFunction::sample([](double t) { return std::polar(1.0, -2 * t); }, n);
    const auto e1 = ComplexPeriodicFunction::sample([](double t) { return std::polar(1.0, t); }, n);
    const auto em1 = ComplexPeriodicFunction::sample([](double t) { return std::polar(1.0, -t); }, n);
    report.check_below("vect_cocycle_mode2", std::abs(vect_cocycle(e2, em2) + 6.0), 1e-9);
    report.check_below("vect_cocycle_mode1", std::abs(vect_cocycle(e1, em1)), 1e-10);
    const VectField s(PeriodicFunction::sample([](double t) { return std::sin(t); }, n));
    const VectField c(PeriodicFunction::sample([](double t) { return std::cos(t); }, n));
    report.check_below("vect_bracket_sin_cos",
                       (vect_bracket(s, c).function() - PeriodicFunction::constant(1.0, n)).sup_norm(), 1e-12);
    const auto f = PeriodicFunction::sample([](double t) { return std::cos(2 * t); }, n);
    const auto g = PeriodicFunction::sample([](double t) { return std::sin(2 * t); }, n);
    const double d = bott_mixed_derivative(f, g);
    report.note("bott_derivative_to_c_ratio_mode2", d / vect_cocycle(VectField(f), VectField(g)).imag());
  }

  const std::vector<CheckSpec> specs{
      {"bott_cocycle_identity", 1e-8},
      {"vir_associativity", 1e-8},
      {"vir_projection_is_compose", 1e-15},
      {"bott_rotations", 1e-12},
      {"bott_normalization", 1e-10},
      {"vect_cocycle_identity", 1e-8},
      {"vect_cocycle_locality", 1e-10},
      {"vect_cocycle_alternating", 1e-10},
      {"vect_cocycle_real_part", 1e-10},
      {"bott_mixed_derivative_closed_form", 1e-6},
  };
  run_trials(report, specs, o.trials, o.threads, stream_for(o.seed, 3), [&](std::mt19937_64& rng, std::size_t) {
    std::vector<double> r;
    const auto g1 = random_diffeo(rng, 0.05, n), g2 = random_diffeo(rng, 0.05, n), g3 = random_diffeo(rng, 0.05, n);
    const GroupCocycle b = [](const CircleDiffeo& x, const CircleDiffeo& y) { return bott(x, y); };
    r.push_back(cocycle_identity_residual(b, g1, g2, g3));

    const VirasoroElement x{uniform(rng, -1, 1), g1}, y{uniform(rng, -1, 1), g2}, z{uniform(rng, -1, 1), g3};
    const auto left = vir_multiply(vir_multiply(x, y), z);
    const auto right = vir_multiply(x, vir_multiply(y, z));
    r.push_back(std::abs(left.a - right.a));
    r.push_back(distance(vir_multiply(x, y).gamma, compose(g1, g2)));

    const double s = uniform(rng, -3, 3), t = uniform(rng, -3, 3);
    r.push_back(std::abs(bott(CircleDiffeo::rotation(s, n), CircleDiffeo::rotation(t, n))));
    r.push_back(std::max(std::abs(bott(id, g1)), std::abs(bott(g1, id))));

    const VectField f(random_trig(rng, n, 4, true)), g(random_trig(rng, n, 4, true)), h(random_trig(rng, n, 4, true));
    r.push_back(std::abs(vect_cocycle(vect_bracket(f, g), h) + vect_cocycle(vect_bracket(g, h), f) +
                         vect_cocycle(vect_bracket(h, f), g)));
    const VectField fa(random_function_in(rng, only1, n)), fb(random_function_in(rng, only2, n));
    r.push_back(std::abs(vect_cocycle(fa, fb)));
    r.push_back(std::abs(vect_cocycle(f, f)));
    r.push_back(std::abs(vect_cocycle(f, g).real()));

    const auto& pf = f.function();
    const auto& pg = g.function();
    const auto small = [](const PeriodicFunction& p) { return p * (1.0 / std::max(1.0, p.derivative(1).sup_norm())); };
    const auto sf = small(pf), sg = small(pg);
    r.push_back(std::abs(bott_mixed_derivative(sf, sg) - bott_mixed_derivative_exact(sf, sg)));
    return r;
  });
  return report;
}

RunReport verma_suite() {
  RunReport report("verify", "");
  const std::vector<std::pair<Rational, Rational>> params{
      {Rational(1, 2), Rational(0)}, {Rational(1, 2), Rational(1, 16)}, {Rational(1), Rational(1)},
      {Rational(26), Rational(3, 2)}};
  const int truncation = 8;
  std::size_t total = 0;
  for (const auto& [c, h] : params) {
    const VermaModule module(c, h, truncation);
    const std::string tag = "c=" + to_string(c) + ",h=" + to_string(h);
    std::size_t failures = 0;
    for (int m = -4; m <= 4; ++m)
      for (int k = -4; k <= 4; ++k)
        for (int l = 0; l <= truncation - std::abs(m) - std::abs(k); ++l)
          for (const auto& p : module.basis(l)) {
            ++total;
            if (!module.commutator_check(m, k, VermaState::basis(p))) ++failures;
          }
    report.check_exact("commutator_checks[" + tag + "]", failures == 0);

    bool symmetric = true;
    for (int l = 1; l <= 4; ++l) {
      const auto g = module.gram_matrix(l);
      for (std::size_t i = 0; i < g.size(); ++i)
        for (std::size_t j = 0; j < g.size(); ++j) symmetric = symmetric && g[i][j] == g[j][i];
    }
    report.check_exact("gram_symmetric[" + tag + "]", symmetric);
    report.check_exact("gram_level1_is_2h[" + tag + "]", module.gram_matrix(1)[0][0] == 2 * h);

    bool central = true;  // [L_2, L_-2] - 4 L_0 = c/2 on every state
    for (int l = 0; l <= truncation - 4; ++l)
      for (const auto& p : module.basis(l)) {
        const auto v = VermaState::basis(p);
        auto lhs = module.act(2, module.act(-2, v)) - module.act(-2, module.act(2, v));
        auto l0 = module.act(0, v);
        l0 *= Rational(4);
        lhs -= l0;
        central = central && lhs == Rational(c / 2) * v;
      }
    report.check_exact("central_element_acts_as_c[" + tag + "]", central);
  }
  report.check_exact("gram_level2_det[c=1,h=1]=18", determinant(VermaModule(1, 1).gram_matrix(2)) == 18);
  report.check_exact("gram_level2_det[c=1/2,h=1/16]=0",
                     determinant(VermaModule(Rational(1, 2), Rational(1, 16)).gram_matrix(2)) == 0);
  report.note("commutator_checks", total);
  return report;
}

std::string describe(const VerifyOptions& o) {
  std::string s = "suite=" + o.suite + " seed=" + std::to_string(o.seed) + " trials=" + std::to_string(o.trials) +
                  " grid=" + (o.grid ? std::to_string(*o.grid) : std::string("auto")) +
                  " epsilon=" + nlohmann::json(o.epsilon).dump() + " cover=" + o.cover.to_json().dump();
  return s;
}

}  // namespace

bool is_verify_suite(const std::string& suite) {
  return suite == "all" || suite == "diff" || suite == "loop" || suite == "cocycle" || suite == "verma";
}

RunReport run_verify(const VerifyOptions& options) {
  if (!is_verify_suite(options.suite)) throw ParseError("unknown verify suite '" + options.suite + "'");
  RunReport report("verify", describe(options));
  if (options.trials == 0) return report;

  const bool all = options.suite == "all";
  using Suite = std::function<RunReport(std::size_t)>;
  const std::vector<std::pair<std::string, Suite>> suites{
      {"diff", [&](std::size_t n) { return diff_suite(options, n); }},
      {"loop", [&](std::size_t n) { return loop_suite(options, n); }},
      {"cocycle", [&](std::size_t n) { return cocycle_suite(options, n); }},
  };
  for (const auto& [name, run] : suites) {
    if (!all && options.suite != name) continue;
    std::size_t n = options.grid.value_or(kDefaultGrid);
    for (;;) {
      try {
        const auto r = run(n);
        report.merge(r, name + ".");
        report.note(name + ".grid", n);
        break;
      } catch (const AliasingError&) {
        if (options.grid || n >= 16384) throw;
        n *= 2;
      }
    }
  }
  if (all || options.suite == "verma") report.merge(verma_suite(), "verma.");
  return report;
}

}  // namespace cfrag
