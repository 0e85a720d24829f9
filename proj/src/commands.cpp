#include "cfrag/commands.hpp"

#include <CLI11.hpp>

#include <chrono>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <optional>
#include <ostream>
#include <sstream>

#include "cfrag/cocycle.hpp"
#include "cfrag/errors.hpp"
#include "cfrag/frag_diff.hpp"
#include "cfrag/loop_group.hpp"
#include "cfrag/report.hpp"
#include "cfrag/specs.hpp"
#include "cfrag/verify.hpp"
#include "cfrag/verma.hpp"

namespace cfrag {
namespace {

constexpr std::size_t kMaxAutoGrid = 16384;

struct Common {
  std::string config;
  std::optional<std::size_t> grid;
  std::string out_dir = ".";
  bool json = false;
};

void add_common(CLI::App* cmd, Common& c, bool with_out) {
  cmd->add_option("--config", c.config, "cover configuration JSON file");
  cmd->add_option("--grid", c.grid, "grid size (power of two >= 16); default: 1024, doubled while under-resolved");
  if (with_out) cmd->add_option("--out", c.out_dir, "directory for CSV output")->capture_default_str();
  cmd->add_flag("--json", c.json, "print the report as JSON");
}

CoverConfig load_cover(const std::string& path) {
  if (path.empty()) return CoverConfig::default_cover();
  std::ifstream in(path);
  if (!in) throw GeometryError("cannot read cover configuration '" + path + "'");
  std::stringstream buf;
  buf << in.rdbuf();
  return CoverConfig::parse(buf.str());
}

std::size_t checked_grid(std::size_t n) {
  if (!is_valid_grid_size(n)) throw ParseError("--grid must be a power of two >= 16, got " + std::to_string(n));
  return n;
}

// Runs `body` on the requested grid, or on 1024, 2048, ... while it raises AliasingError.
template <class Body>
auto with_grid(const std::optional<std::size_t>& grid, Body body) {
  std::size_t n = grid ? checked_grid(*grid) : kDefaultGrid;
  for (;;) {
    try {
      return body(n);
    } catch (const AliasingError&) {
      if (grid || n >= kMaxAutoGrid) throw;
      n *= 2;
    }
  }
}

void write_file(const std::filesystem::path& dir, const std::string& name, const std::string& text) {
  std::filesystem::create_directories(dir);
  std::ofstream out(dir / name);
  if (!out) throw std::runtime_error("cannot write " + (dir / name).string());
  out << text;
}

int emit(const RunReport& report, bool json, std::ostream& out) {
  if (json) {
    out << report.to_json().dump(2) << '\n';
  } else {
    out << report.to_text();
  }
  return report.pass() ? kExitOk : kExitCheckFailed;
}

std::string format_number(double v) {
  if (v == 0.0) v = 0.0;  // no "-0"
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

std::string format_complex(std::complex<double> z) {
  if (z.imag() == 0.0) return format_number(z.real());
  char buf[96];
  std::snprintf(buf, sizeof buf, "%.17g%+.17gi", z.real(), z.imag());
  return buf;
}

int fragment_diff(const Common& c, double epsilon, const std::string& spec, std::ostream& out) {
  const auto cover = load_cover(c.config);
  struct Run {
    std::size_t n;
    CircleDiffeo gamma;
    FragmentationResult result;
    double beta_full;
    double bound_alpha, bound_beta;
  };
  const Run run = with_grid(c.grid, [&](std::size_t n) {
    const DiffFragmenter frag(cover, n, FragmentOptions{epsilon, kDefaultTailTolerance});
    auto gamma = parse_diffeo(spec, n);
    auto r = frag(gamma);
    const auto& c1 = frag.cutoffs(1);
    const double full = beta_full_integral_form(gamma, c1, r.alpha1);
    return Run{n, std::move(gamma), std::move(r), full, alpha_bound(epsilon, c1), beta_bound(epsilon, c1)};
  });
  const auto& r = run.result;

  RunReport report("fragment-diff", "spec=" + spec + " epsilon=" + format_number(epsilon) +
                                        " grid=" + std::to_string(run.n) + " cover=" + cover.to_json().dump());
  report.check_below("reconstruction_error", r.reconstruction_error, 1e-7);
  report.check_below("leakage_xi1", deviation_outside(r.xi1, cover.I(1)), 1e-9);
  report.check_below("leakage_xi2", deviation_outside(r.xi2, cover.I(2)), 1e-9);
  report.check_below("leakage_xi3", deviation_outside(r.xi3, cover.I(3)), 1e-9);
  report.check_below("alpha1_over_estalpha", std::abs(r.alpha1) / run.bound_alpha, 1.0);
  report.check_below("beta1_over_estbeta", std::abs(r.beta1) / run.bound_beta, 1.0);
  report.check_below("beta1_forms_agree", std::abs(r.beta1 - run.beta_full), 1e-9);
  report.check_below("gamma1_derivative_deficit", -r.min_derivative1, 0.0);
  report.note("grid", run.n);
  report.note("alpha1", r.alpha1);
  report.note("beta1", r.beta1);
  report.note("alpha2", r.alpha2);
  report.note("beta2", r.beta2);
  report.note("support_gamma", support(run.gamma).to_string());
  report.note("support_xi1", support(r.xi1).to_string());
  report.note("support_xi2", support(r.xi2).to_string());
  report.note("support_xi3", support(r.xi3).to_string());

  const std::filesystem::path dir(c.out_dir);
  write_file(dir, "gamma.csv", to_csv(run.gamma));
  write_file(dir, "xi1.csv", to_csv(r.xi1));
  write_file(dir, "xi2.csv", to_csv(r.xi2));
  write_file(dir, "xi3.csv", to_csv(r.xi3));
  return emit(report, c.json, out);
}

int fragment_loop_cmd(const Common& c, const std::string& spec, std::ostream& out) {
  const auto cover = load_cover(c.config);
  struct Run {
    std::size_t n;
    LoopElement gamma;
    LoopFragmentation closed, sequential;
  };
  const Run run = with_grid(c.grid, [&](std::size_t n) {
    const LoopFragmenter frag(cover, n);
    auto gamma = parse_loop(spec, n);
    auto closed = frag(gamma);
    auto seq = frag.sequential(gamma);
    return Run{n, std::move(gamma), std::move(closed), std::move(seq)};
  });
  const auto& r = run.closed;

  RunReport report("fragment-loop",
                   "spec=" + spec + " grid=" + std::to_string(run.n) + " cover=" + cover.to_json().dump());
  report.check_below("reconstruction_error", r.reconstruction_error, 1e-9);
  report.check_below("leakage_xi1", deviation_outside(r.xi1, cover.I(1)), 1e-9);
  report.check_below("leakage_xi2", deviation_outside(r.xi2, cover.I(2)), 1e-9);
  report.check_below("leakage_xi3", deviation_outside(r.xi3, cover.I(3)), 1e-9);
  report.check_below("sequential_vs_closed_form",
                     std::max({distance(r.xi1, run.sequential.xi1), distance(r.xi2, run.sequential.xi2),
                               distance(r.xi3, run.sequential.xi3)}),
                     1e-9);
  report.note("grid", run.n);
  report.note("support_gamma", support(run.gamma).to_string());
  report.note("support_xi1", support(r.xi1).to_string());
  report.note("support_xi2", support(r.xi2).to_string());
  report.note("support_xi3", support(r.xi3).to_string());

  const std::filesystem::path dir(c.out_dir);
  write_file(dir, "gamma.csv", to_csv(run.gamma));
  write_file(dir, "xi1.csv", to_csv(r.xi1));
  write_file(dir, "xi2.csv", to_csv(r.xi2));
  write_file(dir, "xi3.csv", to_csv(r.xi3));
  return emit(report, c.json, out);
}

int cocycle_cmd(const Common& c, const std::string& kind, const std::string& lhs, const std::string& rhs,
                std::ostream& out) {
  std::complex<double> value;
  const std::size_t n = with_grid(c.grid, [&](std::size_t n) {
    if (kind == "bott") {
      value = bott(parse_diffeo(lhs, n), parse_diffeo(rhs, n));
    } else if (kind == "vect") {
      value = vect_cocycle(parse_scalar(lhs, n), parse_scalar(rhs, n));
    } else {
      value = omega(parse_algebra(lhs, n), parse_algebra(rhs, n));
    }
    return n;
  });
  if (c.json) {
    nlohmann::ordered_json j;
    j["command"] = "cocycle";
    j["kind"] = kind;
    j["operands"] = {lhs, rhs};
    j["grid"] = n;
    if (kind == "vect") {
      j["value"] = {{"re", value.real()}, {"im", value.imag()}};
    } else {
      j["value"] = value.real();
    }
    out << j.dump(2) << '\n';
  } else {
    out << (kind == "vect" ? format_complex(value) : format_number(value.real())) << '\n';
  }
  return kExitOk;
}

int verma_cmd(const std::string& c_text, const std::string& h_text, int level, int truncation, std::ostream& out) {
  const Rational c = parse_rational(c_text), h = parse_rational(h_text);
  if (level < 0) throw ParseError("--level must be non-negative");
  const VermaModule module(c, h, truncation);
  const auto basis = module.basis(level);
  const auto gram = module.gram_matrix(level);
  nlohmann::ordered_json j;
  j["c"] = to_string(c);
  j["h"] = to_string(h);
  j["level"] = level;
  j["basis"] = nlohmann::ordered_json::array();
  for (const auto& p : basis) j["basis"].push_back(p);
  j["gram"] = nlohmann::ordered_json::array();
  for (const auto& row : gram) {
    nlohmann::ordered_json r = nlohmann::ordered_json::array();
    for (const auto& x : row) r.push_back(to_string(x));
    j["gram"].push_back(r);
  }
  j["determinant"] = to_string(determinant(gram));
  out << j.dump(2) << '\n';
  return kExitOk;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Fragmentation of circle diffeomorphisms and loops, Virasoro cocycles and Verma modules", "cfrag"};
  app.require_subcommand(1);

  Common frag_common, loop_common, cocycle_common, verify_common;
  double epsilon = 0.01;
  std::string diffeo_spec = "identity", loop_spec = "identity";
  auto* fd = app.add_subcommand("fragment-diff", "fragment a diffeomorphism over the cover");
  add_common(fd, frag_common, true);
  fd->add_option("--epsilon", epsilon, "radius of the neighbourhood U_eps")->capture_default_str();
  fd->add_option("spec", diffeo_spec, "identity | rot:s | fourier:[(k,a,b),...]")->capture_default_str();

  auto* fl = app.add_subcommand("fragment-loop", "fragment an SU(2) loop over the cover");
  add_common(fl, loop_common, true);
  fl->add_option("spec", loop_spec, "identity | exp:x*<f>+y*<f>+z*<f>")->capture_default_str();

  std::string kind, lhs, rhs;
  auto* cc = app.add_subcommand("cocycle", "evaluate a cocycle");
  add_common(cc, cocycle_common, false);
  cc->add_option("kind", kind, "bott | vect | omega")->required()->check(CLI::IsMember({"bott", "vect", "omega"}));
  cc->add_option("lhs", lhs, "first operand")->required();
  cc->add_option("rhs", rhs, "second operand")->required();

  std::string c_text = "1/2", h_text = "0";
  int level = 2, truncation = 8;
  auto* vm = app.add_subcommand("verma", "Gram matrix of the truncated Verma module, exact");
  vm->set_help_flag("--help", "print this help message and exit");
  vm->add_option("--c", c_text, "central charge (p/q)")->capture_default_str();
  vm->add_option("--h", h_text, "lowest weight (p/q)")->capture_default_str();
  vm->add_option("--level", level, "level")->capture_default_str();
  vm->add_option("--truncation", truncation, "truncation level L")->capture_default_str();

  VerifyOptions vopts;
  unsigned threads = 1;
  auto* vf = app.add_subcommand("verify", "run the property suite");
  add_common(vf, verify_common, false);
  vf->add_option("suite", vopts.suite, "all | diff | loop | cocycle | verma")
      ->capture_default_str()
      ->check(CLI::IsMember({"all", "diff", "loop", "cocycle", "verma"}));
  vf->add_option("--seed", vopts.seed, "random seed")->capture_default_str();
  vf->add_option("--trials", vopts.trials, "trials per property")->capture_default_str();
  vf->add_option("--threads", threads, "worker threads")->capture_default_str();
  vf->add_option("--epsilon", vopts.epsilon, "radius of U_eps for the diffeomorphism suite")->capture_default_str();

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kExitInput;
  }

  try {
    if (*fd) return fragment_diff(frag_common, epsilon, diffeo_spec, out);
    if (*fl) return fragment_loop_cmd(loop_common, loop_spec, out);
    if (*cc) return cocycle_cmd(cocycle_common, kind, lhs, rhs, out);
    if (*vm) return verma_cmd(c_text, h_text, level, truncation, out);
    if (*vf) {
      vopts.cover = load_cover(verify_common.config);
      if (verify_common.grid) vopts.grid = checked_grid(*verify_common.grid);
      vopts.threads = std::max(1u, threads);
      const auto start = std::chrono::steady_clock::now();
      const auto report = run_verify(vopts);
      const std::chrono::duration<double> wall = std::chrono::steady_clock::now() - start;
      err << "wall time " << wall.count() << " s\n";
      return emit(report, verify_common.json, out);
    }
  } catch (const ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kExitInput;
  } catch (const NeighbourhoodError& e) {
    err << "error: " << e.what() << '\n';
    return kExitInput;
  } catch (const DerivativeError& e) {
    err << "error: " << e.what() << '\n';
    return kExitInput;
  } catch (const BranchError& e) {
    err << "error: " << e.what() << '\n';
    return kExitInput;
  } catch (const TruncationError& e) {
    err << "error: " << e.what() << '\n';
    return kExitInput;
  } catch (const GeometryError& e) {
    err << "error: " << e.what() << '\n';
    return kExitGeometry;
  } catch (const MassError& e) {
    err << "error: " << e.what() << '\n';
    return kExitGeometry;
  } catch (const AliasingError& e) {
    err << "error: " << e.what() << '\n';
    return kExitAliasing;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kExitCheckFailed;
  }
  return kExitInput;
}

}  // namespace cfrag
