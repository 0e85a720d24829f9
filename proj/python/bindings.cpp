#include <pybind11/complex.h>
#include <pybind11/eigen.h>
#include <pybind11/functional.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

#include "cfrag/cocycle.hpp"
#include "cfrag/commands.hpp"
#include "cfrag/errors.hpp"
#include "cfrag/frag_diff.hpp"
#include "cfrag/loop_group.hpp"
#include "cfrag/specs.hpp"
#include "cfrag/verify.hpp"
#include "cfrag/verma.hpp"

namespace py = pybind11;
using namespace cfrag;

PYBIND11_MODULE(_cfrag, m) {
  m.doc() = "Circle diffeomorphism and loop group fragmentation, Virasoro cocycles, exact Verma modules";

  auto base = py::register_exception<Error>(m, "Error");
  py::register_exception<AliasingError>(m, "AliasingError", base.ptr());
  py::register_exception<ConvergenceError>(m, "ConvergenceError", base.ptr());
  py::register_exception<GeometryError>(m, "GeometryError", base.ptr());
  py::register_exception<MassError>(m, "MassError", base.ptr());
  py::register_exception<NeighbourhoodError>(m, "NeighbourhoodError", base.ptr());
  py::register_exception<DerivativeError>(m, "DerivativeError", base.ptr());
  py::register_exception<BranchError>(m, "BranchError", base.ptr());
  py::register_exception<TruncationError>(m, "TruncationError", base.ptr());
  py::register_exception<ParseError>(m, "ParseError", base.ptr());

  py::class_<PeriodicFunction>(m, "PeriodicFunction")
      .def(py::init<std::vector<double>>(), py::arg("samples"))
      .def_static("sample", &PeriodicFunction::sample, py::arg("f"), py::arg("n") = kDefaultGrid)
      .def_property_readonly("samples",
                             [](const PeriodicFunction& f) {
                               return std::vector<double>(f.samples().begin(), f.samples().end());
                             })
      .def("__len__", &PeriodicFunction::size)
      .def("__call__", [](const PeriodicFunction& f, double t) { return f(t); })
      .def("derivative", &PeriodicFunction::derivative, py::arg("order") = 1)
      .def("integrate", &PeriodicFunction::integrate, py::arg("a"), py::arg("b"))
      .def("integral", &PeriodicFunction::integral)
      .def("tail", &PeriodicFunction::tail);

  py::class_<IntervalArc>(m, "IntervalArc")
      .def(py::init<double, double>(), py::arg("a"), py::arg("b"))
      .def_property_readonly("a", &IntervalArc::a)
      .def_property_readonly("b", &IntervalArc::b)
      .def("contains", py::overload_cast<double>(&IntervalArc::contains, py::const_), py::arg("t"))
      .def("__repr__", &IntervalArc::to_string);

  py::class_<CircleDiffeo>(m, "CircleDiffeo")
      .def(py::init<PeriodicFunction>(), py::arg("periodic_part"))
      .def_static("identity", &CircleDiffeo::identity, py::arg("n") = kDefaultGrid)
      .def_static("rotation", &CircleDiffeo::rotation, py::arg("s"), py::arg("n") = kDefaultGrid)
      .def_static(
          "from_fourier",
          [](const std::vector<std::tuple<int, double, double>>& terms, std::size_t n) {
            std::vector<CircleDiffeo::FourierTerm> t;
            for (const auto& [k, a, b] : terms) t.push_back({k, a, b});
            return CircleDiffeo::from_fourier(t, n);
          },
          py::arg("terms"), py::arg("n") = kDefaultGrid)
      .def_static("parse", &parse_diffeo, py::arg("spec"), py::arg("n") = kDefaultGrid)
      .def_property_readonly("periodic_part", &CircleDiffeo::periodic_part)
      .def("__len__", &CircleDiffeo::size)
      .def("__call__", [](const CircleDiffeo& g, double t) { return g(t); })
      .def("values", &CircleDiffeo::values)
      .def("min_derivative", &CircleDiffeo::min_derivative)
      .def("support", [](const CircleDiffeo& g, double tol) { return support(g, tol).to_string(); },
           py::arg("tol") = 1e-10);

  m.def("compose", py::overload_cast<const CircleDiffeo&, const CircleDiffeo&, double>(&compose), py::arg("outer"),
        py::arg("inner"), py::arg("tail_tolerance") = kDefaultTailTolerance);
  m.def("inverse", py::overload_cast<const CircleDiffeo&>(&inverse), py::arg("gamma"));
  m.def("distance", py::overload_cast<const CircleDiffeo&, const CircleDiffeo&>(&distance));

  py::class_<CoverConfig>(m, "CoverConfig")
      .def_static("default", &CoverConfig::default_cover)
      .def_static("symmetric", &CoverConfig::symmetric, py::arg("transition"), py::arg("inner_overlap"),
                  py::arg("margin") = 0.1)
      .def_static("parse", &CoverConfig::parse, py::arg("json"))
      .def("to_json", [](const CoverConfig& c) { return c.to_json().dump(); })
      .def("I", &CoverConfig::I, py::arg("j"))
      .def("Ihat", &CoverConfig::Ihat, py::arg("j"));

  py::class_<FragmentationResult>(m, "FragmentationResult")
      .def_readonly("xi1", &FragmentationResult::xi1)
      .def_readonly("xi2", &FragmentationResult::xi2)
      .def_readonly("xi3", &FragmentationResult::xi3)
      .def_readonly("alpha1", &FragmentationResult::alpha1)
      .def_readonly("beta1", &FragmentationResult::beta1)
      .def_readonly("alpha2", &FragmentationResult::alpha2)
      .def_readonly("beta2", &FragmentationResult::beta2)
      .def_readonly("reconstruction_error", &FragmentationResult::reconstruction_error)
      .def_readonly("min_derivative1", &FragmentationResult::min_derivative1);

  m.def(
      "fragment",
      [](const CircleDiffeo& g, const CoverConfig& cover, double epsilon) {
        return fragment(g, cover, FragmentOptions{epsilon, kDefaultTailTolerance});
      },
      py::arg("gamma"), py::arg("cover"), py::arg("epsilon") = 0.01);
  m.def("fragment_pair", &fragment_pair, py::arg("gamma"), py::arg("left"), py::arg("right"),
        py::arg("tail_tolerance") = kDefaultTailTolerance);

  py::class_<LoopAlgebraElement>(m, "LoopAlgebraElement")
      .def(py::init<std::vector<Matrix>>(), py::arg("samples"))
      .def_static("parse", &parse_algebra, py::arg("spec"), py::arg("n") = kDefaultGrid)
      .def_property_readonly("samples", &LoopAlgebraElement::samples)
      .def("__len__", &LoopAlgebraElement::size)
      .def("sup_norm", &LoopAlgebraElement::sup_norm);

  py::class_<LoopElement>(m, "LoopElement")
      .def(py::init<std::vector<Matrix>>(), py::arg("samples"))
      .def_static("identity", &LoopElement::identity, py::arg("n") = kDefaultGrid, py::arg("dim") = 2)
      .def_static("parse", &parse_loop, py::arg("spec"), py::arg("n") = kDefaultGrid)
      .def_property_readonly("samples", &LoopElement::samples)
      .def("__len__", &LoopElement::size);

  py::class_<LoopFragmentation>(m, "LoopFragmentation")
      .def_readonly("xi1", &LoopFragmentation::xi1)
      .def_readonly("xi2", &LoopFragmentation::xi2)
      .def_readonly("xi3", &LoopFragmentation::xi3)
      .def_readonly("reconstruction_error", &LoopFragmentation::reconstruction_error);

  m.def("multiply", &multiply, py::arg("g1"), py::arg("g2"), py::arg("tail_tolerance") = kDefaultTailTolerance);
  m.def("exp_loop", &exp_loop, py::arg("xi"));
  m.def("log_loop", &log_loop, py::arg("gamma"));
  m.def("omega", &omega, py::arg("xi"), py::arg("eta"));
  m.def("loop_distance", py::overload_cast<const LoopElement&, const LoopElement&>(&distance));
  m.def("fragment_loop", &fragment_loop, py::arg("gamma"), py::arg("cover"));
  m.def("fragment_loop_sequential", &fragment_loop_sequential, py::arg("gamma"), py::arg("cover"));
  m.def("killing_form", &su::killing_form, py::arg("x"), py::arg("y"));

  m.def("bott", &bott, py::arg("g1"), py::arg("g2"), py::arg("tail_tolerance") = kDefaultTailTolerance);
  m.def(
      "vect_cocycle",
      [](const std::string& f, const std::string& g, std::size_t n) {
        return vect_cocycle(parse_scalar(f, n), parse_scalar(g, n));
      },
      py::arg("f"), py::arg("g"), py::arg("n") = kDefaultGrid);
  m.def(
      "vir_multiply",
      [](double a1, const CircleDiffeo& g1, double a2, const CircleDiffeo& g2) {
        auto r = vir_multiply({a1, g1}, {a2, g2});
        return py::make_tuple(r.a, r.gamma);
      },
      py::arg("a1"), py::arg("g1"), py::arg("a2"), py::arg("g2"));

  py::class_<VermaModule>(m, "VermaModule")
      .def(py::init([](const std::string& c, const std::string& h, int truncation) {
             return VermaModule(parse_rational(c), parse_rational(h), truncation);
           }),
           py::arg("c"), py::arg("h"), py::arg("truncation") = 8)
      .def("basis", &VermaModule::basis, py::arg("level"))
      .def(
          "gram_matrix",
          [](const VermaModule& v, int level) {
            const auto g = v.gram_matrix(level);
            std::vector<std::vector<std::string>> out;
            for (const auto& row : g) {
              out.emplace_back();
              for (const auto& x : row) out.back().push_back(to_string(x));
            }
            return out;
          },
          py::arg("level"))
      .def(
          "gram_determinant", [](const VermaModule& v, int level) { return to_string(determinant(v.gram_matrix(level))); },
          py::arg("level"))
      .def(
          "commutator_check",
          [](const VermaModule& v, int mm, int nn, const Partition& p) {
            return v.commutator_check(mm, nn, VermaState::basis(p));
          },
          py::arg("m"), py::arg("n"), py::arg("partition") = Partition{});

  m.def(
      "verify",
      [](const std::string& suite, std::uint64_t seed, std::size_t trials, unsigned threads,
         std::optional<std::size_t> grid) {
        VerifyOptions o;
        o.suite = suite;
        o.seed = seed;
        o.trials = trials;
        o.threads = threads;
        o.grid = grid;
        py::gil_scoped_release release;
        return run_verify(o).to_json().dump();
      },
      py::arg("suite") = "all", py::arg("seed") = 42, py::arg("trials") = 10, py::arg("threads") = 1,
      py::arg("grid") = py::none());

  m.def(
      "run_cli",
      [](const std::vector<std::string>& args) {
        std::ostringstream out, err;
        const int code = run_cli(args, out, err);
        return py::make_tuple(code, out.str(), err.str());
      },
      py::arg("args"));
}
