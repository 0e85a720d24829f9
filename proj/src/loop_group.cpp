#include "cfrag/loop_group.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <stdexcept>

#include "cfrag/errors.hpp"

namespace cfrag {
namespace {

using cplx = std::complex<double>;

void check_same(const detail::MatrixLoop& x, const detail::MatrixLoop& y) {
  if (x.size() != y.size() || x.dim() != y.dim())
    throw std::invalid_argument("loops live on different grids or matrix sizes");
}

// Rebuilds samples from entry functions.
std::vector<Matrix> from_entries(const std::vector<ComplexPeriodicFunction>& entries, Eigen::Index dim) {
  const std::size_t n = entries.front().size();
  std::vector<Matrix> out(n, Matrix(dim, dim));
  for (Eigen::Index i = 0; i < dim; ++i)
    for (Eigen::Index j = 0; j < dim; ++j) {
      const auto& e = entries[static_cast<std::size_t>(i * dim + j)];
      for (std::size_t k = 0; k < n; ++k) out[k](i, j) = e[k];
    }
  return out;
}

std::vector<double> identity_deviation(const LoopElement& g) {
  std::vector<double> dev(g.size());
  const auto id = Matrix::Identity(g.dim(), g.dim());
  for (std::size_t k = 0; k < dev.size(); ++k) dev[k] = su::operator_norm(g[k] - id);
  return dev;
}

}  // namespace

namespace detail {

MatrixLoop::MatrixLoop(std::vector<Matrix> samples) : samples_(std::move(samples)) {
  if (!is_valid_grid_size(samples_.size()))
    throw std::invalid_argument("loop needs a power-of-two grid with at least 16 points");
  const auto d = samples_.front().rows();
  for (const auto& m : samples_)
    if (m.rows() != d || m.cols() != d) throw std::invalid_argument("loop samples must be square of equal size");
}

ComplexPeriodicFunction MatrixLoop::entry(Eigen::Index i, Eigen::Index j) const {
  std::vector<cplx> v(size());
  for (std::size_t k = 0; k < v.size(); ++k) v[k] = samples_[k](i, j);
  return ComplexPeriodicFunction(std::move(v));
}

double MatrixLoop::tail() const {
  double t = 0.0;
  for (Eigen::Index i = 0; i < dim(); ++i)
    for (Eigen::Index j = 0; j < dim(); ++j) t = std::max(t, entry(i, j).tail());
  return t;
}

}  // namespace detail

LoopAlgebraElement::LoopAlgebraElement(std::vector<Matrix> samples) : MatrixLoop(std::move(samples)) {
  for (const auto& x : samples_)
    if (su::algebra_residual(x) > 1e-12 * (1.0 + x.norm()))
      throw std::invalid_argument("loop algebra sample is not anti-hermitian and traceless");
}

LoopAlgebraElement LoopAlgebraElement::zero(std::size_t n, Eigen::Index dim) {
  return LoopAlgebraElement(std::vector<Matrix>(n, Matrix::Zero(dim, dim)));
}

LoopAlgebraElement LoopAlgebraElement::constant(const Matrix& x, std::size_t n) {
  return LoopAlgebraElement(std::vector<Matrix>(n, x));
}

LoopAlgebraElement LoopAlgebraElement::sample(const std::function<Matrix(double)>& f, std::size_t n) {
  std::vector<Matrix> s(n);
  for (std::size_t k = 0; k < n; ++k) s[k] = f(grid_point(k, n));
  return LoopAlgebraElement(std::move(s));
}

LoopAlgebraElement LoopAlgebraElement::su2(const PeriodicFunction& fx, const PeriodicFunction& fy,
                                           const PeriodicFunction& fz) {
  const std::size_t n = fx.size();
  if (fy.size() != n || fz.size() != n) throw std::invalid_argument("components live on different grids");
  const auto& e = su::su2_basis();
  std::vector<Matrix> s(n);
  for (std::size_t k = 0; k < n; ++k) s[k] = fx[k] * e[0] + fy[k] * e[1] + fz[k] * e[2];
  return LoopAlgebraElement(std::move(s));
}

LoopAlgebraElement LoopAlgebraElement::derivative() const {
  std::vector<ComplexPeriodicFunction> entries;
  for (Eigen::Index i = 0; i < dim(); ++i)
    for (Eigen::Index j = 0; j < dim(); ++j) entries.push_back(entry(i, j).derivative(1));
  auto s = from_entries(entries, dim());
  for (auto& m : s) m = su::project_to_algebra(m);
  return LoopAlgebraElement(std::move(s));
}

double LoopAlgebraElement::sup_norm() const {
  double m = 0.0;
  for (const auto& x : samples_) m = std::max(m, su::operator_norm(x));
  return m;
}

LoopAlgebraElement LoopAlgebraElement::operator+(const LoopAlgebraElement& other) const {
  check_same(*this, other);
  auto s = samples_;
  for (std::size_t k = 0; k < s.size(); ++k) s[k] += other[k];
  return LoopAlgebraElement(std::move(s));
}

LoopAlgebraElement LoopAlgebraElement::operator-(const LoopAlgebraElement& other) const {
  return *this + other * -1.0;
}

LoopAlgebraElement LoopAlgebraElement::operator*(double s) const {
  auto out = samples_;
  for (auto& m : out) m *= s;
  return LoopAlgebraElement(std::move(out));
}

LoopAlgebraElement LoopAlgebraElement::operator*(const PeriodicFunction& f) const {
  if (f.size() != size()) throw std::invalid_argument("cutoff and loop live on different grids");
  auto out = samples_;
  for (std::size_t k = 0; k < out.size(); ++k) out[k] *= f[k];
  return LoopAlgebraElement(std::move(out));
}

LoopElement::LoopElement(std::vector<Matrix> samples) : MatrixLoop(std::move(samples)) {
  for (const auto& u : samples_)
    if (su::group_residual(u) > 1e-10) throw std::invalid_argument("loop sample is not in SU(n)");
}

LoopElement LoopElement::identity(std::size_t n, Eigen::Index dim) {
  return LoopElement(std::vector<Matrix>(n, Matrix::Identity(dim, dim)));
}

LoopElement multiply(const LoopElement& g1, const LoopElement& g2, double tail_tolerance) {
  check_same(g1, g2);
  std::vector<Matrix> s(g1.size());
  for (std::size_t k = 0; k < s.size(); ++k) s[k] = g1[k] * g2[k];
  LoopElement out(std::move(s));
  const double tail = out.tail();
  if (tail > tail_tolerance)
    throw AliasingError("loop product is under-resolved on " + std::to_string(out.size()) + " points (tail " +
                        std::to_string(tail) + ")");
  return out;
}

LoopElement inverse(const LoopElement& g) {
  std::vector<Matrix> s(g.size());
  for (std::size_t k = 0; k < s.size(); ++k) s[k] = g[k].adjoint();
  return LoopElement(std::move(s));
}

LoopElement exp_loop(const LoopAlgebraElement& xi) {
  std::vector<Matrix> s(xi.size());
  for (std::size_t k = 0; k < s.size(); ++k) s[k] = su::exp(xi[k]);
  return LoopElement(std::move(s));
}

LoopAlgebraElement log_loop(const LoopElement& g) {
  std::vector<Matrix> s(g.size());
  for (std::size_t k = 0; k < s.size(); ++k) {
    try {
      s[k] = su::log(g[k]);
    } catch (const BranchError& e) {
      throw BranchError("sample at t = " + std::to_string(grid_point(k, g.size())) + ": " + e.what());
    }
  }
  return LoopAlgebraElement(std::move(s));
}

LoopAlgebraElement bracket(const LoopAlgebraElement& xi, const LoopAlgebraElement& eta) {
  check_same(xi, eta);
  std::vector<Matrix> s(xi.size());
  for (std::size_t k = 0; k < s.size(); ++k) s[k] = su::project_to_algebra(su::commutator(xi[k], eta[k]));
  return LoopAlgebraElement(std::move(s));
}

double omega(const LoopAlgebraElement& xi, const LoopAlgebraElement& eta) {
  check_same(xi, eta);
  const auto d = eta.derivative();
  double sum = 0.0;
  for (std::size_t k = 0; k < xi.size(); ++k) sum += su::killing_form(xi[k], d[k]).real();
  return sum / static_cast<double>(xi.size());
}

LoopAlgebraElement compose(const LoopAlgebraElement& xi, const CircleDiffeo& f) {
  if (f.size() != xi.size()) throw std::invalid_argument("loop and diffeomorphism live on different grids");
  const auto at = f.values();
  std::vector<ComplexPeriodicFunction> entries;
  for (Eigen::Index i = 0; i < xi.dim(); ++i)
    for (Eigen::Index j = 0; j < xi.dim(); ++j)
      entries.push_back(ComplexPeriodicFunction(Interpolant<cplx>(xi.entry(i, j))(at)));
  auto s = from_entries(entries, xi.dim());
  for (auto& m : s) m = su::project_to_algebra(m);
  return LoopAlgebraElement(std::move(s));
}

double distance(const LoopElement& g1, const LoopElement& g2) {
  check_same(g1, g2);
  double m = 0.0;
  for (std::size_t k = 0; k < g1.size(); ++k) m = std::max(m, su::operator_norm(g1[k] - g2[k]));
  return m;
}

double distance(const LoopAlgebraElement& x1, const LoopAlgebraElement& x2) {
  check_same(x1, x2);
  double m = 0.0;
  for (std::size_t k = 0; k < x1.size(); ++k) m = std::max(m, su::operator_norm(x1[k] - x2[k]));
  return m;
}

Support support(const LoopElement& g, double tol) { return support_from_deviation(identity_deviation(g), tol); }

Support support(const LoopAlgebraElement& xi, double tol) {
  std::vector<double> dev(xi.size());
  for (std::size_t k = 0; k < dev.size(); ++k) dev[k] = su::operator_norm(xi[k]);
  return support_from_deviation(dev, tol);
}

double deviation_outside(const LoopElement& g, const IntervalArc& arc) {
  return max_deviation_outside(identity_deviation(g), arc);
}

std::string to_csv(const detail::MatrixLoop& g) {
  std::string out = "t";
  for (Eigen::Index i = 0; i < g.dim(); ++i)
    for (Eigen::Index j = 0; j < g.dim(); ++j) {
      const std::string ij = std::to_string(i) + std::to_string(j);
      out += ",re" + ij + ",im" + ij;
    }
  out += '\n';
  char buf[64];
  for (std::size_t k = 0; k < g.size(); ++k) {
    std::snprintf(buf, sizeof buf, "%.17g", grid_point(k, g.size()));
    out += buf;
    for (Eigen::Index i = 0; i < g.dim(); ++i)
      for (Eigen::Index j = 0; j < g.dim(); ++j) {
        std::snprintf(buf, sizeof buf, ",%.17g,%.17g", g[k](i, j).real(), g[k](i, j).imag());
        out += buf;
      }
    out += '\n';
  }
  return out;
}

LoopCutoffs LoopCutoffs::build(const CoverConfig& cover, std::size_t n, double tail_tolerance) {
  cover.validate();
  const double m = cover.margin;
  const auto& i1 = cover.I(1);
  const auto& i2 = cover.I(2);
  const double a1 = i1.a(), b1 = i1.b();
  const double b3 = i1.lift(cover.I(3).b());
  const double a2 = i1.lift(i2.a());
  auto chi1 = make_bump_raw(i1, b3 - m * (b3 - a1), a2 + m * (b1 - a2), 1.0, n, tail_tolerance);

  const double s3 = i2.lift(cover.I(3).b()) - kTwoPi;  // b3 just below a2
  const IntervalArc support2(s3, i2.b());
  const double a3 = i2.lift(cover.I(3).a());
  const double b2 = i2.b();
  auto chi2 = make_bump_raw(support2, i2.a() - m * (i2.a() - s3), a3 + m * (b2 - a3), 1.0, n, tail_tolerance);
  return LoopCutoffs{std::move(chi1), std::move(chi2)};
}

LoopFragmenter::LoopFragmenter(const CoverConfig& cover, std::size_t n)
    : cover_(cover), cutoffs_(LoopCutoffs::build(cover, n)) {}

LoopFragmentation LoopFragmenter::operator()(const LoopElement& gamma) const {
  const auto eta = log_loop(gamma);
  const std::size_t n = gamma.size();
  const auto& c1 = cutoffs_.chi1.function();
  const auto& c2 = cutoffs_.chi2.function();
  const auto one = PeriodicFunction::constant(1.0, n);
  const auto rest1 = one - c1;
  LoopFragmentation r{exp_loop(eta * c1), exp_loop(eta * (c2 * rest1)), exp_loop(eta * (rest1 * (one - c2)))};
  r.reconstruction_error = distance(multiply(r.xi1, multiply(r.xi2, r.xi3)), gamma);
  return r;
}

LoopFragmentation LoopFragmenter::sequential(const LoopElement& gamma) const {
  const auto eta = log_loop(gamma);
  auto xi1 = exp_loop(eta * cutoffs_.chi1.function());
  const auto rest = multiply(inverse(xi1), gamma);
  auto xi2 = exp_loop(log_loop(rest) * cutoffs_.chi2.function());
  auto xi3 = multiply(inverse(xi2), rest);
  LoopFragmentation r{std::move(xi1), std::move(xi2), std::move(xi3)};
  r.reconstruction_error = distance(multiply(r.xi1, multiply(r.xi2, r.xi3)), gamma);
  return r;
}

LoopFragmentation fragment_loop(const LoopElement& gamma, const CoverConfig& cover) {
  return LoopFragmenter(cover, gamma.size())(gamma);
}

LoopFragmentation fragment_loop_sequential(const LoopElement& gamma, const CoverConfig& cover) {
  return LoopFragmenter(cover, gamma.size()).sequential(gamma);
}

}  // namespace cfrag
