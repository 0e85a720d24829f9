#include "cfrag/su_n.hpp"

#include <algorithm>
#include <cmath>

#include "cfrag/errors.hpp"

namespace cfrag::su {
namespace {

std::complex<double> det(const Matrix& m) {
  if (m.rows() == 2) return m(0, 0) * m(1, 1) - m(0, 1) * m(1, 0);
  return m.determinant();
}

using cplx = std::complex<double>;

}  // namespace

Matrix project_to_algebra(const Matrix& x) {
  Matrix a = 0.5 * (x - x.adjoint());
  const cplx tr = a.trace() / static_cast<double>(a.rows());
  a.diagonal().array() -= tr;
  return a;
}

Matrix exp(const Matrix& x) {
  const auto n = x.rows();
  if (n == 2) {
    const double theta2 = std::max(0.0, det(x).real());
    const double theta = std::sqrt(theta2);
    // sin(theta)/theta via its series near 0
    const double sinc = theta < 1e-4 ? 1.0 - theta2 / 6.0 + theta2 * theta2 / 120.0 : std::sin(theta) / theta;
    return std::cos(theta) * Matrix::Identity(2, 2) + sinc * x;
  }
  // x = iH with H hermitian.
  const Matrix h = cplx(0, -1) * x;
  Eigen::SelfAdjointEigenSolver<Matrix> es(0.5 * (h + h.adjoint()));
  Eigen::VectorXcd phases(n);
  for (Eigen::Index k = 0; k < n; ++k) phases(k) = std::polar(1.0, es.eigenvalues()(k));
  return es.eigenvectors() * phases.asDiagonal() * es.eigenvectors().adjoint();
}

Matrix log(const Matrix& u) {
  const auto n = u.rows();
  const double dist = operator_norm(u - Matrix::Identity(n, n));
  if (!(dist < 1.0))
    throw BranchError("matrix is outside the principal logarithm domain (||U - I|| = " + std::to_string(dist) + ")");
  if (n == 2) {
    // u = cos theta I + sin theta N with N in su(2), N^2 = -I.
    const Matrix a = 0.5 * (u - u.adjoint());
    const double s = std::sqrt(std::max(0.0, det(a).real()));
    const double c = 0.5 * u.trace().real();
    const double theta = std::atan2(s, c);
    const double factor = s < 1e-8 ? 1.0 + s * s / 6.0 : theta / s;
    return project_to_algebra(factor * a);
  }
  Eigen::ComplexSchur<Matrix> schur(u);
  const Matrix& t = schur.matrixT();
  Eigen::VectorXcd logs(n);
  for (Eigen::Index k = 0; k < n; ++k) logs(k) = cplx(0.0, std::arg(t(k, k)));
  return project_to_algebra(schur.matrixU() * logs.asDiagonal() * schur.matrixU().adjoint());
}

double operator_norm(const Matrix& m) {
  if (m.size() == 0) return 0.0;
  if (m.rows() == 2 && m.cols() == 2) {
    // Largest eigenvalue of the Hermitian m^* m.
    const double p = m.squaredNorm();
    const double d = std::norm(det(m));
    return std::sqrt(0.5 * (p + std::sqrt(std::max(0.0, p * p - 4.0 * d))));
  }
  Eigen::JacobiSVD<Matrix> svd(m);
  return svd.singularValues()(0);
}

std::complex<double> killing_form(const Matrix& x, const Matrix& y) { return (x * y).trace(); }

Matrix commutator(const Matrix& x, const Matrix& y) { return x * y - y * x; }

const std::array<Matrix, 3>& su2_basis() {
  static const std::array<Matrix, 3> basis = [] {
    const cplx i(0, 1);
    Matrix sx(2, 2), sy(2, 2), sz(2, 2);
    sx << 0, 1, 1, 0;
    sy << 0, -i, i, 0;
    sz << 1, 0, 0, -1;
    return std::array<Matrix, 3>{i * sx, i * sy, i * sz};
  }();
  return basis;
}

double algebra_residual(const Matrix& x) {
  return std::max(operator_norm(x + x.adjoint()), std::abs(x.trace()));
}

double group_residual(const Matrix& u) {
  const auto n = u.rows();
  return std::max(operator_norm(u.adjoint() * u - Matrix::Identity(n, n)), std::abs(det(u) - 1.0));
}

}  // namespace cfrag::su
