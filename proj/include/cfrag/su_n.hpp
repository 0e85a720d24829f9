#pragma once

#include <array>
#include <complex>

#include <Eigen/Dense>

namespace cfrag::su {

using Matrix = Eigen::MatrixXcd;

/// exp of an anti-hermitian traceless matrix. Closed form for n = 2
/// (cos theta I + sin theta / theta X with theta^2 = det X), eigendecomposition otherwise.
Matrix exp(const Matrix& x);

/// Principal logarithm of a special unitary matrix, projected onto su(n).
/// Throws BranchError unless ||u - I|| < 1.
Matrix log(const Matrix& u);

/// Spectral norm.
double operator_norm(const Matrix& m);

/// <X, Y> = tr(XY); normalized so that <h, h> = 2 for h = diag(1, -1, 0, ...).
std::complex<double> killing_form(const Matrix& x, const Matrix& y);

/// XY - YX.
Matrix commutator(const Matrix& x, const Matrix& y);

/// i sigma_x, i sigma_y, i sigma_z.
const std::array<Matrix, 3>& su2_basis();

/// max(||X + X^*||, |tr X|).
double algebra_residual(const Matrix& x);
/// max(||U^* U - I||, |det U - 1|).
double group_residual(const Matrix& u);

/// The nearest element of su(n): (X - X^*)/2 minus its trace part.
Matrix project_to_algebra(const Matrix& x);

}  // namespace cfrag::su
