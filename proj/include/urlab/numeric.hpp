#pragma once

#include <Eigen/Dense>
#include <complex>
#include <cstdint>

namespace urlab {

using Complex = std::complex<double>;
using Matrix = Eigen::MatrixXcd;
using Vector = Eigen::VectorXcd;
using RealVector = Eigen::VectorXd;
using RealMatrix = Eigen::MatrixXd;

// Binomial coefficient C(n, k). Exact integer arithmetic where it fits,
// exp(log_binomial) beyond.
double binomial(int n, int k);

// log C(n, k); -inf for k outside [0, n].
double log_binomial(int n, int k);

// Kronecker product a (x) b.
Matrix kron(const Matrix& a, const Matrix& b);
Vector kron_vec(const Vector& a, const Vector& b);

// exp(-i t H) for Hermitian H, via spectral decomposition.
Matrix unitary_exp(const Matrix& h, double t);

// Moore-Penrose pseudo-inverse of a Hermitian PSD matrix. Eigenvalues
// below rcond * max_eigenvalue are treated as zero.
RealMatrix pinv_psd(const RealMatrix& m, double rcond = 1e-10);

}  // namespace urlab
