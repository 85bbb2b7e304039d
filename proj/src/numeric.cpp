#include "urlab/numeric.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

namespace urlab {

double log_binomial(int n, int k) {
  if (k < 0 || k > n) return -std::numeric_limits<double>::infinity();
  if (k == 0 || k == n) return 0.0;
  return std::lgamma(n + 1.0) - std::lgamma(k + 1.0) - std::lgamma(n - k + 1.0);
}

double binomial(int n, int k) {
  if (k < 0 || k > n) return 0.0;
  if (k > n - k) k = n - k;
  // Multiplicative formula stays exact in 128-bit for n up to ~62.
  if (n <= 62) {
    unsigned __int128 acc = 1;
    for (int i = 1; i <= k; ++i) {
      acc = acc * static_cast<unsigned>(n - k + i) / static_cast<unsigned>(i);
    }
    return static_cast<double>(static_cast<std::uint64_t>(acc));
  }
  return std::exp(log_binomial(n, k));
}

Matrix kron(const Matrix& a, const Matrix& b) {
  Matrix out(a.rows() * b.rows(), a.cols() * b.cols());
  for (Eigen::Index i = 0; i < a.rows(); ++i)
    for (Eigen::Index j = 0; j < a.cols(); ++j)
      out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
  return out;
}

Vector kron_vec(const Vector& a, const Vector& b) {
  Vector out(a.size() * b.size());
  for (Eigen::Index i = 0; i < a.size(); ++i)
    out.segment(i * b.size(), b.size()) = a(i) * b;
  return out;
}

Matrix unitary_exp(const Matrix& h, double t) {
  Eigen::SelfAdjointEigenSolver<Matrix> es(h);
  if (es.info() != Eigen::Success) {
    throw std::runtime_error("unitary_exp: eigensolver failed");
  }
  const auto& v = es.eigenvectors();
  Vector phases(es.eigenvalues().size());
  for (Eigen::Index i = 0; i < phases.size(); ++i) {
    phases(i) = std::exp(Complex(0.0, -t * es.eigenvalues()(i)));
  }
  return v * phases.asDiagonal() * v.adjoint();
}

RealMatrix pinv_psd(const RealMatrix& m, double rcond) {
  Eigen::SelfAdjointEigenSolver<RealMatrix> es(m);
  if (es.info() != Eigen::Success) {
    throw std::runtime_error("pinv_psd: eigensolver failed");
  }
  const RealVector& w = es.eigenvalues();
  const double wmax = w.size() ? w.cwiseAbs().maxCoeff() : 0.0;
  const double cut = rcond * std::max(wmax, 1e-300);
  RealVector inv = RealVector::Zero(w.size());
  for (Eigen::Index i = 0; i < w.size(); ++i) {
    if (w(i) > cut) inv(i) = 1.0 / w(i);
  }
  return es.eigenvectors() * inv.asDiagonal() * es.eigenvectors().transpose();
}

}  // namespace urlab
