#include "urlab/opcore.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace urlab {

double hermiticity_defect(const Matrix& m) {
  if (m.rows() != m.cols()) {
    throw std::invalid_argument("hermiticity_defect: matrix is not square");
  }
  return (m - m.adjoint().eval()).cwiseAbs().maxCoeff();
}

Matrix commutator(const Matrix& a, const Matrix& b) { return a * b - b * a; }

Matrix anticommutator(const Matrix& a, const Matrix& b) {
  return a * b + b * a;
}

HermitianObservable::HermitianObservable(Matrix m, double tolerance)
    : m_(std::move(m)) {
  if (hermiticity_defect(m_) > tolerance) {
    throw std::invalid_argument("HermitianObservable: matrix is not Hermitian");
  }
  m_ = 0.5 * (m_ + m_.adjoint().eval());
}

HermitianObservable HermitianObservable::symmetrized(const Matrix& m) {
  if (m.rows() != m.cols()) {
    throw std::invalid_argument("symmetrized: matrix is not square");
  }
  return HermitianObservable(0.5 * (m + m.adjoint().eval()), Trusted{});
}

DensityMatrix::DensityMatrix(const Matrix& rho, double herm_tol,
                             double eig_tol) {
  if (rho.rows() != rho.cols() || rho.rows() == 0) {
    throw std::invalid_argument("DensityMatrix: matrix is not square");
  }
  if (hermiticity_defect(rho) > herm_tol) {
    throw std::invalid_argument("DensityMatrix: matrix is not Hermitian");
  }
  if (std::abs(rho.trace().real() - 1.0) > herm_tol ||
      std::abs(rho.trace().imag()) > herm_tol) {
    throw std::invalid_argument("DensityMatrix: trace is not one");
  }
  rho_ = 0.5 * (rho + rho.adjoint().eval());
  Eigen::SelfAdjointEigenSolver<Matrix> es(rho_);
  if (es.info() != Eigen::Success) {
    throw std::runtime_error("DensityMatrix: eigensolver failed");
  }
  const Eigen::Index d = rho_.rows();
  evals_.resize(d);
  evecs_.resize(d, d);
  for (Eigen::Index i = 0; i < d; ++i) {
    double q = es.eigenvalues()(d - 1 - i);  // descending
    if (q < -eig_tol) {
      throw std::invalid_argument("DensityMatrix: matrix is not positive");
    }
    evals_(i) = std::max(q, 0.0);
    evecs_.col(i) = es.eigenvectors().col(d - 1 - i);
  }
}

DensityMatrix DensityMatrix::pure(const Vector& psi) {
  const double norm = psi.norm();
  if (!(norm > 0.0)) {
    throw std::invalid_argument("DensityMatrix::pure: zero vector");
  }
  const Eigen::Index d = psi.size();
  Vector unit = psi / norm;
  DensityMatrix out;
  out.rho_ = unit * unit.adjoint();
  out.evals_ = RealVector::Zero(d);
  out.evals_(0) = 1.0;
  // Unitary completion whose first column spans the state.
  Eigen::HouseholderQR<Matrix> qr(unit);
  out.evecs_ = qr.householderQ();
  out.evecs_.col(0) = unit;  // fix the arbitrary QR phase
  return out;
}

DensityMatrix DensityMatrix::diagonal(const RealVector& weights) {
  const Eigen::Index d = weights.size();
  if (d == 0) {
    throw std::invalid_argument("DensityMatrix::diagonal: empty weights");
  }
  RealVector w = weights;
  double sum = 0.0;
  for (Eigen::Index i = 0; i < d; ++i) {
    if (w(i) < -tol::eig) {
      throw std::invalid_argument("DensityMatrix::diagonal: negative weight");
    }
    w(i) = std::max(w(i), 0.0);
    sum += w(i);
  }
  if (std::abs(sum - 1.0) > 1e-10) {
    throw std::invalid_argument("DensityMatrix::diagonal: weights do not sum to one");
  }
  std::vector<Eigen::Index> order(static_cast<std::size_t>(d));
  for (Eigen::Index i = 0; i < d; ++i) order[static_cast<std::size_t>(i)] = i;
  std::stable_sort(order.begin(), order.end(),
                   [&](Eigen::Index a, Eigen::Index b) { return w(a) > w(b); });
  DensityMatrix out;
  out.rho_ = Matrix::Zero(d, d);
  out.rho_.diagonal() = w.cast<Complex>();
  out.evals_.resize(d);
  out.evecs_ = Matrix::Zero(d, d);
  for (Eigen::Index i = 0; i < d; ++i) {
    out.evals_(i) = w(order[static_cast<std::size_t>(i)]);
    out.evecs_(order[static_cast<std::size_t>(i)], i) = 1.0;
  }
  return out;
}

DensityMatrix DensityMatrix::from_spectrum(const RealVector& weights,
                                           const Matrix& vectors) {
  if (vectors.rows() != vectors.cols() || vectors.rows() != weights.size()) {
    throw std::invalid_argument("DensityMatrix::from_spectrum: shape mismatch");
  }
  Matrix rho =
      vectors * weights.cast<Complex>().asDiagonal() * vectors.adjoint();
  return from_parts(std::move(rho), weights, vectors);
}

DensityMatrix DensityMatrix::from_parts(Matrix rho, RealVector weights,
                                        Matrix vectors) {
  if (rho.rows() != rho.cols() || rho.rows() != weights.size() ||
      vectors.rows() != rho.rows() || vectors.cols() != rho.rows()) {
    throw std::invalid_argument("DensityMatrix::from_parts: shape mismatch");
  }
  const Eigen::Index d = weights.size();
  std::vector<Eigen::Index> order(static_cast<std::size_t>(d));
  for (Eigen::Index i = 0; i < d; ++i) order[static_cast<std::size_t>(i)] = i;
  std::stable_sort(order.begin(), order.end(), [&](Eigen::Index a, Eigen::Index b) {
    return weights(a) > weights(b);
  });
  DensityMatrix out;
  out.rho_ = std::move(rho);
  out.evals_.resize(d);
  out.evecs_.resize(d, d);
  for (Eigen::Index i = 0; i < d; ++i) {
    out.evals_(i) = weights(order[static_cast<std::size_t>(i)]);
    out.evecs_.col(i) = vectors.col(order[static_cast<std::size_t>(i)]);
  }
  return out;
}

double DensityMatrix::purity() const { return evals_.squaredNorm(); }

bool DensityMatrix::is_pure(double tolerance) const {
  return evals_(0) > 1.0 - tolerance;
}

std::vector<std::pair<double, Vector>> spectral(const DensityMatrix& rho) {
  std::vector<std::pair<double, Vector>> out;
  out.reserve(static_cast<std::size_t>(rho.dim()));
  for (Eigen::Index i = 0; i < rho.dim(); ++i) {
    out.emplace_back(rho.eigenvalues()(i), rho.eigenvectors().col(i));
  }
  return out;
}

double expectation(const DensityMatrix& rho, const Matrix& a) {
  if (a.rows() != rho.dim() || a.cols() != rho.dim()) {
    throw std::invalid_argument("expectation: dimension mismatch");
  }
  // Tr(rho A) = sum_ij rho_ij A_ji
  return rho.matrix().transpose().cwiseProduct(a).sum().real();
}

namespace {

// Tr(rho A B); one dense product, then an entrywise trace.
Complex trace_rho_ab(const DensityMatrix& rho, const Matrix& a,
                     const Matrix& b) {
  Matrix ra = rho.matrix() * a;
  return ra.transpose().cwiseProduct(b).sum();
}

}  // namespace

double variance(const DensityMatrix& rho, const Matrix& a) {
  const double second = trace_rho_ab(rho, a, a).real();
  const double mean = expectation(rho, a);
  double v = second - mean * mean;
  if (v < 0.0) {
    if (v < -1e-9 * std::max(1.0, std::abs(second))) {
      throw std::runtime_error("variance: negative beyond roundoff");
    }
    v = 0.0;
  }
  return v;
}

double commutator_mean(const DensityMatrix& rho, const Matrix& a,
                       const Matrix& b) {
  // <i[A,B]> = i (Tr(rho A B) - conj(Tr(rho A B))) = -2 Im Tr(rho A B)
  return -2.0 * trace_rho_ab(rho, a, b).imag();
}

double symmetrized_covariance(const DensityMatrix& rho, const Matrix& a,
                              const Matrix& b) {
  // <{A,B}>/2 - <A><B> = Re Tr(rho A B) - <A><B>
  return trace_rho_ab(rho, a, b).real() -
         expectation(rho, a) * expectation(rho, b);
}

ProjectiveMeasurement::ProjectiveMeasurement(std::vector<Matrix> projectors,
                                             double tolerance)
    : projectors_(std::move(projectors)) {
  if (projectors_.empty()) {
    throw std::invalid_argument("ProjectiveMeasurement: no projectors");
  }
  const Eigen::Index d = projectors_.front().rows();
  Matrix sum = Matrix::Zero(d, d);
  for (const Matrix& p : projectors_) {
    if (p.rows() != d || p.cols() != d) {
      throw std::invalid_argument("ProjectiveMeasurement: dimension mismatch");
    }
    if (hermiticity_defect(p) > tolerance) {
      throw std::invalid_argument("ProjectiveMeasurement: projector not Hermitian");
    }
    if ((p * p - p).cwiseAbs().maxCoeff() > tolerance) {
      throw std::invalid_argument("ProjectiveMeasurement: projector not idempotent");
    }
    sum += p;
  }
  for (std::size_t i = 0; i < projectors_.size(); ++i) {
    for (std::size_t j = i + 1; j < projectors_.size(); ++j) {
      if ((projectors_[i] * projectors_[j]).cwiseAbs().maxCoeff() > tolerance) {
        throw std::invalid_argument("ProjectiveMeasurement: projectors overlap");
      }
    }
  }
  if ((sum - Matrix::Identity(d, d)).cwiseAbs().maxCoeff() > tolerance) {
    throw std::invalid_argument("ProjectiveMeasurement: projectors do not resolve identity");
  }
}

ProjectiveMeasurement ProjectiveMeasurement::from_basis(const Matrix& u,
                                                        double tolerance) {
  if (u.rows() != u.cols()) {
    throw std::invalid_argument("from_basis: matrix is not square");
  }
  const Eigen::Index d = u.rows();
  if ((u.adjoint() * u - Matrix::Identity(d, d)).cwiseAbs().maxCoeff() >
      tolerance) {
    throw std::invalid_argument("from_basis: columns are not orthonormal");
  }
  std::vector<Matrix> ps;
  ps.reserve(static_cast<std::size_t>(d));
  for (Eigen::Index i = 0; i < d; ++i) {
    ps.push_back(u.col(i) * u.col(i).adjoint());
  }
  return ProjectiveMeasurement(std::move(ps), Trusted{});
}

ProjectiveMeasurement ProjectiveMeasurement::of_observable(
    const Matrix& a, double degeneracy_tol) {
  if (hermiticity_defect(a) > tol::herm) {
    throw std::invalid_argument("of_observable: matrix is not Hermitian");
  }
  Eigen::SelfAdjointEigenSolver<Matrix> es(a);
  if (es.info() != Eigen::Success) {
    throw std::runtime_error("of_observable: eigensolver failed");
  }
  const Eigen::Index d = a.rows();
  const RealVector& w = es.eigenvalues();  // ascending
  const double spread = std::max(1.0, w(d - 1) - w(0));
  std::vector<Matrix> ps;
  Eigen::Index start = 0;
  for (Eigen::Index i = 1; i <= d; ++i) {
    if (i == d || w(i) - w(i - 1) > degeneracy_tol * spread) {
      Matrix block = es.eigenvectors().middleCols(start, i - start);
      ps.push_back(block * block.adjoint());
      start = i;
    }
  }
  return ProjectiveMeasurement(std::move(ps), Trusted{});
}

Eigen::Index ProjectiveMeasurement::dim() const {
  return projectors_.front().rows();
}

URReport URReport::make(double lhs, double rhs, double tolerance) {
  URReport r;
  r.lhs = lhs;
  r.rhs = rhs;
  r.gap = lhs - rhs;
  r.tolerance = tolerance;
  const double scale = std::max({1.0, std::abs(lhs), std::abs(rhs)});
  r.holds = r.gap >= -tolerance * scale;
  r.tight = std::abs(r.gap) <= tolerance * scale;
  return r;
}

}  // namespace urlab
