#include "urlab/metrics.hpp"

#include <cmath>
#include <memory>
#include <stdexcept>

namespace urlab {

double qfi(const DensityMatrix& rho, const Matrix& b, double support_cut) {
  if (b.rows() != rho.dim() || b.cols() != rho.dim()) {
    throw std::invalid_argument("qfi: dimension mismatch");
  }
  if (rho.is_pure()) {
    const Vector psi = rho.eigenvectors().col(0);
    const Vector bpsi = b * psi;
    const double mean = psi.dot(bpsi).real();
    return 4.0 * (bpsi.squaredNorm() - mean * mean);
  }
  const Matrix bt = rho.eigenvectors().adjoint() * b * rho.eigenvectors();
  const RealVector& q = rho.eigenvalues();
  double sum = 0.0;
  for (Eigen::Index i = 0; i < q.size(); ++i) {
    for (Eigen::Index j = i + 1; j < q.size(); ++j) {
      const double s = q(i) + q(j);
      if (s < support_cut) continue;
      const double d = q(i) - q(j);
      sum += 4.0 * d * d / s * std::norm(bt(i, j));
    }
  }
  return sum;
}

Matrix sld(const DensityMatrix& rho, const Matrix& b, double support_cut) {
  if (b.rows() != rho.dim() || b.cols() != rho.dim()) {
    throw std::invalid_argument("sld: dimension mismatch");
  }
  const Matrix& v = rho.eigenvectors();
  Matrix lt = v.adjoint() * b * v;
  const RealVector& q = rho.eigenvalues();
  for (Eigen::Index i = 0; i < q.size(); ++i) {
    for (Eigen::Index j = 0; j < q.size(); ++j) {
      const double s = q(i) + q(j);
      if (s < support_cut) {
        lt(i, j) = 0.0;
      } else {
        lt(i, j) *= Complex(0.0, 2.0) * (q(i) - q(j)) / s;
      }
    }
  }
  return v * lt * v.adjoint();
}

DensityMatrix evolve(const DensityMatrix& rho, const Matrix& b, double theta) {
  if (b.rows() != rho.dim() || b.cols() != rho.dim()) {
    throw std::invalid_argument("evolve: dimension mismatch");
  }
  const Matrix u = unitary_exp(b, theta);
  return DensityMatrix::from_parts(u * rho.matrix() * u.adjoint(),
                                   rho.eigenvalues(), u * rho.eigenvectors());
}

RealVector born_probs(const DensityMatrix& rho,
                      const ProjectiveMeasurement& meas) {
  if (meas.dim() != rho.dim()) {
    throw std::invalid_argument("born_probs: dimension mismatch");
  }
  RealVector p(static_cast<Eigen::Index>(meas.size()));
  for (std::size_t i = 0; i < meas.size(); ++i) {
    p(static_cast<Eigen::Index>(i)) =
        std::max(0.0, expectation(rho, meas.projectors()[i]));
  }
  const double sum = p.sum();
  if (!(sum > 0.0)) {
    throw std::runtime_error("born_probs: degenerate distribution");
  }
  return p / sum;
}

ProbabilityCurve evolution_curve(const DensityMatrix& rho, const Matrix& b,
                                 const ProjectiveMeasurement& meas,
                                 double lo, double hi) {
  if (b.rows() != rho.dim() || meas.dim() != rho.dim()) {
    throw std::invalid_argument("evolution_curve: dimension mismatch");
  }
  struct Cache {
    Matrix w;           // eigenvectors of the generator
    RealVector lambda;  // its eigenvalues
    Matrix rho0;
    std::vector<Matrix> projectors;
  };
  Eigen::SelfAdjointEigenSolver<Matrix> es(b);
  if (es.info() != Eigen::Success) {
    throw std::runtime_error("evolution_curve: eigensolver failed");
  }
  auto cache = std::make_shared<Cache>();
  cache->w = es.eigenvectors();
  cache->lambda = es.eigenvalues();
  // Work in the generator eigenbasis so each evaluation is quadratic cost.
  cache->rho0 = cache->w.adjoint() * rho.matrix() * cache->w;
  for (const Matrix& p : meas.projectors()) {
    cache->projectors.push_back(cache->w.adjoint() * p * cache->w);
  }
  ProbabilityCurve curve;
  curve.lo = lo;
  curve.hi = hi;
  curve.evaluate = [cache](double theta) {
    const Eigen::Index d = cache->lambda.size();
    Vector phase(d);
    for (Eigen::Index i = 0; i < d; ++i) {
      phase(i) = std::exp(Complex(0.0, -theta * cache->lambda(i)));
    }
    // rho(theta)_jk = e^{-i theta (l_j - l_k)} rho0_jk
    Matrix rt = phase.asDiagonal() * cache->rho0 * phase.conjugate().asDiagonal();
    RealVector p(static_cast<Eigen::Index>(cache->projectors.size()));
    for (std::size_t i = 0; i < cache->projectors.size(); ++i) {
      p(static_cast<Eigen::Index>(i)) = std::max(
          0.0, rt.transpose().cwiseProduct(cache->projectors[i]).sum().real());
    }
    const double sum = p.sum();
    return RealVector((sum > 0.0) ? (p / sum).eval() : p);
  };
  return curve;
}

namespace {

RealVector sqrt_probs(const ProbabilityCurve& curve, double theta) {
  RealVector p = curve.evaluate(theta);
  return p.cwiseMax(0.0).cwiseSqrt();
}

}  // namespace

double classical_fisher(const ProbabilityCurve& curve, double theta,
                        double step) {
  if (!(step > 0.0)) {
    throw std::invalid_argument("classical_fisher: step must be positive");
  }
  if (theta - step < curve.lo || theta + step > curve.hi) {
    throw std::domain_error("classical_fisher: step leaves the curve domain");
  }
  const RealVector p0 = curve.evaluate(theta);
  const RealVector s0 = p0.cwiseMax(0.0).cwiseSqrt();
  const RealVector sp = sqrt_probs(curve, theta + step);
  const RealVector sm = sqrt_probs(curve, theta - step);
  const RealVector sp2 = sqrt_probs(curve, theta + 0.5 * step);
  const RealVector sm2 = sqrt_probs(curve, theta - 0.5 * step);
  const RealVector coarse = (sp - sm) / (2.0 * step);
  const RealVector fine = (sp2 - sm2) / step;
  const RealVector deriv = (4.0 * fine - coarse) / 3.0;
  double fisher = 0.0;
  for (Eigen::Index i = 0; i < p0.size(); ++i) {
    if (p0(i) < 1e-12) {
      // One-sided slopes of sqrt(p) catch kinks that a symmetric difference
      // cancels (an even-order zero of p under the square root).
      const double one_sided =
          std::max(std::abs(sp(i) - s0(i)), std::abs(s0(i) - sm(i))) / step;
      if (std::abs(deriv(i)) > 1e-6 || one_sided > 1e-6) {
        throw std::domain_error(
            "classical_fisher: probability vanishes with non-vanishing slope");
      }
      continue;
    }
    fisher += 4.0 * deriv(i) * deriv(i);
  }
  return fisher;
}

double measurement_fisher(const DensityMatrix& rho, const Matrix& b,
                          const ProjectiveMeasurement& meas, double theta,
                          double step, double agreement_tol) {
  const DensityMatrix rt = (theta == 0.0) ? rho : evolve(rho, b, theta);
  const Matrix drho =
      Complex(0.0, -1.0) * commutator(b, rt.matrix());
  RealVector p(static_cast<Eigen::Index>(meas.size()));
  RealVector dp(static_cast<Eigen::Index>(meas.size()));
  for (std::size_t i = 0; i < meas.size(); ++i) {
    const Matrix& proj = meas.projectors()[i];
    p(static_cast<Eigen::Index>(i)) = std::max(0.0, expectation(rt, proj));
    dp(static_cast<Eigen::Index>(i)) =
        drho.transpose().cwiseProduct(proj).sum().real();
  }
  double analytic = 0.0;
  for (Eigen::Index i = 0; i < p.size(); ++i) {
    if (p(i) < 1e-12) {
      if (std::abs(dp(i)) > 1e-6) {
        throw std::domain_error(
            "measurement_fisher: probability vanishes with non-vanishing slope");
      }
      continue;
    }
    analytic += dp(i) * dp(i) / p(i);
  }
  const ProbabilityCurve curve =
      evolution_curve(rho, b, meas, theta - 1.0, theta + 1.0);
  const double numeric = classical_fisher(curve, theta, step);
  if (std::abs(analytic - numeric) >
      agreement_tol * std::max(1.0, std::abs(analytic))) {
    throw std::runtime_error(
        "measurement_fisher: analytic and finite-difference routes disagree");
  }
  return analytic;
}

}  // namespace urlab
