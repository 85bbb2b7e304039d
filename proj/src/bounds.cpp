#include "urlab/bounds.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

#include "urlab/operators.hpp"

namespace urlab {

URReport robertson(const DensityMatrix& rho, const Matrix& a, const Matrix& b,
                   double tolerance) {
  const double comm = commutator_mean(rho, a, b);
  return URReport::make(variance(rho, a) * variance(rho, b),
                        0.25 * comm * comm, tolerance);
}

URReport schroedinger(const DensityMatrix& rho, const Matrix& a,
                      const Matrix& b, double tolerance) {
  const double comm = commutator_mean(rho, a, b);
  const double cov = symmetrized_covariance(rho, a, b);
  return URReport::make(variance(rho, a) * variance(rho, b),
                        0.25 * comm * comm + cov * cov, tolerance);
}

URReport qfi_bound(const DensityMatrix& rho, const Matrix& a, const Matrix& b,
                   double tolerance) {
  const double comm = commutator_mean(rho, a, b);
  return URReport::make(variance(rho, a) * qfi(rho, b), comm * comm,
                        tolerance);
}

URReport cramer_rao_check(const ProbabilityCurve& curve,
                          const RealVector& values, double theta, double step,
                          double tolerance) {
  if (theta - step < curve.lo || theta + step > curve.hi) {
    throw std::domain_error("cramer_rao_check: step leaves the curve domain");
  }
  const RealVector p = curve.evaluate(theta);
  if (p.size() != values.size()) {
    throw std::invalid_argument("cramer_rao_check: one value per outcome");
  }
  const double mean = values.dot(p);
  const double var = values.cwiseProduct(values).dot(p) - mean * mean;
  const auto mean_at = [&](double t) { return values.dot(curve.evaluate(t)); };
  const double coarse = (mean_at(theta + step) - mean_at(theta - step)) / (2.0 * step);
  const double fine =
      (mean_at(theta + 0.5 * step) - mean_at(theta - 0.5 * step)) / step;
  const double slope = (4.0 * fine - coarse) / 3.0;
  const double fisher = classical_fisher(curve, theta, step);
  return URReport::make(std::max(var, 0.0) * fisher, slope * slope, tolerance);
}

FisherChain fisher_chain(const DensityMatrix& rho, const Matrix& b,
                         const ProjectiveMeasurement& meas, double theta,
                         double tolerance) {
  FisherChain chain;
  chain.measured = measurement_fisher(rho, b, meas, theta);
  chain.quantum = qfi(rho, b);
  chain.four_variance = 4.0 * variance(rho, b);
  const double scale =
      std::max({1.0, chain.measured, chain.quantum, chain.four_variance});
  chain.ordered = chain.measured <= chain.quantum + tolerance * scale &&
                  chain.quantum <= chain.four_variance + tolerance * scale;
  return chain;
}

OrthogonalizationResult mandelstam_tamm(const Vector& psi, const Matrix& h,
                                        double t_max_factor,
                                        double overlap_threshold) {
  if (h.rows() != psi.size() || h.cols() != psi.size()) {
    throw std::invalid_argument("mandelstam_tamm: dimension mismatch");
  }
  const double norm = psi.norm();
  if (!(norm > 0.0)) {
    throw std::invalid_argument("mandelstam_tamm: zero vector");
  }
  Eigen::SelfAdjointEigenSolver<Matrix> es(h);
  if (es.info() != Eigen::Success) {
    throw std::runtime_error("mandelstam_tamm: eigensolver failed");
  }
  const Eigen::Index d = psi.size();
  RealVector w(d);
  double e1 = 0.0, e2 = 0.0;
  for (Eigen::Index i = 0; i < d; ++i) {
    w(i) = std::norm(es.eigenvectors().col(i).dot(psi / norm));
    e1 += w(i) * es.eigenvalues()(i);
    e2 += w(i) * es.eigenvalues()(i) * es.eigenvalues()(i);
  }
  const double spread = std::sqrt(std::max(0.0, e2 - e1 * e1));
  double emin = 0.0, emax = 0.0;
  bool first = true;
  for (Eigen::Index i = 0; i < d; ++i) {
    if (w(i) < 1e-15) continue;
    const double e = es.eigenvalues()(i);
    emin = first ? e : std::min(emin, e);
    emax = first ? e : std::max(emax, e);
    first = false;
  }
  const double span = emax - emin;
  if (!(span > 1e-12)) {
    throw std::runtime_error("mandelstam_tamm: stationary state never orthogonalizes");
  }

  // overlap amplitude and its derivative
  const auto amp = [&](double t) {
    Complex z = 0.0;
    for (Eigen::Index i = 0; i < d; ++i) {
      if (w(i) < 1e-300) continue;
      z += w(i) * std::exp(Complex(0.0, -es.eigenvalues()(i) * t));
    }
    return z;
  };
  const auto overlap = [&](double t) { return std::norm(amp(t)); };
  const auto slope = [&](double t) {
    Complex z = 0.0, dz = 0.0;
    for (Eigen::Index i = 0; i < d; ++i) {
      if (w(i) < 1e-300) continue;
      const Complex ph = std::exp(Complex(0.0, -es.eigenvalues()(i) * t));
      z += w(i) * ph;
      dz += Complex(0.0, -es.eigenvalues()(i)) * w(i) * ph;
    }
    return 2.0 * (std::conj(z) * dz).real();
  };

  const double period = 2.0 * std::numbers::pi / span;
  const double dt = period / 256.0;
  const double t_max = t_max_factor * period;
  double prev2 = overlap(0.0), prev1 = overlap(dt);
  for (double t = 2.0 * dt; t <= t_max + dt; t += dt) {
    const double cur = overlap(t);
    if (prev1 <= prev2 && prev1 <= cur && prev1 < 1e-4) {
      // refine the minimum: the overlap slope changes sign across it
      double lo = t - 2.0 * dt, hi = t;
      double slo = slope(lo), shi = slope(hi);
      if (slo <= 0.0 && shi >= 0.0) {
        for (int it = 0; it < 200 && hi - lo > 1e-16 * std::max(1.0, hi); ++it) {
          const double mid = 0.5 * (lo + hi);
          const double smid = slope(mid);
          if (smid < 0.0) {
            lo = mid;
            slo = smid;
          } else {
            hi = mid;
            shi = smid;
          }
        }
        const double t_star = 0.5 * (lo + hi);
        const double f_star = overlap(t_star);
        if (f_star < overlap_threshold) {
          OrthogonalizationResult out;
          out.t_perp = t_star;
          out.overlap_at_t = f_star;
          out.energy_spread = spread;
          out.report = URReport::make(spread * t_star,
                                      0.5 * std::numbers::pi, tol::ur);
          return out;
        }
      }
    }
    prev2 = prev1;
    prev1 = cur;
  }
  throw std::runtime_error("mandelstam_tamm: no orthogonalization found in the scan window");
}

double normalized_qfi_bound(const SymmetricState& state, const Matrix& a) {
  const Vector psi = state.normalized();
  if (a.rows() != psi.size() || a.cols() != psi.size()) {
    throw std::invalid_argument("normalized_qfi_bound: dimension mismatch");
  }
  const Matrix jy = collective_spin(state.n, Axis::y);
  const Vector apsi = a * psi;
  const Vector jpsi = jy * psi;
  const double mean_a = psi.dot(apsi).real();
  const double var_a = apsi.squaredNorm() - mean_a * mean_a;
  if (var_a < 1e-14) {
    throw std::invalid_argument("normalized_qfi_bound: observable is deterministic on this state");
  }
  // <i[A,Jy]> = i(<A Jy> - <Jy A>) = -2 Im <A psi | Jy psi>
  const double comm = -2.0 * apsi.dot(jpsi).imag();
  return comm * comm / (var_a * state.n);
}

}  // namespace urlab
