#pragma once

#include "urlab/metrics.hpp"
#include "urlab/states.hpp"

namespace urlab {

// Var(A) Var(B) >= <i[A,B]>^2 / 4
URReport robertson(const DensityMatrix& rho, const Matrix& a, const Matrix& b,
                   double tolerance = tol::ur);

// Var(A) Var(B) >= <i[A,B]>^2 / 4 + Cov(A,B)^2
URReport schroedinger(const DensityMatrix& rho, const Matrix& a,
                      const Matrix& b, double tolerance = tol::ur);

// Var(A) F_Q(B) >= <i[A,B]>^2
URReport qfi_bound(const DensityMatrix& rho, const Matrix& a, const Matrix& b,
                   double tolerance = tol::ur);

// Classical Cramer-Rao for the estimator that assigns value(i) to outcome i:
// Var(value) F(theta) >= (d<value>/dtheta)^2.
URReport cramer_rao_check(const ProbabilityCurve& curve,
                          const RealVector& values, double theta,
                          double step = 1e-5, double tolerance = tol::ur);

// F(measurement) <= F_Q <= 4 Var(B).
struct FisherChain {
  double measured = 0.0;
  double quantum = 0.0;
  double four_variance = 0.0;
  bool ordered = false;
};

// theta picks the point on the evolution where the measured Fisher is taken;
// the quantum links are invariant under the evolution generated by b itself.
FisherChain fisher_chain(const DensityMatrix& rho, const Matrix& b,
                         const ProjectiveMeasurement& meas, double theta = 0.0,
                         double tolerance = tol::ur);

// First time the evolved pure state becomes orthogonal to itself, and the
// time-energy bound dH * t_perp >= pi/2 at that time.
struct OrthogonalizationResult {
  double t_perp = 0.0;
  double overlap_at_t = 0.0;  // |<psi|psi(t_perp)>|^2, should be ~0
  double energy_spread = 0.0;
  URReport report;
};

// Scans up to t_max_factor periods of the smallest spectral gap; throws if
// the overlap never drops below overlap_threshold.
OrthogonalizationResult mandelstam_tamm(const Vector& psi, const Matrix& h,
                                        double t_max_factor = 10.0,
                                        double overlap_threshold = 1e-10);

// <i[A,Jy]>^2 / (n Var(A)): the per-particle lower bound on the quantum
// Fisher information of Jy certified by measuring A on a symmetric state.
double normalized_qfi_bound(const SymmetricState& state, const Matrix& a);

}  // namespace urlab
