#pragma once

#include <functional>

#include "urlab/opcore.hpp"

namespace urlab {

// Quantum Fisher information of the family exp(-i B theta) rho exp(i B theta):
//   2 sum_{ij} (q_i - q_j)^2 / (q_i + q_j) |<i|B|j>|^2
// over eigenpairs with q_i + q_j above support_cut. Equals 4 Var(B) on pure
// states; independent of theta.
double qfi(const DensityMatrix& rho, const Matrix& b,
           double support_cut = 1e-12);

// Symmetric logarithmic derivative: in the eigenbasis of rho,
//   L_ij = 2i (q_i - q_j)/(q_i + q_j) B_ij
// and zero on the complement of the support. Tr(rho L^2) equals the QFI.
Matrix sld(const DensityMatrix& rho, const Matrix& b,
           double support_cut = 1e-12);

// exp(-i B theta) rho exp(i B theta); the spectrum is carried over.
DensityMatrix evolve(const DensityMatrix& rho, const Matrix& b, double theta);

// Outcome distribution of a projective measurement; clamped at zero and
// renormalized to absorb roundoff.
RealVector born_probs(const DensityMatrix& rho,
                      const ProjectiveMeasurement& meas);

// A parametric outcome distribution on [lo, hi].
struct ProbabilityCurve {
  std::function<RealVector(double)> evaluate;
  double lo = -1.0;
  double hi = 1.0;
};

// Distribution of `meas` on the state evolved by exp(-i B theta).
ProbabilityCurve evolution_curve(const DensityMatrix& rho, const Matrix& b,
                                 const ProjectiveMeasurement& meas,
                                 double lo = -1.0, double hi = 1.0);

// Classical Fisher information 4 sum_i (d sqrt(p_i)/dtheta)^2 by central
// differences with one Richardson refinement. Outcomes with vanishing
// probability and vanishing derivative drop out; a vanishing probability
// with a non-vanishing sqrt-derivative is a boundary singularity and throws.
double classical_fisher(const ProbabilityCurve& curve, double theta,
                        double step = 1e-5);

// Fisher information of a fixed projective measurement on the evolving
// state. Computed analytically from dp_i = Tr(-i[B, rho_theta] P_i) and
// cross-checked against the finite-difference route; disagreement beyond
// agreement_tol (relative) throws.
double measurement_fisher(const DensityMatrix& rho, const Matrix& b,
                          const ProjectiveMeasurement& meas,
                          double theta = 0.0, double step = 1e-5,
                          double agreement_tol = 1e-6);

}  // namespace urlab
