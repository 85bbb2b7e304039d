#pragma once

#include <vector>

#include "urlab/bounds.hpp"
#include "urlab/operators.hpp"

namespace urlab::opt {

// Observable saturating Var(A) F_Q(B) >= <i[A,B]>^2 on the given state:
// the symmetric logarithmic derivative of the evolution generated by B.
// Throws when the generator acts trivially on the state support.
Matrix optimal_observable(const DensityMatrix& rho, const Matrix& b);

// Best lower bound on the Jy quantum Fisher information reachable within
// the span of an ansatz basis on a pure symmetric state.
struct SpanOptimum {
  RealVector coefficients;   // one per basis element
  double value = 0.0;        // <i[A,Jy]>^2 / (n Var(A)) at the optimum
  Matrix op;                 // the optimizing observable
};

SpanOptimum best_in_span(const SymmetricState& state,
                         const AnsatzBasis& basis);

// Rotation angle about x that maximizes Var(Jy), hence the Jy quantum
// Fisher information, of the one-axis-twisted state. Returns 0 for the
// rotation-invariant case.
double choose_nu(int n, double mu);

// One row of the twisting sweep: per-particle Fisher information of the
// optimally rotated state and the span bound at the given ansatz order.
struct Fig1Row {
  double mu = 0.0;
  double nu = 0.0;
  double qfi_over_n = 0.0;
  int order = 0;
  double bound_over_n = 0.0;
};

// Rows ordered by mu, then by ansatz order. Parallel over the mu grid.
std::vector<Fig1Row> fig1_sweep(int n, const std::vector<int>& orders,
                                const std::vector<double>& mu_grid);

}  // namespace urlab::opt
