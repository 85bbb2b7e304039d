#pragma once

#include <vector>

#include "urlab/opcore.hpp"

namespace urlab {

// Equally spaced energy levels m = 0, 1, ... with degenerate sublevels.
// The raising operator connects |m, a> to |m+1, a> with amplitude
// raising[m](a); sublevels beyond min(deg_m, deg_{m+1}) are not connected.
struct LadderSystem {
  std::vector<int> degeneracies;      // one entry per level, each >= 1
  std::vector<RealVector> raising;    // raising[m] has min(deg_m, deg_{m+1}) entries

  void validate() const;
  Eigen::Index dim() const;
  Eigen::Index offset(int level) const;  // basis index of the level's first sublevel
  Matrix hamiltonian() const;            // diag(level index)
  Matrix raising_op() const;
};

// Truncated harmonic oscillator: unit degeneracies, raising amplitudes
// sqrt(m+1)/sqrt(2), so that ladder_pair() yields the x and p quadratures.
LadderSystem harmonic_ladder(int levels);

// exp(-beta H)/Z for the ladder Hamiltonian. beta may be negative.
DensityMatrix gibbs(const LadderSystem& sys, double beta);

// Displaced squeezed thermal state of one bosonic mode, in a truncated
// Fock space. beta > 0 is the thermal inverse temperature, r >= 0 and theta
// the squeezing magnitude and angle, alpha the displacement.
// cutoff = 0 picks the truncation automatically.
struct GaussianSpec {
  double beta = 1.0;
  double r = 0.0;
  double theta = 0.0;
  Complex alpha = 0.0;
  int cutoff = 0;
};

struct GaussianState {
  DensityMatrix rho;
  int cutoff = 0;
  // Thermal weight beyond the cutoff plus population of the top Fock band;
  // measures how much the truncation distorts the state.
  double tail_deficit = 0.0;
};

GaussianState gaussian(const GaussianSpec& spec,
                       double deficit_threshold = 1e-10);

// Pure state of n spin-1/2 particles inside the maximal-spin sector,
// expanded over the Dicke basis. amplitudes(k) multiplies the state with
// k excitations (magnetic quantum number n/2 - k), k = 0..n.
struct SymmetricState {
  int n = 0;
  Vector amplitudes;

  void validate() const;
  Vector normalized() const;
};

// Dicke basis state with k excitations.
SymmetricState dicke(int n, int k);

// One-axis-twisted coherent state, exp(-i nu Jx) exp(-i mu Jz^2 / 2) |+x>.
SymmetricState spin_squeezed(int n, double mu, double nu);

// rho tensored with itself `copies` times. The total dimension
// dim^copies is capped at 4096.
DensityMatrix product_power(const DensityMatrix& rho, int copies);

}  // namespace urlab
