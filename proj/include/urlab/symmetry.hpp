#pragma once

#include "urlab/states.hpp"

namespace urlab::sym {

// Schmidt amplitudes of a Dicke state across an s : n-s split; entry l
// pairs l excitations on the small side with k - l on the large side.
RealVector split_dicke(int n, int k, int s);

// Reduced state of s spins, on the symmetric sector basis of the subsystem.
struct ReducedSymmetricState {
  int s = 0;
  DensityMatrix rho;
};

ReducedSymmetricState reduce_symmetric(const SymmetricState& state, int s);

// Closed form of the s-spin reduction of the one-axis-twisted state
// (no rotation): entries
//   2^{-s} sqrt(C(s,l) C(s,l')) e^{-i mu (l-l')(l+l'-s)/2} cos^{n-s}(mu (l-l')/2)
ReducedSymmetricState reduced_squeezed_closed_form(int n, double mu, int s);

// Reduction of a Dicke state: diagonal with hypergeometric weights.
ReducedSymmetricState reduced_dicke(int n, int k, int s);

// Entanglement negativity of a two-qubit state: the absolute sum of the
// negative eigenvalues of the partial transpose.
double negativity(const DensityMatrix& two_qubit_rho);

// The same, for a symmetric two-spin reduction embedded into the
// two-qubit space (the triplet sector).
double negativity(const ReducedSymmetricState& reduced);

// Large-n approximation of the two-spin negativity of a Dicke state:
//   k(n-k) / (n [n^2 - 2k(n-k)])
double dicke_negativity_approx(int n, int k);

}  // namespace urlab::sym
