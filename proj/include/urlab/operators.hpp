#pragma once

#include <string>
#include <utility>
#include <vector>

#include "urlab/states.hpp"

namespace urlab {

// Conjugate observable pair of a ladder system: A = L+ + L-, B = i(L+ - L-).
// For the harmonic ladder these are the x and p quadratures.
std::pair<Matrix, Matrix> ladder_pair(const LadderSystem& sys);

enum class Axis { x, y, z };

Matrix pauli(Axis axis);

// Collective spin component on the symmetric sector, Dicke basis
// k = 0..n ordered by decreasing magnetic number m = n/2 - k.
Matrix collective_spin(int n, Axis axis);

// The same component on the full 2^n product space (n <= 12).
Matrix collective_spin_full(int n, Axis axis);

Matrix annihilation(int cutoff);

// X_phi = (e^{-i phi} a + e^{i phi} a')/sqrt(2); X_0 = x, X_{pi/2} = p.
Matrix quadrature(int cutoff, double phase);

// Hermitian-orthonormal basis of traceless polynomials in the collective
// spin components up to the given total degree, on the symmetric sector.
struct AnsatzBasis {
  int n = 0;
  int order = 0;
  std::vector<Matrix> elements;       // traceless, unit Hilbert-Schmidt norm
  std::vector<std::string> labels;    // generating word, sym/antisym part
};

AnsatzBasis ansatz_basis(int n, int order);

// Quadratic observable saturating the variance-QFI uncertainty bound with
// generator Jy on the Dicke state of magnetic number m:
//   c {Jx,Jz} - sign(m)(1 - c) Jx,  c = 1/(1 + 2|m|).
// m may be half-integral; 2m must be an integer with |2m| <= n.
Matrix dicke_optimal_observable(int n, double m);

}  // namespace urlab
