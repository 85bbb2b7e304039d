#pragma once

#include <utility>
#include <vector>

#include "urlab/numeric.hpp"
#include "urlab/tolerances.hpp"

namespace urlab {

// Largest entry of |M - M'| where M' is the conjugate transpose.
double hermiticity_defect(const Matrix& m);

Matrix commutator(const Matrix& a, const Matrix& b);
Matrix anticommutator(const Matrix& a, const Matrix& b);

// Hermitian matrix validated at construction.
class HermitianObservable {
 public:
  explicit HermitianObservable(Matrix m, double tolerance = tol::herm);

  // (M + M')/2, accepted without a tolerance check.
  static HermitianObservable symmetrized(const Matrix& m);

  const Matrix& matrix() const { return m_; }
  Eigen::Index dim() const { return m_.rows(); }

 private:
  struct Trusted {};
  HermitianObservable(Matrix m, Trusted) : m_(std::move(m)) {}
  Matrix m_;
};

// Density matrix with its spectral decomposition. The public constructor
// validates Hermiticity, unit trace, and positivity; eigenvalues in
// [-eig_tol, 0) are clamped to zero and stored in descending order.
// The factory constructors trust the caller-supplied spectrum and are used
// where the decomposition is known analytically.
class DensityMatrix {
 public:
  explicit DensityMatrix(const Matrix& rho, double herm_tol = tol::herm,
                         double eig_tol = tol::eig);

  // |psi><psi|; psi is normalized, the eigenbasis is a unitary completion.
  static DensityMatrix pure(const Vector& psi);

  // Mixture diagonal in the computational basis. Validates the weights.
  static DensityMatrix diagonal(const RealVector& weights);

  // rho = V diag(w) V'. Trusted: no validation beyond shape checks.
  static DensityMatrix from_spectrum(const RealVector& weights,
                                     const Matrix& vectors);

  // Trusted: all three parts supplied, nothing recomputed.
  static DensityMatrix from_parts(Matrix rho, RealVector weights,
                                  Matrix vectors);

  const Matrix& matrix() const { return rho_; }
  Eigen::Index dim() const { return rho_.rows(); }

  // Descending; vectors() columns are matched to them.
  const RealVector& eigenvalues() const { return evals_; }
  const Matrix& eigenvectors() const { return evecs_; }

  double purity() const;
  bool is_pure(double tolerance = tol::eig) const;

 private:
  DensityMatrix() = default;
  Matrix rho_;
  RealVector evals_;
  Matrix evecs_;
};

// Eigenpairs of a density matrix, descending by weight.
std::vector<std::pair<double, Vector>> spectral(const DensityMatrix& rho);

// Tr(rho A) for Hermitian A; O(dim^2).
double expectation(const DensityMatrix& rho, const Matrix& a);

// <A^2> - <A>^2, clamped to zero when roundoff makes it barely negative.
double variance(const DensityMatrix& rho, const Matrix& a);

// <i[A, B]>, real for Hermitian A, B.
double commutator_mean(const DensityMatrix& rho, const Matrix& a,
                       const Matrix& b);

// Cov(A, B) = <{A - <A>, B - <B>}>/2.
double symmetrized_covariance(const DensityMatrix& rho, const Matrix& a,
                              const Matrix& b);

// Complete set of mutually orthogonal projectors.
class ProjectiveMeasurement {
 public:
  explicit ProjectiveMeasurement(std::vector<Matrix> projectors,
                                 double tolerance = tol::eig);

  // Rank-one projectors onto the columns of a unitary.
  static ProjectiveMeasurement from_basis(const Matrix& u,
                                          double tolerance = tol::eig);

  // Eigenprojectors of a Hermitian matrix; eigenvalues closer than
  // degeneracy_tol (relative to the spectral spread) share a projector.
  static ProjectiveMeasurement of_observable(const Matrix& a,
                                             double degeneracy_tol = 1e-8);

  const std::vector<Matrix>& projectors() const { return projectors_; }
  std::size_t size() const { return projectors_.size(); }
  Eigen::Index dim() const;

 private:
  struct Trusted {};
  ProjectiveMeasurement(std::vector<Matrix> projectors, Trusted)
      : projectors_(std::move(projectors)) {}
  std::vector<Matrix> projectors_;
};

// One evaluated inequality lhs >= rhs.
struct URReport {
  double lhs = 0.0;
  double rhs = 0.0;
  double gap = 0.0;  // lhs - rhs
  double tolerance = tol::ur;
  bool holds = false;  // gap >= -tolerance * scale
  bool tight = false;  // |gap| <= tolerance * scale, scale = max(1,|lhs|,|rhs|)

  static URReport make(double lhs, double rhs, double tolerance = tol::ur);
};

}  // namespace urlab
