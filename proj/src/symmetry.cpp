#include "urlab/symmetry.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace urlab::sym {

namespace {

void check_split(int n, int s) {
  if (s < 1 || s >= n) {
    throw std::invalid_argument("symmetric reduction: need 1 <= s < n");
  }
}

}  // namespace

RealVector split_dicke(int n, int k, int s) {
  check_split(n, s);
  if (k < 0 || k > n) throw std::invalid_argument("split_dicke: need 0 <= k <= n");
  RealVector amps = RealVector::Zero(s + 1);
  for (int l = 0; l <= s; ++l) {
    if (k - l < 0 || k - l > n - s) continue;
    amps(l) = std::exp(0.5 * (log_binomial(s, l) + log_binomial(n - s, k - l) -
                              log_binomial(n, k)));
  }
  return amps;
}

ReducedSymmetricState reduce_symmetric(const SymmetricState& state, int s) {
  check_split(state.n, s);
  const Vector c = state.normalized();
  const int n = state.n;
  Matrix rho = Matrix::Zero(s + 1, s + 1);
  for (int l = 0; l <= s; ++l) {
    for (int lp = 0; lp <= s; ++lp) {
      Complex sum = 0.0;
      for (int j = 0; j <= n - s; ++j) {
        const int k = l + j, kp = lp + j;
        if (k > n || kp > n) break;
        const double amp =
            std::exp(0.5 * (log_binomial(s, l) + log_binomial(n - s, j) -
                            log_binomial(n, k)) +
                     0.5 * (log_binomial(s, lp) + log_binomial(n - s, j) -
                            log_binomial(n, kp)));
        sum += c(k) * std::conj(c(kp)) * amp;
      }
      rho(l, lp) = sum;
    }
  }
  return {s, DensityMatrix(rho)};
}

ReducedSymmetricState reduced_squeezed_closed_form(int n, double mu, int s) {
  check_split(n, s);
  Matrix rho(s + 1, s + 1);
  for (int l = 0; l <= s; ++l) {
    for (int lp = 0; lp <= s; ++lp) {
      const double mag =
          std::exp(0.5 * (log_binomial(s, l) + log_binomial(s, lp)) -
                   s * std::numbers::ln2) *
          std::pow(std::cos(0.5 * mu * (l - lp)), n - s);
      rho(l, lp) =
          mag * std::exp(Complex(0.0, -0.5 * mu * (l - lp) * (l + lp - s)));
    }
  }
  return {s, DensityMatrix(rho)};
}

ReducedSymmetricState reduced_dicke(int n, int k, int s) {
  const RealVector amps = split_dicke(n, k, s);
  const RealVector w = amps.cwiseProduct(amps);
  return {s, DensityMatrix::diagonal(w / w.sum())};
}

double negativity(const DensityMatrix& two_qubit_rho) {
  if (two_qubit_rho.dim() != 4) {
    throw std::invalid_argument("negativity: need a two-qubit state");
  }
  const Matrix& rho = two_qubit_rho.matrix();
  Matrix pt(4, 4);
  // index 2i + a: qubit one in i, qubit two in a; transpose qubit two
  for (int i = 0; i < 2; ++i) {
    for (int j = 0; j < 2; ++j) {
      for (int a = 0; a < 2; ++a) {
        for (int b = 0; b < 2; ++b) {
          pt(2 * i + a, 2 * j + b) = rho(2 * i + b, 2 * j + a);
        }
      }
    }
  }
  Eigen::SelfAdjointEigenSolver<Matrix> es(pt);
  if (es.info() != Eigen::Success) {
    throw std::runtime_error("negativity: eigensolver failed");
  }
  double neg = 0.0;
  for (Eigen::Index i = 0; i < 4; ++i) {
    neg += std::max(0.0, -es.eigenvalues()(i));
  }
  return neg;
}

double negativity(const ReducedSymmetricState& reduced) {
  if (reduced.s != 2) {
    throw std::invalid_argument("negativity: reduction must keep two spins");
  }
  // Embed the symmetric (triplet) sector into the two-qubit space.
  Matrix v = Matrix::Zero(4, 3);
  v(0, 0) = 1.0;
  v(1, 1) = v(2, 1) = 1.0 / std::sqrt(2.0);
  v(3, 2) = 1.0;
  return negativity(DensityMatrix(v * reduced.rho.matrix() * v.adjoint()));
}

double dicke_negativity_approx(int n, int k) {
  if (n < 3 || k < 0 || k > n) {
    throw std::invalid_argument("dicke_negativity_approx: need 0 <= k <= n, n >= 3");
  }
  const double kk = static_cast<double>(k) * (n - k);
  return kk / (n * (static_cast<double>(n) * n - 2.0 * kk));
}

}  // namespace urlab::sym
