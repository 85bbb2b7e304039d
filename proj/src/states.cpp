#include "urlab/states.hpp"

#include <cmath>
#include <numbers>
#include <numeric>
#include <stdexcept>

#include "urlab/operators.hpp"

namespace urlab {

void LadderSystem::validate() const {
  if (degeneracies.empty()) {
    throw std::invalid_argument("LadderSystem: no levels");
  }
  for (int d : degeneracies) {
    if (d < 1) throw std::invalid_argument("LadderSystem: degeneracy < 1");
  }
  if (raising.size() + 1 != degeneracies.size()) {
    throw std::invalid_argument("LadderSystem: need one raising block per gap");
  }
  for (std::size_t m = 0; m < raising.size(); ++m) {
    const int width = std::min(degeneracies[m], degeneracies[m + 1]);
    if (raising[m].size() != width) {
      throw std::invalid_argument("LadderSystem: raising block has wrong width");
    }
  }
}

Eigen::Index LadderSystem::dim() const {
  return std::accumulate(degeneracies.begin(), degeneracies.end(),
                         Eigen::Index{0});
}

Eigen::Index LadderSystem::offset(int level) const {
  Eigen::Index off = 0;
  for (int m = 0; m < level; ++m) off += degeneracies[static_cast<std::size_t>(m)];
  return off;
}

Matrix LadderSystem::hamiltonian() const {
  const Eigen::Index d = dim();
  Matrix h = Matrix::Zero(d, d);
  Eigen::Index off = 0;
  for (std::size_t m = 0; m < degeneracies.size(); ++m) {
    for (int a = 0; a < degeneracies[m]; ++a) {
      h(off + a, off + a) = static_cast<double>(m);
    }
    off += degeneracies[m];
  }
  return h;
}

Matrix LadderSystem::raising_op() const {
  validate();
  const Eigen::Index d = dim();
  Matrix up = Matrix::Zero(d, d);
  Eigen::Index off = 0;
  for (std::size_t m = 0; m < raising.size(); ++m) {
    const Eigen::Index next = off + degeneracies[m];
    for (Eigen::Index a = 0; a < raising[m].size(); ++a) {
      up(next + a, off + a) = raising[m](a);
    }
    off = next;
  }
  return up;
}

LadderSystem harmonic_ladder(int levels) {
  if (levels < 2) throw std::invalid_argument("harmonic_ladder: need >= 2 levels");
  LadderSystem sys;
  sys.degeneracies.assign(static_cast<std::size_t>(levels), 1);
  for (int m = 0; m + 1 < levels; ++m) {
    RealVector c(1);
    c(0) = std::sqrt((m + 1) / 2.0);
    sys.raising.push_back(c);
  }
  return sys;
}

DensityMatrix gibbs(const LadderSystem& sys, double beta) {
  sys.validate();
  const Eigen::Index d = sys.dim();
  // Shift exponents so the largest weight is exp(0).
  double emin = 0.0;
  for (std::size_t m = 0; m < sys.degeneracies.size(); ++m) {
    emin = std::min(emin, beta * static_cast<double>(m));
  }
  RealVector w(d);
  Eigen::Index off = 0;
  double z = 0.0;
  for (std::size_t m = 0; m < sys.degeneracies.size(); ++m) {
    const double weight = std::exp(-(beta * static_cast<double>(m) - emin));
    for (int a = 0; a < sys.degeneracies[m]; ++a) w(off + a) = weight;
    z += sys.degeneracies[m] * weight;
    off += sys.degeneracies[m];
  }
  return DensityMatrix::diagonal(w / z);
}

namespace {

int auto_cutoff(const GaussianSpec& spec) {
  const double nbar = 1.0 / std::expm1(spec.beta);
  const double target = 16.0 * std::exp(2.0 * spec.r) * (1.0 + 2.0 * nbar) +
                        8.0 * std::norm(spec.alpha);
  int d = 16;
  while (d < target && d < (1 << 14)) d *= 2;
  return d;
}

}  // namespace

GaussianState gaussian(const GaussianSpec& spec, double deficit_threshold) {
  if (!(spec.beta > 0.0)) {
    throw std::invalid_argument("gaussian: beta must be positive");
  }
  if (spec.r < 0.0) {
    throw std::invalid_argument("gaussian: squeezing magnitude must be >= 0");
  }
  const bool automatic = spec.cutoff == 0;
  int d = automatic ? auto_cutoff(spec) : spec.cutoff;
  if (d < 2) throw std::invalid_argument("gaussian: cutoff too small");

  const double x = std::exp(-spec.beta);
  for (;;) {
    // Thermal weights renormalized on the truncated space.
    RealVector w(d);
    const double lost = std::pow(x, d);
    for (int k = 0; k < d; ++k) {
      w(k) = (1.0 - x) * std::pow(x, k) / (1.0 - lost);
    }

    const Matrix a = annihilation(d);
    const Complex xi = spec.r * std::exp(Complex(0.0, spec.theta));
    const Matrix squeeze_gen =
        0.5 * (std::conj(xi) * (a * a).eval() -
               xi * (a.adjoint() * a.adjoint()).eval());
    const Matrix displace_gen = spec.alpha * a.adjoint() - std::conj(spec.alpha) * a;
    // Both generators are anti-Hermitian; exp(K) = exp(-i (iK)).
    const Matrix u = unitary_exp(Complex(0.0, 1.0) * displace_gen, 1.0) *
                     unitary_exp(Complex(0.0, 1.0) * squeeze_gen, 1.0);

    Matrix rho = u * w.cast<Complex>().asDiagonal() * u.adjoint();
    const int band = std::max(2, d / 16);
    double top = 0.0;
    for (int k = d - band; k < d; ++k) top += rho(k, k).real();
    const double deficit = lost + top;

    if (deficit <= deficit_threshold || !automatic || d >= (1 << 14)) {
      GaussianState out{DensityMatrix::from_parts(std::move(rho), w, u), d,
                        deficit};
      return out;
    }
    d *= 2;
  }
}

void SymmetricState::validate() const {
  if (n < 1) throw std::invalid_argument("SymmetricState: n must be >= 1");
  if (amplitudes.size() != n + 1) {
    throw std::invalid_argument("SymmetricState: need n + 1 amplitudes");
  }
  if (!(amplitudes.norm() > 0.0)) {
    throw std::invalid_argument("SymmetricState: zero vector");
  }
}

Vector SymmetricState::normalized() const {
  validate();
  return amplitudes / amplitudes.norm();
}

SymmetricState dicke(int n, int k) {
  if (n < 1 || k < 0 || k > n) {
    throw std::invalid_argument("dicke: need 0 <= k <= n");
  }
  SymmetricState s;
  s.n = n;
  s.amplitudes = Vector::Zero(n + 1);
  s.amplitudes(k) = 1.0;
  return s;
}

SymmetricState spin_squeezed(int n, double mu, double nu) {
  if (n < 1) throw std::invalid_argument("spin_squeezed: n must be >= 1");
  Vector c(n + 1);
  const double half_log2 = 0.5 * n * std::numbers::ln2;
  for (int k = 0; k <= n; ++k) {
    const double m = 0.5 * n - k;
    const double mag = std::exp(0.5 * log_binomial(n, k) - half_log2);
    c(k) = mag * std::exp(Complex(0.0, -0.5 * mu * m * m));
  }
  if (nu != 0.0) {
    c = (unitary_exp(collective_spin(n, Axis::x), nu) * c).eval();
  }
  SymmetricState s;
  s.n = n;
  s.amplitudes = std::move(c);
  return s;
}

DensityMatrix product_power(const DensityMatrix& rho, int copies) {
  if (copies < 1) throw std::invalid_argument("product_power: copies must be >= 1");
  double total = 1.0;
  for (int i = 0; i < copies; ++i) {
    total *= static_cast<double>(rho.dim());
    if (total > 4096.0) {
      throw std::invalid_argument("product_power: dimension budget exceeded");
    }
  }
  Matrix m = rho.matrix();
  Matrix v = rho.eigenvectors();
  RealVector w = rho.eigenvalues();
  for (int i = 1; i < copies; ++i) {
    m = kron(m, rho.matrix());
    v = kron(v, rho.eigenvectors());
    RealVector wn(w.size() * rho.dim());
    for (Eigen::Index p = 0; p < w.size(); ++p) {
      for (Eigen::Index q = 0; q < rho.dim(); ++q) {
        wn(p * rho.dim() + q) = w(p) * rho.eigenvalues()(q);
      }
    }
    w = std::move(wn);
  }
  return DensityMatrix::from_parts(std::move(m), std::move(w), std::move(v));
}

}  // namespace urlab
