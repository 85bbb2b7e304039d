#include "urlab/optimizer.hpp"

#include <cmath>
#include <stdexcept>

#include "urlab/metrics.hpp"
#include "urlab/parallel.hpp"

namespace urlab::opt {

Matrix optimal_observable(const DensityMatrix& rho, const Matrix& b) {
  if (qfi(rho, b) < 1e-12) {
    throw std::runtime_error(
        "optimal_observable: generator acts trivially on the state support");
  }
  return sld(rho, b);
}

SpanOptimum best_in_span(const SymmetricState& state,
                         const AnsatzBasis& basis) {
  if (basis.n != state.n) {
    throw std::invalid_argument("best_in_span: basis built for a different n");
  }
  const Vector psi = state.normalized();
  const Matrix jy = collective_spin(state.n, Axis::y);
  const Vector jpsi = jy * psi;
  const Vector jw = jpsi - psi.dot(jpsi).real() * psi;
  const std::size_t k = basis.elements.size();
  if (k == 0) {
    throw std::invalid_argument("best_in_span: empty basis");
  }

  // Centered action vectors w_a = (G_a - <G_a>) psi: covariances and slopes
  // are sums of products of small residuals, so near-deterministic
  // directions keep full relative accuracy instead of cancelling.
  const Eigen::Index d = psi.size();
  RealMatrix x(2 * d, static_cast<Eigen::Index>(k));
  RealVector v(static_cast<Eigen::Index>(k));
  for (std::size_t a = 0; a < k; ++a) {
    Vector w = basis.elements[a] * psi;
    w -= psi.dot(w).real() * psi;
    const Eigen::Index col = static_cast<Eigen::Index>(a);
    x.col(col).head(d) = w.real();
    x.col(col).tail(d) = w.imag();
    // <i[G_a, Jy]> on a pure state, with both operators centered
    v(col) = -2.0 * w.dot(jw).imag();
  }

  SpanOptimum best;
  best.coefficients = RealVector::Zero(static_cast<Eigen::Index>(k));
  best.op = Matrix::Zero(psi.size(), psi.size());
  if (v.cwiseAbs().maxCoeff() < 1e-12) {
    return best;  // no basis element carries signal on this state
  }

  // The covariance matrix is X'X, so max over coefficients of
  // (c.v)^2 / (c.X'X c) is attained at c = (X'X)^+ v with value v'(X'X)^+ v;
  // working on the singular values of X keeps the rank decision well above
  // the roundoff floor of the formed covariances.
  Eigen::JacobiSVD<RealMatrix> svd(
      x, Eigen::ComputeThinU | Eigen::ComputeThinV);
  const RealVector& sig = svd.singularValues();
  const double cut = sig(0) * 1e-9;
  const RealVector proj = svd.matrixV().transpose() * v;
  RealVector weights = RealVector::Zero(proj.size());
  for (Eigen::Index i = 0; i < proj.size(); ++i) {
    if (sig(i) > cut) {
      best.value += (proj(i) / sig(i)) * (proj(i) / sig(i));
      weights(i) = proj(i) / (sig(i) * sig(i));
    }
  }
  best.value /= state.n;
  best.coefficients = svd.matrixV() * weights;
  for (std::size_t a = 0; a < k; ++a) {
    best.op += best.coefficients(static_cast<Eigen::Index>(a)) *
               basis.elements[a];
  }
  return best;
}

double choose_nu(int n, double mu) {
  const SymmetricState twisted = spin_squeezed(n, mu, 0.0);
  const Vector psi = twisted.normalized();
  const Matrix jy = collective_spin(n, Axis::y);
  const Matrix jz = collective_spin(n, Axis::z);
  const Vector ypsi = jy * psi;
  const Vector zpsi = jz * psi;
  const double my = psi.dot(ypsi).real();
  const double mz = psi.dot(zpsi).real();
  const double var_y = ypsi.squaredNorm() - my * my;
  const double var_z = zpsi.squaredNorm() - mz * mz;
  const double cov = ypsi.dot(zpsi).real() - my * mz;
  // Var(Jy) after rotating by nu about x follows the rotated quadratic form:
  //   M + D cos(2 nu) - C sin(2 nu),
  // with M the mean, D the variance imbalance, C the covariance.
  const double d = 0.5 * (var_y - var_z);
  const double amplitude = std::hypot(d, cov);
  if (amplitude < 1e-14 * std::max(1.0, 0.5 * (var_y + var_z))) {
    return 0.0;
  }
  return 0.5 * std::atan2(-cov, d);
}

std::vector<Fig1Row> fig1_sweep(int n, const std::vector<int>& orders,
                                const std::vector<double>& mu_grid) {
  if (orders.empty() || mu_grid.empty()) {
    throw std::invalid_argument("fig1_sweep: empty grid");
  }
  std::vector<AnsatzBasis> bases;
  bases.reserve(orders.size());
  for (int order : orders) bases.push_back(ansatz_basis(n, order));
  const Matrix jy = collective_spin(n, Axis::y);

  std::vector<Fig1Row> rows(mu_grid.size() * orders.size());
  parallel_for(mu_grid.size(), [&](std::size_t i) {
    const double mu = mu_grid[i];
    const double nu = choose_nu(n, mu);
    const SymmetricState state = spin_squeezed(n, mu, nu);
    const Vector psi = state.normalized();
    const Vector jpsi = jy * psi;
    const double mean = psi.dot(jpsi).real();
    const double q = 4.0 * (jpsi.squaredNorm() - mean * mean);
    for (std::size_t j = 0; j < orders.size(); ++j) {
      Fig1Row& row = rows[i * orders.size() + j];
      row.mu = mu;
      row.nu = nu;
      row.qfi_over_n = q / n;
      row.order = orders[j];
      row.bound_over_n = best_in_span(state, bases[j]).value;
    }
  });
  return rows;
}

}  // namespace urlab::opt
