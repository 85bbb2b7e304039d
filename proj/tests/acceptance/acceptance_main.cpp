// Acceptance suite: every criterion prints one PASS/FAIL line; the exit
// code is the number of failed criteria.

#include <cmath>
#include <cstdio>
#include <functional>
#include <numbers>
#include <random>
#include <string>
#include <vector>

#include "reference.hpp"
#include "urlab/bounds.hpp"
#include "urlab/cli.hpp"
#include "urlab/metrics.hpp"
#include "urlab/numeric.hpp"
#include "urlab/operators.hpp"
#include "urlab/optimizer.hpp"
#include "urlab/states.hpp"
#include "urlab/symmetry.hpp"

namespace {

using namespace urlab;

struct Outcome {
  bool ok = true;
  std::string detail;
};

double rel_scale(double a, double b) {
  return std::max({1.0, std::abs(a), std::abs(b)});
}

bool close_rel(double a, double b, double tol) {
  return std::abs(a - b) <= tol * rel_scale(a, b);
}

std::string fmt(double v) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.3g", v);
  return buf;
}

Outcome family_outcome(const std::string& family) {
  Outcome res;
  const auto checks = cli::example_checks(-1.0, family);
  double worst = 0.0;
  int failed = 0;
  for (const auto& c : checks) {
    worst = std::max(worst, std::abs(c.gap) / rel_scale(c.lhs, c.rhs));
    if (!c.pass) ++failed;
  }
  res.ok = failed == 0 && !checks.empty();
  res.detail = std::to_string(checks.size()) + " checks, worst relative gap " +
               fmt(worst);
  if (failed > 0) res.detail += ", " + std::to_string(failed) + " failed";
  return res;
}

Outcome criterion_dephased() { return family_outcome("dephased"); }
Outcome criterion_thermal() { return family_outcome("thermal"); }
Outcome criterion_gaussian() { return family_outcome("gaussian"); }

LadderSystem random_ladder(test::Rng& rng) {
  std::uniform_int_distribution<int> levels(2, 6);
  std::uniform_int_distribution<int> degeneracy(1, 3);
  std::uniform_real_distribution<double> coupling(-1.5, 1.5);
  LadderSystem sys;
  const int m = levels(rng);
  sys.degeneracies.resize(m);
  for (int& d : sys.degeneracies) d = degeneracy(rng);
  sys.raising.resize(m - 1);
  for (int l = 0; l + 1 < m; ++l) {
    const int width =
        std::min(sys.degeneracies[l], sys.degeneracies[l + 1]);
    RealVector c(width);
    for (int i = 0; i < width; ++i) c(i) = coupling(rng);
    sys.raising[l] = c;
  }
  return sys;
}

// A (x) I... + I (x) A... over `copies` factors of dimension d.
Matrix collective_op(const Matrix& a, int copies) {
  const Eigen::Index d = a.rows();
  Matrix total;
  for (int slot = 0; slot < copies; ++slot) {
    Matrix term = Matrix::Identity(1, 1);
    for (int i = 0; i < copies; ++i) {
      term = kron(term, i == slot ? a : Matrix(Matrix::Identity(d, d)));
    }
    total = slot == 0 ? term : Matrix(total + term);
  }
  return total;
}

Outcome criterion_ladder_theorem() {
  Outcome res;
  test::Rng rng(1004);
  double worst = 0.0;
  for (int trial = 0; trial < 100; ++trial) {
    const LadderSystem sys = random_ladder(rng);
    const auto [a_op, b_op] = ladder_pair(sys);
    for (double beta : {0.0, 0.7, 2.0}) {
      const DensityMatrix rho = gibbs(sys, beta);
      const URReport rep = qfi_bound(rho, a_op, b_op, 1e-9);
      const double rel = std::abs(rep.gap) / rel_scale(rep.lhs, rep.rhs);
      worst = std::max(worst, rel);
      if (!rep.tight) {
        res.ok = false;
        res.detail = "single-copy gap " + fmt(rel) + " at beta=" + fmt(beta);
        return res;
      }
    }
  }

  // Collective operators on 2 and 3 copies stay tight.
  double worst_copies = 0.0;
  for (int trial = 0; trial < 10; ++trial) {
    LadderSystem sys = random_ladder(rng);
    while (sys.dim() > 6) sys = random_ladder(rng);
    const auto [a_op, b_op] = ladder_pair(sys);
    for (double beta : {0.7, 2.0}) {
      const DensityMatrix rho = gibbs(sys, beta);
      for (int copies : {2, 3}) {
        const DensityMatrix stacked = product_power(rho, copies);
        const URReport rep = qfi_bound(stacked, collective_op(a_op, copies),
                                       collective_op(b_op, copies), 1e-8);
        const double rel = std::abs(rep.gap) / rel_scale(rep.lhs, rep.rhs);
        worst_copies = std::max(worst_copies, rel);
        if (!rep.tight) {
          res.ok = false;
          res.detail = std::to_string(copies) + " copies gap " + fmt(rel);
          return res;
        }
      }
    }
  }
  res.detail = "300 single-copy gaps <= " + fmt(worst) +
               ", copy gaps <= " + fmt(worst_copies);
  return res;
}

Outcome criterion_fisher_chain() {
  Outcome res;
  test::Rng rng(1005);
  double worst_order = 0.0, worst_opt = 0.0;
  for (int trial = 0; trial < 500; ++trial) {
    const Eigen::Index d = 2 + trial % 7;
    const DensityMatrix rho = test::random_density(d, rng, 1e-3);
    const Matrix b = test::random_hermitian(d, rng);
    const ProjectiveMeasurement meas =
        ProjectiveMeasurement::from_basis(test::random_unitary(d, rng));
    const FisherChain chain = fisher_chain(rho, b, meas, 0.0, 1e-8);
    if (!chain.ordered) {
      res.ok = false;
      res.detail = "ordering violated at trial " + std::to_string(trial);
      return res;
    }
    worst_order = std::max(
        {worst_order, chain.measured - chain.quantum,
         chain.quantum - chain.four_variance});

    // The measurement in the SLD eigenbasis saturates the quantum value.
    const ProjectiveMeasurement optimal =
        ProjectiveMeasurement::of_observable(sld(rho, b));
    const double achieved = measurement_fisher(rho, b, optimal);
    const double f = qfi(rho, b);
    worst_opt = std::max(worst_opt,
                         std::abs(achieved - f) / std::max(1.0, f));
    if (!close_rel(achieved, f, 1e-7)) {
      res.ok = false;
      res.detail = "sld measurement reached " + fmt(achieved) + " of " +
                   fmt(f);
      return res;
    }
  }
  res.detail = "500 chains ordered (max excess " + fmt(worst_order) +
               "), sld gap <= " + fmt(worst_opt);
  return res;
}

Outcome criterion_optimal_observable() {
  Outcome res;
  test::Rng rng(1006);
  double worst = 0.0;
  for (int trial = 0; trial < 200; ++trial) {
    const Eigen::Index d = 2 + trial % 7;
    const DensityMatrix rho = test::random_density(d, rng, 1e-6);
    const Matrix b = test::random_hermitian(d, rng);
    const Matrix l = opt::optimal_observable(rho, b);
    const URReport rep = qfi_bound(rho, l, b, 1e-8);
    const double rel = std::abs(rep.gap) / rel_scale(rep.lhs, rep.rhs);
    worst = std::max(worst, rel);
    if (!rep.tight) {
      res.ok = false;
      res.detail = "equality missed by " + fmt(rel) + " at trial " +
                   std::to_string(trial);
      return res;
    }
  }
  res.detail = "200 saturations, worst relative gap " + fmt(worst);
  return res;
}

Outcome criterion_dicke() {
  Outcome res;
  double worst = 0.0;
  for (int n : {4, 10, 40}) {
    const AnsatzBasis basis = ansatz_basis(n, 2);
    for (int mm = 0; mm <= 2; ++mm) {
      const double m = mm;
      const int k = n / 2 - mm;
      const SymmetricState state = dicke(n, k);
      const double expect =
          4.0 * (n * n / 8.0 + n / 4.0 - m * m / 2.0) / n;
      const double direct =
          normalized_qfi_bound(state, dicke_optimal_observable(n, m));
      const double spanned = opt::best_in_span(state, basis).value;
      worst = std::max({worst,
                        std::abs(direct - expect) / rel_scale(direct, expect),
                        std::abs(spanned - expect) /
                            rel_scale(spanned, expect)});
      if (!close_rel(direct, expect, 1e-9) ||
          !close_rel(spanned, expect, 1e-9)) {
        res.ok = false;
        res.detail = "n=" + std::to_string(n) + " m=" + std::to_string(mm) +
                     ": quadratic " + fmt(direct) + ", span " + fmt(spanned) +
                     ", want " + fmt(expect);
        return res;
      }
    }
  }
  res.detail = "9 saturations at orders-of-magnitude n, worst gap " +
               fmt(worst);
  return res;
}

Outcome criterion_fig1() {
  Outcome res;
  const int n = 100;
  const std::vector<int> orders{1, 2, 3, 4};
  const int points = 50;
  std::vector<double> grid(points);
  const double lo = 1e-4, hi = 1.0;
  for (int i = 0; i < points; ++i) {
    grid[i] = lo * std::pow(hi / lo, static_cast<double>(i) / (points - 1));
  }
  const auto rows = opt::fig1_sweep(n, orders, grid);

  const double knee = std::pow(n, -2.0 / 3.0);
  double linear_low_gap = 0.0;   // (a) small-mu agreement of order 1
  double linear_high_frac = 0.0; // (a) large-mu fraction of order 1
  std::vector<double> best_frac(orders.size(), 1.0);  // (c) min bound/qfi

  for (std::size_t i = 0; i < grid.size(); ++i) {
    const double mu = grid[i];
    double prev = -1.0;
    for (std::size_t j = 0; j < orders.size(); ++j) {
      const auto& row = rows[i * orders.size() + j];
      // (b) pointwise monotone in the ansatz order
      if (row.bound_over_n < prev - 1e-10) {
        res.ok = false;
        res.detail = "order " + std::to_string(orders[j]) +
                     " fell below order " + std::to_string(orders[j - 1]) +
                     " at mu=" + fmt(mu);
        return res;
      }
      prev = row.bound_over_n;
      const double frac = row.bound_over_n / row.qfi_over_n;
      best_frac[j] = std::min(best_frac[j], frac);
      if (j == 0) {
        if (mu <= 0.5 * knee) {
          linear_low_gap = std::max(linear_low_gap, 1.0 - frac);
        }
        if (mu >= 10.0 * knee) {
          linear_high_frac = std::max(linear_high_frac, frac);
        }
      }
    }
  }

  if (linear_low_gap > 0.01) {
    res.ok = false;
    res.detail = "order-1 bound off by " + fmt(linear_low_gap) +
                 " in the linear regime";
    return res;
  }
  if (linear_high_frac >= 0.5) {
    res.ok = false;
    res.detail = "order-1 bound still at " + fmt(linear_high_frac) +
                 " of the information at large twisting";
    return res;
  }
  for (std::size_t j = 0; j < orders.size(); ++j) {
    if (best_frac[j] > 0.99) {
      res.ok = false;
      res.detail = "order " + std::to_string(orders[j]) +
                   " stays tight across the grid";
      return res;
    }
  }
  res.detail = "order-1 linear-regime gap " + fmt(linear_low_gap) +
               ", large-twisting fraction " + fmt(linear_high_frac) +
               ", every order loose somewhere";
  return res;
}

Outcome criterion_reductions() {
  Outcome res;
  double worst_entry = 0.0;
  for (int n : {4, 10, 20, 41, 60}) {
    for (double mu : {0.1, 0.7, 2.0}) {
      const auto direct = sym::reduce_symmetric(spin_squeezed(n, mu, 0.0), 2);
      const auto closed = sym::reduced_squeezed_closed_form(n, mu, 2);
      const double diff = (direct.rho.matrix() - closed.rho.matrix())
                              .cwiseAbs()
                              .maxCoeff();
      worst_entry = std::max(worst_entry, diff);
      if (diff >= 1e-10) {
        res.ok = false;
        res.detail = "closed form off by " + fmt(diff) + " at n=" +
                     std::to_string(n) + " mu=" + fmt(mu);
        return res;
      }
    }
  }

  const double w_exact = (std::sqrt(5.0) - 1.0) / 6.0;
  const double w_neg = sym::negativity(sym::reduced_dicke(3, 1, 2));
  if (std::abs(w_neg - w_exact) > 1e-12) {
    res.ok = false;
    res.detail = "three-qubit pair negativity " + fmt(w_neg);
    return res;
  }
  for (int n : {4, 10, 100}) {
    const double neg = sym::negativity(sym::reduced_dicke(n, n / 2, 2));
    if (std::abs(neg - 1.0 / (2.0 * n - 2.0)) > 1e-12) {
      res.ok = false;
      res.detail = "half-filling negativity off at n=" + std::to_string(n);
      return res;
    }
  }
  for (int k : {1, 25, 50}) {
    const double exact = sym::negativity(sym::reduced_dicke(100, k, 2));
    const double approx = sym::dicke_negativity_approx(100, k);
    if (std::abs(approx - exact) > 0.1 * exact) {
      res.ok = false;
      res.detail = "pair-negativity approximation off at k=" +
                   std::to_string(k) + ": " + fmt(approx) + " vs " +
                   fmt(exact);
      return res;
    }
  }
  double worst_decay = 0.0;
  for (int n : {10, 30, 60}) {
    for (double mu : {0.2, 0.5}) {
      const auto red = sym::reduce_symmetric(spin_squeezed(n, mu, 0.0), 2);
      const double expect =
          std::sqrt(2.0) / 4.0 *
          std::pow(std::cos(mu / 2.0), static_cast<double>(n - 2));
      const double got = std::abs(red.rho.matrix()(0, 1));
      worst_decay = std::max(worst_decay, std::abs(got - expect));
      if (std::abs(got - expect) >= 1e-10) {
        res.ok = false;
        res.detail = "coherence decay off by " + fmt(std::abs(got - expect));
        return res;
      }
    }
  }
  res.detail = "closed forms within " + fmt(worst_entry) +
               ", negativities exact, decay within " + fmt(worst_decay);
  return res;
}

Outcome criterion_classical() {
  Outcome res;
  // Single-qubit rotation, +/-1 outcomes in the x basis: equality.
  Vector plus(2);
  plus << 1.0, 1.0;
  const DensityMatrix pure_plus = DensityMatrix::pure(plus);
  Matrix hadamard(2, 2);
  const double s = 1.0 / std::sqrt(2.0);
  hadamard << s, s, s, -s;
  const ProjectiveMeasurement xbasis =
      ProjectiveMeasurement::from_basis(hadamard);
  const ProbabilityCurve qubit_curve =
      evolution_curve(pure_plus, Matrix(0.5 * pauli(Axis::z)), xbasis);
  RealVector pm(2);
  pm << 1.0, -1.0;
  const URReport qubit_rep = cramer_rao_check(qubit_curve, pm, 0.7, 1e-5, 1e-8);
  if (!qubit_rep.tight) {
    res.ok = false;
    res.detail = "qubit equality missed: gap " + fmt(qubit_rep.gap);
    return res;
  }

  // Estimator values p_dot/p (+ any constant) achieve equality.
  test::Rng rng(1010);
  double worst = 0.0;
  for (int trial = 0; trial < 100; ++trial) {
    const Eigen::Index d = 2 + trial % 5;
    const DensityMatrix rho = test::random_density(d, rng, 1e-2);
    const Matrix b = test::random_hermitian(d, rng);
    const ProjectiveMeasurement meas =
        ProjectiveMeasurement::from_basis(test::random_unitary(d, rng));
    const double theta = 0.3;
    const DensityMatrix at_theta = evolve(rho, b, theta);
    const RealVector p = born_probs(at_theta, meas);
    const Matrix drho =
        Complex(0.0, -1.0) * commutator(b, at_theta.matrix());
    RealVector values(p.size());
    for (Eigen::Index i = 0; i < p.size(); ++i) {
      const double dp = (drho * meas.projectors()[i]).trace().real();
      values(i) = dp / p(i) + 0.25;  // constant offset is irrelevant
    }
    const ProbabilityCurve curve = evolution_curve(rho, b, meas);
    const URReport rep = cramer_rao_check(curve, values, theta, 1e-5, 1e-8);
    const double rel = std::abs(rep.gap) / rel_scale(rep.lhs, rep.rhs);
    worst = std::max(worst, rel);
    if (!rep.tight) {
      res.ok = false;
      res.detail = "parallel estimator missed equality by " + fmt(rel);
      return res;
    }
  }
  res.detail = "qubit gap " + fmt(qubit_rep.gap) +
               ", 100 parallel estimators tight within " + fmt(worst);
  return res;
}

Outcome criterion_orthogonalization() {
  Outcome res;
  Vector plus(2);
  plus << 1.0, 1.0;
  const OrthogonalizationResult qubit =
      mandelstam_tamm(plus, Matrix(0.5 * pauli(Axis::z)));
  if (std::abs(qubit.report.lhs - std::numbers::pi / 2.0) > 1e-10) {
    res.ok = false;
    res.detail = "balanced qubit bound " + fmt(qubit.report.lhs);
    return res;
  }

  test::Rng rng(1011);
  std::uniform_real_distribution<double> scale(0.5, 3.0);
  std::uniform_real_distribution<double> shift(-2.0, 2.0);
  double min_lhs = 1e300;
  for (int trial = 0; trial < 50; ++trial) {
    const Matrix u = test::random_unitary(3, rng);
    RealVector levels(3);
    levels << 0.0, 1.0, 2.0;
    const double a = scale(rng), c = shift(rng);
    const Matrix h = a * (u * levels.cast<Complex>().asDiagonal() *
                          u.adjoint()) +
                     c * Matrix::Identity(3, 3);
    const Vector psi = u * (Vector::Ones(3) / std::sqrt(3.0));
    const OrthogonalizationResult got = mandelstam_tamm(psi, h);
    min_lhs = std::min(min_lhs, got.report.lhs);
    if (got.report.lhs < std::numbers::pi / 2.0 - 1e-9) {
      res.ok = false;
      res.detail = "three-level bound dipped to " + fmt(got.report.lhs);
      return res;
    }
  }
  res.detail = "balanced qubit exact, 50 random three-level bounds >= " +
               fmt(min_lhs);
  return res;
}

Outcome criterion_incompatibility() {
  Outcome res;
  test::Rng rng(1012);
  int information_wins = 0, covariance_wins = 0;
  for (int trial = 0; trial < 10000; ++trial) {
    const DensityMatrix rho = test::random_density(2, rng);
    const Matrix a = test::random_hermitian(2, rng);
    const Matrix b = test::random_hermitian(2, rng);
    const double var_a = variance(rho, a);
    const double var_b = variance(rho, b);
    const double comm = commutator_mean(rho, a, b);
    const double cov = symmetrized_covariance(rho, a, b);
    // (Var(A) F(B) - <i[A,B]>^2) - 4 (Var(A) Var(B) - comm^2/4 - Cov^2)
    const double diff = var_a * qfi(rho, b) - comm * comm -
                        4.0 * (var_a * var_b - 0.25 * comm * comm -
                               cov * cov);
    if (diff > 1e-12) information_wins++;
    if (diff < -1e-12) covariance_wins++;
  }
  res.ok = information_wins > 0 && covariance_wins > 0;
  res.detail = "slack comparison: information side ahead " +
               std::to_string(information_wins) + ", covariance side ahead " +
               std::to_string(covariance_wins) + " of 10000";
  if (!res.ok) res.detail = "one ordering never occurred; " + res.detail;
  return res;
}

}  // namespace

int main() {
  struct Criterion {
    const char* tag;
    std::function<Outcome()> run;
  };
  const std::vector<Criterion> criteria{
      {"examples/dephased", criterion_dephased},
      {"examples/thermal", criterion_thermal},
      {"examples/gaussian", criterion_gaussian},
      {"theorem", criterion_ladder_theorem},
      {"chain", criterion_fisher_chain},
      {"optimal", criterion_optimal_observable},
      {"dicke", criterion_dicke},
      {"fig1", criterion_fig1},
      {"appendixB", criterion_reductions},
      {"classical", criterion_classical},
      {"mandelstam-tamm", criterion_orthogonalization},
      {"incompatibility", criterion_incompatibility},
  };

  int failures = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    Outcome outcome;
    try {
      outcome = criteria[i].run();
    } catch (const std::exception& e) {
      outcome.ok = false;
      outcome.detail = std::string("exception: ") + e.what();
    }
    if (!outcome.ok) ++failures;
    std::printf("%s  criterion %2zu [%s] %s\n", outcome.ok ? "PASS" : "FAIL",
                i + 1, criteria[i].tag, outcome.detail.c_str());
    std::fflush(stdout);
  }
  if (failures > 0) {
    std::printf("%d of %zu criteria failed\n", failures, criteria.size());
  }
  return failures == 0 ? 0 : 1;
}
