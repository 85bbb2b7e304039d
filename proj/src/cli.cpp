#include "urlab/cli.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <map>
#include <numbers>
#include <sstream>
#include <stdexcept>

#include <CLI11.hpp>
#include <json.hpp>

#include "urlab/bounds.hpp"
#include "urlab/metrics.hpp"
#include "urlab/operators.hpp"
#include "urlab/optimizer.hpp"
#include "urlab/states.hpp"
#include "urlab/symmetry.hpp"

namespace urlab::cli {

namespace {

constexpr double kSpinTol = 1e-9;      // closed forms limited by roundoff
constexpr double kGaussianTol = 1e-7;  // closed forms limited by truncation

std::string fmt17(double v) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

std::string fmtg(double v) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%g", v);
  return buf;
}

DensityMatrix dephased_qubit(double g) {
  Matrix v(2, 2);
  const double s = 1.0 / std::sqrt(2.0);
  v << s, s, s, -s;  // |+>, |->
  RealVector w(2);
  w << g, 1.0 - g;
  return DensityMatrix::from_spectrum(w, v);
}

DensityMatrix thermal_qubit(double beta) {
  RealVector w(2);
  const double up = std::exp(-0.5 * beta), down = std::exp(0.5 * beta);
  w << up / (up + down), down / (up + down);
  return DensityMatrix::diagonal(w);
}

void dephased_checks(std::vector<CheckResult>& out, double tol) {
  for (int n : {4, 6}) {
    const Matrix jz = collective_spin_full(n, Axis::z);
    for (double g : {0.6, 0.75, 0.9}) {
      const DensityMatrix rho = product_power(dephased_qubit(g), n);
      const double want = (2.0 * g - 1.0) * (2.0 * g - 1.0) * n;
      out.push_back(make_check(
          "dephased qfi n=" + std::to_string(n) + " g=" + fmtg(g), "dephased",
          qfi(rho, jz), want, tol));
    }
  }
}

void thermal_checks(std::vector<CheckResult>& out, double tol) {
  for (double beta : {0.5, 1.0, 2.0}) {
    const double th = std::tanh(0.5 * beta);
    const std::string suffix = " beta=" + fmtg(beta);
    {
      // full product space
      const int n = 6;
      const DensityMatrix rho = product_power(thermal_qubit(beta), n);
      const Matrix jx = collective_spin_full(n, Axis::x);
      const Matrix jy = collective_spin_full(n, Axis::y);
      const double var = variance(rho, jx);
      const double f = qfi(rho, jy);
      const double comm = commutator_mean(rho, jx, jy);
      const std::string tag = " n=6" + suffix;
      out.push_back(make_check("thermal var(Jx)" + tag, "thermal", var,
                               0.25 * n, tol));
      out.push_back(make_check("thermal qfi(Jy)" + tag, "thermal", f,
                               n * th * th, tol));
      out.push_back(make_check("thermal <i[Jx,Jy]>" + tag, "thermal", comm,
                               0.5 * n * th, tol));
      out.push_back(make_check("thermal variance-qfi gap" + tag, "thermal",
                               var * f, comm * comm, tol));
    }
    {
      // one qubit scaled up: variance, information, and mean are additive
      const int n = 10;
      const DensityMatrix rho = thermal_qubit(beta);
      const Matrix sx = 0.5 * pauli(Axis::x);
      const Matrix sy = 0.5 * pauli(Axis::y);
      const double var = n * variance(rho, sx);
      const double f = n * qfi(rho, sy);
      const double comm = n * commutator_mean(rho, sx, sy);
      const std::string tag = " n=10" + suffix;
      out.push_back(make_check("thermal var(Jx)" + tag, "thermal", var,
                               0.25 * n, tol));
      out.push_back(make_check("thermal qfi(Jy)" + tag, "thermal", f,
                               n * th * th, tol));
      out.push_back(make_check("thermal <i[Jx,Jy]>" + tag, "thermal", comm,
                               0.5 * n * th, tol));
      out.push_back(make_check("thermal variance-qfi gap" + tag, "thermal",
                               var * f, comm * comm, tol));
    }
  }
}

void gaussian_checks(std::vector<CheckResult>& out, double tol) {
  for (double beta : {0.5, 1.0, 3.0}) {
    for (double r : {0.0, 0.25, 0.5}) {
      for (double theta : {0.0, std::numbers::pi / 3.0}) {
        for (int displaced : {0, 1}) {
          GaussianSpec spec;
          spec.beta = beta;
          spec.r = r;
          spec.theta = theta;
          spec.alpha = displaced ? Complex(1.0, 0.5) : Complex(0.0, 0.0);
          const GaussianState g = gaussian(spec);
          const Matrix a = quadrature(g.cutoff, 0.5 * theta);
          const Matrix b =
              quadrature(g.cutoff, 0.5 * theta + 0.5 * std::numbers::pi);
          const double var = variance(g.rho, a);
          const double f = qfi(g.rho, b);
          const std::string tag = " beta=" + fmtg(beta) + " r=" + fmtg(r) +
                                  " theta=" + fmtg(theta) +
                                  (displaced ? " alpha=1+0.5i" : " alpha=0");
          out.push_back(make_check("gaussian var*qfi" + tag, "gaussian",
                                   var * f, 1.0, tol));
          if (!displaced) {
            const double coth = 1.0 / std::tanh(0.5 * beta);
            out.push_back(make_check("gaussian var" + tag, "gaussian", var,
                                     0.5 * std::exp(-2.0 * r) * coth, tol));
            out.push_back(make_check("gaussian qfi" + tag, "gaussian", f,
                                     2.0 * std::exp(2.0 * r) *
                                         std::tanh(0.5 * beta),
                                     tol));
          }
        }
      }
    }
  }
}

std::vector<int> parse_int_list(const std::string& arg) {
  std::vector<int> out;
  std::stringstream ss(arg);
  std::string item;
  while (std::getline(ss, item, ',')) {
    std::size_t used = 0;
    int v = 0;
    try {
      v = std::stoi(item, &used);
    } catch (const std::exception&) {
      throw std::invalid_argument("not an integer list: " + arg);
    }
    if (used != item.size()) {
      throw std::invalid_argument("not an integer list: " + arg);
    }
    out.push_back(v);
  }
  if (out.empty()) throw std::invalid_argument("empty integer list");
  return out;
}

std::map<std::string, double> parse_params(const std::string& body) {
  std::map<std::string, double> params;
  if (body.empty()) return params;
  std::stringstream ss(body);
  std::string item;
  while (std::getline(ss, item, ',')) {
    const std::size_t eq = item.find('=');
    if (eq == std::string::npos || eq == 0) {
      throw std::invalid_argument("state spec: expected key=value, got '" +
                                  item + "'");
    }
    const std::string key = item.substr(0, eq);
    const std::string val = item.substr(eq + 1);
    std::size_t used = 0;
    double v = 0.0;
    try {
      v = std::stod(val, &used);
    } catch (const std::exception&) {
      throw std::invalid_argument("state spec: bad value for '" + key + "'");
    }
    if (used != val.size()) {
      throw std::invalid_argument("state spec: bad value for '" + key + "'");
    }
    if (!params.emplace(key, v).second) {
      throw std::invalid_argument("state spec: duplicate key '" + key + "'");
    }
  }
  return params;
}

int param_int(const std::map<std::string, double>& params,
              const std::string& key) {
  const auto it = params.find(key);
  if (it == params.end()) {
    throw std::invalid_argument("state spec: missing '" + key + "'");
  }
  const int v = static_cast<int>(std::lround(it->second));
  if (std::abs(it->second - v) > 1e-9) {
    throw std::invalid_argument("state spec: '" + key + "' must be an integer");
  }
  return v;
}

double param_num(const std::map<std::string, double>& params,
                 const std::string& key, bool required, double fallback = 0.0) {
  const auto it = params.find(key);
  if (it == params.end()) {
    if (required) {
      throw std::invalid_argument("state spec: missing '" + key + "'");
    }
    return fallback;
  }
  return it->second;
}

void reject_unknown(const std::map<std::string, double>& params,
                    std::initializer_list<const char*> known) {
  for (const auto& [key, value] : params) {
    bool ok = false;
    for (const char* k : known) ok = ok || key == k;
    if (!ok) throw std::invalid_argument("state spec: unknown key '" + key + "'");
  }
}

}  // namespace

CheckResult make_check(std::string name, std::string family, double lhs,
                       double rhs, double tolerance) {
  CheckResult c;
  c.name = std::move(name);
  c.family = std::move(family);
  c.lhs = lhs;
  c.rhs = rhs;
  c.gap = lhs - rhs;
  c.tolerance = tolerance;
  const double scale = std::max({1.0, std::abs(lhs), std::abs(rhs)});
  c.pass = std::abs(c.gap) <= tolerance * scale;
  return c;
}

std::vector<CheckResult> example_checks(double tol_override,
                                        const std::string& only) {
  const auto wanted = [&](const char* family) {
    return only.empty() || only == family;
  };
  const auto tol = [&](double fallback) {
    return tol_override > 0.0 ? tol_override : fallback;
  };
  std::vector<CheckResult> out;
  if (wanted("dephased")) dephased_checks(out, tol(kSpinTol));
  if (wanted("thermal")) thermal_checks(out, tol(kSpinTol));
  if (wanted("gaussian")) gaussian_checks(out, tol(kGaussianTol));
  return out;
}

std::string report_json(const std::vector<CheckResult>& checks) {
  nlohmann::ordered_json root;
  root["tolerances"] = {{"hermitian", tol::herm},
                        {"eigenvalue", tol::eig},
                        {"uncertainty", tol::ur}};
  root["hbar"] = 1.0;
  bool all = true;
  nlohmann::ordered_json rows = nlohmann::ordered_json::array();
  for (const CheckResult& c : checks) {
    all = all && c.pass;
    rows.push_back({{"name", c.name},
                    {"family", c.family},
                    {"lhs", c.lhs},
                    {"rhs", c.rhs},
                    {"gap", c.gap},
                    {"tolerance", c.tolerance},
                    {"pass", c.pass}});
  }
  root["checks"] = std::move(rows);
  root["pass"] = all;
  return root.dump(2) + "\n";
}

void write_fig1_csv(std::ostream& out, int n, const std::vector<int>& orders,
                    double mu_min, double mu_max, int points) {
  if (points < 2) throw std::invalid_argument("fig1: need at least 2 points");
  if (!(mu_min > 0.0) || !(mu_max >= mu_min)) {
    throw std::invalid_argument("fig1: need 0 < mu_min <= mu_max");
  }
  std::vector<double> grid(static_cast<std::size_t>(points));
  const double ratio = mu_max / mu_min;
  for (int i = 0; i < points; ++i) {
    grid[static_cast<std::size_t>(i)] =
        mu_min * std::pow(ratio, static_cast<double>(i) / (points - 1));
  }
  const auto rows = opt::fig1_sweep(n, orders, grid);
  out << "mu,nu,qfi_over_n,order,bound_over_n\n";
  for (const auto& row : rows) {
    out << fmt17(row.mu) << ',' << fmt17(row.nu) << ','
        << fmt17(row.qfi_over_n) << ',' << row.order << ','
        << fmt17(row.bound_over_n) << '\n';
  }
}

void write_negativity_csv(std::ostream& out, const std::vector<int>& n_list,
                          double mu) {
  for (int n : n_list) {
    if (n < 3) throw std::invalid_argument("negativity: every n must be >= 3");
  }
  out << "n,k,N_exact,N_eq29,family\n";
  const std::string squeezed_family = "squeezed(mu=" + fmtg(mu) + ")";
  for (int n : n_list) {
    std::vector<int> ks{1};
    if (n / 2 != 1) ks.push_back(n / 2);
    for (int k : ks) {
      const double exact = sym::negativity(sym::reduced_dicke(n, k, 2));
      const double approx = sym::dicke_negativity_approx(n, k);
      out << n << ',' << k << ',' << fmt17(exact) << ',' << fmt17(approx)
          << ",dicke\n";
    }
    const double squeezed =
        sym::negativity(sym::reduce_symmetric(spin_squeezed(n, mu, 0.0), 2));
    out << n << ",-1," << fmt17(squeezed) << ",nan," << squeezed_family
        << '\n';
  }
}

std::string evaluate_bound(const std::string& spec) {
  const std::size_t colon = spec.find(':');
  const std::string head = spec.substr(0, colon);
  const auto params =
      parse_params(colon == std::string::npos ? "" : spec.substr(colon + 1));
  nlohmann::ordered_json j;
  j["state"] = spec;

  if (head == "thermal-jz") {
    reject_unknown(params, {"n", "beta"});
    const int n = param_int(params, "n");
    const double beta = param_num(params, "beta", true);
    if (n < 1 || n > 12) {
      throw std::invalid_argument("thermal-jz: need 1 <= n <= 12");
    }
    const DensityMatrix rho = product_power(thermal_qubit(beta), n);
    const Matrix jx = collective_spin_full(n, Axis::x);
    const Matrix jy = collective_spin_full(n, Axis::y);
    const URReport rep = qfi_bound(rho, jx, jy);
    j["pair"] = "Jx,Jy";
    j["var_a"] = variance(rho, jx);
    j["qfi_b"] = qfi(rho, jy);
    j["mean_i_comm"] = commutator_mean(rho, jx, jy);
    j["lhs"] = rep.lhs;
    j["rhs"] = rep.rhs;
    j["gap"] = rep.gap;
    j["tight"] = rep.tight;
  } else if (head == "dicke") {
    reject_unknown(params, {"n", "k"});
    const int n = param_int(params, "n");
    const int k = param_int(params, "k");
    const SymmetricState state = dicke(n, k);
    const double m = 0.5 * n - k;
    const Matrix a = dicke_optimal_observable(n, m);
    const Matrix jy = collective_spin(n, Axis::y);
    const DensityMatrix rho = DensityMatrix::pure(state.normalized());
    const URReport rep = qfi_bound(rho, a, jy);
    j["pair"] = "optimal quadratic,Jy";
    j["qfi_over_n"] = qfi(rho, jy) / n;
    j["bound_over_n"] = normalized_qfi_bound(state, a);
    j["lhs"] = rep.lhs;
    j["rhs"] = rep.rhs;
    j["gap"] = rep.gap;
    j["tight"] = rep.tight;
  } else if (head == "squeezed") {
    reject_unknown(params, {"n", "mu", "nu", "order"});
    const int n = param_int(params, "n");
    const double mu = param_num(params, "mu", true);
    const bool has_nu = params.count("nu") != 0;
    const double nu = has_nu ? param_num(params, "nu", true)
                             : opt::choose_nu(n, mu);
    const int order =
        params.count("order") ? param_int(params, "order") : 2;
    const SymmetricState state = spin_squeezed(n, mu, nu);
    const auto basis = ansatz_basis(n, order);
    const auto best = opt::best_in_span(state, basis);
    const Matrix jy = collective_spin(n, Axis::y);
    const DensityMatrix rho = DensityMatrix::pure(state.normalized());
    j["pair"] = "span order " + std::to_string(order) + ",Jy";
    j["nu"] = nu;
    j["qfi_over_n"] = qfi(rho, jy) / n;
    j["bound_over_n"] = best.value;
    if (best.value > 0.0) {
      const URReport rep = qfi_bound(rho, best.op, jy);
      j["lhs"] = rep.lhs;
      j["rhs"] = rep.rhs;
      j["gap"] = rep.gap;
      j["tight"] = rep.tight;
    }
  } else if (head == "gaussian") {
    reject_unknown(params, {"beta", "r", "theta", "alpha_re", "alpha_im",
                            "cutoff"});
    GaussianSpec g;
    g.beta = param_num(params, "beta", true);
    g.r = param_num(params, "r", false, 0.0);
    g.theta = param_num(params, "theta", false, 0.0);
    g.alpha = Complex(param_num(params, "alpha_re", false, 0.0),
                      param_num(params, "alpha_im", false, 0.0));
    g.cutoff = params.count("cutoff") ? param_int(params, "cutoff") : 0;
    const GaussianState state = gaussian(g);
    const Matrix a = quadrature(state.cutoff, 0.5 * g.theta);
    const Matrix b =
        quadrature(state.cutoff, 0.5 * g.theta + 0.5 * std::numbers::pi);
    const URReport rep = qfi_bound(state.rho, a, b);
    j["pair"] = "X(theta/2),X(theta/2+pi/2)";
    j["cutoff"] = state.cutoff;
    j["tail_deficit"] = state.tail_deficit;
    j["var_a"] = variance(state.rho, a);
    j["qfi_b"] = qfi(state.rho, b);
    j["lhs"] = rep.lhs;
    j["rhs"] = rep.rhs;
    j["gap"] = rep.gap;
    j["tight"] = rep.tight;
  } else {
    throw std::invalid_argument("unknown state family '" + head + "'");
  }
  return j.dump(2) + "\n";
}

namespace {

// 0 on success, 3 on I/O failure.
template <typename Fn>
int with_stream(const std::string& path, Fn&& fn) {
  if (path.empty()) {
    fn(std::cout);
    std::cout.flush();
    return 0;
  }
  std::ofstream file(path);
  if (!file) {
    std::cerr << "cannot open " << path << "\n";
    return 3;
  }
  fn(file);
  file.flush();
  if (!file) {
    std::cerr << "write failed: " << path << "\n";
    return 3;
  }
  return 0;
}

}  // namespace

int run(int argc, const char* const* argv) {
  CLI::App app{"uncertainty-relation verification toolkit"};
  app.require_subcommand(1);

  auto* verify = app.add_subcommand("verify", "run the closed-form checks");
  double tol_override = -1.0;
  std::string only, verify_out;
  verify->add_option("--tol", tol_override, "tolerance for every check");
  verify->add_option("--only", only,
                     "one family: dephased, thermal, or gaussian");
  verify->add_option("--out", verify_out, "report file (default stdout)");

  auto* fig1 = app.add_subcommand("fig1", "emit the twisting sweep CSV");
  int fig1_n = 100, fig1_points = 50;
  double mu_min = 1e-4, mu_max = 1.0;
  std::string orders_arg = "1,2", fig1_out;
  fig1->add_option("--n", fig1_n, "particle number");
  fig1->add_option("--orders", orders_arg, "comma-separated ansatz orders");
  fig1->add_option("--mu-min", mu_min);
  fig1->add_option("--mu-max", mu_max);
  fig1->add_option("--points", fig1_points, "grid size (log-spaced)");
  fig1->add_option("--out", fig1_out, "output CSV path")->required();

  auto* negativity =
      app.add_subcommand("negativity", "emit the negativity scan CSV");
  std::string n_list_arg, neg_out;
  double neg_mu = 0.5;
  negativity->add_option("--n-list", n_list_arg, "comma-separated n values")
      ->required();
  negativity->add_option("--mu", neg_mu, "twisting angle of the squeezed family");
  negativity->add_option("--out", neg_out, "output CSV path")->required();

  auto* bound = app.add_subcommand("bound", "evaluate one bound");
  std::string spec, bound_out;
  bound->add_option("spec", spec, "state spec, e.g. dicke:n=4,k=2")->required();
  bound->add_option("--out", bound_out, "report file (default stdout)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) return app.exit(e);  // help or version
    std::cerr << e.what() << "\n";
    return 2;
  }

  try {
    if (*verify) {
      if (!only.empty() && only != "dephased" && only != "thermal" &&
          only != "gaussian") {
        std::cerr << "unknown family '" << only << "'\n";
        return 2;
      }
      const auto checks = example_checks(tol_override, only);
      const std::string report = report_json(checks);
      const int rc = with_stream(verify_out,
                                 [&](std::ostream& out) { out << report; });
      if (rc != 0) return rc;
      for (const CheckResult& c : checks) {
        if (!c.pass) return 1;
      }
      return 0;
    }
    if (*fig1) {
      const auto orders = parse_int_list(orders_arg);
      return with_stream(fig1_out, [&](std::ostream& out) {
        write_fig1_csv(out, fig1_n, orders, mu_min, mu_max, fig1_points);
      });
    }
    if (*negativity) {
      const auto ns = parse_int_list(n_list_arg);
      return with_stream(neg_out, [&](std::ostream& out) {
        write_negativity_csv(out, ns, neg_mu);
      });
    }
    if (*bound) {
      const std::string report = evaluate_bound(spec);
      return with_stream(bound_out,
                         [&](std::ostream& out) { out << report; });
    }
  } catch (const std::invalid_argument& e) {
    std::cerr << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << e.what() << "\n";
    return 3;
  }
  return 2;
}

}  // namespace urlab::cli
