#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace urlab::cli {

// One closed-form check: |lhs - rhs| <= tolerance * max(1, |lhs|, |rhs|).
struct CheckResult {
  std::string name;
  std::string family;
  double lhs = 0.0;
  double rhs = 0.0;
  double gap = 0.0;
  double tolerance = 0.0;
  bool pass = false;
};

CheckResult make_check(std::string name, std::string family, double lhs,
                       double rhs, double tolerance);

// The closed-form example suite: families "dephased", "thermal", "gaussian".
// tol_override > 0 replaces every per-check tolerance; `only` filters by
// family (empty keeps everything).
std::vector<CheckResult> example_checks(double tol_override = -1.0,
                                        const std::string& only = "");

// JSON report with the tolerance constants in a header block.
std::string report_json(const std::vector<CheckResult>& checks);

// Twisting sweep: header mu,nu,qfi_over_n,order,bound_over_n, one row per
// (mu, order), mu log-spaced over [mu_min, mu_max].
void write_fig1_csv(std::ostream& out, int n, const std::vector<int>& orders,
                    double mu_min, double mu_max, int points);

// Two-spin negativity scan: header n,k,N_exact,N_eq29,family. Dicke rows
// at k = 1 and k = n/2 (deduplicated), one squeezed row per n at the given
// twisting angle (k = -1 and an empty approximation column).
void write_negativity_csv(std::ostream& out, const std::vector<int>& n_list,
                          double mu);

// One-off bound evaluation from a state-spec string such as
// "thermal-jz:n=10,beta=1", "dicke:n=4,k=2", "squeezed:n=100,mu=0.1",
// "gaussian:beta=1,r=0.5". Returns a JSON object; throws
// std::invalid_argument on a malformed spec.
std::string evaluate_bound(const std::string& spec);

// Entry point behind the executable. Exit codes: 0 success, 1 check
// failure, 2 usage error, 3 I/O error.
int run(int argc, const char* const* argv);

}  // namespace urlab::cli
