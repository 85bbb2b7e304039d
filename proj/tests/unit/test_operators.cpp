#include <cmath>
#include <numbers>
#include <set>
#include <stdexcept>

#include "doctest.h"
#include "reference.hpp"
#include "urlab/numeric.hpp"
#include "urlab/operators.hpp"

namespace {

using namespace urlab;

TEST_CASE("collective_spin satisfies the angular momentum algebra") {
  const int n = 5;
  const Matrix jx = collective_spin(n, Axis::x);
  const Matrix jy = collective_spin(n, Axis::y);
  const Matrix jz = collective_spin(n, Axis::z);
  CHECK((commutator(jx, jy) - Complex(0.0, 1.0) * jz).cwiseAbs().maxCoeff() <
        1e-13);
  CHECK((commutator(jy, jz) - Complex(0.0, 1.0) * jx).cwiseAbs().maxCoeff() <
        1e-13);
  const double j = n / 2.0;
  const Matrix casimir = jx * jx + jy * jy + jz * jz;
  CHECK((casimir - j * (j + 1.0) * Matrix::Identity(n + 1, n + 1))
            .cwiseAbs()
            .maxCoeff() < 1e-12);
  // m runs from +j down to -j.
  CHECK(jz(0, 0).real() == doctest::Approx(j));
  CHECK(jz(n, n).real() == doctest::Approx(-j));
}

TEST_CASE("collective_spin agrees with the full product space") {
  const int n = 4;
  for (Axis ax : {Axis::x, Axis::y, Axis::z}) {
    const Matrix sym = collective_spin(n, ax);
    const Matrix full = collective_spin_full(n, ax);
    for (int k = 0; k <= n; ++k) {
      const Vector dk = test::dicke_full(n, k);
      for (int l = 0; l <= n; ++l) {
        const Vector dl = test::dicke_full(n, l);
        const Complex matel = dk.adjoint() * full * dl;
        CHECK(std::abs(matel - sym(k, l)) < 1e-12);
      }
    }
  }
  CHECK_THROWS_AS(collective_spin_full(13, Axis::x), std::invalid_argument);
}

TEST_CASE("annihilation and quadratures satisfy the canonical algebra") {
  const int cutoff = 8;
  const Matrix a = annihilation(cutoff);
  const Matrix comm = commutator(a, Matrix(a.adjoint()));
  // [a, a'] = 1 everywhere except the truncation corner.
  for (int i = 0; i < cutoff - 1; ++i) {
    CHECK(std::abs(comm(i, i) - Complex(1.0, 0.0)) < 1e-14);
  }
  const Matrix x = quadrature(cutoff, 0.0);
  const Matrix p = quadrature(cutoff, std::numbers::pi / 2.0);
  const Matrix xp = commutator(x, p);
  for (int i = 0; i < cutoff - 1; ++i) {
    CHECK(std::abs(xp(i, i) - Complex(0.0, 1.0)) < 1e-14);
  }
  CHECK(hermiticity_defect(x) < 1e-15);
  CHECK(hermiticity_defect(p) < 1e-15);
  CHECK_THROWS_AS(annihilation(1), std::invalid_argument);
}

TEST_CASE("ladder_pair of the harmonic ladder gives the quadratures") {
  const int cutoff = 7;
  const auto [a_op, b_op] = ladder_pair(harmonic_ladder(cutoff));
  CHECK((a_op - quadrature(cutoff, 0.0)).cwiseAbs().maxCoeff() < 1e-14);
  CHECK((b_op - quadrature(cutoff, std::numbers::pi / 2.0))
            .cwiseAbs()
            .maxCoeff() < 1e-14);
}

TEST_CASE("ansatz_basis is orthonormal, traceless, and nested") {
  const int n = 6;
  const AnsatzBasis b2 = ansatz_basis(n, 2);
  const AnsatzBasis b3 = ansatz_basis(n, 3);
  REQUIRE(b2.elements.size() >= 3);
  REQUIRE(b3.elements.size() > b2.elements.size());
  CHECK(b2.labels.size() == b2.elements.size());

  for (std::size_t i = 0; i < b3.elements.size(); ++i) {
    CHECK(std::abs(b3.elements[i].trace()) < 1e-10);
    CHECK(hermiticity_defect(b3.elements[i]) < 1e-12);
    for (std::size_t j = 0; j <= i; ++j) {
      const double overlap =
          (b3.elements[i].adjoint() * b3.elements[j]).trace().real();
      const double expect = (i == j) ? 1.0 : 0.0;
      CHECK(std::abs(overlap - expect) < 1e-10);
    }
  }
  // Lower orders are a prefix of higher orders.
  for (std::size_t i = 0; i < b2.elements.size(); ++i) {
    CHECK((b2.elements[i] - b3.elements[i]).cwiseAbs().maxCoeff() < 1e-12);
    CHECK(b2.labels[i] == b3.labels[i]);
  }
}

TEST_CASE("ansatz_basis collapses degenerate directions on a single spin") {
  // For n = 1 all quadratics reduce to linear combinations of the
  // three spin components, so order 2 keeps exactly three elements.
  const AnsatzBasis b = ansatz_basis(1, 2);
  CHECK(b.elements.size() == 3);
  CHECK_THROWS_AS(ansatz_basis(1, 0), std::invalid_argument);
  CHECK_THROWS_AS(ansatz_basis(1, 7), std::invalid_argument);
}

TEST_CASE("ansatz_basis order one spans the spin components") {
  const int n = 3;
  const AnsatzBasis b = ansatz_basis(n, 1);
  REQUIRE(b.elements.size() == 3);
  const std::set<std::string> labels(b.labels.begin(), b.labels.end());
  CHECK(labels.count("x") == 1);
  CHECK(labels.count("y") == 1);
  CHECK(labels.count("z") == 1);
}

TEST_CASE("dicke_optimal_observable validates the magnetic number") {
  CHECK_THROWS_AS(dicke_optimal_observable(4, 0.3), std::invalid_argument);
  CHECK_THROWS_AS(dicke_optimal_observable(4, 3.0), std::invalid_argument);
  CHECK_THROWS_AS(dicke_optimal_observable(4, 1.5), std::invalid_argument);
  CHECK_NOTHROW(dicke_optimal_observable(5, 1.5));
  CHECK(hermiticity_defect(dicke_optimal_observable(6, 2.0)) < 1e-13);

  // m = 0 keeps only the anticommutator part.
  const Matrix at_zero = dicke_optimal_observable(4, 0.0);
  const Matrix expect = anticommutator(collective_spin(4, Axis::x),
                                       collective_spin(4, Axis::z));
  CHECK((at_zero - expect).cwiseAbs().maxCoeff() < 1e-13);
}

}  // namespace
