#include "urlab/operators.hpp"

#include <cmath>
#include <stdexcept>

namespace urlab {

std::pair<Matrix, Matrix> ladder_pair(const LadderSystem& sys) {
  const Matrix up = sys.raising_op();
  const Matrix down = up.adjoint();
  return {up + down, Complex(0.0, 1.0) * (up - down)};
}

Matrix pauli(Axis axis) {
  Matrix s(2, 2);
  switch (axis) {
    case Axis::x:
      s << 0, 1, 1, 0;
      break;
    case Axis::y:
      s << 0, Complex(0, -1), Complex(0, 1), 0;
      break;
    case Axis::z:
      s << 1, 0, 0, -1;
      break;
  }
  return s;
}

Matrix collective_spin(int n, Axis axis) {
  if (n < 1) throw std::invalid_argument("collective_spin: n must be >= 1");
  const int d = n + 1;
  Matrix up = Matrix::Zero(d, d);  // J+ |k> = sqrt(k(n-k+1)) |k-1>
  for (int k = 1; k <= n; ++k) {
    up(k - 1, k) = std::sqrt(static_cast<double>(k) * (n - k + 1));
  }
  switch (axis) {
    case Axis::x:
      return 0.5 * (up + up.adjoint().eval());
    case Axis::y:
      return Complex(0.0, -0.5) * (up - up.adjoint().eval());
    case Axis::z: {
      Matrix jz = Matrix::Zero(d, d);
      for (int k = 0; k <= n; ++k) jz(k, k) = 0.5 * n - k;
      return jz;
    }
  }
  throw std::logic_error("collective_spin: bad axis");
}

Matrix collective_spin_full(int n, Axis axis) {
  if (n < 1 || n > 12) {
    throw std::invalid_argument("collective_spin_full: need 1 <= n <= 12");
  }
  const Matrix half = 0.5 * pauli(axis);
  const Eigen::Index d = Eigen::Index{1} << n;
  Matrix sum = Matrix::Zero(d, d);
  for (int site = 0; site < n; ++site) {
    const Eigen::Index left = Eigen::Index{1} << site;
    const Eigen::Index right = Eigen::Index{1} << (n - 1 - site);
    sum += kron(kron(Matrix::Identity(left, left), half),
                Matrix::Identity(right, right));
  }
  return sum;
}

Matrix annihilation(int cutoff) {
  if (cutoff < 2) throw std::invalid_argument("annihilation: cutoff too small");
  Matrix a = Matrix::Zero(cutoff, cutoff);
  for (int k = 1; k < cutoff; ++k) a(k - 1, k) = std::sqrt(static_cast<double>(k));
  return a;
}

Matrix quadrature(int cutoff, double phase) {
  const Matrix a = annihilation(cutoff);
  const Complex u = std::exp(Complex(0.0, -phase));
  return (u * a + std::conj(u) * a.adjoint()) / std::sqrt(2.0);
}

namespace {

void append_words(int order, std::vector<std::string>& words) {
  std::string alphabet = "xyz";
  for (int len = 1; len <= order; ++len) {
    std::vector<std::string> level(1, std::string());
    for (int pos = 0; pos < len; ++pos) {
      std::vector<std::string> next;
      next.reserve(level.size() * 3);
      for (const std::string& w : level) {
        for (char c : alphabet) next.push_back(w + c);
      }
      level = std::move(next);
    }
    for (std::string& w : level) {
      std::string rev(w.rbegin(), w.rend());
      if (w <= rev) words.push_back(std::move(w));
    }
  }
}

}  // namespace

AnsatzBasis ansatz_basis(int n, int order) {
  if (order < 1 || order > 6) {
    throw std::invalid_argument("ansatz_basis: order must be in [1, 6]");
  }
  const Matrix jx = collective_spin(n, Axis::x);
  const Matrix jy = collective_spin(n, Axis::y);
  const Matrix jz = collective_spin(n, Axis::z);
  const auto spin = [&](char c) -> const Matrix& {
    return c == 'x' ? jx : (c == 'y' ? jy : jz);
  };
  const Eigen::Index d = n + 1;
  const Matrix id = Matrix::Identity(d, d);

  std::vector<std::string> words;
  append_words(order, words);

  AnsatzBasis basis;
  basis.n = n;
  basis.order = order;
  const auto hs = [](const Matrix& a, const Matrix& b) {
    return a.conjugate().cwiseProduct(b).sum();
  };
  const auto push = [&](Matrix m, std::string label) {
    m -= (m.trace() / static_cast<double>(d)) * id;
    double norm = m.norm();
    if (norm < 1e-12) return;
    m /= norm;
    for (const Matrix& e : basis.elements) m -= hs(e, m) * e;
    norm = m.norm();
    if (norm <= 1e-3) return;  // linearly dependent on what we already keep
    basis.elements.push_back(m / norm);
    basis.labels.push_back(std::move(label));
  };

  for (const std::string& w : words) {
    Matrix s = spin(w[0]);
    for (std::size_t i = 1; i < w.size(); ++i) s = (s * spin(w[i])).eval();
    push(0.5 * (s + s.adjoint().eval()), w);
    std::string rev(w.rbegin(), w.rend());
    if (w != rev) {
      push(Complex(0.0, 0.5) * (s - s.adjoint().eval()), "a:" + w);
    }
  }
  return basis;
}

Matrix dicke_optimal_observable(int n, double m) {
  const double two_m = 2.0 * m;
  const long rounded = std::lround(two_m);
  if (std::abs(two_m - static_cast<double>(rounded)) > 1e-9 ||
      std::abs(rounded) > n || ((n - rounded) % 2 != 0)) {
    throw std::invalid_argument("dicke_optimal_observable: m is not a magnetic number of spin n/2");
  }
  const Matrix jx = collective_spin(n, Axis::x);
  const Matrix jz = collective_spin(n, Axis::z);
  const double c = 1.0 / (1.0 + 2.0 * std::abs(m));
  const double sgn = (m > 0) - (m < 0);
  return c * anticommutator(jx, jz) - sgn * (1.0 - c) * jx;
}

}  // namespace urlab
