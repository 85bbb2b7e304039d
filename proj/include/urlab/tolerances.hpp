#pragma once

namespace urlab::tol {

// Hermiticity / trace validation, max-entry norm.
inline constexpr double herm = 1e-12;

// Spectral checks: eigenvalue clamping window, support cutoff q_i + q_j.
inline constexpr double eig = 1e-10;

// Uncertainty-relation tightness threshold, relative to max(1, lhs).
inline constexpr double ur = 1e-9;

}  // namespace urlab::tol
