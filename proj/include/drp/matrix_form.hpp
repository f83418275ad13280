#pragma once

#include "drp/grid_field.hpp"
#include "drp/scheme.hpp"

// Matrix form of the nine-point scheme on the interior unknowns U = [u_i^n],
// i = 1..n_x-1, n = 1..n_t:
//
//   M1 U + U M2 + L(U) = M0
//
// Column n of the left side is the scheme written at time level n. Column n_t is truncated:
// it has no u^{n_t+1} samples, so only columns 1..n_t-1 reproduce the pointwise scheme.
namespace drp {

struct SylvesterSystem {
    Matrix m1;  // (n_x-1) x (n_x-1): beta on the diagonal, delta above, epsilon below
    Matrix m2;  // n_t x n_t: gamma above the diagonal, alpha below
    Matrix m0;  // (n_x-1) x n_t: initial and Dirichlet data moved to the right side
    SchemeCoefficients scheme;
    Discretization disc;
};

struct ErrorMatrix {
    Matrix entries;
};

/// The four corner-weight shifts making up L.
enum class Shift {
    zeta,      // u_{i+1}^{n+1}
    eta,       // u_{i-1}^{n-1}
    theta,     // u_{i-1}^{n+1}
    vartheta,  // u_{i+1}^{n-1}
};

[[nodiscard]] Matrix build_m1(const SchemeCoefficients& s, int rows);
[[nodiscard]] Matrix build_m2(const SchemeCoefficients& s, int n_t);

/// Right-hand side assembled from the initial row and the boundary columns of `data`.
/// Every stencil reference that falls outside the interior block but inside the sampled
/// grid contributes with a minus sign; references to level n_t + 1 are dropped.
[[nodiscard]] Matrix build_m0(const SchemeCoefficients& s, const GridField& data);

/// Throws DimensionError if `data` does not match `d`.
[[nodiscard]] SylvesterSystem build_system(const SchemeCoefficients& s, const Discretization& d,
                                           const GridField& data);

/// weight * shifted U, keeping only references that stay in the interior block.
[[nodiscard]] Matrix apply_shift(Shift which, double weight, const Matrix& u);

/// L(U) = sum of the four shifts weighted by zeta, eta, theta, vartheta.
[[nodiscard]] Matrix apply_operator_L(const SchemeCoefficients& s, const Matrix& u);
[[nodiscard]] Matrix apply_operator_L(const SchemeCoefficients& s, const GridField& u);

/// M1 U + U M2 + L(U) - M0 with the dense matrices of `sys`.
[[nodiscard]] Matrix matrix_residual(const SylvesterSystem& sys, const GridField& u);

/// The scheme evaluated directly at every (i, n), i = 1..n_x-1, n = 1..n_t-1.
[[nodiscard]] Matrix pointwise_residual(const SchemeCoefficients& s, const GridField& u);

/// Samples amplitude * cos(k (x_i - c t_n)) at x_i = i h, t_n = n tau into every block.
[[nodiscard]] GridField exact_field(double k, const Discretization& d, double amplitude = 1.0);

/// Truncation residual F = M1 U_exact + U_exact M2 + L(U_exact) - M0.
[[nodiscard]] Matrix residual_F(const SylvesterSystem& sys, const GridField& u_exact);

/// E = U - U_exact on the interior. If U satisfies the scheme and shares its data with
/// U_exact, then M1 E + E M2 + L(E) = -F on columns 1..n_t-1.
[[nodiscard]] ErrorMatrix error_matrix(const GridField& u, const GridField& u_exact);

}  // namespace drp
