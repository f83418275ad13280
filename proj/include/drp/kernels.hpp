#pragma once

#include <span>

#include <Eigen/Dense>

#include "drp/scheme.hpp"

// Data-parallel inner loops of the solver. Every kernel exists twice: a plain serial
// reference and an OpenMP version that evaluates the same expression per entry, so the
// two agree bit for bit and the tests compare them with operator==.
namespace drp::kernels {

/// The nine full weights, detached from the split bookkeeping.
struct Stencil {
    double alpha, beta, gamma, delta, epsilon, zeta, eta, theta, vartheta;

    [[nodiscard]] static Stencil of(const SchemeCoefficients& s) noexcept
    {
        return {s.alpha, s.beta, s.gamma, s.delta, s.epsilon, s.zeta, s.eta, s.theta, s.vartheta};
    }
};

/// Below this many entries the OpenMP kernels run on a single thread.
inline constexpr long kParallelThreshold = 4096;

namespace serial {

/// rhs[i] = -(beta cur[i] + gamma prev[i] + delta cur[i+1] + epsilon cur[i-1]
///            + eta prev[i-1] + vartheta prev[i+1]) for i = 1..size-2.
void known_terms(const Stencil& w, std::span<const double> prev, std::span<const double> cur,
                 std::span<double> rhs);

/// next[i] = known_terms[i] / alpha for i = 1..size-2 (zeta = theta = 0 schemes).
void explicit_step(const Stencil& w, std::span<const double> prev, std::span<const double> cur,
                   std::span<double> next);

/// Scheme applied at every (i, n), i = 1..n_x-1, n = 1..n_t-1, of a full
/// (n_x + 1) x (n_t + 1) sample array. `out` is resized to (n_x - 1) x (n_t - 1).
void pointwise_residual(const Stencil& w, const Eigen::MatrixXd& full, Eigen::MatrixXd& out);

/// out = M1 U + U M2 without forming M1 (tridiagonal beta/delta/epsilon) or M2
/// (gamma above, alpha below the diagonal).
void banded_sylvester_apply(const Stencil& w, const Eigen::MatrixXd& u, Eigen::MatrixXd& out);

}  // namespace serial

namespace omp {

void known_terms(const Stencil& w, std::span<const double> prev, std::span<const double> cur,
                 std::span<double> rhs);
void explicit_step(const Stencil& w, std::span<const double> prev, std::span<const double> cur,
                   std::span<double> next);
void pointwise_residual(const Stencil& w, const Eigen::MatrixXd& full, Eigen::MatrixXd& out);
void banded_sylvester_apply(const Stencil& w, const Eigen::MatrixXd& u, Eigen::MatrixXd& out);

}  // namespace omp

}  // namespace drp::kernels
