#pragma once

#include <Eigen/Dense>

namespace drp {

using Matrix = Eigen::MatrixXd;
using Vector = Eigen::VectorXd;

/// Space-time samples u_i^n, i = 0..n_x, n = 0..n_t, split into the unknown interior block
/// and the data that closes it (initial level and Dirichlet columns).
///
/// interior(i - 1, n - 1) = u_i^n for i = 1..n_x-1, n = 1..n_t. Column-major storage makes
/// each time level contiguous.
struct GridField {
    Matrix interior;
    Vector initial_row;     // u_i^0, i = 0..n_x
    Vector left_boundary;   // u_0^n, n = 0..n_t
    Vector right_boundary;  // u_{n_x}^n, n = 0..n_t

    [[nodiscard]] static GridField zeros(int n_x, int n_t);

    [[nodiscard]] int n_x() const noexcept { return static_cast<int>(initial_row.size()) - 1; }
    [[nodiscard]] int n_t() const noexcept { return static_cast<int>(left_boundary.size()) - 1; }

    /// u_i^n read from whichever block holds it.
    [[nodiscard]] double at(int i, int n) const;

    /// Dense (n_x + 1) x (n_t + 1) array of every sample.
    [[nodiscard]] Matrix full() const;

    /// Throws DimensionError on inconsistent sizes and PreconditionError when the corner
    /// samples disagree between the initial row and the boundary columns.
    void validate() const;
};

}  // namespace drp
