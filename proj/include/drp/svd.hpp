#pragma once

#include "drp/grid_field.hpp"

namespace drp {

/// Full singular value decomposition A = left * diag(singular_values) * right^T.
///
/// `left` is rows x rows and `right` is cols x cols, both orthogonal; singular_values has
/// min(rows, cols) nonincreasing entries.
struct SvdFactorization {
    Matrix left;
    Vector singular_values;
    Matrix right;

    /// Number of singular values above rtol * (largest singular value).
    [[nodiscard]] int rank(double rtol = 1e-12) const;

    /// left * Sigma * right^T with Sigma padded to the original shape.
    [[nodiscard]] Matrix reconstruct() const;
};

/// One-sided Jacobi (Hestenes) SVD. Columns are orthogonalized by plane rotations until
/// every pair satisfies |w_p . w_q| <= 1e-15 |w_p| |w_q|; left singular vectors for null
/// directions are completed by Gram-Schmidt against the canonical basis.
[[nodiscard]] SvdFactorization svd(const Matrix& a);

}  // namespace drp
