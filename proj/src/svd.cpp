#include "drp/svd.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <vector>

#include <fmt/core.h>

#include "drp/errors.hpp"

namespace drp {

namespace {

constexpr int kMaxSweeps = 80;
constexpr double kOrthTol = 1e-15;

// Fills columns [first, m) of q with unit vectors orthogonal to all previous columns. Each new
// column comes from the canonical basis vector with the largest component outside the current
// span, which is at least sqrt((m - filled) / m).
void complete_basis(Matrix& q, long first)
{
    const long m = q.rows();
    for (long filled = first; filled < m; ++filled) {
        Vector best;
        double best_norm = -1.0;
        for (long k = 0; k < m; ++k) {
            Vector v = Vector::Unit(m, k);
            for (int pass = 0; pass < 2; ++pass)
                for (long j = 0; j < filled; ++j) v -= q.col(j).dot(v) * q.col(j);
            const double norm = v.norm();
            if (norm > best_norm) {
                best_norm = norm;
                best = std::move(v);
            }
        }
        q.col(filled) = best / best_norm;
    }
}

SvdFactorization tall_svd(const Matrix& a)
{
    const long m = a.rows();
    const long n = a.cols();
    Matrix w = a;
    Matrix v = Matrix::Identity(n, n);

    for (int sweep = 0; sweep < kMaxSweeps; ++sweep) {
        bool rotated = false;
        for (long p = 0; p + 1 < n; ++p) {
            for (long q = p + 1; q < n; ++q) {
                const double app = w.col(p).squaredNorm();
                const double aqq = w.col(q).squaredNorm();
                const double apq = w.col(p).dot(w.col(q));
                if (app == 0.0 || aqq == 0.0) continue;
                if (std::abs(apq) <= kOrthTol * std::sqrt(app * aqq)) continue;

                rotated = true;
                const double zeta = (aqq - app) / (2.0 * apq);
                const double t = std::copysign(1.0, zeta) / (std::abs(zeta) + std::hypot(1.0, zeta));
                const double c = 1.0 / std::hypot(1.0, t);
                const double s = c * t;
                for (long i = 0; i < m; ++i) {
                    const double wp = w(i, p);
                    const double wq = w(i, q);
                    w(i, p) = c * wp - s * wq;
                    w(i, q) = s * wp + c * wq;
                }
                for (long i = 0; i < n; ++i) {
                    const double vp = v(i, p);
                    const double vq = v(i, q);
                    v(i, p) = c * vp - s * vq;
                    v(i, q) = s * vp + c * vq;
                }
            }
        }
        if (!rotated) break;
    }

    Vector norms(n);
    for (long j = 0; j < n; ++j) norms(j) = w.col(j).norm();
    std::vector<long> order(n);
    std::iota(order.begin(), order.end(), 0L);
    std::stable_sort(order.begin(), order.end(), [&](long x, long y) { return norms(x) > norms(y); });

    SvdFactorization out;
    out.singular_values.resize(n);
    out.right.resize(n, n);
    out.left = Matrix::Zero(m, m);
    const double largest = n > 0 ? norms(order[0]) : 0.0;
    const double cutoff = largest * static_cast<double>(std::max(m, n)) * std::numeric_limits<double>::epsilon();

    long kept = 0;
    for (long j = 0; j < n; ++j) {
        const long src = order[j];
        out.singular_values(j) = norms(src);
        out.right.col(j) = v.col(src);
        if (norms(src) > cutoff && norms(src) > 0.0) {
            out.left.col(j) = w.col(src) / norms(src);
            kept = j + 1;
        }
    }
    // Columns beyond the numerical rank carry no information from w.
    complete_basis(out.left, kept);
    return out;
}

}  // namespace

int SvdFactorization::rank(double rtol) const
{
    if (singular_values.size() == 0) return 0;
    const double cutoff = rtol * singular_values(0);
    int r = 0;
    for (long j = 0; j < singular_values.size(); ++j)
        if (singular_values(j) > cutoff && singular_values(j) > 0.0) ++r;
    return r;
}

Matrix SvdFactorization::reconstruct() const
{
    Matrix sigma = Matrix::Zero(left.cols(), right.cols());
    for (long j = 0; j < singular_values.size(); ++j) sigma(j, j) = singular_values(j);
    return left * sigma * right.transpose();
}

SvdFactorization svd(const Matrix& a)
{
    if (!a.allFinite()) throw PreconditionError("svd: matrix has non-finite entries");
    if (a.rows() >= a.cols()) return tall_svd(a);
    SvdFactorization t = tall_svd(a.transpose());
    std::swap(t.left, t.right);
    return t;
}

}  // namespace drp
