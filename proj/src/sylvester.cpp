#include "drp/sylvester.hpp"

#include <cmath>

#include <fmt/core.h>

#include "drp/errors.hpp"
#include "drp/wavenumber.hpp"

namespace drp {

PaperBlockValues paper_block_values(const SchemeCoefficients& s)
{
    const double b = s.beta;
    const double d = s.delta;
    const double e = s.epsilon;
    const double trace = 2.0 * b * b + d * d + e * e;
    // 4b^2 + d^2 + e^2 - 2de = 4b^2 + (d - e)^2 >= 0
    const double root = (d + e) * std::sqrt(4.0 * b * b + (d - e) * (d - e));
    return {{0.5 * (trace - root), 0.5 * (trace + root)},
            {s.alpha * s.alpha, s.gamma * s.gamma}};
}

BlockGramSpectrum block_gram_spectrum(const SchemeCoefficients& s, int n_x, int n_t)
{
    if ((n_x - 1) % 2 != 0 || n_t % 2 != 0 || n_x < 3 || n_t < 2)
        throw PreconditionError(fmt::format(
            "block spectrum multiplicities need even n_x-1 and even n_t (got n_x={}, n_t={})", n_x,
            n_t));
    return {paper_block_values(s), (n_x - 1) / 2, n_t / 2};
}

PartitionedRhs partition_rhs(const Matrix& u1, const Matrix& f, const Matrix& v2, int rank1,
                             int rank2)
{
    if (u1.rows() != f.rows() || u1.cols() != u1.rows() || v2.rows() != f.cols()
        || v2.cols() != v2.rows())
        throw DimensionError(fmt::format("partition_rhs: U1 {}x{}, F {}x{}, V2 {}x{}", u1.rows(),
                                         u1.cols(), f.rows(), f.cols(), v2.rows(), v2.cols()));
    if (rank1 < 0 || rank2 < 0 || rank1 > f.rows() || rank2 > f.cols())
        throw DimensionError(fmt::format("partition_rhs: split ({}, {}) outside {}x{}", rank1,
                                         rank2, f.rows(), f.cols()));

    const Matrix rotated = u1.transpose() * f * v2;
    const long r = f.rows() - rank1;
    const long c = f.cols() - rank2;
    return {rotated.topLeftCorner(rank1, rank2), rotated.topRightCorner(rank1, c),
            rotated.bottomLeftCorner(r, rank2), rotated.bottomRightCorner(r, c)};
}

MinNormPair min_norm_entries(const Vector& m1_diag, const Vector& m2_diag, const Matrix& f11)
{
    if (f11.rows() != m1_diag.size() || f11.cols() != m2_diag.size())
        throw DimensionError(fmt::format("min_norm_entries: F11 is {}x{}, diagonals {} and {}",
                                         f11.rows(), f11.cols(), m1_diag.size(), m2_diag.size()));
    MinNormPair out{Matrix::Zero(f11.rows(), f11.cols()), Matrix::Zero(f11.rows(), f11.cols())};
    for (long j = 0; j < f11.cols(); ++j) {
        for (long i = 0; i < f11.rows(); ++i) {
            const double a = m1_diag(i);
            const double b = m2_diag(j);
            const double denom = a * a + b * b;
            if (denom == 0.0) {
                if (f11(i, j) != 0.0)
                    throw SingularError(fmt::format("infeasible entry ({}, {}): both factors vanish", i, j));
                continue;
            }
            out.m1_part(i, j) = a * f11(i, j) / denom;
            out.m2_part(i, j) = b * f11(i, j) / denom;
        }
    }
    return out;
}

std::pair<Matrix, Matrix> offdiag_blocks(const Vector& m1_diag, const Vector& m2_diag,
                                         const Matrix& f12, const Matrix& f21)
{
    if (f12.rows() != m1_diag.size() || f21.cols() != m2_diag.size())
        throw DimensionError("offdiag_blocks: block sizes do not match the diagonals");
    Matrix e12 = f12;
    Matrix e21 = f21;
    if (f12.cols() > 0)
        for (long i = 0; i < e12.rows(); ++i) {
            if (m1_diag(i) == 0.0) throw SingularError(fmt::format("zero M1 factor at {}", i));
            e12.row(i) /= m1_diag(i);
        }
    if (f21.rows() > 0)
        for (long j = 0; j < e21.cols(); ++j) {
            if (m2_diag(j) == 0.0) throw SingularError(fmt::format("zero M2 factor at {}", j));
            e21.col(j) /= m2_diag(j);
        }
    return {std::move(e12), std::move(e21)};
}

Matrix MinNormSolution::right_rotated() const
{
    const long rows = m1_svd.left.rows();
    const long cols = m2_svd.right.rows();
    Matrix out = Matrix::Zero(rows, cols);
    out.topLeftCorner(rank1, rank2) = leading.m1_part;
    out.topRightCorner(rank1, cols - rank2) = e12;
    return out;
}

Matrix MinNormSolution::left_rotated() const
{
    const long rows = m1_svd.left.rows();
    const long cols = m2_svd.right.rows();
    Matrix out = Matrix::Zero(rows, cols);
    out.topLeftCorner(rank1, rank2) = leading.m2_part;
    out.bottomLeftCorner(rows - rank1, rank2) = e21;
    return out;
}

Matrix MinNormSolution::leading_residual() const
{
    const Vector s1 = m1_svd.singular_values.head(rank1);
    const Vector s2 = m2_svd.singular_values.head(rank2);
    return s1.asDiagonal() * leading.m1_part + leading.m2_part * s2.asDiagonal() - rhs.f11;
}

MinNormSolution min_norm_solve(const Matrix& m1, const Matrix& m2, const Matrix& f,
                               double rank_tol)
{
    if (m1.rows() != m1.cols() || m2.rows() != m2.cols() || f.rows() != m1.rows()
        || f.cols() != m2.rows())
        throw DimensionError(fmt::format("min_norm_solve: M1 {}x{}, M2 {}x{}, F {}x{}", m1.rows(),
                                         m1.cols(), m2.rows(), m2.cols(), f.rows(), f.cols()));
    MinNormSolution sol;
    sol.m1_svd = svd(m1);
    sol.m2_svd = svd(m2);
    sol.rank1 = sol.m1_svd.rank(rank_tol);
    sol.rank2 = sol.m2_svd.rank(rank_tol);
    sol.rhs = partition_rhs(sol.m1_svd.left, f, sol.m2_svd.right, sol.rank1, sol.rank2);

    const Vector s1 = sol.m1_svd.singular_values.head(sol.rank1);
    const Vector s2 = sol.m2_svd.singular_values.head(sol.rank2);
    sol.leading = min_norm_entries(s1, s2, sol.rhs.f11);
    auto [e12, e21] = offdiag_blocks(s1, s2, sol.rhs.f12, sol.rhs.f21);
    sol.e12 = std::move(e12);
    sol.e21 = std::move(e21);
    return sol;
}

double norm_bound(const SchemeCoefficients& s, const Discretization& d, double norm_u_exact,
                  double norm_m0)
{
    const double rows = d.n_x - 1;
    const double cols = d.n_t;
    const double m1_term = std::sqrt(rows / 2.0)
                           * std::sqrt(2.0 * s.beta * s.beta + s.delta * s.delta
                                       + s.epsilon * s.epsilon);
    const double m2_term = std::sqrt(cols / 2.0) * std::sqrt(s.alpha * s.alpha + s.gamma * s.gamma);
    return std::sqrt(cols * rows) * (norm_u_exact * (m1_term + m2_term) + norm_m0);
}

ObjectiveValues objectives(const SchemeCoefficients& s, const Matrix& m0)
{
    return {std::sqrt(2.0 * s.beta * s.beta + s.delta * s.delta + s.epsilon * s.epsilon),
            std::sqrt(s.alpha * s.alpha + s.gamma * s.gamma), m0.norm()};
}

SchemeCoefficients tune_scheme(double h, double tau, DrpSource source)
{
    if (!(tau > 0.0)) throw PreconditionError(fmt::format("tau must be positive (got {})", tau));
    const SpatialCoefficients x =
        source == DrpSource::paper ? paper_drp_closed_form(h) : optimize_drp(h);

    constexpr double kTimeFraction = -0.9;
    SchemeCoefficients s;
    s.alpha_x = 10.0;
    s.beta_x = x.beta_x;
    s.delta_x = x.delta_x;
    s.epsilon_x = x.epsilon_x;
    s.beta_t = kTimeFraction * x.beta_x;
    s.delta_t = kTimeFraction * x.delta_x;
    s.epsilon_t = kTimeFraction * x.epsilon_x;
    s.name = source == DrpSource::paper ? "tuned" : "tuned-oracle";
    return assemble(s);
}

}  // namespace drp
