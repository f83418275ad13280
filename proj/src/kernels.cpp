#include "drp/kernels.hpp"

namespace drp::kernels {

namespace {

inline double known(const Stencil& w, const double* prev, const double* cur, long i)
{
    return -(w.beta * cur[i] + w.gamma * prev[i] + w.delta * cur[i + 1] + w.epsilon * cur[i - 1]
             + w.eta * prev[i - 1] + w.vartheta * prev[i + 1]);
}

inline double residual_at(const Stencil& w, const Eigen::MatrixXd& f, long i, long n)
{
    return w.alpha * f(i, n + 1) + w.beta * f(i, n) + w.gamma * f(i, n - 1)
           + w.delta * f(i + 1, n) + w.epsilon * f(i - 1, n) + w.zeta * f(i + 1, n + 1)
           + w.eta * f(i - 1, n - 1) + w.theta * f(i - 1, n + 1) + w.vartheta * f(i + 1, n - 1);
}

inline double banded_at(const Stencil& w, const Eigen::MatrixXd& u, long i, long n)
{
    const long rows = u.rows();
    const long cols = u.cols();
    double v = w.beta * u(i, n);
    if (i + 1 < rows) v += w.delta * u(i + 1, n);
    if (i > 0) v += w.epsilon * u(i - 1, n);
    if (n > 0) v += w.gamma * u(i, n - 1);
    if (n + 1 < cols) v += w.alpha * u(i, n + 1);
    return v;
}

}  // namespace

namespace serial {

void known_terms(const Stencil& w, std::span<const double> prev, std::span<const double> cur,
                 std::span<double> rhs)
{
    const long size = static_cast<long>(cur.size());
    for (long i = 1; i < size - 1; ++i) rhs[i] = known(w, prev.data(), cur.data(), i);
}

void explicit_step(const Stencil& w, std::span<const double> prev, std::span<const double> cur,
                   std::span<double> next)
{
    const long size = static_cast<long>(cur.size());
    for (long i = 1; i < size - 1; ++i) next[i] = known(w, prev.data(), cur.data(), i) / w.alpha;
}

void pointwise_residual(const Stencil& w, const Eigen::MatrixXd& full, Eigen::MatrixXd& out)
{
    const long rows = full.rows() - 2;
    const long cols = full.cols() - 2;
    out.resize(rows, cols);
    for (long n = 1; n <= cols; ++n)
        for (long i = 1; i <= rows; ++i) out(i - 1, n - 1) = residual_at(w, full, i, n);
}

void banded_sylvester_apply(const Stencil& w, const Eigen::MatrixXd& u, Eigen::MatrixXd& out)
{
    out.resize(u.rows(), u.cols());
    for (long n = 0; n < u.cols(); ++n)
        for (long i = 0; i < u.rows(); ++i) out(i, n) = banded_at(w, u, i, n);
}

}  // namespace serial

namespace omp {

void known_terms(const Stencil& w, std::span<const double> prev, std::span<const double> cur,
                 std::span<double> rhs)
{
    const long size = static_cast<long>(cur.size());
    const double* p = prev.data();
    const double* c = cur.data();
    double* r = rhs.data();
    const Stencil s = w;
#pragma omp parallel for if (size >= kParallelThreshold)
    for (long i = 1; i < size - 1; ++i) r[i] = known(s, p, c, i);
}

void explicit_step(const Stencil& w, std::span<const double> prev, std::span<const double> cur,
                   std::span<double> next)
{
    const long size = static_cast<long>(cur.size());
    const double* p = prev.data();
    const double* c = cur.data();
    double* x = next.data();
    const Stencil s = w;
#pragma omp parallel for if (size >= kParallelThreshold)
    for (long i = 1; i < size - 1; ++i) x[i] = known(s, p, c, i) / s.alpha;
}

void pointwise_residual(const Stencil& w, const Eigen::MatrixXd& full, Eigen::MatrixXd& out)
{
    const long rows = full.rows() - 2;
    const long cols = full.cols() - 2;
    out.resize(rows, cols);
#pragma omp parallel for if (rows * cols >= kParallelThreshold)
    for (long n = 1; n <= cols; ++n)
        for (long i = 1; i <= rows; ++i) out(i - 1, n - 1) = residual_at(w, full, i, n);
}

void banded_sylvester_apply(const Stencil& w, const Eigen::MatrixXd& u, Eigen::MatrixXd& out)
{
    out.resize(u.rows(), u.cols());
    const long cols = u.cols();
#pragma omp parallel for if (u.size() >= kParallelThreshold)
    for (long n = 0; n < cols; ++n)
        for (long i = 0; i < u.rows(); ++i) out(i, n) = banded_at(w, u, i, n);
}

}  // namespace omp

}  // namespace drp::kernels
