#include "drp/matrix_form.hpp"

#include <array>
#include <cmath>

#include <fmt/core.h>

#include "drp/errors.hpp"
#include "drp/kernels.hpp"

namespace drp {

namespace {

struct StencilTerm {
    int di;
    int dn;
    double weight;
};

std::array<StencilTerm, 9> stencil_terms(const SchemeCoefficients& s)
{
    return {{{0, 1, s.alpha},
             {0, 0, s.beta},
             {0, -1, s.gamma},
             {1, 0, s.delta},
             {-1, 0, s.epsilon},
             {1, 1, s.zeta},
             {-1, -1, s.eta},
             {-1, 1, s.theta},
             {1, -1, s.vartheta}}};
}

void require_same_shape(const Matrix& a, const Matrix& b, const char* what)
{
    if (a.rows() != b.rows() || a.cols() != b.cols())
        throw DimensionError(fmt::format("{}: {}x{} vs {}x{}", what, a.rows(), a.cols(), b.rows(),
                                         b.cols()));
}

}  // namespace

Matrix build_m1(const SchemeCoefficients& s, int rows)
{
    Matrix m = Matrix::Zero(rows, rows);
    for (int i = 0; i < rows; ++i) {
        m(i, i) = s.beta;
        if (i + 1 < rows) {
            m(i, i + 1) = s.delta;
            m(i + 1, i) = s.epsilon;
        }
    }
    return m;
}

Matrix build_m2(const SchemeCoefficients& s, int n_t)
{
    Matrix m = Matrix::Zero(n_t, n_t);
    for (int k = 0; k + 1 < n_t; ++k) {
        m(k, k + 1) = s.gamma;
        m(k + 1, k) = s.alpha;
    }
    return m;
}

Matrix build_m0(const SchemeCoefficients& s, const GridField& data)
{
    data.validate();
    const int nx = data.n_x();
    const int nt = data.n_t();
    const auto terms = stencil_terms(s);

    Matrix m0 = Matrix::Zero(nx - 1, nt);
    for (int n = 1; n <= nt; ++n) {
        for (int i = 1; i <= nx - 1; ++i) {
            double acc = 0.0;
            for (const auto& t : terms) {
                const int ri = i + t.di;
                const int rn = n + t.dn;
                if (t.weight == 0.0 || rn > nt) continue;
                const bool interior = ri >= 1 && ri <= nx - 1 && rn >= 1;
                if (!interior) acc -= t.weight * data.at(ri, rn);
            }
            m0(i - 1, n - 1) = acc;
        }
    }
    return m0;
}

SylvesterSystem build_system(const SchemeCoefficients& s, const Discretization& d,
                             const GridField& data)
{
    if (d.n_x < 3 || d.n_t < 2)
        throw PreconditionError(fmt::format("need n_x >= 3 and n_t >= 2 (got {}, {})", d.n_x, d.n_t));
    data.validate();
    if (data.n_x() != d.n_x || data.n_t() != d.n_t)
        throw DimensionError(fmt::format("grid data is for n_x={}, n_t={} but discretization has "
                                         "n_x={}, n_t={}",
                                         data.n_x(), data.n_t(), d.n_x, d.n_t));
    return {build_m1(s, d.n_x - 1), build_m2(s, d.n_t), build_m0(s, data), s, d};
}

Matrix apply_shift(Shift which, double weight, const Matrix& u)
{
    const long rows = u.rows();
    const long cols = u.cols();
    Matrix out = Matrix::Zero(rows, cols);
    if (weight == 0.0) return out;

    int di = 0;
    int dn = 0;
    switch (which) {
    case Shift::zeta: di = 1, dn = 1; break;
    case Shift::eta: di = -1, dn = -1; break;
    case Shift::theta: di = -1, dn = 1; break;
    case Shift::vartheta: di = 1, dn = -1; break;
    }
    for (long n = 0; n < cols; ++n) {
        const long rn = n + dn;
        if (rn < 0 || rn >= cols) continue;
        for (long i = 0; i < rows; ++i) {
            const long ri = i + di;
            if (ri < 0 || ri >= rows) continue;
            out(i, n) = weight * u(ri, rn);
        }
    }
    return out;
}

Matrix apply_operator_L(const SchemeCoefficients& s, const Matrix& u)
{
    return apply_shift(Shift::zeta, s.zeta, u) + apply_shift(Shift::eta, s.eta, u)
           + apply_shift(Shift::theta, s.theta, u) + apply_shift(Shift::vartheta, s.vartheta, u);
}

Matrix apply_operator_L(const SchemeCoefficients& s, const GridField& u)
{
    return apply_operator_L(s, u.interior);
}

Matrix matrix_residual(const SylvesterSystem& sys, const GridField& u)
{
    u.validate();
    if (u.interior.rows() != sys.m1.rows() || u.interior.cols() != sys.m2.rows())
        throw DimensionError(fmt::format("field interior {}x{} does not match system {}x{}",
                                         u.interior.rows(), u.interior.cols(), sys.m1.rows(),
                                         sys.m2.rows()));
    return sys.m1 * u.interior + u.interior * sys.m2 + apply_operator_L(sys.scheme, u.interior)
           - sys.m0;
}

Matrix pointwise_residual(const SchemeCoefficients& s, const GridField& u)
{
    u.validate();
    Matrix out;
    kernels::omp::pointwise_residual(kernels::Stencil::of(s), u.full(), out);
    return out;
}

GridField exact_field(double k, const Discretization& d, double amplitude)
{
    auto sample = [&](int i, int n) {
        const double x = i * d.h;
        const double t = n * d.tau;
        return amplitude * std::cos(k * (x - d.c * t));
    };

    GridField g = GridField::zeros(d.n_x, d.n_t);
    for (int i = 0; i <= d.n_x; ++i) g.initial_row(i) = sample(i, 0);
    for (int n = 0; n <= d.n_t; ++n) {
        g.left_boundary(n) = sample(0, n);
        g.right_boundary(n) = sample(d.n_x, n);
    }
    for (int n = 1; n <= d.n_t; ++n)
        for (int i = 1; i < d.n_x; ++i) g.interior(i - 1, n - 1) = sample(i, n);
    return g;
}

Matrix residual_F(const SylvesterSystem& sys, const GridField& u_exact)
{
    return matrix_residual(sys, u_exact);
}

ErrorMatrix error_matrix(const GridField& u, const GridField& u_exact)
{
    require_same_shape(u.interior, u_exact.interior, "error_matrix");
    return {u.interior - u_exact.interior};
}

}  // namespace drp
