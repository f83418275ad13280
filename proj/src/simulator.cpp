#include "drp/simulator.hpp"

#include <algorithm>
#include <cmath>

#include <fmt/core.h>

#include "drp/kernels.hpp"
#include "drp/matrix_form.hpp"

namespace drp {

BlowUpError::BlowUpError(int step, ErrorSeries partial)
    : Error(fmt::format("solution blew up at time step {}", step)), step_(step),
      partial_(std::move(partial))
{
}

std::vector<double> tridiagonal_solve(std::span<const double> sub, std::span<const double> diag,
                                      std::span<const double> sup, std::span<const double> rhs)
{
    const std::size_t n = diag.size();
    if (n == 0 || rhs.size() != n || sub.size() + 1 != n || sup.size() + 1 != n)
        throw DimensionError(fmt::format("tridiagonal_solve: sizes sub={}, diag={}, sup={}, rhs={}",
                                         sub.size(), diag.size(), sup.size(), rhs.size()));
    constexpr double kMinPivot = 1e-14;

    std::vector<double> c_prime(n, 0.0);
    std::vector<double> x(n);
    double pivot = diag[0];
    if (std::abs(pivot) <= kMinPivot) throw SingularError("tridiagonal_solve: vanishing pivot at row 0");
    if (n > 1) c_prime[0] = sup[0] / pivot;
    x[0] = rhs[0] / pivot;

    // Forward sweep
    for (std::size_t i = 1; i < n; ++i) {
        pivot = diag[i] - sub[i - 1] * c_prime[i - 1];
        if (std::abs(pivot) <= kMinPivot)
            throw SingularError(fmt::format("tridiagonal_solve: vanishing pivot at row {}", i));
        if (i + 1 < n) c_prime[i] = sup[i] / pivot;
        x[i] = (rhs[i] - sub[i - 1] * x[i - 1]) / pivot;
    }

    // Back substitution
    for (std::size_t ip = n - 1; ip > 0; --ip) x[ip - 1] -= c_prime[ip - 1] * x[ip];
    return x;
}

ErrorSeries l2_error_series(const GridField& u, const GridField& exact, double h)
{
    if (u.interior.rows() != exact.interior.rows() || u.interior.cols() != exact.interior.cols())
        throw DimensionError("l2_error_series: fields differ in shape");
    ErrorSeries out;
    out.per_step.resize(static_cast<std::size_t>(u.interior.cols()));
    for (long n = 0; n < u.interior.cols(); ++n)
        out.per_step[n] = std::sqrt(h * (u.interior.col(n) - exact.interior.col(n)).squaredNorm());
    out.final = out.per_step.empty() ? 0.0 : out.per_step.back();
    return out;
}

namespace {

bool blown_up(std::span<const double> level)
{
    return std::any_of(level.begin(), level.end(),
                       [](double v) { return !std::isfinite(v) || std::abs(v) > kBlowUpThreshold; });
}

ErrorSeries partial_errors(const GridField& field, const GridField& exact, long levels, double h)
{
    ErrorSeries out;
    for (long n = 0; n < levels; ++n)
        out.per_step.push_back(
            std::sqrt(h * (field.interior.col(n) - exact.interior.col(n)).squaredNorm()));
    out.final = out.per_step.empty() ? 0.0 : out.per_step.back();
    return out;
}

}  // namespace

SimulationRun run(const SimulationConfig& cfg)
{
    const SchemeCoefficients& s = cfg.scheme;
    const Discretization& d = cfg.disc;
    if (d.n_x < 3 || d.n_t < 2 || !(d.h > 0.0) || !(d.tau > 0.0))
        throw PreconditionError("run: invalid discretization");
    if (!std::isfinite(cfg.wave_number)) throw PreconditionError("run: wave number must be finite");
    if (!s.implicit() && s.alpha == 0.0)
        throw SingularError("run: alpha = 0, the new time level cannot be solved for");

    SimulationRun result;
    result.exact = exact_field(cfg.wave_number, d, cfg.amplitude);
    result.field = GridField::zeros(d.n_x, d.n_t);
    result.field.initial_row = result.exact.initial_row;
    result.field.left_boundary = result.exact.left_boundary;
    result.field.right_boundary = result.exact.right_boundary;

    const auto stencil = kernels::Stencil::of(s);
    const std::size_t width = static_cast<std::size_t>(d.n_x) + 1;
    std::vector<double> prev(width, 0.0);
    std::vector<double> cur(result.exact.initial_row.data(), result.exact.initial_row.data() + width);
    std::vector<double> next(width, 0.0);
    std::vector<double> rhs(width, 0.0);

    auto store = [&](int level, const std::vector<double>& values) {
        for (int i = 1; i < d.n_x; ++i) result.field.interior(i - 1, level - 1) = values[i];
    };

    int first = 0;
    if (s.three_level()) {
        result.startup_used = cfg.startup;
        next[0] = result.exact.left_boundary(1);
        next[d.n_x] = result.exact.right_boundary(1);
        if (cfg.startup == Startup::exact_seed) {
            for (int i = 1; i < d.n_x; ++i) next[i] = result.exact.interior(i - 1, 0);
        } else {
            const auto lax = kernels::Stencil::of(preset(Preset::lax, d.h, d.tau, d.c));
            kernels::omp::explicit_step(lax, cur, cur, next);
        }
        store(1, next);
        prev.swap(cur);
        cur.swap(next);
        first = 1;
    }

    const int rows = d.n_x - 1;
    std::vector<double> sub(rows > 1 ? rows - 1 : 0, s.theta);
    std::vector<double> diag(rows, s.alpha);
    std::vector<double> sup(rows > 1 ? rows - 1 : 0, s.zeta);

    for (int n = first; n < d.n_t; ++n) {
        next[0] = result.exact.left_boundary(n + 1);
        next[d.n_x] = result.exact.right_boundary(n + 1);
        if (!s.implicit()) {
            kernels::omp::explicit_step(stencil, prev, cur, next);
        } else {
            kernels::omp::known_terms(stencil, prev, cur, rhs);
            rhs[1] -= s.theta * next[0];
            rhs[rows] -= s.zeta * next[d.n_x];
            std::vector<double> x;
            try {
                x = tridiagonal_solve(sub, diag, sup, std::span<const double>(rhs).subspan(1, rows));
            } catch (const SingularError& e) {
                throw SingularError(fmt::format("time step {}: {}", n + 1, e.what()));
            }
            std::copy(x.begin(), x.end(), next.begin() + 1);
        }
        if (blown_up(next)) throw BlowUpError(n + 1, partial_errors(result.field, result.exact, n, d.h));
        store(n + 1, next);
        prev.swap(cur);
        cur.swap(next);
    }

    result.errors = l2_error_series(result.field, result.exact, d.h);
    return result;
}

}  // namespace drp
