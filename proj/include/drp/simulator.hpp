#pragma once

#include <optional>
#include <span>
#include <vector>

#include "drp/errors.hpp"
#include "drp/grid_field.hpp"
#include "drp/scheme.hpp"

namespace drp {

/// How u^1 is produced for schemes that read u^{n-1}.
enum class Startup {
    exact_seed,       // u^1 sampled from the travelling wave
    single_step_lax,  // one Lax step from u^0
};

struct SimulationConfig {
    SchemeCoefficients scheme;
    Discretization disc;
    double wave_number = 0.0;
    double amplitude = 1.0;
    Startup startup = Startup::exact_seed;
};

/// per_step[n - 1] = sqrt(h * sum_i (u_i^n - u_exact_i^n)^2) over interior nodes, n = 1..n_t.
struct ErrorSeries {
    std::vector<double> per_step;
    double final = 0.0;
};

struct SimulationRun {
    GridField field;
    GridField exact;
    ErrorSeries errors;
    /// Startup actually used; empty for two-level schemes.
    std::optional<Startup> startup_used;
};

/// Raised when the solution leaves [-1e12, 1e12] or turns non-finite. Carries the time level
/// at which it happened and the error series up to the last good level.
class BlowUpError : public Error {
public:
    BlowUpError(int step, ErrorSeries partial);

    [[nodiscard]] int step() const noexcept { return step_; }
    [[nodiscard]] const ErrorSeries& partial() const noexcept { return partial_; }

private:
    int step_;
    ErrorSeries partial_;
};

inline constexpr double kBlowUpThreshold = 1e12;

/// Thomas algorithm for sub[i-1] x[i-1] + diag[i] x[i] + sup[i] x[i+1] = rhs[i].
/// sub and sup have size n - 1. Throws SingularError when a pivot magnitude drops to 1e-14.
[[nodiscard]] std::vector<double> tridiagonal_solve(std::span<const double> sub,
                                                    std::span<const double> diag,
                                                    std::span<const double> sup,
                                                    std::span<const double> rhs);

[[nodiscard]] ErrorSeries l2_error_series(const GridField& u, const GridField& exact, double h);

/// Advances the scheme n_t steps from the sampled wave with exact Dirichlet data at both ends.
/// Explicit when zeta = theta = 0, otherwise one tridiagonal solve per step.
[[nodiscard]] SimulationRun run(const SimulationConfig& cfg);

}  // namespace drp
