#pragma once

#include <complex>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace drp {

/// Weights of the nine-point space-time stencil
///
///   alpha u_i^{n+1} + beta u_i^n + gamma u_i^{n-1} + delta u_{i+1}^n + epsilon u_{i-1}^n
///   + zeta u_{i+1}^{n+1} + eta u_{i-1}^{n-1} + theta u_{i-1}^{n+1} + vartheta u_{i+1}^{n-1} = 0
///
/// The first five weights are carried as a sum of a mesh-size part (`_x`) and a
/// time-step part (`_t`). The full weights are only meaningful after assemble().
struct SchemeCoefficients {
    double alpha = 0.0;
    double beta = 0.0;
    double gamma = 0.0;
    double delta = 0.0;
    double epsilon = 0.0;
    double zeta = 0.0;
    double eta = 0.0;
    double theta = 0.0;
    double vartheta = 0.0;

    double alpha_x = 0.0, alpha_t = 0.0;
    double beta_x = 0.0, beta_t = 0.0;
    double gamma_x = 0.0, gamma_t = 0.0;
    double delta_x = 0.0, delta_t = 0.0;
    double epsilon_x = 0.0, epsilon_t = 0.0;

    std::optional<std::string> name;

    /// True when u^{n-1} enters the stencil (gamma, eta or vartheta nonzero).
    [[nodiscard]] bool three_level() const noexcept
    {
        return gamma != 0.0 || eta != 0.0 || vartheta != 0.0;
    }

    /// True when the new time level couples neighbours (zeta or theta nonzero).
    [[nodiscard]] bool implicit() const noexcept { return zeta != 0.0 || theta != 0.0; }

    [[nodiscard]] std::string label() const { return name.value_or("custom"); }
};

/// Recomputes the five split weights from their parts. Idempotent.
[[nodiscard]] SchemeCoefficients assemble(SchemeCoefficients parts);

/// Builds a scheme whose split parts are all in `_x` and whose full weights are the given values.
[[nodiscard]] SchemeCoefficients from_weights(double alpha, double beta, double gamma, double delta,
                                              double epsilon, double zeta = 0.0, double eta = 0.0,
                                              double theta = 0.0, double vartheta = 0.0);

enum class Preset { leapfrog, lax, lax_wendroff, crank_nicolson };

/// Parses "Leapfrog", "Lax", "LaxWendroff" (or "Lax-Wendroff"), "CrankNicolson" (or
/// "Crank-Nicolson"). Throws PreconditionError listing the valid names otherwise.
[[nodiscard]] Preset preset_from_name(std::string_view name);
[[nodiscard]] std::string_view preset_name(Preset p) noexcept;

/// Classical scheme table evaluated at (h, tau). The table is written for unit advection
/// speed; `c` scales the h-dependent terms so that c = 1 reproduces it exactly.
/// Summands containing tau go to the `_t` part, the rest to `_x`.
[[nodiscard]] SchemeCoefficients preset(Preset p, double h, double tau, double c = 1.0);
[[nodiscard]] SchemeCoefficients preset(std::string_view name, double h, double tau, double c = 1.0);

/// Grid geometry. Construct through make_discretization() to get a validated value.
struct Discretization {
    double h = 0.0;
    double tau = 0.0;
    int n_x = 0;
    int n_t = 0;
    double c = 1.0;
    double sigma = 0.0;

    [[nodiscard]] double length() const noexcept { return n_x * h; }
    [[nodiscard]] double horizon() const noexcept { return n_t * tau; }
    [[nodiscard]] int interior_rows() const noexcept { return n_x - 1; }
};

[[nodiscard]] double courant_number(double c, double h, double tau);

/// Validates h, tau > 0, n_x >= 3, n_t >= 2, finite c, and fills sigma = c tau / h.
[[nodiscard]] Discretization make_discretization(double h, double tau, int n_x, int n_t,
                                                 double c = 1.0);

/// Roots g of the von Neumann polynomial a g^2 + b g + c = 0 obtained by substituting
/// u_i^n = g^n e^{j i kappa_h}. Two-level schemes yield the single root -b/a.
struct AmplificationRoots {
    std::vector<std::complex<double>> roots;
    std::vector<int> multiplicity;

    [[nodiscard]] double max_modulus() const noexcept;
};

[[nodiscard]] AmplificationRoots amplification_roots(const SchemeCoefficients& s, double kappa_h);

/// Largest |g| over `samples` modes evenly spaced in [-pi, pi].
[[nodiscard]] double max_amplification(const SchemeCoefficients& s, int samples = 257);

}  // namespace drp
