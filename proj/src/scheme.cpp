#include "drp/scheme.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include <fmt/core.h>

#include "drp/errors.hpp"

namespace drp {

SchemeCoefficients assemble(SchemeCoefficients parts)
{
    parts.alpha = parts.alpha_x + parts.alpha_t;
    parts.beta = parts.beta_x + parts.beta_t;
    parts.gamma = parts.gamma_x + parts.gamma_t;
    parts.delta = parts.delta_x + parts.delta_t;
    parts.epsilon = parts.epsilon_x + parts.epsilon_t;
    return parts;
}

SchemeCoefficients from_weights(double alpha, double beta, double gamma, double delta,
                                double epsilon, double zeta, double eta, double theta,
                                double vartheta)
{
    SchemeCoefficients s;
    s.alpha_x = alpha;
    s.beta_x = beta;
    s.gamma_x = gamma;
    s.delta_x = delta;
    s.epsilon_x = epsilon;
    s.zeta = zeta;
    s.eta = eta;
    s.theta = theta;
    s.vartheta = vartheta;
    return assemble(s);
}

Preset preset_from_name(std::string_view name)
{
    if (name == "Leapfrog") return Preset::leapfrog;
    if (name == "Lax") return Preset::lax;
    if (name == "LaxWendroff" || name == "Lax-Wendroff") return Preset::lax_wendroff;
    if (name == "CrankNicolson" || name == "Crank-Nicolson") return Preset::crank_nicolson;
    throw PreconditionError(fmt::format(
        "unknown scheme preset '{}' (valid: Leapfrog, Lax, LaxWendroff, CrankNicolson)", name));
}

std::string_view preset_name(Preset p) noexcept
{
    switch (p) {
    case Preset::leapfrog: return "Leapfrog";
    case Preset::lax: return "Lax";
    case Preset::lax_wendroff: return "LaxWendroff";
    case Preset::crank_nicolson: return "CrankNicolson";
    }
    return "unknown";
}

SchemeCoefficients preset(Preset p, double h, double tau, double c)
{
    if (!(h > 0.0) || !(tau > 0.0))
        throw PreconditionError(fmt::format("preset requires h > 0 and tau > 0 (h={}, tau={})", h, tau));

    SchemeCoefficients s;
    switch (p) {
    case Preset::leapfrog:
        s.alpha_t = 1.0 / (2.0 * tau);
        s.gamma_t = -1.0 / (2.0 * tau);
        s.delta_x = c / (2.0 * h);
        s.epsilon_x = -c / (2.0 * h);
        break;
    case Preset::lax:
        s.alpha_t = 1.0 / tau;
        s.delta_x = c / (2.0 * h);
        s.delta_t = -1.0 / (2.0 * tau);
        s.epsilon_x = -c / (2.0 * h);
        s.epsilon_t = -1.0 / (2.0 * tau);
        break;
    case Preset::lax_wendroff: {
        // sigma / (2h) with sigma = c tau / h
        const double diffusive = c * c * tau / (2.0 * h * h);
        s.alpha_t = 1.0 / tau;
        s.beta_t = c * c * tau / (h * h) - 1.0 / tau;
        s.delta_x = c / (2.0 * h);
        s.delta_t = -diffusive;
        s.epsilon_x = -c / (2.0 * h);
        s.epsilon_t = -diffusive;
        break;
    }
    case Preset::crank_nicolson: {
        // Row kept as tabulated: zeta = vartheta = 0, eta = theta = -1/h^2, no c dependence.
        const double inv_h2 = 1.0 / (h * h);
        s.alpha_x = inv_h2;
        s.alpha_t = 1.0 / tau;
        s.beta_x = inv_h2;
        s.beta_t = -1.0 / tau;
        s.delta_x = -inv_h2;
        s.epsilon_x = -inv_h2;
        s.eta = -inv_h2;
        s.theta = -inv_h2;
        break;
    }
    }
    s.name = std::string(preset_name(p));
    return assemble(s);
}

SchemeCoefficients preset(std::string_view name, double h, double tau, double c)
{
    return preset(preset_from_name(name), h, tau, c);
}

double courant_number(double c, double h, double tau)
{
    return c * tau / h;
}

Discretization make_discretization(double h, double tau, int n_x, int n_t, double c)
{
    if (!(h > 0.0) || !std::isfinite(h))
        throw PreconditionError(fmt::format("mesh size h must be positive and finite (got {})", h));
    if (!(tau > 0.0) || !std::isfinite(tau))
        throw PreconditionError(fmt::format("time step tau must be positive and finite (got {})", tau));
    if (n_x < 3) throw PreconditionError(fmt::format("n_x must be >= 3 (got {})", n_x));
    if (n_t < 2) throw PreconditionError(fmt::format("n_t must be >= 2 (got {})", n_t));
    if (!std::isfinite(c)) throw PreconditionError("advection speed c must be finite");

    Discretization d;
    d.h = h;
    d.tau = tau;
    d.n_x = n_x;
    d.n_t = n_t;
    d.c = c;
    d.sigma = courant_number(c, h, tau);
    if (!std::isfinite(d.length()) || !std::isfinite(d.horizon()))
        throw PreconditionError("domain length or time horizon is not finite");
    return d;
}

double AmplificationRoots::max_modulus() const noexcept
{
    double m = 0.0;
    for (const auto& g : roots) m = std::max(m, std::abs(g));
    return m;
}

AmplificationRoots amplification_roots(const SchemeCoefficients& s, double kappa_h)
{
    using cplx = std::complex<double>;
    const cplx fwd = std::polar(1.0, kappa_h);
    const cplx bwd = std::conj(fwd);

    const cplx a = s.alpha + s.zeta * fwd + s.theta * bwd;
    const cplx b = s.beta + s.delta * fwd + s.epsilon * bwd;
    const cplx c = s.gamma + s.eta * bwd + s.vartheta * fwd;

    const double scale = std::abs(s.alpha) + std::abs(s.zeta) + std::abs(s.theta);
    if (scale == 0.0 || std::abs(a) <= 1e-14 * scale)
        throw SingularError(fmt::format("singular mode: leading coefficient vanishes at kappa_h={}", kappa_h));

    AmplificationRoots out;
    if (!s.three_level()) {
        out.roots = {-b / a};
        out.multiplicity = {1};
        return out;
    }
    if (c == cplx{0.0, 0.0}) {
        // u^{n-1} drops out at this mode: g (a g + b) = 0
        out.roots = {-b / a, cplx{0.0, 0.0}};
        out.multiplicity = {1, 1};
        return out;
    }

    cplx sq = std::sqrt(b * b - 4.0 * a * c);
    if (std::real(std::conj(b) * sq) < 0.0) sq = -sq;
    const cplx q = -0.5 * (b + sq);
    const cplx r1 = q / a;
    const cplx r2 = c / q;
    if (std::abs(r1 - r2) <= 1e-12 * std::max(1.0, std::abs(r1))) {
        out.roots = {0.5 * (r1 + r2)};
        out.multiplicity = {2};
    } else {
        out.roots = {r1, r2};
        out.multiplicity = {1, 1};
    }
    return out;
}

double max_amplification(const SchemeCoefficients& s, int samples)
{
    double m = 0.0;
    for (int k = 0; k < samples; ++k) {
        const double kh = -std::numbers::pi + 2.0 * std::numbers::pi * k / (samples - 1);
        m = std::max(m, amplification_roots(s, kh).max_modulus());
    }
    return m;
}

}  // namespace drp
