#include "drp/wavenumber.hpp"

#include <array>
#include <cmath>
#include <numbers>

#include <Eigen/Dense>
#include <fmt/core.h>

#include "drp/errors.hpp"

namespace drp {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kBand = kPi / 2.0;

template <class F>
double simpson(F&& f, double a, double b, int panels)
{
    if (panels % 2 != 0) ++panels;
    const double step = (b - a) / panels;
    double odd = 0.0;
    double even = 0.0;
    for (int k = 1; k < panels; ++k) {
        const double v = f(a + k * step);
        (k % 2 ? odd : even) += v;
    }
    return step / 3.0 * (f(a) + f(b) + 4.0 * odd + 2.0 * even);
}

void require_positive_h(double h)
{
    if (!(h > 0.0) || !std::isfinite(h))
        throw PreconditionError(fmt::format("mesh size h must be positive and finite (got {})", h));
}

}  // namespace

std::complex<double> scheme_wavenumber(const SpatialCoefficients& sc, double kappa)
{
    const std::complex<double> j{0.0, 1.0};
    const auto fwd = std::polar(1.0, kappa);
    return -j * (sc.beta_x + sc.delta_x * fwd + sc.epsilon_x * std::conj(fwd));
}

WavenumberError integrated_error(const SpatialCoefficients& sc, int panels)
{
    const std::complex<double> j{0.0, 1.0};
    auto integrand = [&](double kappa) {
        const auto fwd = std::polar(1.0, kappa);
        const auto stencil = sc.beta_x + sc.delta_x * fwd + sc.epsilon_x * std::conj(fwd);
        return std::norm(kappa + j * sc.h * stencil);
    };

    if (panels < 2) panels = 2;
    double coarse = simpson(integrand, -kBand, kBand, panels);
    for (int doublings = 0; doublings < 8; ++doublings) {
        const double fine = simpson(integrand, -kBand, kBand, 2 * panels);
        panels *= 2;
        const double change = std::abs(fine - coarse);
        coarse = fine;
        if (change <= 1e-10 * std::max(std::abs(fine), 1e-300)) break;
    }
    return {coarse, panels};
}

SpatialCoefficients optimize_drp(double h)
{
    require_positive_h(h);
    const std::complex<double> j{0.0, 1.0};
    auto basis = [&](double kappa) {
        const auto fwd = std::polar(1.0, kappa);
        return std::array<std::complex<double>, 3>{j * h, j * h * fwd, j * h * std::conj(fwd)};
    };

    constexpr int panels = 2048;
    Eigen::Matrix3d gram;
    Eigen::Vector3d rhs;
    for (int k = 0; k < 3; ++k) {
        rhs(k) = -simpson([&](double kappa) { return kappa * basis(kappa)[k].real(); }, -kBand,
                          kBand, panels);
        for (int l = k; l < 3; ++l) {
            gram(k, l) = simpson(
                [&](double kappa) {
                    const auto phi = basis(kappa);
                    return std::real(std::conj(phi[k]) * phi[l]);
                },
                -kBand, kBand, panels);
            gram(l, k) = gram(k, l);
        }
    }

    const Eigen::Vector3d c = gram.ldlt().solve(rhs);
    return {c(0), c(1), c(2), h};
}

SpatialCoefficients paper_drp_closed_form(double h)
{
    require_positive_h(h);
    const double denom = h * (kPi * kPi - 8.0);
    return {kPi / denom, 0.5 - 2.0 / denom, -2.0 / denom, h};
}

SpatialCoefficients paper_drp_linear_system(double h)
{
    require_positive_h(h);
    Eigen::Matrix3d a;
    a << 2.0 * kPi * h, 4.0 * h, 4.0 * h,
         4.0 * h, 2.0 * kPi, 0.0,
         4.0 * h, 0.0, 2.0 * kPi * h;
    const Eigen::Vector3d b(4.0, kPi, 0.0);

    Eigen::FullPivLU<Eigen::Matrix3d> lu(a);
    lu.setThreshold(1e-13);
    if (!lu.isInvertible())
        throw SingularError(fmt::format("tabulated DRP system is singular at h={}", h));
    const Eigen::Vector3d x = lu.solve(b);
    return {x(0), x(1), x(2), h};
}

}  // namespace drp
