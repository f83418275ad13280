#pragma once

#include <complex>

namespace drp {

/// Weights of the three-point first-derivative stencil
///   du/dx at node l ~ beta_x u_l + delta_x u_{l+1} + epsilon_x u_{l-1}.
struct SpatialCoefficients {
    double beta_x = 0.0;
    double delta_x = 0.0;
    double epsilon_x = 0.0;
    double h = 1.0;
};

struct WavenumberError {
    double value = 0.0;
    int integration_panels = 0;
};

/// Effective wavenumber -j (beta_x + delta_x e^{j kappa} + epsilon_x e^{-j kappa}) at the
/// nondimensional wavenumber kappa = omega h. Real part is dispersion, imaginary part dissipation.
[[nodiscard]] std::complex<double> scheme_wavenumber(const SpatialCoefficients& sc, double kappa);

/// Integrated squared wavenumber error over kappa in [-pi/2, pi/2] (waves longer than 4h):
///   E = int |kappa + j h (beta_x + delta_x e^{j kappa} + epsilon_x e^{-j kappa})|^2 dkappa.
/// Composite Simpson, starting at `panels` and doubling until two successive estimates agree
/// to 1e-10 relative.
[[nodiscard]] WavenumberError integrated_error(const SpatialCoefficients& sc, int panels = 2048);

/// True minimizer of integrated_error. The 3x3 normal equations are assembled by quadrature
/// of the basis products and solved directly; the minimizer is unique because the Gram matrix
/// of {j h, j h e^{j kappa}, j h e^{-j kappa}} over the band is positive definite.
[[nodiscard]] SpatialCoefficients optimize_drp(double h);

/// beta_x = pi / (h (pi^2 - 8)), delta_x = 1/2 - 2 / (h (pi^2 - 8)),
/// epsilon_x = -2 / (h (pi^2 - 8)), as tabulated by the original DRP derivation.
[[nodiscard]] SpatialCoefficients paper_drp_closed_form(double h);

/// Solves the tabulated stationarity system verbatim:
///   2 pi h b + 4 (h d + h e - 1) = 0,  4 h b + pi (2 d - 1) = 0,  4 h b + 2 pi h e = 0.
/// Throws SingularError if the system is numerically singular.
[[nodiscard]] SpatialCoefficients paper_drp_linear_system(double h);

}  // namespace drp
