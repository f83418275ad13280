#pragma once

#include <random>

#include "drp/grid_field.hpp"
#include "drp/scheme.hpp"

namespace drp::testing {

/// Nine independent weights in [lo, hi], alpha kept away from zero.
inline SchemeCoefficients random_scheme(std::mt19937_64& rng, bool with_corners = true)
{
    std::uniform_real_distribution<double> w(-2.0, 2.0);
    std::uniform_real_distribution<double> a(0.5, 2.0);
    const double alpha = a(rng);
    const double beta = w(rng), gamma = w(rng), delta = w(rng), epsilon = w(rng);
    double zeta = 0, eta = 0, theta = 0, vartheta = 0;
    if (with_corners) {
        zeta = w(rng);
        eta = w(rng);
        theta = w(rng);
        vartheta = w(rng);
    }
    return from_weights(alpha, beta, gamma, delta, epsilon, zeta, eta, theta, vartheta);
}

/// Random samples in every block with consistent corners.
inline GridField random_field(int n_x, int n_t, std::mt19937_64& rng)
{
    std::uniform_real_distribution<double> v(-1.0, 1.0);
    GridField g = GridField::zeros(n_x, n_t);
    for (int i = 0; i <= n_x; ++i) g.initial_row(i) = v(rng);
    for (int n = 0; n <= n_t; ++n) {
        g.left_boundary(n) = v(rng);
        g.right_boundary(n) = v(rng);
    }
    g.left_boundary(0) = g.initial_row(0);
    g.right_boundary(0) = g.initial_row(n_x);
    for (int n = 0; n < n_t; ++n)
        for (int i = 0; i < n_x - 1; ++i) g.interior(i, n) = v(rng);
    return g;
}

/// Same interior, all initial and boundary samples set to zero.
inline GridField strip_data(GridField g)
{
    g.initial_row.setZero();
    g.left_boundary.setZero();
    g.right_boundary.setZero();
    return g;
}

}  // namespace drp::testing
