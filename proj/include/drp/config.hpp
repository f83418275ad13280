#pragma once

#include <numbers>
#include <string>
#include <string_view>

#include "drp/scheme.hpp"
#include "drp/simulator.hpp"

namespace drp {

/// Flat run description read from `key=value` text.
///
/// Keys (all optional except `scheme`):
///   scheme     Leapfrog | Lax | LaxWendroff | CrankNicolson | tuned | tuned-oracle
///   h, tau     mesh size and time step            (default 0.1, 0.09)
///   n_x, n_t   number of space and time steps     (default 64, 100)
///   c, k       advection speed and wave number    (default 1, pi; `pi` is accepted)
///   amplitude  signal amplitude                   (default 1)
///   startup    exact-seed | single-step-lax       (default exact-seed)
///   out        report path                        (default: stdout)
///   svg        true | false                       (default false)
struct RunConfig {
    std::string scheme;
    double h = 0.1;
    double tau = 0.09;
    double c = 1.0;
    double k = std::numbers::pi;
    int n_x = 64;
    int n_t = 100;
    double amplitude = 1.0;
    Startup startup = Startup::exact_seed;
    std::string output_path;
    bool emit_svg = false;

    [[nodiscard]] Discretization discretization() const;
    [[nodiscard]] double sigma() const { return courant_number(c, h, tau); }
    [[nodiscard]] SchemeCoefficients make_scheme() const;
    [[nodiscard]] SimulationConfig simulation() const;
};

/// Parses configuration text. '#' starts a comment; blank lines are ignored.
/// Throws ParseError naming the offending line for malformed lines, unknown or repeated keys
/// and bad values, and ParseError(0, ...) when `scheme` is missing or the grid is invalid.
[[nodiscard]] RunConfig parse_config(std::string_view text);

/// Reads and parses a file; I/O failures are reported as ParseError(0, ...).
[[nodiscard]] RunConfig load_config(const std::string& path);

}  // namespace drp
