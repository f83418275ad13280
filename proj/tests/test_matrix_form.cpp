#include "doctest.h"

#include <cmath>
#include <numbers>
#include <random>

#include "drp/errors.hpp"
#include "drp/matrix_form.hpp"
#include "drp/simulator.hpp"
#include "fixtures.hpp"

using namespace drp;
using doctest::Approx;

namespace {

long count_nonzeros(const Matrix& m)
{
    long n = 0;
    for (long j = 0; j < m.cols(); ++j)
        for (long i = 0; i < m.rows(); ++i) n += m(i, j) != 0.0;
    return n;
}

double max_abs(const Matrix& m) { return m.size() == 0 ? 0.0 : m.cwiseAbs().maxCoeff(); }

// The right-hand side written out entry by entry as tabulated, for the corner-weight and
// boundary terms. Row r, column n use 1-based indices; rows 2..n_x-2 have nonzeros only in
// column 1, and row n_x-2 carries the tabulated "-eta u_{n_x-2}^0".
Matrix tabulated_m0(const SchemeCoefficients& s, const GridField& g)
{
    const int nx = g.n_x();
    const int nt = g.n_t();
    auto u = [&](int i, int n) { return g.at(i, n); };
    auto up = [&](int i, int n) { return n > nt ? 0.0 : u(i, n); };
    Matrix m = Matrix::Zero(nx - 1, nt);
    for (int n = 1; n <= nt; ++n) {
        double top = -s.epsilon * u(0, n) - s.eta * u(0, n - 1) - s.theta * up(0, n + 1);
        double bottom = -s.delta * u(nx, n) - s.zeta * up(nx, n + 1) - s.vartheta * u(nx, n - 1);
        if (n == 1) {
            top += -s.gamma * u(1, 0) - s.vartheta * u(2, 0);
            bottom += -s.gamma * u(nx - 1, 0) - s.eta * u(nx - 2, 0);
        }
        m(0, n - 1) = top;
        m(nx - 2, n - 1) = bottom;
    }
    for (int i = 2; i <= nx - 2; ++i) {
        const int eta_index = i == nx - 2 ? nx - 2 : i - 1;
        m(i - 1, 0) = -s.gamma * u(i, 0) - s.eta * u(eta_index, 0) - s.vartheta * u(i + 1, 0);
    }
    return m;
}

}  // namespace

TEST_SUITE("matrix_form") {

TEST_CASE("M1 and M2 structure")
{
    const auto lax = preset("Lax", 0.1, 0.09);
    const Matrix m1 = build_m1(lax, 3);
    REQUIRE(m1.rows() == 3);
    for (int i = 0; i < 3; ++i) CHECK(m1(i, i) == 0.0);
    CHECK(m1(0, 1) == lax.delta);
    CHECK(m1(1, 2) == lax.delta);
    CHECK(m1(1, 0) == lax.epsilon);
    CHECK(m1(2, 1) == lax.epsilon);
    CHECK(m1(0, 2) == 0.0);
    CHECK(m1(2, 0) == 0.0);

    const double tau = 0.25;
    const auto leap = preset("Leapfrog", 0.5, tau);
    const Matrix m2 = build_m2(leap, 3);
    const Matrix expected = (Matrix(3, 3) << 0, -1 / (2 * tau), 0,
                                              1 / (2 * tau), 0, -1 / (2 * tau),
                                              0, 1 / (2 * tau), 0).finished();
    CHECK(m2 == expected);
}

TEST_CASE("sparsity of M1 and M2")
{
    std::mt19937_64 rng(21);
    for (int n = 2; n <= 12; ++n) {
        const auto s = testing::random_scheme(rng);
        CHECK(count_nonzeros(build_m1(s, n)) <= 3 * n - 2);
        CHECK(count_nonzeros(build_m2(s, n)) <= 2 * n - 2);
    }
}

TEST_CASE("zero data gives zero M0 and zero residual")
{
    std::mt19937_64 rng(2);
    const auto s = testing::random_scheme(rng);
    const auto d = make_discretization(0.1, 0.1, 6, 5);
    const GridField zero = GridField::zeros(6, 5);
    const auto sys = build_system(s, d, zero);
    CHECK(max_abs(sys.m0) == 0.0);
    CHECK(max_abs(matrix_residual(sys, zero)) == 0.0);
    CHECK(max_abs(pointwise_residual(s, zero)) == 0.0);
}

TEST_CASE("dimension mismatch is rejected")
{
    const auto s = preset("Lax", 0.1, 0.1);
    const auto d = make_discretization(0.1, 0.1, 6, 5);
    CHECK_THROWS_AS((void)build_system(s, d, GridField::zeros(7, 5)), DimensionError);
    CHECK_THROWS_AS((void)build_system(s, d, GridField::zeros(6, 4)), DimensionError);
    const auto sys = build_system(s, d, GridField::zeros(6, 5));
    CHECK_THROWS_AS((void)matrix_residual(sys, GridField::zeros(5, 5)), DimensionError);
    CHECK_THROWS_AS((void)error_matrix(GridField::zeros(6, 5), GridField::zeros(6, 4)), DimensionError);
}

TEST_CASE("matrix form equals the pointwise scheme on columns 1..n_t-1")
{
    std::mt19937_64 rng(1234);
    std::uniform_int_distribution<int> nx_dist(4, 8), nt_dist(3, 6);
    double worst = 0.0;
    for (int trial = 0; trial < 200; ++trial) {
        const int n_x = nx_dist(rng), n_t = nt_dist(rng);
        const auto s = trial % 4 == 0 ? preset("CrankNicolson", 0.3, 0.2) : testing::random_scheme(rng, trial % 2 == 0);
        const auto d = make_discretization(0.3, 0.2, n_x, n_t);
        const GridField u = testing::random_field(n_x, n_t, rng);
        const auto sys = build_system(s, d, u);
        const Matrix dense = matrix_residual(sys, u);
        const Matrix point = pointwise_residual(s, u);
        REQUIRE(point.rows() == n_x - 1);
        REQUIRE(point.cols() == n_t - 1);
        worst = std::max(worst, max_abs(dense.leftCols(n_t - 1) - point));
    }
    CHECK(worst < 1e-12);
}

TEST_CASE("M0 carries all of the boundary and initial data")
{
    std::mt19937_64 rng(99);
    for (int trial = 0; trial < 50; ++trial) {
        const auto s = testing::random_scheme(rng);
        const auto d = make_discretization(0.2, 0.1, 7, 5);
        const GridField u = testing::random_field(7, 5, rng);
        const GridField bare = testing::strip_data(u);
        const auto sys = build_system(s, d, u);
        const auto bare_sys = build_system(s, d, bare);
        CHECK(max_abs(bare_sys.m0) == 0.0);
        const Matrix diff = matrix_residual(bare_sys, bare) - matrix_residual(sys, u);
        CHECK(max_abs(diff - sys.m0) < 1e-14);
        // Entries with no data coupling are unchanged.
        for (long j = 0; j < diff.cols(); ++j)
            for (long i = 0; i < diff.rows(); ++i)
                if (sys.m0(i, j) == 0.0) CHECK(diff(i, j) == 0.0);
    }
}

TEST_CASE("M0 agrees with the tabulated entries except one")
{
    // Distinct data values so every index shows up in the result.
    const int n_x = 7, n_t = 4;
    GridField g = GridField::zeros(n_x, n_t);
    for (int i = 0; i <= n_x; ++i) g.initial_row(i) = 1.0 + 0.1 * i;
    for (int n = 0; n <= n_t; ++n) {
        g.left_boundary(n) = n == 0 ? g.initial_row(0) : 3.0 + 0.07 * n;
        g.right_boundary(n) = n == 0 ? g.initial_row(n_x) : 5.0 + 0.13 * n;
    }
    const auto s = from_weights(1.0, 0.3, 0.7, 1.1, 1.3, 1.7, 1.9, 2.3, 2.9);
    const Matrix built = build_m0(s, g);
    const Matrix tab = tabulated_m0(s, g);
    REQUIRE(built.rows() == tab.rows());
    REQUIRE(built.cols() == tab.cols());
    int disagreements = 0;
    for (long j = 0; j < built.cols(); ++j) {
        for (long i = 0; i < built.rows(); ++i) {
            if (std::abs(built(i, j) - tab(i, j)) > 1e-14) {
                ++disagreements;
                // Row n_x-2, column 1: the eta term reads u_{n_x-3}^0 in index form.
                CHECK(i == n_x - 3);
                CHECK(j == 0);
                CHECK(built(i, j) - tab(i, j) == Approx(-s.eta * (g.at(n_x - 3, 0) - g.at(n_x - 2, 0))));
            }
        }
    }
    CHECK(disagreements == 1);
}

TEST_CASE("operator L")
{
    std::mt19937_64 rng(8);
    const auto plain = from_weights(1, 2, 3, 4, 5);
    const Matrix u = Matrix::Random(4, 5);
    CHECK(max_abs(apply_operator_L(plain, u)) == 0.0);

    // Crank-Nicolson at h = 1: eta = theta = -1. A single 1 at u_2^2 on n_x = 5, n_t = 4.
    const auto cn = preset("CrankNicolson", 1.0, 1.0);
    Matrix spike = Matrix::Zero(4, 4);
    spike(1, 1) = 1.0;
    const Matrix l = apply_operator_L(cn, spike);
    CHECK(l(2, 2) == cn.eta);
    CHECK(l(2, 0) == cn.theta);
    CHECK(count_nonzeros(l) == 2);

    for (int trial = 0; trial < 20; ++trial) {
        const auto s = testing::random_scheme(rng);
        const Matrix a = Matrix::Random(5, 6);
        const Matrix b = Matrix::Random(5, 6);
        const Matrix lhs = apply_operator_L(s, 2.5 * a - 0.75 * b);
        const Matrix rhs = 2.5 * apply_operator_L(s, a) - 0.75 * apply_operator_L(s, b);
        CHECK(max_abs(lhs - rhs) < 1e-13);
        const Matrix sum = apply_shift(Shift::zeta, s.zeta, a) + apply_shift(Shift::eta, s.eta, a)
                           + apply_shift(Shift::theta, s.theta, a) + apply_shift(Shift::vartheta, s.vartheta, a);
        CHECK(max_abs(sum - apply_operator_L(s, a)) < 1e-15);
    }
}

TEST_CASE("a local perturbation only touches coupled entries")
{
    std::mt19937_64 rng(17);
    const auto s = testing::random_scheme(rng);
    const auto d = make_discretization(0.2, 0.1, 8, 6);
    const GridField u = testing::random_field(8, 6, rng);
    const auto sys = build_system(s, d, u);
    const int i0 = 4, n0 = 3;  // 1-based, n0 <= n_t - 1
    GridField v = u;
    v.interior(i0 - 1, n0 - 1) += 1.0;
    const Matrix diff = matrix_residual(sys, v) - matrix_residual(sys, u);
    for (long j = 0; j < diff.cols(); ++j) {
        for (long i = 0; i < diff.rows(); ++i) {
            const int di = static_cast<int>(i) + 1 - i0;
            const int dn = static_cast<int>(j) + 1 - n0;
            if (std::abs(di) > 1 || std::abs(dn) > 1) CHECK(diff(i, j) == 0.0);
        }
    }
    CHECK(diff(i0 - 1, n0 - 1) == Approx(s.beta));
    CHECK(diff(i0 - 1, n0 - 2) == Approx(s.alpha));
    CHECK(diff(i0 - 1, n0) == Approx(s.gamma));
}

TEST_CASE("exact field samples")
{
    const double pi = std::numbers::pi;
    const auto d = make_discretization(0.1, 0.1, 8, 4);
    const GridField g = exact_field(pi, d);
    CHECK(std::abs(g.at(5, 0)) < 1e-15);
    CHECK(g.at(3, 1) == Approx(0.809016994374947424).epsilon(1e-14));
    CHECK(g.initial_row(0) == g.left_boundary(0));
    CHECK(g.initial_row(8) == g.right_boundary(0));
    CHECK_NOTHROW(g.validate());
    const GridField twice = exact_field(pi, d, 2.0);
    CHECK(max_abs(twice.interior - 2.0 * g.interior) == 0.0);
}

TEST_CASE("truncation residual of leapfrog at unit CFL vanishes")
{
    const double pi = std::numbers::pi;
    const auto d = make_discretization(1.0 / 16, 1.0 / 16, 16, 12);
    const auto s = preset("Leapfrog", d.h, d.tau);
    const GridField ex = exact_field(pi, d);
    const Matrix f = residual_F(build_system(s, d, ex), ex);
    CHECK(max_abs(f.leftCols(d.n_t - 1)) < 1e-10);

    // F is linear in the exact field for fixed M0.
    const auto sys = build_system(s, d, ex);
    std::mt19937_64 rng(4);
    GridField a = testing::random_field(16, 12, rng);
    GridField b = testing::random_field(16, 12, rng);
    GridField ab = a;
    ab.interior = a.interior + b.interior;
    const Matrix lhs = residual_F(sys, ab) + sys.m0;
    const Matrix rhs = residual_F(sys, a) + residual_F(sys, b) + 2.0 * sys.m0;
    CHECK(max_abs(lhs - rhs) < 1e-11);
}

TEST_CASE("error matrix")
{
    std::mt19937_64 rng(6);
    const GridField a = testing::random_field(6, 4, rng);
    CHECK(max_abs(error_matrix(a, a).entries) == 0.0);
    GridField b = a;
    b.interior.array() += 1.0;
    CHECK(max_abs(error_matrix(b, a).entries - Matrix::Ones(5, 4)) < 1e-15);
}

TEST_CASE("stepped solutions satisfy the matrix form and the error equation")
{
    const double pi = std::numbers::pi;
    std::mt19937_64 rng(44);
    for (const char* name : {"Lax", "LaxWendroff", "Leapfrog", "CrankNicolson"}) {
        const auto d = make_discretization(0.125, 0.1, 8, 6);
        const auto s = preset(name, d.h, d.tau);
        SimulationConfig cfg{s, d, pi, 1.0, Startup::exact_seed};
        const auto r = run(cfg);
        const auto sys = build_system(s, d, r.field);
        const double scale = std::abs(s.alpha) + std::abs(s.beta) + std::abs(s.gamma) + std::abs(s.delta)
                             + std::abs(s.epsilon) + std::abs(s.eta) + std::abs(s.theta);
        CHECK(max_abs(matrix_residual(sys, r.field).leftCols(d.n_t - 1)) < 1e-12 * scale);

        const auto ex_sys = build_system(s, d, r.exact);
        const Matrix f = residual_F(ex_sys, r.exact);
        const Matrix e = error_matrix(r.field, r.exact).entries;
        const Matrix lhs = sys.m1 * e + e * sys.m2 + apply_operator_L(s, e);
        CHECK(max_abs((lhs + f).leftCols(d.n_t - 1)) < 1e-12 * scale);
    }
    for (int trial = 0; trial < 10; ++trial) {
        const auto s = testing::random_scheme(rng, false);
        const auto d = make_discretization(0.25, 0.2, 4, 3);
        const auto r = run({s, d, pi, 1.0, Startup::exact_seed});
        CHECK(max_abs(matrix_residual(build_system(s, d, r.field), r.field).leftCols(2)) < 1e-12);
    }
}

}
