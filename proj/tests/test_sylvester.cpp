#include "doctest.h"

#include <cmath>
#include <numbers>
#include <random>

#include "drp/errors.hpp"
#include "drp/matrix_form.hpp"
#include "drp/sylvester.hpp"
#include "drp/wavenumber.hpp"
#include "fixtures.hpp"
#include "oracles.hpp"

using namespace drp;
using doctest::Approx;

namespace {

double max_abs(const Matrix& m) { return m.size() == 0 ? 0.0 : m.cwiseAbs().maxCoeff(); }

// Random (m1, m2, F) triple on a random grid drawn from a random two-level or three-level
// scheme without corner weights.
struct Instance {
    SchemeCoefficients scheme;
    Discretization disc;
    SylvesterSystem sys;
    GridField exact;
    Matrix f;
};

Instance random_instance(std::mt19937_64& rng)
{
    std::uniform_int_distribution<int> nx(3, 9), nt(2, 8);
    std::uniform_real_distribution<double> k(0.5, 6.0);
    Instance in;
    in.scheme = testing::random_scheme(rng, false);
    in.disc = make_discretization(0.15, 0.1, nx(rng), nt(rng));
    in.exact = exact_field(k(rng), in.disc);
    in.sys = build_system(in.scheme, in.disc, in.exact);
    in.f = residual_F(in.sys, in.exact);
    return in;
}

}  // namespace

TEST_SUITE("sylvester_analysis") {

TEST_CASE("tabulated block values")
{
    const auto v = paper_block_values(from_weights(0.0, 1.0, 0.0, 1.0, -1.0));
    CHECK(v.m1[0] == Approx(2.0));
    CHECK(v.m1[1] == Approx(2.0));

    const auto w = paper_block_values(from_weights(10.0, 0.0, 0.0, 0.0, 0.0));
    CHECK(w.m2[0] == 100.0);
    CHECK(w.m2[1] == 0.0);

    // Superdiagonal 3 x 3: the tabulated formula gives {0, 1}, the exact spectrum {1, 1, 0}.
    const auto sup = from_weights(1.0, 0.0, 0.0, 1.0, 0.0);
    const auto p = paper_block_values(sup);
    CHECK(std::min(p.m1[0], p.m1[1]) == Approx(0.0));
    CHECK(std::max(p.m1[0], p.m1[1]) == Approx(1.0));
    const auto exact = svd(build_m1(sup, 3));
    CHECK(exact.singular_values(0) == Approx(1.0));
    CHECK(exact.singular_values(1) == Approx(1.0));
    CHECK(std::abs(exact.singular_values(2)) < 1e-14);
}

TEST_CASE("block spectrum multiplicities")
{
    const auto s = from_weights(1.0, 0.5, 0.3, 0.2, -0.4);
    const auto b = block_gram_spectrum(s, 5, 4);
    CHECK(b.m1_multiplicity == 2);
    CHECK(b.m2_multiplicity == 2);
    CHECK_THROWS_AS((void)block_gram_spectrum(s, 4, 4), PreconditionError);
    CHECK_THROWS_AS((void)block_gram_spectrum(s, 5, 3), PreconditionError);
}

TEST_CASE("M2 block values against the exact Gram spectrum")
{
    std::mt19937_64 rng(31);
    std::uniform_real_distribution<double> w(-3.0, 3.0);
    for (int trial = 0; trial < 20; ++trial) {
        const auto s = from_weights(w(rng), 0.0, w(rng), 0.0, 0.0);
        const auto quoted = block_gram_spectrum(s, 3, 2).values.m2;
        const Matrix m2 = build_m2(s, 2);
        Eigen::SelfAdjointEigenSolver<Matrix> es(m2.transpose() * m2);
        std::vector<double> exact{es.eigenvalues()(0), es.eigenvalues()(1)};
        std::vector<double> q{quoted[0], quoted[1]};
        std::sort(exact.begin(), exact.end());
        std::sort(q.begin(), q.end());
        CHECK(std::abs(exact[0] - q[0]) < 1e-10);
        CHECK(std::abs(exact[1] - q[1]) < 1e-10);
    }
    // From n_t = 4 on the quoted pair no longer matches: with gamma = 0 the exact
    // eigenvalues are {alpha^2, alpha^2, alpha^2, 0}.
    const auto s = from_weights(2.0, 0.0, 0.0, 0.0, 0.0);
    const Matrix m2 = build_m2(s, 4);
    Eigen::SelfAdjointEigenSolver<Matrix> es(m2.transpose() * m2);
    int at_alpha2 = 0;
    for (int k = 0; k < 4; ++k) at_alpha2 += std::abs(es.eigenvalues()(k) - 4.0) < 1e-12;
    CHECK(at_alpha2 == 3);
    CHECK(block_gram_spectrum(s, 3, 4).m2_multiplicity * 1 == 2);
}

TEST_CASE("partition of the rotated right-hand side")
{
    std::mt19937_64 rng(12);
    const Matrix f = oracle::random_matrix(5, 4, rng);
    const auto id = partition_rhs(Matrix::Identity(5, 5), f, Matrix::Identity(4, 4), 3, 2);
    CHECK(id.f11 == f.topLeftCorner(3, 2));
    CHECK(id.f12 == f.topRightCorner(3, 2));
    CHECK(id.f21 == f.bottomLeftCorner(2, 2));
    CHECK(id.f22 == f.bottomRightCorner(2, 2));

    const auto full = partition_rhs(Matrix::Identity(5, 5), f, Matrix::Identity(4, 4), 5, 4);
    CHECK(full.f21.size() == 0);
    CHECK(full.f22.size() == 0);
    CHECK(full.f11.rows() + full.f21.rows() == 5);

    for (int trial = 0; trial < 50; ++trial) {
        const Matrix u1 = oracle::random_orthogonal(5, rng);
        const Matrix v2 = oracle::random_orthogonal(4, rng);
        const Matrix g = oracle::random_matrix(5, 4, rng);
        const auto p = partition_rhs(u1, g, v2, 2, 3);
        CHECK(p.f11.norm() <= g.norm() + 1e-12);
        const double total = std::sqrt(p.f11.squaredNorm() + p.f12.squaredNorm() + p.f21.squaredNorm()
                                       + p.f22.squaredNorm());
        CHECK(total == Approx(g.norm()).epsilon(1e-12));
    }
    CHECK_THROWS_AS((void)partition_rhs(Matrix::Identity(4, 4), f, Matrix::Identity(4, 4), 1, 1), DimensionError);
    CHECK_THROWS_AS((void)partition_rhs(Matrix::Identity(5, 5), f, Matrix::Identity(4, 4), 6, 1), DimensionError);
}

TEST_CASE("minimum-norm entries")
{
    auto one = [](double a, double b, double f) {
        Vector m1(1), m2(1);
        m1 << a;
        m2 << b;
        Matrix rhs(1, 1);
        rhs << f;
        const auto p = min_norm_entries(m1, m2, rhs);
        return std::pair{p.m1_part(0, 0), p.m2_part(0, 0)};
    };
    CHECK(one(1, 1, 1) == std::pair{0.5, 0.5});
    CHECK(one(2, 1, 5) == std::pair{2.0, 1.0});
    CHECK(one(1, 0, 3) == std::pair{3.0, 0.0});
    CHECK(one(0, 0, 0) == std::pair{0.0, 0.0});
    CHECK_THROWS_AS((void)one(0, 0, 1), SingularError);
}

TEST_CASE("minimum-norm entries are optimal among feasible pairs")
{
    std::mt19937_64 rng(101);
    std::uniform_real_distribution<double> pos(0.0, 3.0), val(-2.0, 2.0), t(-5.0, 5.0);
    const Vector m1 = (Vector(3) << pos(rng), pos(rng), 0.0).finished();
    const Vector m2 = (Vector(4) << pos(rng), pos(rng), pos(rng), pos(rng)).finished();
    const Matrix f = oracle::random_matrix(3, 4, rng);
    const auto p = min_norm_entries(m1, m2, f);
    for (long i = 0; i < 3; ++i) {
        for (long j = 0; j < 4; ++j) {
            const double a = m1(i), b = m2(j);
            CHECK(std::abs(a * p.m1_part(i, j) + b * p.m2_part(i, j) - f(i, j)) < 1e-14);
            const double best = p.m1_part(i, j) * p.m1_part(i, j) + p.m2_part(i, j) * p.m2_part(i, j);
            int worse = 0;
            for (int k = 0; k < 1000; ++k) {
                // Feasible pairs: particular solution plus a multiple of the null direction (-b, a).
                const double s = t(rng);
                const double x = p.m1_part(i, j) - s * b;
                const double y = p.m2_part(i, j) + s * a;
                worse += x * x + y * y >= best - 1e-12;
            }
            CHECK(worse == 1000);
        }
    }
}

TEST_CASE("off-diagonal blocks")
{
    const Vector ones = Vector::Ones(2);
    std::mt19937_64 rng(3);
    const Matrix f12 = oracle::random_matrix(2, 3, rng);
    const Matrix f21 = oracle::random_matrix(4, 2, rng);
    const auto [a, b] = offdiag_blocks(ones, ones, f12, f21);
    CHECK(a == f12);
    CHECK(b == f21);

    const Vector d = (Vector(2) << 2.0, 4.0).finished();
    const auto [e12, e21] = offdiag_blocks(d, d, f12, f21);
    CHECK(max_abs(d.asDiagonal() * e12 - f12) < 1e-14);
    CHECK(max_abs(e21 * d.asDiagonal() - f21) < 1e-14);
    CHECK(e12(1, 0) == f12(1, 0) / 4.0);

    const Vector z = (Vector(2) << 1.0, 0.0).finished();
    CHECK_THROWS_AS((void)offdiag_blocks(z, ones, f12, f21), SingularError);
    CHECK_THROWS_AS((void)offdiag_blocks(ones, z, f12, f21), SingularError);
}

TEST_CASE("minimum-norm solve of the error equation")
{
    std::mt19937_64 rng(555);
    for (int trial = 0; trial < 60; ++trial) {
        const auto in = random_instance(rng);
        const auto sol = min_norm_solve(in.sys.m1, in.sys.m2, in.f);
        CHECK(max_abs(sol.leading_residual()) < 1e-12 * std::max(1.0, max_abs(in.f)));

        // Rotated equation S1 X + Y S2 = U1^T F V2, off the unconstrained (2,2) block.
        const long r = in.sys.m1.rows(), c = in.sys.m2.rows();
        Matrix s1 = Matrix::Zero(r, r), s2 = Matrix::Zero(c, c);
        s1.diagonal() = sol.m1_svd.singular_values;
        s2.diagonal() = sol.m2_svd.singular_values;
        const Matrix lhs = s1 * sol.right_rotated() + sol.left_rotated() * s2;
        const Matrix rhs = sol.m1_svd.left.transpose() * in.f * sol.m2_svd.right;
        Matrix diff = lhs - rhs;
        diff.bottomRightCorner(r - sol.rank1, c - sol.rank2).setZero();
        CHECK(max_abs(diff) < 1e-10 * std::max(1.0, max_abs(in.f)));
    }
}

TEST_CASE("Frobenius norm bound")
{
    std::mt19937_64 rng(808);
    for (int trial = 0; trial < 100; ++trial) {
        const auto in = random_instance(rng);
        const auto sol = min_norm_solve(in.sys.m1, in.sys.m2, in.f);
        const double bound = norm_bound(in.scheme, in.disc, in.exact.interior.norm(), in.sys.m0.norm());
        const double f11 = sol.rhs.f11.norm();
        CHECK(f11 <= in.f.norm() * (1 + 1e-12));
        CHECK(in.f.norm() <= bound);
        CHECK(sol.m1_svd.left.squaredNorm() == Approx(in.disc.n_x - 1).epsilon(1e-10));
        CHECK(sol.m2_svd.right.squaredNorm() == Approx(in.disc.n_t).epsilon(1e-10));
    }
    const auto d = make_discretization(0.1, 0.1, 5, 4);
    CHECK(norm_bound(SchemeCoefficients{}, d, 3.0, 0.0) == 0.0);
    const auto u1 = svd(oracle::random_matrix(4, 4, rng)).left;
    CHECK(u1.norm() == Approx(2.0).epsilon(1e-12));
}

TEST_CASE("objective values")
{
    const auto s = from_weights(10.0, 0.0, 0.0, 0.0, 0.0);
    const auto o = objectives(s, Matrix::Zero(3, 3));
    CHECK(o.f1 == 0.0);
    CHECK(o.f2 == 10.0);
    CHECK(o.f3 == 0.0);
    const auto p = objectives(from_weights(1, 1, 2, 2, 3), Matrix::Ones(2, 2));
    CHECK(p.f1 == Approx(std::sqrt(15.0)));
    CHECK(p.f2 == Approx(std::sqrt(5.0)));
    CHECK(p.f3 == Approx(2.0));
}

TEST_CASE("tuned scheme")
{
    const auto s = tune_scheme(1.0, 0.9);
    CHECK(s.alpha == 10.0);
    CHECK(s.gamma == 0.0);
    CHECK(s.zeta == 0.0);
    CHECK(s.eta == 0.0);
    CHECK(s.theta == 0.0);
    CHECK(s.vartheta == 0.0);
    CHECK(s.beta == Approx(0.168035155017782788).epsilon(1e-13));
    CHECK(s.delta == Approx(-0.0569745021371721227).epsilon(1e-13));
    CHECK(s.epsilon == Approx(-0.106974502137172123).epsilon(1e-13));
    CHECK(s.beta_t < 0.0);
    CHECK(s.delta_t > 0.0);
    CHECK(s.epsilon_t > 0.0);
    CHECK(s.label() == "tuned");

    for (double h : {0.05, 0.1, 0.5, 3.0}) CHECK(tune_scheme(h, 0.1).gamma == 0.0);

    const auto o = tune_scheme(1.0, 0.9, DrpSource::oracle);
    CHECK(o.delta == Approx(0.2 / std::numbers::pi).epsilon(1e-9));
    CHECK(o.label() == "tuned-oracle");
}

}
