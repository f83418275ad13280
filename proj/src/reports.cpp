#include "drp/reports.hpp"

#include <algorithm>
#include <cmath>
#include <exception>
#include <limits>
#include <random>

#include <fmt/core.h>

#include "drp/matrix_form.hpp"
#include "drp/simulator.hpp"
#include "drp/sylvester.hpp"
#include "drp/wavenumber.hpp"

namespace drp {

std::string format_number(double v)
{
    return fmt::format("{:.17g}", v);
}

std::string matrix_csv(const Matrix& m)
{
    std::string out;
    for (long i = 0; i < m.rows(); ++i) {
        for (long j = 0; j < m.cols(); ++j) {
            if (j > 0) out += ',';
            out += format_number(m(i, j));
        }
        out += '\n';
    }
    return out;
}

namespace {

std::string xml_escape(const std::string& s)
{
    std::string out;
    for (char ch : s) {
        switch (ch) {
        case '&': out += "&amp;"; break;
        case '<': out += "&lt;"; break;
        case '>': out += "&gt;"; break;
        case '"': out += "&quot;"; break;
        default: out += ch;
        }
    }
    return out;
}

constexpr const char* kPalette[] = {"#1f77b4", "#d62728", "#2ca02c", "#ff7f0e", "#9467bd", "#8c564b"};

}  // namespace

std::string svg_line_chart(const std::string& title, const std::vector<double>& x,
                           const std::vector<std::pair<std::string, std::vector<double>>>& series)
{
    constexpr double width = 720, height = 420;
    constexpr double left = 80, right = 170, top = 40, bottom = 50;
    const double plot_w = width - left - right;
    const double plot_h = height - top - bottom;

    double x_lo = x.empty() ? 0.0 : x.front();
    double x_hi = x.empty() ? 1.0 : x.back();
    double y_lo = std::numeric_limits<double>::infinity();
    double y_hi = -y_lo;
    for (const auto& [name, ys] : series)
        for (double y : ys)
            if (std::isfinite(y)) y_lo = std::min(y_lo, y), y_hi = std::max(y_hi, y);
    if (!std::isfinite(y_lo)) y_lo = 0.0, y_hi = 1.0;
    y_lo = std::min(y_lo, 0.0);
    if (y_hi <= y_lo) y_hi = y_lo + 1.0;
    if (x_hi <= x_lo) x_hi = x_lo + 1.0;

    auto px = [&](double v) { return left + (v - x_lo) / (x_hi - x_lo) * plot_w; };
    auto py = [&](double v) { return top + (1.0 - (v - y_lo) / (y_hi - y_lo)) * plot_h; };

    std::string out;
    out += "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
    out += fmt::format("<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"{}\" height=\"{}\" "
                       "viewBox=\"0 0 {} {}\">\n",
                       width, height, width, height);
    out += "<rect x=\"0\" y=\"0\" width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
    out += fmt::format("<text x=\"{}\" y=\"24\" font-family=\"sans-serif\" font-size=\"15\" "
                       "text-anchor=\"middle\">{}</text>\n",
                       left + plot_w / 2, xml_escape(title));
    out += fmt::format("<rect x=\"{}\" y=\"{}\" width=\"{}\" height=\"{}\" fill=\"none\" "
                       "stroke=\"black\"/>\n",
                       left, top, plot_w, plot_h);

    for (int t = 0; t <= 4; ++t) {
        const double xv = x_lo + (x_hi - x_lo) * t / 4.0;
        const double yv = y_lo + (y_hi - y_lo) * t / 4.0;
        out += fmt::format("<text x=\"{:.2f}\" y=\"{:.2f}\" font-family=\"sans-serif\" "
                           "font-size=\"11\" text-anchor=\"middle\">{:.4g}</text>\n",
                           px(xv), top + plot_h + 16, xv);
        out += fmt::format("<text x=\"{:.2f}\" y=\"{:.2f}\" font-family=\"sans-serif\" "
                           "font-size=\"11\" text-anchor=\"end\">{:.4g}</text>\n",
                           left - 6, py(yv) + 4, yv);
    }
    out += fmt::format("<text x=\"{:.2f}\" y=\"{:.2f}\" font-family=\"sans-serif\" font-size=\"12\" "
                       "text-anchor=\"middle\">time</text>\n",
                       left + plot_w / 2, height - 12);

    for (std::size_t s = 0; s < series.size(); ++s) {
        const auto& [name, ys] = series[s];
        const char* colour = kPalette[s % std::size(kPalette)];
        std::string points;
        for (std::size_t k = 0; k < std::min(x.size(), ys.size()); ++k) {
            if (!std::isfinite(ys[k])) continue;
            if (!points.empty()) points += ' ';
            points += fmt::format("{:.2f},{:.2f}", px(x[k]), py(ys[k]));
        }
        out += fmt::format("<polyline fill=\"none\" stroke=\"{}\" stroke-width=\"1.5\" "
                           "points=\"{}\"/>\n",
                           colour, points);
        const double ly = top + 16 + 18.0 * static_cast<double>(s);
        out += fmt::format("<line x1=\"{:.2f}\" y1=\"{:.2f}\" x2=\"{:.2f}\" y2=\"{:.2f}\" "
                           "stroke=\"{}\" stroke-width=\"2\"/>\n",
                           left + plot_w + 12, ly, left + plot_w + 36, ly, colour);
        out += fmt::format("<text x=\"{:.2f}\" y=\"{:.2f}\" font-family=\"sans-serif\" "
                           "font-size=\"12\">{}</text>\n",
                           left + plot_w + 42, ly + 4, xml_escape(name));
    }
    out += "</svg>\n";
    return out;
}

std::string cmd_drp(double h)
{
    const SpatialCoefficients paper = paper_drp_closed_form(h);
    const SpatialCoefficients oracle = optimize_drp(h);
    std::string out = "source,beta_x,delta_x,epsilon_x,E\n";
    for (const auto& [label, sc] : {std::pair{"paper", paper}, std::pair{"oracle", oracle}}) {
        out += fmt::format("{},{},{},{},{}\n", label, format_number(sc.beta_x),
                           format_number(sc.delta_x), format_number(sc.epsilon_x),
                           format_number(integrated_error(sc).value));
    }
    return out;
}

AnalyzeReport cmd_analyze(const RunConfig& cfg)
{
    const SchemeCoefficients s = cfg.make_scheme();
    const Discretization d = cfg.discretization();
    const GridField exact = exact_field(cfg.k, d, cfg.amplitude);
    const SylvesterSystem sys = build_system(s, d, exact);
    const Matrix f = residual_F(sys, exact);
    const MinNormSolution sol = min_norm_solve(sys.m1, sys.m2, f);

    AnalyzeReport report;
    std::string& out = report.csv;
    out = "section,name,value\n";
    auto row = [&](const std::string& section, const std::string& name, double v) {
        out += fmt::format("{},{},{}\n", section, name, format_number(v));
    };

    row("coefficient", "alpha", s.alpha);
    row("coefficient", "beta", s.beta);
    row("coefficient", "gamma", s.gamma);
    row("coefficient", "delta", s.delta);
    row("coefficient", "epsilon", s.epsilon);
    row("coefficient", "zeta", s.zeta);
    row("coefficient", "eta", s.eta);
    row("coefficient", "theta", s.theta);
    row("coefficient", "vartheta", s.vartheta);
    row("coefficient", "sigma", d.sigma);

    const PaperBlockValues block = paper_block_values(s);
    row("paper_spectrum", "m1_lower", block.m1[0]);
    row("paper_spectrum", "m1_upper", block.m1[1]);
    row("paper_spectrum", "m2_alpha_sq", block.m2[0]);
    row("paper_spectrum", "m2_gamma_sq", block.m2[1]);
    if ((d.n_x - 1) % 2 == 0 && d.n_t % 2 == 0) {
        const BlockGramSpectrum spec = block_gram_spectrum(s, d.n_x, d.n_t);
        row("paper_spectrum", "m1_multiplicity", spec.m1_multiplicity);
        row("paper_spectrum", "m2_multiplicity", spec.m2_multiplicity);
    }

    for (long j = 0; j < sol.m1_svd.singular_values.size(); ++j)
        row("singular_value_m1", std::to_string(j), sol.m1_svd.singular_values(j));
    for (long j = 0; j < sol.m2_svd.singular_values.size(); ++j)
        row("singular_value_m2", std::to_string(j), sol.m2_svd.singular_values(j));
    row("rank", "m1", sol.rank1);
    row("rank", "m2", sol.rank2);

    row("norm", "u_exact", exact.interior.norm());
    row("norm", "m0", sys.m0.norm());
    row("norm", "f", f.norm());
    row("norm", "f11", sol.rhs.f11.norm());
    row("norm", "bound", norm_bound(s, d, exact.interior.norm(), sys.m0.norm()));

    const ObjectiveValues obj = objectives(s, sys.m0);
    row("objective", "f1", obj.f1);
    row("objective", "f2", obj.f2);
    row("objective", "f3", obj.f3);

    row("min_norm", "right_rotated", sol.right_rotated().norm());
    row("min_norm", "left_rotated", sol.left_rotated().norm());
    row("min_norm", "leading_residual", sol.leading_residual().cwiseAbs().maxCoeff());

    report.matrices = {{"m1", sys.m1}, {"m2", sys.m2}, {"m0", sys.m0}, {"f", f},
                       {"u_exact", exact.interior}};
    return report;
}

namespace {

std::vector<double> time_axis(const Discretization& d)
{
    std::vector<double> t(static_cast<std::size_t>(d.n_t));
    for (int n = 1; n <= d.n_t; ++n) t[n - 1] = n * d.tau;
    return t;
}

std::string series_csv(const Discretization& d, const std::vector<std::string>& headers,
                       const std::vector<std::vector<double>>& columns)
{
    std::string out = "step,time";
    for (const auto& h : headers) out += "," + h;
    out += '\n';
    for (int n = 1; n <= d.n_t; ++n) {
        out += fmt::format("{},{}", n, format_number(n * d.tau));
        for (const auto& col : columns) {
            const double v = static_cast<std::size_t>(n) <= col.size()
                                 ? col[n - 1]
                                 : std::numeric_limits<double>::quiet_NaN();
            out += ',' + format_number(v);
        }
        out += '\n';
    }
    return out;
}

}  // namespace

SimulateReport cmd_simulate(const RunConfig& cfg, bool svg)
{
    const SimulationConfig sim = cfg.simulation();
    const std::string name = sim.scheme.label();
    SimulateReport report;
    std::vector<double> series;
    try {
        SimulationRun result = run(sim);
        series = result.errors.per_step;
        report.field = result.field.interior;
    } catch (const BlowUpError& e) {
        series = e.partial().per_step;
        report.blowup_step = e.step();
    }
    const std::string header = name + (report.blowup_step ? "_l2_blowup" : "_l2");
    report.csv = series_csv(sim.disc, {header}, {series});
    if (svg)
        report.svg = svg_line_chart("L2 error: " + name, time_axis(sim.disc), {{name, series}});
    return report;
}

CompareReport cmd_compare(const std::vector<RunConfig>& cfgs, bool svg)
{
    if (cfgs.size() < 2) throw PreconditionError("compare needs at least two configurations");
    const RunConfig& ref = cfgs.front();
    for (const auto& c : cfgs)
        if (c.h != ref.h || c.tau != ref.tau || c.n_x != ref.n_x || c.n_t != ref.n_t || c.c != ref.c)
            throw PreconditionError("compare: all configurations must share h, tau, c, n_x and n_t");

    std::vector<SimulationConfig> sims;
    for (const auto& c : cfgs) sims.push_back(c.simulation());
    const Discretization& disc = sims.front().disc;

    const long count = static_cast<long>(sims.size());
    std::vector<std::vector<double>> columns(sims.size());
    std::vector<std::optional<int>> blowups(sims.size());
    std::vector<std::exception_ptr> failures(sims.size());

#pragma omp parallel for schedule(dynamic, 1)
    for (long r = 0; r < count; ++r) {
        try {
            columns[r] = run(sims[r]).errors.per_step;
        } catch (const BlowUpError& e) {
            columns[r] = e.partial().per_step;
            blowups[r] = e.step();
        } catch (...) {
            failures[r] = std::current_exception();
        }
    }
    for (const auto& f : failures)
        if (f) std::rethrow_exception(f);

    std::vector<std::string> names;
    std::vector<std::string> headers;
    std::vector<double> finals;
    for (std::size_t r = 0; r < sims.size(); ++r) {
        names.push_back(sims[r].scheme.label());
        headers.push_back(names.back() + (blowups[r] ? "_l2_blowup" : "_l2"));
        finals.push_back(blowups[r] || columns[r].empty() ? std::numeric_limits<double>::infinity()
                                                          : columns[r].back());
    }

    CompareReport report;
    report.csv = series_csv(disc, headers, columns);

    const double others = *std::min_element(finals.begin() + 1, finals.end());
    if (std::isinf(finals[0]))
        report.flag = "DEVIATION";
    else
        report.flag = finals[0] < others ? "PASS" : (finals[0] == others ? "PASS-tie" : "DEVIATION");
    const auto best = std::min_element(finals.begin(), finals.end()) - finals.begin();

    std::string finals_text;
    std::string blowup_text;
    for (std::size_t r = 0; r < names.size(); ++r) {
        finals_text += fmt::format("{}{}:{}", r ? ";" : "", names[r], format_number(finals[r]));
        if (blowups[r])
            blowup_text += fmt::format("{}{}@{}", blowup_text.empty() ? "" : ";", names[r], *blowups[r]);
    }
    report.summary = fmt::format("# flag={} best={} final_l2={} blowups={}", report.flag,
                                 names[best], finals_text, blowup_text.empty() ? "none" : blowup_text);

    if (svg) {
        std::vector<std::pair<std::string, std::vector<double>>> series;
        for (std::size_t r = 0; r < names.size(); ++r) series.emplace_back(names[r], columns[r]);
        report.svg = svg_line_chart("L2 error of the computed solution", time_axis(disc), series);
    }
    return report;
}

bool VerifyReport::passed() const
{
    return std::all_of(audits.begin(), audits.end(), [](const AuditResult& a) { return a.passed; });
}

std::string VerifyReport::text() const
{
    std::string out;
    std::string failed;
    for (const auto& a : audits) {
        const char* tag = a.skipped ? "SKIP" : (a.passed ? "PASS" : "FAIL");
        out += fmt::format("{}  {}: {}\n", tag, a.name, a.detail);
        if (!a.passed) failed += (failed.empty() ? "" : ", ") + a.name;
    }
    out += passed() ? "verify: PASS\n" : fmt::format("verify: FAIL ({})\n", failed);
    return out;
}

namespace {

GridField random_field(int n_x, int n_t, std::mt19937_64& rng, bool with_data)
{
    std::uniform_real_distribution<double> dist(-1.0, 1.0);
    GridField g = GridField::zeros(n_x, n_t);
    for (long j = 0; j < g.interior.cols(); ++j)
        for (long i = 0; i < g.interior.rows(); ++i) g.interior(i, j) = dist(rng);
    if (with_data) {
        for (long i = 0; i < g.initial_row.size(); ++i) g.initial_row(i) = dist(rng);
        for (long n = 1; n < g.left_boundary.size(); ++n) {
            g.left_boundary(n) = dist(rng);
            g.right_boundary(n) = dist(rng);
        }
        g.left_boundary(0) = g.initial_row(0);
        g.right_boundary(0) = g.initial_row(n_x);
    }
    return g;
}

double weight_scale(const SchemeCoefficients& s)
{
    return std::abs(s.alpha) + std::abs(s.beta) + std::abs(s.gamma) + std::abs(s.delta)
           + std::abs(s.epsilon) + std::abs(s.zeta) + std::abs(s.eta) + std::abs(s.theta)
           + std::abs(s.vartheta);
}

// Largest deviation between the matrix form and the pointwise scheme on the columns where
// they must agree (all but the truncated last one).
double equivalence_gap(const Matrix& matrix_res, const Matrix& pointwise)
{
    return (matrix_res.leftCols(pointwise.cols()) - pointwise).cwiseAbs().maxCoeff();
}

double orthogonality_defect(const Matrix& q)
{
    return (q.transpose() * q - Matrix::Identity(q.cols(), q.cols())).cwiseAbs().maxCoeff();
}

}  // namespace

VerifyReport cmd_verify(const RunConfig& cfg, const VerifyOptions& opts)
{
    const SchemeCoefficients s = cfg.make_scheme();
    const Discretization d = cfg.discretization();
    std::mt19937_64 rng(opts.seed);
    VerifyReport report;
    const double tol_scale = std::max(1.0, weight_scale(s));
    const double tol = 1e-12 * tol_scale;

    {
        const GridField u = random_field(d.n_x, d.n_t, rng, false);
        const SylvesterSystem sys = build_system(s, d, u);
        const double gap = equivalence_gap(matrix_residual(sys, u), pointwise_residual(s, u));
        report.audits.push_back({"matrix-form equivalence", gap <= tol, false,
                                 fmt::format("max deviation {:.3e} (tol {:.1e})", gap, tol)});
    }
    {
        const GridField u = random_field(d.n_x, d.n_t, rng, true);
        SylvesterSystem sys = build_system(s, d, u);
        if (opts.corrupt_m0) sys.m0(0, 0) += 1.0;
        const double gap = equivalence_gap(matrix_residual(sys, u), pointwise_residual(s, u));
        report.audits.push_back({"M0 carrier property", gap <= tol, false,
                                 fmt::format("max deviation with boundary data {:.3e} (tol {:.1e})", gap, tol)});
    }
    {
        const GridField u = random_field(d.n_x, d.n_t, rng, true);
        const Matrix combined = apply_operator_L(s, u.interior);
        const Matrix summed = apply_shift(Shift::zeta, s.zeta, u.interior)
                              + apply_shift(Shift::eta, s.eta, u.interior)
                              + apply_shift(Shift::theta, s.theta, u.interior)
                              + apply_shift(Shift::vartheta, s.vartheta, u.interior);
        // Index-form reference: each corner weight reads the interior sample it names.
        Matrix direct = Matrix::Zero(u.interior.rows(), u.interior.cols());
        const int rows = d.n_x - 1;
        for (int n = 1; n <= d.n_t; ++n)
            for (int i = 1; i <= rows; ++i) {
                auto inside = [&](int ri, int rn) { return ri >= 1 && ri <= rows && rn >= 1 && rn <= d.n_t; };
                double v = 0.0;
                if (inside(i + 1, n + 1)) v += s.zeta * u.at(i + 1, n + 1);
                if (inside(i - 1, n - 1)) v += s.eta * u.at(i - 1, n - 1);
                if (inside(i - 1, n + 1)) v += s.theta * u.at(i - 1, n + 1);
                if (inside(i + 1, n - 1)) v += s.vartheta * u.at(i + 1, n - 1);
                direct(i - 1, n - 1) = v;
            }
        const double gap = std::max((combined - summed).cwiseAbs().maxCoeff(),
                                    (combined - direct).cwiseAbs().maxCoeff());
        report.audits.push_back({"L decomposition", gap <= tol, false,
                                 fmt::format("max deviation {:.3e}", gap)});
    }

    const GridField exact = exact_field(cfg.k, d, cfg.amplitude);
    const SylvesterSystem sys = build_system(s, d, exact);
    const Matrix f = residual_F(sys, exact);
    {
        double recon = 0.0;
        double orth = 0.0;
        for (const Matrix* m : {&sys.m1, &sys.m2}) {
            const SvdFactorization fac = svd(*m);
            const double norm = std::max(m->norm(), 1e-300);
            recon = std::max(recon, (fac.reconstruct() - *m).norm() / norm);
            orth = std::max({orth, orthogonality_defect(fac.left), orthogonality_defect(fac.right)});
        }
        report.audits.push_back({"SVD factorization", recon <= 1e-10 && orth <= 1e-10, false,
                                 fmt::format("reconstruction {:.3e}, orthogonality {:.3e}", recon, orth)});
    }
    {
        const MinNormSolution sol = min_norm_solve(sys.m1, sys.m2, f);
        const double scale = std::max(1.0, sol.rhs.f11.size() ? sol.rhs.f11.cwiseAbs().maxCoeff() : 0.0);
        const double res = sol.leading_residual().size() ? sol.leading_residual().cwiseAbs().maxCoeff() : 0.0;
        report.audits.push_back({"minimum-norm solution", res <= 1e-12 * scale, false,
                                 fmt::format("leading-block residual {:.3e} (ranks {}, {})", res,
                                             sol.rank1, sol.rank2)});

        if (s.zeta != 0.0 || s.eta != 0.0 || s.theta != 0.0 || s.vartheta != 0.0) {
            report.audits.push_back({"norm bound", true, true, "bound assumes zero corner weights"});
        } else {
            const double bound = norm_bound(s, d, exact.interior.norm(), sys.m0.norm());
            const double f11 = sol.rhs.f11.norm();
            report.audits.push_back({"norm bound", f11 <= bound * (1.0 + 1e-12), false,
                                     fmt::format("|F11| = {:.6e} <= {:.6e}", f11, bound)});
        }
    }
    {
        AuditResult audit{"stepping consistency", true, false, ""};
        try {
            const SimulationRun result = run(cfg.simulation());
            const SylvesterSystem stepped = build_system(s, d, result.field);
            const Matrix res = matrix_residual(stepped, result.field);
            const double data_scale = std::max(1.0, result.field.full().cwiseAbs().maxCoeff());
            const double gap = res.leftCols(d.n_t - 1).cwiseAbs().maxCoeff();
            audit.passed = gap <= tol * data_scale;
            audit.detail = fmt::format("max residual of stepped field {:.3e}", gap);
        } catch (const BlowUpError& e) {
            audit.skipped = true;
            audit.detail = e.what();
        } catch (const SingularError& e) {
            audit.skipped = true;
            audit.detail = e.what();
        }
        report.audits.push_back(audit);
    }
    return report;
}

}  // namespace drp
