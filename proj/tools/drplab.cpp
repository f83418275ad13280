// drplab: command-line front end for building, analysing and running DRP advection schemes.
//
//   drplab drp      [--h <value> | --config <path>] [--out <path>]
//   drplab analyze  --config <path> [--out <path>] [--dump-dir <dir>]
//   drplab simulate --config <path> [--out <path>] [--svg] [--field-out <path>]
//   drplab compare  --config <path> --config <path> [...] [--out <path>] [--svg]
//   drplab verify   --config <path> [--corrupt-m0]
//
// Exit codes: 0 success, 1 usage or parse error, 2 numerical failure, 3 blow-up in simulate.

#include <filesystem>
#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "drp/config.hpp"
#include "drp/errors.hpp"
#include "drp/reports.hpp"

namespace {

enum ExitCode { ok = 0, usage = 1, numerical = 2, blowup = 3 };

void emit(const std::string& path, const std::string& text)
{
    if (path.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream out(path, std::ios::binary);
    if (!out) throw drp::PreconditionError("cannot write '" + path + "'");
    out << text;
}

std::string svg_path(const std::string& out_path)
{
    if (out_path.empty()) throw drp::PreconditionError("--svg needs an --out path to place the chart next to");
    return std::filesystem::path(out_path).replace_extension(".svg").string();
}

struct Options {
    std::vector<std::string> configs;
    std::string out;
    bool svg = false;
    double h = 0.0;
    std::string dump_dir;
    std::string field_out;
    bool corrupt_m0 = false;
};

int run_drp(const Options& o)
{
    double h = o.h;
    std::string out = o.out;
    if (!o.configs.empty()) {
        const drp::RunConfig cfg = drp::load_config(o.configs.front());
        if (h <= 0.0) h = cfg.h;
        if (out.empty()) out = cfg.output_path;
    }
    if (!(h > 0.0)) throw drp::PreconditionError("drp: mesh size h must be positive");
    emit(out, drp::cmd_drp(h));
    return ok;
}

int run_analyze(const Options& o)
{
    const drp::RunConfig cfg = drp::load_config(o.configs.front());
    const drp::AnalyzeReport report = drp::cmd_analyze(cfg);
    emit(o.out.empty() ? cfg.output_path : o.out, report.csv);
    if (!o.dump_dir.empty()) {
        std::filesystem::create_directories(o.dump_dir);
        for (const auto& [name, m] : report.matrices)
            emit((std::filesystem::path(o.dump_dir) / (name + ".csv")).string(), drp::matrix_csv(m));
    }
    return ok;
}

int run_simulate(const Options& o)
{
    const drp::RunConfig cfg = drp::load_config(o.configs.front());
    const std::string out = o.out.empty() ? cfg.output_path : o.out;
    const bool svg = o.svg || cfg.emit_svg;
    const drp::SimulateReport report = drp::cmd_simulate(cfg, svg);
    emit(out, report.csv);
    if (report.svg) emit(svg_path(out), *report.svg);
    if (!o.field_out.empty() && report.field.size() > 0) emit(o.field_out, drp::matrix_csv(report.field));
    if (report.blowup_step) {
        std::cerr << "simulate: blow-up at time step " << *report.blowup_step << "\n";
        return blowup;
    }
    return ok;
}

int run_compare(const Options& o)
{
    std::vector<drp::RunConfig> cfgs;
    for (const auto& path : o.configs) cfgs.push_back(drp::load_config(path));
    const std::string out = o.out.empty() ? cfgs.front().output_path : o.out;
    const bool svg = o.svg || cfgs.front().emit_svg;
    const drp::CompareReport report = drp::cmd_compare(cfgs, svg);
    emit(out, report.csv);
    if (report.svg) emit(svg_path(out), *report.svg);
    std::cout << report.summary << "\n";
    return ok;
}

int run_verify(const Options& o)
{
    const drp::RunConfig cfg = drp::load_config(o.configs.front());
    drp::VerifyOptions vo;
    vo.corrupt_m0 = o.corrupt_m0;
    const drp::VerifyReport report = drp::cmd_verify(cfg, vo);
    std::cout << report.text();
    return report.passed() ? ok : numerical;
}

}  // namespace

int main(int argc, char** argv)
{
    CLI::App app{"DRP scheme laboratory for 1D linear advection"};
    app.set_help_flag("--help", "print this help message and exit");
    app.require_subcommand(1);
    Options o;

    auto* drp_cmd = app.add_subcommand("drp", "paper and oracle DRP spatial coefficients with their integrated error");
    drp_cmd->add_option("--h", o.h, "mesh size");
    drp_cmd->add_option("--config", o.configs, "config file (its h is used when --h is absent)");
    drp_cmd->add_option("--out", o.out, "output CSV path");

    auto* analyze = app.add_subcommand("analyze", "spectra, norm bound, objectives and minimum-norm diagnostics");
    analyze->add_option("--config", o.configs, "config file")->required();
    analyze->add_option("--out", o.out, "output CSV path");
    analyze->add_option("--dump-dir", o.dump_dir, "directory for m1/m2/m0/f/u_exact matrix CSVs");

    auto* simulate = app.add_subcommand("simulate", "run one scheme and report its L2 error series");
    simulate->add_option("--config", o.configs, "config file")->required();
    simulate->add_option("--out", o.out, "output CSV path");
    simulate->add_flag("--svg", o.svg, "also write an SVG chart next to --out");
    simulate->add_option("--field-out", o.field_out, "write the computed interior field as CSV");

    auto* compare = app.add_subcommand("compare", "run several schemes on one grid and compare their errors");
    compare->add_option("--config", o.configs, "config file (repeat, first is the candidate)")->required();
    compare->add_option("--out", o.out, "output CSV path");
    compare->add_flag("--svg", o.svg, "also write an SVG chart next to --out");

    auto* verify = app.add_subcommand("verify", "matrix-form and minimum-norm audits");
    verify->add_option("--config", o.configs, "config file")->required();
    verify->add_flag("--corrupt-m0", o.corrupt_m0, "negative control: perturb M0 before auditing");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e) == 0 ? ok : usage;
    }

    try {
        if (*drp_cmd) return run_drp(o);
        if (*analyze) return run_analyze(o);
        if (*simulate) return run_simulate(o);
        if (*compare) return run_compare(o);
        if (*verify) return run_verify(o);
    } catch (const drp::ParseError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return usage;
    } catch (const drp::PreconditionError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return usage;
    } catch (const drp::Error& e) {
        std::cerr << "numerical error: " << e.what() << "\n";
        return numerical;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return usage;
    }
    return usage;
}
