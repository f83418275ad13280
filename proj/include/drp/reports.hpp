#pragma once

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "drp/config.hpp"
#include "drp/grid_field.hpp"

// Report builders behind the command-line tool. Each returns its text instead of writing it,
// so the CLI decides where output goes and tests can compare bytes directly.
//
// CSV conventions: 17 significant digits, '.' decimal separator, '\n' line endings.
namespace drp {

[[nodiscard]] std::string format_number(double v);

/// Dense row-major dump of a matrix, one row per line, no header.
[[nodiscard]] std::string matrix_csv(const Matrix& m);

/// Self-contained SVG line chart (no external references). Non-finite samples are skipped.
[[nodiscard]] std::string svg_line_chart(const std::string& title, const std::vector<double>& x,
                                         const std::vector<std::pair<std::string, std::vector<double>>>& series);

/// `source,beta_x,delta_x,epsilon_x,E` with one `paper` and one `oracle` row.
/// Throws PreconditionError for h <= 0.
[[nodiscard]] std::string cmd_drp(double h);

struct AnalyzeReport {
    std::string csv;                          // section,name,value
    std::map<std::string, Matrix> matrices;   // m1, m2, m0, f, u_exact
};

[[nodiscard]] AnalyzeReport cmd_analyze(const RunConfig& cfg);

struct SimulateReport {
    std::string csv;  // step,time,<scheme>_l2
    std::optional<std::string> svg;
    Matrix field;     // computed interior
    std::optional<int> blowup_step;
};

/// Runs one configuration. A blow-up is reported through `blowup_step` with the partial series.
[[nodiscard]] SimulateReport cmd_simulate(const RunConfig& cfg, bool svg);

struct CompareReport {
    std::string csv;      // step,time,<scheme1>_l2,...
    std::string summary;  // single '# ...' line
    std::string flag;     // PASS, PASS-tie or DEVIATION
    std::optional<std::string> svg;
};

/// Runs every configuration (concurrently) on the shared grid and checks whether the first one
/// ends with the smallest L2 error. Needs at least two configurations with identical grids.
/// Blown-up runs get a `_blowup` column suffix and `nan` cells after the blow-up step.
[[nodiscard]] CompareReport cmd_compare(const std::vector<RunConfig>& cfgs, bool svg);

struct AuditResult {
    std::string name;
    bool passed = false;
    bool skipped = false;
    std::string detail;
};

struct VerifyOptions {
    /// Negative control: perturbs the right-hand side built from boundary data.
    bool corrupt_m0 = false;
    unsigned long seed = 20240601UL;
};

struct VerifyReport {
    std::vector<AuditResult> audits;
    [[nodiscard]] bool passed() const;
    [[nodiscard]] std::string text() const;
};

/// Matrix-form equivalence, M0 carrier, L decomposition, SVD, minimum-norm, norm-bound and
/// stepping-consistency audits on the configured scheme and grid.
[[nodiscard]] VerifyReport cmd_verify(const RunConfig& cfg, const VerifyOptions& opts = {});

}  // namespace drp
