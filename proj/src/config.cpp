#include "drp/config.hpp"

#include <charconv>
#include <fstream>
#include <set>
#include <sstream>

#include <fmt/core.h>

#include "drp/sylvester.hpp"

namespace drp {

namespace {

std::string_view trim(std::string_view s)
{
    const auto first = s.find_first_not_of(" \t\r");
    if (first == std::string_view::npos) return {};
    const auto last = s.find_last_not_of(" \t\r");
    return s.substr(first, last - first + 1);
}

double parse_real(std::string_view value, int line, std::string_view key)
{
    if (value == "pi") return std::numbers::pi;
    double out = 0.0;
    const auto [ptr, ec] = std::from_chars(value.data(), value.data() + value.size(), out);
    if (ec != std::errc{} || ptr != value.data() + value.size())
        throw ParseError(line, fmt::format("'{}' expects a number, got '{}'", key, value));
    return out;
}

int parse_int(std::string_view value, int line, std::string_view key)
{
    int out = 0;
    const auto [ptr, ec] = std::from_chars(value.data(), value.data() + value.size(), out);
    if (ec != std::errc{} || ptr != value.data() + value.size())
        throw ParseError(line, fmt::format("'{}' expects an integer, got '{}'", key, value));
    return out;
}

bool valid_scheme(std::string_view name)
{
    if (name == "tuned" || name == "tuned-oracle") return true;
    try {
        (void)preset_from_name(name);
        return true;
    } catch (const PreconditionError&) {
        return false;
    }
}

}  // namespace

Discretization RunConfig::discretization() const
{
    return make_discretization(h, tau, n_x, n_t, c);
}

SchemeCoefficients RunConfig::make_scheme() const
{
    if (scheme == "tuned") return tune_scheme(h, tau, DrpSource::paper);
    if (scheme == "tuned-oracle") return tune_scheme(h, tau, DrpSource::oracle);
    return preset(scheme, h, tau, c);
}

SimulationConfig RunConfig::simulation() const
{
    return {make_scheme(), discretization(), k, amplitude, startup};
}

RunConfig parse_config(std::string_view text)
{
    RunConfig cfg;
    std::set<std::string, std::less<>> seen;
    int line_no = 0;

    std::size_t pos = 0;
    while (pos <= text.size()) {
        const auto end = text.find('\n', pos);
        std::string_view line = text.substr(pos, end == std::string_view::npos ? text.size() - pos : end - pos);
        pos = end == std::string_view::npos ? text.size() + 1 : end + 1;
        ++line_no;

        if (const auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
        line = trim(line);
        if (line.empty()) continue;

        const auto eq = line.find('=');
        if (eq == std::string_view::npos)
            throw ParseError(line_no, fmt::format("expected key=value, got '{}'", line));
        const auto key = trim(line.substr(0, eq));
        const auto value = trim(line.substr(eq + 1));
        if (key.empty()) throw ParseError(line_no, "empty key");
        if (value.empty()) throw ParseError(line_no, fmt::format("key '{}' has no value", key));
        if (!seen.insert(std::string(key)).second)
            throw ParseError(line_no, fmt::format("key '{}' given more than once", key));

        if (key == "scheme") {
            if (!valid_scheme(value))
                throw ParseError(line_no, fmt::format("unknown scheme '{}' (valid: Leapfrog, Lax, "
                                                      "LaxWendroff, CrankNicolson, tuned, tuned-oracle)",
                                                      value));
            cfg.scheme = std::string(value);
        } else if (key == "h") {
            cfg.h = parse_real(value, line_no, key);
        } else if (key == "tau") {
            cfg.tau = parse_real(value, line_no, key);
        } else if (key == "c") {
            cfg.c = parse_real(value, line_no, key);
        } else if (key == "k") {
            cfg.k = parse_real(value, line_no, key);
        } else if (key == "amplitude") {
            cfg.amplitude = parse_real(value, line_no, key);
        } else if (key == "n_x") {
            cfg.n_x = parse_int(value, line_no, key);
        } else if (key == "n_t") {
            cfg.n_t = parse_int(value, line_no, key);
        } else if (key == "startup") {
            if (value == "exact-seed")
                cfg.startup = Startup::exact_seed;
            else if (value == "single-step-lax")
                cfg.startup = Startup::single_step_lax;
            else
                throw ParseError(line_no, fmt::format("startup must be exact-seed or single-step-lax, got '{}'", value));
        } else if (key == "out") {
            cfg.output_path = std::string(value);
        } else if (key == "svg") {
            if (value == "true")
                cfg.emit_svg = true;
            else if (value == "false")
                cfg.emit_svg = false;
            else
                throw ParseError(line_no, fmt::format("svg must be true or false, got '{}'", value));
        } else {
            throw ParseError(line_no, fmt::format("unknown key '{}'", key));
        }
    }

    if (cfg.scheme.empty()) throw ParseError(0, "required key \"scheme\" missing");
    try {
        (void)cfg.discretization();
    } catch (const PreconditionError& e) {
        throw ParseError(0, e.what());
    }
    return cfg;
}

RunConfig load_config(const std::string& path)
{
    std::ifstream in(path, std::ios::binary);
    if (!in) throw ParseError(0, fmt::format("cannot open config file '{}'", path));
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_config(buf.str());
}

}  // namespace drp
