#pragma once

#include <cctype>
#include <fstream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "fhmp/constants.hpp"
#include "fhmp/errors.hpp"
#include "fhmp/potentials.hpp"

namespace fhmp {

enum class PotentialKind { general, wei_hua, manning_rosen, box };
enum class OutputFormat { csv, json };
enum class SweepVariable { t, alpha };

/// One run of any subcommand: potential kind and parameters, physical
/// constants, sweep window, states, and output settings. Values are merged
/// with precedence: command line > config file > defaults.
struct RunConfig {
    PotentialKind kind = PotentialKind::general;

    double A = 0.0, B = 0.0, C = 0.0, D = 0.0;
    double alpha = 0.0;
    double q = 0.0;
    double q_tilde = 0.0;
    double t_e = 0.0;
    double V0 = 0.0;
    double beta = 0.0;

    PhysicalConstants constants;

    std::optional<SweepVariable> sweep; ///< per-command default when unset
    std::optional<double> sweep_lo;
    std::optional<double> sweep_hi;
    std::optional<int> samples;

    std::string series_param = "alpha";      ///< potential command series
    std::vector<double> series = {0.1, 0.3, 0.5};

    std::vector<int> states = {0, 1, 2};     ///< wavefunction command
    int nmax = 3;                            ///< spectrum command
    int n_check = 3;                         ///< verify command
    int npoints = 4000;
    double threshold = 1e-3;
    double box_length = 10.0;
    double perturb_pn = 0.0;                 ///< verify test hook

    std::string out;                         ///< empty = stdout
    OutputFormat format = OutputFormat::csv;

    GeneralMolecularPotential general() const {
        GeneralMolecularPotential p;
        switch (kind) {
        case PotentialKind::general:
            p = {A, B, C, D, alpha, q, q_tilde, t_e};
            break;
        case PotentialKind::wei_hua:
            p = reduce_wei_hua(wei_hua());
            break;
        case PotentialKind::manning_rosen:
            p = reduce_manning_rosen(manning_rosen());
            break;
        case PotentialKind::box:
            throw ValidationError("kind", "box has no molecular potential");
        }
        p.validate();
        return p;
    }

    WeiHuaParams wei_hua() const { return {alpha, q, q_tilde, t_e}; }
    ManningRosenParams manning_rosen() const { return {alpha, V0, beta, t_e}; }

    /// Structural checks shared by every command; potential parameters are
    /// validated by the kind-specific types at use.
    void validate() const {
        constants.validate();
        if (sweep_lo && sweep_hi && !(*sweep_lo < *sweep_hi))
            throw ValidationError("sweep_lo", "range lower must be < upper");
        if (samples && *samples < 2)
            throw ValidationError("samples", "must be >= 2");
        if (nmax < 0) throw ValidationError("nmax", "must be >= 0");
        if (n_check < 1) throw ValidationError("n_check", "must be >= 1");
        if (npoints < 3) throw ValidationError("npoints", "must be >= 3");
        if (!(threshold > 0.0))
            throw ValidationError("threshold", "must be > 0");
        if (series.empty())
            throw ValidationError("series", "must list at least one value");
        if (series_param != "alpha" && series_param != "q")
            throw ValidationError("series_param", "must be 'alpha' or 'q'");
        for (int n : states)
            if (n < 0) throw ValidationError("states", "must be >= 0");
    }
};

namespace detail {

inline double parse_double(const std::string& key, const std::string& v) {
    try {
        std::size_t pos = 0;
        const double x = std::stod(v, &pos);
        while (pos < v.size() && std::isspace(static_cast<unsigned char>(v[pos])))
            ++pos;
        if (pos != v.size()) throw std::invalid_argument(v);
        return x;
    } catch (const std::exception&) {
        throw ValidationError(key, "not a number: '" + v + "'");
    }
}

inline int parse_int(const std::string& key, const std::string& v) {
    const double x = parse_double(key, v);
    const int i = static_cast<int>(x);
    if (static_cast<double>(i) != x)
        throw ValidationError(key, "not an integer: '" + v + "'");
    return i;
}

template <class T, class Parse>
inline std::vector<T> parse_list(const std::string& key, const std::string& v,
                                 Parse&& parse) {
    std::vector<T> out;
    std::stringstream ss(v);
    std::string item;
    while (std::getline(ss, item, ','))
        out.push_back(parse(key, item));
    if (out.empty()) throw ValidationError(key, "empty list");
    return out;
}

} // namespace detail

/// Apply one key=value assignment (config-file line or --set argument).
inline void apply_assignment(RunConfig& cfg, const std::string& key,
                             const std::string& value) {
    using detail::parse_double;
    using detail::parse_int;
    if (key == "kind") {
        if (value == "general") cfg.kind = PotentialKind::general;
        else if (value == "wei_hua") cfg.kind = PotentialKind::wei_hua;
        else if (value == "manning_rosen") cfg.kind = PotentialKind::manning_rosen;
        else if (value == "box") cfg.kind = PotentialKind::box;
        else throw ValidationError("kind", "unknown kind '" + value + "'");
    } else if (key == "A") cfg.A = parse_double(key, value);
    else if (key == "B") cfg.B = parse_double(key, value);
    else if (key == "C") cfg.C = parse_double(key, value);
    else if (key == "D") cfg.D = parse_double(key, value);
    else if (key == "alpha") cfg.alpha = parse_double(key, value);
    else if (key == "q") cfg.q = parse_double(key, value);
    else if (key == "q_tilde") cfg.q_tilde = parse_double(key, value);
    else if (key == "t_e") cfg.t_e = parse_double(key, value);
    else if (key == "V0") cfg.V0 = parse_double(key, value);
    else if (key == "beta") cfg.beta = parse_double(key, value);
    else if (key == "mc2") cfg.constants.mc2 = parse_double(key, value);
    else if (key == "hbar") cfg.constants.hbar = parse_double(key, value);
    else if (key == "c") cfg.constants.c = parse_double(key, value);
    else if (key == "sweep") {
        if (value == "t") cfg.sweep = SweepVariable::t;
        else if (value == "alpha") cfg.sweep = SweepVariable::alpha;
        else throw ValidationError("sweep", "must be 't' or 'alpha'");
    } else if (key == "sweep_lo") cfg.sweep_lo = parse_double(key, value);
    else if (key == "sweep_hi") cfg.sweep_hi = parse_double(key, value);
    else if (key == "samples") cfg.samples = parse_int(key, value);
    else if (key == "series_param") cfg.series_param = value;
    else if (key == "series")
        cfg.series = detail::parse_list<double>(key, value, parse_double);
    else if (key == "states")
        cfg.states = detail::parse_list<int>(key, value, parse_int);
    else if (key == "nmax") cfg.nmax = parse_int(key, value);
    else if (key == "n_check") cfg.n_check = parse_int(key, value);
    else if (key == "npoints") cfg.npoints = parse_int(key, value);
    else if (key == "threshold") cfg.threshold = parse_double(key, value);
    else if (key == "box_length") cfg.box_length = parse_double(key, value);
    else if (key == "perturb_pn") cfg.perturb_pn = parse_double(key, value);
    else if (key == "out") cfg.out = value;
    else if (key == "format") {
        if (value == "csv") cfg.format = OutputFormat::csv;
        else if (value == "json") cfg.format = OutputFormat::json;
        else throw ValidationError("format", "must be 'csv' or 'json'");
    } else {
        throw ValidationError(key, "unknown configuration key");
    }
}

inline std::string trim(const std::string& s) {
    const auto a = s.find_first_not_of(" \t\r\n");
    if (a == std::string::npos) return "";
    const auto b = s.find_last_not_of(" \t\r\n");
    return s.substr(a, b - a + 1);
}

/// Line-oriented key=value file; '#' starts a comment, blank lines skipped.
inline void load_config_file(RunConfig& cfg, const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ValidationError("config", "cannot open '" + path + "'");
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (const auto hash = line.find('#'); hash != std::string::npos)
            line.erase(hash);
        line = trim(line);
        if (line.empty()) continue;
        const auto eq = line.find('=');
        if (eq == std::string::npos)
            throw ValidationError("config", "line " + std::to_string(lineno) +
                                                ": expected key=value");
        apply_assignment(cfg, trim(line.substr(0, eq)),
                         trim(line.substr(eq + 1)));
    }
}

} // namespace fhmp
