#pragma once

#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "fhmp/commands.hpp"
#include "fhmp/config.hpp"
#include "fhmp/table.hpp"

namespace fhmp {

/// Exit codes shared by every subcommand.
enum ExitCode {
    exit_ok = 0,
    exit_validation = 1,
    exit_verification = 2,
    exit_numerical = 3,
};

namespace detail {

struct CommonArgs {
    std::string config_path;
    std::vector<std::string> sets;
    std::string out;
    std::string format;
    int nmax = -1;
    double threshold = -1.0;

    void attach(CLI::App* sub) {
        sub->add_option("--config", config_path, "key=value config file");
        sub->add_option("--set", sets, "override, e.g. --set alpha=0.3")
            ->take_all();
        sub->add_option("--out", out, "output path (default stdout)");
        sub->add_option("--format", format, "csv | json");
        sub->add_option("--nmax", nmax, "highest quantum number");
        sub->add_option("--threshold", threshold,
                        "verification failure threshold");
    }

    /// Precedence: defaults < config file < --set pairs < dedicated flags.
    RunConfig build() const {
        RunConfig cfg;
        if (!config_path.empty()) load_config_file(cfg, config_path);
        for (const auto& kv : sets) {
            const auto eq = kv.find('=');
            if (eq == std::string::npos)
                throw ValidationError("--set", "expected key=value, got '" +
                                                   kv + "'");
            apply_assignment(cfg, trim(kv.substr(0, eq)),
                             trim(kv.substr(eq + 1)));
        }
        if (!out.empty()) cfg.out = out;
        if (!format.empty()) apply_assignment(cfg, "format", format);
        if (nmax >= 0) cfg.nmax = nmax;
        if (threshold > 0.0) cfg.threshold = threshold;
        return cfg;
    }
};

} // namespace detail

/// Full command-line driver; returns the process exit code.
inline int run_cli(const std::vector<std::string>& args,
                   std::ostream& diag = std::cerr) {
    CLI::App app{"Quantized momentum spectra of time-dependent molecular "
                 "potentials: closed forms, eigenstates, and a "
                 "finite-difference cross-check"};
    app.require_subcommand(1);

    detail::CommonArgs cpot, cspec, cwave, cverify;
    CLI::App* pot = app.add_subcommand("potential", "sweep V(t)");
    CLI::App* spec = app.add_subcommand("spectrum", "sweep P_n over alpha");
    CLI::App* wave = app.add_subcommand("wavefunction",
                                        "normalized eigenstates on a t-grid");
    CLI::App* verify = app.add_subcommand("verify",
                                          "closed form vs finite-difference "
                                          "eigensolver");
    cpot.attach(pot);
    cspec.attach(spec);
    cwave.attach(wave);
    cverify.attach(verify);

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) { // --help
            std::cout << app.help();
            return exit_ok;
        }
        diag << "error: " << e.what() << "\n";
        return exit_validation;
    }

    try {
        if (pot->parsed()) {
            const RunConfig cfg = cpot.build();
            write_text(render(cmd_potential(cfg), cfg.format), cfg.out);
        } else if (spec->parsed()) {
            const RunConfig cfg = cspec.build();
            write_text(render(cmd_spectrum(cfg, diag), cfg.format), cfg.out);
        } else if (wave->parsed()) {
            const RunConfig cfg = cwave.build();
            write_text(render(cmd_wavefunction(cfg), cfg.format), cfg.out);
        } else if (verify->parsed()) {
            const RunConfig cfg = cverify.build();
            const VerificationReport rep = cmd_verify(cfg);
            write_text(rep.to_text(), cfg.out);
            if (!rep.passed(cfg.threshold)) {
                diag << "verification FAILED: max relative deviation "
                     << rep.max_rel_dev() << " (threshold " << cfg.threshold
                     << ")\n";
                return exit_verification;
            }
        }
    } catch (const ValidationError& e) {
        diag << "invalid configuration: " << e.what() << "\n";
        return exit_validation;
    } catch (const NonBoundError& e) {
        diag << "invalid request: " << e.what() << "\n";
        return exit_validation;
    } catch (const Error& e) {
        diag << "numerical failure: " << e.what() << "\n";
        return exit_numerical;
    }
    return exit_ok;
}

} // namespace fhmp
