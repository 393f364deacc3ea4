#include "cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <limits>
#include <ostream>
#include <sstream>
#include <unistd.h>

#include "relosc/errors.hpp"
#include "relosc/oscillator.hpp"
#include "relosc/verify.hpp"

namespace relosc::cli {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

struct RunConfig {
    std::string command;
    double m = 1.0;
    double omega = 1.0;
    double g = 1.0;
    double c = 4.0;
    double hbar = 1.0;
    std::optional<unsigned> n_max;
    double rho_min = 0.0;
    double rho_max = 20.0;
    unsigned steps = 201;
    std::optional<double> g_lo;
    std::optional<double> g_hi;
    unsigned g_steps = 61;
    std::vector<std::string> c_list;
    std::optional<std::string> format;
    std::optional<std::string> out;
    std::vector<std::string> only;
    double perturb_cn = 0.0;
};

class UsageError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

std::string format_double(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

std::string c_label(double c) {
    if (std::isinf(c)) {
        return "inf";
    }
    char buf[40];
    std::snprintf(buf, sizeof buf, "%g", c);
    return buf;
}

double parse_c(const std::string& s) {
    if (s == "inf" || s == "infinity" || s == "Inf") {
        return kInf;
    }
    std::size_t used = 0;
    double v = 0.0;
    try {
        v = std::stod(s, &used);
    } catch (const std::exception&) {
        throw UsageError("invalid value in --c-list: " + s);
    }
    if (used != s.size() || !(v > 0.0)) {
        throw UsageError("invalid value in --c-list: " + s);
    }
    return v;
}

std::vector<double> c_values(const RunConfig& cfg, std::vector<double> fallback) {
    if (cfg.c_list.empty()) {
        return fallback;
    }
    std::vector<double> out;
    for (const auto& s : cfg.c_list) {
        out.push_back(parse_c(s));
    }
    return out;
}

Format output_format(const RunConfig& cfg, Format fallback) {
    if (!cfg.format) {
        return fallback;
    }
    return *cfg.format == "json" ? Format::Json : Format::Csv;
}

const char* extension(Format f) { return f == Format::Json ? ".json" : ".csv"; }

OscillatorParams make_params(const RunConfig& cfg) {
    return OscillatorParams(cfg.m, cfg.omega, cfg.g, cfg.c, cfg.hbar);
}

void validate(const RunConfig& cfg) {
    if (cfg.rho_min < 0.0) {
        throw UsageError("--rho-min must be >= 0");
    }
    if (!(cfg.rho_max > cfg.rho_min)) {
        throw UsageError("--rho-max must exceed --rho-min");
    }
    if (cfg.steps < 2) {
        throw UsageError("--steps must be >= 2");
    }
    if (cfg.n_max && *cfg.n_max > 32) {
        throw UsageError("--n-max must be <= 32");
    }
    if (cfg.g_steps < 2) {
        throw UsageError("--g-steps must be >= 2");
    }
    if (cfg.g_lo && cfg.g_hi && !(*cfg.g_lo < *cfg.g_hi)) {
        throw UsageError("--g-lo must be below --g-hi");
    }
    if (!std::isfinite(cfg.perturb_cn)) {
        throw UsageError("--perturb-cn must be finite");
    }
}

std::vector<double> grid(double lo, double hi, unsigned steps) {
    std::vector<double> v(steps);
    for (unsigned i = 0; i < steps; ++i) {
        v[i] = lo + (hi - lo) * i / (steps - 1);
    }
    v.back() = hi;
    return v;
}

// Single-file commands write to --out or stdout.
void emit(const RunConfig& cfg, const std::string& text, std::ostream& out) {
    if (cfg.out) {
        write_atomically(*cfg.out, text);
    } else {
        out << text;
    }
}

// Multi-file commands treat --out as a directory.
std::filesystem::path output_dir(const RunConfig& cfg) {
    std::filesystem::path dir = cfg.out.value_or(".");
    std::filesystem::create_directories(dir);
    return dir;
}

int cmd_spectrum(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
    const OscillatorParams p = make_params(cfg);
    const SpectralSolution sol = compute_alpha_nu(p);
    const bool collapse = sol.regime == Regime::Collapse;
    if (collapse) {
        err << "warning: g = " << cfg.g << " is below g_crit = " << critical_coupling(p)
            << "; the spectrum is complex\n";
    }
    Table t;
    t.columns = {"n",         "re_energy", "im_energy", "re_binding", "im_binding", "regime",
                 "re_alpha",  "im_alpha",  "re_nu",     "im_nu",      "collapse_warning"};
    for (unsigned n = 0; n <= cfg.n_max.value_or(5); ++n) {
        const Complex e = energy_level(n, p);
        const Complex b = binding_energy(n, p);
        t.rows.push_back({static_cast<long long>(n), e.real(), e.imag(), b.real(), b.imag(),
                          std::string(to_string(sol.regime)), sol.alpha.real(), sol.alpha.imag(),
                          sol.nu.real(), sol.nu.imag(), collapse});
    }
    emit(cfg, render(t, output_format(cfg, Format::Csv)), out);
    return kSuccess;
}

int cmd_wavefunction(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
    const OscillatorParams p = make_params(cfg);
    const SpectralSolution sol = compute_alpha_nu(p);
    if (sol.regime == Regime::Collapse) {
        err << "error: wavefunctions do not exist below g_crit = " << critical_coupling(p) << "\n";
        return kUsageError;
    }
    const Format f = output_format(cfg, Format::Csv);
    const auto dir = output_dir(cfg);
    const auto rhos = grid(cfg.rho_min, cfg.rho_max, cfg.steps);
    for (unsigned n = 0; n <= cfg.n_max.value_or(0); ++n) {
        Table t;
        t.columns = {"rho", "re_psi", "im_psi", "abs_psi"};
        for (const double rho : rhos) {
            const Complex v = wavefunction(n, rho, p, sol).value;
            t.rows.push_back({rho, v.real(), v.imag(), std::abs(v)});
        }
        const auto path = dir / ("wavefunction_n" + std::to_string(n) + extension(f));
        write_atomically(path.string(), render(t, f));
        out << path.string() << "\n";
    }
    return kSuccess;
}

Table report_table(const std::vector<VerificationReport>& reports) {
    Table t;
    t.columns = {"check_name", "m",         "omega",  "g",    "c",
                 "hbar",       "residual",  "tolerance", "passed", "notes"};
    for (const auto& r : reports) {
        t.rows.push_back({r.check_name, r.params.m(), r.params.omega(), r.params.g(), r.params.c(),
                          r.params.hbar(), r.residual, r.tolerance, r.passed, r.notes});
    }
    return t;
}

double tolerance_scale_from_env() {
    const char* raw = std::getenv("RELOSC_TOLERANCE_SCALE");
    if (raw == nullptr || *raw == '\0') {
        return 1.0;
    }
    char* end = nullptr;
    const double v = std::strtod(raw, &end);
    if (*end != '\0' || !(v > 0.0) || !std::isfinite(v)) {
        throw UsageError(std::string("RELOSC_TOLERANCE_SCALE must be a positive number, got ") + raw);
    }
    return v;
}

int cmd_verify(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
    SuiteOptions opts;
    opts.params = make_params(cfg);
    opts.n_max = cfg.n_max.value_or(8);
    opts.tolerance_scale = tolerance_scale_from_env();
    opts.cn_perturbation = cfg.perturb_cn;
    opts.only = cfg.only;
    opts.g_lo = cfg.g_lo.value_or(-10.0);
    opts.g_hi = cfg.g_hi.value_or(3.0);
    opts.c_list = c_values(cfg, {1e6, 4.0, 2.0, 1.0, 0.5, 0.25});
    if (!(opts.g_lo < opts.g_hi)) {
        throw UsageError("--g-lo must be below --g-hi");
    }
    const auto reports = run_verification_suite(opts);
    std::size_t failed = 0;
    for (const auto& r : reports) {
        if (!r.passed) {
            ++failed;
            err << "FAIL " << r.check_name << ": residual " << r.residual << " > tolerance "
                << r.tolerance << " (" << r.notes << ")\n";
        }
    }
    err << reports.size() - failed << "/" << reports.size() << " checks passed\n";
    emit(cfg, render(report_table(reports), output_format(cfg, Format::Json)), out);
    return failed == 0 ? kSuccess : kVerificationFailure;
}

int cmd_fig1(const RunConfig& cfg, std::ostream& out) {
    const OscillatorParams base = make_params(cfg);
    const Format f = output_format(cfg, Format::Csv);
    const auto dir = output_dir(cfg);
    const auto xs = grid(cfg.rho_min, cfg.rho_max, cfg.steps);
    const auto gs = grid(cfg.g_lo.value_or(-1.0), cfg.g_hi.value_or(2.0), cfg.g_steps);
    for (const double c : c_values(cfg, {kInf, 4.0, 0.25})) {
        Table t;
        t.columns = {"x", "g", "re_psi0", "im_psi0"};
        for (const double g : gs) {
            if (std::isinf(c)) {
                const OscillatorParams p = base.with_g(g);
                if (p.g0() < -0.125) {
                    continue;
                }
                for (const double x : xs) {
                    t.rows.push_back({x, g, nonrel_wavefunction(0, x, p), 0.0});
                }
                continue;
            }
            const OscillatorParams p = base.with_c(c).with_g(g);
            const SpectralSolution sol = compute_alpha_nu(p);
            if (sol.regime == Regime::Collapse) {
                continue;
            }
            // lambda^{-1/2} psi_0(x / lambda) is normalized in x.
            const double scale = 1.0 / std::sqrt(p.lambda());
            for (const double x : xs) {
                const Complex v = scale * wavefunction(0, x / p.lambda(), p, sol).value;
                t.rows.push_back({x, g, v.real(), v.imag()});
            }
        }
        const auto path = dir / ("fig1_c" + c_label(c) + extension(f));
        write_atomically(path.string(), render(t, f));
        out << path.string() << "\n";
    }
    return kSuccess;
}

int cmd_fig2(const RunConfig& cfg, std::ostream& out) {
    const OscillatorParams base = make_params(cfg);
    const Format f = output_format(cfg, Format::Csv);
    const auto dir = output_dir(cfg);
    const RegimeSweep sweep =
        sweep_regimes(cfg.g_lo.value_or(-1.0), cfg.g_hi.value_or(2.0),
                      c_values(cfg, {kInf, 4.0, 2.0, 1.0, 0.5, 0.25}), cfg.g_steps, base);
    for (const auto& curve : sweep.curves) {
        Table t;
        // Energies are E_0 - m c^2; the rest energy is its own column
        // (infinite for the non-relativistic panel).
        t.columns = {"g", "re_e0", "im_e0", "rest_energy"};
        for (std::size_t k = 0; k < curve.g.size(); ++k) {
            t.rows.push_back({curve.g[k], curve.binding[k].real(), curve.binding[k].imag(),
                              curve.rest_energy});
        }
        const auto path = dir / ("fig2_c" + c_label(curve.c) + extension(f));
        write_atomically(path.string(), render(t, f));
        out << path.string() << "\n";
    }
    return kSuccess;
}

void add_shared_options(CLI::App& app, RunConfig& cfg) {
    app.add_option("--m", cfg.m, "mass");
    app.add_option("--omega", cfg.omega, "oscillator frequency");
    app.add_option("--g", cfg.g, "singular coupling");
    app.add_option("--c", cfg.c, "speed of light");
    app.add_option("--hbar", cfg.hbar, "reduced Planck constant");
    app.add_option("--n-max", cfg.n_max, "highest level");
    app.add_option("--rho-min", cfg.rho_min, "grid start (rho; x for fig1)");
    app.add_option("--rho-max", cfg.rho_max, "grid end (rho; x for fig1)");
    app.add_option("--steps", cfg.steps, "grid points");
    app.add_option("--g-lo", cfg.g_lo, "coupling sweep start");
    app.add_option("--g-hi", cfg.g_hi, "coupling sweep end");
    app.add_option("--g-steps", cfg.g_steps, "coupling sweep points");
    app.add_option("--c-list", cfg.c_list, "speeds of light, 'inf' for the non-relativistic limit")
        ->delimiter(',');
    app.add_option("--format", cfg.format, "csv or json")
        ->check(CLI::IsMember({"csv", "json"}));
    app.add_option("--out", cfg.out, "output file, or directory for multi-file commands");
    app.add_option("--only", cfg.only, "run only the named checks")->delimiter(',');
    app.add_option("--perturb-cn", cfg.perturb_cn, "relative error injected into c_n");
}

}  // namespace

std::string to_csv(const Table& t) {
    std::ostringstream os;
    for (std::size_t i = 0; i < t.columns.size(); ++i) {
        os << (i ? "," : "") << t.columns[i];
    }
    os << '\n';
    for (const auto& row : t.rows) {
        for (std::size_t i = 0; i < row.size(); ++i) {
            if (i) {
                os << ',';
            }
            std::visit(
                [&os](const auto& v) {
                    using T = std::decay_t<decltype(v)>;
                    if constexpr (std::is_same_v<T, double>) {
                        os << format_double(v);
                    } else if constexpr (std::is_same_v<T, bool>) {
                        os << (v ? "true" : "false");
                    } else if constexpr (std::is_same_v<T, std::string>) {
                        // Quote only when needed.
                        if (v.find_first_of(",\"\n") == std::string::npos) {
                            os << v;
                        } else {
                            os << '"';
                            for (const char ch : v) {
                                os << (ch == '"' ? "\"\"" : std::string(1, ch));
                            }
                            os << '"';
                        }
                    } else {
                        os << v;
                    }
                },
                row[i]);
        }
        os << '\n';
    }
    return os.str();
}

std::string to_json(const Table& t) {
    nlohmann::ordered_json arr = nlohmann::ordered_json::array();
    for (const auto& row : t.rows) {
        nlohmann::ordered_json obj = nlohmann::ordered_json::object();
        for (std::size_t i = 0; i < row.size(); ++i) {
            std::visit(
                [&](const auto& v) {
                    using T = std::decay_t<decltype(v)>;
                    if constexpr (std::is_same_v<T, double>) {
                        obj[t.columns[i]] = std::isfinite(v) ? nlohmann::ordered_json(v)
                                                             : nlohmann::ordered_json(nullptr);
                    } else {
                        obj[t.columns[i]] = v;
                    }
                },
                row[i]);
        }
        arr.push_back(std::move(obj));
    }
    return arr.dump(2) + "\n";
}

std::string render(const Table& t, Format f) { return f == Format::Json ? to_json(t) : to_csv(t); }

void write_atomically(const std::string& path, const std::string& contents) {
    const std::filesystem::path target(path);
    if (target.has_parent_path()) {
        std::filesystem::create_directories(target.parent_path());
    }
    std::filesystem::path tmp = target;
    tmp += ".tmp." + std::to_string(::getpid());
    {
        std::ofstream f(tmp, std::ios::binary | std::ios::trunc);
        if (!f) {
            throw std::runtime_error("cannot open " + tmp.string() + " for writing");
        }
        f << contents;
        f.flush();
        if (!f) {
            throw std::runtime_error("write to " + tmp.string() + " failed");
        }
    }
    std::filesystem::rename(tmp, target);
}

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    RunConfig cfg;
    CLI::App app{"Relativistic linear singular oscillator: spectra, wavefunctions, checks and figure data",
                 "relosc"};
    app.set_config("--config", "", "key=value file; command-line flags take precedence");
    add_shared_options(app, cfg);
    app.require_subcommand(1);
    for (const char* name : {"spectrum", "wavefunction", "verify", "fig1", "fig2"}) {
        app.add_subcommand(name)->fallthrough()->callback([&cfg, name] { cfg.command = name; });
    }
    app.get_subcommand("spectrum")->description("energy levels n = 0..n-max");
    app.get_subcommand("wavefunction")->description("psi_n on a rho grid, one file per n");
    app.get_subcommand("verify")->description("run the verification suite; JSON report");
    app.get_subcommand("fig1")->description("ground state over an (x, g) grid per c");
    app.get_subcommand("fig2")->description("ground-state energy against g per c");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) {
            out << app.help();
            return kSuccess;
        }
        err << "error: " << e.what() << "\n";
        return kUsageError;
    }

    try {
        validate(cfg);
        if (cfg.command == "spectrum") {
            return cmd_spectrum(cfg, out, err);
        }
        if (cfg.command == "wavefunction") {
            return cmd_wavefunction(cfg, out, err);
        }
        if (cfg.command == "verify") {
            return cmd_verify(cfg, out, err);
        }
        if (cfg.command == "fig1") {
            return cmd_fig1(cfg, out);
        }
        return cmd_fig2(cfg, out);
    } catch (const UsageError& e) {
        err << "error: " << e.what() << "\n";
        return kUsageError;
    } catch (const relosc::Error& e) {
        err << "error: " << e.what() << "\n";
        return kUsageError;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return kUsageError;
    }
}

}  // namespace relosc::cli
