// jcsim: command-line front end for the two-atom, two-mode simulator.
// Subcommands: spectrum | evolve | entangle | dissipate | verify.
// Exit codes: 0 success, 1 check failure, 2 configuration error.

#include <CLI11.hpp>

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <numbers>
#include <string>
#include <vector>

#include "jc/dressed.hpp"
#include "jc/entanglement.hpp"
#include "jc/evolution.hpp"
#include "jc/lindblad.hpp"
#include "jc/oracle.hpp"
#include "jc/verify.hpp"

namespace {

constexpr double kPi = std::numbers::pi;

std::string fmt(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

std::string trim(const std::string& s) {
    const auto begin = s.find_first_not_of(" \t\r");
    if (begin == std::string::npos) return {};
    const auto end = s.find_last_not_of(" \t\r");
    return s.substr(begin, end - begin + 1);
}

// A config file is flat key=value text, one pair per line, # comments. Keys
// are the long option names without the leading dashes. Each pair expands to
// a --key=value token placed ahead of the explicit flags, so flags win.
std::vector<std::string> config_file_args(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("cannot read config file: " + path);
    std::vector<std::string> args;
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        const auto hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        line = trim(line);
        if (line.empty()) continue;
        const auto eq = line.find('=');
        const std::string key = eq == std::string::npos ? "" : trim(line.substr(0, eq));
        if (key.empty()) {
            throw std::invalid_argument("config file line " + std::to_string(lineno) +
                                        " is not key=value");
        }
        args.push_back("--" + key + "=" + trim(line.substr(eq + 1)));
    }
    return args;
}

// Expands --config files into the argument list, right after the subcommand
// name so that explicit flags still take precedence. The --config tokens
// themselves are consumed here.
std::vector<std::string> expand_config(int argc, char** argv) {
    std::vector<std::string> args;
    std::string path;
    for (int i = 1; i < argc; ++i) {
        const std::string arg = argv[i];
        if (arg == "--config") {
            if (i + 1 >= argc) throw std::invalid_argument("--config needs a file path");
            path = argv[++i];
        } else if (arg.rfind("--config=", 0) == 0) {
            path = arg.substr(9);
        } else {
            args.push_back(arg);
        }
    }
    if (path.empty()) return args;
    auto subcommand = args.begin();
    while (subcommand != args.end() && !subcommand->empty() && (*subcommand)[0] == '-') {
        ++subcommand;
    }
    if (subcommand == args.end()) throw std::invalid_argument("--config requires a subcommand");
    const std::vector<std::string> extra = config_file_args(path);
    args.insert(subcommand + 1, extra.begin(), extra.end());
    return args;
}

struct ParamOptions {
    double e_atom_a = 1.0;
    double e_atom_b = 1.0;
    double omega_a = 1.0;
    double omega_b = 1.0;
    double kappa_a = 0.0;
    double kappa_b = 0.0;
    double epsilon = 0.0;
    double lambda = 1.0;
    double e_atom = 1.0;
    std::vector<CLI::Option*> physical;
    std::vector<CLI::Option*> dimensionless;
};

void add_param_options(CLI::App& cmd, ParamOptions& o) {
    o.physical = {
        cmd.add_option("--e-atom-a", o.e_atom_a, "Atomic splitting of atom A (units E_ref)"),
        cmd.add_option("--e-atom-b", o.e_atom_b, "Atomic splitting of atom B"),
        cmd.add_option("--omega-a", o.omega_a, "Frequency of mode A"),
        cmd.add_option("--omega-b", o.omega_b, "Frequency of mode B"),
        cmd.add_option("--kappa-a", o.kappa_a, "Coupling of pair A"),
        cmd.add_option("--kappa-b", o.kappa_b, "Coupling of pair B"),
    };
    o.dimensionless = {
        cmd.add_option("--epsilon", o.epsilon, "Detuning, equal subsystems (default 0)"),
        cmd.add_option("--lambda", o.lambda, "Coupling ratio, equal subsystems (default 1)"),
        cmd.add_option("--e-atom", o.e_atom, "Splitting scale used with --epsilon/--lambda"),
    };
}

jc::SystemParams resolve_params(const ParamOptions& o) {
    const auto used = [](const std::vector<CLI::Option*>& opts) {
        for (const CLI::Option* opt : opts) {
            if (opt->count() > 0) return true;
        }
        return false;
    };
    const bool physical = used(o.physical);
    const bool dimensionless = used(o.dimensionless);
    if (physical && dimensionless) {
        throw std::invalid_argument(
            "give either physical (--e-atom-a ...) or dimensionless (--epsilon/--lambda) "
            "parameters, not both");
    }
    if (physical) {
        jc::SystemParams p{o.e_atom_a, o.e_atom_b, o.omega_a, o.omega_b, o.kappa_a, o.kappa_b};
        p.validate();
        return p;
    }
    return jc::params_from_dimensionless(o.epsilon, o.lambda, o.e_atom);
}

struct TimeGrid {
    double t_start = 0.0;
    double t_end = 0.0;  // 0 = auto: two periods of the slowest pair
    int samples = 1001;
};

void add_time_options(CLI::App& cmd, TimeGrid& g) {
    cmd.add_option("--t-start", g.t_start, "First sample time");
    cmd.add_option("--t-end", g.t_end, "Last sample time (0 = two periods)");
    cmd.add_option("--samples", g.samples, "Number of samples (>= 2)");
}

double resolve_t_end(const TimeGrid& grid, const jc::SystemParams& params) {
    if (grid.t_end != 0.0) return grid.t_end;
    const jc::DimensionlessParams dp = jc::to_dimensionless(params);
    const double rate_a = jc::q_split(0, dp.epsilon_a, dp.lambda_a) * params.e_atom_a;
    const double rate_b = jc::q_split(0, dp.epsilon_b, dp.lambda_b) * params.e_atom_b;
    const double slowest = std::min(rate_a, rate_b);
    if (slowest <= 0.0) {
        throw std::invalid_argument("degenerate parameters; give --t-end explicitly");
    }
    return 2.0 * 2.0 * kPi / slowest;
}

void check_grid(double t_start, double t_end, int samples) {
    if (samples < 2) throw std::invalid_argument("--samples must be at least 2");
    if (!(t_end > t_start)) throw std::invalid_argument("--t-end must exceed --t-start");
}

// Keeps the CSV stream open for the duration of a command; "-" is stdout.
struct Output {
    std::ofstream file;
    std::ostream* os = &std::cout;

    explicit Output(const std::string& path) {
        if (path.empty() || path == "-") return;
        file.open(path);
        if (!file) throw std::invalid_argument("cannot open output file: " + path);
        os = &file;
    }
    std::ostream& stream() { return *os; }
};

int run_spectrum(const jc::SystemParams& params, int n_max, int levels, bool check,
                 const std::string& out_path) {
    if (levels < 1 || levels > n_max) {
        throw std::invalid_argument("--levels must be in 1..n_max");
    }
    const jc::MatrixOperator h = jc::build_hamiltonian(params, n_max);
    const jc::Spectrum spectrum = jc::eigendecompose(h);

    Output out(out_path);
    out.stream() << "level,sign,subsystem,energy_analytic,energy_oracle,abs_diff\n";
    bool ok = true;
    for (int n = 0; n < levels; ++n) {
        for (int sign : {-1, +1}) {
            for (jc::Subsystem j : {jc::Subsystem::A, jc::Subsystem::B}) {
                const jc::DressedLevel level = jc::dressed_state(n, sign, j, params, n_max);
                const double partner = jc::ground_level(jc::other(j), params, n_max).energy;
                const double total = level.energy + partner;
                const auto match = jc::verify::match_eigenspace(spectrum, level.state.amps, total);
                const double oracle_energy = match.eigenvalue - partner;
                const double diff = std::abs(level.energy - oracle_energy);
                ok = ok && diff <= 1e-9 * std::max(1.0, std::abs(total)) &&
                     match.overlap > 1.0 - 1e-9;
                out.stream() << n << ',' << (sign < 0 ? '-' : '+') << ','
                             << (j == jc::Subsystem::A ? 'A' : 'B') << ',' << fmt(level.energy)
                             << ',' << fmt(oracle_energy) << ',' << fmt(diff) << '\n';
            }
        }
    }
    // The four stationary energies of the V space.
    const std::array<double, 4> energies = jc::four_state_energies(params);
    const std::array<jc::StateVector, 4> psi = jc::stationary_states(params, n_max);
    for (int k = 0; k < 4; ++k) {
        const auto match = jc::verify::match_eigenspace(spectrum, psi[k].amps, energies[k]);
        const double diff = std::abs(energies[k] - match.eigenvalue);
        ok = ok && diff <= 1e-9 * std::max(1.0, std::abs(energies[k])) &&
             match.overlap > 1.0 - 1e-9;
        out.stream() << (k + 1) << ",V,AB," << fmt(energies[k]) << ',' << fmt(match.eigenvalue)
                     << ',' << fmt(diff) << '\n';
    }
    if (check && !ok) {
        std::cerr << "spectrum check failed: analytic and oracle energies disagree\n";
        return 1;
    }
    return 0;
}

int run_evolve(const jc::SystemParams& params, int n_max, const TimeGrid& grid,
               const std::string& out_path) {
    const double t_end = resolve_t_end(grid, params);
    check_grid(grid.t_start, t_end, grid.samples);
    const jc::StateVector alpha = jc::psi_alpha(n_max);
    const jc::StateVector beta = jc::psi_beta(n_max);

    Output out(out_path);
    out.stream() << "t,re_phi1,im_phi1,re_phi2,im_phi2,re_phi3,im_phi3,re_phi4,im_phi4,norm,f2,g2\n";
    for (int i = 0; i < grid.samples; ++i) {
        const double t =
            grid.t_start + (t_end - grid.t_start) * double(i) / double(grid.samples - 1);
        const jc::StateVector state = jc::evolve_general(t, params, n_max);
        out.stream() << fmt(t);
        for (int k = 1; k <= 4; ++k) {
            const jc::Complex amp = jc::overlap(jc::phi_state(k, n_max), state);
            out.stream() << ',' << fmt(amp.real()) << ',' << fmt(amp.imag());
        }
        out.stream() << ',' << fmt(state.norm()) << ','
                     << fmt(std::norm(jc::overlap(alpha, state))) << ','
                     << fmt(std::norm(jc::overlap(beta, state))) << '\n';
    }
    return 0;
}

int run_entangle(const jc::SystemParams& params, int n_max, const TimeGrid& grid,
                 const std::string& out_path) {
    const double t_end = resolve_t_end(grid, params);
    check_grid(grid.t_start, t_end, grid.samples);

    Output out(out_path);
    out.stream() << "t,concurrence,entropy_bits,p_joint_ground\n";
    jc::TimeSeries concurrence_series;
    jc::TimeSeries state_series;  // phase-corrected return amplitude
    const jc::StateVector start = jc::psi_alpha(n_max);
    const jc::DimensionlessParams dp = jc::to_dimensionless(params);
    const bool equal = params.equal_subsystems();
    const double e_shifted = equal ? params.e_atom_a * (1.0 + 1.5 * dp.epsilon_a) : 0.0;

    for (int i = 0; i < grid.samples; ++i) {
        const double t =
            grid.t_start + (t_end - grid.t_start) * double(i) / double(grid.samples - 1);
        const jc::StateVector state = jc::evolve_general(t, params, n_max);
        const jc::EntanglementReport report = jc::entanglement_report(state, t);
        out.stream() << fmt(report.t) << ',' << fmt(report.concurrence_atoms) << ','
                     << fmt(report.entropy_bits) << ',' << fmt(report.p_joint_ground) << '\n';
        concurrence_series.times.push_back(t);
        concurrence_series.values.push_back(report.concurrence_atoms);
        if (equal) {
            const jc::Complex ret =
                std::exp(jc::Complex{0.0, e_shifted * t}) * jc::overlap(start, state);
            state_series.times.push_back(t);
            state_series.values.push_back(ret.real());
        }
    }

    const auto footer = [&](const char* key, double value) {
        out.stream() << "# " << key << " = " << fmt(value) << '\n';
    };
    const double nan = std::nan("");
    try {
        const jc::PeakPeriod conc = jc::find_peak_and_period(concurrence_series);
        footer("t_peak_concurrence", conc.t_peak);
        footer("period_concurrence", conc.period);
    } catch (const jc::NoPeakError&) {
        footer("t_peak_concurrence", nan);
        footer("period_concurrence", nan);
    } catch (const std::invalid_argument&) {  // grid too short to extract from
        footer("t_peak_concurrence", nan);
        footer("period_concurrence", nan);
    }
    if (equal) {
        try {
            footer("period_state", jc::find_peak_and_period(state_series).period);
        } catch (const jc::NoPeakError&) {
            footer("period_state", nan);
        } catch (const std::invalid_argument&) {
            footer("period_state", nan);
        }
        const double rate = jc::q_split(0, dp.epsilon_a, dp.lambda_a) * params.e_atom_a;
        footer("t_peak_predicted", 0.5 * kPi / rate);
        footer("period_predicted", 2.0 * kPi / rate);
    }
    return 0;
}

int run_dissipate(const jc::SystemParams& params, int n_max, const TimeGrid& grid, double gamma,
                  double gamma_a, double gamma_b, double dt, const std::string& initial,
                  const std::string& out_path) {
    const double t_end = resolve_t_end(grid, params);
    check_grid(grid.t_start, t_end, grid.samples);
    if (grid.t_start != 0.0) {
        throw std::invalid_argument("dissipative trajectories start at t = 0");
    }

    jc::StateVector state0 = jc::psi_alpha(n_max);
    if (initial == "phi1" || initial == "phi2" || initial == "phi3" || initial == "phi4") {
        state0 = jc::phi_state(initial[3] - '0', n_max);
    } else if (initial != "psi-alpha") {
        throw std::invalid_argument("--initial must be psi-alpha or phi1..phi4");
    }

    jc::DissipationConfig config;
    config.gamma_a = gamma_a >= 0.0 ? gamma_a : gamma;
    config.gamma_b = gamma_b >= 0.0 ? gamma_b : gamma;
    config.dt = dt;
    config.t_end = t_end;
    const long steps = long(std::ceil(t_end / dt));
    config.record_every = int(std::max(1L, steps / std::max(1, grid.samples - 1)));
    config.validate();

    const jc::MatrixOperator h = jc::build_hamiltonian(params, n_max);
    const jc::MatrixOperator rho0 = state0.amps * state0.amps.adjoint();
    const jc::Trajectory traj = jc::integrate(rho0, h, config, n_max);
    if (traj.step_size_warning) {
        std::cerr << "warning: dt is large for this Hamiltonian; consider reducing --dt\n";
    }

    const jc::MatrixOperator number_a =
        jc::build_operator(jc::OperatorKind::PhotonNumber, jc::Subsystem::A, n_max);
    const jc::MatrixOperator number_b =
        jc::build_operator(jc::OperatorKind::PhotonNumber, jc::Subsystem::B, n_max);

    Output out(out_path);
    out.stream() << "t,trace,n_a,n_b,concurrence,p_joint_ground\n";
    for (const auto& sample : traj.samples) {
        const jc::DensityOperator atoms =
            jc::partial_trace(sample.rho, n_max, jc::Bipartition::atoms());
        out.stream() << fmt(sample.t) << ',' << fmt(sample.rho.trace().real()) << ','
                     << fmt((number_a * sample.rho).trace().real()) << ','
                     << fmt((number_b * sample.rho).trace().real()) << ','
                     << fmt(jc::concurrence(atoms)) << ','
                     << fmt(jc::joint_ground_probability(sample.rho, n_max)) << '\n';
    }
    return 0;
}

int run_verify(int n_max) {
    const std::vector<jc::verify::CheckResult> results = jc::verify::run_all(n_max);
    int failures = 0;
    for (const auto& r : results) {
        std::printf("[%s] %-24s max_dev=%.3e tol=%.0e%s%s\n", r.passed ? "PASS" : "FAIL",
                    r.name.c_str(), r.max_deviation, r.tolerance, r.detail.empty() ? "" : "  ",
                    r.detail.c_str());
        if (!r.passed) ++failures;
    }
    std::printf("%d/%zu checks passed\n", int(results.size()) - failures, results.size());
    return failures == 0 ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Two-atom, two-mode cavity QED simulator", "jcsim"};
    app.require_subcommand(1);

    ParamOptions params_spectrum, params_evolve, params_entangle, params_dissipate;
    TimeGrid grid_evolve, grid_entangle, grid_dissipate;
    grid_dissipate.samples = 201;
    std::string out_spectrum = "-";
    std::string out_evolve = "-";
    std::string out_entangle = "-";
    std::string out_dissipate = "-";
    int n_max_spectrum = 8;
    int n_max_dynamics = 2;
    int levels = 0;  // 0 = all levels fitting the truncation
    bool check = false;
    double gamma = 0.05;
    double gamma_a = -1.0;
    double gamma_b = -1.0;
    double dt = 1e-3;
    std::string initial = "psi-alpha";
    int n_max_verify = 8;

    CLI::App* spectrum = app.add_subcommand("spectrum", "Dressed spectra, analytic vs oracle");
    add_param_options(*spectrum, params_spectrum);
    spectrum->add_option("--n-max", n_max_spectrum, "Fock truncation");
    spectrum->add_option("--levels", levels, "Dressed levels to list (default: n_max)");
    spectrum->add_flag("--check", check, "Exit 1 if analytic and oracle disagree");
    spectrum->add_option("-o,--output", out_spectrum, "CSV path ('-' = stdout)");

    CLI::App* evolve = app.add_subcommand("evolve", "Closed-form time evolution of psi_alpha");
    add_param_options(*evolve, params_evolve);
    add_time_options(*evolve, grid_evolve);
    evolve->add_option("--n-max", n_max_dynamics, "Fock truncation");
    evolve->add_option("-o,--output", out_evolve, "CSV path ('-' = stdout)");

    CLI::App* entangle = app.add_subcommand("entangle", "Entanglement metrics along the evolution");
    add_param_options(*entangle, params_entangle);
    add_time_options(*entangle, grid_entangle);
    entangle->add_option("--n-max", n_max_dynamics, "Fock truncation");
    entangle->add_option("-o,--output", out_entangle, "CSV path ('-' = stdout)");

    CLI::App* dissipate = app.add_subcommand("dissipate", "Cavity-loss master equation trajectory");
    add_param_options(*dissipate, params_dissipate);
    add_time_options(*dissipate, grid_dissipate);
    dissipate->add_option("--n-max", n_max_dynamics, "Fock truncation");
    dissipate->add_option("--gamma", gamma, "Photon loss rate for both modes");
    dissipate->add_option("--gamma-a", gamma_a, "Loss rate of mode A (overrides --gamma)");
    dissipate->add_option("--gamma-b", gamma_b, "Loss rate of mode B (overrides --gamma)");
    dissipate->add_option("--dt", dt, "Integrator step");
    dissipate->add_option("--initial", initial, "Initial state: psi-alpha or phi1..phi4");
    dissipate->add_option("-o,--output", out_dissipate, "CSV path ('-' = stdout)");

    CLI::App* verify = app.add_subcommand("verify", "Run the full verification battery");
    verify->add_option("--n-max", n_max_verify, "Fock truncation for the spectrum checks");

    std::string config_path;
    for (CLI::App* sub : {spectrum, evolve, entangle, dissipate, verify}) {
        sub->add_option("--config", config_path, "Read options from a key=value file (# comments)");
        // Later occurrences win, letting flags override config-file values.
        for (CLI::Option* opt : sub->get_options()) {
            if (opt->get_name() != "--help") opt->take_last();
        }
    }

    try {
        std::vector<std::string> args = expand_config(argc, argv);
        std::reverse(args.begin(), args.end());  // App::parse consumes back to front
        app.parse(args);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    } catch (const std::invalid_argument& e) {
        std::cerr << "configuration error: " << e.what() << '\n';
        return 2;
    }

    try {
        if (*spectrum) {
            if (n_max_spectrum < 1) throw std::invalid_argument("--n-max must be at least 1");
            const int list_levels = levels > 0 ? levels : n_max_spectrum;
            return run_spectrum(resolve_params(params_spectrum), n_max_spectrum, list_levels,
                                check, out_spectrum);
        }
        if (*evolve) {
            return run_evolve(resolve_params(params_evolve), n_max_dynamics, grid_evolve,
                              out_evolve);
        }
        if (*entangle) {
            return run_entangle(resolve_params(params_entangle), n_max_dynamics, grid_entangle,
                                out_entangle);
        }
        if (*dissipate) {
            return run_dissipate(resolve_params(params_dissipate), n_max_dynamics, grid_dissipate,
                                 gamma, gamma_a, gamma_b, dt, initial, out_dissipate);
        }
        if (*verify) {
            if (n_max_verify < 1) throw std::invalid_argument("--n-max must be at least 1");
            return run_verify(n_max_verify);
        }
    } catch (const jc::DegenerateLevelError& e) {
        std::cerr << "configuration error: " << e.what() << '\n';
        return 2;
    } catch (const std::invalid_argument& e) {
        std::cerr << "configuration error: " << e.what() << '\n';
        return 2;
    } catch (const std::out_of_range& e) {
        std::cerr << "configuration error: " << e.what() << '\n';
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    }
    return 0;
}
