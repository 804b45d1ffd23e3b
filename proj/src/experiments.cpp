#include "lucawave/dispersion.hpp"
#include "lucawave/energetics.hpp"
#include "lucawave/fracwave.hpp"
#include "lucawave/harness.hpp"

#include <json.hpp>

#include <array>
#include <charconv>
#include <cmath>
#include <complex>
#include <fstream>
#include <iostream>
#include <limits>
#include <string>
#include <vector>

namespace lucawave::harness {

namespace {

namespace fs = std::filesystem;
using nlohmann::json;

// Shortest round-trip formatting: locale-independent, '.' decimal separator,
// and byte-for-byte reproducible across runs.
std::string fmt(double x) {
    std::array<char, 32> buf;
    auto [end, ec] = std::to_chars(buf.data(), buf.data() + buf.size(), x);
    return std::string(buf.data(), end);
}

class CsvWriter {
public:
    CsvWriter(const fs::path& path, const std::vector<std::string>& header, bool verbose)
        : path_(path), out_(path, std::ios::binary) {
        if (!out_)
            throw std::runtime_error("cannot open " + path.string() + " for writing");
        for (std::size_t i = 0; i < header.size(); ++i) {
            if (i) out_ << ',';
            out_ << header[i];
        }
        out_ << '\n';
        if (verbose) std::cout << "writing " << path.string() << "\n";
    }

    void row(const std::vector<double>& values) {
        for (std::size_t i = 0; i < values.size(); ++i) {
            if (i) out_ << ',';
            out_ << fmt(values[i]);
        }
        out_ << '\n';
    }

    ~CsvWriter() {
        out_.flush();
        if (!out_) std::cerr << "warning: short write on " << path_.string() << "\n";
    }

private:
    fs::path path_;
    std::ofstream out_;
};

void write_summary(const fs::path& dir, const json& summary, bool verbose) {
    const fs::path path = dir / "summary.json";
    std::ofstream out(path, std::ios::binary);
    if (!out)
        throw std::runtime_error("cannot open " + path.string() + " for writing");
    out << summary.dump(2) << '\n';
    out.flush();
    if (!out)
        throw std::runtime_error("short write on " + path.string());
    if (verbose) std::cout << "writing " << path.string() << "\n";
}

// Amplitudes are given as a number (real) or as an [re, im] pair.
std::vector<std::complex<double>> parse_amplitudes(const json& arr, const char* what) {
    if (!arr.is_array())
        throw std::invalid_argument(std::string("config: ") + what + " must be an array");
    std::vector<std::complex<double>> out;
    out.reserve(arr.size());
    for (const auto& item : arr) {
        if (item.is_number()) {
            out.emplace_back(item.get<double>(), 0.0);
        } else if (item.is_array() && item.size() == 2 && item[0].is_number() &&
                   item[1].is_number()) {
            out.emplace_back(item[0].get<double>(), item[1].get<double>());
        } else {
            throw std::invalid_argument(std::string("config: entries of ") + what +
                                        " must be numbers or [re, im] pairs");
        }
    }
    return out;
}

coupled::SurfaceSpec parse_surface(const json& cfg) {
    const auto& s = cfg.at("surface");
    return coupled::SurfaceSpec(s.at("ell").get<double>(), s.at("n_modes").get<int>());
}

halfline::ZGrid parse_zgrid(const json& cfg) {
    const auto& g = cfg.at("zgrid");
    return halfline::ZGrid(g.at("L_z").get<double>(), g.at("n_z").get<int>());
}

struct TimeSpec {
    double dt = 0.0, T = 0.0;
};

TimeSpec parse_time(const json& cfg) {
    const auto& t = cfg.at("time");
    return {t.at("dt").get<double>(), t.at("T").get<double>()};
}

std::vector<std::string> surface_header(int n_modes) {
    std::vector<std::string> header{"t"};
    for (int m = 0; m < n_modes; ++m) {
        const std::string suffix = std::to_string(m);
        header.push_back("re_u" + suffix);
        header.push_back("im_u" + suffix);
        header.push_back("re_v" + suffix);
        header.push_back("im_v" + suffix);
    }
    return header;
}

template <typename Trajectory>
void write_surface_csv(const fs::path& dir, const Trajectory& traj, bool verbose) {
    CsvWriter csv(dir / "surface.csv", surface_header(traj.spec.n_modes), verbose);
    std::vector<double> row(1 + 4 * traj.spec.n_modes);
    for (std::size_t n = 0; n < traj.times.size(); ++n) {
        row[0] = traj.times[n];
        for (int m = 0; m < traj.spec.n_modes; ++m) {
            row[1 + 4 * m] = traj.U[m][n].real();
            row[2 + 4 * m] = traj.U[m][n].imag();
            row[3 + 4 * m] = traj.V[m][n].real();
            row[4 + 4 * m] = traj.V[m][n].imag();
        }
        csv.row(row);
    }
}

void write_audit_csv(const fs::path& path, const EnergyAudit& audit, bool verbose) {
    CsvWriter csv(path, {"t", "energy", "dissipation", "balance_residual"}, verbose);
    for (std::size_t n = 0; n < audit.times.size(); ++n)
        csv.row({audit.times[n], audit.energy[n], audit.dissipation[n],
                 audit.balance_residual[n]});
}

double max_interior_residual(const EnergyAudit& audit) {
    double worst = 0.0;
    for (double r : audit.balance_residual)
        if (std::isfinite(r) && r > worst) worst = r;
    return worst;
}

bool energy_nonincreasing(const std::vector<double>& energy) {
    if (energy.empty()) return true;
    const double slack = 1e-10 * (1.0 + energy.front());
    for (std::size_t n = 1; n < energy.size(); ++n)
        if (energy[n] > energy[n - 1] + slack) return false;
    return true;
}

json run_simulate_coupled(const json& cfg, const fs::path& dir, bool verbose) {
    const auto spec = parse_surface(cfg);
    const auto grid = parse_zgrid(cfg);
    const auto time = parse_time(cfg);
    const double eps = cfg.at("eps").get<double>();
    const auto& initial = cfg.at("initial");
    const auto U0 = parse_amplitudes(initial.at("U"), "initial.U");
    std::vector<std::complex<double>> V0;
    if (initial.contains("V")) V0 = parse_amplitudes(initial.at("V"), "initial.V");

    const auto w0 = coupled::make_field_state(spec, grid, U0, V0);
    const auto traj = coupled::simulate_coupled(spec, grid, w0, eps, time.dt, time.T);

    write_surface_csv(dir, traj, verbose);
    write_audit_csv(dir / "audit.csv", traj.audit, verbose);

    json summary;
    summary["experiment"] = "simulate-coupled";
    summary["eps"] = eps;
    summary["dt"] = traj.dt;
    summary["T"] = traj.times.back();
    summary["n_modes"] = spec.n_modes;
    summary["n_steps"] = traj.times.size() - 1;
    summary["final_energy"] = traj.audit.energy.back();
    summary["energy_nonincreasing"] = energy_nonincreasing(traj.audit.energy);
    summary["max_balance_residual"] = max_interior_residual(traj.audit);
    return summary;
}

json run_simulate_fractional(const json& cfg, const fs::path& dir, bool verbose) {
    const auto spec = parse_surface(cfg);
    const auto time = parse_time(cfg);
    const kernels::FracOrder alpha(cfg.at("alpha").get<double>());
    const auto U0 = parse_amplitudes(cfg.at("initial").at("U"), "initial.U");

    const auto traj = fracwave::simulate_fractional(spec, U0, alpha, time.dt, time.T);
    const auto audit = energetics::balance_audit(traj);

    write_surface_csv(dir, traj, verbose);
    write_audit_csv(dir / "audit.csv", audit, verbose);

    json summary;
    summary["experiment"] = "simulate-fractional";
    summary["alpha"] = alpha.alpha();
    summary["dt"] = traj.dt;
    summary["T"] = traj.times.back();
    summary["n_modes"] = spec.n_modes;
    summary["n_steps"] = traj.times.size() - 1;
    summary["final_energy"] = audit.energy.back();
    summary["energy_nonincreasing"] = energy_nonincreasing(audit.energy);
    summary["max_balance_residual"] = max_interior_residual(audit);
    return summary;
}

json run_dispersion(const json& cfg, const fs::path& dir, bool verbose) {
    const auto& d = cfg.at("dispersion");
    std::vector<double> eps_list;
    for (const auto& e : d.at("eps_list")) eps_list.push_back(e.get<double>());
    if (eps_list.empty())
        throw std::invalid_argument("config: dispersion.eps_list must be non-empty");

    std::vector<double> k_values;
    if (d.contains("k_values")) {
        for (const auto& k : d.at("k_values")) k_values.push_back(k.get<double>());
    } else {
        const auto& sweep = d.at("k_sweep");
        const double lo = sweep.at("log10_min").get<double>();
        const double hi = sweep.at("log10_max").get<double>();
        const int count = sweep.at("count").get<int>();
        if (count < 2 || !(hi > lo))
            throw std::invalid_argument("config: dispersion.k_sweep needs count >= 2 and "
                                        "log10_max > log10_min");
        for (int i = 0; i < count; ++i)
            k_values.push_back(std::pow(10.0, lo + (hi - lo) * i / (count - 1)));
    }
    if (k_values.empty())
        throw std::invalid_argument("config: dispersion.k_values must be non-empty");

    CsvWriter csv(dir / "roots.csv",
                  {"k", "eps", "re_mu", "im_mu", "re_gamma", "im_gamma", "residual",
                   "admissible"},
                  verbose);
    std::size_t n_roots = 0, n_admissible = 0;
    double max_residual = 0.0;
    for (double eps : eps_list) {
        for (double k : k_values) {
            for (const auto& root : dispersion::solve_dispersion(k, eps)) {
                csv.row({root.k, root.eps, root.mu.real(), root.mu.imag(), root.gamma.real(),
                         root.gamma.imag(), root.residual, root.admissible ? 1.0 : 0.0});
                ++n_roots;
                if (root.admissible) ++n_admissible;
                if (root.residual > max_residual) max_residual = root.residual;
            }
        }
    }

    json summary;
    summary["experiment"] = "dispersion";
    summary["n_k"] = k_values.size();
    summary["n_eps"] = eps_list.size();
    summary["n_roots"] = n_roots;
    summary["n_admissible"] = n_admissible;
    summary["max_residual"] = max_residual;
    return summary;
}

json run_energy_audit(const json& cfg, const fs::path& dir, bool verbose) {
    const auto spec = parse_surface(cfg);
    const auto time = parse_time(cfg);
    const kernels::FracOrder alpha(cfg.at("alpha").get<double>());
    const auto U0 = parse_amplitudes(cfg.at("initial").at("U"), "initial.U");

    const auto coarse =
        energetics::balance_audit(fracwave::simulate_fractional(spec, U0, alpha, time.dt, time.T));
    const auto fine = energetics::balance_audit(
        fracwave::simulate_fractional(spec, U0, alpha, 0.5 * time.dt, time.T));

    write_audit_csv(dir / "audit.csv", coarse, verbose);
    write_audit_csv(dir / "audit_fine.csv", fine, verbose);

    const double r_coarse = max_interior_residual(coarse);
    const double r_fine = max_interior_residual(fine);

    json summary;
    summary["experiment"] = "energy-audit";
    summary["alpha"] = alpha.alpha();
    summary["dt"] = time.dt;
    summary["T"] = time.T;
    summary["max_balance_residual"] = r_coarse;
    summary["max_balance_residual_fine"] = r_fine;
    summary["residual_refinement_factor"] = r_fine > 0.0 ? r_coarse / r_fine
                                                         : std::numeric_limits<double>::infinity();
    summary["energy_nonincreasing"] = energy_nonincreasing(coarse.energy);
    return summary;
}

json run_converge(const json& cfg, const fs::path& dir, bool verbose) {
    const auto spec = parse_surface(cfg);
    const auto grid = parse_zgrid(cfg);
    const auto time = parse_time(cfg);
    std::vector<double> eps_list;
    for (const auto& e : cfg.at("eps_list")) eps_list.push_back(e.get<double>());
    const auto& initial = cfg.at("initial");
    const auto U0 = parse_amplitudes(initial.at("U"), "initial.U");
    std::vector<std::complex<double>> V0;
    if (initial.contains("V")) V0 = parse_amplitudes(initial.at("V"), "initial.V");

    const auto w0 = coupled::make_field_state(spec, grid, U0, V0);
    const auto report = convergence_study(spec, grid, w0, eps_list, time.dt, time.T);

    CsvWriter csv(dir / "converge.csv", {"eps", "error", "bound_margin"}, verbose);
    for (std::size_t i = 0; i < report.eps_values.size(); ++i)
        csv.row({report.eps_values[i], report.errors[i], report.bound_margins[i]});

    bool decreasing = true;
    for (std::size_t i = 1; i < report.errors.size(); ++i)
        if (report.errors[i] > report.errors[i - 1]) decreasing = false;

    json summary;
    summary["experiment"] = "converge";
    summary["eps_values"] = report.eps_values;
    summary["errors"] = report.errors;
    summary["bound_margins"] = report.bound_margins;
    summary["fitted_slope"] = report.fitted_slope;
    summary["precheck_shift"] = report.precheck_shift;
    summary["precheck_threshold"] = report.precheck_threshold;
    summary["errors_decreasing"] = decreasing;
    return summary;
}

json run_nondim(const json& cfg, const fs::path& dir, bool verbose) {
    const auto& p = cfg.at("physical");
    PhysicalParams params;
    params.rho_memb = p.at("rho_memb").get<double>();
    params.rho_bulk = p.at("rho_bulk").get<double>();
    params.mu = p.at("mu").get<double>();
    params.kappa = p.at("kappa").get<double>();
    const ScalingReport r = nondimensionalize(params);

    CsvWriter csv(dir / "scaling.csv",
                  {"a", "b", "c", "eps", "t_star", "l_thick", "l_trav", "l_diff"}, verbose);
    csv.row({r.a, r.b, r.c, r.eps, r.t_star, r.l_thick, r.l_trav, r.l_diff});

    json summary;
    summary["experiment"] = "nondim";
    summary["a"] = r.a;
    summary["b"] = r.b;
    summary["c"] = r.c;
    summary["eps"] = r.eps;
    summary["t_star"] = r.t_star;
    summary["l_thick"] = r.l_thick;
    summary["l_trav"] = r.l_trav;
    summary["l_diff"] = r.l_diff;
    return summary;
}

}  // namespace

RunStatus run_experiment(const std::filesystem::path& config_path,
                         const std::filesystem::path& output_override, bool verbose,
                         const std::string& expect_experiment) {
    try {
        std::ifstream in(config_path);
        if (!in)
            throw std::invalid_argument("cannot read config file " + config_path.string());
        const json cfg = json::parse(in);

        const std::string name = cfg.at("experiment").get<std::string>();
        if (!expect_experiment.empty() && name != expect_experiment)
            throw std::invalid_argument("config names experiment '" + name +
                                        "' but the subcommand is '" + expect_experiment + "'");

        fs::path dir = output_override;
        if (dir.empty()) {
            if (!cfg.contains("output_dir"))
                throw std::invalid_argument(
                    "no output directory: set output_dir in the config or pass --output");
            dir = cfg.at("output_dir").get<std::string>();
        }
        fs::create_directories(dir);
        if (verbose) std::cout << "running " << name << " -> " << dir.string() << "\n";

        json summary;
        if (name == "simulate-coupled") {
            summary = run_simulate_coupled(cfg, dir, verbose);
        } else if (name == "simulate-fractional") {
            summary = run_simulate_fractional(cfg, dir, verbose);
        } else if (name == "dispersion") {
            summary = run_dispersion(cfg, dir, verbose);
        } else if (name == "energy-audit") {
            summary = run_energy_audit(cfg, dir, verbose);
        } else if (name == "converge") {
            summary = run_converge(cfg, dir, verbose);
        } else if (name == "nondim") {
            summary = run_nondim(cfg, dir, verbose);
        } else {
            throw std::invalid_argument(
                "unknown experiment '" + name +
                "' (expected simulate-coupled, simulate-fractional, dispersion, "
                "energy-audit, converge, or nondim)");
        }
        write_summary(dir, summary, verbose);
        return RunStatus::ok;
    } catch (const PrecheckError& e) {
        std::cerr << "precheck failure: " << e.what() << "\n";
        return RunStatus::precheck_failure;
    } catch (const std::exception& e) {
        std::cerr << "config error: " << e.what() << "\n";
        return RunStatus::config_error;
    }
}

}  // namespace lucawave::harness
