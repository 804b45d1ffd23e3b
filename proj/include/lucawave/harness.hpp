#pragma once
// Experiment orchestration: physical-parameter scaling, the eps-convergence
// study against the eps = 0 reference, and the config-driven experiment
// runner behind the command-line tool.

#include "lucawave/coupled.hpp"

#include <filesystem>
#include <stdexcept>
#include <string>
#include <vector>

namespace lucawave::harness {

using coupled::FieldState;
using coupled::SurfaceSpec;
using halfline::ZGrid;

// Coefficients of the dimensional membrane/half-space system,
//   rho_memb U'' = kappa Dx U - mu dz v,   rho_bulk v' = mu Dv.
struct PhysicalParams {
    double rho_memb = 0.0;  // surface mass density (kg/m^2)
    double rho_bulk = 0.0;  // volume mass density (kg/m^3)
    double mu = 0.0;        // dynamic viscosity (Pa s)
    double kappa = 0.0;     // membrane stiffness (N/m)
};

// Output of the scaling that normalizes all coefficients except the single
// remaining dimensionless parameter eps.
struct ScalingReport {
    double a = 0.0;        // a^2 = rho_bulk^2 mu^2 / (rho_memb^3 kappa)
    double b = 0.0;        // b = rho_bulk mu / rho_memb^2
    double c = 0.0;        // c = rho_bulk / rho_memb
    double eps = 0.0;      // mu / sqrt(rho_memb kappa) = a / c
    double t_star = 0.0;   // characteristic time rho_memb^2 / (mu rho_bulk)
    double l_thick = 0.0;  // equivalent membrane thickness rho_memb / rho_bulk
    double l_trav = 0.0;   // membrane travel length t_star sqrt(kappa / rho_memb)
    double l_diff = 0.0;   // diffusion length sqrt(mu t_star / rho_bulk) = l_thick
};

ScalingReport nondimensionalize(const PhysicalParams& p);

struct ConvergenceReport {
    std::vector<double> eps_values;     // strictly decreasing, positive
    std::vector<double> errors;         // H-norm gap to the eps = 0 run at t = T
    std::vector<double> bound_margins;  // error / (eps sqrt(T) (2.3 + T)^2 |w0|_Z)
    double fitted_slope = 0.0;          // OLS slope of log error vs log eps
                                        // (0 for identically zero data)
    double precheck_shift = 0.0;        // reference movement under dt, dz halving
    double precheck_threshold = 0.0;    // a tenth of the smallest expected eps gap
};

// The discretization failed its refinement pre-check: the eps = 0 reference
// moved by more than a tenth of the smallest expected eps effect when dt and
// dz were halved, so the sweep would confuse grid error with the eps gap.
class PrecheckError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Sweep simulate_coupled over eps_list (all > 0, strictly decreasing, at
// least two values), measure H-norm gaps at t = T against the eps = 0
// reference on the same grid, and fit the log-log rate.
ConvergenceReport convergence_study(const SurfaceSpec& spec, const ZGrid& grid,
                                    const FieldState& w0, const std::vector<double>& eps_list,
                                    double dt, double T);

enum class RunStatus : int {
    ok = 0,
    config_error = 2,      // unreadable/malformed config, bad values, output not writable
    precheck_failure = 3,  // convergence pre-check rejected the discretization
};

// Run the experiment named in the JSON config (simulate-coupled,
// simulate-fractional, dispersion, energy-audit, converge, nondim), writing
// CSV series plus a summary.json under the output directory.  A non-empty
// output_override replaces the config's output_dir; a non-empty
// expect_experiment must match the config's experiment name.
RunStatus run_experiment(const std::filesystem::path& config_path,
                         const std::filesystem::path& output_override, bool verbose,
                         const std::string& expect_experiment = "");

}  // namespace lucawave::harness
