#include "lucawave/harness.hpp"

#include <cmath>
#include <sstream>

namespace lucawave::harness {

namespace {

void require_positive(double value, const char* name) {
    if (!(value > 0.0) || !std::isfinite(value)) {
        std::ostringstream msg;
        msg << "nondimensionalize: " << name << " must be positive and finite, got " << value;
        throw std::domain_error(msg.str());
    }
}

// Linear prolongation of the bulk profiles onto the once-refined grid; exact
// on the piecewise-linear functions the coarse grid can represent.
FieldState refine_state(const FieldState& w, const ZGrid& coarse) {
    FieldState out;
    out.modes.reserve(w.modes.size());
    for (const auto& mode : w.modes) {
        coupled::ModeState fine;
        fine.k = mode.k;
        fine.U = mode.U;
        fine.V = mode.V;
        fine.v.resize(2 * coarse.cells + 1);
        for (int i = 0; i < coarse.cells; ++i) {
            fine.v[2 * i] = mode.v[i];
            fine.v[2 * i + 1] = 0.5 * (mode.v[i] + mode.v[i + 1]);
        }
        fine.v.back() = mode.v.back();
        out.modes.push_back(std::move(fine));
    }
    return out;
}

// Pointwise difference of two states on the same grid (restricting the
// second one from the once-refined grid when sizes differ by doubling).
FieldState state_difference(const FieldState& a, const FieldState& b) {
    FieldState out = a;
    for (std::size_t m = 0; m < out.modes.size(); ++m) {
        auto& mode = out.modes[m];
        const auto& other = b.modes[m];
        mode.U -= other.U;
        mode.V -= other.V;
        const bool refined = other.v.size() == 2 * mode.v.size() - 1;
        for (std::size_t i = 0; i < mode.v.size(); ++i)
            mode.v[i] -= other.v[refined ? 2 * i : i];
    }
    return out;
}

FieldState final_state(const SurfaceSpec& spec, const ZGrid& grid, const FieldState& w0,
                       double eps, double dt, double T) {
    coupled::SimulateOptions opt;
    opt.state_stride = 1 << 30;  // only the final state is needed
    return simulate_coupled(spec, grid, w0, eps, dt, T, opt).states.back();
}

}  // namespace

ScalingReport nondimensionalize(const PhysicalParams& p) {
    require_positive(p.rho_memb, "rho_memb");
    require_positive(p.rho_bulk, "rho_bulk");
    require_positive(p.mu, "mu");
    require_positive(p.kappa, "kappa");

    ScalingReport r;
    r.b = p.rho_bulk * p.mu / (p.rho_memb * p.rho_memb);
    r.c = p.rho_bulk / p.rho_memb;
    r.eps = p.mu / std::sqrt(p.rho_memb * p.kappa);
    r.a = r.eps * r.c;
    r.t_star = 1.0 / r.b;
    r.l_thick = 1.0 / r.c;
    r.l_trav = r.t_star * std::sqrt(p.kappa / p.rho_memb);
    r.l_diff = std::sqrt(p.mu * r.t_star / p.rho_bulk);
    return r;
}

ConvergenceReport convergence_study(const SurfaceSpec& spec, const ZGrid& grid,
                                    const FieldState& w0, const std::vector<double>& eps_list,
                                    double dt, double T) {
    if (eps_list.size() < 2)
        throw std::invalid_argument("convergence_study: need at least two eps values");
    for (std::size_t i = 0; i < eps_list.size(); ++i) {
        if (!(eps_list[i] > 0.0))
            throw std::invalid_argument("convergence_study: eps values must be positive");
        if (i > 0 && !(eps_list[i] < eps_list[i - 1]))
            throw std::invalid_argument("convergence_study: eps values must be strictly decreasing");
    }

    ConvergenceReport report;
    report.eps_values = eps_list;

    const double z0 = coupled::norms(w0, spec, grid).z_norm;
    const double envelope = std::sqrt(T) * (2.3 + T) * (2.3 + T) * z0;
    if (z0 == 0.0) {
        // Zero data stays zero at every eps; nothing to measure.
        report.errors.assign(eps_list.size(), 0.0);
        report.bound_margins.assign(eps_list.size(), 0.0);
        return report;
    }

    // Reference and its refinement pre-check: halving dt and dz must move the
    // eps = 0 solution by well under the smallest eps effect we try to
    // resolve, otherwise the sweep measures grid error, not the eps gap.
    const FieldState ref = final_state(spec, grid, w0, 0.0, dt, T);
    const ZGrid fine_grid(grid.depth, 2 * grid.cells);
    const FieldState ref_fine =
        final_state(spec, fine_grid, refine_state(w0, grid), 0.0, 0.5 * dt, T);
    report.precheck_shift =
        coupled::norms(state_difference(ref, ref_fine), spec, grid).h_norm;
    report.precheck_threshold = 0.1 * eps_list.back() * envelope;
    if (!(report.precheck_shift < report.precheck_threshold)) {
        std::ostringstream msg;
        msg << "convergence_study pre-check failed: halving dt and dz moved the eps = 0 "
            << "reference by " << report.precheck_shift << " in the H norm, but resolving "
            << "eps = " << eps_list.back() << " requires less than " << report.precheck_threshold
            << "; refine dt/n_z (or drop the smallest eps values)";
        throw PrecheckError(msg.str());
    }

    report.errors.reserve(eps_list.size());
    report.bound_margins.reserve(eps_list.size());
    for (double eps : eps_list) {
        const FieldState we = final_state(spec, grid, w0, eps, dt, T);
        const double err = coupled::norms(state_difference(we, ref), spec, grid).h_norm;
        report.errors.push_back(err);
        report.bound_margins.push_back(err / (eps * envelope));
    }

    // Least-squares slope of log error against log eps.
    double sx = 0.0, sy = 0.0, sxx = 0.0, sxy = 0.0;
    bool all_positive = true;
    for (std::size_t i = 0; i < eps_list.size(); ++i) {
        if (!(report.errors[i] > 0.0)) {
            all_positive = false;
            break;
        }
        const double x = std::log(eps_list[i]);
        const double y = std::log(report.errors[i]);
        sx += x;
        sy += y;
        sxx += x * x;
        sxy += x * y;
    }
    if (all_positive) {
        const double n = static_cast<double>(eps_list.size());
        report.fitted_slope = (n * sxy - sx * sy) / (n * sxx - sx * sx);
    }
    return report;
}

}  // namespace lucawave::harness
