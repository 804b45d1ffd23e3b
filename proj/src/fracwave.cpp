#include "lucawave/fracwave.hpp"

#include <cmath>
#include <stdexcept>

namespace lucawave::fracwave {

namespace {

using cplx = std::complex<double>;

void validate_history(const HistoryBuffer& h) {
    if (!(h.dt > 0.0)) throw std::invalid_argument("fracwave: dt must be positive");
    if (h.vel.size() != h.accel.size() + 1)
        throw std::invalid_argument("fracwave: history must hold one more velocity than cells");
}

// w_p for the collocated memory sum; powp[i] caches i^{1-alpha}.
std::vector<double> convolution_weights(const FracOrder& alpha, double dt, std::size_t n) {
    const double ex = 1.0 - alpha.alpha();
    const double scale = std::pow(dt, ex) / alpha.gamma_2ma();
    std::vector<double> w(n);
    double prev = 0.0;
    for (std::size_t p = 0; p < n; ++p) {
        const double next = std::pow(static_cast<double>(p + 1), ex);
        w[p] = scale * (next - prev);
        prev = next;
    }
    return w;
}

// Core recurrence shared by the one-shot step and the full simulation.  The
// weight table must cover lags 0 .. accel.size().
cplx collocated_accel(const FracWaveState& s, const std::vector<double>& w, bool memory,
                      double dt) {
    const std::size_t n = s.history.accel.size() + 1;
    cplx rhs = -s.k * s.k * (s.U + dt * s.V);
    if (memory)
        for (std::size_t j = 1; j < n; ++j) rhs -= s.history.accel[j - 1] * w[n - j];
    const double diag = 1.0 + (memory ? w[0] : 0.0) + 0.5 * s.k * s.k * dt * dt;
    return rhs / diag;
}

void apply_updates(FracWaveState& s, cplx a, double dt) {
    s.U += dt * s.V + 0.5 * dt * dt * a;
    s.V += dt * a;
    s.history.accel.push_back(a);
    s.history.vel.push_back(s.V);
}

}  // namespace

FracWaveState make_frac_state(double k, cplx U0, cplx V0, double dt) {
    if (!(dt > 0.0)) throw std::invalid_argument("make_frac_state: dt must be positive");
    FracWaveState s;
    s.k = k;
    s.U = U0;
    s.V = V0;
    s.history.dt = dt;
    s.history.vel = {V0};
    return s;
}

FracWaveState step_fractional(const FracWaveState& state, const FracOrder& alpha,
                              StepOptions opt) {
    validate_history(state.history);
    const double dt = state.history.dt;
    const auto w = convolution_weights(alpha, dt, state.history.accel.size() + 1);
    FracWaveState out = state;
    apply_updates(out, collocated_accel(state, w, opt.include_memory, dt), dt);
    return out;
}

FracTrajectory simulate_fractional(const SurfaceSpec& spec, const std::vector<cplx>& U0,
                                   const FracOrder& alpha, double dt, double T) {
    if (static_cast<int>(U0.size()) > spec.n_modes)
        throw std::invalid_argument("simulate_fractional: more amplitudes than modes");
    if (!(dt > 0.0)) throw std::invalid_argument("simulate_fractional: dt must be positive");
    if (!(T > 0.0)) throw std::invalid_argument("simulate_fractional: T must be positive");
    const auto nsteps = static_cast<std::size_t>(std::llround(T / dt));
    if (nsteps == 0) throw std::invalid_argument("simulate_fractional: T shorter than one step");

    const auto w = convolution_weights(alpha, dt, nsteps + 1);

    FracTrajectory traj{spec, alpha, dt, {}, {}, {}, {}};
    traj.times.resize(nsteps + 1);
    for (std::size_t n = 0; n <= nsteps; ++n) traj.times[n] = static_cast<double>(n) * dt;
    traj.U.assign(spec.n_modes, {});
    traj.V.assign(spec.n_modes, {});
    traj.history.resize(spec.n_modes);

    for (int m = 0; m < spec.n_modes; ++m) {
        FracWaveState s = make_frac_state(spec.wavenumber(m),
                                          m < static_cast<int>(U0.size()) ? U0[m] : cplx{}, 0.0,
                                          dt);
        s.history.vel.reserve(nsteps + 1);
        s.history.accel.reserve(nsteps);
        traj.U[m].reserve(nsteps + 1);
        traj.V[m].reserve(nsteps + 1);
        traj.U[m].push_back(s.U);
        traj.V[m].push_back(s.V);
        for (std::size_t n = 1; n <= nsteps; ++n) {
            apply_updates(s, collocated_accel(s, w, true, dt), dt);
            traj.U[m].push_back(s.U);
            traj.V[m].push_back(s.V);
        }
        traj.history[m] = std::move(s.history);
    }
    return traj;
}

BulkReconstruction reconstruct_bulk(const HistoryBuffer& history, const ZGrid& grid) {
    validate_history(history);
    if (history.vel.front() != 0.0)
        throw std::invalid_argument(
            "reconstruct_bulk: boundary velocity must start from rest (quiescent bulk)");
    kernels::SampledSignal re{history.dt, {}}, im{history.dt, {}};
    re.values.reserve(history.vel.size());
    im.values.reserve(history.vel.size());
    for (const auto& v : history.vel) {
        re.values.push_back(v.real());
        im.values.push_back(v.imag());
    }
    const auto sol_re = halfline::solve_analytic_boundary(re, grid);
    const auto sol_im = halfline::solve_analytic_boundary(im, grid);

    BulkReconstruction out{grid, sol_re.times, {}, {}};
    out.profiles.resize(sol_re.profiles.size());
    for (std::size_t n = 0; n < sol_re.profiles.size(); ++n) {
        out.profiles[n].resize(grid.nodes());
        for (int i = 0; i < grid.nodes(); ++i)
            out.profiles[n][i] = cplx(sol_re.profiles[n][i], sol_im.profiles[n][i]);
    }
    out.boundary_flux.resize(sol_re.boundary_flux.size());
    for (std::size_t n = 0; n < sol_re.boundary_flux.size(); ++n)
        out.boundary_flux[n] = cplx(sol_re.boundary_flux[n], sol_im.boundary_flux[n]);
    return out;
}

}  // namespace lucawave::fracwave
