#include "lucawave/coupled.hpp"

#include "tridiag.hpp"

#include <cmath>
#include <limits>
#include <numbers>
#include <stdexcept>

namespace lucawave::coupled {

namespace {
constexpr double pi = std::numbers::pi;

double trapz_norm2(const std::vector<std::complex<double>>& v, double dz) {
    double acc = 0.5 * dz * (std::norm(v.front()) + std::norm(v.back()));
    for (std::size_t i = 1; i + 1 < v.size(); ++i) acc += dz * std::norm(v[i]);
    return acc;
}

void validate_mode(const ModeState& s, const ZGrid& grid) {
    if (static_cast<int>(s.v.size()) != grid.nodes())
        throw std::invalid_argument("ModeState: bulk trace size must match the grid");
    const double scale = std::max(1.0, std::abs(s.V));
    if (std::abs(s.v.front() - s.V) > 1e-12 * scale)
        throw std::invalid_argument("ModeState: no-slip tie v(0) = V violated");
}
}  // namespace

SurfaceSpec::SurfaceSpec(double ell_, int n_modes_) : ell(ell_), n_modes(n_modes_) {
    if (!(ell > 0.0)) throw std::domain_error("SurfaceSpec: ell must be positive");
    if (n_modes < 1) throw std::domain_error("SurfaceSpec: need at least one mode");
}

double SurfaceSpec::wavenumber(int m) const {
    if (m < 0 || m >= n_modes) throw std::domain_error("SurfaceSpec: mode index out of range");
    return 2.0 * pi * m / ell;
}

double synthesize(const std::vector<std::complex<double>>& amps, const SurfaceSpec& spec,
                  double x) {
    double f = amps.empty() ? 0.0 : amps[0].real();
    for (std::size_t m = 1; m < amps.size(); ++m) {
        const double k = spec.wavenumber(static_cast<int>(m));
        f += std::numbers::sqrt2 *
             (amps[m].real() * std::cos(k * x) - amps[m].imag() * std::sin(k * x));
    }
    return f;
}

double synthesize_ddx(const std::vector<std::complex<double>>& amps, const SurfaceSpec& spec,
                      double x) {
    double f = 0.0;
    for (std::size_t m = 1; m < amps.size(); ++m) {
        const double k = spec.wavenumber(static_cast<int>(m));
        f -= std::numbers::sqrt2 * k *
             (amps[m].real() * std::sin(k * x) + amps[m].imag() * std::cos(k * x));
    }
    return f;
}

FieldState make_field_state(const SurfaceSpec& spec, const ZGrid& grid,
                            const std::vector<std::complex<double>>& U0,
                            const std::vector<std::complex<double>>& V0) {
    if (static_cast<int>(U0.size()) > spec.n_modes || static_cast<int>(V0.size()) > spec.n_modes)
        throw std::invalid_argument("make_field_state: more amplitudes than modes");
    FieldState w;
    w.modes.resize(spec.n_modes);
    for (int m = 0; m < spec.n_modes; ++m) {
        auto& mode = w.modes[m];
        mode.k = spec.wavenumber(m);
        mode.U = m < static_cast<int>(U0.size()) ? U0[m] : 0.0;
        mode.V = m < static_cast<int>(V0.size()) ? V0[m] : 0.0;
        mode.v.assign(grid.nodes(), 0.0);
        for (int i = 0; i < grid.nodes(); ++i)
            mode.v[i] = mode.V * (1.0 - static_cast<double>(i) / grid.cells);
    }
    return w;
}

struct ModeStepper::Impl {
    double k, eps, dt;
    ZGrid grid;
    Options opt;
    std::vector<double> blo, bdi, bup;  // explicit half-step band
    std::unique_ptr<detail::Tridiag> A;

    Impl(double k_, double eps_, const ZGrid& grid_, double dt_, Options opt_)
        : k(k_), eps(eps_), dt(dt_), grid(grid_), opt(opt_) {
        if (!(dt > 0.0)) throw std::invalid_argument("ModeStepper: dt must be positive");
        if (eps < 0.0) throw std::invalid_argument("ModeStepper: eps must be nonnegative");
        const double dz = grid.dz();
        const double c = 0.5 * dt;
        const double ek2 = eps * eps * k * k;
        const std::size_t n = static_cast<std::size_t>(grid.nodes());  // unknowns U,V,v_1..v_{nz-1}

        std::vector<double> lo(n, 0.0), di(n, 0.0), up(n, 0.0);
        blo.assign(n, 0.0);
        bdi.assign(n, 0.0);
        bup.assign(n, 0.0);

        // row 0: U' - c V' = U + c V
        di[0] = 1.0;
        up[0] = -c;
        bdi[0] = 1.0;
        bup[0] = c;

        if (opt.include_flux) {
            // row 1: (1 + dz/2) V' + c [k^2 U' + (V' - v_1')/dz + (dz/2) eps^2 k^2 V'] = ...
            const double mV = 1.0 + 0.5 * dz;
            lo[1] = c * k * k;
            di[1] = mV + c * (1.0 / dz + 0.5 * dz * ek2);
            up[1] = -c / dz;
            blo[1] = -c * k * k;
            bdi[1] = mV - c * (1.0 / dz + 0.5 * dz * ek2);
            bup[1] = c / dz;
        } else {
            // membrane alone: V' + c k^2 U' = V - c k^2 U
            lo[1] = c * k * k;
            di[1] = 1.0;
            blo[1] = -c * k * k;
            bdi[1] = 1.0;
        }

        // rows 2..n-1 (bulk nodes 1..nz-1; the left neighbor of node 1 is V):
        const double lam = c / (dz * dz);
        for (std::size_t r = 2; r < n; ++r) {
            lo[r] = -lam;
            di[r] = 1.0 + 2.0 * lam + c * ek2;
            up[r] = -lam;
            blo[r] = lam;
            bdi[r] = 1.0 - 2.0 * lam - c * ek2;
            bup[r] = lam;
        }
        up[n - 1] = 0.0;  // truncation end v_nz = 0
        bup[n - 1] = 0.0;

        A = std::make_unique<detail::Tridiag>(std::move(lo), std::move(di), std::move(up));
    }

    ModeState step(const ModeState& s) const {
        validate_mode(s, grid);
        const std::size_t n = static_cast<std::size_t>(grid.nodes());
        std::vector<std::complex<double>> y(n);
        y[0] = s.U;
        y[1] = s.V;
        for (std::size_t r = 2; r < n; ++r) y[r] = s.v[r - 1];

        std::vector<std::complex<double>> rhs(n);
        for (std::size_t r = 0; r < n; ++r) {
            std::complex<double> acc = bdi[r] * y[r];
            if (r > 0) acc += blo[r] * y[r - 1];
            if (r + 1 < n) acc += bup[r] * y[r + 1];
            rhs[r] = acc;
        }
        A->solve(rhs);

        ModeState out;
        out.k = s.k;
        out.U = rhs[0];
        out.V = rhs[1];
        out.v.assign(grid.nodes(), 0.0);
        out.v[0] = out.V;  // no-slip, exact by construction
        for (std::size_t r = 2; r < n; ++r) out.v[r - 1] = rhs[r];
        return out;
    }
};

ModeStepper::ModeStepper(double k, double eps, const ZGrid& grid, double dt)
    : ModeStepper(k, eps, grid, dt, Options{}) {}
ModeStepper::ModeStepper(double k, double eps, const ZGrid& grid, double dt, Options opt)
    : impl_(std::make_unique<Impl>(k, eps, grid, dt, opt)) {}
ModeStepper::~ModeStepper() = default;
ModeStepper::ModeStepper(ModeStepper&&) noexcept = default;

ModeState ModeStepper::step(const ModeState& state) const { return impl_->step(state); }

ModeState step_mode(const ModeState& state, const ZGrid& grid, double eps, double dt) {
    return ModeStepper(state.k, eps, grid, dt).step(state);
}

double energy_e0(const FieldState& w, const SurfaceSpec& spec, const ZGrid& grid) {
    double acc = 0.0;
    for (const auto& m : w.modes) {
        validate_mode(m, grid);
        acc += 0.5 * std::norm(m.V) + 0.5 * m.k * m.k * std::norm(m.U) +
               0.5 * trapz_norm2(m.v, grid.dz());
    }
    return spec.ell * acc;
}

double dissipation_e0(const FieldState& w, const SurfaceSpec& spec, const ZGrid& grid,
                      double eps) {
    const double dz = grid.dz();
    double acc = 0.0;
    for (const auto& m : w.modes) {
        double grad = 0.0;
        for (std::size_t i = 0; i + 1 < m.v.size(); ++i) grad += std::norm(m.v[i + 1] - m.v[i]);
        acc += grad / dz + eps * eps * m.k * m.k * trapz_norm2(m.v, dz);
    }
    return spec.ell * acc;
}

NormReport norms(const FieldState& w, const SurfaceSpec& spec, const ZGrid& grid) {
    double h2 = 0.0, g2 = 0.0;
    for (const auto& m : w.modes) {
        const double part = (1.0 + m.k * m.k) * std::norm(m.U) + std::norm(m.V) +
                            trapz_norm2(m.v, grid.dz());
        h2 += part;
        g2 += m.k * m.k * part;
    }
    NormReport r;
    r.h_norm = std::sqrt(spec.ell * h2);
    r.z_norm = r.h_norm + std::sqrt(spec.ell * g2);
    return r;
}

CoupledTrajectory simulate_coupled(const SurfaceSpec& spec, const ZGrid& grid,
                                   const FieldState& w0, double eps, double dt, double T,
                                   SimulateOptions opt) {
    if (static_cast<int>(w0.modes.size()) != spec.n_modes)
        throw std::invalid_argument("simulate_coupled: state does not match the surface spec");
    if (!(T > 0.0)) throw std::invalid_argument("simulate_coupled: T must be positive");
    if (opt.state_stride < 1) throw std::invalid_argument("simulate_coupled: bad state stride");
    const auto nsteps = static_cast<std::size_t>(std::llround(T / dt));

    std::vector<ModeStepper> steppers;
    steppers.reserve(w0.modes.size());
    for (const auto& m : w0.modes) steppers.emplace_back(m.k, eps, grid, dt);

    CoupledTrajectory traj{spec, grid, eps, dt, {}, {}, {}, {}, {}, {}};
    traj.U.assign(w0.modes.size(), {});
    traj.V.assign(w0.modes.size(), {});
    traj.times.reserve(nsteps + 1);

    FieldState w = w0;
    auto record = [&](std::size_t n) {
        traj.times.push_back(dt * static_cast<double>(n));
        for (std::size_t m = 0; m < w.modes.size(); ++m) {
            traj.U[m].push_back(w.modes[m].U);
            traj.V[m].push_back(w.modes[m].V);
        }
        traj.audit.times.push_back(dt * static_cast<double>(n));
        traj.audit.energy.push_back(energy_e0(w, spec, grid));
        traj.audit.dissipation.push_back(dissipation_e0(w, spec, grid, eps));
        if (n % static_cast<std::size_t>(opt.state_stride) == 0 || n == nsteps) {
            traj.state_times.push_back(dt * static_cast<double>(n));
            traj.states.push_back(w);
        }
    };

    record(0);
    for (std::size_t n = 1; n <= nsteps; ++n) {
        for (std::size_t m = 0; m < w.modes.size(); ++m) w.modes[m] = steppers[m].step(w.modes[m]);
        record(n);
    }

    const auto& a = traj.audit;
    traj.audit.balance_residual.assign(a.times.size(),
                                       std::numeric_limits<double>::quiet_NaN());
    for (std::size_t n = 1; n + 1 < a.times.size(); ++n)
        traj.audit.balance_residual[n] =
            std::abs((a.energy[n + 1] - a.energy[n - 1]) / (2.0 * dt) + a.dissipation[n]);
    return traj;
}

}  // namespace lucawave::coupled
