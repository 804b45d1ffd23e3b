#pragma once
// Membrane wave equation on a periodic surface coupled to diffusion in the
// half-space below, diagonalized over Fourier modes in x.  Per mode k the
// state is (U, V, v(z)) with the no-slip tie v(0) = V, evolving as
//   U' = V,   V' = -k^2 U - d_z v|_0,   v' = -eps^2 k^2 v + d_zz v,
// advanced by one monolithic Crank-Nicolson step per mode: a single real
// tridiagonal solve in the ordering (U, V, v_1, ..., v_{nz-1}).  The scheme
// dissipates the discrete energy exactly, so the Lyapunov property holds
// step by step up to roundoff.

#include "lucawave/energy_audit.hpp"
#include "lucawave/halfline.hpp"

#include <complex>
#include <memory>
#include <vector>

namespace lucawave::coupled {

using halfline::ZGrid;

// Periodic surface of length ell carrying modes m = 0 .. n_modes-1 at
// wavenumber k_m = 2 pi m / ell.
//
// Real-field convention: mode 0 is the mean (real amplitude); a mode m >= 1
// with amplitude c = a + i b contributes sqrt(2) (a cos(k_m x) - b sin(k_m x)),
// so Parseval reads  int_0^ell f g dx = ell * sum_m Re(conj(f_m) g_m).
struct SurfaceSpec {
    SurfaceSpec(double ell, int n_modes);

    double ell;
    int n_modes;

    double wavenumber(int m) const;
};

// Evaluate the real field of the given mode amplitudes at x (and its x
// derivative), following the convention above.
double synthesize(const std::vector<std::complex<double>>& amps, const SurfaceSpec& spec,
                  double x);
double synthesize_ddx(const std::vector<std::complex<double>>& amps, const SurfaceSpec& spec,
                      double x);

struct ModeState {
    double k = 0.0;
    std::complex<double> U{0.0, 0.0};
    std::complex<double> V{0.0, 0.0};
    std::vector<std::complex<double>> v;  // bulk trace on ZGrid nodes; v[0] == V, v.back() == 0
};

struct FieldState {
    std::vector<ModeState> modes;
};

// Build a state with the given surface amplitudes and quiescent bulk
// (v = no-slip value at the surface ramped linearly to 0 if V != 0).
FieldState make_field_state(const SurfaceSpec& spec, const ZGrid& grid,
                            const std::vector<std::complex<double>>& U0,
                            const std::vector<std::complex<double>>& V0 = {});

// One-mode Crank-Nicolson stepper with the tridiagonal factorization reused
// across steps.
class ModeStepper {
public:
    struct Options {
        bool include_flux = true;  // false decouples the membrane (test hook)
    };

    ModeStepper(double k, double eps, const ZGrid& grid, double dt);
    ModeStepper(double k, double eps, const ZGrid& grid, double dt, Options opt);
    ~ModeStepper();
    ModeStepper(ModeStepper&&) noexcept;

    ModeState step(const ModeState& state) const;

private:
    struct Impl;
    std::unique_ptr<Impl> impl_;
};

// Convenience single-step wrapper (factors the system each call).
ModeState step_mode(const ModeState& state, const ZGrid& grid, double eps, double dt);

struct SimulateOptions {
    int state_stride = 1;  // record a full FieldState every this many steps
};

struct CoupledTrajectory {
    SurfaceSpec spec;
    ZGrid grid;
    double eps = 0.0, dt = 0.0;
    std::vector<double> times;
    std::vector<std::vector<std::complex<double>>> U, V;  // [mode][step]
    std::vector<double> state_times;
    std::vector<FieldState> states;  // every state_stride steps, final always included
    EnergyAudit audit;
};

CoupledTrajectory simulate_coupled(const SurfaceSpec& spec, const ZGrid& grid,
                                   const FieldState& w0, double eps, double dt, double T,
                                   SimulateOptions opt = {});

// Total energy: ell * sum_m [ |V|^2/2 + k^2 |U|^2 / 2 + trapz |v|^2 / 2 ].
double energy_e0(const FieldState& w, const SurfaceSpec& spec, const ZGrid& grid);

// Instantaneous dissipation rate of the same energy:
// ell * sum_m [ trapz |d_z v|^2 (as backward differences) + eps^2 k^2 trapz |v|^2 ].
double dissipation_e0(const FieldState& w, const SurfaceSpec& spec, const ZGrid& grid, double eps);

struct NormReport {
    double h_norm = 0.0;  // sqrt(ell sum_m (1+k^2)|U|^2 + |V|^2 + trapz |v|^2)
    double z_norm = 0.0;  // h_norm + same norm of the x-gradient (mode weights k)
};

NormReport norms(const FieldState& w, const SurfaceSpec& spec, const ZGrid& grid);

}  // namespace lucawave::coupled
