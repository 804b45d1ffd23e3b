#pragma once
// Wave equation with fractional damping: per surface mode k the displacement
// solves  U'' = -k^2 U - D^(1+alpha) U,  where D^(1+alpha) is the Caputo
// derivative of order 1+alpha (so order 3/2 at alpha = 1/2, the scaling limit
// of the coupled membrane/half-space system as eps -> 0).
//
// Discretization: endpoint collocation with piecewise-constant acceleration
// per time cell.  Writing a_n for U'' on (t_{n-1}, t_n], the memory term at
// t_n is exactly
//   sum_{j<=n} a_j * w_{n-j},   w_p = dt^{1-alpha}/Gamma(2-alpha) *
//                                     ((p+1)^{1-alpha} - p^{1-alpha}),
// which coincides with the L1 Caputo derivative of the velocity trace, since
// velocity increments are dt * a_j by construction.  The kinematic updates
//   U_n = U_{n-1} + dt (V_{n-1}+V_n)/2,   V_n = V_{n-1} + dt a_n
// make the scheme first order and unconditionally stable.

#include "lucawave/coupled.hpp"
#include "lucawave/halfline.hpp"
#include "lucawave/kernels.hpp"

#include <complex>
#include <vector>

namespace lucawave::fracwave {

using coupled::SurfaceSpec;
using halfline::ZGrid;
using kernels::FracOrder;

// Discrete history of one mode: velocity at the time nodes t_j = j dt and
// acceleration on the cells (t_{j-1}, t_j].  vel.size() == accel.size() + 1.
struct HistoryBuffer {
    double dt = 0.0;
    std::vector<std::complex<double>> vel;
    std::vector<std::complex<double>> accel;
};

struct FracWaveState {
    double k = 0.0;
    std::complex<double> U{0.0, 0.0};
    std::complex<double> V{0.0, 0.0};
    HistoryBuffer history;
};

FracWaveState make_frac_state(double k, std::complex<double> U0, std::complex<double> V0,
                              double dt);

struct StepOptions {
    bool include_memory = true;  // false leaves the undamped oscillator (test hook)
};

// Advance one step of size state.history.dt, appending to the history.
FracWaveState step_fractional(const FracWaveState& state, const FracOrder& alpha,
                              StepOptions opt = {});

struct FracTrajectory {
    SurfaceSpec spec;
    FracOrder alpha;
    double dt = 0.0;
    std::vector<double> times;
    std::vector<std::vector<std::complex<double>>> U, V;  // [mode][step]
    std::vector<HistoryBuffer> history;                   // [mode]
};

// Evolve every mode of the surface from displacement amplitudes U0 at rest
// (V0 = 0).  Modes are independent; the convolution weights are shared.
FracTrajectory simulate_fractional(const SurfaceSpec& spec,
                                   const std::vector<std::complex<double>>& U0,
                                   const FracOrder& alpha, double dt, double T);

// Half-space field recovered from a recorded boundary velocity (alpha = 1/2
// only: the memory kernel is the Dirichlet-to-Neumann map of the heat
// equation, so the bulk is the diffusion driven by that boundary data).
struct BulkReconstruction {
    ZGrid grid;
    std::vector<double> times;
    std::vector<std::vector<std::complex<double>>> profiles;  // [step][node]
    std::vector<std::complex<double>> boundary_flux;
};

BulkReconstruction reconstruct_bulk(const HistoryBuffer& history, const ZGrid& grid);

}  // namespace lucawave::fracwave
