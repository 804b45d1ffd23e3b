#pragma once
// Non-local reduced energy and dissipation of the fractionally damped wave
// equation.  Both are double time integrals of the history against kernels
//   N_0^alpha(r,s) = alpha / (Gamma(1-alpha) (r+s)^{1+alpha}),
//   N_1^alpha(r,s) = 1 / (Gamma(1-alpha) (r+s)^{alpha}),
// evaluated at (t-r, t-s).  The kernels depend on r+s only, so the kernel
// mass of every rectangular history cell is a second-antiderivative
// difference in closed form: the quadrature is exact for piecewise-constant
// samples and the singular corner r = s = t needs no special casing.  At
// alpha = 1/2 the kernels coincide with the half-space overlap kernels M_j,
// which ties these forms back to the bulk L2 energy of the diffusion field.

#include "lucawave/energy_audit.hpp"
#include "lucawave/fracwave.hpp"
#include "lucawave/kernels.hpp"

#include <complex>
#include <utility>
#include <vector>

namespace lucawave::energetics {

using fracwave::FracTrajectory;
using fracwave::HistoryBuffer;
using kernels::FracOrder;
using kernels::KernelOrder;

// int_0^T int_0^T N_j^alpha(T-r, T-s) conj(c(r)) c(s) dr ds for
// piecewise-constant complex samples c on the cells ((i-1)dt, i dt],
// with T = cells.size() * dt.  Exact up to roundoff for these samples.
double memory_quadratic(KernelOrder j, const FracOrder& alpha, double dt,
                        const std::vector<std::complex<double>>& cells);

// Reduced energy of one surface mode at time t (a node of the history grid):
//   ell * [ |V|^2/2 + k^2 |U|^2/2 + 1/2 * N_0 form of the velocity history ],
// the velocity entering as cell averages (exact for the piecewise-linear
// velocity produced by the fractional stepper).  Requires vel[0] = 0.
double reduced_energy(const HistoryBuffer& hist, std::complex<double> U_now,
                      std::complex<double> V_now, double k, const FracOrder& alpha, double t,
                      double ell);

// Reduced dissipation at time t = n dt: ell times the N_1 form of the
// acceleration cells up to n (no extra factor 1/2).
double reduced_dissipation(const HistoryBuffer& hist, const FracOrder& alpha, double t,
                           double ell);

// Reduced energy/dissipation per time node of a fractional trajectory,
// summed over modes, plus the centered balance residual |dE/dt + D| at
// interior nodes (NaN at the two ends).
EnergyAudit balance_audit(const FracTrajectory& traj);

// Max interior-node residual of the identity
//   d/dt [ 1/2 int int N_0(t-r,t-s) phi(r) phi(s) ]
//     = phi(t) * D^alpha phi(t) - int int N_1(t-r,t-s) phi'(r) phi'(s)
// for a sampled phi with phi(0) = 0, using centered differencing for d/dt.
// Vanishes under refinement for continuously differentiable phi.
double identity_check(const kernels::SampledSignal& phi, const FracOrder& alpha);

// Extreme eigenvalues (min, max) of the Gram matrix [N_j^alpha(t_a, t_b)]
// conjugated by the square root of the trapezoid quadrature weights, so a
// nonnegative minimum certifies positive semidefiniteness of the memory
// quadratic form on that time grid.  At most 512 strictly increasing
// positive times.
std::pair<double, double> psd_certificate(KernelOrder j, const FracOrder& alpha,
                                          const std::vector<double>& times);

}  // namespace lucawave::energetics
