#pragma once
// Diffusion on the half-line z in (-inf, 0], driven by Dirichlet data at
// z = 0: a cell-exact evaluation of the boundary-driven representation
// formula, a Crank-Nicolson finite-difference reference solver on a
// truncated domain, and the Dirichlet-to-Neumann flux map.

#include "lucawave/kernels.hpp"

#include <vector>

namespace lucawave::halfline {

// Uniform grid on [-depth, 0]; node i sits at z = -i*dz, so node 0 is the
// driven boundary and node `cells` is the truncation end.
struct ZGrid {
    ZGrid(double depth, int cells);

    double depth;
    int cells;  // >= 3

    double dz() const { return depth / cells; }
    int nodes() const { return cells + 1; }
    double z(int i) const { return -depth * static_cast<double>(i) / cells; }
};

struct HalflineSolution {
    ZGrid grid;
    std::vector<double> times;
    std::vector<std::vector<double>> profiles;  // profiles[n][i], node 0 = boundary
    std::vector<double> boundary_flux;          // d_z v(t_n, 0)
};

// Boundary-driven solution v(t,z) = int_0^t K_0(t-tau, z) phi(tau) dtau for
// piecewise-linear phi with phi(0) = 0, evaluated through exact antiderivatives
// of the kernel over each time cell (the kernel is never sampled at tau = t).
HalflineSolution solve_analytic_boundary(const kernels::SampledSignal& phi, const ZGrid& grid);

// Homogeneous-boundary solution at time t from initial data v0 on the grid,
// via trapezoidal quadrature of the Dirichlet kernel over the truncated domain.
std::vector<double> solve_homogeneous_ic(const std::vector<double>& v0, const ZGrid& grid,
                                         double t);

// Crank-Nicolson / central-difference solve of v_t = v_zz on the truncated
// domain with v(t,0) = phi(t) and v(t,-depth) = 0.  phi is interpolated
// linearly onto the solver's time grid; the boundary flux uses a one-sided
// second-order stencil.
HalflineSolution solve_fd(const std::vector<double>& v0, const kernels::SampledSignal& phi,
                          const ZGrid& grid, double dt, double T);

// Dirichlet-to-Neumann map of the half-line: d_z v(t,0) is the Caputo
// derivative of order 1/2 of the boundary data.
kernels::SampledSignal dtn_flux(const kernels::SampledSignal& phi);

}  // namespace lucawave::halfline
