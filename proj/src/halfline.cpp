#include "lucawave/halfline.hpp"

#include "tridiag.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace lucawave::halfline {

namespace {

constexpr double pi = std::numbers::pi;
constexpr double inv_sqrt_pi = 0.5641895835477562869;  // 1/sqrt(pi)

// Antiderivative in u of erf(a/sqrt(u)):
//   T_a(u) = (u + 2a^2) erf(a/sqrt(u)) + (2a/sqrt(pi)) sqrt(u) exp(-a^2/u),
// with the u -> 0 limit 2a|a|.  Feeding the boundary-driven representation
//   v(t,z) = phi(t) + int_0^t phi'(s) erf(z / (2 sqrt(t-s))) ds
// through this antiderivative integrates the kernel exactly over each time
// cell of a piecewise-linear phi.
double erf_antiderivative(double a, double u) {
    if (u <= 0.0) return 2.0 * a * std::abs(a);
    const double q = a / std::sqrt(u);
    return (u + 2.0 * a * a) * std::erf(q) +
           2.0 * a * inv_sqrt_pi * std::sqrt(u) * std::exp(-q * q);
}

// Antiderivative in u of K_1(u,z) = 2 H(u,z):
//   S_z(u) = (2/sqrt(pi)) sqrt(u) exp(-z^2/(4u)) + |z| erf(|z|/(2 sqrt(u))),
// with the u -> 0 limit |z|.  Drives the flux representation
//   d_z v(t,z) = int_0^t K_1(t-s, z) phi'(s) ds.
double flux_antiderivative(double z, double u) {
    const double az = std::abs(z);
    if (u <= 0.0) return az;
    const double q = 0.5 * az / std::sqrt(u);
    return 2.0 * inv_sqrt_pi * std::sqrt(u) * std::exp(-q * q) + az * std::erf(q);
}

void validate_signal(const kernels::SampledSignal& phi) {
    if (!(phi.dt > 0.0)) throw std::invalid_argument("halfline: signal dt must be positive");
    if (phi.size() < 2) throw std::invalid_argument("halfline: need at least two samples");
    if (phi.values.front() != 0.0)
        throw std::invalid_argument("halfline: boundary data must start at zero");
}

// Linear interpolation of a sampled signal; t must not overrun the samples.
double sample_at(const kernels::SampledSignal& phi, double t) {
    const double s = t / phi.dt;
    const auto j = static_cast<std::size_t>(s);
    if (j + 1 >= phi.size()) return phi.values.back();
    const double w = s - static_cast<double>(j);
    return (1.0 - w) * phi.values[j] + w * phi.values[j + 1];
}

}  // namespace

ZGrid::ZGrid(double depth_, int cells_) : depth(depth_), cells(cells_) {
    if (!(depth > 0.0)) throw std::domain_error("ZGrid: depth must be positive");
    if (cells < 3) throw std::domain_error("ZGrid: need at least three cells");
}

HalflineSolution solve_analytic_boundary(const kernels::SampledSignal& phi, const ZGrid& grid) {
    validate_signal(phi);
    const std::size_t n = phi.size() - 1;
    const double dt = phi.dt;

    std::vector<double> dphi(n + 1, 0.0);  // cell slopes, dphi[j] on ((j-1)dt, jdt)
    for (std::size_t j = 1; j <= n; ++j) dphi[j] = (phi.values[j] - phi.values[j - 1]) / dt;

    HalflineSolution sol{grid, {}, {}, {}};
    sol.times.resize(n + 1);
    sol.profiles.assign(n + 1, std::vector<double>(grid.nodes(), 0.0));
    sol.boundary_flux.assign(n + 1, 0.0);

    for (std::size_t m = 0; m <= n; ++m) {
        sol.times[m] = phi.time(m);
        auto& prof = sol.profiles[m];
        prof[0] = phi.values[m];
        for (int i = 1; i < grid.nodes(); ++i) {
            const double a = 0.5 * grid.z(i);
            double acc = phi.values[m];
            for (std::size_t j = 1; j <= m; ++j) {
                const double uhi = dt * static_cast<double>(m - j + 1);
                const double ulo = dt * static_cast<double>(m - j);
                acc += dphi[j] * (erf_antiderivative(a, uhi) - erf_antiderivative(a, ulo));
            }
            prof[i] = acc;
        }
        double flux = 0.0;
        for (std::size_t j = 1; j <= m; ++j) {
            const double uhi = dt * static_cast<double>(m - j + 1);
            const double ulo = dt * static_cast<double>(m - j);
            flux += dphi[j] * (flux_antiderivative(0.0, uhi) - flux_antiderivative(0.0, ulo));
        }
        sol.boundary_flux[m] = flux;
    }
    return sol;
}

std::vector<double> solve_homogeneous_ic(const std::vector<double>& v0, const ZGrid& grid,
                                         double t) {
    if (static_cast<int>(v0.size()) != grid.nodes())
        throw std::invalid_argument("solve_homogeneous_ic: v0 size must match the grid");
    if (!(t > 0.0)) throw std::domain_error("solve_homogeneous_ic: t must be positive");
    const double dz = grid.dz();
    std::vector<double> out(grid.nodes(), 0.0);
    for (int i = 0; i < grid.nodes(); ++i) {
        double acc = 0.0;
        for (int j = 0; j < grid.nodes(); ++j) {
            const double w = (j == 0 || j == grid.cells) ? 0.5 * dz : dz;
            acc += w * kernels::dirichlet_kernel(t, grid.z(i), grid.z(j)) * v0[j];
        }
        out[i] = acc;
    }
    return out;
}

HalflineSolution solve_fd(const std::vector<double>& v0, const kernels::SampledSignal& phi,
                          const ZGrid& grid, double dt, double T) {
    validate_signal(phi);
    if (static_cast<int>(v0.size()) != grid.nodes())
        throw std::invalid_argument("solve_fd: v0 size must match the grid");
    if (!(dt > 0.0) || !(T > 0.0)) throw std::invalid_argument("solve_fd: dt and T must be positive");

    const auto nsteps = static_cast<std::size_t>(std::llround(T / dt));
    if (phi.time(phi.size() - 1) < T - 1e-12 * T)
        throw std::invalid_argument("solve_fd: boundary data does not cover [0,T]");

    const double dz = grid.dz();
    const double lam = 0.5 * dt / (dz * dz);
    const int m = grid.cells - 1;  // interior unknowns, nodes 1..cells-1

    std::vector<double> lo(m, -lam), di(m, 1.0 + 2.0 * lam), up(m, -lam);
    lo[0] = 0.0;
    up[m - 1] = 0.0;
    const detail::Tridiag A(lo, di, up);

    HalflineSolution sol{grid, {}, {}, {}};
    sol.times.resize(nsteps + 1);
    sol.profiles.assign(nsteps + 1, std::vector<double>(grid.nodes(), 0.0));
    sol.boundary_flux.assign(nsteps + 1, 0.0);

    auto flux_of = [&](const std::vector<double>& v) {
        return (3.0 * v[0] - 4.0 * v[1] + v[2]) / (2.0 * dz);
    };

    std::vector<double> v = v0;
    v[0] = sample_at(phi, 0.0);
    v[grid.cells] = 0.0;
    sol.times[0] = 0.0;
    sol.profiles[0] = v;
    sol.boundary_flux[0] = flux_of(v);

    std::vector<double> rhs(m);
    for (std::size_t n = 1; n <= nsteps; ++n) {
        const double t = dt * static_cast<double>(n);
        const double b_new = sample_at(phi, t);
        // explicit half of the boundary term enters through v[0] (old level),
        // the implicit half is moved to the right-hand side
        for (int i = 1; i <= m; ++i)
            rhs[i - 1] = lam * v[i - 1] + (1.0 - 2.0 * lam) * v[i] + lam * v[i + 1];
        rhs[0] += lam * b_new;
        A.solve(rhs);
        for (int i = 1; i <= m; ++i) v[i] = rhs[i - 1];
        v[0] = b_new;
        sol.times[n] = t;
        sol.profiles[n] = v;
        sol.boundary_flux[n] = flux_of(v);
    }
    return sol;
}

kernels::SampledSignal dtn_flux(const kernels::SampledSignal& phi) {
    return kernels::caputo_derivative(kernels::FracOrder(0.5), phi);
}

}  // namespace lucawave::halfline
