#include "doctest.h"
#include "lucawave/fracwave.hpp"
#include "lucawave/kernels.hpp"

#include <cmath>
#include <complex>
#include <numbers>
#include <stdexcept>
#include <vector>

using namespace lucawave;
using namespace lucawave::fracwave;
using cplx = std::complex<double>;

namespace {

FracWaveState run_steps(FracWaveState s, const FracOrder& alpha, int n, StepOptions opt = {}) {
    for (int i = 0; i < n; ++i) s = step_fractional(s, alpha, opt);
    return s;
}

// memory term reconstructed from the collocation identity a + k^2 U + mem = 0
std::vector<cplx> memory_series(const FracWaveState& s, const std::vector<cplx>& Useries) {
    std::vector<cplx> mem(s.history.accel.size());
    for (std::size_t n = 0; n < mem.size(); ++n)
        mem[n] = -s.history.accel[n] - s.k * s.k * Useries[n + 1];
    return mem;
}

}  // namespace

TEST_SUITE_BEGIN("fracwave");

TEST_CASE("input validation") {
    CHECK_THROWS_AS(make_frac_state(1.0, 1.0, 0.0, 0.0), std::invalid_argument);
    FracWaveState s = make_frac_state(1.0, 1.0, 0.0, 0.1);
    s.history.vel.push_back(0.0);  // now inconsistent with zero accel cells
    CHECK_THROWS_AS(step_fractional(s, FracOrder(0.5)), std::invalid_argument);

    const SurfaceSpec spec(1.0, 2);
    CHECK_THROWS_AS(simulate_fractional(spec, {1.0, 0.0, 0.0}, FracOrder(0.5), 0.1, 1.0),
                    std::invalid_argument);
    CHECK_THROWS_AS(simulate_fractional(spec, {1.0}, FracOrder(0.5), -0.1, 1.0),
                    std::invalid_argument);
    CHECK_THROWS_AS(simulate_fractional(spec, {1.0}, FracOrder(0.5), 0.1, 0.0),
                    std::invalid_argument);
    CHECK_THROWS_AS(simulate_fractional(spec, {1.0}, FracOrder(0.5), 0.1, 0.01),
                    std::invalid_argument);
}

TEST_CASE("memory disabled: first-order approach to the plain oscillator") {
    auto err = [](double dt) {
        FracWaveState s = make_frac_state(1.0, 1.0, 0.0, dt);
        s = run_steps(s, FracOrder(0.5), static_cast<int>(std::llround(1.0 / dt)),
                      {.include_memory = false});
        return std::abs(s.U - std::cos(1.0));
    };
    const double e1 = err(0.01), e2 = err(0.005);
    CHECK(e1 < 0.02);
    CHECK(e1 / e2 > 1.7);
}

TEST_CASE("zero wavenumber at rest is stationary") {
    FracWaveState s = make_frac_state(0.0, 0.42, 0.0, 0.05);
    s = run_steps(s, FracOrder(0.5), 30);
    CHECK(s.U == cplx(0.42, 0.0));
    CHECK(s.V == cplx(0.0, 0.0));
    for (const auto& a : s.history.accel) CHECK(std::abs(a) == 0.0);
}

TEST_CASE("kinematic updates hold exactly along the history") {
    const double dt = 0.05;
    FracWaveState s = make_frac_state(2.0, cplx(1.0, -0.5), cplx(0.0, 0.2), dt);
    std::vector<cplx> Us{s.U}, Vs{s.V};
    for (int n = 0; n < 50; ++n) {
        s = step_fractional(s, FracOrder(0.3));
        Us.push_back(s.U);
        Vs.push_back(s.V);
    }
    cplx vsum = s.history.vel.front();
    for (std::size_t n = 0; n < s.history.accel.size(); ++n) {
        vsum += dt * s.history.accel[n];
        CHECK(std::abs(s.history.vel[n + 1] - Vs[n + 1]) == 0.0);
        CHECK(std::abs(Vs[n + 1] - vsum) <= 1e-13);
        const cplx inc = Us[n + 1] - Us[n] - dt * 0.5 * (Vs[n] + Vs[n + 1]);
        CHECK(std::abs(inc) <= 1e-15 * std::max(1.0, std::abs(Us[n + 1])));
    }
}

TEST_CASE("memory term is the L1 Caputo derivative of the velocity trace") {
    const double dt = 0.05;
    for (double a : {0.25, 0.5, 0.75}) {
        const FracOrder alpha(a);
        FracWaveState s = make_frac_state(1.0, cplx(1.0, 0.5), 0.0, dt);
        std::vector<cplx> Us{s.U};
        for (int n = 0; n < 40; ++n) {
            s = step_fractional(s, alpha);
            Us.push_back(s.U);
        }
        const auto mem = memory_series(s, Us);
        kernels::SampledSignal re{dt, {}}, im{dt, {}};
        for (const auto& v : s.history.vel) {
            re.values.push_back(v.real());
            im.values.push_back(v.imag());
        }
        const auto dre = kernels::caputo_derivative(alpha, re);
        const auto dim = kernels::caputo_derivative(alpha, im);
        for (std::size_t n = 0; n < mem.size(); ++n) {
            const cplx via_caputo(dre.values[n + 1], dim.values[n + 1]);
            CHECK(std::abs(mem[n] - via_caputo) <=
                  1e-12 * std::max(1.0, std::abs(via_caputo)));
        }
    }
}

TEST_CASE("self-convergence at first order with the memory active") {
    auto solve_at_one = [](double dt) {
        FracWaveState s = make_frac_state(1.0, 1.0, 0.0, dt);
        return run_steps(s, FracOrder(0.5), static_cast<int>(std::llround(1.0 / dt))).U;
    };
    const cplx ref = solve_at_one(1.0 / 1024.0);
    const double e1 = std::abs(solve_at_one(1.0 / 64.0) - ref);
    const double e2 = std::abs(solve_at_one(1.0 / 128.0) - ref);
    CHECK(e1 < 0.01);
    CHECK(e1 / e2 > 1.7);
}

TEST_CASE("simulate_fractional reproduces the per-mode stepper") {
    const SurfaceSpec spec(2.0 * std::numbers::pi, 3);
    const std::vector<cplx> U0{0.2, cplx(1.0, 0.3), cplx(0.0, -0.4)};
    const double dt = 0.02;
    const auto traj = simulate_fractional(spec, U0, FracOrder(0.5), dt, 0.5);
    REQUIRE(traj.times.size() == 26);
    for (int m = 0; m < spec.n_modes; ++m) {
        FracWaveState s = make_frac_state(spec.wavenumber(m), U0[m], 0.0, dt);
        for (std::size_t n = 1; n < traj.times.size(); ++n) {
            s = step_fractional(s, FracOrder(0.5));
            CHECK(std::abs(s.U - traj.U[m][n]) <= 1e-13 * std::max(1.0, std::abs(s.U)));
            CHECK(std::abs(s.V - traj.V[m][n]) <= 1e-13 * std::max(1.0, std::abs(s.V)));
        }
        CHECK(traj.history[m].vel.size() == traj.times.size());
        CHECK(traj.history[m].accel.size() + 1 == traj.times.size());
    }
}

TEST_CASE("bulk reconstruction: boundary trace, flux, and memory term agree") {
    const double dt = 0.02;
    FracWaveState s = make_frac_state(1.0, cplx(1.0, -0.3), 0.0, dt);
    std::vector<cplx> Us{s.U};
    for (int n = 0; n < 60; ++n) {
        s = step_fractional(s, FracOrder(0.5));
        Us.push_back(s.U);
    }
    const ZGrid grid(8.0, 40);
    const auto bulk = reconstruct_bulk(s.history, grid);
    REQUIRE(bulk.times.size() == s.history.vel.size());
    for (std::size_t n = 0; n < bulk.times.size(); ++n)
        CHECK(std::abs(bulk.profiles[n][0] - s.history.vel[n]) <= 1e-14);

    // the memory term of the wave equation is the flux of the reconstructed bulk
    const auto mem = memory_series(s, Us);
    for (std::size_t n = 0; n < mem.size(); ++n)
        CHECK(std::abs(mem[n] - bulk.boundary_flux[n + 1]) <=
              1e-10 * std::max(1.0, std::abs(mem[n])));

    FracWaveState moving = make_frac_state(1.0, 1.0, 0.5, dt);
    moving = step_fractional(moving, FracOrder(0.5));
    CHECK_THROWS_AS(reconstruct_bulk(moving.history, grid), std::invalid_argument);
}

TEST_SUITE_END();
