#include "doctest.h"
#include "lucawave/energetics.hpp"
#include "lucawave/fracwave.hpp"
#include "lucawave/halfline.hpp"
#include "oracles.hpp"

#include <cmath>
#include <complex>
#include <numbers>
#include <stdexcept>
#include <vector>

using namespace lucawave;
using namespace lucawave::energetics;
using cplx = std::complex<double>;
constexpr double pi = std::numbers::pi;

namespace {

// history buffer holding samples of a scalar function as its velocity trace
fracwave::HistoryBuffer sampled_history(double dt, std::size_t cells, auto&& f) {
    fracwave::HistoryBuffer h;
    h.dt = dt;
    h.vel.resize(cells + 1);
    h.accel.resize(cells);
    for (std::size_t i = 0; i <= cells; ++i) h.vel[i] = f(static_cast<double>(i) * dt);
    for (std::size_t i = 1; i <= cells; ++i) h.accel[i - 1] = (h.vel[i] - h.vel[i - 1]) / dt;
    return h;
}

std::vector<cplx> velocity_cells(const fracwave::HistoryBuffer& h) {
    std::vector<cplx> c(h.accel.size());
    for (std::size_t i = 0; i < c.size(); ++i) c[i] = 0.5 * (h.vel[i] + h.vel[i + 1]);
    return c;
}

}  // namespace

TEST_SUITE_BEGIN("energetics");

TEST_CASE("dissipation form: unit acceleration over one unit cell, closed form") {
    // int_0^1 int_0^1 (pi (2-r-s))^{-1/2} dr ds = 4/(3 sqrt(pi)) (2^{3/2}-2)
    const double exact = 4.0 / (3.0 * std::sqrt(pi)) * (2.0 * std::numbers::sqrt2 - 2.0);
    CHECK(memory_quadratic(KernelOrder::K1, FracOrder(0.5), 1.0, {1.0}) ==
          doctest::Approx(exact).epsilon(1e-13));

    fracwave::HistoryBuffer h;
    h.dt = 1.0;
    h.vel = {0.0, 1.0};
    h.accel = {1.0};
    CHECK(reduced_dissipation(h, FracOrder(0.5), 1.0, 2.0) ==
          doctest::Approx(2.0 * exact).epsilon(1e-13));
    CHECK(reduced_dissipation(h, FracOrder(0.5), 0.0, 2.0) == 0.0);
}

TEST_CASE("order-1 memory form matches an adaptive 2-D quadrature oracle") {
    // piecewise-constant samples of c(tau) = sin tau on (0, 2]; the oracle
    // integrates the same piecewise-constant integrand with r = T(1 - rho^2),
    // s = T(1 - xi^2), which regularizes the kernel at the r = s = T corner
    const double T = 2.0;
    const std::size_t n = 16;
    const double dt = T / n;
    std::vector<cplx> cells(n);
    for (std::size_t i = 0; i < n; ++i) cells[i] = std::sin((i + 0.5) * dt);
    auto sample = [&](double tau) {
        auto i = static_cast<std::size_t>(std::ceil(tau / dt));
        return std::sin((std::min(std::max<std::size_t>(i, 1), n) - 0.5) * dt);
    };

    for (double a : {0.25, 0.5, 0.75}) {
        const FracOrder alpha(a);
        const double got = memory_quadratic(KernelOrder::K1, alpha, dt, cells);
        const double oracle = oracles::integrate2d(
            [&](double xi, double rho) {
                const double r = T * (1.0 - rho * rho), s = T * (1.0 - xi * xi);
                return 4.0 * T * T * xi * rho *
                       kernels::frac_kernel_n(KernelOrder::K1, alpha, T - r, T - s) * sample(r) *
                       sample(s);
            },
            1e-14, 1.0, 1e-14, 1.0, 1e-9);
        CHECK(got == doctest::Approx(oracle).epsilon(1e-5));
    }
}

TEST_CASE("order-0 memory form: one-cell masses in closed form") {
    // int_0^dt int_0^dt N_0(dt-r, dt-s) dr ds by elementary iterated
    // integration = dt^{1-a} (2 - 2^{1-a}) / Gamma(2-a)
    for (double a : {0.25, 0.5, 0.75}) {
        for (double dt : {0.3, 1.0}) {
            const double exact =
                std::pow(dt, 1.0 - a) * (2.0 - std::pow(2.0, 1.0 - a)) / std::tgamma(2.0 - a);
            const cplx c(0.8, -0.6);  // |c| = 1
            CHECK(memory_quadratic(KernelOrder::K0, FracOrder(a), dt, {c}) ==
                  doctest::Approx(exact).epsilon(1e-13));
        }
    }
}

TEST_CASE("energy memory term for a velocity ramp matches the continuous integral") {
    // U'(tau) = tau on [0,1], alpha = 1/2: continuous double integral of
    // r s / (4 sqrt(pi) (2-r-s)^{3/2}), integrated in corner-regularizing
    // coordinates r = 1-rho^2, s = 1-xi^2
    const double oracle = oracles::integrate2d(
        [](double xi, double rho) {
            const double r = 1.0 - rho * rho, s = 1.0 - xi * xi;
            const double u = rho * rho + xi * xi;
            return 4.0 * xi * rho * r * s / (4.0 * std::sqrt(pi) * std::pow(u, 1.5));
        },
        1e-14, 1.0, 1e-14, 1.0, 1e-9);
    CHECK(oracle == doctest::Approx((112.0 - 64.0 * std::numbers::sqrt2) / (60.0 * std::sqrt(pi)))
                        .epsilon(1e-8));
    // the cell sampling error decays like dt^{3/2} (kernel-weighted corner)
    const std::size_t n = 8192;
    const auto hist = sampled_history(1.0 / n, n, [](double t) { return t; });
    const double e = reduced_energy(hist, 0.0, 0.0, 0.0, FracOrder(0.5), 1.0, 1.0);
    CHECK(e == doctest::Approx(oracle).epsilon(1e-6));
}

TEST_CASE("reduced energy: pure potential term and validation") {
    fracwave::HistoryBuffer h;
    h.dt = 0.1;
    h.vel = {0.0};
    CHECK(reduced_energy(h, 1.0, 0.0, 1.0, FracOrder(0.5), 0.0, 3.0) ==
          doctest::Approx(1.5).epsilon(1e-15));

    CHECK_THROWS_AS(reduced_energy(h, 1.0, 0.0, 1.0, FracOrder(0.5), 0.05, 3.0),
                    std::domain_error);  // off-grid t
    CHECK_THROWS_AS(reduced_energy(h, 1.0, 0.0, 1.0, FracOrder(0.5), 0.1, 3.0),
                    std::domain_error);  // beyond the recorded history
    CHECK_THROWS_AS(reduced_energy(h, 1.0, 0.0, 1.0, FracOrder(0.5), 0.0, 0.0),
                    std::domain_error);  // bad surface length
    h.vel[0] = 0.3;
    CHECK_THROWS_AS(reduced_energy(h, 1.0, 0.0, 1.0, FracOrder(0.5), 0.0, 3.0),
                    std::invalid_argument);  // nonzero initial velocity
}

TEST_CASE("half-space bulk L2 equals the order-0 memory form (alpha = 1/2)") {
    const double T = 2.0;
    const std::size_t n = 256;
    const double dt = T / n;
    const cplx amp(1.0, 0.5);
    const auto hist = sampled_history(dt, n, [&](double t) { return amp * (1.0 - std::cos(t)); });

    const halfline::ZGrid grid(12.0, 960);
    const auto bulk = fracwave::reconstruct_bulk(hist, grid);
    const auto& prof = bulk.profiles.back();
    double l2 = 0.0;
    for (int i = 0; i < grid.nodes(); ++i)
        l2 += (i == 0 || i == grid.cells ? 0.5 : 1.0) * grid.dz() * std::norm(prof[i]);

    const double form = memory_quadratic(KernelOrder::K0, FracOrder(0.5), dt,
                                         velocity_cells(hist));
    CHECK(l2 == doctest::Approx(form).epsilon(1e-3));
}

TEST_CASE("balance audit: zero data, incremental consistency, refinement") {
    const fracwave::SurfaceSpec spec(2.0 * pi, 2);
    const FracOrder alpha(0.5);

    const auto zero = fracwave::simulate_fractional(spec, {0.0, 0.0}, alpha, 0.05, 0.5);
    const auto zero_audit = balance_audit(zero);
    for (std::size_t i = 0; i < zero_audit.times.size(); ++i) {
        CHECK(zero_audit.energy[i] == 0.0);
        CHECK(zero_audit.dissipation[i] == 0.0);
    }

    auto rel_residual = [&](double dt) {
        const auto traj = fracwave::simulate_fractional(spec, {0.0, 1.0}, alpha, dt, 1.0);
        const auto audit = balance_audit(traj);
        const double e0 = audit.energy.front();
        CHECK(e0 == doctest::Approx(pi).epsilon(1e-12));  // ell * k^2 |U|^2 / 2
        double worst = 0.0;
        for (std::size_t i = 0; i + 1 < audit.times.size(); ++i) {
            CHECK(audit.energy[i + 1] <= audit.energy[i] + 1e-10 * e0);  // nonincreasing
            CHECK(audit.dissipation[i] >= -1e-12);
            if (i >= 1) worst = std::max(worst, audit.balance_residual[i]);
        }

        // the incremental evaluation agrees with the direct per-node forms
        const auto& traj_hist = traj.history[1];
        const std::size_t mid = traj.times.size() / 2;
        const double direct =
            reduced_energy(traj_hist, traj.U[1][mid], traj.V[1][mid], spec.wavenumber(1), alpha,
                           traj.times[mid], spec.ell);
        CHECK(audit.energy[mid] == doctest::Approx(direct).epsilon(1e-11));
        const double ddirect =
            reduced_dissipation(traj_hist, alpha, traj.times[mid], spec.ell);
        CHECK(audit.dissipation[mid] == doctest::Approx(ddirect).epsilon(1e-11));
        return worst / e0;
    };
    const double r1 = rel_residual(1.0 / 64.0), r2 = rel_residual(1.0 / 128.0);
    CHECK(r1 < 0.1);
    CHECK(r1 / r2 > 1.8);
}

TEST_CASE("identity of the two balance forms holds under refinement") {
    auto residual = [](auto&& f, double T, double a, std::size_t n) {
        kernels::SampledSignal phi{T / n, {}};
        for (std::size_t i = 0; i <= n; ++i) phi.values.push_back(f(i * phi.dt));
        return identity_check(phi, FracOrder(a));
    };

    const auto square = [](double t) { return t * t; };
    const double s1 = residual(square, 1.0, 0.5, 64), s2 = residual(square, 1.0, 0.5, 128);
    CHECK(s1 < 0.05);
    CHECK(s1 / s2 > 1.7);

    const auto wave = [](double t) { return std::sin(t); };
    const double w1 = residual(wave, 2.0, 0.75, 64), w2 = residual(wave, 2.0, 0.75, 128);
    CHECK(w1 < 0.05);
    CHECK(w1 / w2 > 1.7);

    kernels::SampledSignal zero{0.1, std::vector<double>(11, 0.0)};
    CHECK(identity_check(zero, FracOrder(0.5)) == 0.0);
    kernels::SampledSignal offset{0.1, {1.0, 1.0, 1.0}};
    CHECK_THROWS_AS(identity_check(offset, FracOrder(0.5)), std::invalid_argument);
    kernels::SampledSignal tiny{0.1, {0.0, 1.0}};
    CHECK_THROWS_AS(identity_check(tiny, FracOrder(0.5)), std::invalid_argument);
}

TEST_CASE("kernel Gram matrices are positive semidefinite") {
    for (double a : {0.25, 0.5, 0.75}) {
        const FracOrder alpha(a);
        for (auto j : {KernelOrder::K0, KernelOrder::K1}) {
            const auto single = psd_certificate(j, alpha, {0.7});
            CHECK(single.first == doctest::Approx(kernels::frac_kernel_n(j, alpha, 0.7, 0.7))
                                      .epsilon(1e-15));
            CHECK(single.first == single.second);

            std::vector<double> times(64);
            for (std::size_t i = 0; i < times.size(); ++i) times[i] = (i + 1.0) / 64.0;
            const auto [lo, hi] = psd_certificate(j, alpha, times);
            CHECK(hi > 0.0);
            CHECK(lo >= -1e-10 * hi);
        }
    }
    CHECK_THROWS_AS(psd_certificate(KernelOrder::K0, FracOrder(0.5), {0.5, 0.5}),
                    std::domain_error);
    CHECK_THROWS_AS(psd_certificate(KernelOrder::K0, FracOrder(0.5), {-1.0, 0.5}),
                    std::domain_error);
    CHECK_THROWS_AS(psd_certificate(KernelOrder::K0, FracOrder(0.5), std::vector<double>(513, 1.0)),
                    std::invalid_argument);
    CHECK_THROWS_AS(psd_certificate(KernelOrder::K0, FracOrder(0.5), {}), std::invalid_argument);
}

TEST_CASE("Gaussian-moment identity behind the PSD proof") {
    // int_0^inf y^{2a-1} e^{-b y^2} dy = Gamma(a) / (2 b^a); substitute
    // y = x^{1/(2a)} so the oracle integrand is regular at the origin.
    for (double a : {0.25, 0.5, 0.75}) {
        for (double b : {0.5, 1.0, 2.3}) {
            const double upper = std::pow(40.0 / b, a);
            const double got = oracles::integrate(
                [&](double x) { return std::exp(-b * std::pow(x, 1.0 / a)) / (2.0 * a); }, 0.0,
                upper, 1e-12);
            CHECK(got == doctest::Approx(std::tgamma(a) / (2.0 * std::pow(b, a)))
                             .epsilon(1e-9));
        }
    }
}

TEST_SUITE_END();
