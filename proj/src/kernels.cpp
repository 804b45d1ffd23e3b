#include "lucawave/kernels.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace lucawave::kernels {

namespace {
constexpr double pi = std::numbers::pi;
}

FracOrder::FracOrder(double alpha) : alpha_(alpha) {
    if (!(alpha > 0.0) || !(alpha < 1.0))
        throw std::domain_error("FracOrder: alpha must lie strictly in (0,1)");
    g1_ = std::tgamma(1.0 - alpha);
    g2_ = std::tgamma(2.0 - alpha);
    g3_ = std::tgamma(3.0 - alpha);
}

double heat_kernel(double t, double z) {
    if (!(t > 0.0)) throw std::domain_error("heat_kernel: t must be positive");
    return std::exp(-z * z / (4.0 * t)) / std::sqrt(4.0 * pi * t);
}

double dirichlet_kernel(double t, double z, double y) {
    return heat_kernel(t, z - y) - heat_kernel(t, z + y);
}

double gauss_cdf(double y) {
    // H(1,.) is the N(0,2) density, so the cdf is erfc(-y/2)/2.
    return 0.5 * std::erfc(-0.5 * y);
}

double boundary_kernel(KernelOrder j, double t, double z) {
    switch (j) {
        case KernelOrder::K0: return -(z / t) * heat_kernel(t, z);
        case KernelOrder::K1: return 2.0 * heat_kernel(t, z);
    }
    throw std::domain_error("boundary_kernel: bad kernel order");
}

double memory_kernel_m(KernelOrder j, double r, double s) {
    const double u = r + s;
    if (!(u > 0.0)) throw std::domain_error("memory_kernel_m: r+s must be positive");
    const double c = 1.0 / std::sqrt(4.0 * pi);
    return j == KernelOrder::K0 ? c / (u * std::sqrt(u)) : 2.0 * c / std::sqrt(u);
}

double frac_kernel_n(KernelOrder j, const FracOrder& alpha, double r, double s) {
    const double u = r + s;
    if (!(u > 0.0)) throw std::domain_error("frac_kernel_n: r+s must be positive");
    const double a = alpha.alpha();
    return j == KernelOrder::K0 ? a / (alpha.gamma_1ma() * std::pow(u, 1.0 + a))
                                : 1.0 / (alpha.gamma_1ma() * std::pow(u, a));
}

SampledSignal caputo_derivative(const FracOrder& alpha, const SampledSignal& phi) {
    if (!(phi.dt > 0.0)) throw std::invalid_argument("caputo_derivative: dt must be positive");
    if (phi.size() < 2) throw std::invalid_argument("caputo_derivative: need at least two samples");
    if (phi.values.front() != 0.0)
        throw std::invalid_argument("caputo_derivative: signal must start at zero");

    const std::size_t n = phi.size() - 1;
    const double p = 1.0 - alpha.alpha();
    const double scale = std::pow(phi.dt, -alpha.alpha()) / alpha.gamma_2ma();

    std::vector<double> powp(n + 1);
    for (std::size_t i = 0; i <= n; ++i) powp[i] = std::pow(static_cast<double>(i), p);

    SampledSignal out;
    out.dt = phi.dt;
    out.values.assign(n + 1, 0.0);
    for (std::size_t m = 1; m <= n; ++m) {
        double acc = 0.0;
        for (std::size_t j = 1; j <= m; ++j) {
            const double dphi = phi.values[j] - phi.values[j - 1];
            acc += dphi * (powp[m - j + 1] - powp[m - j]);
        }
        out.values[m] = scale * acc;
    }
    return out;
}

}  // namespace lucawave::kernels
