#pragma once
// Closed-form kernels of half-space diffusion driven through its boundary,
// the time-nonlocal memory kernels they induce on the surface, and the L1
// discretization of the Caputo fractional derivative.

#include <cstddef>
#include <vector>

namespace lucawave::kernels {

// Uniformly sampled scalar signal: values[i] taken at t = i*dt.
struct SampledSignal {
    double dt = 0.0;
    std::vector<double> values;

    std::size_t size() const { return values.size(); }
    double time(std::size_t i) const { return dt * static_cast<double>(i); }
};

// Fractional order alpha in (0,1) with the Gamma-function factors the L1
// scheme needs, computed once at construction.
class FracOrder {
public:
    explicit FracOrder(double alpha);

    double alpha() const { return alpha_; }
    double gamma_1ma() const { return g1_; }  // Gamma(1-alpha)
    double gamma_2ma() const { return g2_; }  // Gamma(2-alpha)
    double gamma_3ma() const { return g3_; }  // Gamma(3-alpha)

private:
    double alpha_, g1_, g2_, g3_;
};

// Which boundary trace a kernel belongs to: K0 = 2 d_z H drives the field
// from Dirichlet data, K1 = 2 H drives the boundary flux from its rate.
enum class KernelOrder : int { K0 = 0, K1 = 1 };

// Free-space heat kernel H(t,z) = (4 pi t)^{-1/2} exp(-z^2/(4t)).  t > 0.
double heat_kernel(double t, double z);

// Dirichlet kernel of the half-line, H(t,z-y) - H(t,z+y) (odd reflection).
double dirichlet_kernel(double t, double z, double y);

// G(y) = integral of H(1,.) over (-inf, y]; equals erfc(-y/2)/2.
double gauss_cdf(double y);

// K_j(t,z): K0 = -(z/t) H(t,z), K1 = 2 H(t,z).  t > 0.
double boundary_kernel(KernelOrder j, double t, double z);

// Overlap of two boundary kernels over the half-line,
//   M_j(r,s) = int_{-inf}^0 K_j(r,z) K_j(s,z) dz = 2^j (4pi)^{-1/2} (r+s)^{j-3/2}.
// Depends on r and s through r+s only; requires r+s > 0.
double memory_kernel_m(KernelOrder j, double r, double s);

// Fractional generalizations, which reduce to M_j at alpha = 1/2:
//   N_0 = alpha / (Gamma(1-alpha) (r+s)^{1+alpha}),
//   N_1 = 1 / (Gamma(1-alpha) (r+s)^{alpha}).
// Requires r+s > 0.
double frac_kernel_n(KernelOrder j, const FracOrder& alpha, double r, double s);

// Caputo derivative of order alpha on a uniform grid (L1 scheme): phi is
// taken piecewise linear, the singular kernel is integrated exactly over
// each cell, so the result is exact whenever phi is affine.  Requires at
// least two samples and phi(0) = 0; output sample 0 is 0.
SampledSignal caputo_derivative(const FracOrder& alpha, const SampledSignal& phi);

}  // namespace lucawave::kernels
