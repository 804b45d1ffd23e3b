#pragma once
// Plane-wave analysis of the coupled membrane/half-space system.  The ansatz
// (U, V, v) = e^{mu t + i k x} (a, a mu, a mu e^{gamma z}) on z < 0 requires
//   mu^2 = -k^2 - mu gamma   (membrane)  and  gamma^2 = mu + eps^2 k^2
// (diffusion); eliminating gamma yields the quartic
//   Gamma(mu, k) = (mu^2 + k^2)^2 - eps^2 mu^2 k^2 - mu^3 = 0.
// The membrane relation fixes the branch gamma = -(mu^2 + k^2)/mu, which at a
// root squares to mu + eps^2 k^2; a mode is admissible when it decays in time
// (Re mu <= 0) and in depth (Re gamma > 0).  Only half the quartic roots
// survive that filter, the others entered when gamma was squared away.

#include <complex>
#include <vector>

namespace lucawave::dispersion {

struct DispersionRoot {
    double k = 0.0;
    double eps = 0.0;
    std::complex<double> mu;     // temporal factor, mu = i omega
    std::complex<double> gamma;  // vertical decay rate of the bulk profile
    double residual = 0.0;       // |Gamma(mu, k)|
    bool admissible = false;
};

// The quartic evaluated exactly as written above.
std::complex<double> gamma_residual(std::complex<double> mu, double k, double eps);

// All four roots of Gamma(., k) = 0 via companion-matrix eigenvalues refined
// by simultaneous Aberth iteration (robust to the extreme root-magnitude
// spread of the long-wave regime), each tagged with its branch-consistent
// gamma and the admissibility flag.  Sorted by (Im mu, Re mu).  Requires
// k > 0 (at k = 0 the quartic degenerates to mu^3 (mu - 1), all inadmissible).
std::vector<DispersionRoot> solve_dispersion(double k, double eps);

// Decay exponents of the fractionally damped wave equation at eps = 0:
// mu^2 + mu^{3/2} + k^2 = 0 solved through nu = mu^{1/2} (principal branch),
// keeping the branch-consistent roots with Re nu > 0 and Re mu <= 0.
std::vector<std::complex<double>> fractional_dispersion(double k);

// Leading-order long-wave root -(1/2 - i sqrt(3)/2) k^{4/3} (the conjugate is
// also a root); valid as k -> 0 for every eps >= 0.
std::complex<double> longwave_asymptote(double k);

// Leading-order short-wave root -i k - (k/2) sqrt(eps^2 - i/k) (principal
// square root); valid as k -> infinity.
std::complex<double> shortwave_asymptote(double k, double eps);

}  // namespace lucawave::dispersion
