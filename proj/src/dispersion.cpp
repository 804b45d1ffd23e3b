#include "lucawave/dispersion.hpp"

#include <Eigen/Dense>

#include <algorithm>
#include <array>
#include <cmath>
#include <limits>
#include <stdexcept>

namespace lucawave::dispersion {

namespace {

using cplx = std::complex<double>;

// Horner pass for the monic quartic c4 = 1: value, derivative, and the
// roundoff scale sum |c_j| |x|^j used as the convergence yardstick.
void eval_quartic(const std::array<double, 5>& coeff, cplx x, cplx& p, cplx& dp, double& scale) {
    p = coeff[4];
    dp = 0.0;
    scale = std::abs(coeff[4]);
    const double ax = std::abs(x);
    for (int j = 3; j >= 0; --j) {
        dp = dp * x + p;
        p = p * x + coeff[j];
        scale = scale * ax + std::abs(coeff[j]);
    }
}

// Aberth-Ehrlich simultaneous iteration; a root counts as converged once its
// residual is explained by the roundoff of evaluating the polynomial there.
bool aberth(const std::array<double, 5>& coeff, std::array<cplx, 4>& z, int max_iter) {
    // coincident points would make the repulsion term blow up
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < i; ++j)
            if (z[i] == z[j]) z[i] += 1e-8 * (1.0 + std::abs(z[i])) * cplx(1.0, 1.0);

    constexpr double tol = 8.0 * std::numeric_limits<double>::epsilon();
    for (int iter = 0; iter < max_iter; ++iter) {
        bool moved = false;
        for (int i = 0; i < 4; ++i) {
            cplx p, dp;
            double scale;
            eval_quartic(coeff, z[i], p, dp, scale);
            if (std::abs(p) <= tol * scale) continue;
            moved = true;
            if (dp == cplx(0.0, 0.0)) {
                z[i] += 1e-8 * (1.0 + std::abs(z[i]));
                continue;
            }
            const cplx w = p / dp;
            cplx repulsion = 0.0;
            for (int j = 0; j < 4; ++j)
                if (j != i) repulsion += 1.0 / (z[i] - z[j]);
            const cplx denom = 1.0 - w * repulsion;
            z[i] -= denom == cplx(0.0, 0.0) ? w : w / denom;
        }
        if (!moved) return true;
    }
    for (int i = 0; i < 4; ++i) {
        cplx p, dp;
        double scale;
        eval_quartic(coeff, z[i], p, dp, scale);
        if (!(std::abs(p) <= tol * scale)) return false;
    }
    return true;
}

// Roots of x^4 + c3 x^3 + c2 x^2 + c1 x + c0.  Companion-matrix eigenvalues
// supply starting points, refined by Aberth iteration to backward-stable
// residuals.  When the roots spread over many orders of magnitude (the
// long-wave regime) unbalanced QR can return four spurious real values, and
// an all-real start can never reach complex roots; in that case restart from
// a complex spiral sized by the root product, which has no such trap.
std::array<cplx, 4> quartic_roots(double c3, double c2, double c1, double c0) {
    Eigen::Matrix4d companion = Eigen::Matrix4d::Zero();
    companion(1, 0) = companion(2, 1) = companion(3, 2) = 1.0;
    companion(0, 3) = -c0;
    companion(1, 3) = -c1;
    companion(2, 3) = -c2;
    companion(3, 3) = -c3;
    const Eigen::EigenSolver<Eigen::Matrix4d> es(companion);
    std::array<cplx, 4> z;
    for (int i = 0; i < 4; ++i) z[i] = es.eigenvalues()(i);

    const std::array<double, 5> coeff{c0, c1, c2, c3, 1.0};
    if (aberth(coeff, z, 100)) return z;

    const double radius = std::max(std::pow(std::abs(c0), 0.25),
                                   std::numeric_limits<double>::min());
    const cplx twist(0.4, 0.9);  // |twist| ~ 1, angles avoid axes and mirror pairs
    std::array<cplx, 4> spiral;
    cplx dir = twist;
    for (int i = 0; i < 4; ++i) {
        spiral[i] = radius * dir;
        dir *= twist;
    }
    if (aberth(coeff, spiral, 500)) return spiral;

    // keep whichever attempt explains the polynomial better
    auto worst = [&](const std::array<cplx, 4>& set) {
        double value = 0.0;
        for (const cplx& x : set) {
            cplx p, dp;
            double scale;
            eval_quartic(coeff, x, p, dp, scale);
            value = std::max(value, std::abs(p) / scale);
        }
        return value;
    };
    return worst(spiral) < worst(z) ? spiral : z;
}

void require_positive_wavenumber(double k) {
    if (!(k > 0.0)) throw std::domain_error("dispersion: wavenumber must be positive");
}

}  // namespace

cplx gamma_residual(cplx mu, double k, double eps) {
    const cplx sq = mu * mu + k * k;
    return sq * sq - eps * eps * mu * mu * k * k - mu * mu * mu;
}

std::vector<DispersionRoot> solve_dispersion(double k, double eps) {
    require_positive_wavenumber(k);
    if (eps < 0.0) throw std::domain_error("dispersion: eps must be nonnegative");

    auto value = [&](cplx mu) { return gamma_residual(mu, k, eps); };

    std::vector<DispersionRoot> roots;
    for (cplx mu : quartic_roots(-1.0, (2.0 - eps * eps) * k * k, 0.0, k * k * k * k)) {
        DispersionRoot r;
        r.k = k;
        r.eps = eps;
        r.mu = mu;
        r.gamma = -(mu * mu + k * k) / mu;
        r.residual = std::abs(value(mu));
        r.admissible = mu.real() <= 1e-12 * (1.0 + std::abs(mu)) && r.gamma.real() > 0.0;
        roots.push_back(r);
    }
    std::sort(roots.begin(), roots.end(), [](const DispersionRoot& a, const DispersionRoot& b) {
        if (a.mu.imag() != b.mu.imag()) return a.mu.imag() < b.mu.imag();
        return a.mu.real() < b.mu.real();
    });
    return roots;
}

std::vector<cplx> fractional_dispersion(double k) {
    require_positive_wavenumber(k);

    std::vector<cplx> mus;
    for (cplx nu : quartic_roots(1.0, 0.0, 0.0, k * k)) {
        // nu must itself be the principal square root of mu = nu^2, and the
        // mode must not grow in time
        const cplx mu = nu * nu;
        if (nu.real() > 0.0 && mu.real() <= 1e-12 * (1.0 + std::abs(mu))) mus.push_back(mu);
    }
    std::sort(mus.begin(), mus.end(), [](const cplx& a, const cplx& b) {
        if (a.imag() != b.imag()) return a.imag() < b.imag();
        return a.real() < b.real();
    });
    return mus;
}

cplx longwave_asymptote(double k) {
    require_positive_wavenumber(k);
    return std::pow(k, 4.0 / 3.0) * cplx(-0.5, 0.5 * std::sqrt(3.0));
}

cplx shortwave_asymptote(double k, double eps) {
    require_positive_wavenumber(k);
    return cplx(0.0, -k) - 0.5 * k * std::sqrt(cplx(eps * eps, -1.0 / k));
}

}  // namespace lucawave::dispersion
