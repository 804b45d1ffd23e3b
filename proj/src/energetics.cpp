#include "lucawave/energetics.hpp"

#include <Eigen/Dense>

#include <cmath>
#include <limits>
#include <stdexcept>

namespace lucawave::energetics {

namespace {

using cplx = std::complex<double>;

// Second antiderivative of the kernel profile f_j(u) = N_j^alpha evaluated at
// r+s = u; the mass of a history cell is a (++/--) corner difference of this.
double second_antiderivative(KernelOrder j, const FracOrder& a, double u) {
    if (j == KernelOrder::K0) return -std::pow(u, 1.0 - a.alpha()) / a.gamma_2ma();
    return std::pow(u, 2.0 - a.alpha()) / a.gamma_3ma();
}

// Quadratic form sum_{i,j<=n} Re(conj(c_i) c_j) * mass(cell_ij) evaluated at
// the moving endpoint t = n dt, maintained incrementally: masses depend only
// on p = 2n-i-j, and the correlations over the antidiagonal i+j = q are
// accumulated once per appended cell.
class MemoryForm {
public:
    MemoryForm(KernelOrder j, const FracOrder& a, double dt, std::size_t max_cells)
        : k2_(2 * max_cells + 3) {
        for (std::size_t q = 0; q < k2_.size(); ++q)
            k2_[q] = second_antiderivative(j, a, static_cast<double>(q) * dt);
    }

    void append(cplx c) {
        cells_.push_back(c);
        const std::size_t n = cells_.size();
        corr_.resize(2 * n + 1, 0.0);
        for (std::size_t i = 1; i < n; ++i)
            corr_[i + n] += 2.0 * (std::conj(cells_[i - 1]) * c).real();
        corr_[2 * n] += std::norm(c);
    }

    double value() const {
        const std::size_t n = cells_.size();
        double acc = 0.0;
        for (std::size_t q = 2; q <= 2 * n; ++q) {
            const std::size_t p = 2 * n - q;
            acc += corr_[q] * (k2_[p] - 2.0 * k2_[p + 1] + k2_[p + 2]);
        }
        return acc;
    }

private:
    std::vector<double> k2_;
    std::vector<cplx> cells_;
    std::vector<double> corr_;
};

void validate_history(const HistoryBuffer& h) {
    if (!(h.dt > 0.0)) throw std::invalid_argument("energetics: history dt must be positive");
    if (h.vel.size() != h.accel.size() + 1)
        throw std::invalid_argument("energetics: history must hold one more velocity than cells");
    if (h.vel.front() != 0.0)
        throw std::invalid_argument("energetics: history must start from rest (vel[0] = 0)");
}

// t must sit on the history grid; returns its node index.
std::size_t node_index(double t, double dt, std::size_t max_node) {
    const double ratio = t / dt;
    const auto n = static_cast<long long>(std::llround(ratio));
    if (n < 0 || std::abs(ratio - static_cast<double>(n)) > 1e-6)
        throw std::domain_error("energetics: t is not a node of the history grid");
    if (static_cast<std::size_t>(n) > max_node)
        throw std::domain_error("energetics: t lies beyond the recorded history");
    return static_cast<std::size_t>(n);
}

double check_ell(double ell) {
    if (!(ell > 0.0)) throw std::domain_error("energetics: surface length must be positive");
    return ell;
}

}  // namespace

double memory_quadratic(KernelOrder j, const FracOrder& alpha, double dt,
                        const std::vector<cplx>& cells) {
    if (!(dt > 0.0)) throw std::invalid_argument("memory_quadratic: dt must be positive");
    MemoryForm form(j, alpha, dt, cells.size());
    for (const auto& c : cells) form.append(c);
    return cells.empty() ? 0.0 : form.value();
}

double reduced_energy(const HistoryBuffer& hist, cplx U_now, cplx V_now, double k,
                      const FracOrder& alpha, double t, double ell) {
    validate_history(hist);
    check_ell(ell);
    const std::size_t n = node_index(t, hist.dt, hist.accel.size());
    std::vector<cplx> ubar(n);
    for (std::size_t i = 0; i < n; ++i) ubar[i] = 0.5 * (hist.vel[i] + hist.vel[i + 1]);
    const double mem = memory_quadratic(KernelOrder::K0, alpha, hist.dt, ubar);
    return ell * (0.5 * std::norm(V_now) + 0.5 * k * k * std::norm(U_now) + 0.5 * mem);
}

double reduced_dissipation(const HistoryBuffer& hist, const FracOrder& alpha, double t,
                           double ell) {
    validate_history(hist);
    check_ell(ell);
    const std::size_t n = node_index(t, hist.dt, hist.accel.size());
    const std::vector<cplx> cells(hist.accel.begin(), hist.accel.begin() + n);
    return ell * memory_quadratic(KernelOrder::K1, alpha, hist.dt, cells);
}

EnergyAudit balance_audit(const FracTrajectory& traj) {
    const auto n_modes = static_cast<std::size_t>(traj.spec.n_modes);
    if (traj.U.size() != n_modes || traj.V.size() != n_modes || traj.history.size() != n_modes)
        throw std::invalid_argument("balance_audit: trajectory does not match its surface spec");
    if (traj.times.empty()) throw std::invalid_argument("balance_audit: empty trajectory");
    const std::size_t nsteps = traj.times.size() - 1;
    for (const auto& h : traj.history) {
        validate_history(h);
        if (h.accel.size() != nsteps)
            throw std::invalid_argument("balance_audit: history shorter than the time axis");
    }

    const double dt = traj.dt, ell = traj.spec.ell;
    std::vector<MemoryForm> vel_forms, acc_forms;
    for (std::size_t m = 0; m < n_modes; ++m) {
        vel_forms.emplace_back(KernelOrder::K0, traj.alpha, dt, nsteps);
        acc_forms.emplace_back(KernelOrder::K1, traj.alpha, dt, nsteps);
    }

    auto local_energy = [&](std::size_t n) {
        double acc = 0.0;
        for (std::size_t m = 0; m < n_modes; ++m) {
            const double k = traj.spec.wavenumber(static_cast<int>(m));
            acc += 0.5 * std::norm(traj.V[m][n]) + 0.5 * k * k * std::norm(traj.U[m][n]);
        }
        return ell * acc;
    };

    EnergyAudit audit;
    audit.times = traj.times;
    audit.energy.resize(nsteps + 1);
    audit.dissipation.resize(nsteps + 1);
    audit.energy[0] = local_energy(0);
    audit.dissipation[0] = 0.0;
    for (std::size_t n = 1; n <= nsteps; ++n) {
        double mem = 0.0, dis = 0.0;
        for (std::size_t m = 0; m < n_modes; ++m) {
            const auto& h = traj.history[m];
            vel_forms[m].append(0.5 * (h.vel[n - 1] + h.vel[n]));
            acc_forms[m].append(h.accel[n - 1]);
            mem += vel_forms[m].value();
            dis += acc_forms[m].value();
        }
        audit.energy[n] = local_energy(n) + 0.5 * ell * mem;
        audit.dissipation[n] = ell * dis;
    }

    constexpr double nan = std::numeric_limits<double>::quiet_NaN();
    audit.balance_residual.assign(nsteps + 1, nan);
    for (std::size_t n = 1; n < nsteps; ++n)
        audit.balance_residual[n] = std::abs(
            (audit.energy[n + 1] - audit.energy[n - 1]) / (2.0 * dt) + audit.dissipation[n]);
    return audit;
}

double identity_check(const kernels::SampledSignal& phi, const FracOrder& alpha) {
    const auto dphi = kernels::caputo_derivative(alpha, phi);  // also validates the signal
    const std::size_t nsteps = phi.values.size() - 1;
    if (nsteps < 2)
        throw std::invalid_argument("identity_check: need at least three samples");
    const double dt = phi.dt;

    MemoryForm q0(KernelOrder::K0, alpha, dt, nsteps);
    MemoryForm q1(KernelOrder::K1, alpha, dt, nsteps);
    std::vector<double> Q0(nsteps + 1, 0.0), Q1(nsteps + 1, 0.0);
    for (std::size_t n = 1; n <= nsteps; ++n) {
        q0.append(0.5 * (phi.values[n - 1] + phi.values[n]));
        q1.append((phi.values[n] - phi.values[n - 1]) / dt);
        Q0[n] = 0.5 * q0.value();
        Q1[n] = q1.value();
    }

    double worst = 0.0;
    for (std::size_t n = 1; n < nsteps; ++n) {
        const double lhs = (Q0[n + 1] - Q0[n - 1]) / (2.0 * dt);
        const double rhs = phi.values[n] * dphi.values[n] - Q1[n];
        worst = std::max(worst, std::abs(lhs - rhs));
    }
    return worst;
}

std::pair<double, double> psd_certificate(KernelOrder j, const FracOrder& alpha,
                                          const std::vector<double>& times) {
    if (times.empty()) throw std::invalid_argument("psd_certificate: empty time grid");
    if (times.size() > 512)
        throw std::invalid_argument("psd_certificate: at most 512 time nodes");
    if (!(times.front() > 0.0)) throw std::domain_error("psd_certificate: times must be positive");
    for (std::size_t i = 1; i < times.size(); ++i)
        if (!(times[i] > times[i - 1]))
            throw std::domain_error("psd_certificate: times must be strictly increasing");

    const auto n = static_cast<Eigen::Index>(times.size());
    std::vector<double> w(times.size(), 1.0);
    if (n > 1) {
        w.front() = 0.5 * (times[1] - times[0]);
        w.back() = 0.5 * (times[times.size() - 1] - times[times.size() - 2]);
        for (std::size_t i = 1; i + 1 < times.size(); ++i) w[i] = 0.5 * (times[i + 1] - times[i - 1]);
    }

    Eigen::MatrixXd gram(n, n);
    for (Eigen::Index a = 0; a < n; ++a)
        for (Eigen::Index b = 0; b <= a; ++b) {
            const double val = std::sqrt(w[a] * w[b]) *
                               kernels::frac_kernel_n(j, alpha, times[a], times[b]);
            gram(a, b) = val;
            gram(b, a) = val;
        }

    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(gram, Eigen::EigenvaluesOnly);
    return {es.eigenvalues().minCoeff(), es.eigenvalues().maxCoeff()};
}

}  // namespace lucawave::energetics
