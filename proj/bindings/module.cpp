// Python face of the toolkit: thin wrappers over the C++ core, trading
// zero-copy speed for plain lists/dicts that need no extra dependencies.

#include "lucawave/coupled.hpp"
#include "lucawave/dispersion.hpp"
#include "lucawave/energetics.hpp"
#include "lucawave/fracwave.hpp"
#include "lucawave/halfline.hpp"
#include "lucawave/harness.hpp"
#include "lucawave/kernels.hpp"

#include <pybind11/complex.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <complex>
#include <stdexcept>
#include <utility>
#include <vector>

namespace py = pybind11;

namespace {

using cplx = std::complex<double>;
using lucawave::kernels::FracOrder;
using lucawave::kernels::KernelOrder;
using lucawave::kernels::SampledSignal;

KernelOrder kernel_order(int j) {
    if (j != 0 && j != 1) throw std::invalid_argument("kernel order must be 0 or 1");
    return static_cast<KernelOrder>(j);
}

SampledSignal make_signal(double dt, std::vector<double> values) {
    SampledSignal s;
    s.dt = dt;
    s.values = std::move(values);
    return s;
}

py::dict audit_dict(const lucawave::EnergyAudit& audit) {
    py::dict d;
    d["energy"] = audit.energy;
    d["dissipation"] = audit.dissipation;
    d["balance_residual"] = audit.balance_residual;
    return d;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "Membrane wave equation coupled to half-space diffusion, its fractionally "
              "damped limit, and the quadrature/energy machinery connecting them";

    m.def(
        "memory_kernel_m",
        [](int j, double r, double s) {
            return lucawave::kernels::memory_kernel_m(kernel_order(j), r, s);
        },
        py::arg("j"), py::arg("r"), py::arg("s"),
        "Closed-form overlap of two boundary kernels, 2^j (4 pi)^{-1/2} (r+s)^{j-3/2}");

    m.def(
        "frac_kernel_n",
        [](int j, double alpha, double r, double s) {
            return lucawave::kernels::frac_kernel_n(kernel_order(j), FracOrder(alpha), r, s);
        },
        py::arg("j"), py::arg("alpha"), py::arg("r"), py::arg("s"),
        "Fractional memory kernel N_j^alpha(r, s); reduces to memory_kernel_m at alpha = 1/2");

    m.def(
        "caputo_derivative",
        [](double alpha, double dt, std::vector<double> values) {
            return lucawave::kernels::caputo_derivative(FracOrder(alpha),
                                                        make_signal(dt, std::move(values)))
                .values;
        },
        py::arg("alpha"), py::arg("dt"), py::arg("values"),
        "Caputo derivative of a uniformly sampled signal (L1 scheme, exact on affine data)");

    m.def(
        "dtn_flux",
        [](double dt, std::vector<double> values) {
            return lucawave::halfline::dtn_flux(make_signal(dt, std::move(values))).values;
        },
        py::arg("dt"), py::arg("values"),
        "Boundary flux of the half-line diffusion driven by the sampled boundary data");

    m.def(
        "solve_dispersion",
        [](double k, double eps) {
            py::list out;
            for (const auto& root : lucawave::dispersion::solve_dispersion(k, eps)) {
                py::dict d;
                d["mu"] = root.mu;
                d["gamma"] = root.gamma;
                d["residual"] = root.residual;
                d["admissible"] = root.admissible;
                out.append(std::move(d));
            }
            return out;
        },
        py::arg("k"), py::arg("eps"),
        "All four roots of the dispersion quartic with branch data and admissibility flags");

    m.def("fractional_dispersion", &lucawave::dispersion::fractional_dispersion, py::arg("k"),
          "Admissible decay exponents of the fractionally damped wave equation");
    m.def("longwave_asymptote", &lucawave::dispersion::longwave_asymptote, py::arg("k"));
    m.def("shortwave_asymptote", &lucawave::dispersion::shortwave_asymptote, py::arg("k"),
          py::arg("eps"));

    m.def(
        "simulate_coupled",
        [](double ell, int n_modes, double L_z, int n_z, std::vector<cplx> U0, double eps,
           double dt, double T, std::vector<cplx> V0) {
            const lucawave::coupled::SurfaceSpec spec(ell, n_modes);
            const lucawave::halfline::ZGrid grid(L_z, n_z);
            const auto w0 = lucawave::coupled::make_field_state(spec, grid, U0, V0);
            const auto traj = lucawave::coupled::simulate_coupled(spec, grid, w0, eps, dt, T);
            py::dict d = audit_dict(traj.audit);
            d["times"] = traj.times;
            d["U"] = traj.U;
            d["V"] = traj.V;
            return d;
        },
        py::arg("ell"), py::arg("n_modes"), py::arg("L_z"), py::arg("n_z"), py::arg("U0"),
        py::arg("eps"), py::arg("dt"), py::arg("T"), py::arg("V0") = std::vector<cplx>{},
        "Run the coupled membrane/bulk solver; returns times, per-mode U and V series, and "
        "the energy audit");

    m.def(
        "simulate_fractional",
        [](double ell, int n_modes, std::vector<cplx> U0, double alpha, double dt, double T) {
            const lucawave::coupled::SurfaceSpec spec(ell, n_modes);
            const auto traj =
                lucawave::fracwave::simulate_fractional(spec, U0, FracOrder(alpha), dt, T);
            py::dict d = audit_dict(lucawave::energetics::balance_audit(traj));
            d["times"] = traj.times;
            d["U"] = traj.U;
            d["V"] = traj.V;
            return d;
        },
        py::arg("ell"), py::arg("n_modes"), py::arg("U0"), py::arg("alpha"), py::arg("dt"),
        py::arg("T"),
        "Run the fractionally damped wave solver; returns times, per-mode U and V series, "
        "and the reduced energy audit");

    m.def(
        "identity_check",
        [](double alpha, double dt, std::vector<double> phi) {
            return lucawave::energetics::identity_check(make_signal(dt, std::move(phi)),
                                                        FracOrder(alpha));
        },
        py::arg("alpha"), py::arg("dt"), py::arg("phi"),
        "Max residual of the memory energy-dissipation identity for a sampled signal");

    m.def(
        "psd_certificate",
        [](int j, double alpha, std::vector<double> times) {
            return lucawave::energetics::psd_certificate(kernel_order(j), FracOrder(alpha),
                                                         times);
        },
        py::arg("j"), py::arg("alpha"), py::arg("times"),
        "(min, max) eigenvalues of the quadrature-weighted memory Gram matrix");

    m.def(
        "nondimensionalize",
        [](double rho_memb, double rho_bulk, double mu, double kappa) {
            const auto r =
                lucawave::harness::nondimensionalize({rho_memb, rho_bulk, mu, kappa});
            py::dict d;
            d["a"] = r.a;
            d["b"] = r.b;
            d["c"] = r.c;
            d["eps"] = r.eps;
            d["t_star"] = r.t_star;
            d["l_thick"] = r.l_thick;
            d["l_trav"] = r.l_trav;
            d["l_diff"] = r.l_diff;
            return d;
        },
        py::arg("rho_memb"), py::arg("rho_bulk"), py::arg("mu"), py::arg("kappa"),
        "Scale factors and characteristic lengths for physical membrane/fluid parameters");

    m.def(
        "run_experiment",
        [](const std::string& config, const std::string& output, bool verbose,
           const std::string& expect) {
            // plain strings: an empty std::filesystem::path default would
            // round-trip through pathlib as "." and stop meaning "unset"
            return static_cast<int>(
                lucawave::harness::run_experiment(config, output, verbose, expect));
        },
        py::arg("config"), py::arg("output") = std::string{}, py::arg("verbose") = false,
        py::arg("expect") = std::string{},
        "Run a JSON-configured experiment; returns the CLI exit code (0 ok, 2 config error, "
        "3 failed pre-check)");
}
