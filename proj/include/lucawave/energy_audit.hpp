#pragma once
// Per-step energy bookkeeping shared by the coupled and the reduced model:
// energy and dissipation are sampled at the step times; the balance residual
// |dE/dt + D| uses a centered difference and is therefore defined only at
// interior samples (NaN at the two ends).

#include <vector>

namespace lucawave {

struct EnergyAudit {
    std::vector<double> times;
    std::vector<double> energy;
    std::vector<double> dissipation;
    std::vector<double> balance_residual;
};

}  // namespace lucawave
