#include "lucawave/harness.hpp"

#include <CLI11.hpp>

#include <array>
#include <string>

namespace {

struct Subcommand {
    const char* name;
    const char* blurb;
    CLI::App* cmd = nullptr;
    std::string config;
    std::string output;
    bool verbose = false;
};

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Membrane wave / half-space diffusion toolkit"};
    app.require_subcommand(1);

    std::array<Subcommand, 6> subs{{
        {"simulate-coupled", "run the coupled membrane/bulk solver"},
        {"simulate-fractional", "run the fractionally damped wave solver"},
        {"dispersion", "tabulate dispersion-relation roots over k and eps"},
        {"energy-audit", "energy-balance residuals at dt and dt/2"},
        {"converge", "eps-convergence study against the eps = 0 reference"},
        {"nondim", "scaling report for physical parameters"},
    }};

    for (auto& sub : subs) {
        sub.cmd = app.add_subcommand(sub.name, sub.blurb);
        sub.cmd->add_option("--config", sub.config, "path to the JSON config file")
            ->required();
        sub.cmd->add_option("--output", sub.output,
                            "output directory (overrides output_dir in the config)");
        sub.cmd->add_flag("--verbose", sub.verbose, "print progress while running");
    }

    try {
        app.parse(argc, argv);
    } catch (const CLI::Success& e) {
        return app.exit(e);  // --help and friends
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return static_cast<int>(lucawave::harness::RunStatus::config_error);
    }

    for (const auto& sub : subs) {
        if (sub.cmd->parsed()) {
            const auto status =
                lucawave::harness::run_experiment(sub.config, sub.output, sub.verbose, sub.name);
            return static_cast<int>(status);
        }
    }
    return static_cast<int>(lucawave::harness::RunStatus::config_error);
}
