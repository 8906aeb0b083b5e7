#include <CLI11.hpp>

#include "fearbd/harness.hpp"

int main(int argc, char** argv) {
    CLI::App app{"fearbd: predator-prey reaction-diffusion analysis and simulation"};
    app.require_subcommand(1);

    std::string config_path, manifest_path, out_dir;
    int jobs = 1, figure = 1;

    CLI::App* an = app.add_subcommand("analyze", "linear stability / pattern report");
    an->add_option("--config", config_path, "run config (INI)")->required();
    an->add_option("--out", out_dir, "output root (overrides FEARBD_OUT)");

    CLI::App* sim = app.add_subcommand("simulate", "integrate the PDE system");
    sim->add_option("--config", config_path, "run config (INI)")->required();
    sim->add_option("--out", out_dir, "output root (overrides FEARBD_OUT)");

    CLI::App* sw = app.add_subcommand("sweep", "run a parameter sweep manifest");
    sw->add_option("--manifest", manifest_path, "sweep manifest (INI)")->required();
    sw->add_option("--jobs", jobs, "max concurrent runs")->check(CLI::PositiveNumber);
    sw->add_option("--out", out_dir, "output root (overrides FEARBD_OUT)");

    CLI::App* rep = app.add_subcommand("reproduce", "rerun a committed figure scenario");
    rep->add_option("--figure", figure, "figure id 1..6")->required();
    rep->add_option("--jobs", jobs, "max concurrent runs (sweep figures)");
    rep->add_option("--out", out_dir, "output root (overrides FEARBD_OUT)");

    CLI11_PARSE(app, argc, argv);

    if (an->parsed()) return fearbd::cmd_analyze(config_path, out_dir);
    if (sim->parsed()) return fearbd::cmd_simulate(config_path, out_dir);
    if (sw->parsed()) return fearbd::cmd_sweep(manifest_path, jobs, out_dir);
    return fearbd::cmd_reproduce(figure, jobs, out_dir);
}
