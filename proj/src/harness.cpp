#include "fearbd/harness.hpp"

#include <algorithm>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <iostream>
#include <mutex>
#include <sstream>
#include <thread>
#include <vector>

#include "fearbd/artifacts.hpp"
#include "fearbd/equilibria.hpp"
#include "fearbd/turing.hpp"

#ifndef FEARBD_CONFIG_DIR
#define FEARBD_CONFIG_DIR "configs"
#endif

namespace fearbd {

namespace {

std::string fmt17(double x) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", x);
    return buf;
}

}  // namespace

std::string output_root(const std::string& override_dir) {
    if (!override_dir.empty()) return override_dir;
    if (const char* env = std::getenv("FEARBD_OUT"); env && *env) return env;
    return "out";
}

std::string config_root() {
    if (const char* env = std::getenv("FEARBD_CONFIGS"); env && *env) return env;
    if (std::filesystem::exists(FEARBD_CONFIG_DIR)) return FEARBD_CONFIG_DIR;
    return "configs";
}

RunSummary run_simulation(const RunConfig& cfg) {
    const Grid1D g = Grid1D::make(cfg.L, cfg.n);
    const Field init = build_initial_field(cfg, g);
    return integrate(init, cfg.params, g, cfg.solver);
}

void write_run_artifacts(const RunConfig& cfg, const RunSummary& summary,
                         const std::string& dir) {
    const Grid1D g = Grid1D::make(cfg.L, cfg.n);
    const std::string hash = config_hash(cfg);
    write_text_file(dir + "/run.csv", snapshots_csv(summary.snapshots, g));
    write_text_file(dir + "/summary.json", summary_json(cfg, summary));
    write_text_file(dir + "/u_heatmap.svg",
                    heatmap_svg(summary.snapshots, g, false,
                                cfg.name + ": u(x,t)", hash));
    write_text_file(dir + "/v_heatmap.svg",
                    heatmap_svg(summary.snapshots, g, true,
                                cfg.name + ": v(x,t)", hash));
    write_text_file(dir + "/final_profiles.svg",
                    profiles_svg(summary.final_field, g,
                                 cfg.name + ": final profiles", hash));
}

int cmd_analyze(const std::string& config_path, const std::string& out_dir) {
    RunConfig cfg;
    try {
        cfg = load_run_config(config_path);
    } catch (const ConfigError& e) {
        std::cerr << "config error: " << e.what() << "\n";
        return kExitConfig;
    }
    try {
        const DispersionReport rep =
            analyze(cfg.params, cfg.L, cfg.analysis.n_modes);
        const NonexistenceReport nonex = nonexistence_threshold(
            cfg.params, cfg.analysis.mu_lower, cfg.analysis.poincare_c);
        std::cout << report_text(rep, nonex);
        const std::string dir = output_root(out_dir) + "/" + cfg.name;
        write_text_file(dir + "/analysis.json", report_json(cfg, rep, nonex));
        return kExitOk;
    } catch (const HypothesisError& e) {
        std::cout << "no coexistence: " << e.what() << "\n";
        return kExitHypothesis;
    } catch (const NumericalError& e) {
        std::cerr << "numerical failure: " << e.what() << "\n";
        return kExitNumerical;
    }
}

int cmd_simulate(const std::string& config_path, const std::string& out_dir) {
    RunConfig cfg;
    try {
        cfg = load_run_config(config_path);
    } catch (const ConfigError& e) {
        std::cerr << "config error: " << e.what() << "\n";
        return kExitConfig;
    }
    const std::string dir = output_root(out_dir) + "/" + cfg.name;
    try {
        const RunSummary summary = run_simulation(cfg);
        write_run_artifacts(cfg, summary, dir);
        std::cout << cfg.name << ": " << summary.classification
                  << " (var_u=" << summary.var_u << ", v_mass=" << summary.v_mass
                  << ")\n";
        return kExitOk;
    } catch (const HypothesisError& e) {
        std::cout << "hypothesis failure: " << e.what() << "\n";
        return kExitHypothesis;
    } catch (const NumericalError& e) {
        std::cerr << "numerical failure at t=" << e.t_fail << ": " << e.what()
                  << "\n";
        return kExitNumerical;
    }
}

int cmd_sweep(const std::string& manifest_path, int jobs,
              const std::string& out_dir) {
    SweepManifest man;
    try {
        man = load_sweep_manifest(manifest_path);
    } catch (const ConfigError& e) {
        std::cerr << "config error: " << e.what() << "\n";
        return kExitConfig;
    }

    struct Row {
        double value;
        std::string status, classification, hash;
        double var_u = 0.0, max_u = 0.0, max_v = 0.0;
    };
    const std::string root = output_root(out_dir) + "/" + man.name;
    std::vector<Row> rows(man.values.size());
    std::vector<size_t> next_index{0};
    std::mutex mtx;

    auto worker = [&]() {
        while (true) {
            size_t idx;
            {
                std::lock_guard<std::mutex> lock(mtx);
                if (next_index[0] >= man.values.size()) return;
                idx = next_index[0]++;
            }
            const double value = man.values[idx];
            Row& row = rows[idx];
            row.value = value;
            try {
                RunConfig cfg = apply_parameter(man.base, man.parameter, value);
                std::ostringstream nm;
                nm << man.name << "_" << man.parameter << "_" << value;
                cfg.name = nm.str();
                row.hash = config_hash(cfg);
                const RunSummary summary = run_simulation(cfg);
                write_run_artifacts(cfg, summary, root + "/" + cfg.name);
                row.status = "ok";
                row.classification = summary.classification;
                row.var_u = summary.var_u;
                row.max_u = summary.tail_max_u;
                row.max_v = summary.tail_max_v;
            } catch (const std::exception& e) {
                row.status = std::string("failed: ") + e.what();
                row.classification = "";
            }
        }
    };

    jobs = std::max(1, jobs);
    std::vector<std::thread> pool;
    for (int t = 0; t < jobs; ++t) pool.emplace_back(worker);
    for (auto& th : pool) th.join();

    std::sort(rows.begin(), rows.end(),
              [](const Row& a, const Row& b) { return a.value < b.value; });
    std::ostringstream agg;
    agg << man.parameter << ",status,classification,var_u,max_u,max_v,config_hash\n";
    bool any_failed = false;
    for (const Row& row : rows) {
        agg << fmt17(row.value) << ',' << row.status << ',' << row.classification
            << ',' << fmt17(row.var_u) << ',' << fmt17(row.max_u) << ','
            << fmt17(row.max_v) << ',' << row.hash << '\n';
        if (row.status != "ok") any_failed = true;
    }
    write_text_file(root + "/aggregate.csv", agg.str());
    std::cout << man.name << ": " << rows.size() << " runs, aggregate at " << root
              << "/aggregate.csv\n";
    return any_failed ? kExitNumerical : kExitOk;
}

int cmd_reproduce(int figure, int jobs, const std::string& out_dir) {
    const std::string root = config_root();
    switch (figure) {
        case 1:
            return cmd_simulate(root + "/fig1.cfg", out_dir);
        case 2:
            return cmd_simulate(root + "/fig2.cfg", out_dir);
        case 3:
        case 4:
        case 5:
        case 6:
            return cmd_sweep(root + "/fig" + std::to_string(figure) + ".sweep",
                             jobs, out_dir);
        default:
            std::cerr << "unknown figure id: " << figure << " (expected 1..6)\n";
            return kExitConfig;
    }
}

}  // namespace fearbd
