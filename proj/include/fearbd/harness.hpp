#ifndef FEARBD_HARNESS_HPP
#define FEARBD_HARNESS_HPP

#include <string>

#include "fearbd/config.hpp"

namespace fearbd {

// Exit-code contract: 0 success, 1 config error, 2 hypothesis failure,
// 3 numerical failure.
constexpr int kExitOk = 0;
constexpr int kExitConfig = 1;
constexpr int kExitHypothesis = 2;
constexpr int kExitNumerical = 3;

// Output root: --out override, else $FEARBD_OUT, else ./out.
std::string output_root(const std::string& override_dir = "");

// Directory holding the committed figure configs: $FEARBD_CONFIGS, else the
// compile-time default, else ./configs.
std::string config_root();

int cmd_analyze(const std::string& config_path, const std::string& out_dir = "");
int cmd_simulate(const std::string& config_path, const std::string& out_dir = "");
int cmd_sweep(const std::string& manifest_path, int jobs = 1,
              const std::string& out_dir = "");
int cmd_reproduce(int figure, int jobs = 1, const std::string& out_dir = "");

// Library-level helpers used by the commands and tests.
RunSummary run_simulation(const RunConfig& cfg);
void write_run_artifacts(const RunConfig& cfg, const RunSummary& summary,
                         const std::string& dir);

}  // namespace fearbd

#endif
