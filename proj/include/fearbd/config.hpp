#ifndef FEARBD_CONFIG_HPP
#define FEARBD_CONFIG_HPP

#include <cstdint>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include "fearbd/model.hpp"
#include "fearbd/solver.hpp"

namespace fearbd {

// Malformed config file / manifest (exit code 1 at the CLI).
struct ConfigError : std::runtime_error {
    explicit ConfigError(const std::string& what) : std::runtime_error(what) {}
};

enum class IcType { Constant, EqCosine, File };

struct IcSpec {
    IcType type = IcType::EqCosine;
    double u0 = 0.0, v0 = 0.0;           // constant
    double amp_u = 0.01, freq_u = 0.5;   // equilibrium + amp*cos(freq*x)
    double amp_v = 0.01, freq_v = 1.0;
    std::string file;                    // CSV x,u,v
};

struct AnalysisSpec {
    int n_modes = 8;
    double mu_lower = 0.0;  // 0 = default heuristic m/(10 c p)
    double poincare_c = 1.0;
};

struct RunConfig {
    std::string name = "run";
    ModelParams params{};
    double L = 3.14159265358979323846;
    int n = 256;
    SolverConfig solver{};
    IcSpec ic{};
    AnalysisSpec analysis{};
};

struct SweepManifest {
    std::string base_path;      // path to base RunConfig, relative to manifest
    RunConfig base;
    std::string parameter;      // model parameter or "t_end"
    std::vector<double> values;
    std::string name = "sweep";
};

// Flat INI with [section] headers and key=value lines; '#' or ';' comments.
using IniData = std::map<std::string, std::map<std::string, std::string>>;

IniData parse_ini(const std::string& text, const std::string& origin);
IniData parse_ini_file(const std::string& path);

RunConfig load_run_config(const std::string& path);
SweepManifest load_sweep_manifest(const std::string& path);

// Canonical serialization (fixed key order, %.17g floats); hashing this
// text gives the config hash recorded in artifacts.
std::string serialize(const RunConfig& cfg);
uint64_t fnv1a64(const std::string& text);
std::string config_hash(const RunConfig& cfg);

// Apply a swept parameter value to a copy of the base config.
RunConfig apply_parameter(const RunConfig& base, const std::string& parameter,
                          double value);

// Construct the initial field; EqCosine resolves the coexistence state.
Field build_initial_field(const RunConfig& cfg, const Grid1D& g);

}  // namespace fearbd

#endif
