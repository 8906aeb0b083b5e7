#include "fearbd/config.hpp"

#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "fearbd/equilibria.hpp"

namespace fearbd {

namespace {

std::string trim(const std::string& s) {
    const auto b = s.find_first_not_of(" \t\r");
    if (b == std::string::npos) return "";
    const auto e = s.find_last_not_of(" \t\r");
    return s.substr(b, e - b + 1);
}

std::string fmt17(double x) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", x);
    return buf;
}

struct SectionReader {
    const IniData& ini;
    std::string origin;

    const std::string* find(const std::string& sec, const std::string& key) const {
        auto s = ini.find(sec);
        if (s == ini.end()) return nullptr;
        auto k = s->second.find(key);
        if (k == s->second.end()) return nullptr;
        return &k->second;
    }
    std::string str(const std::string& sec, const std::string& key,
                    const std::string& fallback) const {
        const std::string* v = find(sec, key);
        return v ? *v : fallback;
    }
    double num(const std::string& sec, const std::string& key) const {
        const std::string* v = find(sec, key);
        if (!v)
            throw ConfigError(origin + ": missing required key [" + sec + "] " + key);
        return num_parse(sec, key, *v);
    }
    double num(const std::string& sec, const std::string& key, double fallback) const {
        const std::string* v = find(sec, key);
        return v ? num_parse(sec, key, *v) : fallback;
    }
    double num_parse(const std::string& sec, const std::string& key,
                     const std::string& v) const {
        try {
            size_t pos = 0;
            const double x = std::stod(v, &pos);
            if (pos != v.size()) throw std::invalid_argument("trailing");
            return x;
        } catch (const std::exception&) {
            throw ConfigError(origin + ": key [" + sec + "] " + key +
                              " is not a number: '" + v + "'");
        }
    }
};

std::string read_text(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ConfigError("cannot open config file: " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

}  // namespace

IniData parse_ini(const std::string& text, const std::string& origin) {
    IniData out;
    std::istringstream in(text);
    std::string line, section;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        const auto cpos = line.find_first_of("#;");
        if (cpos != std::string::npos) line = line.substr(0, cpos);
        line = trim(line);
        if (line.empty()) continue;
        if (line.front() == '[') {
            if (line.back() != ']')
                throw ConfigError(origin + ":" + std::to_string(lineno) +
                                  ": unterminated section header");
            section = trim(line.substr(1, line.size() - 2));
            out[section];
            continue;
        }
        const auto eq = line.find('=');
        if (eq == std::string::npos)
            throw ConfigError(origin + ":" + std::to_string(lineno) +
                              ": expected key=value, got '" + line + "'");
        const std::string key = trim(line.substr(0, eq));
        const std::string val = trim(line.substr(eq + 1));
        if (key.empty())
            throw ConfigError(origin + ":" + std::to_string(lineno) + ": empty key");
        out[section][key] = val;
    }
    return out;
}

IniData parse_ini_file(const std::string& path) {
    return parse_ini(read_text(path), path);
}

RunConfig load_run_config(const std::string& path) {
    const SectionReader r{parse_ini_file(path), path};
    RunConfig cfg;
    cfg.name = r.str("output", "name",
                     std::filesystem::path(path).stem().string());

    cfg.params.r = r.num("model", "r");
    cfg.params.d = r.num("model", "d");
    cfg.params.a = r.num("model", "a");
    cfg.params.c = r.num("model", "c");
    cfg.params.m = r.num("model", "m");
    cfg.params.p = r.num("model", "p");
    cfg.params.q = r.num("model", "q");
    cfg.params.k = r.num("model", "k");
    cfg.params.d1 = r.num("model", "d1");
    cfg.params.d2 = r.num("model", "d2");

    cfg.L = r.num("grid", "L", cfg.L);
    cfg.n = static_cast<int>(r.num("grid", "n", cfg.n));

    cfg.solver.dt = r.num("solver", "dt", cfg.solver.dt);
    cfg.solver.t_end = r.num("solver", "t_end", cfg.solver.t_end);
    cfg.solver.snapshot_stride =
        static_cast<long>(r.num("solver", "snapshot_stride", 1000));
    cfg.solver.steady_tol = r.num("solver", "steady_tol", cfg.solver.steady_tol);
    const std::string scheme = r.str("solver", "scheme", "imex");
    if (scheme == "imex")
        cfg.solver.scheme = Scheme::Imex;
    else if (scheme == "explicit")
        cfg.solver.scheme = Scheme::Explicit;
    else
        throw ConfigError(path + ": [solver] scheme must be imex or explicit");
    const std::string pos = r.str("solver", "positivity", "reject");
    if (pos == "reject")
        cfg.solver.positivity_mode = PositivityMode::Reject;
    else if (pos == "halve-dt")
        cfg.solver.positivity_mode = PositivityMode::HalveDt;
    else
        throw ConfigError(path + ": [solver] positivity must be reject or halve-dt");

    const std::string ict = r.str("ic", "type", "eq_cosine");
    if (ict == "constant") {
        cfg.ic.type = IcType::Constant;
        cfg.ic.u0 = r.num("ic", "u0");
        cfg.ic.v0 = r.num("ic", "v0");
    } else if (ict == "eq_cosine") {
        cfg.ic.type = IcType::EqCosine;
        cfg.ic.amp_u = r.num("ic", "amp_u", 0.01);
        cfg.ic.freq_u = r.num("ic", "freq_u", 0.5);
        cfg.ic.amp_v = r.num("ic", "amp_v", 0.01);
        cfg.ic.freq_v = r.num("ic", "freq_v", 1.0);
    } else if (ict == "file") {
        cfg.ic.type = IcType::File;
        cfg.ic.file = r.str("ic", "file", "");
        if (cfg.ic.file.empty())
            throw ConfigError(path + ": [ic] type=file requires a file key");
    } else {
        throw ConfigError(path + ": [ic] type must be constant, eq_cosine or file");
    }

    cfg.analysis.n_modes = static_cast<int>(r.num("analysis", "n_modes", 8));
    cfg.analysis.mu_lower = r.num("analysis", "mu_lower", 0.0);
    cfg.analysis.poincare_c = r.num("analysis", "poincare_c", 1.0);

    try {
        cfg.params.validate();
    } catch (const std::domain_error& e) {
        throw ConfigError(path + ": " + e.what());
    }
    if (cfg.n < 16) throw ConfigError(path + ": [grid] n must be >= 16");
    if (!(cfg.L > 0.0)) throw ConfigError(path + ": [grid] L must be positive");
    if (!(cfg.solver.dt > 0.0)) throw ConfigError(path + ": [solver] dt must be positive");
    if (!(cfg.solver.t_end > 0.0))
        throw ConfigError(path + ": [solver] t_end must be positive");
    return cfg;
}

SweepManifest load_sweep_manifest(const std::string& path) {
    const SectionReader r{parse_ini_file(path), path};
    SweepManifest man;
    man.base_path = r.str("sweep", "base", "");
    if (man.base_path.empty())
        throw ConfigError(path + ": [sweep] base is required");
    man.parameter = r.str("sweep", "parameter", "");
    if (man.parameter.empty())
        throw ConfigError(path + ": [sweep] parameter is required");
    man.name = r.str("sweep", "name",
                     std::filesystem::path(path).stem().string());

    const std::string vals = r.str("sweep", "values", "");
    std::istringstream vs(vals);
    std::string tok;
    while (std::getline(vs, tok, ',')) {
        tok = trim(tok);
        if (tok.empty()) continue;
        man.values.push_back(r.num_parse("sweep", "values", tok));
    }
    if (man.values.empty())
        throw ConfigError(path + ": [sweep] values must be a nonempty list");
    for (size_t i = 0; i < man.values.size(); ++i)
        for (size_t j = i + 1; j < man.values.size(); ++j)
            if (man.values[i] == man.values[j])
                throw ConfigError(path + ": [sweep] values must be distinct");

    std::filesystem::path base = std::filesystem::path(path).parent_path() /
                                 man.base_path;
    man.base = load_run_config(base.string());

    // Base-level overrides in the manifest (e.g. t_end for figure sweeps).
    if (const std::string* v = r.find("sweep", "t_end"))
        man.base.solver.t_end = r.num("sweep", "t_end");
    return man;
}

RunConfig apply_parameter(const RunConfig& base, const std::string& parameter,
                          double value) {
    RunConfig cfg = base;
    double* slot = nullptr;
    ModelParams& mp = cfg.params;
    if (parameter == "r") slot = &mp.r;
    else if (parameter == "d") slot = &mp.d;
    else if (parameter == "a") slot = &mp.a;
    else if (parameter == "c") slot = &mp.c;
    else if (parameter == "m") slot = &mp.m;
    else if (parameter == "p") slot = &mp.p;
    else if (parameter == "q") slot = &mp.q;
    else if (parameter == "k") slot = &mp.k;
    else if (parameter == "d1") slot = &mp.d1;
    else if (parameter == "d2") slot = &mp.d2;
    else if (parameter == "t_end") slot = &cfg.solver.t_end;
    else if (parameter == "dt") slot = &cfg.solver.dt;
    else
        throw ConfigError("unknown swept parameter: " + parameter);
    *slot = value;
    return cfg;
}

std::string serialize(const RunConfig& cfg) {
    std::ostringstream out;
    const ModelParams& m = cfg.params;
    out << "[model]\n";
    out << "r=" << fmt17(m.r) << "\nd=" << fmt17(m.d) << "\na=" << fmt17(m.a)
        << "\nc=" << fmt17(m.c) << "\nm=" << fmt17(m.m) << "\np=" << fmt17(m.p)
        << "\nq=" << fmt17(m.q) << "\nk=" << fmt17(m.k) << "\nd1=" << fmt17(m.d1)
        << "\nd2=" << fmt17(m.d2) << "\n";
    out << "[grid]\nL=" << fmt17(cfg.L) << "\nn=" << cfg.n << "\n";
    out << "[solver]\ndt=" << fmt17(cfg.solver.dt)
        << "\nt_end=" << fmt17(cfg.solver.t_end)
        << "\nscheme=" << (cfg.solver.scheme == Scheme::Imex ? "imex" : "explicit")
        << "\nsnapshot_stride=" << cfg.solver.snapshot_stride
        << "\nsteady_tol=" << fmt17(cfg.solver.steady_tol) << "\npositivity="
        << (cfg.solver.positivity_mode == PositivityMode::Reject ? "reject"
                                                                 : "halve-dt")
        << "\n";
    out << "[ic]\n";
    switch (cfg.ic.type) {
        case IcType::Constant:
            out << "type=constant\nu0=" << fmt17(cfg.ic.u0)
                << "\nv0=" << fmt17(cfg.ic.v0) << "\n";
            break;
        case IcType::EqCosine:
            out << "type=eq_cosine\namp_u=" << fmt17(cfg.ic.amp_u)
                << "\nfreq_u=" << fmt17(cfg.ic.freq_u)
                << "\namp_v=" << fmt17(cfg.ic.amp_v)
                << "\nfreq_v=" << fmt17(cfg.ic.freq_v) << "\n";
            break;
        case IcType::File:
            out << "type=file\nfile=" << cfg.ic.file << "\n";
            break;
    }
    out << "[analysis]\nn_modes=" << cfg.analysis.n_modes
        << "\nmu_lower=" << fmt17(cfg.analysis.mu_lower)
        << "\npoincare_c=" << fmt17(cfg.analysis.poincare_c) << "\n";
    out << "[output]\nname=" << cfg.name << "\n";
    return out.str();
}

uint64_t fnv1a64(const std::string& text) {
    uint64_t h = 1469598103934665603ULL;
    for (unsigned char c : text) {
        h ^= c;
        h *= 1099511628211ULL;
    }
    return h;
}

std::string config_hash(const RunConfig& cfg) {
    char buf[20];
    std::snprintf(buf, sizeof buf, "%016llx",
                  static_cast<unsigned long long>(fnv1a64(serialize(cfg))));
    return buf;
}

Field build_initial_field(const RunConfig& cfg, const Grid1D& g) {
    Field f;
    f.t = 0.0;
    f.u.resize(g.n);
    f.v.resize(g.n);
    switch (cfg.ic.type) {
        case IcType::Constant:
            for (int i = 0; i < g.n; ++i) {
                f.u[i] = cfg.ic.u0;
                f.v[i] = cfg.ic.v0;
            }
            break;
        case IcType::EqCosine: {
            const Equilibrium eq = solve_coexistence(cfg.params);
            for (int i = 0; i < g.n; ++i) {
                const double x = g.x(i);
                f.u[i] = eq.u_star + cfg.ic.amp_u * std::cos(cfg.ic.freq_u * x);
                f.v[i] = eq.v_star + cfg.ic.amp_v * std::cos(cfg.ic.freq_v * x);
            }
            break;
        }
        case IcType::File: {
            std::ifstream in(cfg.ic.file);
            if (!in) throw ConfigError("cannot open IC file: " + cfg.ic.file);
            std::string line;
            std::getline(in, line);  // header x,u,v
            int i = 0;
            while (std::getline(in, line) && i < g.n) {
                std::istringstream ls(line);
                std::string xs, us, vs;
                std::getline(ls, xs, ',');
                std::getline(ls, us, ',');
                std::getline(ls, vs, ',');
                f.u[i] = std::stod(us);
                f.v[i] = std::stod(vs);
                ++i;
            }
            if (i != g.n)
                throw ConfigError("IC file row count does not match grid n");
            break;
        }
    }
    return f;
}

}  // namespace fearbd
