#ifndef FEARBD_SOLVER_HPP
#define FEARBD_SOLVER_HPP

#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

#include "fearbd/model.hpp"

namespace fearbd {

// Numerical failure (blow-up, positivity loss, step underflow).
struct NumericalError : std::runtime_error {
    double t_fail;
    NumericalError(const std::string& what, double t)
        : std::runtime_error(what), t_fail(t) {}
};

struct Grid1D {
    double L = 0.0;
    int n = 0;            // node count (both endpoints included), >= 16
    double h = 0.0;       // L/(n-1)

    static Grid1D make(double L, int n) {
        if (!(L > 0.0) || n < 16)
            throw std::domain_error("Grid1D: require L > 0 and n >= 16");
        Grid1D g;
        g.L = L;
        g.n = n;
        g.h = L / (n - 1);
        return g;
    }
    double x(int j) const { return j * h; }
};

struct Field {
    std::vector<double> u, v;
    double t = 0.0;
};

enum class Scheme { Imex, Explicit };
enum class PositivityMode { Reject, HalveDt };

struct SolverConfig {
    double dt = 1e-3;
    double t_end = 200.0;
    Scheme scheme = Scheme::Imex;
    long snapshot_stride = 1000;       // steps between recorded snapshots
    double steady_tol = 1e-8;          // absolute variance-rate threshold
    PositivityMode positivity_mode = PositivityMode::Reject;
    bool zero_reaction = false;        // test hook: pure diffusion
    bool use_openmp = true;            // parallel kernels for large grids
};

struct Snapshot {
    double t;
    std::vector<double> u, v;
    double max_u, max_v, v_mass, var_u, var_v;
};

struct RunSummary {
    Field final_field;
    double tail_max_u = 0.0, tail_max_v = 0.0;  // over the last 10% of snapshots
    double var_u = 0.0, var_v = 0.0;            // at t_end
    double v_mass = 0.0;                        // trapezoidal integral at t_end
    std::string classification;                 // decayed | constant-steady | patterned | not-converged
    double tail_var_rate = 0.0;                 // mean |d var_u/dt| over the tail
    std::vector<Snapshot> snapshots;
};

struct BoundCheck {
    std::string name;
    bool applicable = true;
    bool satisfied = false;
    double margin = 0.0;  // bound minus observed value
};

// Second-order Neumann Laplacian (mirror ghost nodes at both ends).
std::vector<double> laplacian_neumann(const std::vector<double>& f, const Grid1D& g);

// One time step; IMEX = explicit reaction + backward-Euler diffusion via a
// tridiagonal solve. Explicit scheme enforces dt <= h^2/(2 max(d1,d2)).
Field step(const Field& f, const ModelParams& par, const Grid1D& g,
           const SolverConfig& cfg);

RunSummary integrate(const Field& initial, const ModelParams& par,
                     const Grid1D& g, const SolverConfig& cfg);

// Tail bound checks against chi = (r-d)/a and the predator mass/amplitude
// caps; check (c) applies only when d2 >= d1.
std::vector<BoundCheck> bound_monitor(const RunSummary& summary,
                                      const ModelParams& par, double L);

double trapz_mass(const std::vector<double>& f, const Grid1D& g);
double spatial_variance(const std::vector<double>& f);

}  // namespace fearbd

#endif
