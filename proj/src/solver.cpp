#include "fearbd/solver.hpp"

#include <algorithm>
#include <cmath>

namespace fearbd {

namespace {

constexpr int kOmpThreshold = 4096;  // serial reference path below this size

// Explicit reaction stage: out_u = u + dt*A(u,v), out_v = v + dt*B(u,v).
// Throws on negative input densities (kinetics layer contract).
void reaction_stage_serial(const ModelParams& par, double dt,
                           const std::vector<double>& u,
                           const std::vector<double>& v,
                           std::vector<double>& out_u,
                           std::vector<double>& out_v) {
    const size_t n = u.size();
    for (size_t i = 0; i < n; ++i) {
        const double ui = u[i], vi = v[i];
        require_nonneg(ui, vi);
        const double den = 1.0 + par.q * ui + vi;
        const double A = par.r * ui / (1.0 + par.k * vi) - par.d * ui -
                         par.a * ui * ui - par.p * ui * vi / den;
        const double B = vi * (-par.m + par.c * par.p * ui / den);
        out_u[i] = ui + dt * A;
        out_v[i] = vi + dt * B;
    }
}

void reaction_stage_omp(const ModelParams& par, double dt,
                        const std::vector<double>& u,
                        const std::vector<double>& v,
                        std::vector<double>& out_u,
                        std::vector<double>& out_v) {
    const long n = static_cast<long>(u.size());
    bool bad = false;
#pragma omp parallel for schedule(static) reduction(|| : bad)
    for (long i = 0; i < n; ++i) {
        const double ui = u[i], vi = v[i];
        if (ui < 0.0 || vi < 0.0) {
            bad = true;
            continue;
        }
        const double den = 1.0 + par.q * ui + vi;
        const double A = par.r * ui / (1.0 + par.k * vi) - par.d * ui -
                         par.a * ui * ui - par.p * ui * vi / den;
        const double B = vi * (-par.m + par.c * par.p * ui / den);
        out_u[i] = ui + dt * A;
        out_v[i] = vi + dt * B;
    }
    if (bad) throw std::domain_error("kinetics: negative density rejected");
}

void reaction_stage(const ModelParams& par, double dt, bool use_omp,
                    const std::vector<double>& u, const std::vector<double>& v,
                    std::vector<double>& out_u, std::vector<double>& out_v) {
    if (use_omp && u.size() >= kOmpThreshold)
        reaction_stage_omp(par, dt, u, v, out_u, out_v);
    else
        reaction_stage_serial(par, dt, u, v, out_u, out_v);
}

// Solve (I - lam*L) x = rhs in place, where L is the mirror-BC Laplacian
// scaled by h^2 already folded into lam = dt*d/h^2. Thomas algorithm; the
// first/last rows have off-diagonal -2*lam (ghost reflection).
struct Tridiag {
    std::vector<double> c_prime;  // forward-eliminated super-diagonal
    std::vector<double> inv_diag; // 1/(b - a*c'_{i-1})
    double lam = 0.0;

    void factor(int n, double lam_in) {
        lam = lam_in;
        c_prime.assign(n, 0.0);
        inv_diag.assign(n, 0.0);
        const double b = 1.0 + 2.0 * lam;
        c_prime[0] = -2.0 * lam / b;
        inv_diag[0] = 1.0 / b;
        for (int i = 1; i < n; ++i) {
            const double a = (i == n - 1) ? -2.0 * lam : -lam;
            const double c = -lam;
            const double denom = b - a * c_prime[i - 1];
            inv_diag[i] = 1.0 / denom;
            if (i < n - 1) c_prime[i] = c / denom;
        }
    }

    void solve(std::vector<double>& x) const {
        const int n = static_cast<int>(x.size());
        // Split off the trapezoid-weighted mean: constants are exact
        // eigenvectors (eigenvalue 1) of I - lam*L, and eliminating that
        // neutral direction keeps the solve accurate when lam is huge
        // (cond(I - lam*L) ~ 4*lam would otherwise leak roundoff into the
        // undamped constant mode every step).
        double mean = 0.5 * (x[0] + x[n - 1]);
        for (int i = 1; i < n - 1; ++i) mean += x[i];
        mean /= static_cast<double>(n - 1);
        for (int i = 0; i < n; ++i) x[i] -= mean;
        x[0] *= inv_diag[0];
        for (int i = 1; i < n; ++i) {
            const double a = (i == n - 1) ? -2.0 * lam : -lam;
            x[i] = (x[i] - a * x[i - 1]) * inv_diag[i];
        }
        for (int i = n - 2; i >= 0; --i) x[i] -= c_prime[i] * x[i + 1];
        for (int i = 0; i < n; ++i) x[i] += mean;
    }
};

void check_finite(const std::vector<double>& f, double t) {
    for (double x : f)
        if (!std::isfinite(x)) throw NumericalError("blow-up: non-finite value", t);
}

bool any_negative(const std::vector<double>& f) {
    for (double x : f)
        if (x < 0.0) return true;
    return false;
}

// One IMEX or explicit step with dt as given (no positivity retry here).
void raw_step(Field& f, const ModelParams& par, const Grid1D& g,
              const SolverConfig& cfg, double dt, const Tridiag& fac_u,
              const Tridiag& fac_v, std::vector<double>& work_u,
              std::vector<double>& work_v) {
    if (cfg.zero_reaction) {
        work_u = f.u;
        work_v = f.v;
    } else {
        reaction_stage(par, dt, cfg.use_openmp, f.u, f.v, work_u, work_v);
    }
    if (cfg.scheme == Scheme::Imex) {
        fac_u.solve(work_u);
        fac_v.solve(work_v);
    } else {
        const std::vector<double> lap_u = laplacian_neumann(f.u, g);
        const std::vector<double> lap_v = laplacian_neumann(f.v, g);
        for (int i = 0; i < g.n; ++i) {
            work_u[i] += dt * par.d1 * lap_u[i];
            work_v[i] += dt * par.d2 * lap_v[i];
        }
    }
    f.u.swap(work_u);
    f.v.swap(work_v);
    f.t += dt;
}

// Advance by cfg.dt, honoring positivity_mode (recursive halving on loss).
void guarded_step(Field& f, const ModelParams& par, const Grid1D& g,
                  const SolverConfig& cfg, double dt, std::vector<double>& work_u,
                  std::vector<double>& work_v) {
    Tridiag fac_u, fac_v;
    if (cfg.scheme == Scheme::Imex) {
        fac_u.factor(g.n, dt * par.d1 / (g.h * g.h));
        fac_v.factor(g.n, dt * par.d2 / (g.h * g.h));
    }
    const Field saved = f;
    raw_step(f, par, g, cfg, dt, fac_u, fac_v, work_u, work_v);
    check_finite(f.u, f.t);
    check_finite(f.v, f.t);
    if (any_negative(f.u) || any_negative(f.v)) {
        if (cfg.positivity_mode == PositivityMode::Reject || dt * 0.5 < 1e-9)
            throw NumericalError("positivity violation", f.t);
        f = saved;
        guarded_step(f, par, g, cfg, dt * 0.5, work_u, work_v);
        guarded_step(f, par, g, cfg, dt * 0.5, work_u, work_v);
    }
}

void validate_scheme(const ModelParams& par, const Grid1D& g,
                     const SolverConfig& cfg) {
    if (!(cfg.dt > 0.0)) throw std::domain_error("SolverConfig: dt must be positive");
    if (cfg.scheme == Scheme::Explicit) {
        const double dt_max = g.h * g.h / (2.0 * std::max(par.d1, par.d2));
        if (cfg.dt > dt_max)
            throw std::domain_error("explicit scheme requires dt <= h^2/(2 max(d1,d2))");
    }
}

}  // namespace

std::vector<double> laplacian_neumann(const std::vector<double>& f,
                                      const Grid1D& g) {
    if (static_cast<int>(f.size()) != g.n)
        throw std::domain_error("laplacian_neumann: length mismatch");
    std::vector<double> out(f.size());
    const double ih2 = 1.0 / (g.h * g.h);
    const int n = g.n;
    out[0] = 2.0 * (f[1] - f[0]) * ih2;
    for (int i = 1; i < n - 1; ++i)
        out[i] = (f[i - 1] - 2.0 * f[i] + f[i + 1]) * ih2;
    out[n - 1] = 2.0 * (f[n - 2] - f[n - 1]) * ih2;
    return out;
}

double trapz_mass(const std::vector<double>& f, const Grid1D& g) {
    double s = 0.5 * (f.front() + f.back());
    for (size_t i = 1; i + 1 < f.size(); ++i) s += f[i];
    return s * g.h;
}

double spatial_variance(const std::vector<double>& f) {
    double mean = 0.0;
    for (double x : f) mean += x;
    mean /= static_cast<double>(f.size());
    double var = 0.0;
    for (double x : f) var += (x - mean) * (x - mean);
    return var / static_cast<double>(f.size());
}

Field step(const Field& f, const ModelParams& par, const Grid1D& g,
           const SolverConfig& cfg) {
    par.validate();
    if (static_cast<int>(f.u.size()) != g.n || static_cast<int>(f.v.size()) != g.n)
        throw std::domain_error("step: field/grid size mismatch");
    validate_scheme(par, g, cfg);
    Field out = f;
    std::vector<double> work_u(g.n), work_v(g.n);
    guarded_step(out, par, g, cfg, cfg.dt, work_u, work_v);
    return out;
}

RunSummary integrate(const Field& initial, const ModelParams& par,
                     const Grid1D& g, const SolverConfig& cfg) {
    par.validate();
    validate_scheme(par, g, cfg);
    if (static_cast<int>(initial.u.size()) != g.n ||
        static_cast<int>(initial.v.size()) != g.n)
        throw std::domain_error("integrate: field/grid size mismatch");
    if (any_negative(initial.u) || any_negative(initial.v))
        throw std::domain_error("integrate: initial field must be nonnegative");
    double sum0 = 0.0;
    for (int i = 0; i < g.n; ++i) sum0 += initial.u[i] + initial.v[i];
    if (sum0 == 0.0)
        throw std::domain_error("integrate: initial field must not be identically zero");

    Field f = initial;
    std::vector<double> work_u(g.n), work_v(g.n);
    Tridiag fac_u, fac_v;
    if (cfg.scheme == Scheme::Imex) {
        fac_u.factor(g.n, cfg.dt * par.d1 / (g.h * g.h));
        fac_v.factor(g.n, cfg.dt * par.d2 / (g.h * g.h));
    }

    RunSummary summary;
    auto record = [&](const Field& fld) {
        Snapshot s;
        s.t = fld.t;
        s.u = fld.u;
        s.v = fld.v;
        s.max_u = *std::max_element(fld.u.begin(), fld.u.end());
        s.max_v = *std::max_element(fld.v.begin(), fld.v.end());
        s.v_mass = trapz_mass(fld.v, g);
        s.var_u = spatial_variance(fld.u);
        s.var_v = spatial_variance(fld.v);
        summary.snapshots.push_back(std::move(s));
    };
    record(f);

    const long nsteps = static_cast<long>(std::llround(cfg.t_end / cfg.dt));
    const long stride = std::max(1L, cfg.snapshot_stride);
    for (long s = 1; s <= nsteps; ++s) {
        const Field saved = f;
        raw_step(f, par, g, cfg, cfg.dt, fac_u, fac_v, work_u, work_v);
        check_finite(f.u, f.t);
        check_finite(f.v, f.t);
        if (any_negative(f.u) || any_negative(f.v)) {
            if (cfg.positivity_mode == PositivityMode::Reject)
                throw NumericalError("positivity violation", f.t);
            f = saved;
            guarded_step(f, par, g, cfg, cfg.dt, work_u, work_v);
        }
        f.t = s * cfg.dt;  // avoid drift from repeated addition
        if (s % stride == 0 || s == nsteps) record(f);
    }

    // Tail = last 10% of snapshots (at least 2).
    const size_t nsnap = summary.snapshots.size();
    const size_t ntail = std::max<size_t>(2, nsnap / 10);
    const size_t tail0 = nsnap > ntail ? nsnap - ntail : 0;
    double tmax_u = 0.0, tmax_v = 0.0, rate_sum = 0.0;
    size_t rate_cnt = 0;
    for (size_t i = tail0; i < nsnap; ++i) {
        tmax_u = std::max(tmax_u, summary.snapshots[i].max_u);
        tmax_v = std::max(tmax_v, summary.snapshots[i].max_v);
        if (i > tail0) {
            const double dtsnap = summary.snapshots[i].t - summary.snapshots[i - 1].t;
            if (dtsnap > 0.0) {
                rate_sum += std::abs(summary.snapshots[i].var_u -
                                     summary.snapshots[i - 1].var_u) / dtsnap;
                ++rate_cnt;
            }
        }
    }
    const Snapshot& last = summary.snapshots.back();
    summary.final_field = f;
    summary.tail_max_u = tmax_u;
    summary.tail_max_v = tmax_v;
    summary.var_u = last.var_u;
    summary.var_v = last.var_v;
    summary.v_mass = last.v_mass;
    summary.tail_var_rate = rate_cnt ? rate_sum / static_cast<double>(rate_cnt) : 0.0;

    // Classification; the stationarity threshold is scale-aware: absolute
    // steady_tol or 5% of the current variance per unit time, whichever is
    // larger (a fixed absolute rate would never fire at pattern amplitude).
    if (std::max(tmax_u, tmax_v) < 1e-3) {
        summary.classification = "decayed";
    } else if (summary.var_u < 1e-10 && summary.var_v < 1e-10) {
        summary.classification = "constant-steady";
    } else if (summary.var_u > 1e-6 &&
               summary.tail_var_rate <=
                   std::max(cfg.steady_tol, 0.05 * summary.var_u)) {
        summary.classification = "patterned";
    } else {
        summary.classification = "not-converged";
    }
    return summary;
}

std::vector<BoundCheck> bound_monitor(const RunSummary& summary,
                                      const ModelParams& par, double L) {
    std::vector<BoundCheck> out;
    const double chi = par.chi();
    const double vcap = par.c * (par.r + par.m) * chi / par.m;
    if (!(par.r > par.d)) {  // bounds are stated for r > d only
        out.push_back({"tail_max_u <= chi", false, false, 0.0});
        out.push_back({"tail_v_mass <= c(r+m)chi L/m", false, false, 0.0});
        out.push_back({"tail_max_v <= c(r+m)chi/m", false, false, 0.0});
        return out;
    }

    BoundCheck a{"tail_max_u <= chi", true, false, 0.0};
    a.margin = chi + 1e-2 - summary.tail_max_u;
    a.satisfied = a.margin >= 0.0;
    out.push_back(a);

    BoundCheck b{"tail_v_mass <= c(r+m)chi L/m", true, false, 0.0};
    b.margin = vcap * L * (1.0 + 1e-2) - summary.v_mass;
    b.satisfied = b.margin >= 0.0;
    out.push_back(b);

    BoundCheck c{"tail_max_v <= c(r+m)chi/m", par.d2 >= par.d1, false, 0.0};
    if (c.applicable) {
        c.margin = vcap * (1.0 + 1e-2) - summary.tail_max_v;
        c.satisfied = c.margin >= 0.0;
    }
    out.push_back(c);
    return out;
}

}  // namespace fearbd
