#ifndef FEARBD_TESTS_HELPERS_HPP
#define FEARBD_TESTS_HELPERS_HPP

#include <random>

#include "fearbd/config.hpp"
#include "fearbd/equilibria.hpp"
#include "fearbd/harness.hpp"
#include "fearbd/model.hpp"

namespace fearbd::testutil {

// Committed completion parameters (mirrors configs/fig1.cfg / fig2.cfg).
inline ModelParams fig1_params() {
    return {0.0772, 0.0009467022937138525, 0.1, 16.2, 0.037300915830612826,
            0.137, 30.0, 0.02, 0.00442431931189225, 0.1};
}
inline ModelParams fig2_params() {
    return {0.247, 0.0020461046416188067, 0.055, 30.0, 0.2780510851249727,
            0.57, 32.0, 0.02, 0.010319167748528877, 0.2};
}

// Random parameter set that satisfies the coexistence hypotheses by
// construction: pick a target equilibrium (u*, v*), set
// m = lam*c*p/(1+lam*q) with lam = u*/(1+v*) (predator nullcline) and
// d = r/(1+k v*) - a u* - p v*/(1+q u*+v*) (prey nullcline). Then
// c p - m q = c p/(1+lam q) > 0 and r - d - a lam >= a lam v* > 0 hold
// automatically; d > 0 is enforced by choosing r from a positive target.
inline ModelParams random_hypothesis_params(std::mt19937_64& rng,
                                            bool d2_ge_d1 = false) {
    std::uniform_real_distribution<double> U(0.0, 1.0);
    for (;;) {
        const double us = 0.1 + 0.9 * U(rng);
        const double vs = 0.5 + 4.5 * U(rng);
        ModelParams par{};
        par.a = 0.05 + 0.15 * U(rng);
        par.k = 0.01 + 0.5 * U(rng);
        par.q = 1.0 + 19.0 * U(rng);
        par.p = 0.1 + 0.9 * U(rng);
        par.c = 1.0 + 9.0 * U(rng);
        const double lam = us / (1.0 + vs);
        par.m = lam * par.c * par.p / (1.0 + lam * par.q);
        const double den = 1.0 + par.q * us + vs;
        const double d_target = 0.005 + 0.045 * U(rng);
        par.r = (1.0 + par.k * vs) * (par.a * us + par.p * vs / den + d_target);
        par.d = par.r / (1.0 + par.k * vs) - par.a * us - par.p * vs / den;
        par.d1 = 0.001 + 0.099 * U(rng);
        par.d2 = d2_ge_d1 ? par.d1 * (1.0 + 9.0 * U(rng))
                          : 0.001 + 0.099 * U(rng);
        if (par.d > 1e-4 && par.m > 1e-4) return par;
    }
}

inline RunConfig config_for(const ModelParams& par, double t_end, int n,
                            double dt) {
    RunConfig cfg;
    cfg.params = par;
    cfg.n = n;
    cfg.solver.dt = dt;
    cfg.solver.t_end = t_end;
    cfg.solver.snapshot_stride = std::max(1L, static_cast<long>(1.0 / dt));
    return cfg;
}

}  // namespace fearbd::testutil

#endif
