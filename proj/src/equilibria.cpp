#include "fearbd/equilibria.hpp"

#include <cmath>

namespace fearbd {

CubicCoeffs cubic_coeffs(const ModelParams& par) {
    const double cp_mq = par.c * par.p - par.m * par.q;
    if (!(cp_mq > 0.0))
        throw HypothesisError("no-coexistence-structure: requires c*p > m*q");
    CubicCoeffs cc;
    const double lam = par.m / cp_mq;
    const double s = 1.0 + par.q * lam;  // 1+qu+v = s*(1+v) along u = lam(1+v)
    cc.lambda = lam;
    cc.alpha1 = par.a * lam * par.k;
    cc.alpha2 = -par.p * par.k / s - (par.a * lam * (1.0 + 2.0 * par.k) + par.k * par.d);
    cc.alpha3 = par.r - par.p / s - (par.a * lam + par.d) * (1.0 + par.k) - par.a * lam;
    cc.alpha4 = par.r - (par.d + par.a * lam);
    return cc;
}

Equilibrium solve_coexistence(const ModelParams& par, double tol) {
    const CubicCoeffs cc = cubic_coeffs(par);
    if (!(par.r > par.d + par.a * cc.lambda))
        throw HypothesisError("hypothesis failure: requires r > d + a*lambda");

    // F(0) = -alpha4 < 0; F -> +inf. Bracket by doubling, then bisect.
    double lo = 0.0, hi = 1.0;
    while (cc.eval(hi) <= 0.0) {
        hi *= 2.0;
        if (hi > 1e18)
            throw std::runtime_error("solve_coexistence: bracket failure (unreachable under hypotheses)");
    }
    for (int it = 0; it < 200; ++it) {
        const double mid = 0.5 * (lo + hi);
        if (cc.eval(mid) > 0.0)
            hi = mid;
        else
            lo = mid;
        if (hi - lo <= tol * hi) break;
    }
    double v = 0.5 * (lo + hi);

    // Newton polish (capped; fall back to the bisection value on escape).
    const double v_bisect = v;
    for (int it = 0; it < 20; ++it) {
        const double f = cc.eval(v);
        const double fp = cc.deriv(v);
        if (fp == 0.0) break;
        const double step = f / fp;
        const double vn = v - step;
        if (!(vn > lo * 0.5) || !(vn < hi * 2.0 + 1.0)) {
            v = v_bisect;
            break;
        }
        v = vn;
        if (std::abs(step) <= tol * std::abs(v)) break;
    }

    Equilibrium eq;
    eq.kind = EquilibriumKind::Coexistence;
    eq.v_star = v;
    eq.u_star = cc.lambda * (v + 1.0);
    const ReactionRates rr = reaction(par, eq.u_star, eq.v_star);
    eq.residual = std::max(std::abs(rr.A), std::abs(rr.B));
    return eq;
}

std::vector<Equilibrium> constant_equilibria(const ModelParams& par) {
    std::vector<Equilibrium> out;
    out.push_back({EquilibriumKind::Trivial, 0.0, 0.0, 0.0});
    if (par.r > par.d) {
        Equilibrium semi;
        semi.kind = EquilibriumKind::SemiTrivial;
        semi.u_star = par.chi();
        semi.v_star = 0.0;
        const ReactionRates rr = reaction(par, semi.u_star, 0.0);
        semi.residual = std::max(std::abs(rr.A), std::abs(rr.B));
        out.push_back(semi);
    }
    try {
        out.push_back(solve_coexistence(par));
    } catch (const HypothesisError&) {
        // no coexistence state; nothing to add
    }
    return out;
}

}  // namespace fearbd
