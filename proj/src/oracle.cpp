#include "fearbd/oracle.hpp"

#include <cmath>
#include <stdexcept>

namespace fearbd {

double u_star(double t, const LogisticParams& lp) {
    if (!(lp.u0_star > 0.0))
        throw std::domain_error("u_star: initial value must be positive");
    if (t < 0.0) throw std::domain_error("u_star: t must be nonnegative");
    const double rd = lp.r - lp.d;
    if (rd == 0.0)
        return lp.u0_star / (1.0 + lp.a * t * lp.u0_star);
    const double denomK = rd - lp.a * lp.u0_star;
    if (denomK == 0.0)  // removable singularity: started at the equilibrium chi
        return lp.u0_star;
    const double K = rd * lp.u0_star / denomK;
    const double Kt = lp.a * K / rd;
    // K e^{rd t}/(1+Kt e^{rd t}) rewritten so that large rd*t does not
    // produce inf/inf; exp underflow to 0 gives the correct chi limit.
    return K / (std::exp(-rd * t) + Kt);
}

OdeTrajectory comparison_system(double t_end, const ModelParams& par,
                                double u0_star, double v0_star, double dt,
                                double sample_every) {
    if (!(u0_star > 0.0) || !(v0_star > 0.0))
        throw std::domain_error("comparison_system: initial values must be positive");
    if (!(dt > 1e-12)) throw std::runtime_error("comparison_system: step-size underflow");

    const double rd = par.r - par.d;
    auto fu = [&](double u) { return u * (rd - par.a * u); };
    auto fv = [&](double u, double v) { return v * (-par.m + par.c * par.p * u); };

    OdeTrajectory traj;
    const long nsteps = static_cast<long>(std::llround(t_end / dt));
    const long stride = std::max(1L, static_cast<long>(std::llround(sample_every / dt)));
    double u = u0_star, v = v0_star;
    traj.t.push_back(0.0);
    traj.u.push_back(u);
    traj.v.push_back(v);
    for (long s = 1; s <= nsteps; ++s) {
        const double k1u = fu(u), k1v = fv(u, v);
        const double u2 = u + 0.5 * dt * k1u, v2 = v + 0.5 * dt * k1v;
        const double k2u = fu(u2), k2v = fv(u2, v2);
        const double u3 = u + 0.5 * dt * k2u, v3 = v + 0.5 * dt * k2v;
        const double k3u = fu(u3), k3v = fv(u3, v3);
        const double u4 = u + dt * k3u, v4 = v + dt * k3v;
        const double k4u = fu(u4), k4v = fv(u4, v4);
        u += dt / 6.0 * (k1u + 2.0 * k2u + 2.0 * k3u + k4u);
        v += dt / 6.0 * (k1v + 2.0 * k2v + 2.0 * k3v + k4v);
        if (s % stride == 0 || s == nsteps) {
            traj.t.push_back(s * dt);
            traj.u.push_back(u);
            traj.v.push_back(v);
        }
    }
    return traj;
}

}  // namespace fearbd
