#ifndef FEARBD_ORACLE_HPP
#define FEARBD_ORACLE_HPP

#include <vector>

#include "fearbd/model.hpp"

namespace fearbd {

// Closed-form solution of the spatially homogeneous upper-solution problem
//   u' = u (r - d - a u),  u(0) = u0_star,
// which dominates max_x u(x,t) of the PDE (comparison principle).
struct LogisticParams {
    double r, d, a;
    double u0_star;

    static LogisticParams from(const ModelParams& par, double u0) {
        return {par.r, par.d, par.a, u0};
    }
};

// u*(t): logistic closed form; r=d branch u0/(1+a t u0); equilibrium start
// (r-d = a u0) returns u0 identically.
double u_star(double t, const LogisticParams& lp);

struct OdeTrajectory {
    std::vector<double> t;
    std::vector<double> u;
    std::vector<double> v;
};

// Fixed-step RK4 integration of the comparison pair
//   u' = u (r - d - a u),   v' = v (-m + c p u),
// sampled every sample_every time units (plus t=0 and t_end).
OdeTrajectory comparison_system(double t_end, const ModelParams& par,
                                double u0_star, double v0_star,
                                double dt = 1e-4, double sample_every = 0.1);

}  // namespace fearbd

#endif
