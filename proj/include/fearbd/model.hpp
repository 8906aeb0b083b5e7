#ifndef FEARBD_MODEL_HPP
#define FEARBD_MODEL_HPP

#include <stdexcept>
#include <string>

// Pointwise kinetics of the diffusive predator-prey model with a fear
// factor 1/(1+kv) on prey reproduction and a Beddington-DeAngelis
// functional response p/(1+qu+v):
//
//   u_t - d1 u_xx = r u/(1+kv) - d u - a u^2 - p u v/(1+qu+v)  =: A(u,v)
//   v_t - d2 v_xx = v (-m + c p u/(1+qu+v))                    =: B(u,v)
//
// on (0,L) with zero-flux (Neumann) boundary conditions.

namespace fearbd {

struct ModelParams {
    double r;   // prey birth rate                [1/time]
    double d;   // prey natural death rate        [1/time]
    double a;   // intra-species death rate       [1/(density*time)]
    double c;   // conversion rate                [-]
    double m;   // predator death rate            [1/time]
    double p;   // capture rate                   [1/time]
    double q;   // handling/saturation coeff.     [1/density]
    double k;   // fear parameter                 [1/density]
    double d1;  // prey diffusivity               [length^2/time]
    double d2;  // predator diffusivity           [length^2/time]

    // All ten parameters must be strictly positive.
    void validate() const {
        const double* vals[] = {&r, &d, &a, &c, &m, &p, &q, &k, &d1, &d2};
        const char* names[] = {"r", "d", "a", "c", "m", "p", "q", "k", "d1", "d2"};
        for (int i = 0; i < 10; ++i)
            if (!(*vals[i] > 0.0))
                throw std::domain_error(std::string("ModelParams: parameter '") +
                                        names[i] + "' must be strictly positive");
    }

    // Carrying-capacity-like prey cap chi = (r-d)/a (positive iff r > d).
    double chi() const { return (r - d) / a; }
};

struct ReactionRates {
    double A;  // prey reaction rate     [density/time]
    double B;  // predator reaction rate [density/time]
};

// Linearization entries at a point, with the sign convention that the
// reaction Jacobian equals [[M, -N], [P, -Q]].
struct JacobianEntries {
    double M;  //  dA/du
    double N;  // -dA/dv
    double P;  //  dB/du
    double Q;  // -dB/dv
};

inline void require_nonneg(double u, double v) {
    if (u < 0.0 || v < 0.0)
        throw std::domain_error("kinetics: negative density rejected");
}

// Fear factor f(k,v) = 1/(1+kv) in (0,1].
inline double fear_factor(double k, double v) {
    if (k < 0.0 || v < 0.0)
        throw std::domain_error("fear_factor: negative input");
    return 1.0 / (1.0 + k * v);
}

// Beddington-DeAngelis response g(u,v) = p/(1+qu+v) in (0,p].
inline double functional_response(const ModelParams& par, double u, double v) {
    require_nonneg(u, v);
    return par.p / (1.0 + par.q * u + v);
}

inline ReactionRates reaction(const ModelParams& par, double u, double v) {
    require_nonneg(u, v);
    const double den = 1.0 + par.q * u + v;
    ReactionRates rr;
    rr.A = par.r * u / (1.0 + par.k * v) - par.d * u - par.a * u * u -
           par.p * u * v / den;
    rr.B = v * (-par.m + par.c * par.p * u / den);
    return rr;
}

inline JacobianEntries jacobian_at(const ModelParams& par, double u, double v) {
    require_nonneg(u, v);
    const double den = 1.0 + par.q * u + v;
    const double den2 = den * den;
    const double fk = 1.0 + par.k * v;
    JacobianEntries j;
    j.M = u * (-2.0 * par.a + par.p * par.q * v / den2) + par.r / fk - par.d -
          par.p * v / den;
    j.N = par.r * par.k * u / (fk * fk) + par.p * u * (1.0 + par.q * u) / den2;
    j.P = par.c * par.p * (1.0 + v) * v / den2;
    j.Q = par.m - par.c * par.p * (1.0 + par.q * u) * u / den2;
    return j;
}

}  // namespace fearbd

#endif
