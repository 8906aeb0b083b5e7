#ifndef FEARBD_EQUILIBRIA_HPP
#define FEARBD_EQUILIBRIA_HPP

#include <stdexcept>
#include <string>
#include <vector>

#include "fearbd/model.hpp"

namespace fearbd {

// Thrown when a structural hypothesis (cp > mq, r > d + a*lambda, r > d)
// fails; the message names the violated inequality.
struct HypothesisError : std::runtime_error {
    explicit HypothesisError(const std::string& what) : std::runtime_error(what) {}
};

// Coefficients of the coexistence cubic
//   F(v) = alpha1 v^3 - alpha2 v^2 - alpha3 v - alpha4,
// obtained by substituting u = lambda(1+v), lambda = m/(cp-mq), into the
// prey equation. Note: the v^1 coefficient as often printed omits an
// -a*lambda term; the value here is the one that makes F identical to the
// direct substitution (unit-tested).
struct CubicCoeffs {
    double lambda;
    double alpha1, alpha2, alpha3, alpha4;

    double eval(double v) const {
        return ((alpha1 * v - alpha2) * v - alpha3) * v - alpha4;
    }
    // F'(v) = 3 a1 v^2 - 2 a2 v - a3
    double deriv(double v) const {
        return (3.0 * alpha1 * v - 2.0 * alpha2) * v - alpha3;
    }
};

enum class EquilibriumKind { Trivial, SemiTrivial, Coexistence };

struct Equilibrium {
    EquilibriumKind kind;
    double u_star;
    double v_star;
    double residual;  // max(|A|,|B|) at the point
};

inline const char* to_string(EquilibriumKind k) {
    switch (k) {
        case EquilibriumKind::Trivial: return "trivial";
        case EquilibriumKind::SemiTrivial: return "semi-trivial";
        default: return "coexistence";
    }
}

CubicCoeffs cubic_coeffs(const ModelParams& par);

// Unique positive root of F plus u = lambda(v+1); throws HypothesisError
// if cp <= mq or r <= d + a*lambda.
Equilibrium solve_coexistence(const ModelParams& par, double tol = 1e-12);

// All constant equilibria: always (0,0); (chi,0) iff r > d; the
// coexistence state iff its hypotheses hold.
std::vector<Equilibrium> constant_equilibria(const ModelParams& par);

}  // namespace fearbd

#endif
