#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <random>

#include "fearbd/equilibria.hpp"
#include "helpers.hpp"

using namespace fearbd;
using testutil::fig1_params;
using testutil::fig2_params;
using testutil::random_hypothesis_params;

namespace {

// F(v) by direct substitution of u = lambda(1+v) into the prey nullcline
// r/(1+kv) - d - a u - p v/(1+qu+v) = 0, rescaled by the common positive
// factor (1+kv)(1+v) so it is a cubic polynomial in v (note 1+qu+v =
// (1+q*lambda)(1+v) along the substitution line).
double substituted_cubic(const ModelParams& par, double lam, double v) {
    const double u = lam * (1.0 + v);
    const double fk = 1.0 + par.k * v;
    const double den = 1.0 + par.q * u + v;
    const double nullcline =
        par.r / fk - par.d - par.a * u - par.p * v / den;
    return -nullcline * fk * (1.0 + v);
}

}  // namespace

TEST_CASE("lambda direct substitution") {
    ModelParams par = fig1_params();
    par.m = 1.0;
    par.c = 2.0;
    par.p = 1.0;
    par.q = 1.0;
    CHECK(cubic_coeffs(par).lambda == doctest::Approx(1.0));
}

TEST_CASE("cubic sign structure under the hypotheses") {
    std::mt19937_64 rng(11);
    for (int trial = 0; trial < 100; ++trial) {
        const ModelParams par = random_hypothesis_params(rng);
        const CubicCoeffs c = cubic_coeffs(par);
        CHECK(c.alpha1 > 0.0);
        CHECK(c.alpha2 < 0.0);
        CHECK(c.alpha4 > 0.0);
        CHECK(c.eval(0.0) == doctest::Approx(-c.alpha4));
        CHECK(c.eval(0.0) < 0.0);
        // Descartes: standard-form coefficients (a1, -a2, -a3, -a4) have
        // exactly one sign change.
        const double coeff[4] = {c.alpha1, -c.alpha2, -c.alpha3, -c.alpha4};
        int changes = 0;
        double prev = coeff[0];
        for (int i = 1; i < 4; ++i) {
            if (coeff[i] == 0.0) continue;
            if (prev * coeff[i] < 0.0) ++changes;
            prev = coeff[i];
        }
        CHECK(changes == 1);
    }
}

TEST_CASE("cubic matches direct substitution pointwise") {
    std::mt19937_64 rng(12);
    std::uniform_real_distribution<double> V(0.0, 20.0);
    for (int trial = 0; trial < 100; ++trial) {
        const ModelParams par = random_hypothesis_params(rng);
        const CubicCoeffs c = cubic_coeffs(par);
        for (int s = 0; s < 20; ++s) {
            const double v = V(rng);
            const double direct = substituted_cubic(par, c.lambda, v);
            const double scale = std::max(1.0, std::abs(direct));
            CHECK(std::abs(c.eval(v) - direct) / scale < 1e-12);
        }
    }
}

TEST_CASE("derivative cubic has at most one positive root; F<0 before it") {
    std::mt19937_64 rng(13);
    for (int trial = 0; trial < 100; ++trial) {
        const ModelParams par = random_hypothesis_params(rng);
        const CubicCoeffs c = cubic_coeffs(par);
        // H(v) = F'(v) is an upward parabola with H(0) = -alpha3; it has
        // exactly one positive root v+ when alpha3 > 0 (one sign change).
        if (c.alpha3 > 0.0) {
            CHECK(c.deriv(0.0) < 0.0);
            // locate v+ by scanning; F must be negative on [0, v+)
            double vp = 0.0;
            for (double v = 0.0; v < 1e4; v += 1e-2) {
                if (c.deriv(v) > 0.0) {
                    vp = v;
                    break;
                }
            }
            for (double v = 0.0; v < vp; v += vp / 64.0)
                CHECK(c.eval(v) < 0.0);
        }
    }
}

TEST_CASE("committed figure equilibria to 5 decimals") {
    const Equilibrium e1 = solve_coexistence(fig1_params());
    CHECK(std::abs(e1.u_star - 0.16608) < 5e-6);
    CHECK(std::abs(e1.v_star - 3.89934) < 5e-6);
    CHECK(e1.residual < 1e-9);
    CHECK(cubic_coeffs(fig1_params()).lambda ==
          doctest::Approx(0.033899).epsilon(1e-4));

    const Equilibrium e2 = solve_coexistence(fig2_params());
    CHECK(std::abs(e2.u_star - 0.16675) < 5e-6);
    CHECK(std::abs(e2.v_star - 3.91904) < 5e-6);
    CHECK(e2.residual < 1e-9);
}

TEST_CASE("coexistence identities: u = lambda(1+v), uniqueness by scan") {
    std::mt19937_64 rng(14);
    for (int trial = 0; trial < 100; ++trial) {
        const ModelParams par = random_hypothesis_params(rng);
        const CubicCoeffs c = cubic_coeffs(par);
        const Equilibrium eq = solve_coexistence(par);
        CHECK(eq.kind == EquilibriumKind::Coexistence);
        CHECK(eq.u_star > 0.0);
        CHECK(eq.v_star > 0.0);
        CHECK(std::abs(eq.u_star - c.lambda * (eq.v_star + 1.0)) <
              1e-10 * eq.u_star);
        CHECK(eq.residual < 1e-9);

        // brute-force sign-change scan: exactly one positive root
        double v_max = 1.0;
        while (c.eval(v_max) <= 0.0) v_max *= 2.0;
        int sign_changes = 0;
        double prev = c.eval(0.0);
        const double step = std::max(1e-4, v_max / 2000000.0);
        for (double v = step; v <= v_max + step; v += step) {
            const double cur = c.eval(v);
            if (prev < 0.0 && cur >= 0.0) ++sign_changes;
            if (prev > 0.0 && cur <= 0.0) ++sign_changes;
            prev = cur;
        }
        CHECK(sign_changes == 1);
    }
}

TEST_CASE("tolerance refinement leaves the root unchanged to 1e-9") {
    const Equilibrium coarse = solve_coexistence(fig1_params(), 1e-11);
    const Equilibrium fine = solve_coexistence(fig1_params(), 1e-12);
    CHECK(std::abs(coarse.v_star - fine.v_star) < 1e-9);
}

TEST_CASE("hypothesis failures are typed and named") {
    ModelParams par = fig1_params();
    par.m = par.c * par.p / par.q * 1.01;  // cp <= mq
    CHECK_THROWS_AS(cubic_coeffs(par), HypothesisError);
    CHECK_THROWS_AS(solve_coexistence(par), HypothesisError);

    // r <= d + a*lambda
    par = fig1_params();
    par.r = par.d * 0.5;
    CHECK_THROWS_AS(solve_coexistence(par), HypothesisError);
}

TEST_CASE("constant_equilibria inventory") {
    // r <= d: only the origin
    ModelParams par = fig1_params();
    par.r = par.d * 0.9;
    auto eqs = constant_equilibria(par);
    REQUIRE(eqs.size() == 1);
    CHECK(eqs[0].kind == EquilibriumKind::Trivial);

    // r > d but m >= cp(r-d)/a: origin plus semi-trivial only
    par = ModelParams{1.0, 0.5, 1.0, 2.0, 0.6, 0.5, 1.0, 0.5, 0.01, 0.1};
    REQUIRE(par.m >= par.c * par.p * par.chi());
    eqs = constant_equilibria(par);
    REQUIRE(eqs.size() == 2);
    CHECK(eqs[0].kind == EquilibriumKind::Trivial);
    CHECK(eqs[1].kind == EquilibriumKind::SemiTrivial);
    CHECK(eqs[1].u_star == doctest::Approx(par.chi()));
    CHECK(eqs[1].v_star == 0.0);

    // committed figure params: all three
    eqs = constant_equilibria(fig1_params());
    REQUIRE(eqs.size() == 3);
    CHECK(eqs[2].kind == EquilibriumKind::Coexistence);
}
