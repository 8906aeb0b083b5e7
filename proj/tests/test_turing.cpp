#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <random>

#include "fearbd/turing.hpp"
#include "helpers.hpp"

using namespace fearbd;
using testutil::fig1_params;
using testutil::fig2_params;
using testutil::random_hypothesis_params;

namespace {
constexpr double kPi = 3.14159265358979323846;
}

TEST_CASE("Neumann spectrum") {
    const Spectrum s = spectrum(kPi, 4);
    REQUIRE(s.mu.size() == 5);
    for (int i = 0; i <= 4; ++i)
        CHECK(s.mu[i] == doctest::Approx(double(i) * i).epsilon(1e-14));

    const Spectrum s2 = spectrum(2.0 * kPi, 2);
    REQUIRE(s2.mu.size() == 3);
    CHECK(s2.mu[1] == doctest::Approx(0.25));
    CHECK(s2.mu[2] == doctest::Approx(1.0));

    CHECK(spectrum(kPi, 1).mu[1] == doctest::Approx(1.0));

    // strictly increasing
    for (size_t i = 1; i < s.mu.size(); ++i) CHECK(s.mu[i] > s.mu[i - 1]);
}

TEST_CASE("dispersion polynomial identities") {
    const ModelParams par = fig1_params();
    const Equilibrium eq = solve_coexistence(par);
    const JacobianEntries j = jacobian_at(par, eq.u_star, eq.v_star);

    // constant term
    CHECK(dispersion_H(par, eq, 0.0) ==
          doctest::Approx(j.P * j.N - j.M * j.Q).epsilon(1e-12));

    // det/tr consistency with the explicit 2x2 matrix A_i at each mode
    const Spectrum s = spectrum(kPi, 8);
    for (double mu : s.mu) {
        const double a11 = mu - j.M / par.d1;
        const double a12 = j.N / par.d1;
        const double a21 = -j.P / par.d2;
        const double a22 = mu + j.Q / par.d2;
        const double det = a11 * a22 - a12 * a21;
        const double H = dispersion_H(par, eq, mu);
        CHECK(std::abs(det - H / (par.d1 * par.d2)) <=
              1e-12 * std::max(1.0, std::abs(det)));
        CHECK(a11 + a22 ==
              doctest::Approx(2.0 * mu + j.Q / par.d2 - j.M / par.d1));
    }

    // mode 1 is inside the window for the committed scenario
    CHECK(dispersion_H(par, eq, 1.0) < 0.0);
}

TEST_CASE("window roots zero the polynomial on random configs") {
    std::mt19937_64 rng(21);
    int found = 0;
    while (found < 100) {
        const ModelParams par = random_hypothesis_params(rng, /*d2_ge_d1=*/true);
        Equilibrium eq;
        try {
            eq = solve_coexistence(par);
        } catch (const HypothesisError&) {
            continue;
        }
        const auto win = mode_window(par, eq);
        if (!win) continue;
        ++found;
        const auto [lo, hi] = *win;
        CHECK(lo < hi);
        const double scale = std::max(1.0, std::abs(dispersion_H(par, eq, 0.0)));
        CHECK(std::abs(dispersion_H(par, eq, hi)) < 1e-9 * scale);
        // the raw lower root may be negative; only demand H=0 when lo >= 0
        if (lo > 0.0) CHECK(std::abs(dispersion_H(par, eq, lo)) < 1e-9 * scale);
        // strictly negative in the interior
        CHECK(dispersion_H(par, eq, 0.5 * (std::max(lo, 0.0) + hi)) < 0.0);
    }
}

TEST_CASE("large-d2 asymptotics of the window") {
    ModelParams par = fig1_params();
    par.d2 = 1e6;
    const Equilibrium eq = solve_coexistence(par);
    const JacobianEntries j = jacobian_at(par, eq.u_star, eq.v_star);
    const auto win = mode_window(par, eq);
    REQUIRE(win.has_value());
    CHECK(std::abs(win->second - j.M / par.d1) < 1e-3 * j.M / par.d1);
    CHECK(win->first < 1e-3);
}

TEST_CASE("negative discriminant yields no window") {
    ModelParams par = fig1_params();
    par.d2 = par.d1;  // equal diffusivities: kinetically stable state, no window
    const Equilibrium eq = solve_coexistence(par);
    CHECK_FALSE(mode_window(par, eq).has_value());
}

TEST_CASE("committed figure reports") {
    const DispersionReport r1 = analyze(fig1_params(), kPi, 8);
    CHECK(std::abs(r1.ratio_M_d1 - 2.407) < 1e-3);
    CHECK(r1.condition_holds);
    CHECK(r1.mu_minus < 1.0);
    CHECK(r1.mu_plus > 1.0);
    CHECK(r1.mu_plus < 4.0);
    REQUIRE(r1.unstable_modes == std::vector<int>{1});
    CHECK(r1.gamma == 1);
    CHECK(r1.pattern_predicted);
    CHECK(r1.some_mode_unstable);

    const DispersionReport r2 = analyze(fig2_params(), kPi, 8);
    CHECK(std::abs(r2.ratio_M_d1 - 10.095) < 1e-3);
    CHECK(r2.mu_plus > 9.0);
    CHECK(r2.mu_plus < 16.0);
    REQUIRE(r2.unstable_modes == std::vector<int>{1, 2, 3});
    CHECK(r2.gamma == 3);
    CHECK(r2.pattern_predicted);
}

TEST_CASE("monotone window in d2") {
    ModelParams par = fig1_params();
    double prev_lo = 0.0, prev_hi = 0.0;
    bool first = true;
    for (double d2 : {0.1, 1.0, 10.0, 100.0}) {
        par.d2 = d2;
        const Equilibrium eq = solve_coexistence(par);
        const auto win = mode_window(par, eq);
        REQUIRE(win.has_value());
        const double lo = std::max(0.0, win->first), hi = win->second;
        if (!first) {
            CHECK(lo <= prev_lo + 1e-12);
            CHECK(hi >= prev_hi - 1e-12);
        }
        prev_lo = lo;
        prev_hi = hi;
        first = false;
    }
}

TEST_CASE("gamma invariant under mode-list refinement") {
    for (int n_modes : {8, 16, 64}) {
        CHECK(analyze(fig1_params(), kPi, n_modes).gamma == 1);
        CHECK(analyze(fig2_params(), kPi, n_modes).gamma == 3);
    }
}

TEST_CASE("nonexistence threshold formulas and monotonicity") {
    const ModelParams par = fig1_params();
    const NonexistenceReport rep = nonexistence_threshold(par);
    const double chi = par.chi();
    CHECK(rep.chi == doctest::Approx(chi));
    CHECK(rep.C2 ==
          doctest::Approx((par.r * par.k + par.p * (1.0 + par.q * chi)) / 2.0));
    CHECK(rep.mu_lower ==
          doctest::Approx(par.m / (10.0 * par.c * par.p)));  // default heuristic
    CHECK(rep.d_star > 0.0);
    CHECK(rep.C1 >= 0.0);
    CHECK(rep.C3 >= 0.0);
    CHECK(rep.C4 >= 0.0);
    CHECK(rep.d_star == doctest::Approx(std::max(
                            chi * chi * rep.poincare_const * (rep.C1 + rep.C3) /
                                rep.mu_lower,
                            rep.poincare_const * (rep.C2 + rep.C4))));

    // weakly decreasing in mu_lower, weakly increasing in C_p
    const double d_small = nonexistence_threshold(par, rep.mu_lower / 2).d_star;
    const double d_large = nonexistence_threshold(par, rep.mu_lower * 2).d_star;
    CHECK(d_small >= rep.d_star);
    CHECK(d_large <= rep.d_star);
    CHECK(nonexistence_threshold(par, 0.0, 2.0).d_star >= rep.d_star);

    // r <= d: no positive chi
    ModelParams bad = par;
    bad.r = bad.d;
    CHECK_THROWS(nonexistence_threshold(bad));
}

TEST_CASE("no pattern predicted at diffusivities past d*") {
    ModelParams par = fig1_params();
    const double d_star = nonexistence_threshold(par).d_star;
    par.d1 = par.d2 = 2.0 * d_star;
    const DispersionReport rep = analyze(par, kPi, 8);
    CHECK_FALSE(rep.pattern_predicted);
    CHECK_FALSE(rep.some_mode_unstable);
}
