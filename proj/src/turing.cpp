#include "fearbd/turing.hpp"

#include <cmath>
#include <stdexcept>

namespace fearbd {

namespace {
constexpr double kPi = 3.14159265358979323846;

void require_coexistence(const Equilibrium& eq) {
    if (eq.kind != EquilibriumKind::Coexistence)
        throw std::domain_error("dispersion analysis requires the coexistence equilibrium");
}
}  // namespace

Spectrum spectrum(double L, int n_modes) {
    if (!(L > 0.0) || n_modes < 1)
        throw std::domain_error("spectrum: require L > 0 and n_modes >= 1");
    Spectrum s;
    s.L = L;
    s.mu.reserve(static_cast<size_t>(n_modes) + 1);
    for (int i = 0; i <= n_modes; ++i) {
        const double w = i * kPi / L;
        s.mu.push_back(w * w);
    }
    return s;
}

double dispersion_H(const ModelParams& par, const Equilibrium& eq, double mu) {
    require_coexistence(eq);
    const JacobianEntries j = jacobian_at(par, eq.u_star, eq.v_star);
    return par.d1 * par.d2 * mu * mu + (j.Q * par.d1 - j.M * par.d2) * mu +
           j.P * j.N - j.M * j.Q;
}

std::optional<std::pair<double, double>> mode_window(const ModelParams& par,
                                                    const Equilibrium& eq) {
    require_coexistence(eq);
    const JacobianEntries j = jacobian_at(par, eq.u_star, eq.v_star);
    const double b = j.M * par.d2 - j.Q * par.d1;
    const double disc = b * b - 4.0 * par.d1 * par.d2 * (j.P * j.N - j.M * j.Q);
    if (!(b > 0.0) || !(disc > 0.0)) return std::nullopt;
    const double s = std::sqrt(disc);
    const double denom = 2.0 * par.d1 * par.d2;
    return std::make_pair((b - s) / denom, (b + s) / denom);
}

DispersionReport analyze(const ModelParams& par, double L, int n_modes) {
    const Equilibrium eq = solve_coexistence(par);
    const JacobianEntries j = jacobian_at(par, eq.u_star, eq.v_star);

    DispersionReport rep;
    rep.entries = j;
    rep.ratio_M_d1 = j.M / par.d1;

    const auto w = mode_window(par, eq);
    rep.condition_holds = w.has_value();

    // Enough modes to cover the window and the ratio M/d1.
    double mu_cover = rep.ratio_M_d1;
    if (w) mu_cover = std::max(mu_cover, w->second);
    int need = n_modes;
    while (true) {
        const double wmax = need * kPi / L;
        if (wmax * wmax > mu_cover || need > 100000) break;
        ++need;
    }
    const Spectrum spec = spectrum(L, need);

    if (w) {
        rep.mu_minus = std::max(0.0, w->first);
        rep.mu_plus = w->second;
        const double tie = 1e-12;
        for (size_t i = 1; i < spec.mu.size(); ++i) {
            const double mu = spec.mu[i];
            const bool above = mu > w->first * (1.0 + (w->first > 0 ? tie : 0.0));
            const bool below = mu < w->second * (1.0 - tie);
            if (above && below) rep.unstable_modes.push_back(static_cast<int>(i));
        }
        rep.gamma = static_cast<int>(rep.unstable_modes.size());
        for (size_t i = 1; i < spec.mu.size(); ++i)
            if (dispersion_H(par, eq, spec.mu[i]) < 0.0) {
                rep.some_mode_unstable = true;
                break;
            }
    }

    // Ratio M/d1 strictly inside some (mu_j, mu_{j+1}) with j >= 1.
    bool ratio_in_gap = false;
    for (size_t i = 1; i + 1 < spec.mu.size(); ++i)
        if (spec.mu[i] < rep.ratio_M_d1 && rep.ratio_M_d1 < spec.mu[i + 1]) {
            ratio_in_gap = true;
            break;
        }

    rep.pattern_predicted = (j.M > 0.0) && rep.condition_holds &&
                            (rep.gamma % 2 == 1) && ratio_in_gap;
    return rep;
}

NonexistenceReport nonexistence_threshold(const ModelParams& par,
                                          double mu_lower, double C_p) {
    if (!(par.r > par.d))
        throw HypothesisError("nonexistence_threshold: no positive chi (requires r > d)");
    if (!(C_p > 0.0))
        throw std::domain_error("nonexistence_threshold: C_p must be positive");

    NonexistenceReport rep;
    rep.chi = par.chi();
    rep.poincare_const = C_p;
    rep.mu_lower = (mu_lower > 0.0) ? mu_lower : par.m / (10.0 * par.c * par.p);
    if (!(rep.mu_lower < par.m / (par.c * par.p)))
        throw std::domain_error("nonexistence_threshold: mu_lower must lie in (0, m/(c p))");

    const double chi = rep.chi;
    const double G = par.c * (par.r + par.m) * chi / par.m;  // predator-mass scale
    double C1 = 0.5 * (par.r * par.k + par.p * (1.0 + par.q * chi)) +
                par.c * par.p * par.q * (par.r + par.m) * chi / par.m - par.a;
    double C2 = 0.5 * (par.r * par.k + par.p * (1.0 + par.q * chi));
    double C3 = 0.5 * par.c * par.p * G * (1.0 + G);
    double C4 = par.c * par.p * (chi * (1.0 + par.q * chi) + 0.5 * G) * (1.0 + G);
    rep.C1 = std::max(0.0, C1);
    rep.C2 = std::max(0.0, C2);
    rep.C3 = std::max(0.0, C3);
    rep.C4 = std::max(0.0, C4);

    rep.d_star = std::max(chi * chi * C_p * (rep.C1 + rep.C3) / rep.mu_lower,
                          C_p * (rep.C2 + rep.C4));
    return rep;
}

}  // namespace fearbd
