#ifndef FEARBD_TURING_HPP
#define FEARBD_TURING_HPP

#include <optional>
#include <utility>
#include <vector>

#include "fearbd/equilibria.hpp"
#include "fearbd/model.hpp"

namespace fearbd {

// Neumann spectrum of -Laplace on (0,L): mu_i = (i*pi/L)^2, multiplicity 1.
struct Spectrum {
    double L = 0.0;
    std::vector<double> mu;  // mu[0]=0 < mu[1] < ...
};

Spectrum spectrum(double L, int n_modes);

struct DispersionReport {
    JacobianEntries entries;        // at the coexistence equilibrium
    bool condition_holds = false;   // M d2 - Q d1 > 2 sqrt(d1 d2 (PN-MQ)) with b>0
    double mu_minus = 0.0;          // window roots of H (mu_minus floored at 0)
    double mu_plus = 0.0;
    std::vector<int> unstable_modes;  // indices i with mu_i strictly inside window
    int gamma = 0;                  // sum of multiplicities (all 1 in 1-D)
    bool pattern_predicted = false;
    bool some_mode_unstable = false;  // practical surrogate: H(mu_i)<0 for some i>=1
    double ratio_M_d1 = 0.0;
};

struct NonexistenceReport {
    double chi = 0.0;
    double mu_lower = 0.0;
    double C1 = 0.0, C2 = 0.0, C3 = 0.0, C4 = 0.0;
    double poincare_const = 1.0;
    double d_star = 0.0;
};

// Dispersion polynomial H(d1,d2;mu) = d1 d2 mu^2 + (Q d1 - M d2) mu + PN - MQ,
// evaluated at the coexistence linearization.
double dispersion_H(const ModelParams& par, const Equilibrium& eq, double mu);

// Roots (mu-, mu+) of H when the instability condition holds, else nothing.
// The raw lower root may be negative when PN < MQ; it is returned as-is.
std::optional<std::pair<double, double>> mode_window(const ModelParams& par,
                                                    const Equilibrium& eq);

// Full linear-stability report at the coexistence equilibrium.
DispersionReport analyze(const ModelParams& par, double L, int n_modes);

// Large-diffusion nonexistence threshold d*. mu_lower <= 0 selects the
// default heuristic m/(10 c p).
NonexistenceReport nonexistence_threshold(const ModelParams& par,
                                          double mu_lower = 0.0,
                                          double C_p = 1.0);

}  // namespace fearbd

#endif
