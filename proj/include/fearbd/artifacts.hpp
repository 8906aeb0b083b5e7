#ifndef FEARBD_ARTIFACTS_HPP
#define FEARBD_ARTIFACTS_HPP

#include <array>
#include <string>
#include <vector>

#include "fearbd/config.hpp"
#include "fearbd/solver.hpp"
#include "fearbd/turing.hpp"

namespace fearbd {

// Snapshot series as CSV with header exactly `t,x,u,v`.
std::string snapshots_csv(const std::vector<Snapshot>& snaps, const Grid1D& g);

// Run-summary JSON: classification, monitors, config echo, config hash.
std::string summary_json(const RunConfig& cfg, const RunSummary& summary);

// Dispersion + nonexistence report JSON (machine-readable field names:
// entries{M,N,P,Q}, mu_minus, mu_plus, unstable_modes, gamma,
// pattern_predicted, d_star).
std::string report_json(const RunConfig& cfg, const DispersionReport& rep,
                        const NonexistenceReport& nonex);
std::string report_text(const DispersionReport& rep,
                        const NonexistenceReport& nonex);

// Fixed 256-entry colormap (piecewise-linear between five documented
// anchor colors); t in [0,1].
std::array<unsigned char, 3> colormap256(double t);

// Space-time heatmap of one component (rows = time, cols = x).
std::string heatmap_svg(const std::vector<Snapshot>& snaps, const Grid1D& g,
                        bool predator, const std::string& title,
                        const std::string& hash);

// Final u and v profiles over x.
std::string profiles_svg(const Field& final_field, const Grid1D& g,
                         const std::string& title, const std::string& hash);

void write_text_file(const std::string& path, const std::string& content);

}  // namespace fearbd

#endif
