#pragma once

#include <string>
#include <vector>

#include "beltrami/lattice.hpp"

namespace beltrami {

inline constexpr double kResonanceTol = 1e-8;
inline constexpr double kSeriesSwitch = 1e-6;

struct CT {
    double c = 0.0;
    double t = 0.0;
};

// c(s) and t(s) of the depth-h strip with Beltrami constant alpha.
CT multipliers_c_t(double s, const PhysicalParams& params, double resonance_tol = kResonanceTol);
CT multipliers_c_t(double s, double alpha, double depth, double resonance_tol = kResonanceTol);

// Distance of h*sqrt(alpha^2 - s^2) to the nearest positive multiple of pi/2;
// +infinity when s > |alpha|.
double resonance_margin(double s, double alpha, double depth);

enum class ResonanceKind { equal_alpha, tan_pole };

struct ResonantMode {
    ModeIndex index;
    ResonanceKind kind;
    double margin;
};

struct NonresonanceReport {
    std::vector<ResonantMode> resonant_modes;
    double min_margin = 0.0;
    double tolerance = kResonanceTol;

    bool ok() const { return resonant_modes.empty(); }
};

NonresonanceReport check_nonresonance(const LatticePair& lattice, const PhysicalParams& params,
                                      int N, double tolerance = kResonanceTol);

std::string to_string(ResonanceKind kind);

}  // namespace beltrami
