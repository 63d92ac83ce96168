#include "beltrami/multipliers.hpp"

#include <cmath>
#include <limits>
#include <numbers>
#include <sstream>

#include "beltrami/error.hpp"

namespace beltrami {

namespace {

constexpr double half_pi = std::numbers::pi / 2.0;

// tan(y)/y and y*cot(y) as power series in w = y^2 (w may be negative).
double tan_over(double w) {
    return 1.0 + w * (1.0 / 3.0 + w * (2.0 / 15.0 + w * (17.0 / 315.0 + w * 62.0 / 2835.0)));
}
double cot_times(double w) {
    return 1.0 - w * (1.0 / 3.0 + w * (1.0 / 45.0 + w * (2.0 / 945.0 + w / 4725.0)));
}

}  // namespace

double resonance_margin(double s, double alpha, double depth) {
    const double z = alpha * alpha - s * s;
    if (z <= 0.0) return std::numeric_limits<double>::infinity();
    const double y = depth * std::sqrt(z);
    const double n = std::max(1.0, std::round(y / half_pi));
    return std::abs(y - n * half_pi);
}

CT multipliers_c_t(double s, double alpha, double depth, double resonance_tol) {
    const double z = alpha * alpha - s * s;
    if (std::abs(z) < kSeriesSwitch) {
        const double w = depth * depth * z;
        return {cot_times(w) / depth, depth * tan_over(w)};
    }
    if (z > 0.0) {
        const double margin = resonance_margin(s, alpha, depth);
        if (margin < resonance_tol) {
            std::ostringstream os;
            os << "resonant radius s = " << s << ": h*sqrt(alpha^2 - s^2) is within " << margin
               << " of a multiple of pi/2";
            throw Error(ErrorKind::resonance, os.str());
        }
        const double x = std::sqrt(z);
        const double tn = std::tan(depth * x);
        return {x / tn, tn / x};
    }
    const double x = std::sqrt(-z);
    const double th = std::tanh(depth * x);
    return {x / th, th / x};
}

CT multipliers_c_t(double s, const PhysicalParams& params, double resonance_tol) {
    return multipliers_c_t(s, params.alpha, params.depth, resonance_tol);
}

NonresonanceReport check_nonresonance(const LatticePair& lattice, const PhysicalParams& params,
                                      int N, double tolerance) {
    if (N < 1) throw Error(ErrorKind::config, "check_nonresonance requires N >= 1");
    NonresonanceReport report;
    report.tolerance = tolerance;
    report.min_margin = std::numeric_limits<double>::infinity();
    const double a = std::abs(params.alpha);
    for (int m1 = -N; m1 <= N; ++m1) {
        for (int m2 = -N; m2 <= N; ++m2) {
            if (m1 == 0 && m2 == 0) continue;
            const double s = norm(lattice.mode(m1, m2));
            const double eq = std::abs(s - a);
            const double tp = resonance_margin(s, params.alpha, params.depth);
            report.min_margin = std::min({report.min_margin, eq, tp});
            if (eq <= tolerance) {
                report.resonant_modes.push_back({{m1, m2}, ResonanceKind::equal_alpha, eq});
            } else if (tp <= tolerance) {
                report.resonant_modes.push_back({{m1, m2}, ResonanceKind::tan_pole, tp});
            }
        }
    }
    return report;
}

std::string to_string(ResonanceKind kind) {
    return kind == ResonanceKind::equal_alpha ? "equal_alpha" : "tan_pole";
}

}  // namespace beltrami
