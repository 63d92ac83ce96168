#pragma once

#include <algorithm>
#include <cmath>
#include <random>
#include <utility>

#include "beltrami/field.hpp"
#include "beltrami/lattice.hpp"

namespace beltrami::test {

inline const double pi = std::acos(-1.0);

inline LatticePair square_lattice() { return LatticePair::build({2 * pi, 0}, {0, 2 * pi}); }
inline LatticePair skew_lattice() { return LatticePair::build({2 * pi, 0}, {0.7, 2 * pi}); }

inline PhysicalParams params(double alpha, double beta = 0.1, Vec2 c0 = {1.1, 0.7}) {
    PhysicalParams p;
    p.alpha = alpha;
    p.gravity = 1.0;
    p.beta = beta;
    p.depth = 1.0;
    p.c0 = c0;
    return p;
}

// Real field with random coefficients on |m1|, |m2| <= band, decaying like 1/(1+|m|^2).
inline SpectralScalarField random_real(const LatticePair& lat, int N, int band, double amp,
                                       std::mt19937_64& rng, bool with_mean = false) {
    std::normal_distribution<double> gauss(0.0, 1.0);
    SpectralScalarField f(lat, N);
    for (int m1 = -band; m1 <= band; ++m1)
        for (int m2 = -band; m2 <= band; ++m2) {
            if (std::make_pair(m1, m2) <= std::make_pair(0, 0)) continue;
            const cplx z = amp * cplx(gauss(rng), gauss(rng)) / (1.0 + m1 * m1 + m2 * m2);
            f.set({m1, m2}, z);
            f.set({-m1, -m2}, std::conj(z));
        }
    if (with_mean) f.set({0, 0}, amp * gauss(rng));
    return f;
}

inline SpectralScalarField cosine_mode(const LatticePair& lat, int N, ModeIndex m, double amp) {
    SpectralScalarField f(lat, N);
    f.set(m, amp);
    f.set(-m, f[-m] + amp);
    return f;
}

inline double rel_diff(const SpectralScalarField& a, const SpectralScalarField& b) {
    return (a - b).l2_norm() / std::max(b.l2_norm(), 1e-300);
}
inline double rel_diff(const SpectralVectorField& a, const SpectralVectorField& b) {
    return (a - b).l2_norm() / std::max(b.l2_norm(), 1e-300);
}
inline double rel_diff(double a, double b) { return std::abs(a - b) / std::max(std::abs(b), 1e-300); }
inline double rel_diff(const Vec2& a, const Vec2& b) {
    return norm(a - b) / std::max(norm(b), 1e-300);
}

}  // namespace beltrami::test
