#pragma once

#include <array>
#include <complex>
#include <map>
#include <optional>
#include <string>

#include "beltrami/field.hpp"
#include "beltrami/lattice.hpp"

namespace beltrami {

// The *_closed variants are term-by-term closed forms that agree with T20_1, T30_1 and T30_2
// only at alpha = 0. T30_1 and T30_2 are evaluated exactly from the degree-3 term of the T
// expansion on the three plane waves involved.
enum class TMultiplier {
    T10,
    T20_1,
    T20_2,
    T30_1,
    T30_2,
    r1,
    r2,
    r3,
    T20_1_closed,
    T30_1_closed,
    T30_2_closed
};

// Vector-valued building blocks of the quadratic and cubic coefficients. Two-argument
// multipliers require ell; ell may be the zero vector where the formula stays finite.
Vec2 t_multipliers(const Vec2& k, const std::optional<Vec2>& ell, TMultiplier which,
                   const PhysicalParams& params);

struct QuadraticCoeffs {
    double p20_2 = 0.0;
    double p20_1 = 0.0;
    std::optional<double> q20_2;
};

double p20_2(const Vec2& k, const Vec2& ell, const PhysicalParams& params);
double p20_1(const Vec2& k, const PhysicalParams& params);
// Throws ErrorKind::near_zero_divisor when rho(k + ell) is numerically zero.
double q20_2(const Vec2& k, const Vec2& ell, const PhysicalParams& params);
// q20_2 is omitted when k + ell = 0.
QuadraticCoeffs quadratic_coeffs(const Vec2& k, const Vec2& ell, const PhysicalParams& params);

struct CubicCoeffs {
    double p30_1 = 0.0;
    double p30_2 = 0.0;
};

double p30_1(const Vec2& k, const PhysicalParams& params);
double p30_2(const Vec2& k, const Vec2& ell, const PhysicalParams& params);
CubicCoeffs cubic_coeffs(const Vec2& k, const Vec2& ell, const PhysicalParams& params);

struct MonomialKey {
    int i = 0, j = 0, kk = 0, l = 0;

    int degree() const { return i + j + kk + l; }
    MonomialKey conj() const { return {kk, l, i, j}; }
    std::string str() const;
    friend auto operator<=>(const MonomialKey&, const MonomialKey&) = default;
};

using Eta2Table = std::map<MonomialKey, SpectralScalarField>;

Eta2Table eta2_table(const PhysicalParams& params, const LatticePair& lattice, int N);

// Rows (a1..a4) and (b1..b4).
using ABCoeffs = std::array<std::array<double, 4>, 2>;

ABCoeffs ab_coeffs(const PhysicalParams& params, const LatticePair& lattice);

// Coefficients of |A|^2 and |B|^2.
struct MuCoeffs {
    double A2 = 0.0;
    double B2 = 0.0;
};

std::pair<MuCoeffs, MuCoeffs> mu_linear(const ABCoeffs& ab);
std::pair<MuCoeffs, MuCoeffs> mu_linear(const PhysicalParams& params, const LatticePair& lattice);

struct ExpansionTables {
    Eta2Table eta2;
    MuCoeffs mu1, mu2;
    ABCoeffs ab{};
    bool formal = false;
};

ExpansionTables build_tables(const PhysicalParams& params, const LatticePair& lattice, int N);

struct AmplitudeState {
    cplx A{};
    cplx B{};
};

struct Synthesis {
    SpectralScalarField eta;
    Vec2 mu;
};

Synthesis synthesize_wave(const AmplitudeState& state, const ExpansionTables& tables,
                          const LatticePair& lattice, int N);

}  // namespace beltrami
