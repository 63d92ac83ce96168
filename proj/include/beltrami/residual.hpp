#pragma once

#include <vector>

#include "beltrami/bifurcation.hpp"
#include "beltrami/expansion.hpp"
#include "beltrami/field.hpp"

namespace beltrami {

struct SurfaceVelocity {
    SpectralVectorField uh;
    SpectralScalarField uN;
};

// Horizontal trace of the background flow with velocity c and its normal flux through the
// surface, expressed as div(S⊥).
SurfaceVelocity ustar_surface(const SpectralScalarField& eta, const Vec2& c,
                              const PhysicalParams& params, double padding = kDefaultPadding);

struct ResidualReport {
    SpectralScalarField residual_field;
    double l2_norm = 0.0;
    double sup_norm = 0.0;
    // Norm of the ±k1, ±k2 coefficients.
    double kernel_projection_norm = 0.0;
    int K = 0;
};

ResidualReport evaluate_J(const SpectralScalarField& eta, const Vec2& mu, int K,
                          const PhysicalParams& params, const LatticePair& lattice,
                          const ExpansionOptions& opts = {});

double kernel_projection_norm(const SpectralScalarField& f);

struct ScalingRow {
    double amplitude = 0.0;
    double l2 = 0.0;
    double sup = 0.0;
    double kernel_l2 = 0.0;
};

struct ScalingStudy {
    std::vector<ScalingRow> rows;
    double full_slope = 0.0;
    double kernel_slope = 0.0;
    int K = 0;
};

// Least-squares slope of log y against log x. Throws ErrorKind::degenerate_fit for fewer than
// three points or non-positive data.
double loglog_slope(const std::vector<double>& x, const std::vector<double>& y);

// Residual of the second-order wave with (A, B) = amplitude * direction.
ScalingStudy scaling_study(const std::vector<double>& amplitudes, const AmplitudeState& direction,
                           int K, const PhysicalParams& params, const LatticePair& lattice, int N,
                           const ExpansionOptions& opts = {});

}  // namespace beltrami
