#pragma once

#include <vector>

#include "beltrami/field.hpp"
#include "beltrami/lattice.hpp"

namespace beltrami {

inline constexpr double kRootTol = 1e-8;

struct DispersionQuery {
    Vec2 k;
    Vec2 c;
    double beta = 0.0;
};

double rho(const DispersionQuery& q, const PhysicalParams& params);
Vec2 grad_c_rho(const DispersionQuery& q, const PhysicalParams& params);
// Mode-dependent scale g |k|^2 t(|k|) against which roots are judged.
double rho_scale(const Vec2& k, const PhysicalParams& params);

struct SolveOptions {
    double tol = 1e-12;
    int max_iter = 50;
    bool finite_difference_jacobian = false;
};

struct SolveResult {
    Vec2 c0;
    int iterations = 0;
    double residual = 0.0;
};

// Newton iteration on (rho(k1, c), rho(k2, c)) = 0; params.c0 is ignored.
SolveResult solve_c0(const LatticePair& lattice, const PhysicalParams& params, double beta,
                     const Vec2& initial_guess, const SolveOptions& opts = {});

struct TransversalityReport {
    std::vector<ModeIndex> roots_found;
    double det_value = 0.0;
    double min_nonkernel_ratio = 0.0;
    bool pass = false;
};

TransversalityReport check_transversality(const LatticePair& lattice, const PhysicalParams& params,
                                          int N, double tol = kRootTol);

SpectralScalarField j10_apply(const SpectralScalarField& eta, const PhysicalParams& params);

struct J10Solution {
    SpectralScalarField eta;
    bool formal = false;
    double min_divisor = 0.0;
};

// Inverse of J10 on its range; the kernel modes of the output are zero.
J10Solution j10_solve(const SpectralScalarField& f, const PhysicalParams& params,
                      double tol = kRootTol);

// Whether m is one of +-(1,0), +-(0,1).
bool is_kernel_mode(ModeIndex m);

}  // namespace beltrami
