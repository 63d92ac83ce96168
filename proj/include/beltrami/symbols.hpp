#pragma once

#include "beltrami/lattice.hpp"
#include "beltrami/vec2.hpp"

namespace beltrami {

struct Hessian {
    double xx = 0.0;
    double xy = 0.0;
    double yy = 0.0;
};

struct SymbolPoint {
    Vec2 grad_eta{};
    Hessian hess_eta{};
};

struct SymbolValue {
    cplx lambda1{};
    cplx lambda0{};
    cplx lambda0_alpha{};
    cplx m1{};
    cplx m0{};
};

struct NuValue {
    CVec2 nu1{};
    CVec2 nu0{};
};

// Throws ErrorKind::zero_frequency for k = 0.
SymbolValue eval_lambda(const SymbolPoint& point, const Vec2& k, const PhysicalParams& params);
NuValue eval_nu(const SymbolPoint& point, const Vec2& k, const Vec2& g_value,
                const PhysicalParams& params);

}  // namespace beltrami
