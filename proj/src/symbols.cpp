#include "beltrami/symbols.hpp"

#include <cmath>

#include "beltrami/error.hpp"

namespace beltrami {

namespace {

const cplx I{0.0, 1.0};

void require_nonzero(const Vec2& k) {
    if (k.x == 0.0 && k.y == 0.0) throw Error(ErrorKind::zero_frequency, "symbol evaluated at k = 0");
}

}  // namespace

SymbolValue eval_lambda(const SymbolPoint& point, const Vec2& k, const PhysicalParams& params) {
    require_nonzero(k);
    const Vec2 p = point.grad_eta;
    const Hessian& h = point.hess_eta;
    const double q = 1.0 + norm2(p);
    const double kk = norm2(k);
    const double kp = dot(k, p);
    const double l1 = std::sqrt(q * kk - kp * kp);
    const cplx m1 = (I * kp + l1) / q;

    // d lambda1 / dp_j and d m1 / dp_j
    const double dl_dp1 = (p.x * kk - kp * k.x) / l1;
    const double dl_dp2 = (p.y * kk - kp * k.y) / l1;
    const cplx dm_dp1 = ((I * k.x + dl_dp1) * q - (I * kp + l1) * (2.0 * p.x)) / (q * q);
    const cplx dm_dp2 = ((I * k.y + dl_dp2) * q - (I * kp + l1) * (2.0 * p.y)) / (q * q);

    const cplx dm_dx = dm_dp1 * h.xx + dm_dp2 * h.xy;
    const cplx dm_dy = dm_dp1 * h.xy + dm_dp2 * h.yy;
    const cplx div_m_grad = dm_dx * p.x + dm_dy * p.y + m1 * (h.xx + h.yy);

    const Vec2 dl_dk = (q * k - kp * p) / l1;
    const cplx transport = I * (dl_dk.x * dm_dx + dl_dk.y * dm_dy);

    SymbolValue v;
    v.lambda1 = l1;
    v.m1 = m1;
    v.m0 = (div_m_grad + transport) / (2.0 * l1);
    v.lambda0 = q * v.m0;
    v.lambda0_alpha = v.lambda0 + params.alpha * kp * dot(k, perp(p)) / kk;
    return v;
}

NuValue eval_nu(const SymbolPoint& point, const Vec2& k, const Vec2& g_value,
                const PhysicalParams& params) {
    require_nonzero(k);
    const double ex = point.grad_eta.x, ey = point.grad_eta.y;
    const Hessian& h = point.hess_eta;
    const double k1 = k.x, k2 = k.y;
    const double q = 1.0 + ex * ex + ey * ey;
    const double kp = k1 * ex + k2 * ey;
    const double l1 = std::sqrt(q * (k1 * k1 + k2 * k2) - kp * kp);
    const double a = params.alpha;
    const double s = dot(k, perp(g_value));
    const double curv = k1 * k1 * h.yy - 2.0 * k1 * k2 * h.xy + k2 * k2 * h.xx;
    const double l5 = std::pow(l1, 5);

    const cplx z1 = I / (2.0 * l5) *
                        (k1 * k1 * (-1.0 + 2.0 * ey * ey) * ex - k1 * k2 * ey * (3.0 + 4.0 * ex * ex) +
                         2.0 * k2 * k2 * ex * (1.0 + ex * ex) + I * k1 * l1) *
                        curv +
                    a / (l1 * l1) * (k2 * (1.0 + ex * ex) - k1 * ex * ey);
    const cplx z2 = I / (2.0 * l5) *
                        (2.0 * k1 * k1 * ey * (1.0 + ey * ey) - k1 * k2 * ex * (3.0 + 4.0 * ey * ey) +
                         k2 * k2 * ey * (-1.0 + 2.0 * ex * ex) + I * k2 * l1) *
                        curv +
                    a / (l1 * l1) * (-k1 * (1.0 + ey * ey) + k2 * ex * ey);

    NuValue v;
    v.nu1 = CVec2(k * (s / l1));
    v.nu0 = {z1 * s, z2 * s};
    return v;
}

}  // namespace beltrami
