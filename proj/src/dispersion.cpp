#include "beltrami/dispersion.hpp"

#include <cmath>
#include <limits>
#include <sstream>

#include "beltrami/error.hpp"
#include "beltrami/multipliers.hpp"

namespace beltrami {

namespace {

void require_nonzero(const Vec2& k) {
    if (k.x == 0.0 && k.y == 0.0)
        throw Error(ErrorKind::zero_frequency, "dispersion relation evaluated at k = 0");
}

struct Pair {
    double r1, r2;
};

Pair residual(const LatticePair& l, const PhysicalParams& p, double beta, const Vec2& c) {
    return {rho({l.k1(), c, beta}, p), rho({l.k2(), c, beta}, p)};
}

}  // namespace

bool is_kernel_mode(ModeIndex m) {
    return (std::abs(m.m1) == 1 && m.m2 == 0) || (m.m1 == 0 && std::abs(m.m2) == 1);
}

double rho(const DispersionQuery& q, const PhysicalParams& params) {
    require_nonzero(q.k);
    const double kk = norm2(q.k);
    const double t = multipliers_c_t(std::sqrt(kk), params).t;
    const double ck = dot(q.c, q.k);
    const double kpc = dot(perp(q.k), q.c);
    return (params.gravity + q.beta * kk - params.alpha / kk * ck * kpc) * kk * t - ck * ck;
}

Vec2 grad_c_rho(const DispersionQuery& q, const PhysicalParams& params) {
    require_nonzero(q.k);
    const double t = multipliers_c_t(norm(q.k), params).t;
    const double ck = dot(q.c, q.k);
    const double kpc = dot(perp(q.k), q.c);
    return (-params.alpha * t) * (kpc * q.k + ck * perp(q.k)) - (2.0 * ck) * q.k;
}

double rho_scale(const Vec2& k, const PhysicalParams& params) {
    return params.gravity * norm2(k) * multipliers_c_t(norm(k), params).t;
}

SolveResult solve_c0(const LatticePair& lattice, const PhysicalParams& params, double beta,
                     const Vec2& initial_guess, const SolveOptions& opts) {
    Vec2 c = initial_guess;
    for (int it = 0; it <= opts.max_iter; ++it) {
        const Pair F = residual(lattice, params, beta, c);
        const double nF = std::hypot(F.r1, F.r2);
        if (nF < opts.tol) return {c, it, nF};
        if (it == opts.max_iter) break;
        Vec2 g1, g2;
        if (opts.finite_difference_jacobian) {
            const double h = 1e-6 * std::max(1.0, norm(c));
            const Pair px = residual(lattice, params, beta, c + Vec2{h, 0.0});
            const Pair mx = residual(lattice, params, beta, c - Vec2{h, 0.0});
            const Pair py = residual(lattice, params, beta, c + Vec2{0.0, h});
            const Pair my = residual(lattice, params, beta, c - Vec2{0.0, h});
            g1 = {(px.r1 - mx.r1) / (2 * h), (py.r1 - my.r1) / (2 * h)};
            g2 = {(px.r2 - mx.r2) / (2 * h), (py.r2 - my.r2) / (2 * h)};
        } else {
            g1 = grad_c_rho({lattice.k1(), c, beta}, params);
            g2 = grad_c_rho({lattice.k2(), c, beta}, params);
        }
        const double det = g1.x * g2.y - g1.y * g2.x;
        if (std::abs(det) <= 1e-14 * (norm2(g1) + norm2(g2)) || det == 0.0) {
            std::ostringstream os;
            os << "singular Newton Jacobian at c = (" << c.x << ", " << c.y << ")";
            throw Error(ErrorKind::convergence, os.str());
        }
        c -= Vec2{(g2.y * F.r1 - g1.y * F.r2) / det, (-g2.x * F.r1 + g1.x * F.r2) / det};
    }
    std::ostringstream os;
    os << "Newton iteration for c0 did not converge in " << opts.max_iter << " iterations";
    throw Error(ErrorKind::convergence, os.str());
}

TransversalityReport check_transversality(const LatticePair& lattice, const PhysicalParams& params,
                                          int N, double tol) {
    TransversalityReport rep;
    rep.min_nonkernel_ratio = std::numeric_limits<double>::infinity();
    int kernel_hits = 0;
    bool stray = false;
    for (int m1 = -N; m1 <= N; ++m1) {
        for (int m2 = -N; m2 <= N; ++m2) {
            if (m1 == 0 && m2 == 0) continue;
            const Vec2 k = lattice.mode(m1, m2);
            const double ratio = std::abs(rho({k, params.c0, params.beta}, params)) /
                                 rho_scale(k, params);
            if (!is_kernel_mode({m1, m2})) rep.min_nonkernel_ratio = std::min(rep.min_nonkernel_ratio, ratio);
            if (ratio < tol) {
                rep.roots_found.push_back({m1, m2});
                if (is_kernel_mode({m1, m2})) ++kernel_hits; else stray = true;
            }
        }
    }
    const Vec2 g1 = grad_c_rho({lattice.k1(), params.c0, params.beta}, params);
    const Vec2 g2 = grad_c_rho({lattice.k2(), params.c0, params.beta}, params);
    rep.det_value = g1.x * g2.y - g1.y * g2.x;
    const double scale = norm(g1) * norm(g2);
    rep.pass = !stray && kernel_hits == 4 && scale > 0.0 && std::abs(rep.det_value) > tol * scale;
    return rep;
}

SpectralScalarField j10_apply(const SpectralScalarField& eta, const PhysicalParams& params) {
    SpectralScalarField r(eta.lattice(), eta.N());
    for (std::size_t i = 0; i < eta.size(); ++i) {
        const cplx v = eta.data()[i];
        if (v == cplx{}) continue;
        const ModeIndex m = eta.index_of(i);
        if (m.m1 == 0 && m.m2 == 0) {
            r.data()[i] = params.gravity * v;
            continue;
        }
        const Vec2 k = eta.lattice().mode(m);
        const double kk = norm2(k);
        const double c = multipliers_c_t(std::sqrt(kk), params).c;
        r.data()[i] = (c / kk * rho({k, params.c0, params.beta}, params)) * v;
    }
    return r;
}

J10Solution j10_solve(const SpectralScalarField& f, const PhysicalParams& params, double tol) {
    const double fn = f.l2_norm();
    for (ModeIndex m : {ModeIndex{1, 0}, ModeIndex{-1, 0}, ModeIndex{0, 1}, ModeIndex{0, -1}}) {
        if (std::abs(f.coeff(m)) > 1e-12 * fn) {
            std::ostringstream os;
            os << "right-hand side has a component " << std::abs(f.coeff(m)) << " on kernel mode ("
               << m.m1 << ", " << m.m2 << ")";
            throw Error(ErrorKind::range_violation, os.str());
        }
    }
    J10Solution sol{SpectralScalarField(f.lattice(), f.N()), params.beta == 0.0,
                    std::numeric_limits<double>::infinity()};
    for (std::size_t i = 0; i < f.size(); ++i) {
        const cplx v = f.data()[i];
        const ModeIndex m = f.index_of(i);
        if (v == cplx{} || is_kernel_mode(m)) continue;
        if (m.m1 == 0 && m.m2 == 0) {
            sol.eta.data()[i] = v / params.gravity;
            continue;
        }
        const Vec2 k = f.lattice().mode(m);
        const double kk = norm2(k);
        const double r = rho({k, params.c0, params.beta}, params);
        const double ratio = std::abs(r) / rho_scale(k, params);
        sol.min_divisor = std::min(sol.min_divisor, ratio);
        if (ratio < tol) {
            std::ostringstream os;
            os << "near-zero divisor rho = " << r << " at mode (" << m.m1 << ", " << m.m2 << ")";
            throw Error(ErrorKind::near_zero_divisor, os.str());
        }
        const double c = multipliers_c_t(std::sqrt(kk), params).c;
        sol.eta.data()[i] = (kk / (c * r)) * v;
    }
    return sol;
}

}  // namespace beltrami
