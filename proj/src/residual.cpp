#include "beltrami/residual.hpp"

#include <cmath>
#include <numeric>
#include <sstream>

#include "beltrami/error.hpp"
#include "beltrami/spectral.hpp"

namespace beltrami {

namespace {

// sin(x)/x
double sinc(double x) {
    if (std::abs(x) < 1e-4) return 1.0 - x * x / 6.0;
    return std::sin(x) / x;
}

double re(cplx z) { return z.real(); }

}  // namespace

SurfaceVelocity ustar_surface(const SpectralScalarField& eta, const Vec2& c,
                              const PhysicalParams& params, double padding) {
    const double a = params.alpha;
    auto uhx = pointwise(
        {&eta}, [&](auto v) { return cplx(c.x * std::cos(a * re(v[0])) + c.y * std::sin(a * re(v[0]))); },
        padding);
    auto uhy = pointwise(
        {&eta}, [&](auto v) { return cplx(-c.x * std::sin(a * re(v[0])) + c.y * std::cos(a * re(v[0]))); },
        padding);
    // S = ((cos(a eta) - 1)/a) c + (sin(a eta)/a) c⊥
    auto cosm = pointwise(
        {&eta},
        [&](auto v) {
            const double e = re(v[0]);
            const double s = sinc(0.5 * a * e);
            return cplx(-0.5 * a * e * e * s * s);
        },
        padding);
    auto sinq = pointwise({&eta}, [&](auto v) { return cplx(re(v[0]) * sinc(a * re(v[0]))); }, padding);
    const Vec2 cp = perp(c);
    SpectralVectorField S{c.x * cosm + cp.x * sinq, c.y * cosm + cp.y * sinq};
    return {SpectralVectorField{std::move(uhx), std::move(uhy)}, div(perp(S))};
}

double kernel_projection_norm(const SpectralScalarField& f) {
    double s = 0.0;
    for (ModeIndex m : {ModeIndex{1, 0}, ModeIndex{-1, 0}, ModeIndex{0, 1}, ModeIndex{0, -1}})
        s += std::norm(f.coeff(m));
    return std::sqrt(s);
}

ResidualReport evaluate_J(const SpectralScalarField& eta, const Vec2& mu, int K,
                          const PhysicalParams& params, const LatticePair& lattice,
                          const ExpansionOptions& opts) {
    if (K < 1) throw Error(ErrorKind::order_mismatch, "evaluate_J needs K >= 1");
    if (!(eta.lattice() == lattice))
        throw Error(ErrorKind::incompatible_fields, "eta lives on a different lattice");
    const Vec2 c = params.c0 + mu;
    const double pad = opts.padding;

    const SpectralVectorField T = taylor_T(eta, c, K, params, opts).sum();
    const SurfaceVelocity us = ustar_surface(eta, c, params, pad);
    const SpectralVectorField ge = grad(eta);

    auto bulk = pointwise(
        {&T.x, &T.y, &ge.x, &ge.y, &us.uN, &us.uh.x, &us.uh.y},
        [](std::span<const cplx> v) {
            const double tx = re(v[0]), ty = re(v[1]), ex = re(v[2]), ey = re(v[3]);
            const double uN = re(v[4]), hx = re(v[5]), hy = re(v[6]);
            const double q = 1.0 + ex * ex + ey * ey;
            const double w = -uN + tx * ex + ty * ey;
            return cplx(0.5 * (tx * tx + ty * ty) - w * w / (2.0 * q) + tx * hx + ty * hy);
        },
        pad);
    SpectralScalarField J = bulk + params.gravity * eta;
    if (params.beta != 0.0) {
        auto qx = pointwise(
            {&ge.x, &ge.y},
            [](auto v) { return cplx(re(v[0]) / std::sqrt(1.0 + std::norm(v[0]) + std::norm(v[1]))); },
            pad);
        auto qy = pointwise(
            {&ge.x, &ge.y},
            [](auto v) { return cplx(re(v[1]) / std::sqrt(1.0 + std::norm(v[0]) + std::norm(v[1]))); },
            pad);
        J -= params.beta * div(SpectralVectorField{std::move(qx), std::move(qy)});
    }
    ResidualReport r{J, J.l2_norm(), sup_norm(J, pad), kernel_projection_norm(J), K};
    return r;
}

double loglog_slope(const std::vector<double>& x, const std::vector<double>& y) {
    if (x.size() != y.size() || x.size() < 3)
        throw Error(ErrorKind::degenerate_fit, "log-log fit needs at least three points");
    std::vector<double> lx, ly;
    for (std::size_t i = 0; i < x.size(); ++i) {
        if (!(x[i] > 0.0) || !(y[i] > 0.0)) {
            std::ostringstream os;
            os << "log-log fit needs positive data, got (" << x[i] << ", " << y[i] << ")";
            throw Error(ErrorKind::degenerate_fit, os.str());
        }
        lx.push_back(std::log(x[i]));
        ly.push_back(std::log(y[i]));
    }
    const double n = double(lx.size());
    const double mx = std::accumulate(lx.begin(), lx.end(), 0.0) / n;
    const double my = std::accumulate(ly.begin(), ly.end(), 0.0) / n;
    double sxy = 0.0, sxx = 0.0;
    for (std::size_t i = 0; i < lx.size(); ++i) {
        sxy += (lx[i] - mx) * (ly[i] - my);
        sxx += (lx[i] - mx) * (lx[i] - mx);
    }
    if (sxx == 0.0) throw Error(ErrorKind::degenerate_fit, "amplitudes must be distinct");
    return sxy / sxx;
}

ScalingStudy scaling_study(const std::vector<double>& amplitudes, const AmplitudeState& direction,
                           int K, const PhysicalParams& params, const LatticePair& lattice, int N,
                           const ExpansionOptions& opts) {
    if (amplitudes.size() < 3)
        throw Error(ErrorKind::degenerate_fit, "scaling study needs at least three amplitudes");
    for (std::size_t i = 0; i < amplitudes.size(); ++i) {
        if (!(amplitudes[i] > 0.0) || (i > 0 && !(amplitudes[i] < amplitudes[i - 1])))
            throw Error(ErrorKind::config, "amplitudes must be positive and decreasing");
    }
    if (K < 1) throw Error(ErrorKind::order_mismatch, "scaling study needs K >= 1");
    const ExpansionTables tables = build_tables(params, lattice, N);
    ScalingStudy st;
    st.K = K;
    std::vector<double> amps, l2, ker;
    for (double a : amplitudes) {
        const Synthesis s = synthesize_wave({a * direction.A, a * direction.B}, tables, lattice, N);
        const ResidualReport r = evaluate_J(s.eta, s.mu, K, params, lattice, opts);
        st.rows.push_back({a, r.l2_norm, r.sup_norm, r.kernel_projection_norm});
        amps.push_back(a);
        l2.push_back(r.l2_norm);
        ker.push_back(r.kernel_projection_norm);
    }
    st.full_slope = loglog_slope(amps, l2);
    st.kernel_slope = loglog_slope(amps, ker);
    return st;
}

}  // namespace beltrami
