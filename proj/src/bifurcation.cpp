#include "beltrami/bifurcation.hpp"

#include <array>
#include <cmath>
#include <sstream>

#include "beltrami/dispersion.hpp"
#include "beltrami/error.hpp"
#include "beltrami/multipliers.hpp"

namespace beltrami {

namespace {

bool is_zero(const Vec2& v) { return v.x == 0.0 && v.y == 0.0; }

double cm(const Vec2& v, const PhysicalParams& p) { return multipliers_c_t(norm(v), p).c; }

// (c0·v)/|v|^2, zero at v = 0.
double ratio(const Vec2& v, const PhysicalParams& p) {
    return is_zero(v) ? 0.0 : dot(p.c0, v) / norm2(v);
}

// (c0⊥·v)/|v|^2, zero at v = 0.
double ratio_perp(const Vec2& v, const PhysicalParams& p) {
    return is_zero(v) ? 0.0 : dot(perp(p.c0), v) / norm2(v);
}

Vec2 r1(const Vec2& k, const PhysicalParams& p) {
    if (is_zero(k)) return {};
    return p.alpha * perp(k) + cm(k, p) * k;
}

Vec2 r2(const Vec2& k, const PhysicalParams& p) {
    if (is_zero(k)) return {};
    return (p.alpha * p.alpha - norm2(k)) * k - (p.alpha * cm(k, p)) * perp(k);
}

Vec2 r3(const Vec2& k, const Vec2& l, const PhysicalParams& p) {
    return ratio(k, p) * r1(k, p) + ratio(l, p) * r1(l, p);
}

// (v/|v|^2)·w, zero at v = 0.
double proj(const Vec2& v, const Vec2& w) { return is_zero(v) ? 0.0 : dot(v, w) / norm2(v); }

void require_nonzero(const Vec2& v, const char* what) {
    if (is_zero(v)) {
        std::ostringstream os;
        os << "zero denominator: " << what << " vanishes";
        throw Error(ErrorKind::zero_frequency, os.str());
    }
}

Vec2 T10(const Vec2& k, const PhysicalParams& p) { return -ratio(k, p) * r1(k, p); }

Vec2 T20_1_closed(const Vec2& k, const PhysicalParams& p) {
    return p.alpha * (p.alpha * k - cm(k, p) * perp(k));
}

// The mean of T_2(e^{ik} + e^{-ik}) cancels exactly.
Vec2 T20_1(const Vec2&, const PhysicalParams&) { return {}; }

Vec2 T20_2(const Vec2& k, const Vec2& l, const PhysicalParams& p) {
    const Vec2 s = k + l;
    require_nonzero(s, "k + ell in T20_2");
    const double a = p.alpha;
    const double rk = ratio(k, p), rl = ratio(l, p);
    Vec2 inner{};
    if (!is_zero(l)) inner += (rl * cm(l, p)) * l;
    if (!is_zero(k)) inner += (rk * cm(k, p)) * k;
    const double bracket = -a * dot(s, perp(p.c0)) + a * dot(k, perp(l)) * (rl - rk) + dot(s, inner);
    return (bracket / (2.0 * norm2(s))) * r1(s, p) + (0.5 * rl) * r2(l, p) + (0.5 * rk) * r2(k, p) -
           (0.5 * dot(p.c0, l)) * k - (0.5 * dot(p.c0, k)) * l;
}

Vec2 T30_1_closed(const Vec2& k, const PhysicalParams& p) {
    require_nonzero(k, "k in T30_1");
    const double a = p.alpha;
    const double rk = ratio(k, p), rpk = ratio_perp(k, p);
    const double ck = cm(k, p);
    const Vec2 k2 = 2.0 * k;
    const double c2k = cm(k2, p);
    const Vec2 R1 = r1(k, p), R2 = r2(k, p), R1d = r1(k2, p), R2d = r2(k2, p);
    const double c0k = dot(p.c0, k), c0pk = dot(perp(p.c0), k);
    Vec2 v = (-1.0 / 3.0 * rk * ck * c2k) * R1;
    v += (-1.0 / 12.0 * rk * ck) * R2d;
    v += (-1.0 / 6.0 * c0k * ck) * k;
    v += (-0.5 * (a * a - norm2(k)) * rk) * R1;
    v += (a / 3.0 * rk) * perp(R2);
    v += (a / 12.0 * rk * ck) * perp(R1d);
    v += (a / 6.0 * rk) * perp(R2);
    v += (a / 6.0 * rpk * ck) * R1;
    v += (a / 12.0 * rpk) * R2d;
    v += (a / 6.0 * c0pk) * k;
    v += (a * a / 6.0 * rk) * R1;
    return v;
}

Vec2 T30_2_closed(const Vec2& k, const Vec2& l, const PhysicalParams& p) {
    require_nonzero(k, "k in T30_2");
    require_nonzero(l, "ell in T30_2");
    const double a = p.alpha;
    const Vec2 d = k - l, s = k + l;
    const double rk = ratio(k, p), rl = ratio(l, p);
    const Vec2 R3 = r3(k, l, p);
    const Vec2 R1k = r1(k, p), R1l = r1(l, p), R1d = r1(d, p), R1s = r1(s, p);
    const Vec2 R2k = r2(k, p), R2l = r2(l, p), R2d = r2(d, p), R2s = r2(s, p);
    const double Pd = proj(d, R3), Ps = proj(s, R3);
    const double kk = norm2(k);

    Vec2 v = (-1.0 / 6.0 * proj(k, Pd * R1d + Ps * R1s)) * R1k;
    v += (-1.0 / 12.0 * Pd) * R2d;
    v += (-1.0 / 12.0 * Ps) * R2s;
    v += (-1.0 / 6.0 * dot(l, R3)) * l;
    v += (-1.0 / 6.0 * proj(k, (2.0 * rl) * R2l + rk * R2k)) * R1k;
    v += (1.0 / 6.0 * dot(k, R1l) * rl) * k;
    v += (a / 6.0 * rl) * perp(R2l);
    v += (a / 12.0) * (Pd * perp(R1d) + rl * perp(R2l) + rk * perp(R2k));
    v += (a / 12.0) * (Ps * perp(R1s) + (rk / kk) * perp(R2k) + rl * perp(R2l));
    v += (a / 6.0 * proj(k, ratio_perp(d, p) * R1d + ratio_perp(s, p) * R1s)) * R1k;
    v += (a / 6.0 * ratio(d, p)) * R2d;
    v += (a / 6.0 * ratio(s, p)) * R2s;
    v += (a / 3.0 * dot(perp(p.c0), l)) * l;
    v += (a * a / 6.0 * rk) * R1k;
    v += (-a / 6.0 * proj(k, perp(R1l)) * rl) * R1k;
    v += (-a * a / 6.0 * rl) * R1l;
    return v;
}

// Exact evaluation on three tagged plane waves. Entry m of a packet is the coefficient of the
// product of the waves whose bits are set in m, carried by e^{i q(m)·x}.
template <class T>
using Packet = std::array<T, 8>;
using SP = Packet<cplx>;
using VP = Packet<CVec2>;

template <class T>
Packet<T> operator+(Packet<T> a, const Packet<T>& b) {
    for (int m = 0; m < 8; ++m) a[m] += b[m];
    return a;
}
template <class T>
Packet<T> operator-(Packet<T> a, const Packet<T>& b) {
    for (int m = 0; m < 8; ++m) a[m] -= b[m];
    return a;
}
template <class T>
Packet<T> operator*(double s, Packet<T> a) {
    for (auto& v : a) v = cplx(s) * v;
    return a;
}

class TaggedWaves {
public:
    TaggedWaves(std::array<Vec2, 3> w, const PhysicalParams& p) : p_(p) {
        double scale = 0.0;
        for (const Vec2& v : w) scale += norm(v);
        for (int m = 0; m < 8; ++m) {
            Vec2 q{};
            for (int b = 0; b < 3; ++b)
                if (m & (1 << b)) q += w[b];
            zero_[m] = norm(q) <= 1e-12 * scale;
            q_[m] = zero_[m] ? Vec2{} : q;
            c_[m] = zero_[m] ? 0.0 : cm(q_[m], p);
        }
    }

    SP eta() const {
        SP e{};
        e[1] = e[2] = e[4] = 1.0;
        return e;
    }

    static SP mul(const SP& a, const SP& b) {
        SP r{};
        for (int i = 0; i < 8; ++i)
            for (int j = 0; j < 8; ++j)
                if (!(i & j)) r[i | j] += a[i] * b[j];
        return r;
    }
    static VP mul(const SP& a, const VP& b) {
        VP r{};
        for (int i = 0; i < 8; ++i)
            for (int j = 0; j < 8; ++j)
                if (!(i & j)) r[i | j] += a[i] * b[j];
        return r;
    }
    static VP mul(const CVec2& v, const SP& a) {
        VP r{};
        for (int m = 0; m < 8; ++m) r[m] = a[m] * v;
        return r;
    }
    static SP dotp(const VP& a, const VP& b) {
        SP r{};
        for (int i = 0; i < 8; ++i)
            for (int j = 0; j < 8; ++j)
                if (!(i & j)) r[i | j] += dot(a[i], b[j]);
        return r;
    }
    static VP perpp(VP a) {
        for (auto& v : a) v = perp(v);
        return a;
    }

    VP grad(const SP& f) const {
        VP r{};
        for (int m = 0; m < 8; ++m) r[m] = (cplx(0, 1) * f[m]) * CVec2(q_[m]);
        return r;
    }
    SP div(const VP& v) const {
        SP r{};
        for (int m = 0; m < 8; ++m) r[m] = cplx(0, 1) * dot(CVec2(q_[m]), v[m]);
        return r;
    }
    // Keeps the q = 0 entries.
    VP mean(const VP& v) const {
        VP r{};
        for (int m = 0; m < 8; ++m)
            if (zero_[m]) r[m] = v[m];
        return r;
    }

    VP L1(const VP& g) const { return apply(g, [&](int m) { return r1(m); }); }
    VP L2(const VP& g) const { return apply(g, [&](int m) { return perp(r1(m)); }); }
    VP L(const VP& g) const { return apply(g, [&](int m) { return r2(m); }); }

private:
    Vec2 r1(int m) const { return p_.alpha * perp(q_[m]) + c_[m] * q_[m]; }
    Vec2 r2(int m) const {
        const Vec2& q = q_[m];
        return (p_.alpha * p_.alpha - norm2(q)) * q - (p_.alpha * c_[m]) * perp(q);
    }
    template <class F>
    VP apply(const VP& g, F&& vec) const {
        VP r{};
        for (int m = 0; m < 8; ++m) {
            if (zero_[m]) continue;
            const cplx s = dot(CVec2(q_[m]), perp(g[m])) / norm2(q_[m]);
            r[m] = s * CVec2(vec(m));
        }
        return r;
    }

    PhysicalParams p_;
    std::array<Vec2, 8> q_{};
    std::array<double, 8> c_{};
    std::array<bool, 8> zero_{};
};

// Degree-3 term of the T expansion at velocity c0.
VP T3_packet(const TaggedWaves& W, const PhysicalParams& p) {
    using TW = TaggedWaves;
    const double a = p.alpha;
    const CVec2 c(p.c0), cp(perp(p.c0));
    const SP eta = W.eta();
    const SP e2 = TW::mul(eta, eta), e3 = TW::mul(e2, eta);
    const VP g = TW::mul(cp, eta);
    const VP ge = W.grad(eta);
    const VP L1g = W.L1(g), L2g = W.L2(g), Lg = W.L(g);
    const VP m1 = W.mean(TW::mul(eta, L1g));
    const VP etaL2g = TW::mul(eta, L2g);
    const VP L2etaL2g = W.L2(etaL2g);
    const VP Lgp = TW::perpp(Lg);

    VP br = (2.0 * a) * W.L1(TW::mul(eta, m1)) + (2.0 * a * a) * TW::mul(eta, m1) +
            2.0 * W.L1(TW::mul(eta, L2etaL2g)) - TW::mul(eta, W.L(etaL2g)) +
            TW::mul(W.div(TW::mul(eta, L1g)), ge) - W.L1(TW::mul(e2, Lgp)) +
            W.grad(TW::mul(eta, TW::dotp(L1g, ge))) +
            a * TW::mul(eta, L2etaL2g - TW::mul(eta, Lgp));
    const VP inner = (2.0 * a) * m1 + 2.0 * L2etaL2g - TW::mul(eta, Lgp);
    br = br - a * W.mean(TW::mul(eta, inner));

    const VP e2c = TW::mul(c, e2);
    const VP L2e2c = W.L2(e2c);
    VP t = 0.5 * br;
    t = t + (0.5 * a * a) * W.mean(TW::mul(eta, L2e2c));
    t = t - (0.5 * a) * W.L1(TW::mul(eta, L2e2c));
    t = t + (0.5 * a) * TW::mul(eta, W.L(e2c));
    t = t + (0.5 * a) * TW::mul(W.div(TW::perpp(e2c)), ge);
    t = t - (a * a / 6.0) * W.L1(TW::mul(cp, e3));
    return t;
}

Vec2 real_part(const CVec2& v) { return {v.x.real(), v.y.real()}; }

// Symmetric trilinear coefficient T30(e^{ik}, e^{il}, e^{-il}) at e^{ik}.
Vec2 T30_2(const Vec2& k, const Vec2& l, const PhysicalParams& p) {
    require_nonzero(k, "k in T30_2");
    const TaggedWaves W({k, l, -l}, p);
    return (1.0 / 6.0) * real_part(T3_packet(W, p)[7]);
}

Vec2 T30_1(const Vec2& k, const PhysicalParams& p) { return T30_2(k, k, p); }

Vec2 require_ell(const std::optional<Vec2>& ell, const char* name) {
    if (!ell) {
        std::ostringstream os;
        os << name << " needs a second wave vector";
        throw Error(ErrorKind::arity_mismatch, os.str());
    }
    return *ell;
}

}  // namespace

Vec2 t_multipliers(const Vec2& k, const std::optional<Vec2>& ell, TMultiplier which,
                   const PhysicalParams& params) {
    switch (which) {
        case TMultiplier::T10: require_nonzero(k, "k"); return T10(k, params);
        case TMultiplier::T20_1: require_nonzero(k, "k"); return T20_1(k, params);
        case TMultiplier::T20_2: return T20_2(k, require_ell(ell, "T20_2"), params);
        case TMultiplier::T30_1: return T30_1(k, params);
        case TMultiplier::T30_2: return T30_2(k, require_ell(ell, "T30_2"), params);
        case TMultiplier::T20_1_closed: require_nonzero(k, "k"); return T20_1_closed(k, params);
        case TMultiplier::T30_1_closed: return T30_1_closed(k, params);
        case TMultiplier::T30_2_closed:
            return T30_2_closed(k, require_ell(ell, "T30_2_closed"), params);
        case TMultiplier::r1: require_nonzero(k, "k"); return r1(k, params);
        case TMultiplier::r2: require_nonzero(k, "k"); return r2(k, params);
        case TMultiplier::r3: return r3(k, require_ell(ell, "r3"), params);
    }
    throw Error(ErrorKind::arity_mismatch, "unknown multiplier");
}

double p20_2(const Vec2& k, const Vec2& l, const PhysicalParams& p) {
    const Vec2 tk = T10(k, p), tl = T10(l, p);
    return 0.5 * dot(tk, tl) + 0.5 * dot(k, p.c0) * dot(l, p.c0) + dot(T20_2(k, l, p), p.c0) +
           0.5 * p.alpha * dot(tk + tl, perp(p.c0));
}

double p20_1(const Vec2& k, const PhysicalParams& p) {
    require_nonzero(k, "k in p20_1");
    const Vec2 tk = T10(k, p);
    const double kc = dot(k, p.c0);
    return 0.5 * norm2(tk) - 0.5 * kc * kc + dot(T20_1(k, p), p.c0) + p.alpha * dot(tk, perp(p.c0));
}

double q20_2(const Vec2& k, const Vec2& l, const PhysicalParams& p) {
    const Vec2 s = k + l;
    require_nonzero(s, "k + ell in q20_2");
    const double r = rho({s, p.c0, p.beta}, p);
    if (std::abs(r) < kRootTol * rho_scale(s, p)) {
        std::ostringstream os;
        os << "second-harmonic resonance: rho(k + ell) = " << r << " at k + ell = (" << s.x << ", "
           << s.y << ")";
        throw Error(ErrorKind::near_zero_divisor, os.str());
    }
    return norm2(s) / (cm(s, p) * r) * p20_2(k, l, p);
}

QuadraticCoeffs quadratic_coeffs(const Vec2& k, const Vec2& l, const PhysicalParams& p) {
    QuadraticCoeffs q;
    q.p20_1 = p20_1(k, p);
    if (!is_zero(k + l)) {
        q.p20_2 = p20_2(k, l, p);
        q.q20_2 = q20_2(k, l, p);
    }
    return q;
}

double p30_1(const Vec2& k, const PhysicalParams& p) {
    const double a = p.alpha;
    const Vec2 t10 = T10(k, p), t201 = T20_1(k, p), t202 = T20_2(k, k, p);
    const double c0k = dot(p.c0, k), kk = norm2(k);
    const Vec2 c0p = perp(p.c0);
    return 2.0 / 3.0 * dot(t10, t201) + 1.0 / 3.0 * dot(t10, t202) -
           a / 3.0 * c0k * dot(c0p, k) - 1.0 / 3.0 * c0k * dot(t10, k) -
           a * a / 2.0 * dot(t10, p.c0) + a / 3.0 * (2.0 * dot(c0p, t201) + dot(c0p, t202)) +
           dot(T30_1(k, p), p.c0) - p.beta / 2.0 * kk * kk;
}

double p30_2(const Vec2& k, const Vec2& l, const PhysicalParams& p) {
    const double a = p.alpha;
    const Vec2 t10k = T10(k, p), t10l = T10(l, p);
    const Vec2 tm = T20_2(k, -l, p), tp = T20_2(k, l, p);
    const Vec2 c0p = perp(p.c0);
    const double c0l = dot(p.c0, l), kl = dot(k, l);
    return 1.0 / 3.0 * (dot(t10k, T20_1(k, p)) + dot(t10l, tm) + dot(t10l, tp)) -
           a / 3.0 * c0l * dot(c0p, l) - 1.0 / 3.0 * c0l * dot(t10k, l) -
           a * a / 6.0 * (dot(t10k, p.c0) + 2.0 * dot(t10l, p.c0)) +
           a / 3.0 * (dot(c0p, T20_1(l, p)) + dot(c0p, tm) + dot(c0p, tp)) +
           dot(T30_2(k, l, p), p.c0) - p.beta / 6.0 * (norm2(k) * norm2(l) + 2.0 * kl * kl);
}

CubicCoeffs cubic_coeffs(const Vec2& k, const Vec2& l, const PhysicalParams& p) {
    return {p30_1(k, p), p30_2(k, l, p)};
}

std::string MonomialKey::str() const {
    return std::to_string(i) + std::to_string(j) + std::to_string(kk) + std::to_string(l);
}

Eta2Table eta2_table(const PhysicalParams& p, const LatticePair& lattice, int N) {
    if (N < 2) throw Error(ErrorKind::config, "eta2 table needs N >= 2");
    const Vec2 k1 = lattice.k1(), k2 = lattice.k2();
    auto q = [&](const Vec2& a, const Vec2& b, const MonomialKey& key) {
        try {
            return q20_2(a, b, p);
        } catch (const Error& e) {
            if (e.kind() != ErrorKind::near_zero_divisor) throw;
            throw Error(ErrorKind::near_zero_divisor, "monomial " + key.str() + ": " + e.what());
        }
    };
    auto mode = [&](ModeIndex m, double v) {
        return SpectralScalarField::single_mode(lattice, N, m, v);
    };
    Eta2Table t;
    t.emplace(MonomialKey{2, 0, 0, 0}, mode({2, 0}, -q(k1, k1, {2, 0, 0, 0})));
    t.emplace(MonomialKey{1, 1, 0, 0}, mode({1, 1}, -2.0 * q(k1, k2, {1, 1, 0, 0})));
    t.emplace(MonomialKey{1, 0, 1, 0}, mode({0, 0}, -2.0 / p.gravity * p20_1(k1, p)));
    t.emplace(MonomialKey{1, 0, 0, 1}, mode({1, -1}, -2.0 * q(k1, -k2, {1, 0, 0, 1})));
    t.emplace(MonomialKey{0, 2, 0, 0}, mode({0, 2}, -q(k2, k2, {0, 2, 0, 0})));
    t.emplace(MonomialKey{0, 1, 0, 1}, mode({0, 0}, -2.0 / p.gravity * p20_1(k2, p)));
    for (const MonomialKey key : {MonomialKey{2, 0, 0, 0}, MonomialKey{1, 1, 0, 0},
                                  MonomialKey{1, 0, 0, 1}, MonomialKey{0, 2, 0, 0}}) {
        t.emplace(key.conj(), t.at(key).conj());
    }
    return t;
}

ABCoeffs ab_coeffs(const PhysicalParams& p, const LatticePair& lattice) {
    const Vec2 k1 = lattice.k1(), k2 = lattice.k2();
    const Vec2 g1 = grad_c_rho({k1, p.c0, p.beta}, p);
    const Vec2 g2 = grad_c_rho({k2, p.c0, p.beta}, p);
    const double s1 = cm(k1, p) / norm2(k1), s2 = cm(k2, p) / norm2(k2);
    ABCoeffs ab{};
    ab[0][0] = s1 * g1.x;
    ab[0][1] = s1 * g1.y;
    ab[1][0] = s2 * g2.x;
    ab[1][1] = s2 * g2.y;
    const double det = ab[0][0] * ab[1][1] - ab[1][0] * ab[0][1];
    if (std::abs(det) <= kRootTol * std::hypot(ab[0][0], ab[0][1]) * std::hypot(ab[1][0], ab[1][1])) {
        std::ostringstream os;
        os << "transversality fails: a1 b2 - b1 a2 = " << det;
        throw Error(ErrorKind::transversality, os.str());
    }
    const double g = p.gravity;
    const Vec2 zero{};
    ab[0][2] = -4.0 / g * p20_1(k1, p) * p20_2(k1, zero, p) -
               2.0 * q20_2(k1, k1, p) * p20_2(-k1, 2.0 * k1, p) + 3.0 * p30_1(k1, p);
    ab[0][3] = -4.0 / g * p20_1(k2, p) * p20_2(k1, zero, p) -
               4.0 * q20_2(k1, -k2, p) * p20_2(k2, k1 - k2, p) -
               4.0 * q20_2(k1, k2, p) * p20_2(-k2, k1 + k2, p) + 6.0 * p30_2(k1, k2, p);
    ab[1][2] = -4.0 / g * p20_1(k1, p) * p20_2(k2, zero, p) -
               4.0 * q20_2(-k1, k2, p) * p20_2(k1, k2 - k1, p) -
               4.0 * q20_2(k1, k2, p) * p20_2(-k1, k1 + k2, p) + 6.0 * p30_2(k2, k1, p);
    ab[1][3] = -4.0 / g * p20_1(k2, p) * p20_2(k2, zero, p) -
               2.0 * q20_2(k2, k2, p) * p20_2(-k2, 2.0 * k2, p) + 3.0 * p30_1(k2, p);
    return ab;
}

std::pair<MuCoeffs, MuCoeffs> mu_linear(const ABCoeffs& ab) {
    const auto& [a1, a2, a3, a4] = ab[0];
    const auto& [b1, b2, b3, b4] = ab[1];
    const double det = a1 * b2 - b1 * a2;
    if (det == 0.0) throw Error(ErrorKind::transversality, "a1 b2 - b1 a2 vanishes");
    MuCoeffs m1{-(a3 * b2 - a2 * b3) / det, -(a4 * b2 - a2 * b4) / det};
    MuCoeffs m2{-(a1 * b3 - a3 * b1) / det, -(a1 * b4 - a4 * b1) / det};
    return {m1, m2};
}

std::pair<MuCoeffs, MuCoeffs> mu_linear(const PhysicalParams& params, const LatticePair& lattice) {
    return mu_linear(ab_coeffs(params, lattice));
}

ExpansionTables build_tables(const PhysicalParams& params, const LatticePair& lattice, int N) {
    ExpansionTables t;
    t.eta2 = eta2_table(params, lattice, N);
    t.ab = ab_coeffs(params, lattice);
    std::tie(t.mu1, t.mu2) = mu_linear(t.ab);
    t.formal = params.beta == 0.0;
    return t;
}

Synthesis synthesize_wave(const AmplitudeState& s, const ExpansionTables& tables,
                          const LatticePair& lattice, int N) {
    auto entry = [&](int i, int j, int kk, int l) {
        return tables.eta2.at(MonomialKey{i, j, kk, l}).retruncate(N);
    };
    const cplx A = s.A, B = s.B, Bc = std::conj(B);
    const double a2 = std::norm(A), b2 = std::norm(B);
    SpectralScalarField half(lattice, N);
    half.set({1, 0}, A);
    half.set({0, 1}, B);
    half += (0.5 * a2) * entry(1, 0, 1, 0);
    half += (0.5 * b2) * entry(0, 1, 0, 1);
    half += (A * A) * entry(2, 0, 0, 0);
    half += (A * B) * entry(1, 1, 0, 0);
    half += (A * Bc) * entry(1, 0, 0, 1);
    half += (B * B) * entry(0, 2, 0, 0);
    SpectralScalarField eta = half + half.conj();
    const Vec2 mu{tables.mu1.A2 * a2 + tables.mu1.B2 * b2, tables.mu2.A2 * a2 + tables.mu2.B2 * b2};
    return {std::move(eta), mu};
}

}  // namespace beltrami
