#include "beltrami/expansion.hpp"

#include <cmath>
#include <sstream>

#include "beltrami/error.hpp"
#include "beltrami/multipliers.hpp"

namespace beltrami {

MultiplierTable::MultiplierTable(const LatticePair& lattice, int N, const PhysicalParams& params)
    : params_(params), lattice_(lattice), N_(N) {
    const std::size_t n = std::size_t(2 * N + 1) * std::size_t(2 * N + 1);
    c_.assign(n, 0.0);
    t_.assign(n, 0.0);
    SpectralScalarField probe(lattice, N);
    for (std::size_t i = 0; i < n; ++i) {
        const ModeIndex m = probe.index_of(i);
        if (m.m1 == 0 && m.m2 == 0) continue;
        const CT ct = multipliers_c_t(norm(lattice.mode(m)), params);
        c_[i] = ct.c;
        t_[i] = ct.t;
    }
}

SpectralScalarField MultiplierTable::H0(const SpectralScalarField& phi) const {
    SpectralScalarField r(phi.lattice(), phi.N());
    for (std::size_t i = 0; i < phi.size(); ++i) {
        const cplx v = phi.data()[i];
        if (v == cplx{}) continue;
        const ModeIndex m = phi.index_of(i);
        if (m.m1 == 0 && m.m2 == 0) continue;
        r.data()[i] = norm2(phi.lattice().mode(m)) * t_[i] * v;
    }
    return r;
}

namespace {

enum class Which { L, L1, L2 };

SpectralVectorField apply_L(const MultiplierTable& tab, const SpectralVectorField& g, Which which) {
    const double a = tab.params().alpha;
    SpectralVectorField r(g.lattice(), g.N());
    for (std::size_t i = 0; i < g.x.size(); ++i) {
        const cplx gx = g.x.data()[i], gy = g.y.data()[i];
        if (gx == cplx{} && gy == cplx{}) continue;
        const ModeIndex m = g.x.index_of(i);
        if (m.m1 == 0 && m.m2 == 0) continue;
        const Vec2 k = g.lattice().mode(m);
        const double k2 = norm2(k);
        const cplx s = (k.x * gy - k.y * gx) / k2;
        const Vec2 kp = perp(k);
        const double c = tab.c(i);
        Vec2 v;
        switch (which) {
            case Which::L1: v = a * kp + c * k; break;
            case Which::L2: v = -a * k + c * kp; break;
            case Which::L: v = (a * a - k2) * k - (a * c) * kp; break;
        }
        r.x.data()[i] = v.x * s;
        r.y.data()[i] = v.y * s;
    }
    return r;
}

void require_same(const SpectralScalarField& a, const SpectralScalarField& b) {
    if (!a.compatible(b))
        throw Error(ErrorKind::incompatible_fields, "expansion inputs differ in lattice or N");
}

}  // namespace

SpectralVectorField MultiplierTable::L1(const SpectralVectorField& g) const {
    return apply_L(*this, g, Which::L1);
}
SpectralVectorField MultiplierTable::L2(const SpectralVectorField& g) const {
    return apply_L(*this, g, Which::L2);
}
SpectralVectorField MultiplierTable::L(const SpectralVectorField& g) const {
    return apply_L(*this, g, Which::L);
}

SpectralScalarField H0_apply(const HodgeArgument& arg, const PhysicalParams& params) {
    return MultiplierTable(arg.phi.lattice(), arg.phi.N(), params).H0(arg.phi);
}

SpectralVectorField M0_apply(const VectorArgument& arg, const PhysicalParams& params) {
    SpectralVectorField r = MultiplierTable(arg.g.lattice(), arg.g.N(), params).L1(arg.g);
    r.add_constant(-arg.gamma);
    return r;
}

SpectralVectorField L_apply(const SpectralVectorField& g, LKind which,
                            const PhysicalParams& params) {
    MultiplierTable tab(g.lattice(), g.N(), params);
    switch (which) {
        case LKind::L1: return tab.L1(g);
        case LKind::L2: return tab.L2(g);
        case LKind::L: return tab.L(g);
    }
    return tab.L(g);
}

cplx mean_product(const SpectralScalarField& f, const SpectralScalarField& g) {
    require_same(f, g);
    const auto& a = f.data();
    const auto& b = g.data();
    const std::size_t n = a.size();
    cplx s{};
    for (std::size_t i = 0; i < n; ++i) s += a[i] * b[n - 1 - i];
    if (f.is_hermitian() && g.is_hermitian()) s = s.real();
    return s;
}

namespace {

double sign_pow(int j) { return j % 2 == 0 ? 1.0 : -1.0; }

class Expander {
public:
    Expander(const SpectralScalarField& eta, const PhysicalParams& params,
             const ExpansionOptions& opts)
        : eta_(eta),
          tab_(eta.lattice(), eta.N(), params),
          pad_(opts.padding),
          alpha_(params.alpha),
          grad_eta_(grad(eta)),
          gsq_pow_{SpectralScalarField::constant(eta.lattice(), eta.N(), 1.0)} {}

    const MultiplierTable& table() const { return tab_; }
    const SpectralVectorField& grad_eta() const { return grad_eta_; }
    double padding() const { return pad_; }

    const SpectralScalarField& gsq_pow(int j) {
        while (int(gsq_pow_.size()) <= j) {
            if (gsq_pow_.size() == 1) {
                gsq_pow_.push_back(dot(grad_eta_, grad_eta_, pad_));
            } else {
                gsq_pow_.push_back(product(gsq_pow_.back(), gsq_pow_[1], pad_));
            }
        }
        return gsq_pow_[std::size_t(j)];
    }

    SpectralScalarField times_eta(const SpectralScalarField& f) { return product(f, eta_, pad_); }
    SpectralVectorField times_eta(const SpectralVectorField& f) { return product(eta_, f, pad_); }
    SpectralScalarField dot_grad(const SpectralVectorField& f) {
        return dot(f, grad_eta_, pad_);
    }
    SpectralVectorField times_grad(const SpectralScalarField& f) {
        return product(f, grad_eta_, pad_);
    }

    SpectralVectorField K_from_H(const SpectralScalarField& H) {
        return (-alpha_) * perp_grad(inv_laplacian(H));
    }

    SpectralVectorField K0(const HodgeArgument& arg, const SpectralScalarField& H0) {
        SpectralVectorField k = grad(arg.phi) + K_from_H(H0);
        k.add_constant(arg.gamma);
        return k;
    }

    // u_k of the H expansion.
    SpectralScalarField u_H(int k, const std::vector<SpectralVectorField>& K,
                            const std::vector<SpectralScalarField>& H) {
        SpectralScalarField u(eta_.lattice(), eta_.N());
        if (k % 2 == 0) u += sign_pow(k / 2) * product(gsq_pow(k / 2), H[0], pad_);
        for (int j = 0; k - 2 * j >= 1; ++j) {
            const int i = k - 2 * j;
            SpectralScalarField term = dot_grad(K[std::size_t(i - 1)]) + H[std::size_t(i)];
            u += sign_pow(j) * (j == 0 ? term : product(gsq_pow(j), term, pad_));
        }
        return u;
    }

    // u_k of the M expansion.
    SpectralScalarField u_M(int k, const SpectralScalarField& u0,
                            const std::vector<SpectralVectorField>& M) {
        SpectralScalarField u(eta_.lattice(), eta_.N());
        if (k % 2 == 0) u += sign_pow(k / 2) * product(gsq_pow(k / 2), u0, pad_);
        for (int j = 0; k - 1 - 2 * j >= 0; ++j) {
            const int i = k - 1 - 2 * j;
            SpectralScalarField term = dot_grad(M[std::size_t(i)]);
            u -= sign_pow(j) * (j == 0 ? term : product(gsq_pow(j), term, pad_));
        }
        return u;
    }

    // (-alpha <W⊥ eta>, -alpha Δ^{-1} ∇·(W⊥ eta) - u eta + <u eta>)
    HodgeArgument hodge_child(const SpectralVectorField& V, const SpectralScalarField& u) {
        const SpectralVectorField W = times_eta(perp(V));
        CVec2 gamma = (-alpha_) * mean(W);
        SpectralScalarField phi = (-alpha_) * inv_laplacian(div(W)) - times_eta(u);
        return {gamma, zero_mean(std::move(phi))};
    }

    ScalarSeries h_series(const HodgeArgument& arg, int K) {
        ScalarSeries H;
        std::vector<SpectralVectorField> Kt;
        std::vector<SpectralScalarField> u;
        H.terms.push_back(tab_.H0(arg.phi));
        if (K == 0) return H;
        Kt.push_back(K0(arg, H.terms[0]));
        u.push_back(H.terms[0]);
        std::vector<ScalarSeries> sub(std::size_t(K) + 1);
        for (int k = 1; k <= K; ++k) {
            SpectralVectorField Vk = Kt[std::size_t(k - 1)];
            if (k >= 2) Vk -= times_grad(u[std::size_t(k - 2)]);
            sub[std::size_t(k)] = h_series(hodge_child(Vk, u[std::size_t(k - 1)]), K - k);
            SpectralScalarField sum = -div(times_eta(Vk));
            for (int n = 1; n <= k; ++n) sum += sub[std::size_t(n)][std::size_t(k - n)];
            H.terms.push_back((1.0 / k) * sum);
            if (k == K) break;
            Kt.push_back(K_from_H(H.terms.back()));
            u.push_back(u_H(k, Kt, H.terms));
        }
        return H;
    }

    VectorSeries m_series(const VectorArgument& arg, int K) {
        VectorSeries M;
        SpectralVectorField m0 = tab_.L1(arg.g);
        m0.add_constant(-arg.gamma);
        M.terms.push_back(std::move(m0));
        if (K == 0) return M;
        std::vector<SpectralScalarField> u;
        u.push_back(div(perp(arg.g)));
        std::vector<VectorSeries> sub(std::size_t(K) + 1);
        for (int k = 1; k <= K; ++k) {
            SpectralVectorField Wk = M.terms[std::size_t(k - 1)];
            if (k >= 2) Wk += times_grad(u[std::size_t(k - 2)]);
            const SpectralVectorField Wpe = times_eta(perp(Wk));
            sub[std::size_t(k)] = m_series({alpha_ * mean(Wpe), Wpe}, K - k);
            SpectralVectorField sum = alpha_ * Wpe - grad(times_eta(u[std::size_t(k - 1)]));
            for (int n = 1; n <= k; ++n) sum += sub[std::size_t(n)][std::size_t(k - n)];
            M.terms.push_back((1.0 / k) * sum);
            if (k == K) break;
            u.push_back(u_M(k, u[0], M.terms));
        }
        return M;
    }

private:
    SpectralScalarField eta_;
    MultiplierTable tab_;
    double pad_;
    double alpha_;
    SpectralVectorField grad_eta_;
    std::vector<SpectralScalarField> gsq_pow_;
};

void check_order(int K) {
    if (K < 0) throw Error(ErrorKind::order_mismatch, "expansion order must be non-negative");
}

}  // namespace

KUTerms expand_K_u_H(const SpectralScalarField& eta, const HodgeArgument& arg, int K,
                     const ScalarSeries& H_terms, const PhysicalParams& params,
                     const ExpansionOptions& opts) {
    check_order(K);
    if (H_terms.order() < K) {
        std::ostringstream os;
        os << "expand_K_u_H needs H terms through order " << K << ", got " << H_terms.order();
        throw Error(ErrorKind::order_mismatch, os.str());
    }
    require_same(eta, arg.phi);
    Expander ex(eta, params, opts);
    KUTerms out;
    out.K.push_back(ex.K0(arg, H_terms[0]));
    out.u.push_back(H_terms[0]);
    for (int k = 1; k <= K; ++k) {
        out.K.push_back(ex.K_from_H(H_terms[std::size_t(k)]));
        out.u.push_back(ex.u_H(k, out.K, H_terms.terms));
    }
    return out;
}

ScalarSeries taylor_H(const SpectralScalarField& eta, const HodgeArgument& arg, int K,
                      const PhysicalParams& params, const ExpansionOptions& opts) {
    check_order(K);
    require_same(eta, arg.phi);
    Expander ex(eta, params, opts);
    return ex.h_series(arg, K);
}

VectorSeries taylor_M(const SpectralScalarField& eta, const VectorArgument& arg, int K,
                      const PhysicalParams& params, const ExpansionOptions& opts) {
    check_order(K);
    require_same(eta, arg.g.x);
    Expander ex(eta, params, opts);
    return ex.m_series(arg, K);
}

VectorSeries expand_S(const SpectralScalarField& eta, const Vec2& c, double alpha, int K,
                      const ExpansionOptions& opts) {
    if (K < 1) throw Error(ErrorKind::order_mismatch, "expand_S needs K >= 1");
    VectorSeries S;
    S.terms.emplace_back(eta.lattice(), eta.N());
    double coef = 1.0;
    for (int k = 1; k <= K; ++k) {
        if (k > 1) coef *= alpha / k;
        const double sgn = (k / 2) % 2 == 0 ? 1.0 : -1.0;
        const Vec2 dir = k % 2 == 0 ? c : perp(c);
        if (coef == 0.0) {
            S.terms.emplace_back(eta.lattice(), eta.N());
            continue;
        }
        SpectralScalarField power = k == 1 ? eta
            : pointwise({&eta},
                        [k](std::span<const cplx> a) { return std::pow(a[0], k); },
                        std::max(opts.padding, 0.5 * (k + 1)));
        S.terms.push_back(CVec2(sgn * coef * dir) * power);
    }
    return S;
}

VectorSeries taylor_T(const SpectralScalarField& eta, const Vec2& c, int K,
                      const PhysicalParams& params, const ExpansionOptions& opts) {
    check_order(K);
    VectorSeries T;
    for (int k = 0; k <= K; ++k) T.terms.emplace_back(eta.lattice(), eta.N());
    if (K == 0) return T;
    const VectorSeries S = expand_S(eta, c, params.alpha, K, opts);
    Expander ex(eta, params, opts);
    for (int j = 1; j <= K; ++j) {
        const VectorSeries Mj = ex.m_series({CVec2{}, S[std::size_t(j)]}, K - j);
        for (int k = j; k <= K; ++k) T.terms[std::size_t(k)] += Mj[std::size_t(k - j)];
    }
    return T;
}

}  // namespace beltrami
