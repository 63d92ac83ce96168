#include <doctest.h>

#include <random>
#include <set>

#include "beltrami/bifurcation.hpp"
#include "beltrami/dispersion.hpp"
#include "beltrami/error.hpp"
#include "beltrami/multipliers.hpp"
#include "oracles.hpp"
#include "support.hpp"

using namespace beltrami;
using namespace beltrami::test;

namespace {

ErrorKind kind_of(auto&& fn) {
    try {
        fn();
    } catch (const Error& e) {
        return e.kind();
    }
    FAIL("no error thrown");
    return ErrorKind::io;
}

PhysicalParams solved(double alpha, double beta = 0.1) {
    auto p = params(alpha, beta);
    const double v = std::sqrt((1 + beta) * std::tanh(1.0));
    p.c0 = solve_c0(square_lattice(), p, beta, {v, v}).c0;
    return p;
}

Vec2 mode_vec(const VectorSeries& T, int k, ModeIndex m) {
    return {T[k].x[m].real(), T[k].y[m].real()};
}

}  // namespace

TEST_CASE("first-order multipliers") {
    auto p = params(0.0);
    const Vec2 k{1.2, -0.5};
    const double s = norm(k);
    const Vec2 t10 = t_multipliers(k, std::nullopt, TMultiplier::T10, p);
    CHECK(rel_diff(t10, -k * (dot(p.c0, k) / (std::tanh(s) * s))) < 1e-14);
    const Vec2 r2 = t_multipliers(k, std::nullopt, TMultiplier::r2, p);
    CHECK(rel_diff(r2, -s * s * k) < 1e-14);
    auto pa = params(0.5);
    const Vec2 r1 = t_multipliers(k, std::nullopt, TMultiplier::r1, pa);
    CHECK(rel_diff(r1, 0.5 * perp(k) + multipliers_c_t(s, pa).c * k) < 1e-14);
    const Vec2 ell{0.3, 0.9};
    const Vec2 r3 = t_multipliers(k, ell, TMultiplier::r3, pa);
    const Vec2 r1l = t_multipliers(ell, std::nullopt, TMultiplier::r1, pa);
    CHECK(rel_diff(r3, r1 * (dot(pa.c0, k) / norm2(k)) + r1l * (dot(pa.c0, ell) / norm2(ell))) < 1e-14);

    CHECK(kind_of([&] { t_multipliers({0, 0}, std::nullopt, TMultiplier::T10, p); }) == ErrorKind::zero_frequency);
    CHECK_THROWS_AS(t_multipliers(k, std::nullopt, TMultiplier::T20_2, p), Error);
}

TEST_CASE("T10 against the order-one T term") {
    auto lat = skew_lattice();
    const int N = 8;
    for (double alpha : {0.0, 0.5}) {
        auto p = params(alpha);
        for (int m1 = -2; m1 <= 2; ++m1)
            for (int m2 = -2; m2 <= 2; ++m2) {
                if (m1 == 0 && m2 == 0) continue;
                const ModeIndex m{m1, m2};
                auto T = taylor_T(SpectralScalarField::single_mode(lat, N, m), p.c0, 1, p);
                const Vec2 t10 = t_multipliers(lat.mode(m), std::nullopt, TMultiplier::T10, p);
                CHECK(rel_diff(mode_vec(T, 1, m), t10) <= 1e-12);
            }
    }
}

TEST_CASE("quadratic T multipliers against the series") {
    auto lat = skew_lattice();
    const int N = 10;
    const std::vector<std::pair<ModeIndex, ModeIndex>> pairs{
        {{1, 0}, {0, 1}}, {{1, 0}, {0, -1}}, {{2, 1}, {-1, 1}}, {{1, 0}, {-2, 0}}, {{1, 0}, {1, 0}}, {{1, 1}, {1, 1}}};
    for (double alpha : {0.0, 0.5}) {
        auto p = params(alpha);
        for (auto [a, b] : pairs) {
            auto eta = SpectralScalarField::single_mode(lat, N, a) + SpectralScalarField::single_mode(lat, N, b);
            auto T = taylor_T(eta, p.c0, 2, p);
            const double f = (a == b) ? 4.0 : 2.0;
            const Vec2 t = t_multipliers(lat.mode(a), lat.mode(b), TMultiplier::T20_2, p);
            CHECK(rel_diff(mode_vec(T, 2, a + b), f * t) < 1e-12);
        }
        for (ModeIndex a : {ModeIndex{1, 0}, ModeIndex{2, 1}}) {
            auto T = taylor_T(cosine_mode(lat, N, a, 1.0), p.c0, 2, p);
            CHECK(norm(mode_vec(T, 2, {0, 0})) < 1e-13);
            CHECK(norm(t_multipliers(lat.mode(a), std::nullopt, TMultiplier::T20_1, p)) == 0.0);
        }
    }
}

TEST_CASE("cubic T multipliers against the series") {
    auto lat = skew_lattice();
    const int N = 10;
    for (double alpha : {0.0, 0.5}) {
        auto p = params(alpha);
        for (ModeIndex a : {ModeIndex{1, 0}, ModeIndex{0, 1}, ModeIndex{1, 1}}) {
            auto T = taylor_T(cosine_mode(lat, N, a, 1.0), p.c0, 3, p);
            const Vec2 t = t_multipliers(lat.mode(a), std::nullopt, TMultiplier::T30_1, p);
            CHECK(rel_diff(mode_vec(T, 3, a) / 3.0, t) < 1e-12);
        }
        const std::vector<std::pair<ModeIndex, ModeIndex>> pairs{
            {{1, 0}, {0, 1}}, {{0, 1}, {1, 0}}, {{1, 0}, {1, 1}}, {{2, 1}, {-1, 1}}};
        for (auto [a, b] : pairs) {
            auto eta = SpectralScalarField::single_mode(lat, N, a) + cosine_mode(lat, N, b, 1.0);
            auto T = taylor_T(eta, p.c0, 3, p);
            const Vec2 t = t_multipliers(lat.mode(a), lat.mode(b), TMultiplier::T30_2, p);
            CHECK(rel_diff(mode_vec(T, 3, a) / 6.0, t) < 1e-12);
        }
    }
}

TEST_CASE("closed multiplier forms agree without vorticity") {
    auto p = params(0.0);
    const Vec2 k{1.0, 0.0}, ell{0.3, 1.1};
    auto same = [&](TMultiplier exact, TMultiplier closed, std::optional<Vec2> l) {
        const Vec2 a = t_multipliers(k, l, exact, p);
        const Vec2 b = t_multipliers(k, l, closed, p);
        return norm(a - b) <= 1e-9 * std::max(1.0, norm(a));
    };
    CHECK(same(TMultiplier::T20_1, TMultiplier::T20_1_closed, std::nullopt));
    CHECK(same(TMultiplier::T30_1, TMultiplier::T30_1_closed, std::nullopt));
    CHECK(same(TMultiplier::T30_2, TMultiplier::T30_2_closed, ell));
}

TEST_CASE("quadratic coefficients") {
    std::mt19937_64 rng(51);
    std::normal_distribution<double> gauss;
    auto p = solved(0.5);
    for (int i = 0; i < 20; ++i) {
        const Vec2 k{gauss(rng), gauss(rng)}, l{gauss(rng), gauss(rng)};
        CHECK(p20_2(k, l, p) == doctest::Approx(p20_2(l, k, p)).epsilon(1e-13));
    }
    auto p0 = p;
    p0.c0 = {0, 0};
    CHECK(p20_2({1, 0}, {0.4, 1.3}, p0) == 0.0);
    CHECK(p20_1({1, 0}, p0) == 0.0);

    auto q = quadratic_coeffs({1, 0}, {0, 1}, p);
    REQUIRE(q.q20_2.has_value());
    const Vec2 s{1, 1};
    const double factor = norm2(s) / (multipliers_c_t(norm(s), p).c * rho({s, p.c0, p.beta}, p));
    CHECK(*q.q20_2 == doctest::Approx(factor * q.p20_2).epsilon(1e-14));
    CHECK_FALSE(quadratic_coeffs({1, 0}, {-1, 0}, p).q20_2.has_value());

    // Wilton-type degeneracy: c0 chosen so that rho(2 k1) = 0
    auto pw = params(0.0, 0.1);
    pw.c0 = {std::sqrt(1.4 * 2 * std::tanh(2.0) / 4), 0.3};
    CHECK(kind_of([&] { q20_2({1, 0}, {1, 0}, pw); }) == ErrorKind::near_zero_divisor);
}

TEST_CASE("quadratic coefficient against finite differences of the residual") {
    auto lat = square_lattice();
    for (double alpha : {0.0, 0.5}) {
        auto p = solved(alpha);
        for (auto [a, b] : {std::pair<ModeIndex, ModeIndex>{{1, 0}, {0, 1}}, {{2, 1}, {-1, 1}}}) {
            const double fd = mixed_second_derivative(lat, 8, p, a, b, 1e-3);
            CHECK(rel_diff(fd, 2 * p20_2(lat.mode(a), lat.mode(b), p)) < 1e-4);
        }
        // p20_1 through the mean, both orderings of (k, -k) land on 0
        for (ModeIndex a : {ModeIndex{1, 0}, ModeIndex{1, 1}}) {
            auto f = [&](double e) { return J_at(lat, 8, p, a, a, e / 2, e / 2, {0, 0}); };
            const double h = 1e-3;
            auto D = [&](double s) { return (f(s) - 2 * f(0) + f(-s)) / (s * s); };
            const double fd = (4 * D(h / 2) - D(h)) / 3;
            CHECK(rel_diff(fd, 4 * p20_1(lat.mode(a), p)) < 1e-4);
        }
    }
}

TEST_CASE("cubic coefficients") {
    auto lat = square_lattice();
    const Vec2 k{1.3, -0.2}, l{0.4, 0.9};
    auto p = params(0.5, 0.3);
    p.c0 = {0, 0};
    CHECK(p30_1(k, p) == doctest::Approx(-0.3 / 2 * std::pow(norm2(k), 2)).epsilon(1e-14));
    CHECK(p30_2(k, l, p) ==
          doctest::Approx(-0.3 / 6 * (norm2(k) * norm2(l) + 2 * dot(k, l) * dot(k, l))).epsilon(1e-14));
    p.beta = 0.0;
    CHECK(p30_1(k, p) == 0.0);
    CHECK(p30_2(k, l, p) == 0.0);

    // cubic coefficients from the residual functional
    for (double alpha : {0.0, 0.5}) {
        auto ps = solved(alpha);
        const int N = 8;
        auto coef = [&](ModeIndex a, double e, ModeIndex b, double d) {
            return J_at(lat, N, ps, a, b, e, d, a, 6);
        };
        for (ModeIndex a : {ModeIndex{1, 0}, ModeIndex{1, 1}}) {
            const double j = j10_apply(SpectralScalarField::single_mode(lat, N, a), ps)[a].real();
            auto h = [&](double e) {
                const double g = (coef(a, e, a, 0) - coef(a, -e, a, 0)) / (2 * e);
                return (g - j) / (e * e);
            };
            const double e = 1e-2;
            const double num = (4 * h(e / 2) - h(e)) / 3 / 3;
            CHECK(rel_diff(num, p30_1(lat.mode(a), ps)) < 1e-5);
        }
        for (auto [a, b] : {std::pair<ModeIndex, ModeIndex>{{1, 0}, {0, 1}}, {{1, 0}, {1, 1}}}) {
            auto h = [&](double d) {
                const double e = 1e-4;
                const double f1 = coef(a, e, b, d) - coef(a, -e, b, d);
                const double f0 = coef(a, e, b, 0) - coef(a, -e, b, 0);
                return (f1 - f0) / (2 * e * d * d);
            };
            const double d = 1e-2;
            const double num = (4 * h(d / 2) - h(d)) / 3 / 6;
            CHECK(rel_diff(num, p30_2(lat.mode(a), lat.mode(b), ps)) < 1e-5);
        }
    }
}

TEST_CASE("second-order table") {
    auto lat = square_lattice();
    const int N = 8;
    auto p = solved(0.5);
    auto t = eta2_table(p, lat, N);
    CHECK(t.size() == 10);
    for (const auto& [key, f] : t) {
        CHECK(key.degree() == 2);
        REQUIRE(t.count(key.conj()) == 1);
        CHECK((t.at(key.conj()) - f.conj()).max_abs() == 0.0);
    }
    const auto& e1100 = t.at({1, 1, 0, 0});
    for (std::size_t i = 0; i < e1100.size(); ++i) {
        const ModeIndex m = e1100.index_of(i);
        if (m == ModeIndex{1, 1} || m == ModeIndex{-1, -1}) continue;
        CHECK(e1100.data()[i] == cplx{});
    }
    CHECK(std::abs(e1100[{1, 1}]) > 0.0);
    CHECK(t.at({1, 0, 1, 0}).only_mean());
    CHECK(t.at({0, 1, 0, 1}).only_mean());
    CHECK(std::abs(t.at({1, 0, 1, 0}).mean() + 2 / p.gravity * p20_1(lat.k1(), p)) < 1e-15);

    // the range equation J10 eta_2 + J20 = 0 on the forced mode
    auto j = j10_apply(t.at({2, 0, 0, 0}), p);
    CHECK(j[{2, 0}].real() == doctest::Approx(-p20_2(lat.k1(), lat.k1(), p)).epsilon(1e-12));
    auto j11 = j10_apply(t.at({1, 0, 0, 1}), p);
    CHECK(j11[{1, -1}].real() == doctest::Approx(-2 * p20_2(lat.k1(), -lat.k2(), p)).epsilon(1e-12));

    auto p0 = p;
    p0.c0 = {0, 0};
    p0.beta = 0.1;
    for (const auto& [key, f] : eta2_table(p0, lat, N)) CHECK(f.max_abs() == 0.0);
    CHECK(MonomialKey{2, 0, 0, 0}.str() == "2000");
}

TEST_CASE("a and b coefficients") {
    auto lat = square_lattice();
    for (double alpha : {0.0, 0.5}) {
        auto p = solved(alpha);
        auto ab = ab_coeffs(p, lat);
        const Vec2 ks[2] = {lat.k1(), lat.k2()};
        for (int r = 0; r < 2; ++r) {
            const Vec2 k = ks[r];
            const double pre = multipliers_c_t(norm(k), p).c / norm2(k);
            const double h = 1e-5;
            const double fd1 = (rho({k, p.c0 + Vec2{h, 0}, p.beta}, p) - rho({k, p.c0 - Vec2{h, 0}, p.beta}, p)) / (2 * h);
            const double fd2 = (rho({k, p.c0 + Vec2{0, h}, p.beta}, p) - rho({k, p.c0 - Vec2{0, h}, p.beta}, p)) / (2 * h);
            CHECK(rel_diff(ab[r][0], pre * fd1) < 1e-8);
            CHECK(rel_diff(ab[r][1], pre * fd2) < 1e-8);
        }
        CHECK(std::abs(ab[0][0] * ab[1][1] - ab[1][0] * ab[0][1]) > 1e-3);
        if (alpha == 0.0) {
            CHECK(ab[0][2] == doctest::Approx(ab[1][3]).epsilon(1e-12));
            CHECK(ab[0][3] == doctest::Approx(ab[1][2]).epsilon(1e-12));
        }
    }
    auto p = params(0.0);
    p.c0 = {0, 0};
    CHECK(kind_of([&] { ab_coeffs(p, lat); }) == ErrorKind::transversality);
}

TEST_CASE("first-order velocity corrections") {
    ABCoeffs zero{{{1.0, 0.2, 0.0, 0.0}, {0.3, 2.0, 0.0, 0.0}}};
    auto [m1, m2] = mu_linear(zero);
    CHECK(m1.A2 == 0.0);
    CHECK(m1.B2 == 0.0);
    CHECK(m2.A2 == 0.0);
    CHECK(m2.B2 == 0.0);

    ABCoeffs diag{{{2.0, 0.0, 0.6, -0.4}, {0.0, 5.0, 1.0, 3.0}}};
    auto [d1, d2] = mu_linear(diag);
    CHECK(d1.A2 == doctest::Approx(-0.3));
    CHECK(d2.B2 == doctest::Approx(-0.6));

    auto lat = square_lattice();
    auto p = solved(0.5);
    auto ab = ab_coeffs(p, lat);
    auto [u1, u2] = mu_linear(ab);
    for (auto [A2, B2] : {std::pair{1.0, 0.0}, {0.0, 1.0}, {0.3, 0.7}}) {
        const double mu1 = u1.A2 * A2 + u1.B2 * B2, mu2 = u2.A2 * A2 + u2.B2 * B2;
        for (int r = 0; r < 2; ++r) {
            const double res = ab[r][0] * mu1 + ab[r][1] * mu2 + ab[r][2] * A2 + ab[r][3] * B2;
            CHECK(std::abs(res) < 1e-13 * (std::abs(ab[r][2]) + std::abs(ab[r][3]) + 1));
        }
    }
    CHECK_THROWS_AS(mu_linear(ABCoeffs{{{1, 2, 0, 0}, {2, 4, 0, 0}}}), Error);
}

TEST_CASE("wave synthesis") {
    auto lat = square_lattice();
    const int N = 8;
    auto p = solved(0.5);
    auto tables = build_tables(p, lat, N);
    CHECK_FALSE(tables.formal);

    auto z = synthesize_wave({}, tables, lat, N);
    CHECK(z.eta.is_zero());
    CHECK(z.mu == Vec2{0, 0});

    const cplx A{0.01, 0}, B{0.02, 0};
    auto w = synthesize_wave({A, B}, tables, lat, N);
    CHECK(w.eta.is_hermitian());
    CHECK((w.eta.reflect() - w.eta).max_abs() == 0.0);
    CHECK(w.mu.x == doctest::Approx(tables.mu1.A2 * 1e-4 + tables.mu1.B2 * 4e-4).epsilon(1e-14));

    const std::set<ModeIndex> support{{0, 0}, {1, 0}, {-1, 0}, {0, 1}, {0, -1}, {2, 0}, {-2, 0}, {0, 2},
                                      {0, -2}, {1, 1}, {-1, -1}, {1, -1}, {-1, 1}};
    for (std::size_t i = 0; i < w.eta.size(); ++i)
        if (!support.count(w.eta.index_of(i))) CHECK(w.eta.data()[i] == cplx{});

    const Vec2 v = lat.point(0.21, 0.64);
    const cplx At = A * std::exp(cplx(0, dot(lat.k1(), v)));
    const cplx Bt = B * std::exp(cplx(0, dot(lat.k2(), v)));
    auto wt = synthesize_wave({At, Bt}, tables, lat, N);
    CHECK((wt.eta - w.eta.translate(v)).max_abs() < 1e-16);
    CHECK(norm(wt.mu - w.mu) < 1e-14 * norm(w.mu));

    auto pf = solved(0.5, 0.0);
    CHECK(build_tables(pf, lat, N).formal);
}
