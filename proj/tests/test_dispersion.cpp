#include <doctest.h>

#include <random>

#include "beltrami/dispersion.hpp"
#include "beltrami/error.hpp"
#include "beltrami/multipliers.hpp"
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

}  // namespace

TEST_CASE("dispersion relation values") {
    auto p = params(0.0, 0.0);
    const Vec2 k{1.3, -0.4};
    const Vec2 c{0.7, 0.2};
    const double s = norm(k);
    CHECK(rho({k, c, 0.0}, p) == doctest::Approx(s * std::tanh(s) - dot(c, k) * dot(c, k)).epsilon(1e-14));
    auto pa = params(0.5, 0.2);
    CHECK(rho({k, {0, 0}, 0.2}, pa) > 0.0);
    CHECK(rho({k, {0, 0}, 0.2}, pa) ==
          doctest::Approx((1 + 0.2 * s * s) * s * s * multipliers_c_t(s, pa).t).epsilon(1e-14));
    CHECK(std::abs(rho({{1, 0}, {std::sqrt(std::tanh(1.0)), 0}, 0.0}, p)) < 1e-15);
    CHECK(kind_of([&] { rho({{0, 0}, c, 0.0}, p); }) == ErrorKind::zero_frequency);
}

TEST_CASE("parity of the dispersion relation") {
    std::mt19937_64 rng(41);
    std::normal_distribution<double> gauss;
    auto p = params(0.5, 0.1);
    for (int i = 0; i < 50; ++i) {
        const Vec2 k{2 * gauss(rng), 2 * gauss(rng)};
        const Vec2 c{gauss(rng), gauss(rng)};
        const double r = rho({k, c, 0.1}, p);
        CHECK(rho({-k, c, 0.1}, p) == doctest::Approx(r).epsilon(1e-14));
        CHECK(rho({k, -c, 0.1}, p) == doctest::Approx(r).epsilon(1e-14));
    }
}

TEST_CASE("velocity gradient against finite differences") {
    std::mt19937_64 rng(42);
    std::normal_distribution<double> gauss;
    auto lat = skew_lattice();
    std::uniform_int_distribution<int> mi(-3, 3);
    auto p0 = params(0.0, 0.0);
    const Vec2 k{0.3, 1.1}, c{0.5, -0.5};
    CHECK(rel_diff(grad_c_rho({k, c, 0.0}, p0), -2 * dot(c, k) * k) < 1e-15);
    CHECK(norm(grad_c_rho({k, 2.0 * perp(k), 0.0}, p0)) < 1e-15);

    for (int i = 0; i < 100; ++i) {
        ModeIndex m{mi(rng), mi(rng)};
        if (m == ModeIndex{0, 0}) m = {1, 0};
        const Vec2 kk = lat.mode(m);
        const Vec2 cc{gauss(rng), gauss(rng)};
        auto p = params(0.6 * gauss(rng), 0.1);
        if (check_nonresonance(lat, p, 3).min_margin < 1e-3) continue;
        const double h = 1e-5;
        const Vec2 fd{(rho({kk, cc + Vec2{h, 0}, 0.1}, p) - rho({kk, cc - Vec2{h, 0}, 0.1}, p)) / (2 * h),
                      (rho({kk, cc + Vec2{0, h}, 0.1}, p) - rho({kk, cc - Vec2{0, h}, 0.1}, p)) / (2 * h)};
        CHECK(rel_diff(grad_c_rho({kk, cc, 0.1}, p), fd) < 1e-6);
    }
}

TEST_CASE("reference velocity") {
    auto lat = square_lattice();
    auto p = params(0.0, 0.3);
    const double v = std::sqrt(1.3 * std::tanh(1.0));
    auto r = solve_c0(lat, p, 0.3, {1.0, 0.8});
    CHECK(r.c0.x == doctest::Approx(v).epsilon(1e-12));
    CHECK(r.c0.y == doctest::Approx(v).epsilon(1e-12));
    CHECK(r.residual < 1e-12);

    auto again = solve_c0(lat, p, 0.3, r.c0);
    CHECK(again.iterations <= 1);
    CHECK(rel_diff(again.c0, r.c0) < 1e-14);

    auto mirrored = solve_c0(lat, p, 0.3, {-1.0, 0.8});
    CHECK(mirrored.c0.x == doctest::Approx(-v).epsilon(1e-12));
    CHECK(mirrored.c0.y == doctest::Approx(v).epsilon(1e-12));

    auto fd = solve_c0(lat, p, 0.3, {1.0, 0.8}, {.finite_difference_jacobian = true});
    CHECK(rel_diff(fd.c0, r.c0) < 1e-10);

    auto pb = solved(0.5);
    CHECK(std::abs(rho({lat.k1(), pb.c0, 0.1}, pb)) < 1e-12);
    CHECK(std::abs(rho({lat.k2(), pb.c0, 0.1}, pb)) < 1e-12);

    CHECK(kind_of([&] { solve_c0(lat, p, 0.3, {0.0, 0.0}); }) == ErrorKind::convergence);
    CHECK(kind_of([&] { solve_c0(lat, p, 0.3, {1.0, 0.8}, {.max_iter = 1}); }) == ErrorKind::convergence);
}

TEST_CASE("transversality") {
    auto lat = square_lattice();
    for (double alpha : {0.0, 0.5}) {
        auto p = solved(alpha);
        auto tr = check_transversality(lat, p, 16);
        CHECK(tr.pass);
        CHECK(tr.roots_found.size() == 4);
        for (ModeIndex m : tr.roots_found) CHECK(is_kernel_mode(m));
        CHECK(std::abs(tr.det_value) > 0.0);
    }
    auto p = params(0.5);
    p.c0 = {0, 0};
    auto none = check_transversality(lat, p, 8);
    CHECK(none.roots_found.empty());
    CHECK_FALSE(none.pass);
}

TEST_CASE("J10 and its inverse") {
    auto lat = square_lattice();
    const int N = 10;
    auto p = solved(0.5);
    CHECK(j10_apply(SpectralScalarField::single_mode(lat, N, {1, 0}), p).max_abs() < 1e-12);
    CHECK(j10_apply(SpectralScalarField::single_mode(lat, N, {0, -1}), p).max_abs() < 1e-12);
    auto one = j10_apply(SpectralScalarField::constant(lat, N, 1.0), p);
    CHECK(std::abs(one.mean() - p.gravity) < 1e-15);

    auto p0 = solved(0.0);
    const ModeIndex m{2, 1};
    const Vec2 k = lat.mode(m);
    const double s = norm(k);
    const double expect = (1 / std::tanh(s) / s) * ((1 + 0.1 * s * s) * s * std::tanh(s) - dot(p0.c0, k) * dot(p0.c0, k));
    CHECK(std::abs(j10_apply(SpectralScalarField::single_mode(lat, N, m), p0)[m] - expect) < 1e-13);

    std::mt19937_64 rng(43);
    for (int i = 0; i < 5; ++i) {
        auto eta = random_real(lat, N, 6, 1.0, rng, true);
        auto back = j10_solve(j10_apply(eta, p), p).eta;
        auto expect_eta = eta;
        for (ModeIndex km : {ModeIndex{1, 0}, ModeIndex{-1, 0}, ModeIndex{0, 1}, ModeIndex{0, -1}})
            expect_eta.set(km, 0.0);
        CHECK((back - expect_eta).max_abs() < 1e-10);
        CHECK(back.is_hermitian());
    }

    auto c = j10_solve(SpectralScalarField::constant(lat, N, 1.0), p);
    CHECK(std::abs(c.eta.mean() - 1.0 / p.gravity) < 1e-15);
    CHECK_FALSE(c.formal);

    auto bad = SpectralScalarField::single_mode(lat, N, {1, 0});
    CHECK(kind_of([&] { j10_solve(bad, p); }) == ErrorKind::range_violation);

    auto pf = solved(0.0, 0.0);
    auto formal = j10_solve(SpectralScalarField::single_mode(lat, N, {2, 0}), pf);
    CHECK(formal.formal);
    CHECK(formal.min_divisor > 0.0);
}

TEST_CASE("decay of the inverse multiplier with surface tension") {
    auto p = solved(0.5);
    auto inv = [&](double s) {
        const Vec2 k{s, 0.0};
        return std::abs(s * s / (multipliers_c_t(s, p).c * rho({k, p.c0, p.beta}, p)));
    };
    double log_a = 0.0;
    for (double s : {8.0, 16.0, 32.0}) log_a += (std::log(inv(s)) + 2 * std::log(s)) / 3;
    CHECK(inv(64.0) < 10 * std::exp(log_a) / (64.0 * 64.0));
    CHECK(inv(64.0) > 0.0);
}
