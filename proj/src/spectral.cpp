#include "beltrami/spectral.hpp"

#include <fftw3.h>

#include <algorithm>
#include <cmath>
#include <map>
#include <mutex>

#include "beltrami/error.hpp"

namespace beltrami {

namespace {

const cplx I{0.0, 1.0};

struct Plans {
    fftw_plan forward = nullptr;
    fftw_plan backward = nullptr;
};

// Planning is not thread-safe in FFTW; execution with new arrays is.
const Plans& plans_for(int M) {
    static std::mutex mutex;
    static std::map<int, Plans> cache;
    std::lock_guard lock(mutex);
    auto it = cache.find(M);
    if (it != cache.end()) return it->second;
    std::vector<cplx> a(std::size_t(M) * M), b(std::size_t(M) * M);
    auto* pa = reinterpret_cast<fftw_complex*>(a.data());
    auto* pb = reinterpret_cast<fftw_complex*>(b.data());
    const unsigned flags = FFTW_ESTIMATE | FFTW_UNALIGNED;
    Plans p;
    p.forward = fftw_plan_dft_2d(M, M, pa, pb, FFTW_FORWARD, flags);
    p.backward = fftw_plan_dft_2d(M, M, pa, pb, FFTW_BACKWARD, flags);
    return cache.emplace(M, p).first->second;
}

int wrap(int m, int M) { return m < 0 ? m + M : m; }

SpectralScalarField map_modes(const SpectralScalarField& f,
                              const std::function<cplx(const Vec2&, cplx)>& fn) {
    SpectralScalarField r(f.lattice(), f.N());
    const auto& src = f.data();
    auto& dst = r.data();
    for (std::size_t i = 0; i < src.size(); ++i) {
        if (src[i] == cplx{}) continue;
        dst[i] = fn(f.lattice().mode(f.index_of(i)), src[i]);
    }
    return r;
}

void require_compatible(const SpectralScalarField& a, const SpectralScalarField& b) {
    if (!a.compatible(b)) {
        throw Error(ErrorKind::incompatible_fields, "fields differ in lattice or truncation");
    }
}

}  // namespace

SpectralScalarField dx(const SpectralScalarField& f) {
    return map_modes(f, [](const Vec2& k, cplx c) { return I * k.x * c; });
}

SpectralScalarField dy(const SpectralScalarField& f) {
    return map_modes(f, [](const Vec2& k, cplx c) { return I * k.y * c; });
}

SpectralVectorField grad(const SpectralScalarField& f) { return {dx(f), dy(f)}; }

SpectralVectorField perp_grad(const SpectralScalarField& f) { return {dy(f), -dx(f)}; }

SpectralScalarField div(const SpectralVectorField& f) { return dx(f.x) + dy(f.y); }

SpectralScalarField perp_div(const SpectralVectorField& f) { return dy(f.x) - dx(f.y); }

SpectralScalarField laplacian(const SpectralScalarField& f) {
    return map_modes(f, [](const Vec2& k, cplx c) { return -norm2(k) * c; });
}

AnyField calculus(const AnyField& f, CalculusKind kind) {
    const bool scalar = std::holds_alternative<SpectralScalarField>(f);
    switch (kind) {
        case CalculusKind::grad:
        case CalculusKind::perp_grad:
            if (!scalar) throw Error(ErrorKind::arity_mismatch, "grad expects a scalar field");
            return kind == CalculusKind::grad ? grad(std::get<SpectralScalarField>(f))
                                              : perp_grad(std::get<SpectralScalarField>(f));
        case CalculusKind::div:
        case CalculusKind::perp_div:
            if (scalar) throw Error(ErrorKind::arity_mismatch, "div expects a vector field");
            return kind == CalculusKind::div ? div(std::get<SpectralVectorField>(f))
                                             : perp_div(std::get<SpectralVectorField>(f));
    }
    throw Error(ErrorKind::arity_mismatch, "unknown calculus kind");
}

SpectralScalarField inv_laplacian(const SpectralScalarField& f) {
    SpectralScalarField r = map_modes(f, [](const Vec2& k, cplx c) {
        const double k2 = norm2(k);
        return k2 == 0.0 ? cplx{} : -c / k2;
    });
    r.set({0, 0}, 0.0);
    return r;
}

SpectralVectorField inv_laplacian(const SpectralVectorField& f) {
    return {inv_laplacian(f.x), inv_laplacian(f.y)};
}

cplx mean(const SpectralScalarField& f) { return f.mean(); }
CVec2 mean(const SpectralVectorField& f) { return f.mean(); }

SpectralScalarField zero_mean(SpectralScalarField f) {
    f.set({0, 0}, 0.0);
    return f;
}

SpectralScalarField apply_multiplier(const SpectralScalarField& f,
                                     const std::function<cplx(const Vec2&)>& m) {
    return map_modes(f, [&](const Vec2& k, cplx c) { return m(k) * c; });
}

int grid_size(int N, double padding) {
    const int target = std::max(1, int(std::ceil(std::max(1.0, padding) * (2 * N + 1))));
    for (int M = target;; ++M) {
        int r = M;
        for (int p : {2, 3, 5})
            while (r % p == 0) r /= p;
        if (r == 1) return M;
    }
}

std::vector<cplx> to_grid(const SpectralScalarField& f, int M) {
    const int N = f.N();
    if (M < 2 * N + 1) throw Error(ErrorKind::config, "grid too small for truncation");
    std::vector<cplx> spec(std::size_t(M) * M, cplx{}), out(std::size_t(M) * M);
    for (int m1 = -N; m1 <= N; ++m1)
        for (int m2 = -N; m2 <= N; ++m2)
            spec[std::size_t(wrap(m1, M)) * M + wrap(m2, M)] = f.coeff({m1, m2});
    fftw_execute_dft(plans_for(M).backward, reinterpret_cast<fftw_complex*>(spec.data()),
                     reinterpret_cast<fftw_complex*>(out.data()));
    return out;
}

SpectralScalarField from_grid(std::span<const cplx> values, int M, const LatticePair& lattice,
                              int N, bool hermitian) {
    if (values.size() != std::size_t(M) * M) throw Error(ErrorKind::config, "grid size mismatch");
    if (M < 2 * N + 1) throw Error(ErrorKind::config, "grid too small for truncation");
    std::vector<cplx> in(values.begin(), values.end()), spec(in.size());
    fftw_execute_dft(plans_for(M).forward, reinterpret_cast<fftw_complex*>(in.data()),
                     reinterpret_cast<fftw_complex*>(spec.data()));
    const double scale = 1.0 / (double(M) * M);
    SpectralScalarField f(lattice, N);
    for (int m1 = -N; m1 <= N; ++m1)
        for (int m2 = -N; m2 <= N; ++m2)
            f.set({m1, m2}, spec[std::size_t(wrap(m1, M)) * M + wrap(m2, M)] * scale);
    if (hermitian) {
        auto& d = f.data();
        const std::size_t n = d.size();
        for (std::size_t i = 0; i <= n / 2; ++i) {
            const cplx s = 0.5 * (d[i] + std::conj(d[n - 1 - i]));
            d[i] = s;
            d[n - 1 - i] = std::conj(s);
        }
    }
    return f;
}

SpectralScalarField pointwise(std::span<const SpectralScalarField* const> inputs,
                              const PointwiseFn& fn, double padding) {
    if (inputs.empty()) throw Error(ErrorKind::config, "pointwise needs at least one input");
    const SpectralScalarField& first = *inputs.front();
    bool hermitian = true;
    for (const auto* f : inputs) {
        require_compatible(first, *f);
        hermitian = hermitian && f->is_hermitian();
    }
    const int M = grid_size(first.N(), padding);
    std::vector<std::vector<cplx>> grids;
    grids.reserve(inputs.size());
    for (const auto* f : inputs) {
        grids.push_back(to_grid(*f, M));
        if (hermitian)
            for (auto& v : grids.back()) v = v.real();
    }
    std::vector<cplx> out(std::size_t(M) * M), args(inputs.size());
    for (std::size_t p = 0; p < out.size(); ++p) {
        for (std::size_t j = 0; j < grids.size(); ++j) args[j] = grids[j][p];
        out[p] = fn(args);
        if (hermitian) out[p] = out[p].real();
    }
    return from_grid(out, M, first.lattice(), first.N(), hermitian);
}

SpectralScalarField pointwise(std::initializer_list<const SpectralScalarField*> inputs,
                              const PointwiseFn& fn, double padding) {
    std::vector<const SpectralScalarField*> v(inputs);
    return pointwise(std::span<const SpectralScalarField* const>(v), fn, padding);
}

SpectralScalarField product(const SpectralScalarField& f, const SpectralScalarField& g,
                            double padding) {
    require_compatible(f, g);
    if (f.is_zero() || g.is_zero()) return SpectralScalarField(f.lattice(), f.N());
    if (f.only_mean()) return f.mean() == cplx(f.mean().real()) ? f.mean().real() * g : f.mean() * g;
    if (g.only_mean()) return g.mean() == cplx(g.mean().real()) ? g.mean().real() * f : g.mean() * f;
    return pointwise({&f, &g}, [](std::span<const cplx> a) { return a[0] * a[1]; }, padding);
}

SpectralVectorField product(const SpectralScalarField& f, const SpectralVectorField& g,
                            double padding) {
    return {product(f, g.x, padding), product(f, g.y, padding)};
}

SpectralScalarField dot(const SpectralVectorField& f, const SpectralVectorField& g,
                        double padding) {
    return product(f.x, g.x, padding) + product(f.y, g.y, padding);
}

SpectralVectorField operator*(const CVec2& v, const SpectralScalarField& f) {
    return {v.x * f, v.y * f};
}

double sup_norm(const SpectralScalarField& f, double padding) {
    const auto g = to_grid(f, grid_size(f.N(), padding));
    double m = 0.0;
    for (const auto& v : g) m = std::max(m, std::abs(v));
    return m;
}

}  // namespace beltrami
