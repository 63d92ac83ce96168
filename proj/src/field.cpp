#include "beltrami/field.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "beltrami/error.hpp"

namespace beltrami {

SpectralScalarField::SpectralScalarField(const LatticePair& lattice, int N)
    : lattice_(lattice), N_(N) {
    if (N < 0) throw Error(ErrorKind::config, "truncation N must be non-negative");
    coeffs_.assign(std::size_t(2 * N + 1) * std::size_t(2 * N + 1), cplx{});
}

SpectralScalarField SpectralScalarField::constant(const LatticePair& lattice, int N, cplx value) {
    SpectralScalarField f(lattice, N);
    f.set({0, 0}, value);
    return f;
}

SpectralScalarField SpectralScalarField::single_mode(const LatticePair& lattice, int N,
                                                     ModeIndex m, cplx amplitude) {
    SpectralScalarField f(lattice, N);
    f.set(m, amplitude);
    return f;
}

SpectralScalarField SpectralScalarField::from_function(const LatticePair& lattice, int N,
                                                       const std::function<cplx(ModeIndex)>& fn) {
    SpectralScalarField f(lattice, N);
    for (std::size_t i = 0; i < f.size(); ++i) f.coeffs_[i] = fn(f.index_of(i));
    return f;
}

void SpectralScalarField::set(ModeIndex m, cplx value) {
    if (!contains(m)) {
        std::ostringstream os;
        os << "mode (" << m.m1 << ", " << m.m2 << ") outside truncation N = " << N_;
        throw Error(ErrorKind::incompatible_fields, os.str());
    }
    coeffs_[offset(m)] = value;
}

bool SpectralScalarField::is_hermitian() const {
    const std::size_t n = coeffs_.size();
    for (std::size_t i = 0; i < n; ++i) {
        if (coeffs_[n - 1 - i] != std::conj(coeffs_[i])) return false;
    }
    return true;
}

bool SpectralScalarField::is_zero() const {
    return std::all_of(coeffs_.begin(), coeffs_.end(), [](cplx c) { return c == cplx{}; });
}

bool SpectralScalarField::only_mean() const {
    const std::size_t c = offset({0, 0});
    for (std::size_t i = 0; i < coeffs_.size(); ++i) {
        if (i != c && coeffs_[i] != cplx{}) return false;
    }
    return true;
}

SpectralScalarField SpectralScalarField::conj() const {
    SpectralScalarField r(lattice_, N_);
    const std::size_t n = coeffs_.size();
    for (std::size_t i = 0; i < n; ++i) r.coeffs_[i] = std::conj(coeffs_[n - 1 - i]);
    return r;
}

SpectralScalarField SpectralScalarField::reflect() const {
    SpectralScalarField r(lattice_, N_);
    std::reverse_copy(coeffs_.begin(), coeffs_.end(), r.coeffs_.begin());
    return r;
}

SpectralScalarField SpectralScalarField::translate(const Vec2& v) const {
    SpectralScalarField r(lattice_, N_);
    for (std::size_t i = 0; i < coeffs_.size(); ++i) {
        if (coeffs_[i] == cplx{}) continue;
        const double phase = dot(lattice_.mode(index_of(i)), v);
        r.coeffs_[i] = coeffs_[i] * cplx(std::cos(phase), std::sin(phase));
    }
    return r;
}

SpectralScalarField SpectralScalarField::retruncate(int M) const {
    SpectralScalarField r(lattice_, M);
    const int L = std::min(M, N_);
    for (int m1 = -L; m1 <= L; ++m1)
        for (int m2 = -L; m2 <= L; ++m2) r.coeffs_[r.offset({m1, m2})] = coeff({m1, m2});
    return r;
}

double SpectralScalarField::l2_norm() const {
    double s = 0.0;
    for (const auto& c : coeffs_) s += std::norm(c);
    return std::sqrt(s);
}

double SpectralScalarField::max_abs() const {
    double m = 0.0;
    for (const auto& c : coeffs_) m = std::max(m, std::abs(c));
    return m;
}

void SpectralScalarField::require_compatible(const SpectralScalarField& o) const {
    if (!compatible(o)) {
        std::ostringstream os;
        os << "incompatible fields: N = " << N_ << " vs " << o.N_
           << (lattice_ == o.lattice_ ? "" : " (different lattices)");
        throw Error(ErrorKind::incompatible_fields, os.str());
    }
}

SpectralScalarField& SpectralScalarField::operator+=(const SpectralScalarField& o) {
    require_compatible(o);
    for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] += o.coeffs_[i];
    return *this;
}

SpectralScalarField& SpectralScalarField::operator-=(const SpectralScalarField& o) {
    require_compatible(o);
    for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] -= o.coeffs_[i];
    return *this;
}

SpectralScalarField& SpectralScalarField::operator*=(double s) {
    for (auto& c : coeffs_) c *= s;
    return *this;
}

SpectralScalarField& SpectralScalarField::operator*=(cplx s) {
    for (auto& c : coeffs_) c *= s;
    return *this;
}

SpectralScalarField& SpectralScalarField::add_constant(cplx value) {
    coeffs_[offset({0, 0})] += value;
    return *this;
}

SpectralVectorField::SpectralVectorField(SpectralScalarField fx, SpectralScalarField fy)
    : x(std::move(fx)), y(std::move(fy)) {
    if (!x.compatible(y)) {
        throw Error(ErrorKind::incompatible_fields, "vector components must share N and lattice");
    }
}

SpectralVectorField SpectralVectorField::constant(const LatticePair& lattice, int N,
                                                  const CVec2& value) {
    return {SpectralScalarField::constant(lattice, N, value.x),
            SpectralScalarField::constant(lattice, N, value.y)};
}

double SpectralVectorField::l2_norm() const { return std::hypot(x.l2_norm(), y.l2_norm()); }
double SpectralVectorField::max_abs() const { return std::max(x.max_abs(), y.max_abs()); }

SpectralVectorField& SpectralVectorField::operator+=(const SpectralVectorField& o) {
    x += o.x;
    y += o.y;
    return *this;
}
SpectralVectorField& SpectralVectorField::operator-=(const SpectralVectorField& o) {
    x -= o.x;
    y -= o.y;
    return *this;
}
SpectralVectorField& SpectralVectorField::operator*=(double s) {
    x *= s;
    y *= s;
    return *this;
}
SpectralVectorField& SpectralVectorField::operator*=(cplx s) {
    x *= s;
    y *= s;
    return *this;
}
SpectralVectorField& SpectralVectorField::add_constant(const CVec2& v) {
    x.add_constant(v.x);
    y.add_constant(v.y);
    return *this;
}

}  // namespace beltrami
