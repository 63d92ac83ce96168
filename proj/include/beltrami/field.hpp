#pragma once

#include <functional>
#include <vector>

#include "beltrami/lattice.hpp"
#include "beltrami/vec2.hpp"

namespace beltrami {

// Fourier coefficients on the index box [-N, N]^2 of the dual lattice.
class SpectralScalarField {
public:
    SpectralScalarField(const LatticePair& lattice, int N);

    static SpectralScalarField constant(const LatticePair& lattice, int N, cplx value);
    static SpectralScalarField single_mode(const LatticePair& lattice, int N, ModeIndex m,
                                           cplx amplitude = 1.0);
    // Builds a field from a coefficient generator evaluated at every index of the box.
    static SpectralScalarField from_function(const LatticePair& lattice, int N,
                                             const std::function<cplx(ModeIndex)>& fn);

    const LatticePair& lattice() const { return lattice_; }
    int N() const { return N_; }
    int side() const { return 2 * N_ + 1; }
    std::size_t size() const { return coeffs_.size(); }

    bool contains(ModeIndex m) const {
        return m.m1 >= -N_ && m.m1 <= N_ && m.m2 >= -N_ && m.m2 <= N_;
    }
    // Zero outside the box.
    cplx coeff(ModeIndex m) const { return contains(m) ? coeffs_[offset(m)] : cplx{}; }
    cplx operator[](ModeIndex m) const { return coeff(m); }
    // Throws when m lies outside the box.
    void set(ModeIndex m, cplx value);

    ModeIndex index_of(std::size_t flat) const {
        return {int(flat / side()) - N_, int(flat % side()) - N_};
    }
    std::size_t offset(ModeIndex m) const {
        return std::size_t(m.m1 + N_) * side() + std::size_t(m.m2 + N_);
    }

    const std::vector<cplx>& data() const { return coeffs_; }
    std::vector<cplx>& data() { return coeffs_; }

    cplx mean() const { return coeffs_[offset({0, 0})]; }
    bool compatible(const SpectralScalarField& o) const {
        return N_ == o.N_ && lattice_ == o.lattice_;
    }
    // coeff(-m) == conj(coeff(m)) bit for bit.
    bool is_hermitian() const;
    bool is_zero() const;
    bool only_mean() const;

    // Field of the pointwise complex conjugate.
    SpectralScalarField conj() const;
    // x -> -x.
    SpectralScalarField reflect() const;
    // f(x) -> f(x + v).
    SpectralScalarField translate(const Vec2& v) const;
    // Same coefficients on a box of side 2M+1, truncating or zero-padding.
    SpectralScalarField retruncate(int M) const;

    // sqrt(sum |c_m|^2), the RMS norm over the cell.
    double l2_norm() const;
    double max_abs() const;

    SpectralScalarField& operator+=(const SpectralScalarField& o);
    SpectralScalarField& operator-=(const SpectralScalarField& o);
    SpectralScalarField& operator*=(double s);
    SpectralScalarField& operator*=(cplx s);
    SpectralScalarField& add_constant(cplx value);

    friend SpectralScalarField operator+(SpectralScalarField a, const SpectralScalarField& b) {
        return a += b;
    }
    friend SpectralScalarField operator-(SpectralScalarField a, const SpectralScalarField& b) {
        return a -= b;
    }
    friend SpectralScalarField operator-(SpectralScalarField a) { return a *= -1.0; }
    friend SpectralScalarField operator*(double s, SpectralScalarField a) { return a *= s; }
    friend SpectralScalarField operator*(SpectralScalarField a, double s) { return a *= s; }
    friend SpectralScalarField operator*(cplx s, SpectralScalarField a) { return a *= s; }

private:
    void require_compatible(const SpectralScalarField& o) const;

    LatticePair lattice_;
    int N_;
    std::vector<cplx> coeffs_;
};

struct SpectralVectorField {
    SpectralScalarField x;
    SpectralScalarField y;

    SpectralVectorField(SpectralScalarField fx, SpectralScalarField fy);
    SpectralVectorField(const LatticePair& lattice, int N)
        : x(lattice, N), y(lattice, N) {}

    static SpectralVectorField constant(const LatticePair& lattice, int N, const CVec2& value);

    const LatticePair& lattice() const { return x.lattice(); }
    int N() const { return x.N(); }
    CVec2 mean() const { return {x.mean(), y.mean()}; }
    bool is_hermitian() const { return x.is_hermitian() && y.is_hermitian(); }
    bool compatible(const SpectralVectorField& o) const { return x.compatible(o.x); }
    bool compatible(const SpectralScalarField& o) const { return x.compatible(o); }

    SpectralVectorField conj() const { return {x.conj(), y.conj()}; }
    SpectralVectorField reflect() const { return {x.reflect(), y.reflect()}; }
    SpectralVectorField translate(const Vec2& v) const { return {x.translate(v), y.translate(v)}; }

    double l2_norm() const;
    double max_abs() const;

    SpectralVectorField& operator+=(const SpectralVectorField& o);
    SpectralVectorField& operator-=(const SpectralVectorField& o);
    SpectralVectorField& operator*=(double s);
    SpectralVectorField& operator*=(cplx s);
    SpectralVectorField& add_constant(const CVec2& v);

    friend SpectralVectorField operator+(SpectralVectorField a, const SpectralVectorField& b) {
        return a += b;
    }
    friend SpectralVectorField operator-(SpectralVectorField a, const SpectralVectorField& b) {
        return a -= b;
    }
    friend SpectralVectorField operator-(SpectralVectorField a) { return a *= -1.0; }
    friend SpectralVectorField operator*(double s, SpectralVectorField a) { return a *= s; }
    friend SpectralVectorField operator*(cplx s, SpectralVectorField a) { return a *= s; }
};

// (f2, -f1)
inline SpectralVectorField perp(const SpectralVectorField& f) { return {f.y, -f.x}; }

}  // namespace beltrami
