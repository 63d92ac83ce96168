#pragma once

#include <functional>
#include <span>
#include <variant>
#include <vector>

#include "beltrami/field.hpp"

namespace beltrami {

inline constexpr double kDefaultPadding = 2.0;

enum class CalculusKind { grad, perp_grad, div, perp_div };

using AnyField = std::variant<SpectralScalarField, SpectralVectorField>;

// Exact Fourier differentiation: grad -> ik, perp_grad -> i k⊥, div -> ik·, perp_div -> ik⊥·.
SpectralVectorField grad(const SpectralScalarField& f);
SpectralVectorField perp_grad(const SpectralScalarField& f);
SpectralScalarField div(const SpectralVectorField& f);
SpectralScalarField perp_div(const SpectralVectorField& f);
SpectralScalarField laplacian(const SpectralScalarField& f);
SpectralScalarField dx(const SpectralScalarField& f);
SpectralScalarField dy(const SpectralScalarField& f);
// Throws ErrorKind::arity_mismatch when kind does not fit the field arity.
AnyField calculus(const AnyField& f, CalculusKind kind);

// Mode k != 0 multiplied by -1/|k|^2; the mean is discarded.
SpectralScalarField inv_laplacian(const SpectralScalarField& f);
SpectralVectorField inv_laplacian(const SpectralVectorField& f);

cplx mean(const SpectralScalarField& f);
CVec2 mean(const SpectralVectorField& f);

SpectralScalarField zero_mean(SpectralScalarField f);

// Mode-by-mode multiplication by m(k); the k = 0 mode receives m evaluated at the zero vector.
SpectralScalarField apply_multiplier(const SpectralScalarField& f,
                                     const std::function<cplx(const Vec2&)>& m);

// Smallest 2^a 3^b 5^c grid side not below padding * (2N + 1).
int grid_size(int N, double padding = kDefaultPadding);

// Values of f at the points (j1/M) lambda1 + (j2/M) lambda2, row-major in (j1, j2).
std::vector<cplx> to_grid(const SpectralScalarField& f, int M);
// Inverse of to_grid followed by truncation to the box [-N, N]^2. With hermitian set the
// result is symmetrised so that coeff(-m) == conj(coeff(m)) holds exactly.
SpectralScalarField from_grid(std::span<const cplx> values, int M, const LatticePair& lattice,
                              int N, bool hermitian);

using PointwiseFn = std::function<cplx(std::span<const cplx>)>;

// Evaluates fn pointwise on the padded physical grid. fn must map real arguments to real
// values; when every input is Hermitian the output is made exactly Hermitian.
SpectralScalarField pointwise(std::span<const SpectralScalarField* const> inputs,
                              const PointwiseFn& fn, double padding = kDefaultPadding);
SpectralScalarField pointwise(std::initializer_list<const SpectralScalarField*> inputs,
                              const PointwiseFn& fn, double padding = kDefaultPadding);

SpectralScalarField product(const SpectralScalarField& f, const SpectralScalarField& g,
                            double padding = kDefaultPadding);
SpectralVectorField product(const SpectralScalarField& f, const SpectralVectorField& g,
                            double padding = kDefaultPadding);
SpectralScalarField dot(const SpectralVectorField& f, const SpectralVectorField& g,
                        double padding = kDefaultPadding);
SpectralVectorField operator*(const CVec2& v, const SpectralScalarField& f);

// Maximum of |f| over the padded grid.
double sup_norm(const SpectralScalarField& f, double padding = kDefaultPadding);

}  // namespace beltrami
