#pragma once

#include <vector>

#include "beltrami/field.hpp"
#include "beltrami/lattice.hpp"
#include "beltrami/spectral.hpp"

namespace beltrami {

struct HodgeArgument {
    CVec2 gamma{};
    SpectralScalarField phi;
};

struct VectorArgument {
    CVec2 gamma{};
    SpectralVectorField g;
};

template <class F>
struct TaylorSeries {
    std::vector<F> terms;

    int order() const { return int(terms.size()) - 1; }
    const F& operator[](std::size_t k) const { return terms.at(k); }

    F partial_sum(int K) const {
        F s = terms.at(0);
        for (int k = 1; k <= K; ++k) s += terms.at(std::size_t(k));
        return s;
    }
    F sum() const { return partial_sum(order()); }
};

using ScalarSeries = TaylorSeries<SpectralScalarField>;
using VectorSeries = TaylorSeries<SpectralVectorField>;

// c(|k|) and t(|k|) tabulated on the index box of a field.
class MultiplierTable {
public:
    MultiplierTable(const LatticePair& lattice, int N, const PhysicalParams& params);

    const PhysicalParams& params() const { return params_; }
    int N() const { return N_; }
    double c(std::size_t flat) const { return c_[flat]; }
    double t(std::size_t flat) const { return t_[flat]; }

    SpectralScalarField H0(const SpectralScalarField& phi) const;
    // Each returns the vector multiplier applied to the scalar D·g⊥ divided by |k|^2.
    SpectralVectorField L1(const SpectralVectorField& g) const;
    SpectralVectorField L2(const SpectralVectorField& g) const;
    SpectralVectorField L(const SpectralVectorField& g) const;

private:
    PhysicalParams params_;
    LatticePair lattice_;
    int N_;
    std::vector<double> c_, t_;
};

enum class LKind { L, L1, L2 };

SpectralScalarField H0_apply(const HodgeArgument& arg, const PhysicalParams& params);
SpectralVectorField M0_apply(const VectorArgument& arg, const PhysicalParams& params);
SpectralVectorField L_apply(const SpectralVectorField& g, LKind which, const PhysicalParams& params);

struct ExpansionOptions {
    double padding = kDefaultPadding;
};

struct KUTerms {
    std::vector<SpectralVectorField> K;
    std::vector<SpectralScalarField> u;
};

// K_k and u_k for k = 0..K given H_0..H_K at the same (eta, arg).
KUTerms expand_K_u_H(const SpectralScalarField& eta, const HodgeArgument& arg, int K,
                     const ScalarSeries& H_terms, const PhysicalParams& params,
                     const ExpansionOptions& opts = {});

ScalarSeries taylor_H(const SpectralScalarField& eta, const HodgeArgument& arg, int K,
                      const PhysicalParams& params, const ExpansionOptions& opts = {});

VectorSeries taylor_M(const SpectralScalarField& eta, const VectorArgument& arg, int K,
                      const PhysicalParams& params, const ExpansionOptions& opts = {});

// Terms S_0 = 0, S_1, ..., S_K.
VectorSeries expand_S(const SpectralScalarField& eta, const Vec2& c, double alpha, int K,
                      const ExpansionOptions& opts = {});

// T_k = sum_j M_{k-j}(eta)(0, S_j(eta)) with S built from velocity c.
VectorSeries taylor_T(const SpectralScalarField& eta, const Vec2& c, int K,
                      const PhysicalParams& params, const ExpansionOptions& opts = {});

// Mean of the product f g, computed directly from the coefficients.
cplx mean_product(const SpectralScalarField& f, const SpectralScalarField& g);

}  // namespace beltrami
