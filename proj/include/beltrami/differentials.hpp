#pragma once

#include "beltrami/expansion.hpp"

namespace beltrami {

// Stand-in for H(eta) and M(eta): the Taylor partial sums through order K at a fixed eta.
class TruncatedOperator {
public:
    TruncatedOperator(SpectralScalarField eta, int K, const PhysicalParams& params,
                      const ExpansionOptions& opts = {});

    const SpectralScalarField& eta() const { return eta_; }
    int order() const { return K_; }
    const PhysicalParams& params() const { return params_; }
    const ExpansionOptions& options() const { return opts_; }
    const SpectralVectorField& grad_eta() const { return grad_eta_; }
    // 1 / (1 + |∇eta|^2)
    const SpectralScalarField& inv_metric() const { return inv_metric_; }

    SpectralScalarField apply_H(const HodgeArgument& arg) const;
    SpectralVectorField apply_M(const VectorArgument& arg) const;

private:
    SpectralScalarField eta_;
    int K_;
    PhysicalParams params_;
    ExpansionOptions opts_;
    SpectralVectorField grad_eta_;
    SpectralScalarField inv_metric_;
};

SpectralScalarField dH_apply(const TruncatedOperator& op, const SpectralScalarField& delta_eta,
                             const HodgeArgument& arg);
SpectralVectorField dM_apply(const TruncatedOperator& op, const SpectralScalarField& delta_eta,
                             const VectorArgument& arg);

}  // namespace beltrami
