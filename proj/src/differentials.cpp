#include "beltrami/differentials.hpp"

#include "beltrami/error.hpp"

namespace beltrami {

namespace {

SpectralScalarField reciprocal_metric(const SpectralVectorField& g, double padding) {
    return pointwise({&g.x, &g.y},
                     [](std::span<const cplx> a) { return 1.0 / (1.0 + a[0] * a[0] + a[1] * a[1]); },
                     padding);
}

}  // namespace

TruncatedOperator::TruncatedOperator(SpectralScalarField eta, int K, const PhysicalParams& params,
                                     const ExpansionOptions& opts)
    : eta_(std::move(eta)),
      K_(K),
      params_(params),
      opts_(opts),
      grad_eta_(grad(eta_)),
      inv_metric_(reciprocal_metric(grad_eta_, opts.padding)) {
    if (K < 1) throw Error(ErrorKind::order_mismatch, "truncated operator needs K >= 1");
}

SpectralScalarField TruncatedOperator::apply_H(const HodgeArgument& arg) const {
    return taylor_H(eta_, arg, K_, params_, opts_).sum();
}

SpectralVectorField TruncatedOperator::apply_M(const VectorArgument& arg) const {
    return taylor_M(eta_, arg, K_, params_, opts_).sum();
}

SpectralScalarField dH_apply(const TruncatedOperator& op, const SpectralScalarField& delta_eta,
                             const HodgeArgument& arg) {
    const double a = op.params().alpha;
    const double pad = op.options().padding;
    const SpectralScalarField H = op.apply_H(arg);
    SpectralVectorField Kv = grad(arg.phi) + (-a) * perp_grad(inv_laplacian(H));
    Kv.add_constant(arg.gamma);
    const SpectralScalarField u =
        product(dot(Kv, op.grad_eta(), pad) + H, op.inv_metric(), pad);
    const SpectralVectorField V = Kv - product(u, op.grad_eta(), pad);
    const SpectralVectorField W = product(delta_eta, perp(V), pad);
    SpectralScalarField phi =
        (-a) * inv_laplacian(div(W)) - product(u, delta_eta, pad);
    const HodgeArgument child{(-a) * mean(W), zero_mean(std::move(phi))};
    return op.apply_H(child) - div(product(delta_eta, V, pad));
}

SpectralVectorField dM_apply(const TruncatedOperator& op, const SpectralScalarField& delta_eta,
                             const VectorArgument& arg) {
    const double a = op.params().alpha;
    const double pad = op.options().padding;
    const SpectralVectorField M = op.apply_M(arg);
    const SpectralScalarField u =
        product(div(perp(arg.g)) - dot(M, op.grad_eta(), pad), op.inv_metric(), pad);
    const SpectralVectorField W = M + product(u, op.grad_eta(), pad);
    const SpectralVectorField Wpe = product(delta_eta, perp(W), pad);
    return op.apply_M({a * mean(Wpe), Wpe}) - grad(product(u, delta_eta, pad)) + a * Wpe;
}

}  // namespace beltrami
