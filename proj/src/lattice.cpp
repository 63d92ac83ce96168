#include "beltrami/lattice.hpp"

#include <cmath>
#include <numbers>
#include <sstream>

#include "beltrami/error.hpp"

namespace beltrami {

LatticePair LatticePair::build(Vec2 lambda1, Vec2 lambda2) {
    const double det = lambda1.x * lambda2.y - lambda2.x * lambda1.y;
    if (!std::isfinite(det) || std::abs(det) <= 1e-12) {
        std::ostringstream os;
        os << "degenerate lattice: det(lambda1, lambda2) = " << det;
        throw Error(ErrorKind::degenerate_lattice, os.str());
    }
    const double s = 2.0 * std::numbers::pi / det;
    LatticePair l;
    l.lambda1_ = lambda1;
    l.lambda2_ = lambda2;
    l.k1_ = {s * lambda2.y, -s * lambda2.x};
    l.k2_ = {-s * lambda1.y, s * lambda1.x};
    l.area_ = std::abs(det);
    return l;
}

void PhysicalParams::validate() const {
    auto fail = [](const char* msg) { throw Error(ErrorKind::config, msg); };
    if (!std::isfinite(alpha)) fail("alpha must be finite");
    if (!(gravity > 0.0) || !std::isfinite(gravity)) fail("gravity must be positive");
    if (!(beta >= 0.0) || !std::isfinite(beta)) fail("beta must be non-negative");
    if (!(depth > 0.0) || !std::isfinite(depth)) fail("depth must be positive");
    if (!std::isfinite(c0.x) || !std::isfinite(c0.y)) fail("c0 must be finite");
}

}  // namespace beltrami
