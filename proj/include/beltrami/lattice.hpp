#pragma once

#include "beltrami/vec2.hpp"

namespace beltrami {

struct ModeIndex {
    int m1 = 0;
    int m2 = 0;

    friend constexpr ModeIndex operator-(const ModeIndex& m) { return {-m.m1, -m.m2}; }
    friend constexpr ModeIndex operator+(const ModeIndex& a, const ModeIndex& b) {
        return {a.m1 + b.m1, a.m2 + b.m2};
    }
    friend constexpr auto operator<=>(const ModeIndex&, const ModeIndex&) = default;
};

class LatticePair {
public:
    // Throws ErrorKind::degenerate_lattice when |det(lambda1, lambda2)| <= 1e-12.
    static LatticePair build(Vec2 lambda1, Vec2 lambda2);

    const Vec2& lambda1() const { return lambda1_; }
    const Vec2& lambda2() const { return lambda2_; }
    const Vec2& k1() const { return k1_; }
    const Vec2& k2() const { return k2_; }
    double cell_area() const { return area_; }

    Vec2 mode(int m1, int m2) const { return double(m1) * k1_ + double(m2) * k2_; }
    Vec2 mode(ModeIndex m) const { return mode(m.m1, m.m2); }
    // Point of the fundamental cell at fractional coordinates (s1, s2).
    Vec2 point(double s1, double s2) const { return s1 * lambda1_ + s2 * lambda2_; }

    friend bool operator==(const LatticePair&, const LatticePair&) = default;

private:
    LatticePair() = default;

    Vec2 lambda1_, lambda2_, k1_, k2_;
    double area_ = 0.0;
};

struct PhysicalParams {
    double alpha = 0.0;
    double gravity = 1.0;
    double beta = 0.0;
    double depth = 1.0;
    Vec2 c0{};

    // Throws ErrorKind::config on depth <= 0, gravity <= 0, beta < 0 or non-finite values.
    void validate() const;
};

}  // namespace beltrami
