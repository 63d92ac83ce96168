#pragma once

#include <cmath>
#include <complex>

namespace beltrami {

using cplx = std::complex<double>;

struct Vec2 {
    double x = 0.0;
    double y = 0.0;

    constexpr Vec2& operator+=(const Vec2& o) { x += o.x; y += o.y; return *this; }
    constexpr Vec2& operator-=(const Vec2& o) { x -= o.x; y -= o.y; return *this; }
    constexpr Vec2& operator*=(double s) { x *= s; y *= s; return *this; }

    friend constexpr Vec2 operator+(Vec2 a, const Vec2& b) { return a += b; }
    friend constexpr Vec2 operator-(Vec2 a, const Vec2& b) { return a -= b; }
    friend constexpr Vec2 operator-(const Vec2& a) { return {-a.x, -a.y}; }
    friend constexpr Vec2 operator*(double s, Vec2 a) { return a *= s; }
    friend constexpr Vec2 operator*(Vec2 a, double s) { return a *= s; }
    friend constexpr Vec2 operator/(Vec2 a, double s) { return {a.x / s, a.y / s}; }
    friend constexpr bool operator==(const Vec2&, const Vec2&) = default;
};

// f⊥ = (f2, -f1)
constexpr Vec2 perp(const Vec2& v) { return {v.y, -v.x}; }
constexpr double dot(const Vec2& a, const Vec2& b) { return a.x * b.x + a.y * b.y; }
inline double norm(const Vec2& v) { return std::hypot(v.x, v.y); }
constexpr double norm2(const Vec2& v) { return v.x * v.x + v.y * v.y; }

struct CVec2 {
    cplx x{};
    cplx y{};

    CVec2() = default;
    CVec2(cplx a, cplx b) : x(a), y(b) {}
    CVec2(const Vec2& v) : x(v.x), y(v.y) {}

    CVec2& operator+=(const CVec2& o) { x += o.x; y += o.y; return *this; }
    CVec2& operator-=(const CVec2& o) { x -= o.x; y -= o.y; return *this; }
    friend CVec2 operator+(CVec2 a, const CVec2& b) { return a += b; }
    friend CVec2 operator-(CVec2 a, const CVec2& b) { return a -= b; }
    friend CVec2 operator-(const CVec2& a) { return {-a.x, -a.y}; }
    friend CVec2 operator*(cplx s, const CVec2& a) { return {s * a.x, s * a.y}; }
    friend CVec2 operator*(const CVec2& a, cplx s) { return {s * a.x, s * a.y}; }
    friend bool operator==(const CVec2&, const CVec2&) = default;
};

inline CVec2 perp(const CVec2& v) { return {v.y, -v.x}; }
inline cplx dot(const CVec2& a, const CVec2& b) { return a.x * b.x + a.y * b.y; }

}  // namespace beltrami
