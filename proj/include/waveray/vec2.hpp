#pragma once

#include <cmath>

namespace waveray {

// 2D vector in the (x, z) plane. All quantities dimensionless
// (lengths in w0, momenta in p0).
struct Vec2 {
    double x = 0.0;
    double z = 0.0;

    Vec2& operator+=(const Vec2& o) { x += o.x; z += o.z; return *this; }
    Vec2& operator-=(const Vec2& o) { x -= o.x; z -= o.z; return *this; }
    Vec2& operator*=(double c) { x *= c; z *= c; return *this; }
};

inline Vec2 operator+(Vec2 a, const Vec2& b) { return a += b; }
inline Vec2 operator-(Vec2 a, const Vec2& b) { return a -= b; }
inline Vec2 operator*(double c, Vec2 a) { return a *= c; }
inline Vec2 operator*(Vec2 a, double c) { return a *= c; }

inline double dot(const Vec2& a, const Vec2& b) { return a.x * b.x + a.z * b.z; }
inline double norm(const Vec2& a) { return std::sqrt(a.x * a.x + a.z * a.z); }

}  // namespace waveray
