#pragma once

#include <cmath>

namespace holescan {

struct Vec2 {
    double x = 0.0;
    double y = 0.0;

    Vec2 operator+(Vec2 o) const { return {x + o.x, y + o.y}; }
    Vec2 operator-(Vec2 o) const { return {x - o.x, y - o.y}; }
    Vec2 operator*(double s) const { return {x * s, y * s}; }
    Vec2& operator+=(Vec2 o) { x += o.x; y += o.y; return *this; }
    Vec2& operator-=(Vec2 o) { x -= o.x; y -= o.y; return *this; }
    bool operator==(const Vec2&) const = default;

    double norm2() const { return x * x + y * y; }
    double norm() const { return std::sqrt(norm2()); }
};

inline double distance(Vec2 a, Vec2 b) { return (a - b).norm(); }
inline double dot(Vec2 a, Vec2 b) { return a.x * b.x + a.y * b.y; }

struct Circle {
    Vec2 center;
    double radius = 0.0;

    bool contains(Vec2 p) const { return distance(center, p) <= radius; }
};

/// Distance from point p to the segment [a, b].
inline double point_segment_distance(Vec2 p, Vec2 a, Vec2 b) {
    const Vec2 ab = b - a;
    const double len2 = ab.norm2();
    if (len2 == 0.0) return distance(p, a);
    double t = dot(p - a, ab) / len2;
    if (t < 0.0) t = 0.0;
    if (t > 1.0) t = 1.0;
    return distance(p, a + ab * t);
}

}  // namespace holescan
