#pragma once

#include <algorithm>
#include <cmath>

namespace spot {

constexpr double pi() { return 3.141592653589793238462643383279502884; }
constexpr double two_pi() { return 2.0 * pi(); }

struct Vec2 {
    double x = 0.0;
    double y = 0.0;

    Vec2 operator+(Vec2 o) const { return {x + o.x, y + o.y}; }
    Vec2 operator-(Vec2 o) const { return {x - o.x, y - o.y}; }
    Vec2 operator*(double s) const { return {x * s, y * s}; }
    Vec2 operator/(double s) const { return {x / s, y / s}; }
    Vec2& operator+=(Vec2 o) { x += o.x; y += o.y; return *this; }
    Vec2& operator-=(Vec2 o) { x -= o.x; y -= o.y; return *this; }
};

inline Vec2 operator*(double s, Vec2 v) { return v * s; }
inline double dot(Vec2 a, Vec2 b) { return a.x * b.x + a.y * b.y; }
inline double cross(Vec2 a, Vec2 b) { return a.x * b.y - a.y * b.x; }
inline double norm2(Vec2 v) { return dot(v, v); }
inline double norm(Vec2 v) { return std::hypot(v.x, v.y); }
inline double dist(Vec2 a, Vec2 b) { return norm(a - b); }

// Closest point on segment [a, b] to p.
inline Vec2 closest_on_segment(Vec2 p, Vec2 a, Vec2 b) {
    const Vec2 ab = b - a;
    const double len2 = norm2(ab);
    if (len2 == 0.0) return a;
    const double t = std::clamp(dot(p - a, ab) / len2, 0.0, 1.0);
    return a + t * ab;
}

inline double point_segment_dist2(Vec2 p, Vec2 a, Vec2 b) {
    return norm2(p - closest_on_segment(p, a, b));
}

inline double point_segment_dist(Vec2 p, Vec2 a, Vec2 b) {
    return std::sqrt(point_segment_dist2(p, a, b));
}

struct BBox {
    Vec2 lo{0.0, 0.0};
    Vec2 hi{0.0, 0.0};

    void expand(Vec2 p) {
        lo.x = std::min(lo.x, p.x);
        lo.y = std::min(lo.y, p.y);
        hi.x = std::max(hi.x, p.x);
        hi.y = std::max(hi.y, p.y);
    }
    void pad(double m) {
        lo.x -= m; lo.y -= m;
        hi.x += m; hi.y += m;
    }
    bool contains(Vec2 p) const {
        return p.x >= lo.x && p.x <= hi.x && p.y >= lo.y && p.y <= hi.y;
    }
    double width() const { return hi.x - lo.x; }
    double height() const { return hi.y - lo.y; }
};

inline BBox bbox_of_point(Vec2 p) { return {p, p}; }

}  // namespace spot
