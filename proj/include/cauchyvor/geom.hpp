#pragma once

#include <cmath>
#include <stdexcept>

namespace cauchyvor {

struct Vec2 {
    double x = 0.0;
    double y = 0.0;

    Vec2() = default;
    Vec2(double x_, double y_) : x(x_), y(y_) {}

    Vec2 operator+(Vec2 o) const { return {x + o.x, y + o.y}; }
    Vec2 operator-(Vec2 o) const { return {x - o.x, y - o.y}; }
    Vec2 operator*(double k) const { return {k * x, k * y}; }
    Vec2 operator/(double k) const { return {x / k, y / k}; }
};

inline Vec2 operator*(double k, Vec2 v) { return {k * v.x, k * v.y}; }
inline double dot(Vec2 a, Vec2 b) { return a.x * b.x + a.y * b.y; }
inline double cross(Vec2 a, Vec2 b) { return a.x * b.y - a.y * b.x; }
inline double norm2(Vec2 a) { return dot(a, a); }
inline double norm(Vec2 a) { return std::sqrt(norm2(a)); }
inline double dist(Vec2 a, Vec2 b) { return norm(a - b); }

// Oriented line a*x + b*y + c = 0, normalized so a^2 + b^2 = 1 with the
// sign fixed by a > 0 (or a = 0, b > 0). The normalization makes lines
// comparable as value triples.
struct LineCoeffs {
    double a = 0.0;
    double b = 0.0;
    double c = 0.0;

    static LineCoeffs normalized(double a, double b, double c) {
        const double n = std::hypot(a, b);
        if (!(n > 0.0) || !std::isfinite(n))
            throw std::invalid_argument("LineCoeffs: degenerate direction");
        double s = 1.0 / n;
        if (a < 0.0 || (a == 0.0 && b < 0.0)) s = -s;
        return LineCoeffs{a * s, b * s, c * s};
    }

    double eval(Vec2 p) const { return a * p.x + b * p.y + c; }
};

inline double line_max_abs_diff(const LineCoeffs& u, const LineCoeffs& v) {
    return std::max({std::abs(u.a - v.a), std::abs(u.b - v.b), std::abs(u.c - v.c)});
}

}  // namespace cauchyvor
