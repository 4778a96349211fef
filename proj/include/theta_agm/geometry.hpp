#ifndef THETA_AGM_GEOMETRY_HPP
#define THETA_AGM_GEOMETRY_HPP

#include <cmath>

#include "theta_agm/errors.hpp"

namespace theta_agm {

struct Vec2 {
    double x = 0.0;
    double y = 0.0;

    Vec2 operator+(Vec2 o) const { return {x + o.x, y + o.y}; }
    Vec2 operator-(Vec2 o) const { return {x - o.x, y - o.y}; }
    Vec2 operator-() const { return {-x, -y}; }
    Vec2 operator*(double s) const { return {x * s, y * s}; }
    double dot(Vec2 o) const { return x * o.x + y * o.y; }
    double norm_sq() const { return x * x + y * y; }
    double norm() const { return std::hypot(x, y); }
};

inline Vec2 operator*(double s, Vec2 v) { return v * s; }

/// 2x2 matrix, row-major.
struct Mat2 {
    double m00 = 1.0, m01 = 0.0;
    double m10 = 0.0, m11 = 1.0;

    static Mat2 identity() { return {}; }

    double det() const { return m00 * m11 - m01 * m10; }

    Mat2 inverse() const {
        const double d = det();
        if (d == 0.0) throw DomainError("Mat2: singular matrix");
        return {m11 / d, -m01 / d, -m10 / d, m00 / d};
    }

    Mat2 transpose() const { return {m00, m10, m01, m11}; }

    Vec2 operator*(Vec2 v) const { return {m00 * v.x + m01 * v.y, m10 * v.x + m11 * v.y}; }

    Mat2 operator*(const Mat2& o) const {
        return {m00 * o.m00 + m01 * o.m10, m00 * o.m01 + m01 * o.m11,
                m10 * o.m00 + m11 * o.m10, m10 * o.m01 + m11 * o.m11};
    }

    Mat2 operator*(double s) const { return {m00 * s, m01 * s, m10 * s, m11 * s}; }

    Vec2 col(int j) const { return j == 0 ? Vec2{m00, m10} : Vec2{m01, m11}; }
    Vec2 row(int i) const { return i == 0 ? Vec2{m00, m01} : Vec2{m10, m11}; }
};

/// Standard symplectic form sigma(z, w) = z1 w2 - z2 w1 = z . (J w).
inline double symplectic_form(Vec2 z, Vec2 w) { return z.x * w.y - z.y * w.x; }

/// The standard symplectic matrix J; in the plane it is the rotation by
/// 90 degrees.
inline Mat2 symplectic_j() { return {0.0, 1.0, -1.0, 0.0}; }

} // namespace theta_agm

#endif
