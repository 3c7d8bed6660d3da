#pragma once

#include <cmath>

// Hyperboloid model of the hyperbolic plane: points satisfy
// x^2 + y^2 - z^2 = -1 with z > 0.  Geodesic lines are cut out by planes
// through the origin and are stored by a unit spacelike normal.

namespace hypgraft::hyp {

struct Vec3 {
    double x = 0, y = 0, z = 0;

    friend Vec3 operator+(Vec3 a, Vec3 b) { return {a.x + b.x, a.y + b.y, a.z + b.z}; }
    friend Vec3 operator-(Vec3 a, Vec3 b) { return {a.x - b.x, a.y - b.y, a.z - b.z}; }
    friend Vec3 operator*(double s, Vec3 a) { return {s * a.x, s * a.y, s * a.z}; }
    friend Vec3 operator-(Vec3 a) { return {-a.x, -a.y, -a.z}; }
};

inline double mink(Vec3 a, Vec3 b) { return a.x * b.x + a.y * b.y - a.z * b.z; }

// Minkowski cross product: mink(cross(a, b), a) = mink(cross(a, b), b) = 0.
inline Vec3 cross(Vec3 a, Vec3 b)
{
    return {a.y * b.z - a.z * b.y, a.z * b.x - a.x * b.z, -(a.x * b.y - a.y * b.x)};
}

inline Vec3 origin() { return {0, 0, 1}; }

// 2 asinh(|p - q| / 2) with the Minkowski norm of the chord; unlike
// acosh(-<p, q>) this keeps relative accuracy for nearby points.
inline double distance(Vec3 p, Vec3 q)
{
    const Vec3 d = p - q;
    const double chord2 = mink(d, d);
    return chord2 <= 0 ? 0.0 : 2 * std::asinh(std::sqrt(chord2) / 2);
}

// Rescale a timelike vector with positive z onto the hyperboloid.
inline Vec3 normalize_point(Vec3 v)
{
    return (1 / std::sqrt(-mink(v, v))) * v;
}

inline Vec3 normalize_space(Vec3 v)
{
    return (1 / std::sqrt(mink(v, v))) * v;
}

// Signed distance from p to the line with unit normal n.
inline double signed_distance_to_line(Vec3 p, Vec3 n) { return std::asinh(mink(p, n)); }

// Klein disk coordinates of a point.
struct Klein {
    double u = 0, v = 0;
};

inline Klein to_klein(Vec3 p) { return {p.x / p.z, p.y / p.z}; }

inline Vec3 from_klein(Klein k)
{
    return normalize_point(Vec3{k.u, k.v, 1});
}

// Boost taking `center` to the origin, and back.
class Recentering {
public:
    Recentering() = default;
    explicit Recentering(Vec3 center)
    {
        const double r = std::hypot(center.x, center.y);
        if (r > 0) {
            ux_ = center.x / r;
            uy_ = center.y / r;
            ch_ = center.z;
            sh_ = r;
        }
    }

    Vec3 to_local(Vec3 v) const { return boost(v, -sh_); }
    Vec3 to_global(Vec3 v) const { return boost(v, sh_); }

private:
    Vec3 boost(Vec3 v, double sh) const
    {
        const double par = ux_ * v.x + uy_ * v.y;
        const double px = v.x - par * ux_, py = v.y - par * uy_;
        const double npar = ch_ * par + sh * v.z;
        const double nz = sh * par + ch_ * v.z;
        return {px + npar * ux_, py + npar * uy_, nz};
    }

    double ux_ = 1, uy_ = 0, ch_ = 1, sh_ = 0;
};

// Position, unit tangent and left normal of a moving frame.
struct Frame {
    Vec3 pos = origin();
    Vec3 tangent = {1, 0, 0};
    Vec3 normal = {0, 1, 0};

    // Point at signed arclength s along the current geodesic.
    Vec3 along(double s) const { return std::cosh(s) * pos + std::sinh(s) * tangent; }

    // Point at signed distance t along the normal from along(s).
    Vec3 offset(double s, double t) const
    {
        return std::cosh(t) * along(s) + std::sinh(t) * normal;
    }

    Frame advanced(double s) const
    {
        return {along(s), std::sinh(s) * pos + std::cosh(s) * tangent, normal};
    }

    Frame turned_left() const { return {pos, normal, -tangent}; }
    Frame turned_right() const { return {pos, -normal, tangent}; }
};

} // namespace hypgraft::hyp
