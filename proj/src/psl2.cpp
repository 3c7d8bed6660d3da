#include "hypgraft/psl2.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>

#include "hypgraft/errors.hpp"
#include "hypgraft/hyptrig.hpp"

namespace hypgraft::psl2 {

namespace {

constexpr double inf = std::numeric_limits<double>::infinity();
constexpr double trace_tie = 1e-12;
constexpr double parabolic_tol = 1e-10;

Isometry diagonal(double tau) { return {std::exp(tau / 2), 0, 0, std::exp(-tau / 2)}; }

Isometry unit_rotation(double angle)
{
    return {std::cos(angle / 2), std::sin(angle / 2), -std::sin(angle / 2), std::cos(angle / 2)};
}

// Rotation about i taking infinity to xi.
Isometry boundary_rotation(BoundaryPoint xi)
{
    if (is_infinite(xi)) return {};
    return unit_rotation(2 * std::atan2(1.0, -xi));
}

std::string format_boundary(BoundaryPoint x)
{
    if (is_infinite(x)) return "inf";
    std::ostringstream os;
    os << x;
    return os.str();
}

std::string format_point(Complex z)
{
    std::ostringstream os;
    os << z.real() << (z.imag() < 0 ? "-" : "+") << std::fabs(z.imag()) << "i";
    return os.str();
}

void require_interior(Complex p)
{
    if (!(p.imag() > 0) || !std::isfinite(p.real()) || !std::isfinite(p.imag()))
        throw DomainError("point must lie in the upper half plane");
}

void require_axis(const Axis& axis)
{
    if (std::isnan(axis.from) || std::isnan(axis.to)) throw DomainError("axis endpoint is not a number");
    const bool same = is_infinite(axis.from) ? is_infinite(axis.to) : axis.from == axis.to;
    if (same) throw DomainError("axis endpoints must differ");
}

// Map with 0 -> from and infinity -> to.
Isometry endpoint_map(const Axis& axis)
{
    require_axis(axis);
    const double u = axis.from, v = axis.to;
    if (is_infinite(v)) return {1, u, 0, 1};
    if (is_infinite(u)) return {v, -1, 1, 0};
    return v > u ? Isometry(v, u, 1, 1) : Isometry(v, -u, 1, -1);
}

} // namespace

bool is_infinite(BoundaryPoint xi) { return std::isinf(xi); }

Isometry::Isometry() : m_{1, 0, 0, 1} {}

Isometry::Isometry(double a, double b, double c, double d) : m_{a, b, c, d}
{
    for (double x : m_)
        if (!std::isfinite(x)) throw DomainError("matrix entries must be finite");
    const double det = a * d - b * c;
    if (!(det > 0)) throw DomainError("matrix must have positive determinant");
    const double s = 1 / std::sqrt(det);
    for (double& x : m_) x *= s;
    bool flip = false;
    if (std::fabs(trace()) <= trace_tie) {
        for (double x : m_)
            if (x != 0) {
                flip = x < 0;
                break;
            }
    } else {
        flip = trace() < 0;
    }
    if (flip)
        for (double& x : m_) x = -x;
    double norm2 = 0;
    for (double x : m_) norm2 += x * x;
    if (std::fabs(m_[0] * m_[3] - m_[1] * m_[2] - 1) > 1e-12 * std::max(1.0, norm2))
        throw DomainError("matrix is too ill-conditioned to normalise");
}

Isometry Isometry::rotation(Complex center, double angle)
{
    require_interior(center);
    const double ry = std::sqrt(center.imag());
    const Isometry move(ry, center.real() / ry, 0, 1 / ry);
    return move * unit_rotation(angle) * move.inverse();
}

Isometry Isometry::parabolic(BoundaryPoint xi, double parameter)
{
    const Isometry r = boundary_rotation(xi);
    return r * Isometry(1, parameter, 0, 1) * r.inverse();
}

Isometry Isometry::inverse() const { return {m_[3], -m_[1], -m_[2], m_[0]}; }

Complex Isometry::apply(Complex z) const { return (m_[0] * z + m_[1]) / (m_[2] * z + m_[3]); }

BoundaryPoint Isometry::apply_boundary(BoundaryPoint x) const
{
    if (is_infinite(x)) return m_[2] == 0 ? inf : m_[0] / m_[2];
    const double den = m_[2] * x + m_[3];
    if (den == 0) return inf;
    return (m_[0] * x + m_[1]) / den;
}

Complex Isometry::derivative(Complex z) const
{
    const Complex den = m_[2] * z + m_[3];
    return 1.0 / (den * den);
}

Isometry operator*(const Isometry& g, const Isometry& h)
{
    const auto& x = g.m_;
    const auto& y = h.m_;
    return {x[0] * y[0] + x[1] * y[2], x[0] * y[1] + x[1] * y[3], x[2] * y[0] + x[3] * y[2],
            x[2] * y[1] + x[3] * y[3]};
}

double distance(const Isometry& g, const Isometry& h)
{
    double minus = 0, plus = 0;
    for (int k = 0; k < 4; ++k) {
        const double x = g.entries()[k], y = h.entries()[k];
        minus += (x - y) * (x - y);
        plus += (x + y) * (x + y);
    }
    return std::sqrt(std::min(minus, plus));
}

double hyperbolic_distance(Complex z, Complex w)
{
    require_interior(z);
    require_interior(w);
    return 2 * std::asinh(std::abs(z - w) / (2 * std::sqrt(z.imag() * w.imag())));
}

double displacement(const Isometry& g) { return hyperbolic_distance({0, 1}, g.apply({0, 1})); }

Isometry axis_frame(const Axis& axis)
{
    const Isometry h = endpoint_map(axis);
    const double r = std::abs(h.inverse().apply({0, 1}));
    return h * Isometry(std::sqrt(r), 0, 0, 1 / std::sqrt(r));
}

double distance_to_axis(const Axis& axis, Complex z)
{
    require_interior(z);
    const Complex w = endpoint_map(axis).inverse().apply(z);
    return std::asinh(std::fabs(w.real()) / w.imag());
}

Isometry translation(const Axis& axis, double tau)
{
    const Isometry f = axis_frame(axis);
    return f * diagonal(tau) * f.inverse();
}

Complex point_on_axis(const Axis& axis, double sigma)
{
    return axis_frame(axis).apply({0, std::exp(sigma)});
}

Isometry half_turn(const Axis& axis, double sigma)
{
    return Isometry::rotation(point_on_axis(axis, sigma), trig::pi);
}

BoundaryPoint from_disc_boundary(double angle)
{
    const double s = std::sin(angle / 2);
    if (std::fabs(s) < 1e-300) return inf;
    return -std::cos(angle / 2) / s;
}

Axis axis_from_disc(double distance, double angle)
{
    if (!(distance >= 0) || !std::isfinite(distance)) throw DomainError("axis distance must be finite and non-negative");
    const double spread = std::acos(std::tanh(distance));
    return {from_disc_boundary(angle - spread), from_disc_boundary(angle + spread)};
}

Classification classify_isometry(const Isometry& g)
{
    Classification out;
    const double a = g.a(), b = g.b(), c = g.c(), d = g.d();
    const double t = std::fabs(g.trace());
    const double scale = std::fabs(a) + std::fabs(b) + std::fabs(c) + std::fabs(d);

    if (std::fabs(t - 2) <= parabolic_tol) {
        const double off = std::max({std::fabs(a - 1), std::fabs(b), std::fabs(c), std::fabs(d - 1)});
        if (off <= parabolic_tol) {
            out.kind = IsometryKind::Identity;
            return out;
        }
        out.kind = IsometryKind::Parabolic;
        out.fixed_point = std::fabs(c) <= 1e-14 * scale ? inf : (a - d) / (2 * c);
        return out;
    }
    if (t < 2) {
        out.kind = IsometryKind::Elliptic;
        Complex z = Complex(a - d, std::sqrt(4 - t * t)) / (2 * c);
        if (z.imag() < 0) z = std::conj(z);
        out.center = z;
        out.rotation_angle = std::arg(g.derivative(z));
        return out;
    }

    out.kind = IsometryKind::Hyperbolic;
    out.translation_length = 2 * std::acosh(t / 2);
    double p, q;
    if (std::fabs(c) <= 1e-14 * scale) {
        p = inf;
        q = b / (d - a);
        const bool infinity_attracts = std::fabs(a) > std::fabs(d);
        out.axis = infinity_attracts ? Axis{q, p} : Axis{p, q};
        return out;
    }
    const double bq = d - a;
    const double root = std::sqrt(g.trace() * g.trace() - 4);
    const double half = -0.5 * (bq + std::copysign(root, bq));
    p = half / c;
    q = half != 0 ? -b / half : (a - d - root) / (2 * c);
    const bool p_attracts = std::fabs(c * p + d) > 1;
    out.axis = p_attracts ? Axis{q, p} : Axis{p, q};
    return out;
}

std::string to_string(IsometryKind kind)
{
    switch (kind) {
    case IsometryKind::Identity: return "identity";
    case IsometryKind::Elliptic: return "elliptic";
    case IsometryKind::Parabolic: return "parabolic";
    case IsometryKind::Hyperbolic: return "hyperbolic";
    }
    return "?";
}

std::string to_string(SubgroupTag tag)
{
    switch (tag) {
    case SubgroupTag::Trivial: return "1";
    case SubgroupTag::RotationGroup: return "K";
    case SubgroupTag::FiniteRotation: return "k";
    case SubgroupTag::AxisGroup: return "A";
    case SubgroupTag::AxisCyclic: return "a";
    case SubgroupTag::AxisFull: return "A'";
    case SubgroupTag::Dihedral: return "a'";
    case SubgroupTag::ParabolicGroup: return "N";
    case SubgroupTag::BorelCyclic: return "b";
    case SubgroupTag::Borel: return "B";
    }
    return "?";
}

ElementarySubgroup ElementarySubgroup::trivial() { return {}; }

ElementarySubgroup ElementarySubgroup::rotations(Complex p)
{
    require_interior(p);
    ElementarySubgroup h;
    h.tag = SubgroupTag::RotationGroup;
    h.point = p;
    return h;
}

ElementarySubgroup ElementarySubgroup::finite_rotations(Complex p, int n)
{
    require_interior(p);
    if (n < 2) throw DomainError("finite rotation group needs order at least 2");
    ElementarySubgroup h;
    h.tag = SubgroupTag::FiniteRotation;
    h.point = p;
    h.order = n;
    return h;
}

ElementarySubgroup ElementarySubgroup::axis_group(const Axis& axis)
{
    require_axis(axis);
    ElementarySubgroup h;
    h.tag = SubgroupTag::AxisGroup;
    h.axis = axis;
    return h;
}

ElementarySubgroup ElementarySubgroup::axis_cyclic(const Axis& axis, double t)
{
    require_axis(axis);
    if (!(t > 0) || !std::isfinite(t)) throw DomainError("translation length must be positive");
    ElementarySubgroup h;
    h.tag = SubgroupTag::AxisCyclic;
    h.axis = axis;
    h.translation = t;
    return h;
}

ElementarySubgroup ElementarySubgroup::axis_full(const Axis& axis)
{
    require_axis(axis);
    ElementarySubgroup h;
    h.tag = SubgroupTag::AxisFull;
    h.axis = axis;
    return h;
}

ElementarySubgroup ElementarySubgroup::dihedral(const Axis& axis, double t, Complex p)
{
    require_axis(axis);
    require_interior(p);
    if (!(t > 0) || !std::isfinite(t)) throw DomainError("translation length must be positive");
    if (distance_to_axis(axis, p) > 1e-9) throw DomainError("half-turn centre must lie on the axis");
    ElementarySubgroup h;
    h.tag = SubgroupTag::Dihedral;
    h.axis = axis;
    h.translation = t;
    h.point = p;
    return h;
}

ElementarySubgroup ElementarySubgroup::parabolic(BoundaryPoint xi)
{
    if (std::isnan(xi)) throw DomainError("boundary point is not a number");
    ElementarySubgroup h;
    h.tag = SubgroupTag::ParabolicGroup;
    h.xi = xi;
    return h;
}

ElementarySubgroup ElementarySubgroup::borel_cyclic(BoundaryPoint xi, double t)
{
    ElementarySubgroup h = parabolic(xi);
    if (!(t > 0) || !std::isfinite(t)) throw DomainError("translation length must be positive");
    h.tag = SubgroupTag::BorelCyclic;
    h.translation = t;
    return h;
}

ElementarySubgroup ElementarySubgroup::borel(BoundaryPoint xi)
{
    ElementarySubgroup h = parabolic(xi);
    h.tag = SubgroupTag::Borel;
    return h;
}

std::string describe(const ElementarySubgroup& h)
{
    std::ostringstream os;
    const std::string axis = "(" + format_boundary(h.axis.from) + ", " + format_boundary(h.axis.to) + ")";
    switch (h.tag) {
    case SubgroupTag::Trivial: os << "1"; break;
    case SubgroupTag::RotationGroup: os << "K(" << format_point(h.point) << ")"; break;
    case SubgroupTag::FiniteRotation: os << "k(" << format_point(h.point) << ", 2pi/" << h.order << ")"; break;
    case SubgroupTag::AxisGroup: os << "A" << axis; break;
    case SubgroupTag::AxisCyclic: os << "a(" << axis << ", " << h.translation << ")"; break;
    case SubgroupTag::AxisFull: os << "A'" << axis; break;
    case SubgroupTag::Dihedral:
        os << "a'(" << axis << ", " << h.translation << ", " << format_point(h.point) << ")";
        break;
    case SubgroupTag::ParabolicGroup: os << "N(" << format_boundary(h.xi) << ")"; break;
    case SubgroupTag::BorelCyclic: os << "b(" << format_boundary(h.xi) << ", " << h.translation << ")"; break;
    case SubgroupTag::Borel: os << "B(" << format_boundary(h.xi) << ")"; break;
    }
    return os.str();
}

} // namespace hypgraft::psl2
