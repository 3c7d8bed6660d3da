#pragma once

#include <array>
#include <complex>
#include <string>

namespace hypgraft::psl2 {

using Complex = std::complex<double>;

// Boundary points of the upper half plane are reals, with +-infinity
// standing for the point at infinity.
using BoundaryPoint = double;

bool is_infinite(BoundaryPoint xi);

// Element of PSL(2,R), stored as the representative with det 1 and
// non-negative trace.  Ties at trace 0 make the first nonzero entry positive.
class Isometry {
public:
    Isometry();
    Isometry(double a, double b, double c, double d);

    static Isometry identity() { return {}; }
    // Counter-clockwise rotation by angle about p.
    static Isometry rotation(Complex center, double angle);
    // Parabolic fixing xi; the parameter is the translation after
    // conjugating xi to infinity by a rotation about i.
    static Isometry parabolic(BoundaryPoint xi, double parameter);

    double a() const { return m_[0]; }
    double b() const { return m_[1]; }
    double c() const { return m_[2]; }
    double d() const { return m_[3]; }
    const std::array<double, 4>& entries() const { return m_; }
    double trace() const { return m_[0] + m_[3]; }

    Isometry inverse() const;
    Complex apply(Complex z) const;
    BoundaryPoint apply_boundary(BoundaryPoint x) const;
    // Derivative of the Mobius map at an interior point.
    Complex derivative(Complex z) const;

    friend Isometry operator*(const Isometry& g, const Isometry& h);

private:
    std::array<double, 4> m_;
};

// Distance in PSL: min over signs of the Frobenius distance.
double distance(const Isometry& g, const Isometry& h);

// Hyperbolic distance between interior points.
double hyperbolic_distance(Complex z, Complex w);
// d(i, g i).
double displacement(const Isometry& g);

// Oriented geodesic from `from` to `to`.
struct Axis {
    BoundaryPoint from = 0;
    BoundaryPoint to = 0;
};

// Isometry taking the imaginary axis onto the axis (0 -> from, inf -> to)
// and i onto the foot of the perpendicular dropped from i.
Isometry axis_frame(const Axis& axis);
double distance_to_axis(const Axis& axis, Complex z = {0, 1});
// Translation by tau along the axis, towards `to` for tau > 0.
Isometry translation(const Axis& axis, double tau);
// Half turn about the point at signed arclength sigma from the foot.
Isometry half_turn(const Axis& axis, double sigma);
Complex point_on_axis(const Axis& axis, double sigma);

// Boundary point and axis conversions from the disc model, whose centre
// corresponds to i.
BoundaryPoint from_disc_boundary(double angle);
// Axis whose nearest point to the centre lies at distance d in direction
// angle.
Axis axis_from_disc(double distance, double angle);

enum class IsometryKind { Identity, Elliptic, Parabolic, Hyperbolic };

struct Classification {
    IsometryKind kind = IsometryKind::Identity;
    double rotation_angle = 0;    // elliptic, in (-pi, pi]
    Complex center{0, 1};         // elliptic
    BoundaryPoint fixed_point = 0; // parabolic
    Axis axis;                    // hyperbolic, `to` attracting
    double translation_length = 0;
};

Classification classify_isometry(const Isometry& g);
std::string to_string(IsometryKind kind);

enum class SubgroupTag {
    Trivial,
    RotationGroup,     // K(p)
    FiniteRotation,    // k(p, 2pi/n)
    AxisGroup,         // A(axis)
    AxisCyclic,        // a(axis, t)
    AxisFull,          // A'(axis)
    Dihedral,          // a'(axis, t, p)
    ParabolicGroup,    // N(xi)
    BorelCyclic,       // b(xi, t)
    Borel              // B(xi)
};

std::string to_string(SubgroupTag tag);

struct ElementarySubgroup {
    SubgroupTag tag = SubgroupTag::Trivial;
    Complex point{0, 1};      // K, k, a' (a' stores the half-turn centre)
    int order = 0;            // k
    Axis axis;                // A, a, A', a'
    double translation = 0;   // a, a', b
    BoundaryPoint xi = 0;     // N, b, B

    static ElementarySubgroup trivial();
    static ElementarySubgroup rotations(Complex p);
    static ElementarySubgroup finite_rotations(Complex p, int n);
    static ElementarySubgroup axis_group(const Axis& axis);
    static ElementarySubgroup axis_cyclic(const Axis& axis, double t);
    static ElementarySubgroup axis_full(const Axis& axis);
    static ElementarySubgroup dihedral(const Axis& axis, double t, Complex p);
    static ElementarySubgroup parabolic(BoundaryPoint xi);
    static ElementarySubgroup borel_cyclic(BoundaryPoint xi, double t);
    static ElementarySubgroup borel(BoundaryPoint xi);
};

std::string describe(const ElementarySubgroup& h);

} // namespace hypgraft::psl2
