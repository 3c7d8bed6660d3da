#pragma once

// Closed-form trigonometry of right-angled hyperbolic polygons and the
// Sec/Gudermannian pair used to pass between conformal and semi-hyperbolic
// collar coordinates.

namespace hypgraft::trig {

inline constexpr double pi = 3.14159265358979323846;
inline constexpr double half_pi = pi / 2;

// ln sinh(x) and ln cosh(x), finite for arguments where sinh/cosh overflow.
double log_sinh(double x);
double log_cosh(double x);

// acosh(x) for x >= 1; values within 1e-12 below 1 are clamped.
double acosh_clamped(double x);

// Side of a right-angled pentagon opposite the two sides a and b:
// cosh c = sinh a * sinh b.  Throws DomainError when sinh a sinh b < 1.
double pentagon_side(double a, double b);

// Right-angled hexagon: side opposite a given the other two alternate sides.
// cosh g = (cosh b cosh c + cosh a) / (sinh b sinh c).
// Requires a >= 0 and b, c > 0.
double hexagon_opposite(double a, double b, double c);

// Sec(y) = ln tan(y/2 + pi/4) on (-pi/2, pi/2).
double sec_integral(double y);

// Gudermannian, the inverse of sec_integral.
double gd(double x);

// Largest admissible tanh-ratio in the Lambert quadrilateral inequality
// cosh(d) tanh(len) <= tanh(r), i.e. tanh(r)/tanh(len).
double lambert_bound(double r, double len);

} // namespace hypgraft::trig
