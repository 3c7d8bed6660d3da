#pragma once

#include <optional>
#include <string>
#include <vector>

#include "hypgraft/pants.hpp"

namespace hypgraft::graft {

// Annulus S^1_len x I in straight coordinates.  Ends may be open or closed
// and may sit at +-infinity.  Only open ends are removed by truncation.
struct StraightAnnulus {
    enum class Kind { HyperbolicStrip, Euclidean, Cusp };

    double circumference = 1;
    double lo = 0, hi = 0;
    bool lo_open = true, hi_open = true;
    Kind kind = Kind::Euclidean;
    bool degenerate = false;

    StraightAnnulus() = default;
    StraightAnnulus(double circumference, double lo, double hi, bool lo_open = true, bool hi_open = true,
                    Kind kind = Kind::Euclidean);

    bool empty() const;
    double modulus() const;
    // B is a subannulus of this one (same circumference, interval inclusion).
    bool contains(const StraightAnnulus& b) const;

    friend bool operator==(const StraightAnnulus&, const StraightAnnulus&) = default;
};

StraightAnnulus truncate(const StraightAnnulus& a, double d);

// Whether the (d+2)-truncation of b lies in the d-truncation of a.
bool truncation_quasimonotone_check(const StraightAnnulus& a, const StraightAnnulus& b, double d);

struct ConformalPoint {
    double x = 0, y = 0;
};

struct SemiHyperbolicPoint {
    double x = 0, s = 0;
};

// One side of the extended standard collar of a grafting curve.  Conformal
// coordinates run over S^1_len x [-L, rho), the grafted cylinder occupying
// [-L, 0).  Infinite L is allowed and only has conformal coordinates.
class ExtendedCollar {
public:
    ExtendedCollar(double core_length, double graft_length, bool degenerate = false);

    double core_length() const { return len_; }
    double graft_length() const { return graft_; }
    bool degenerate() const { return degenerate_; }
    bool infinite() const;
    double rho() const { return rho_; }
    double omega() const { return omega_; }
    double rescaled_length() const { return len_ * omega_; }
    double rescaled_rho() const { return rho_scaled_; }
    // Modulus of the two-sided extended collar, (2 rho + 2 L) / len.
    double modulus() const;

    ConformalPoint to_rescaled(ConformalPoint p) const;
    SemiHyperbolicPoint to_semihyperbolic(ConformalPoint p) const;
    ConformalPoint from_rescaled(ConformalPoint q) const;
    ConformalPoint from_semihyperbolic(SemiHyperbolicPoint q) const;

private:
    void require_domain(ConformalPoint p) const;

    double len_;
    double graft_;
    bool degenerate_;
    double rho_;
    double omega_;
    double rho_scaled_;
};

ExtendedCollar extended_collar(double core_length, double graft_length, bool degenerate = false);

double N_constant(double length_cap);
double M_constant(double length_cap);

// ln(d - 2) - M(cap), clamped at 0.
double truncation_distance_lower(double d, double length_cap);

struct LengthInterval {
    double lo = 0;
    double hi = 0;
    bool cusp = false; // infinite grafting: the curve becomes a cusp
};

// Bounds on the length of the geodesic in the grafted surface homotopic to
// a curve of length len grafted by L on each side.
LengthInterval grafted_length_bounds(double core_length, double graft_length, double length_cap);

// Distance to the core in the complete metric of the extension, from the
// semi-hyperbolic coordinate s.
double shat_relation(double s, double core_length, double graft_length);

enum class Side { Plus, Minus };

struct GraftingCurve {
    std::string id;
    Side preferred_side = Side::Plus;
    double graft_length = 0; // may be infinite
};

class GraftingData {
public:
    GraftingData(pants::SurfaceFN surface, std::vector<GraftingCurve> curves, double length_cap = 2.0);

    const pants::SurfaceFN& surface() const { return surface_; }
    const std::vector<GraftingCurve>& curves() const { return curves_; }
    double length_cap() const { return cap_; }
    bool degenerate(const std::string& id) const;
    ExtendedCollar collar(const std::string& id) const;
    LengthInterval length_bounds(const std::string& id) const;

private:
    const GraftingCurve& find(const std::string& id) const;

    pants::SurfaceFN surface_;
    std::vector<GraftingCurve> curves_;
    double cap_;
};

} // namespace hypgraft::graft
