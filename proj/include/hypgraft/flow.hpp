#pragma once

#include <cmath>
#include <functional>
#include <optional>

#include "hypgraft/pants.hpp"
#include "hypgraft/psl2.hpp"

namespace hypgraft::flow {

// Parameters of the pinching flow.  `hmap` is an increasing homeomorphism
// [0,1] -> [0,inf] with inverse `hmap_inverse`; `bump` is 1 on [0,1] and 0
// on [2,inf).
struct FlowParams {
    double epsilon = 0.1;
    std::function<double(double)> hmap = [](double s) { return s >= 1 ? HUGE_VAL : s / (1 - s); };
    std::function<double(double)> hmap_inverse = [](double y) { return std::isinf(y) ? 1.0 : y / (1 + y); };
    std::function<double(double)> bump = [](double x) { return x <= 1 ? 1.0 : x >= 2 ? 0.0 : 2 - x; };
};

// Grafting length at time t for a curve of length len on a surface with
// systole sys.
double grafting_length(double t, double len, double sys, const FlowParams& params = {});

struct SubannulusBounds {
    double graft_length = 0; // L_t, possibly infinite
    double omega = 1;        // rescaling factor for per-side length L_t / 2
    double collar_radius = 0; // M_len
    double inner_radius = 0;  // R_I
    double outer_radius = 0;  // R_II
    double inner_angle = 0;   // gd(R_I)
    double outer_angle = 0;   // gd(R_II)
    double inner_target = 0;  // Delta_I, infinite when L_t is
    double outer_target = 0;  // Delta_II, infinite when L_t is
    double inner_conformal = 0; // delta_I, -inf when L_t is infinite

    bool infinite() const;
};

SubannulusBounds subannuli_bounds(double len, double t, double sys, const FlowParams& params = {});

struct CuspBounds {
    double inner = 0; // mu_I
    double outer = 0; // mu_II = mu_I - 1
};

CuspBounds cusp_bounds(double sigma);

// Orientation preserving homeomorphism [a,b] -> [a',b'] that does its
// stretching near the right end.  b' may be +inf.
class Stretch {
public:
    Stretch(double a, double b, double a2, double b2, const FlowParams& params = {});
    double operator()(double y) const;
    double inverse(double z) const;

private:
    double a_, b_, a2_, b2_;
    double scale_;
    FlowParams params_;
};

// Mirror of Stretch, stretching near the left end.  a' may be -inf.
class StretchStar {
public:
    StretchStar(double a, double b, double a2, double b2, const FlowParams& params = {});
    double operator()(double y) const;
    double inverse(double z) const;

private:
    double a_, b_, a2_, b2_;
    double scale_;
    FlowParams params_;
};

enum class AnnulusRegion { Inner, Outer, Fixed };

// Image of a collar point, written in the conformal coordinates of the
// extended collar S^1_len x [-L_t/2, rho).  The semi-hyperbolic second
// coordinate is absent when the grafting is infinite.
struct AnnulusImage {
    AnnulusRegion region = AnnulusRegion::Fixed;
    double x = 0;
    double conformal = 0;
    std::optional<double> semihyperbolic;
};

// Point given by (x, s), s its distance from the core in [0, M_len).
AnnulusImage h_t_annulus(double len, double t, double sys, double x, double s, const FlowParams& params = {});

// Largest disagreement, in the conformal coordinate, between the formulas
// meeting at the three region seams s = R_I/2, R_I and R_II.
double h_t_seam_mismatch(double len, double t, double sys, const FlowParams& params = {});

// Semi-hyperbolic cusp coordinate y >= 0, measured from the length-2
// horocycle.  Points in the thin part are undefined at t = 1.
double h_t_cusp(double sigma, double t, double y, const FlowParams& params = {});

// Second coordinate of the inner block at t = 1: identity up to R_I/2, then
// stretched onto [R_I/2, inf).
double inner_limit_depth(double inner_radius, double s, const FlowParams& params = {});

struct LimitState {
    enum class Position { CuspThin, CollarBoundary, CollarInterior };
    Position position = Position::CuspThin;
    double theta = 0;             // angle from the base vector, radians
    double core_length = 0;       // collar cases
    double s = 0;                 // collar cases: distance from the core
    pants::CurveKind curve_kind = pants::CurveKind::Regular;
};

// Limit subgroup for a base point in the non-discrete part at t = 1.
psl2::ElementarySubgroup classify_limit(const LimitState& state, const FlowParams& params = {});

} // namespace hypgraft::flow
