#pragma once

#include <array>
#include <functional>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "hypgraft/hyperboloid.hpp"

namespace hypgraft::hex {

enum class SideKind { Free, Determined };

// Sides are labelled by kind and index 0..2.  A determined side carries the
// index of the free side it is opposite to.  In cyclic order the sides read
// F0, D2, F1, D0, F2, D1.
struct SideLabel {
    SideKind kind = SideKind::Free;
    int index = 0;

    friend bool operator==(const SideLabel&, const SideLabel&) = default;
};

int cyclic_position(SideLabel side);
SideLabel side_at(int position);
bool adjacent(SideLabel s, SideLabel t);
std::string to_string(SideLabel side);
SideLabel parse_side(const std::string& name);

// Right-angled hexagon described by its three free (alternate) sides.
class RAHexagon {
public:
    RAHexagon(double a, double b, double c);

    const std::array<double, 3>& free_sides() const { return free_; }
    const std::array<double, 3>& determined_sides() const { return determined_; }
    double side(SideLabel label) const;
    double side_at_position(int position) const;
    std::array<double, 6> cyclic_sides() const;

private:
    std::array<double, 3> free_;
    std::array<double, 3> determined_;
};

enum class NeckKind { Side, NonSide };

// A side neck is a side of the hexagon.  A non-side neck is the common
// perpendicular between free side `index` and the determined side opposite.
struct NeckId {
    NeckKind kind = NeckKind::Side;
    SideLabel side;

    friend bool operator==(const NeckId&, const NeckId&) = default;
};

std::string to_string(const NeckId& id);
NeckId parse_neck(const std::string& name);

struct Neck {
    NeckId id;
    double length = 0;
    // Non-side necks only: the two pieces of the incident free side.  The
    // plus piece lies towards the previous free side in cyclic order.
    double plus_foot = 0;
    double minus_foot = 0;
    // Non-side necks only: the matching split of the opposite determined side.
    double opposite_plus = 0;
    double opposite_minus = 0;
};

Neck side_neck(const RAHexagon& hex, SideLabel side);
Neck nonside_neck(const RAHexagon& hex, int incident_free_side);
std::vector<Neck> all_necks(const RAHexagon& hex);
Neck find_neck(const RAHexagon& hex, const NeckId& id);

enum class Coorientation { Inward, Plus, Minus };

struct CollarSpec {
    NeckId neck;
    double neck_length = 0;
    Coorientation coorientation = Coorientation::Inward;
    double delta = 0;
    double radius = 0;
    bool is_rectangle = true;
};

// Reduced collar with radius asinh(delta / sinh(len)), delta in (0, 1].
CollarSpec reduced_collar(const Neck& neck, Coorientation co, double delta);
double reduced_radius(double neck_length, double delta);

// Concrete realisation of the hexagon in the hyperboloid model.  Side at
// position k runs from vertex k to vertex k+1, interior on the left.
class Embedding {
public:
    explicit Embedding(const RAHexagon& hex);

    const RAHexagon& hexagon() const { return hex_; }
    const hyp::Frame& side_frame(int position) const { return frames_.at(position); }
    hyp::Vec3 vertex(int position) const { return frames_[position].pos; }
    hyp::Vec3 point_on_side(int position, double s) const;
    // Frame along a neck: pos at the start, tangent along the neck, normal
    // towards the inward (side neck) or plus (non-side neck) coorientation.
    hyp::Frame neck_frame(const Neck& neck) const;
    bool contains(hyp::Vec3 p, double tol = 1e-12) const;
    // Frame at arclength s along a side, tangent along the side.
    hyp::Frame side_frame_at(int position, double s) const;
    // Relative disagreement of the two walks round the boundary to the
    // vertex farthest from the root.
    double closure_residual() const;

private:
    RAHexagon hex_;
    std::array<double, 6> len_{};
    std::array<hyp::Frame, 6> frames_;
    double closure_ = 0;
};

// A collar realised in an embedding: the set of points whose Fermi
// coordinates (tau, t) along the neck satisfy 0 <= tau <= length and
// -radius_minus <= t <= radius_plus.
struct CollarRegion {
    NeckId neck;
    hyp::Frame frame;
    double length = 0;
    double radius_plus = 0;
    double radius_minus = 0;

    // Fermi coordinates of p relative to the neck.
    std::pair<double, double> fermi(hyp::Vec3 p) const;
    hyp::Vec3 point(double tau, double t) const { return frame.offset(tau, t); }
    double distance_from(hyp::Vec3 p) const;
    bool contains(hyp::Vec3 p, double tol = 1e-12) const;
};

double collar_separation(const CollarRegion& x, const CollarRegion& y);

enum class BoundaryKind { Geodesic, CollarArc };

// One side of a complement piece.  Geodesic sides are sub-segments
// [s0, s1] of a hexagon side; collar arcs run at Fermi height `height`
// from tau0 to tau1 along collar `collar`.
struct BoundarySide {
    BoundaryKind kind = BoundaryKind::Geodesic;
    int hex_side = -1;
    double s0 = 0, s1 = 0;
    int collar = -1;
    double height = 0;
    double tau0 = 0, tau1 = 0;
    double length = 0;

    friend bool operator==(const BoundarySide&, const BoundarySide&) = default;
};

struct ComplementPiece {
    std::vector<BoundarySide> sides;
};

struct CollarRequest {
    NeckId neck;
    double radius_plus = 0;
    double radius_minus = 0;
};

struct Decomposition {
    Embedding embedding;
    std::vector<CollarSpec> collars;
    std::vector<CollarRegion> regions;
    std::vector<ComplementPiece> pieces;
    double min_separation = 0;
    double shortest_side = 0;
    double longest_side = 0;

    hyp::Vec3 boundary_point(const BoundarySide& side, double u) const;
};

// Decomposition for explicitly sized collars.  Throws GeometryError when
// collars overlap or leave the hexagon.
Decomposition decompose(const RAHexagon& hex, const std::vector<CollarRequest>& requests);

struct ThickThinParams {
    double eps_min = 5e-5;
    double eps_max = 5e-4;
    double length_cap = 2.0;
    double delta_min = 0.05;
};

using DeltaFunction = std::function<double(const NeckId&, Coorientation)>;

// Collars on every neck shorter than eps_min, every neck in
// [eps_min, eps_max) shorter than eps_max/2, and every extra side.
Decomposition thick_thin(const RAHexagon& hex, const ThickThinParams& params,
                         const std::vector<SideLabel>& extra_sides, const DeltaFunction& delta);

// Necks selected by the thick-thin rule, before extra sides.
std::vector<Neck> short_necks(const RAHexagon& hex, double eps_min, double eps_max);

// A priori range of collar boundary lengths for necks up to length_cap.
std::pair<double, double> collar_arc_length_range(const ThickThinParams& params);

// Change in neck data when one free side changes length.
struct NeckDistortion {
    double length_ratio = 1;
    double foot_shift = 0;
    double bound = 1;
    double cosh_ratio = 1;
    double small_threshold = 0;
};

// Largest neck length for which neck_distortion's bound is proven.
double small_neck_threshold(double length_cap);
double neck_distortion_bound(double length_cap);

NeckDistortion neck_distortion(const RAHexagon& before, const RAHexagon& after, const NeckId& neck,
                               double length_cap = 2.0);

} // namespace hypgraft::hex
