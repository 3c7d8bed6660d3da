#pragma once

#include <array>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "hypgraft/hexagon.hpp"

namespace hypgraft::pants {

// Pair of pants with boundary lengths l_i >= 0 (0 marks a cusp).  It is the
// double of the hexagon with free sides l_i / 2.
class PantsData {
public:
    PantsData(double l0, double l1, double l2);

    const std::array<double, 3>& boundary_lengths() const { return lengths_; }
    bool has_cusp() const;
    // The hexagon half; absent when a boundary is a cusp.
    const std::optional<hex::RAHexagon>& hexagon() const { return hexagon_; }
    // Seam joining the two boundaries other than `opposite`.  Throws
    // Unsupported if either of those boundaries is a cusp.
    double seam_length(int opposite) const;

private:
    std::array<double, 3> lengths_;
    std::optional<hex::RAHexagon> hexagon_;
};

PantsData pants_from_boundary(double l0, double l1, double l2);

enum class CurveKind { Regular, Degenerate };

struct Curve {
    std::string id;
    double length = 0;
    double twist = 0;
    CurveKind kind = CurveKind::Regular;
};

// A boundary slot of a pair of pants: a pants curve, a cusp, or a boundary
// geodesic of the surface.
struct Slot {
    enum class Kind { Curve, Cusp, Boundary } kind = Kind::Cusp;
    std::string curve;
    double length = 0; // boundary slots only
};

struct PantsRecord {
    std::array<Slot, 3> slots;
};

// Surface presented by Fenchel-Nielsen data on a pants decomposition.
class SurfaceFN {
public:
    SurfaceFN(std::vector<Curve> curves, std::vector<PantsRecord> pants);

    const std::vector<Curve>& curves() const { return curves_; }
    const std::vector<PantsRecord>& pants() const { return pants_; }
    const Curve& curve(const std::string& id) const;
    PantsData pants_data(std::size_t index) const;
    double systole_of_decomposition() const;

private:
    std::vector<Curve> curves_;
    std::vector<PantsRecord> pants_;
};

struct Collar {
    enum class Kind { Geodesic, Cusp } kind = Kind::Geodesic;
    double core_length = 0;
    double radius = 0;          // semi-hyperbolic half width, infinite for cusps
    double conformal_half_width = 0; // gd(radius)
    double modulus = 0;
    double boundary_length = 0;
};

// Standard collar of half width asinh(1 / sinh(len / 2)).
Collar standard_collar(double core_length);
// Cusp neighbourhood bounded by the horocycle of length 2.
Collar cusp_collar();

// Surface-convention reduced collar: radius asinh(delta / sinh(len / 2)).
Collar reduced_collar_surface(double core_length, double delta);
double reduced_radius_surface(double core_length, double delta);

struct ShorteningConstant {
    double r = 0;            // min(1, reduced radius at the cap)
    double max_boundary = 0; // sup of reduced collar boundary lengths
    double projection_lipschitz = 0; // 4 cosh r
    double constant = 0;     // max(10, max_boundary / r)
};

ShorteningConstant boundary_arc_shortening_constant(double length_cap, double delta);

// Length l <= len with 2 gd(R(l)) / l = (2 gd(R(len)) + 2 extra) / len,
// R the surface-convention reduced radius.
double pinch_length(double core_length, double extra, double delta);
double pinch_residual(double core_length, double extra, double delta, double pinched);

std::map<std::string, double> pinch_lengths(const SurfaceFN& surface, const std::vector<std::string>& pinched,
                                            const std::map<std::string, double>& extra, double delta,
                                            double length_cap = 2.0);

// Lower distortion model d -> max(0, d / K - ln 4) and the composed bound
// eta(s) = delta_K(s / K') from the comparison of distances.
struct DistortionModel {
    double map_constant = 1; // K, the hexagon map distortion
    std::function<double(double)> lower; // delta_K
};

DistortionModel default_distortion_model(double map_constant);

struct GlobalEta {
    double map_constant = 1;
    double combined_constant = 1; // K'
    double shortening = 10;       // C
    std::function<double(double)> eta;
};

GlobalEta global_eta(double length_cap, double delta, const DistortionModel& model);

} // namespace hypgraft::pants
