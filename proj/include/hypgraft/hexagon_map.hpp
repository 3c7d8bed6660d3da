#pragma once

#include <vector>

#include "hypgraft/hexagon.hpp"

namespace hypgraft::hex {

struct MapParams {
    double length_cap = 2.0;
    double delta = 0.1;
    double eps_min = 5e-5;
    double eps_max = 5e-4;
    int boundary_samples = 24; // per complement side
    int radial_samples = 12;   // distortion estimator grid
    int angular_samples = 48;
};

enum class CollarRule {
    AlteredSide,   // the free side whose length changes
    FreeSide,      // same delta on a free side of unchanged length
    DeterminedSide, // same radius
    NonSide        // foot-to-collar-end distance preserved
};

struct CollarBlock {
    CollarRule rule = CollarRule::FreeSide;
    int source = -1; // index into the source regions
    int target = -1;
    double shift = 0;      // NonSide: added to the Fermi height
    double distortion = 1; // bi-Lipschitz constant on the block
};

// Map of a complement piece through a reference polygon.  Both pieces are
// parametrised by mean value interpolation of their constant-speed boundary
// parametrisations.
class ComplementBlock {
public:
    ComplementBlock(const Decomposition& source, const Decomposition& target, int piece, const MapParams& params);

    int piece() const { return piece_; }
    double distortion() const { return distortion_; }
    double conformal_dilatation() const { return dilatation_; }
    bool contains(hyp::Vec3 p) const;
    hyp::Vec3 map(hyp::Vec3 p) const;

private:
    struct Side {
        std::vector<double> x, y;              // reference polygon boundary
        std::vector<hyp::Vec3> src, dst;       // recentred boundary samples
        std::vector<hyp::Klein> outline;       // source boundary, global Klein
    };
    hyp::Vec3 extend(const std::vector<hyp::Vec3>& values, double x, double y) const;
    std::pair<double, double> invert(hyp::Vec3 local) const;

    int piece_ = -1;
    Side data_;
    hyp::Recentering src_frame_, dst_frame_;
    std::vector<std::array<double, 2>> grid_;
    std::vector<hyp::Vec3> grid_images_;
    double distortion_ = 1;
    double dilatation_ = 1;
};

class PiecewiseMap {
public:
    const Decomposition& source() const { return source_; }
    const Decomposition& target() const { return target_; }
    const std::vector<CollarBlock>& collar_blocks() const { return collars_; }
    const std::vector<ComplementBlock>& complement_blocks() const { return complements_; }
    int altered_side() const { return altered_; }

    // Largest bi-Lipschitz constant outside the collar of the altered side.
    double distortion() const;
    double collar_distortion() const;
    double complement_distortion() const;

    hyp::Vec3 operator()(hyp::Vec3 p) const;

private:
    friend PiecewiseMap hexagon_map(const RAHexagon&, const RAHexagon&, const MapParams&);
    PiecewiseMap(Decomposition s, Decomposition t) : source_(std::move(s)), target_(std::move(t)) {}

    Decomposition source_;
    Decomposition target_;
    std::vector<CollarBlock> collars_;
    std::vector<ComplementBlock> complements_;
    int altered_ = -1;
};

// Collar requests on the target hexagon matched to the source collars.
std::vector<CollarRequest> matched_requests(const RAHexagon& before, const RAHexagon& after,
                                            const Decomposition& source, const MapParams& params);

PiecewiseMap hexagon_map(const RAHexagon& before, const RAHexagon& after, const MapParams& params = {});

} // namespace hypgraft::hex
