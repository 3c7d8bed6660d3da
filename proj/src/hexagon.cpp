#include "hypgraft/hexagon.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <set>

#include "hypgraft/errors.hpp"
#include "hypgraft/hyptrig.hpp"

namespace hypgraft::hex {

namespace {

constexpr double inf = std::numeric_limits<double>::infinity();

int wrap6(int k) { return ((k % 6) + 6) % 6; }

void require_side(const SideLabel& s)
{
    if (s.index < 0 || s.index > 2) throw ConfigError("side index must be 0, 1 or 2");
}

} // namespace

int cyclic_position(SideLabel side)
{
    require_side(side);
    return side.kind == SideKind::Free ? 2 * side.index : wrap6(2 * side.index + 3);
}

SideLabel side_at(int position)
{
    const int k = wrap6(position);
    if (k % 2 == 0) return {SideKind::Free, k / 2};
    return {SideKind::Determined, ((k + 3) / 2) % 3};
}

bool adjacent(SideLabel s, SideLabel t)
{
    const int d = wrap6(cyclic_position(s) - cyclic_position(t));
    return d == 1 || d == 5;
}

std::string to_string(SideLabel side)
{
    return (side.kind == SideKind::Free ? "F" : "D") + std::to_string(side.index);
}

SideLabel parse_side(const std::string& name)
{
    if (name.size() == 2 && (name[0] == 'F' || name[0] == 'D') && name[1] >= '0' && name[1] <= '2')
        return {name[0] == 'F' ? SideKind::Free : SideKind::Determined, name[1] - '0'};
    throw ConfigError("unknown side label '" + name + "'");
}

std::string to_string(const NeckId& id)
{
    if (id.kind == NeckKind::Side) return to_string(id.side);
    return "N" + std::to_string(id.side.index);
}

NeckId parse_neck(const std::string& name)
{
    if (name.size() == 2 && name[0] == 'N' && name[1] >= '0' && name[1] <= '2')
        return {NeckKind::NonSide, {SideKind::Free, name[1] - '0'}};
    return {NeckKind::Side, parse_side(name)};
}

RAHexagon::RAHexagon(double a, double b, double c) : free_{a, b, c}
{
    for (double x : free_)
        if (!(x > 0) || !std::isfinite(x)) throw DomainError("hexagon free sides must be positive and finite");
    for (int i = 0; i < 3; ++i)
        determined_[i] = trig::hexagon_opposite(free_[i], free_[(i + 1) % 3], free_[(i + 2) % 3]);
}

double RAHexagon::side(SideLabel label) const
{
    require_side(label);
    return label.kind == SideKind::Free ? free_[label.index] : determined_[label.index];
}

double RAHexagon::side_at_position(int position) const { return side(side_at(position)); }

std::array<double, 6> RAHexagon::cyclic_sides() const
{
    std::array<double, 6> out{};
    for (int k = 0; k < 6; ++k) out[k] = side_at_position(k);
    return out;
}

Neck side_neck(const RAHexagon& hex, SideLabel side)
{
    Neck n;
    n.id = {NeckKind::Side, side};
    n.length = hex.side(side);
    return n;
}

Neck nonside_neck(const RAHexagon& hex, int incident_free_side)
{
    if (incident_free_side < 0 || incident_free_side > 2) throw ConfigError("free side index must be 0, 1 or 2");
    const int i = incident_free_side;
    const auto& f = hex.free_sides();
    const double b = f[i];
    const double log_cosh_prev = trig::log_cosh(f[(i + 2) % 3]);
    const double log_cosh_next = trig::log_cosh(f[(i + 1) % 3]);

    // sinh(b+) cosh(next) = sinh(b - b+) cosh(prev); the left side minus the
    // right side is increasing in b+.
    auto gap = [&](double x) {
        return trig::log_sinh(x) - trig::log_sinh(b - x) - log_cosh_prev + log_cosh_next;
    };
    double lo = 0, hi = b;
    int iterations = 0;
    if (log_cosh_prev == log_cosh_next) lo = hi = 0.5 * b;
    // Run to adjacent doubles; the cap only bites for feet near zero.
    while (lo < hi) {
        const double mid = 0.5 * (lo + hi);
        if (mid <= lo || mid >= hi) break;
        if (++iterations > 200) {
            if (hi - lo <= 1e-12 * b) break;
            throw ConvergenceError("nonside_neck: bisection did not converge");
        }
        (gap(mid) < 0 ? lo : hi) = mid;
    }
    const double plus = lo == hi ? lo : 0.5 * (lo + hi);

    Neck n;
    n.id = {NeckKind::NonSide, {SideKind::Free, i}};
    n.plus_foot = plus;
    n.minus_foot = b - plus;
    const double log_sinh_len = log_cosh_prev - trig::log_sinh(plus);
    n.length = std::asinh(std::exp(log_sinh_len));

    const double ls = trig::log_sinh(n.length);
    const double before = hex.side_at_position(2 * i - 1);
    const double after = hex.side_at_position(2 * i + 1);
    n.opposite_plus = std::asinh(std::exp(trig::log_cosh(before) - ls));
    n.opposite_minus = std::asinh(std::exp(trig::log_cosh(after) - ls));
    return n;
}

std::vector<Neck> all_necks(const RAHexagon& hex)
{
    std::vector<Neck> out;
    for (int k = 0; k < 6; ++k) out.push_back(side_neck(hex, side_at(k)));
    for (int i = 0; i < 3; ++i) out.push_back(nonside_neck(hex, i));
    return out;
}

Neck find_neck(const RAHexagon& hex, const NeckId& id)
{
    if (id.kind == NeckKind::Side) return side_neck(hex, id.side);
    if (id.side.kind != SideKind::Free) throw ConfigError("non-side necks are labelled by their free side");
    return nonside_neck(hex, id.side.index);
}

double reduced_radius(double neck_length, double delta)
{
    if (!(neck_length > 0) || !std::isfinite(neck_length)) throw DomainError("reduced collar: neck length must be positive");
    if (!(delta > 0 && delta <= 1)) throw DomainError("reduced collar: delta must lie in (0, 1]");
    return std::asinh(delta / std::sinh(neck_length));
}

CollarSpec reduced_collar(const Neck& neck, Coorientation co, double delta)
{
    const bool side = neck.id.kind == NeckKind::Side;
    if (side != (co == Coorientation::Inward))
        throw ConfigError("side necks are cooriented inward, non-side necks plus or minus");
    CollarSpec c;
    c.neck = neck.id;
    c.neck_length = neck.length;
    c.coorientation = co;
    c.delta = delta;
    c.radius = reduced_radius(neck.length, delta);
    c.is_rectangle = delta <= 1;
    return c;
}

// ---------------------------------------------------------------------------

Embedding::Embedding(const RAHexagon& hex) : hex_(hex)
{
    // Root the walk at the midpoint of the longest side and reach every vertex
    // by an outbound walk; a walk that goes out and comes back amplifies
    // rounding errors by the exponential of its length.
    len_ = hex.cyclic_sides();
    int root = 0;
    for (int k = 1; k < 6; ++k)
        if (len_[k] > len_[root]) root = k;
    const hyp::Frame mid{};
    std::array<hyp::Frame, 6> fwd, bwd;
    std::array<double, 6> fwd_cost{}, bwd_cost{};
    // forward: vertex root+1, root+2, ...
    hyp::Frame f = mid.advanced(len_[root] / 2).turned_left();
    double cost = len_[root] / 2;
    for (int j = 1; j <= 6; ++j) {
        const int v = wrap6(root + j);
        fwd[v] = f;
        fwd_cost[v] = cost;
        cost += len_[v];
        f = f.advanced(len_[v]).turned_left();
    }
    // backward: vertex root, root-1, ...
    f = mid.advanced(-len_[root] / 2);
    cost = len_[root] / 2;
    for (int j = 0; j < 6; ++j) {
        const int v = wrap6(root - j);
        bwd[v] = f;
        bwd_cost[v] = cost;
        const int prev = wrap6(v - 1);
        cost += len_[prev];
        f = f.turned_right().advanced(-len_[prev]);
    }
    for (int v = 0; v < 6; ++v) frames_[v] = fwd_cost[v] <= bwd_cost[v] ? fwd[v] : bwd[v];

    // Relative disagreement of the two walks at the vertex farthest round.
    int far = 0;
    for (int v = 1; v < 6; ++v)
        if (std::min(fwd_cost[v], bwd_cost[v]) > std::min(fwd_cost[far], bwd_cost[far])) far = v;
    auto rel = [](hyp::Vec3 x, hyp::Vec3 y) {
        const double scale = std::max({1.0, std::fabs(x.x), std::fabs(x.y), std::fabs(x.z)});
        return std::max({std::fabs(x.x - y.x), std::fabs(x.y - y.y), std::fabs(x.z - y.z)}) / scale;
    };
    closure_ = std::max({rel(fwd[far].pos, bwd[far].pos), rel(fwd[far].tangent, bwd[far].tangent),
                         rel(fwd[far].normal, bwd[far].normal)});
}

hyp::Frame Embedding::side_frame_at(int position, double s) const
{
    const int k = wrap6(position);
    if (s <= len_[k] / 2) return frames_[k].advanced(s);
    return frames_[wrap6(k + 1)].turned_right().advanced(s - len_[k]);
}

hyp::Vec3 Embedding::point_on_side(int position, double s) const { return side_frame_at(position, s).pos; }

hyp::Frame Embedding::neck_frame(const Neck& neck) const
{
    if (neck.id.kind == NeckKind::Side) return frames_[cyclic_position(neck.id.side)];
    const hyp::Frame foot = side_frame_at(2 * neck.id.side.index, neck.plus_foot);
    return {foot.pos, foot.normal, -foot.tangent};
}

bool Embedding::contains(hyp::Vec3 p, double tol) const
{
    return std::all_of(frames_.begin(), frames_.end(),
                       [&](const hyp::Frame& f) { return hyp::mink(p, f.normal) >= -tol; });
}

double Embedding::closure_residual() const { return closure_; }

// ---------------------------------------------------------------------------

std::pair<double, double> CollarRegion::fermi(hyp::Vec3 p) const
{
    const double t = std::asinh(hyp::mink(p, frame.normal));
    const double tau = std::asinh(hyp::mink(p, frame.tangent) / std::cosh(t));
    return {tau, t};
}

double CollarRegion::distance_from(hyp::Vec3 p) const
{
    const double t = std::asinh(hyp::mink(p, frame.normal));
    if (t > radius_plus) return t - radius_plus;
    if (t < -radius_minus) return -t - radius_minus;
    return 0;
}

bool CollarRegion::contains(hyp::Vec3 p, double tol) const
{
    const auto [tau, t] = fermi(p);
    return tau >= -tol && tau <= length + tol && t >= -radius_minus - tol && t <= radius_plus + tol;
}

double collar_separation(const CollarRegion& x, const CollarRegion& y)
{
    // Distances to a convex collar are attained on the boundary of the other.
    auto one_way = [](const CollarRegion& target, const CollarRegion& src) {
        constexpr int n = 256;
        double best = inf;
        auto curve_min = [&](auto&& param) {
            int best_i = 0;
            double local = inf;
            for (int i = 0; i <= n; ++i) {
                const double d = target.distance_from(param(double(i) / n));
                if (d < local) {
                    local = d;
                    best_i = i;
                }
            }
            // golden-section refinement around the best sample
            double lo = std::max(0, best_i - 1) / double(n), hi = std::min(n, best_i + 1) / double(n);
            constexpr double g = 0.6180339887498949;
            for (int it = 0; it < 60; ++it) {
                const double m1 = hi - g * (hi - lo), m2 = lo + g * (hi - lo);
                if (target.distance_from(param(m1)) < target.distance_from(param(m2)))
                    hi = m2;
                else
                    lo = m1;
            }
            local = std::min(local, target.distance_from(param(0.5 * (lo + hi))));
            best = std::min(best, local);
        };
        const double L = src.length, rp = src.radius_plus, rm = src.radius_minus;
        curve_min([&](double u) { return src.point(u * L, rp); });
        curve_min([&](double u) { return src.point(u * L, -rm); });
        curve_min([&](double u) { return src.point(0, -rm + u * (rp + rm)); });
        curve_min([&](double u) { return src.point(L, -rm + u * (rp + rm)); });
        return best;
    };
    return std::min(one_way(x, y), one_way(y, x));
}

hyp::Vec3 Decomposition::boundary_point(const BoundarySide& side, double u) const
{
    if (side.kind == BoundaryKind::Geodesic) return embedding.point_on_side(side.hex_side, side.s0 + u * (side.s1 - side.s0));
    return regions[side.collar].point(side.tau0 + u * (side.tau1 - side.tau0), side.height);
}

namespace {

struct Interval {
    double start = 0, end = 0;
    int arc = -1; // index into arcs, the arc leaving from `start`
};

struct Arc {
    BoundarySide side;
    int to_interval = -1; // lands on the end of this interval
};

} // namespace

Decomposition decompose(const RAHexagon& hex, const std::vector<CollarRequest>& requests)
{
    Decomposition out{Embedding(hex), {}, {}, {}, inf, inf, 0};
    const auto len = hex.cyclic_sides();
    std::array<double, 7> perim{};
    for (int k = 0; k < 6; ++k) perim[k + 1] = perim[k] + len[k];
    const double total = perim[6];

    std::vector<Interval> intervals;
    std::vector<Arc> arcs;

    for (std::size_t r = 0; r < requests.size(); ++r) {
        const auto& req = requests[r];
        for (std::size_t q = 0; q < r; ++q)
            if (requests[q].neck == req.neck) throw ConfigError("duplicate collar on neck " + to_string(req.neck));
        const Neck neck = find_neck(hex, req.neck);
        const int id = static_cast<int>(out.regions.size());
        if (!(req.radius_plus > 0) || !(req.radius_minus >= 0) || !std::isfinite(req.radius_plus) || !std::isfinite(req.radius_minus))
            throw GeometryError("collar radii must be positive and finite");

        CollarRegion region{neck.id, out.embedding.neck_frame(neck), neck.length, req.radius_plus, req.radius_minus};
        auto spec = [&](Coorientation co, double radius) {
            CollarSpec c;
            c.neck = neck.id;
            c.neck_length = neck.length;
            c.coorientation = co;
            c.radius = radius;
            c.delta = std::sinh(radius) * std::sinh(neck.length);
            c.is_rectangle = c.delta <= 1;
            return c;
        };

        if (neck.id.kind == NeckKind::Side) {
            if (req.radius_minus != 0) throw ConfigError("side necks carry a single inward collar");
            const int k = cyclic_position(neck.id.side);
            const double R = req.radius_plus;
            if (!(R < len[wrap6(k - 1)] && R < len[wrap6(k + 1)]))
                throw GeometryError("collar of " + to_string(neck.id) + " leaves the hexagon");
            out.collars.push_back(spec(Coorientation::Inward, R));
            BoundarySide arc{BoundaryKind::CollarArc, -1, 0, 0, id, R, 0, neck.length, neck.length * std::cosh(R)};
            const int iv = static_cast<int>(intervals.size());
            intervals.push_back({perim[k] - R, perim[k + 1] + R, static_cast<int>(arcs.size())});
            arcs.push_back({arc, iv});
        } else {
            const int k = 2 * neck.id.side.index;
            const double rp = req.radius_plus, rm = req.radius_minus;
            if (!(rm > 0)) throw GeometryError("non-side collars need both coorientations");
            const double u = neck.plus_foot, w = neck.opposite_minus;
            if (!(u - rp > 0 && u + rm < len[k] && w - rm > 0 && w + rp < len[k + 3]))
                throw GeometryError("collar of " + to_string(neck.id) + " leaves the hexagon");
            out.collars.push_back(spec(Coorientation::Plus, rp));
            out.collars.push_back(spec(Coorientation::Minus, rm));
            const int i1 = static_cast<int>(intervals.size());
            const int i2 = i1 + 1;
            const int a_plus = static_cast<int>(arcs.size());
            intervals.push_back({perim[k] + u - rp, perim[k] + u + rm, a_plus});
            intervals.push_back({perim[k + 3] + w - rm, perim[k + 3] + w + rp, a_plus + 1});
            arcs.push_back({{BoundaryKind::CollarArc, -1, 0, 0, id, rp, 0, neck.length, neck.length * std::cosh(rp)}, i2});
            arcs.push_back({{BoundaryKind::CollarArc, -1, 0, 0, id, -rm, neck.length, 0, neck.length * std::cosh(rm)}, i1});
        }
        out.regions.push_back(region);
    }

    for (std::size_t x = 0; x < out.regions.size(); ++x)
        for (std::size_t y = x + 1; y < out.regions.size(); ++y)
            out.min_separation = std::min(out.min_separation, collar_separation(out.regions[x], out.regions[y]));

    // Walk the perimeter.  Chains of uncovered sides alternate with arcs.
    auto geodesic_chain = [&](double from, double to, std::vector<BoundarySide>& sides) {
        // from < to <= from + total, perimeter coordinates
        double cur = from;
        int k = static_cast<int>(std::floor(from / total));
        double base = k * total;
        int pos = 0;
        while (pos < 6 && base + perim[pos + 1] <= cur) ++pos;
        while (cur < to) {
            if (pos == 6) {
                pos = 0;
                base += total;
            }
            const double side_start = base + perim[pos];
            const double side_end = base + perim[pos + 1];
            const double seg_end = std::min(to, side_end);
            if (seg_end > cur) {
                BoundarySide s;
                s.kind = BoundaryKind::Geodesic;
                s.hex_side = pos;
                s.s0 = std::max(0.0, cur - side_start);
                s.s1 = std::min(len[pos], seg_end - side_start);
                s.length = s.s1 - s.s0;
                sides.push_back(s);
            }
            cur = seg_end;
            ++pos;
        }
    };

    if (intervals.empty()) {
        ComplementPiece piece;
        geodesic_chain(0, total, piece.sides);
        out.pieces.push_back(piece);
    } else {
        for (auto& iv : intervals) {
            const double shift = std::floor(iv.start / total) * total;
            iv.start -= shift;
            iv.end -= shift;
        }
        std::vector<int> order(intervals.size());
        for (std::size_t i = 0; i < order.size(); ++i) order[i] = static_cast<int>(i);
        std::sort(order.begin(), order.end(), [&](int x, int y) { return intervals[x].start < intervals[y].start; });
        std::vector<int> rank(order.size());
        for (std::size_t i = 0; i < order.size(); ++i) rank[order[i]] = static_cast<int>(i);

        const int n = static_cast<int>(order.size());
        for (int j = 0; j < n; ++j) {
            const Interval& cur = intervals[order[j]];
            const Interval& next = intervals[order[(j + 1) % n]];
            const double next_start = next.start + (j + 1 == n ? total : 0);
            if (!(cur.end < next_start)) throw GeometryError("collars overlap along the hexagon boundary");
        }

        std::vector<bool> seen(n, false);
        for (int j = 0; j < n; ++j) {
            if (seen[j]) continue;
            ComplementPiece piece;
            int chain = j;
            for (int guard = 0; !seen[chain]; ++guard) {
                if (guard > n) throw GeometryError("complement boundary does not close");
                seen[chain] = true;
                const Interval& cur = intervals[order[chain]];
                const int nxt = (chain + 1) % n;
                const Interval& next = intervals[order[nxt]];
                double to = next.start;
                while (to <= cur.end) to += total;
                geodesic_chain(cur.end, to, piece.sides);
                const Arc& arc = arcs[next.arc];
                piece.sides.push_back(arc.side);
                chain = rank[arc.to_interval];
            }
            if (chain != j) throw GeometryError("complement boundary does not close");
            out.pieces.push_back(piece);
        }
    }

    for (const auto& piece : out.pieces)
        for (const auto& s : piece.sides) {
            out.shortest_side = std::min(out.shortest_side, s.length);
            out.longest_side = std::max(out.longest_side, s.length);
        }
    if (!(out.shortest_side > 0)) throw GeometryError("degenerate complement side");
    return out;
}

std::vector<Neck> short_necks(const RAHexagon& hex, double eps_min, double eps_max)
{
    std::vector<Neck> out;
    for (const Neck& n : all_necks(hex)) {
        const bool below = n.length < eps_min;
        const bool window = n.length >= eps_min && n.length < eps_max && n.length < eps_max / 2;
        if (below || window) out.push_back(n);
    }
    return out;
}

Decomposition thick_thin(const RAHexagon& hex, const ThickThinParams& params,
                         const std::vector<SideLabel>& extra_sides, const DeltaFunction& delta)
{
    if (!(params.eps_min > 0 && params.eps_min < params.eps_max)) throw ConfigError("need 0 < eps_min < eps_max");
    if (!(params.eps_max <= params.length_cap)) throw ConfigError("need eps_max <= length cap");
    if (!(params.delta_min > 0 && params.delta_min <= 0.25)) throw ConfigError("delta_min must lie in (0, 1/4]");

    std::vector<Neck> necks = short_necks(hex, params.eps_min, params.eps_max);
    for (std::size_t i = 0; i < extra_sides.size(); ++i) {
        const SideLabel s = extra_sides[i];
        require_side(s);
        for (std::size_t j = 0; j < i; ++j) {
            if (extra_sides[j] == s) throw ConfigError("extra side listed twice: " + to_string(s));
            if (adjacent(extra_sides[j], s)) throw ConfigError("extra sides must be pairwise non-adjacent");
        }
        const double l = hex.side(s);
        if (l < params.eps_max || l > params.length_cap)
            throw ConfigError("extra side " + to_string(s) + " outside the length window [eps_max, cap]");
        necks.push_back(side_neck(hex, s));
    }

    auto checked = [&](const Neck& n, Coorientation co) {
        const double d = delta(n.id, co);
        if (!(d >= params.delta_min && d <= 0.25)) throw ConfigError("delta outside [delta_min, 1/4] on " + to_string(n.id));
        return reduced_radius(n.length, d);
    };
    std::vector<CollarRequest> requests;
    for (const Neck& n : necks) {
        if (n.id.kind == NeckKind::Side)
            requests.push_back({n.id, checked(n, Coorientation::Inward), 0});
        else
            requests.push_back({n.id, checked(n, Coorientation::Plus), checked(n, Coorientation::Minus)});
    }
    Decomposition d = decompose(hex, requests);
    for (std::size_t i = 0; i < d.collars.size(); ++i) {
        // carry the requested delta rather than the value recomputed from the radius
        const auto& c = d.collars[i];
        d.collars[i].delta = delta(c.neck, c.coorientation);
    }
    return d;
}

std::pair<double, double> collar_arc_length_range(const ThickThinParams& params)
{
    // arc length len * cosh(asinh(delta / sinh len)); tends to delta as len -> 0
    auto arc = [](double l, double d) { return l * std::sqrt(1 + std::pow(d / std::sinh(l), 2)); };
    double lo = params.delta_min, hi = 0.25;
    constexpr int n = 4000;
    for (int i = 1; i <= n; ++i) {
        const double l = params.length_cap * i / n;
        lo = std::min(lo, arc(l, params.delta_min));
        hi = std::max(hi, arc(l, 0.25));
    }
    return {lo, hi};
}

// ---------------------------------------------------------------------------

double small_neck_threshold(double length_cap)
{
    if (!(length_cap > 0) || !std::isfinite(length_cap)) throw DomainError("length cap must be positive");
    return std::asinh(1 / std::sinh(length_cap));
}

double neck_distortion_bound(double length_cap)
{
    const double eps = small_neck_threshold(length_cap);
    auto kappa = [](double x) { return std::sinh(x) / x; };

    // determined side opposite the altered side
    const double m1p = 1 + std::cosh(length_cap);
    const double l1 = 2 * std::asinh(std::sqrt(m1p) * std::sinh(eps / 2));
    const double m1 = std::sqrt(m1p) * kappa(l1 / 2);

    // non-side neck: sinh ratio bounded by cosh of the cap
    const double s2 = std::cosh(length_cap);
    const double l2 = std::asinh(s2 * std::sinh(eps));
    const double m2 = s2 * kappa(l2);

    // foot displacement: sinh ratio bounded by cosh^2 of the cap, feet at least `m` long
    const double m3p = s2 * s2;
    const double m = std::asinh(1 / std::sinh(l2));
    const double m3 = std::log(m3p) - std::log1p(-std::exp(-2 * m));
    return std::max({m1, m2, m3});
}

NeckDistortion neck_distortion(const RAHexagon& before, const RAHexagon& after, const NeckId& neck, double length_cap)
{
    int changed = -1;
    for (int i = 0; i < 3; ++i) {
        if (before.free_sides()[i] != after.free_sides()[i]) {
            if (changed >= 0) throw ConfigError("hexagons must differ in a single free side");
            changed = i;
        }
    }
    if (changed >= 0) {
        if (before.free_sides()[changed] > length_cap || after.free_sides()[changed] > length_cap)
            throw DomainError("altered side exceeds the length cap");
        if (neck.kind == NeckKind::Side && neck.side == SideLabel{SideKind::Free, changed})
            throw DomainError("the altered side is not a neck of bounded distortion");
    }

    NeckDistortion out;
    out.small_threshold = small_neck_threshold(length_cap);
    out.bound = neck_distortion_bound(length_cap);
    const Neck g = find_neck(before, neck);
    const Neck h = find_neck(after, neck);
    if (!(g.length < out.small_threshold)) throw DomainError("neck " + to_string(neck) + " is not short");
    out.length_ratio = h.length / g.length;
    out.cosh_ratio = std::pow(std::sinh(g.length / 2) / std::sinh(h.length / 2), 2);
    if (neck.kind == NeckKind::NonSide) out.foot_shift = std::fabs(g.plus_foot - h.plus_foot);
    if (!(out.length_ratio <= out.bound && 1 / out.length_ratio <= out.bound && out.foot_shift <= out.bound))
        throw GeometryError("neck distortion exceeds its bound on " + to_string(neck));
    return out;
}

} // namespace hypgraft::hex
