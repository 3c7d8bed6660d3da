#include "hypgraft/hexagon_map.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "hypgraft/errors.hpp"
#include "hypgraft/hyptrig.hpp"

namespace hypgraft::hex {

namespace {

constexpr double inf = std::numeric_limits<double>::infinity();

int altered_free_side(const RAHexagon& before, const RAHexagon& after)
{
    int changed = -1;
    for (int i = 0; i < 3; ++i) {
        if (before.free_sides()[i] != after.free_sides()[i]) {
            if (changed >= 0) throw ConfigError("hexagons must differ in a single free side");
            changed = i;
        }
    }
    return changed;
}

std::vector<CollarRequest> source_requests(const RAHexagon& hex, const MapParams& p)
{
    if (!(p.delta > 0 && p.delta <= 0.25)) throw ConfigError("delta must lie in (0, 1/4]");
    std::vector<CollarRequest> out;
    std::vector<NeckId> taken;
    for (const Neck& n : short_necks(hex, p.eps_min, p.eps_max)) {
        const double r = reduced_radius(n.length, p.delta);
        out.push_back({n.id, r, n.id.kind == NeckKind::NonSide ? r : 0.0});
        taken.push_back(n.id);
    }
    for (int i = 0; i < 3; ++i) {
        const NeckId id{NeckKind::Side, {SideKind::Free, i}};
        const double l = hex.free_sides()[i];
        if (l <= p.length_cap && std::find(taken.begin(), taken.end(), id) == taken.end())
            out.push_back({id, reduced_radius(l, p.delta), 0.0});
    }
    return out;
}

CollarRule rule_for(const NeckId& id, int altered)
{
    if (id.kind == NeckKind::NonSide) return CollarRule::NonSide;
    if (id.side.kind == SideKind::Determined) return CollarRule::DeterminedSide;
    return id.side.index == altered ? CollarRule::AlteredSide : CollarRule::FreeSide;
}

// Fermi height on the target collar for height t on the source collar.
double mapped_height(const CollarBlock& b, const CollarRegion& s, const CollarRegion& d, double t)
{
    switch (b.rule) {
    case CollarRule::AlteredSide: return t * d.radius_plus / s.radius_plus;
    case CollarRule::NonSide: return t + b.shift;
    default: return t;
    }
}

double height_slope(const CollarBlock& b, const CollarRegion& s, const CollarRegion& d)
{
    return b.rule == CollarRule::AlteredSide ? d.radius_plus / s.radius_plus : 1.0;
}

double block_distortion(const CollarBlock& b, const CollarRegion& s, const CollarRegion& d)
{
    const double stretch = d.length / s.length;
    const double slope = height_slope(b, s, d);
    double k = std::max(slope, 1 / slope);
    constexpr int n = 2000;
    for (int i = 0; i <= n; ++i) {
        const double t = -s.radius_minus + (s.radius_plus + s.radius_minus) * i / n;
        const double sigma = stretch * std::cosh(mapped_height(b, s, d, t)) / std::cosh(t);
        k = std::max({k, sigma, 1 / sigma});
    }
    return k;
}

// Mean value coordinates of (x, y) with respect to a closed polygon.
void mean_value_weights(const std::vector<double>& vx, const std::vector<double>& vy, double x, double y,
                        std::vector<double>& w)
{
    const std::size_t n = vx.size();
    w.assign(n, 0.0);
    std::vector<double> r(n), t(n);
    for (std::size_t i = 0; i < n; ++i) {
        r[i] = std::hypot(vx[i] - x, vy[i] - y);
        if (r[i] < 1e-300) {
            w[i] = 1;
            return;
        }
    }
    for (std::size_t i = 0; i < n; ++i) {
        const std::size_t j = (i + 1) % n;
        const double sx = vx[i] - x, sy = vy[i] - y, ux = vx[j] - x, uy = vy[j] - y;
        const double area = sx * uy - sy * ux;
        const double dot = sx * ux + sy * uy;
        t[i] = (r[i] * r[j] - dot) / area;
    }
    for (std::size_t i = 0; i < n; ++i) w[i] = (t[(i + n - 1) % n] + t[i]) / r[i];
}

// det[p, u, v] for the orientation of a tangent frame at p.
double orientation(hyp::Vec3 p, hyp::Vec3 u, hyp::Vec3 v)
{
    return p.x * (u.y * v.z - u.z * v.y) - p.y * (u.x * v.z - u.z * v.x) + p.z * (u.x * v.y - u.y * v.x);
}

double segment_distance(hyp::Klein a, hyp::Klein b, hyp::Klein q)
{
    const double du = b.u - a.u, dv = b.v - a.v;
    const double len2 = du * du + dv * dv;
    const double s = len2 > 0 ? std::clamp(((q.u - a.u) * du + (q.v - a.v) * dv) / len2, 0.0, 1.0) : 0.0;
    return std::hypot(q.u - a.u - s * du, q.v - a.v - s * dv);
}

// Points within `tol` of the outline count as inside.
bool inside_polygon(const std::vector<hyp::Klein>& poly, hyp::Klein q, double tol = 1e-9)
{
    bool in = false;
    const std::size_t n = poly.size();
    for (std::size_t i = 0, j = n - 1; i < n; j = i++) {
        const auto& a = poly[i];
        const auto& b = poly[j];
        if (segment_distance(a, b, q) <= tol) return true;
        if ((a.v > q.v) != (b.v > q.v) && q.u < (b.u - a.u) * (q.v - a.v) / (b.v - a.v) + a.u) in = !in;
    }
    return in;
}

} // namespace

// ---------------------------------------------------------------------------

ComplementBlock::ComplementBlock(const Decomposition& source, const Decomposition& target, int piece,
                                 const MapParams& params)
    : piece_(piece)
{
    const auto& sp = source.pieces.at(piece).sides;
    const auto& tp = target.pieces.at(piece).sides;
    const int n = static_cast<int>(sp.size());
    const int m = std::max(2, params.boundary_samples);

    // Reference polygon inscribed in the unit circle with vertices spaced by
    // the arclength of the source piece.
    double total = 0;
    for (const auto& side : sp) total += side.length;
    std::vector<double> angle(n + 1, trig::pi / 2);
    for (int j = 0; j < n; ++j) angle[j + 1] = angle[j] + 2 * trig::pi * sp[j].length / total;

    std::vector<hyp::Vec3> src_global, dst_global;
    for (int j = 0; j < n; ++j) {
        const double a0 = angle[j], a1 = angle[j + 1];
        for (int q = 0; q < m; ++q) {
            const double u = double(q) / m;
            data_.x.push_back((1 - u) * std::cos(a0) + u * std::cos(a1));
            data_.y.push_back((1 - u) * std::sin(a0) + u * std::sin(a1));
            src_global.push_back(source.boundary_point(sp[j], u));
            dst_global.push_back(target.boundary_point(tp[j], u));
        }
    }
    auto centre = [](const std::vector<hyp::Vec3>& pts) {
        hyp::Vec3 s{};
        for (const auto& p : pts) s = s + p;
        return hyp::normalize_point(s);
    };
    src_frame_ = hyp::Recentering(centre(src_global));
    dst_frame_ = hyp::Recentering(centre(dst_global));
    for (const auto& p : src_global) {
        data_.src.push_back(src_frame_.to_local(p));
        data_.outline.push_back(hyp::to_klein(data_.src.back()));
    }
    for (const auto& p : dst_global) data_.dst.push_back(dst_frame_.to_local(p));

    // Distortion estimate on a polar grid of the reference polygon.
    constexpr double h = 1e-6;
    distortion_ = 1;
    dilatation_ = 1;
    for (int i = 0; i < params.radial_samples; ++i) {
        const double f = (i + 0.5) / params.radial_samples;
        for (int k = 0; k < params.angular_samples; ++k) {
            const double phi = trig::pi / 2 + 2 * trig::pi * k / params.angular_samples;
            int j = 0;
            while (j + 1 < n && angle[j + 1] <= phi) ++j;
            const double half = (angle[j + 1] - angle[j]) / 2;
            const double reach = std::cos(half) / std::cos(phi - angle[j] - half);
            const double x = f * reach * std::cos(phi), y = f * reach * std::sin(phi);

            const hyp::Vec3 p = extend(data_.src, x, y);
            const hyp::Vec3 q = extend(data_.dst, x, y);
            grid_.push_back({x, y});
            grid_images_.push_back(p);

            const hyp::Vec3 px = (0.5 / h) * (extend(data_.src, x + h, y) - extend(data_.src, x - h, y));
            const hyp::Vec3 py = (0.5 / h) * (extend(data_.src, x, y + h) - extend(data_.src, x, y - h));
            const hyp::Vec3 qx = (0.5 / h) * (extend(data_.dst, x + h, y) - extend(data_.dst, x - h, y));
            const hyp::Vec3 qy = (0.5 / h) * (extend(data_.dst, x, y + h) - extend(data_.dst, x, y - h));

            const double o1 = orientation(p, px, py), o2 = orientation(q, qx, qy);
            if (!(o1 > 0) || !(o2 > 0)) {
                distortion_ = inf;
                dilatation_ = inf;
                continue;
            }
            const double g11 = hyp::mink(px, px), g12 = hyp::mink(px, py), g22 = hyp::mink(py, py);
            const double k11 = hyp::mink(qx, qx), k12 = hyp::mink(qx, qy), k22 = hyp::mink(qy, qy);
            // generalised eigenvalues of (K, G)
            const double a = g11 * g22 - g12 * g12;
            const double b = -(g11 * k22 + g22 * k11 - 2 * g12 * k12);
            const double c = k11 * k22 - k12 * k12;
            const double disc = std::max(0.0, b * b - 4 * a * c);
            const double lmax = (-b + std::sqrt(disc)) / (2 * a);
            const double lmin = c / (a * lmax);
            const double smax = std::sqrt(lmax), smin = std::sqrt(lmin);
            distortion_ = std::max({distortion_, smax, 1 / smin});
            dilatation_ = std::max(dilatation_, smax / smin);
        }
    }
}

hyp::Vec3 ComplementBlock::extend(const std::vector<hyp::Vec3>& values, double x, double y) const
{
    thread_local std::vector<double> w;
    mean_value_weights(data_.x, data_.y, x, y, w);
    hyp::Vec3 s{};
    for (std::size_t i = 0; i < w.size(); ++i) s = s + w[i] * values[i];
    return hyp::normalize_point(s);
}

bool ComplementBlock::contains(hyp::Vec3 p) const
{
    return inside_polygon(data_.outline, hyp::to_klein(src_frame_.to_local(p)));
}

std::pair<double, double> ComplementBlock::invert(hyp::Vec3 local) const
{
    const hyp::Klein goal = hyp::to_klein(local);
    auto residual = [&](double x, double y) {
        const hyp::Klein k = hyp::to_klein(extend(data_.src, x, y));
        return std::array<double, 2>{k.u - goal.u, k.v - goal.v};
    };
    std::size_t best = 0;
    double best_d = inf;
    for (std::size_t i = 0; i < grid_images_.size(); ++i) {
        const double d = hyp::distance(grid_images_[i], local);
        if (d < best_d) {
            best_d = d;
            best = i;
        }
    }
    double x = grid_.empty() ? 0 : grid_[best][0];
    double y = grid_.empty() ? 0 : grid_[best][1];
    constexpr double h = 1e-7;
    for (int it = 0; it < 60; ++it) {
        const auto r = residual(x, y);
        const double err = std::hypot(r[0], r[1]);
        if (err < 1e-14) return {x, y};
        const auto rx1 = residual(x + h, y), rx0 = residual(x - h, y);
        const auto ry1 = residual(x, y + h), ry0 = residual(x, y - h);
        const double j11 = (rx1[0] - rx0[0]) / (2 * h), j21 = (rx1[1] - rx0[1]) / (2 * h);
        const double j12 = (ry1[0] - ry0[0]) / (2 * h), j22 = (ry1[1] - ry0[1]) / (2 * h);
        const double det = j11 * j22 - j12 * j21;
        if (det == 0) break;
        double dx = -(j22 * r[0] - j12 * r[1]) / det;
        double dy = -(-j21 * r[0] + j11 * r[1]) / det;
        // damp until the residual decreases and the iterate stays inside
        for (int k = 0; k < 40; ++k) {
            const double nx = x + dx, ny = y + dy;
            const bool inside = std::hypot(nx, ny) < 1;
            if (inside) {
                const auto nr = residual(nx, ny);
                if (std::hypot(nr[0], nr[1]) < err) {
                    x = nx;
                    y = ny;
                    break;
                }
            }
            dx *= 0.5;
            dy *= 0.5;
        }
    }
    const auto r = residual(x, y);
    if (std::hypot(r[0], r[1]) < 1e-10) return {x, y};
    throw ConvergenceError("complement map inversion did not converge");
}

hyp::Vec3 ComplementBlock::map(hyp::Vec3 p) const
{
    const auto [x, y] = invert(src_frame_.to_local(p));
    return dst_frame_.to_global(extend(data_.dst, x, y));
}

// ---------------------------------------------------------------------------

double PiecewiseMap::collar_distortion() const
{
    double k = 1;
    for (const auto& b : collars_)
        if (b.rule != CollarRule::AlteredSide) k = std::max(k, b.distortion);
    return k;
}

double PiecewiseMap::complement_distortion() const
{
    double k = 1;
    for (const auto& c : complements_) k = std::max(k, c.distortion());
    return k;
}

double PiecewiseMap::distortion() const { return std::max(collar_distortion(), complement_distortion()); }

hyp::Vec3 PiecewiseMap::operator()(hyp::Vec3 p) const
{
    if (!source_.embedding.contains(p, 1e-9)) throw DomainError("point lies outside the source hexagon");
    for (const auto& b : collars_) {
        const CollarRegion& s = source_.regions[b.source];
        if (!s.contains(p, 1e-9)) continue;
        const CollarRegion& d = target_.regions[b.target];
        const auto [tau, t] = s.fermi(p);
        return d.point(tau * d.length / s.length, mapped_height(b, s, d, t));
    }
    for (const auto& c : complements_)
        if (c.contains(p)) return c.map(p);
    throw GeometryError("point not located in any block");
}

std::vector<CollarRequest> matched_requests(const RAHexagon& before, const RAHexagon& after,
                                            const Decomposition& source, const MapParams& params)
{
    const int altered = altered_free_side(before, after);
    std::vector<CollarRequest> out;
    for (const auto& region : source.regions) {
        const Neck g = find_neck(after, region.neck);
        CollarRequest req{region.neck, region.radius_plus, region.radius_minus};
        switch (rule_for(region.neck, altered)) {
        case CollarRule::AlteredSide:
        case CollarRule::FreeSide:
            req.radius_plus = reduced_radius(g.length, params.delta);
            break;
        case CollarRule::DeterminedSide:
            if (std::sinh(req.radius_plus) * std::sinh(g.length) > 1)
                throw GeometryError("matched collar on " + to_string(region.neck) + " is no longer a rectangle");
            break;
        case CollarRule::NonSide: {
            if (region.neck.side.index == altered)
                throw GeometryError("short non-side neck meets the altered side");
            const Neck f = find_neck(before, region.neck);
            const double shift = g.plus_foot - f.plus_foot;
            req.radius_plus = region.radius_plus + shift;
            req.radius_minus = region.radius_minus - shift;
            for (double r : {req.radius_plus, req.radius_minus})
                if (!(r > 0) || std::sinh(r) * std::sinh(g.length) > 1)
                    throw GeometryError("matched collar on " + to_string(region.neck) + " is invalid");
            break;
        }
        }
        out.push_back(req);
    }
    return out;
}

PiecewiseMap hexagon_map(const RAHexagon& before, const RAHexagon& after, const MapParams& params)
{
    const int altered = altered_free_side(before, after);
    if (altered >= 0)
        for (double l : {before.free_sides()[altered], after.free_sides()[altered]})
            if (l > params.length_cap) throw DomainError("altered side exceeds the length cap");

    Decomposition src = decompose(before, source_requests(before, params));
    Decomposition dst = decompose(after, matched_requests(before, after, src, params));

    if (src.pieces.size() != dst.pieces.size()) throw GeometryError("complements differ combinatorially");
    for (std::size_t i = 0; i < src.pieces.size(); ++i) {
        const auto& a = src.pieces[i].sides;
        const auto& b = dst.pieces[i].sides;
        bool same = a.size() == b.size();
        for (std::size_t j = 0; same && j < a.size(); ++j)
            same = a[j].kind == b[j].kind && a[j].hex_side == b[j].hex_side && a[j].collar == b[j].collar;
        if (!same) throw GeometryError("complements differ combinatorially");
    }

    PiecewiseMap map(std::move(src), std::move(dst));
    map.altered_ = altered;
    const auto& S = map.source_;
    const auto& T = map.target_;
    for (std::size_t r = 0; r < S.regions.size(); ++r) {
        CollarBlock b;
        b.rule = rule_for(S.regions[r].neck, altered);
        b.source = b.target = static_cast<int>(r);
        if (b.rule == CollarRule::NonSide) b.shift = T.regions[r].radius_plus - S.regions[r].radius_plus;
        b.distortion = block_distortion(b, S.regions[r], T.regions[r]);
        map.collars_.push_back(b);
    }
    for (std::size_t i = 0; i < S.pieces.size(); ++i)
        map.complements_.emplace_back(S, T, static_cast<int>(i), params);
    return map;
}

} // namespace hypgraft::hex
