#include "hypgraft/pants.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <set>

#include "hypgraft/errors.hpp"
#include "hypgraft/hyptrig.hpp"

namespace hypgraft::pants {

namespace {

constexpr double inf = std::numeric_limits<double>::infinity();

void require_length(double l, const char* what)
{
    if (!(l > 0) || !std::isfinite(l)) throw DomainError(std::string(what) + ": length must be positive and finite");
}

void require_delta(double delta)
{
    if (!(delta > 0 && delta <= 1)) throw DomainError("delta must lie in (0, 1]");
}

} // namespace

PantsData::PantsData(double l0, double l1, double l2) : lengths_{l0, l1, l2}
{
    for (double l : lengths_)
        if (!(l >= 0) || !std::isfinite(l)) throw DomainError("pants boundary lengths must be finite and non-negative");
    if (!has_cusp()) hexagon_.emplace(l0 / 2, l1 / 2, l2 / 2);
}

bool PantsData::has_cusp() const
{
    return std::any_of(lengths_.begin(), lengths_.end(), [](double l) { return l == 0; });
}

double PantsData::seam_length(int opposite) const
{
    if (opposite < 0 || opposite > 2) throw ConfigError("seam index must be 0, 1 or 2");
    const double a = lengths_[opposite] / 2;
    const double b = lengths_[(opposite + 1) % 3] / 2;
    const double c = lengths_[(opposite + 2) % 3] / 2;
    if (b == 0 || c == 0) throw Unsupported("seam runs into a cusp");
    return trig::hexagon_opposite(a, b, c);
}

PantsData pants_from_boundary(double l0, double l1, double l2) { return PantsData(l0, l1, l2); }

SurfaceFN::SurfaceFN(std::vector<Curve> curves, std::vector<PantsRecord> pants)
    : curves_(std::move(curves)), pants_(std::move(pants))
{
    if (pants_.empty()) throw ConfigError("surface needs at least one pair of pants");
    std::map<std::string, int> uses;
    for (const auto& c : curves_) {
        if (c.id.empty()) throw ConfigError("curve id must be non-empty");
        if (uses.count(c.id)) throw ConfigError("duplicate curve id '" + c.id + "'");
        require_length(c.length, "curve");
        if (!std::isfinite(c.twist)) throw DomainError("twist must be finite");
        uses[c.id] = 0;
    }
    for (const auto& p : pants_)
        for (const auto& s : p.slots) {
            if (s.kind == Slot::Kind::Curve) {
                auto it = uses.find(s.curve);
                if (it == uses.end()) throw ConfigError("pants refer to unknown curve '" + s.curve + "'");
                ++it->second;
            } else if (s.kind == Slot::Kind::Boundary) {
                require_length(s.length, "boundary");
            }
        }
    for (const auto& c : curves_) {
        const int want = c.kind == CurveKind::Regular ? 2 : 1;
        if (uses[c.id] != want)
            throw ConfigError("curve '" + c.id + "' must bound " + std::to_string(want) + " pants slot(s)");
    }

    // connectivity through shared curves
    std::vector<int> parent(pants_.size());
    for (std::size_t i = 0; i < parent.size(); ++i) parent[i] = static_cast<int>(i);
    std::function<int(int)> root = [&](int x) { return parent[x] == x ? x : parent[x] = root(parent[x]); };
    std::map<std::string, int> first;
    for (std::size_t i = 0; i < pants_.size(); ++i)
        for (const auto& s : pants_[i].slots) {
            if (s.kind != Slot::Kind::Curve) continue;
            auto [it, fresh] = first.emplace(s.curve, static_cast<int>(i));
            if (!fresh) parent[root(static_cast<int>(i))] = root(it->second);
        }
    for (std::size_t i = 0; i < pants_.size(); ++i)
        if (root(static_cast<int>(i)) != root(0)) throw ConfigError("pants decomposition is not connected");
}

const Curve& SurfaceFN::curve(const std::string& id) const
{
    for (const auto& c : curves_)
        if (c.id == id) return c;
    throw ConfigError("unknown curve '" + id + "'");
}

PantsData SurfaceFN::pants_data(std::size_t index) const
{
    const auto& p = pants_.at(index);
    std::array<double, 3> l{};
    for (int i = 0; i < 3; ++i) {
        const auto& s = p.slots[i];
        l[i] = s.kind == Slot::Kind::Curve ? curve(s.curve).length : s.kind == Slot::Kind::Boundary ? s.length : 0.0;
    }
    return PantsData(l[0], l[1], l[2]);
}

double SurfaceFN::systole_of_decomposition() const
{
    double m = inf;
    for (const auto& c : curves_) m = std::min(m, c.length);
    return m;
}

// ---------------------------------------------------------------------------

Collar standard_collar(double core_length)
{
    require_length(core_length, "standard_collar");
    Collar c;
    c.core_length = core_length;
    c.radius = std::asinh(1 / std::sinh(core_length / 2));
    c.conformal_half_width = trig::gd(c.radius);
    c.modulus = 2 * c.conformal_half_width / core_length;
    c.boundary_length = core_length * std::cosh(c.radius);
    return c;
}

Collar cusp_collar()
{
    Collar c;
    c.kind = Collar::Kind::Cusp;
    c.radius = inf;
    c.conformal_half_width = trig::half_pi;
    c.modulus = inf;
    c.boundary_length = 2;
    return c;
}

double reduced_radius_surface(double core_length, double delta)
{
    require_length(core_length, "reduced collar");
    require_delta(delta);
    return std::asinh(delta / std::sinh(core_length / 2));
}

Collar reduced_collar_surface(double core_length, double delta)
{
    Collar c;
    c.core_length = core_length;
    c.radius = reduced_radius_surface(core_length, delta);
    c.conformal_half_width = trig::gd(c.radius);
    c.modulus = 2 * c.conformal_half_width / core_length;
    c.boundary_length = core_length * std::cosh(c.radius);
    return c;
}

ShorteningConstant boundary_arc_shortening_constant(double length_cap, double delta)
{
    require_length(length_cap, "length cap");
    require_delta(delta);
    auto boundary = [&](double l) { return l * std::sqrt(1 + std::pow(delta / std::sinh(l / 2), 2)); };
    constexpr int n = 20000;
    double best = 2 * delta; // limit as the core shrinks
    int best_i = 0;
    for (int i = 1; i <= n; ++i) {
        const double v = boundary(length_cap * i / n);
        if (v > best) {
            best = v;
            best_i = i;
        }
    }
    if (best_i > 0) {
        double lo = length_cap * std::max(1, best_i - 1) / n, hi = length_cap * std::min(n, best_i + 1) / n;
        constexpr double g = 0.6180339887498949;
        for (int it = 0; it < 100; ++it) {
            const double m1 = hi - g * (hi - lo), m2 = lo + g * (hi - lo);
            (boundary(m1) > boundary(m2) ? hi : lo) = boundary(m1) > boundary(m2) ? m2 : m1;
        }
        best = std::max(best, boundary(0.5 * (lo + hi)));
    }
    ShorteningConstant s;
    s.r = std::min(1.0, reduced_radius_surface(length_cap, delta));
    s.max_boundary = best;
    s.projection_lipschitz = 4 * std::cosh(s.r);
    s.constant = std::max(10.0, best / s.r);
    return s;
}

namespace {

double pinch_modulus(double l, double delta) { return 2 * trig::gd(reduced_radius_surface(l, delta)) / l; }

} // namespace

double pinch_length(double core_length, double extra, double delta)
{
    require_length(core_length, "pinch_length");
    require_delta(delta);
    if (!(extra >= 0) || !std::isfinite(extra)) throw DomainError("pinch_length: grafting length must be finite and non-negative");
    const double target = pinch_modulus(core_length, delta) + 2 * extra / core_length;
    if (extra == 0) return core_length;

    double hi = core_length, lo = core_length / 2;
    int guard = 0;
    while (pinch_modulus(lo, delta) <= target) {
        hi = lo;
        lo /= 2;
        if (++guard > 2000 || lo == 0) throw ConvergenceError("pinch_length: no bracket");
    }
    for (int it = 0; it < 400; ++it) {
        const double mid = std::sqrt(lo * hi);
        if (!(mid > lo && mid < hi)) break;
        (pinch_modulus(mid, delta) > target ? lo : hi) = mid;
    }
    const double l = std::sqrt(lo * hi);
    if (pinch_residual(core_length, extra, delta, l) > 1e-10) throw ConvergenceError("pinch_length: residual above tolerance");
    return l;
}

double pinch_residual(double core_length, double extra, double delta, double pinched)
{
    const double target = pinch_modulus(core_length, delta) + 2 * extra / core_length;
    return std::fabs(pinch_modulus(pinched, delta) - target) / target;
}

std::map<std::string, double> pinch_lengths(const SurfaceFN& surface, const std::vector<std::string>& pinched,
                                            const std::map<std::string, double>& extra, double delta,
                                            double length_cap)
{
    std::map<std::string, double> out;
    for (const auto& id : pinched) {
        const Curve& c = surface.curve(id);
        if (c.length > length_cap) throw DomainError("curve '" + id + "' is longer than the length cap");
        auto it = extra.find(id);
        if (it == extra.end()) throw ConfigError("no grafting length for curve '" + id + "'");
        out[id] = pinch_length(c.length, it->second, delta);
    }
    return out;
}

DistortionModel default_distortion_model(double map_constant)
{
    if (!(map_constant >= 1)) throw ConfigError("distortion constant must be at least 1");
    const double ln4 = std::log(4.0);
    return {map_constant, [map_constant, ln4](double d) { return std::max(0.0, d / map_constant - ln4); }};
}

GlobalEta global_eta(double length_cap, double delta, const DistortionModel& model)
{
    if (!(model.map_constant >= 1)) throw ConfigError("distortion constant must be at least 1");
    if (!model.lower) throw ConfigError("distortion model has no lower bound function");
    double prev = model.lower(0);
    for (int i = 1; i <= 4000; ++i) {
        const double v = model.lower(0.05 * i);
        if (v < prev) throw ConfigError("distortion lower bound must be non-decreasing");
        prev = v;
    }
    const ShorteningConstant s = boundary_arc_shortening_constant(length_cap, delta);
    const double radius = reduced_radius_surface(length_cap, delta);
    const double case_one = 1 + 2 * s.max_boundary / radius;
    const double case_two = model.map_constant * s.constant;

    GlobalEta g;
    g.map_constant = model.map_constant;
    g.shortening = s.constant;
    g.combined_constant = std::max({model.map_constant, case_one, case_two});
    const double k = g.combined_constant;
    g.eta = [lower = model.lower, k](double d) { return lower(d / k); };
    return g;
}

} // namespace hypgraft::pants
