#include "hypgraft/grafting.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <set>

#include "hypgraft/errors.hpp"
#include "hypgraft/hyptrig.hpp"

namespace hypgraft::graft {

namespace {

constexpr double inf = std::numeric_limits<double>::infinity();

bool lower_within(double outer, bool outer_open, double inner, bool inner_open)
{
    return outer < inner || (outer == inner && (!outer_open || inner_open));
}

bool upper_within(double outer, bool outer_open, double inner, bool inner_open)
{
    return inner < outer || (outer == inner && (!outer_open || inner_open));
}

void require_graft_length(double l)
{
    if (std::isnan(l) || l < 0) throw DomainError("grafting length must lie in [0, inf]");
}

} // namespace

StraightAnnulus::StraightAnnulus(double circumference_, double lo_, double hi_, bool lo_open_, bool hi_open_, Kind kind_)
    : circumference(circumference_), lo(lo_), hi(hi_), lo_open(lo_open_ || std::isinf(lo_)),
      hi_open(hi_open_ || std::isinf(hi_)), kind(kind_)
{
    if (!(circumference > 0) || !std::isfinite(circumference)) throw DomainError("annulus circumference must be positive");
    if (std::isnan(lo) || std::isnan(hi) || lo > hi) throw DomainError("annulus height interval is malformed");
    if (kind == Kind::HyperbolicStrip) {
        const bool inside = lower_within(-trig::half_pi, true, lo, lo_open) && upper_within(trig::half_pi, true, hi, hi_open);
        if (!inside) throw DomainError("hyperbolic strip must lie in (-pi/2, pi/2)");
    }
}

bool StraightAnnulus::empty() const { return hi < lo || (hi == lo && (lo_open || hi_open)); }

double StraightAnnulus::modulus() const { return empty() ? 0.0 : (hi - lo) / circumference; }

bool StraightAnnulus::contains(const StraightAnnulus& b) const
{
    if (b.circumference != circumference) throw ConfigError("annuli have different circumferences");
    if (b.empty()) return true;
    if (empty()) return false;
    return lower_within(lo, lo_open, b.lo, b.lo_open) && upper_within(hi, hi_open, b.hi, b.hi_open);
}

StraightAnnulus truncate(const StraightAnnulus& a, double d)
{
    if (!(d >= 0) || !std::isfinite(d)) throw DomainError("truncation depth must be finite and non-negative");
    StraightAnnulus out = a;
    const double cut = d * a.circumference;
    if (a.lo_open && std::isfinite(a.lo)) out.lo = a.lo + cut;
    if (a.hi_open && std::isfinite(a.hi)) out.hi = a.hi - cut;
    if (out.empty()) {
        const double mid = std::isfinite(out.lo) ? out.lo : out.hi;
        out.lo = out.hi = mid;
        out.lo_open = out.hi_open = true;
    }
    return out;
}

bool truncation_quasimonotone_check(const StraightAnnulus& a, const StraightAnnulus& b, double d)
{
    if (a.circumference != b.circumference) throw ConfigError("annuli have different circumferences");
    if (!a.contains(b)) throw DomainError("second annulus must lie in the first");
    return truncate(a, d).contains(truncate(b, d + 2));
}

// ---------------------------------------------------------------------------

ExtendedCollar::ExtendedCollar(double core_length, double graft_length, bool degenerate)
    : len_(core_length), graft_(graft_length), degenerate_(degenerate)
{
    if (!(core_length > 0) || !std::isfinite(core_length)) throw DomainError("core length must be positive and finite");
    require_graft_length(graft_length);
    rho_ = pants::standard_collar(core_length).conformal_half_width;
    if (infinite()) {
        omega_ = 0;
        rho_scaled_ = trig::half_pi;
    } else {
        omega_ = trig::pi / (trig::pi + 2 * graft_);
        rho_scaled_ = (graft_ + rho_) * omega_;
    }
}

bool ExtendedCollar::infinite() const { return std::isinf(graft_); }

double ExtendedCollar::modulus() const { return infinite() ? inf : (2 * rho_ + 2 * graft_) / len_; }

void ExtendedCollar::require_domain(ConformalPoint p) const
{
    if (!std::isfinite(p.x) || !std::isfinite(p.y)) throw DomainError("collar coordinates must be finite");
    if (infinite() ? p.y > rho_ : (p.y < -graft_ || p.y >= rho_))
        throw DomainError("point lies outside the extended collar");
}

ConformalPoint ExtendedCollar::to_rescaled(ConformalPoint p) const
{
    if (infinite()) throw DomainError("infinite grafting has no rescaled parametrization");
    require_domain(p);
    return {p.x * omega_, (p.y + graft_) * omega_};
}

SemiHyperbolicPoint ExtendedCollar::to_semihyperbolic(ConformalPoint p) const
{
    const ConformalPoint r = to_rescaled(p);
    return {r.x, trig::sec_integral(r.y)};
}

ConformalPoint ExtendedCollar::from_rescaled(ConformalPoint q) const
{
    if (infinite()) throw DomainError("infinite grafting has no rescaled parametrization");
    const ConformalPoint p{q.x / omega_, q.y / omega_ - graft_};
    require_domain(p);
    return p;
}

ConformalPoint ExtendedCollar::from_semihyperbolic(SemiHyperbolicPoint q) const
{
    return from_rescaled({q.x, trig::gd(q.s)});
}

ExtendedCollar extended_collar(double core_length, double graft_length, bool degenerate)
{
    return ExtendedCollar(core_length, graft_length, degenerate);
}

// ---------------------------------------------------------------------------

double N_constant(double length_cap)
{
    if (!(length_cap > 0) || !std::isfinite(length_cap)) throw DomainError("length cap must be positive and finite");
    // gd(M_l)/l decreases in l, so the cap realises the infimum.
    const double m = pants::standard_collar(length_cap).conformal_half_width / length_cap;
    return 4 * (6 + m) / m + 1;
}

double M_constant(double length_cap) { return std::log(N_constant(length_cap) + 1); }

double truncation_distance_lower(double d, double length_cap)
{
    if (!(d > 2)) throw DomainError("truncation depth must exceed 2");
    return std::max(0.0, std::log(d - 2) - M_constant(length_cap));
}

LengthInterval grafted_length_bounds(double core_length, double graft_length, double length_cap)
{
    if (!(core_length > 0) || !std::isfinite(core_length)) throw DomainError("core length must be positive and finite");
    if (core_length > length_cap) throw DomainError("core length exceeds the length cap");
    require_graft_length(graft_length);
    if (std::isinf(graft_length)) return {0, 0, true};
    const double m_ext = ExtendedCollar(core_length, graft_length).modulus();
    const double n = N_constant(length_cap);
    return {trig::pi / (m_ext + 2 * n + 2), trig::pi / m_ext, false};
}

double shat_relation(double s, double core_length, double graft_length)
{
    if (!(s >= 0) || !std::isfinite(s)) throw DomainError("semi-hyperbolic coordinate must be finite and non-negative");
    require_graft_length(graft_length);
    if (std::isinf(graft_length)) throw DomainError("infinite grafting has no semi-hyperbolic coordinate");
    const double rho = pants::standard_collar(core_length).conformal_half_width;
    const double factor = (trig::pi + 2 * graft_length) / (2 * rho + 2 * graft_length);
    const double angle = factor * trig::gd(s);
    if (angle >= trig::half_pi) throw DomainError("scaled angle leaves the strip");
    return trig::sec_integral(angle);
}

// ---------------------------------------------------------------------------

GraftingData::GraftingData(pants::SurfaceFN surface, std::vector<GraftingCurve> curves, double length_cap)
    : surface_(std::move(surface)), curves_(std::move(curves)), cap_(length_cap)
{
    if (!(cap_ > 0) || !std::isfinite(cap_)) throw ConfigError("length cap must be positive and finite");
    std::set<std::string> seen;
    for (const auto& c : curves_) {
        if (!seen.insert(c.id).second) throw ConfigError("grafting curve '" + c.id + "' listed twice");
        const pants::Curve& base = surface_.curve(c.id);
        if (base.length > cap_) throw DomainError("grafting curve '" + c.id + "' is longer than the length cap");
        require_graft_length(c.graft_length);
    }
}

const GraftingCurve& GraftingData::find(const std::string& id) const
{
    for (const auto& c : curves_)
        if (c.id == id) return c;
    throw ConfigError("'" + id + "' is not a grafting curve");
}

bool GraftingData::degenerate(const std::string& id) const
{
    find(id);
    return surface_.curve(id).kind == pants::CurveKind::Degenerate;
}

ExtendedCollar GraftingData::collar(const std::string& id) const
{
    return ExtendedCollar(surface_.curve(id).length, find(id).graft_length, degenerate(id));
}

LengthInterval GraftingData::length_bounds(const std::string& id) const
{
    return grafted_length_bounds(surface_.curve(id).length, find(id).graft_length, cap_);
}

} // namespace hypgraft::graft
