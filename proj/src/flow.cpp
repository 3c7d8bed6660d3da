#include "hypgraft/flow.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "hypgraft/errors.hpp"
#include "hypgraft/hyptrig.hpp"

namespace hypgraft::flow {

namespace {

constexpr double inf = std::numeric_limits<double>::infinity();
constexpr double inner_delta = 0.25;

void require_unit(double t)
{
    if (!(t >= 0 && t <= 1)) throw DomainError("time must lie in [0, 1]");
}

void require_positive(double x, const char* what)
{
    if (!(x > 0) || !std::isfinite(x)) throw DomainError(std::string(what) + " must be positive and finite");
}

double inner_radius(double len, const FlowParams& params)
{
    const double taper = std::max(0.0, 1 - len / (2 * params.epsilon));
    return std::asinh(inner_delta * taper / std::sinh(len / 2));
}

// Inner block in semi-hyperbolic coordinates of the extended collar.
double inner_depth(const SubannulusBounds& b, double s, const FlowParams& params)
{
    const double half = b.inner_radius / 2;
    if (s <= half) return s;
    return Stretch(half, b.inner_radius, half, b.inner_target, params)(s);
}

double inner_conformal(const SubannulusBounds& b, double s, const FlowParams& params)
{
    return trig::gd(inner_depth(b, s, params)) / b.omega - b.graft_length / 2;
}

double outer_conformal(const SubannulusBounds& b, double angle, const FlowParams& params)
{
    return StretchStar(b.inner_angle, b.outer_angle, b.inner_conformal, b.outer_angle, params)(angle);
}

std::optional<double> semihyperbolic_of(const SubannulusBounds& b, double conformal)
{
    if (b.infinite()) return std::nullopt;
    return trig::sec_integral((conformal + b.graft_length / 2) * b.omega);
}

} // namespace

double grafting_length(double t, double len, double sys, const FlowParams& params)
{
    require_unit(t);
    require_positive(len, "curve length");
    require_positive(sys, "systole");
    require_positive(params.epsilon, "epsilon");
    const double minsys = std::min(sys, params.epsilon);
    return params.hmap(t * params.bump(len / minsys));
}

bool SubannulusBounds::infinite() const { return std::isinf(graft_length); }

SubannulusBounds subannuli_bounds(double len, double t, double sys, const FlowParams& params)
{
    require_positive(len, "curve length");
    if (len > 2 * params.epsilon) throw DomainError("curve is longer than 2 epsilon");
    SubannulusBounds b;
    b.graft_length = grafting_length(t, len, sys, params);
    const double u = params.hmap_inverse(b.graft_length);
    b.collar_radius = pants::standard_collar(len).radius;
    b.inner_radius = inner_radius(len, params);
    b.outer_radius = b.inner_radius + (b.collar_radius - b.inner_radius) * u / 2;
    b.inner_angle = trig::gd(b.inner_radius);
    b.outer_angle = trig::gd(b.outer_radius);
    if (b.infinite()) {
        b.omega = 0;
        b.inner_target = b.outer_target = inf;
        b.inner_conformal = -inf;
        return b;
    }
    b.omega = trig::pi / (trig::pi + b.graft_length);
    b.outer_target = trig::sec_integral((b.graft_length / 2 + b.outer_angle) * b.omega);
    b.inner_target = (1 - u / 4) * b.outer_target;
    b.inner_conformal = trig::gd(b.inner_target) / b.omega - b.graft_length / 2;
    return b;
}

CuspBounds cusp_bounds(double sigma)
{
    if (!(sigma > 0 && sigma < 1)) throw DomainError("cusp thinness must lie in (0, 1)");
    const double mu = std::log(1 / sigma);
    return {mu, mu - 1};
}

Stretch::Stretch(double a, double b, double a2, double b2, const FlowParams& params)
    : a_(a), b_(b), a2_(a2), b2_(b2), params_(params)
{
    if (!std::isfinite(a) || !std::isfinite(b) || !std::isfinite(a2) || !(a < b) || !(a2 < b2))
        throw DomainError("stretch needs non-degenerate intervals");
    scale_ = params_.hmap_inverse(b2 - a2) / params_.hmap_inverse(b - a);
}

double Stretch::operator()(double y) const
{
    if (!(y >= a_ && y <= b_)) throw DomainError("stretch argument outside its interval");
    return a2_ + params_.hmap(params_.hmap_inverse(y - a_) * scale_);
}

double Stretch::inverse(double z) const
{
    if (!(z >= a2_ && z <= b2_)) throw DomainError("stretch value outside its interval");
    return a_ + params_.hmap(params_.hmap_inverse(z - a2_) / scale_);
}

StretchStar::StretchStar(double a, double b, double a2, double b2, const FlowParams& params)
    : a_(a), b_(b), a2_(a2), b2_(b2), params_(params)
{
    if (!std::isfinite(a) || !std::isfinite(b) || !std::isfinite(b2) || !(a < b) || !(a2 < b2))
        throw DomainError("stretch needs non-degenerate intervals");
    scale_ = params_.hmap_inverse(b2 - a2) / params_.hmap_inverse(b - a);
}

double StretchStar::operator()(double y) const
{
    if (!(y >= a_ && y <= b_)) throw DomainError("stretch argument outside its interval");
    return b2_ - params_.hmap(params_.hmap_inverse(b_ - y) * scale_);
}

double StretchStar::inverse(double z) const
{
    if (!(z >= a2_ && z <= b2_)) throw DomainError("stretch value outside its interval");
    return b_ - params_.hmap(params_.hmap_inverse(b2_ - z) / scale_);
}

AnnulusImage h_t_annulus(double len, double t, double sys, double x, double s, const FlowParams& params)
{
    const SubannulusBounds b = subannuli_bounds(len, t, sys, params);
    if (!(s >= 0 && s < b.collar_radius)) throw DomainError("point lies outside the standard collar");
    if (!std::isfinite(x)) throw DomainError("collar coordinate must be finite");

    AnnulusImage out;
    out.x = x;
    out.region = s <= b.inner_radius ? AnnulusRegion::Inner
               : s <= b.outer_radius ? AnnulusRegion::Outer
                                     : AnnulusRegion::Fixed;
    if (b.graft_length == 0) {
        out.conformal = trig::gd(s);
        out.semihyperbolic = s;
        return out;
    }
    switch (out.region) {
    case AnnulusRegion::Inner:
        if (b.infinite()) throw DomainError("point lies in the part pinched off at t = 1");
        out.semihyperbolic = inner_depth(b, s, params);
        out.conformal = trig::gd(*out.semihyperbolic) / b.omega - b.graft_length / 2;
        break;
    case AnnulusRegion::Outer:
        out.conformal = outer_conformal(b, trig::gd(s), params);
        out.semihyperbolic = semihyperbolic_of(b, out.conformal);
        break;
    case AnnulusRegion::Fixed:
        out.conformal = trig::gd(s);
        out.semihyperbolic = semihyperbolic_of(b, out.conformal);
        break;
    }
    return out;
}

double h_t_seam_mismatch(double len, double t, double sys, const FlowParams& params)
{
    const SubannulusBounds b = subannuli_bounds(len, t, sys, params);
    if (b.graft_length == 0) return 0;
    double worst = 0;
    if (!b.infinite()) {
        const double half = b.inner_radius / 2;
        const double identity_side = trig::gd(half) / b.omega - b.graft_length / 2;
        worst = std::max(worst, std::fabs(identity_side - inner_conformal(b, half, params)));
        worst = std::max(worst, std::fabs(inner_conformal(b, b.inner_radius, params) -
                                          outer_conformal(b, b.inner_angle, params)));
    }
    worst = std::max(worst, std::fabs(outer_conformal(b, b.outer_angle, params) - b.outer_angle));
    return worst;
}

double h_t_cusp(double sigma, double t, double y, const FlowParams& params)
{
    require_unit(t);
    const CuspBounds c = cusp_bounds(sigma);
    if (!(y >= 0) || !std::isfinite(y)) throw DomainError("cusp coordinate must be finite and non-negative");
    const double push = params.hmap(t);
    if (y >= c.inner) {
        if (std::isinf(push)) throw DomainError("point lies in the part pushed into the cusp at t = 1");
        return y + push;
    }
    if (y >= c.outer && push > 0) return Stretch(c.outer, c.inner, c.outer, c.inner + push, params)(y);
    return y;
}

double inner_limit_depth(double inner_radius, double s, const FlowParams& params)
{
    if (!(inner_radius > 0) || !(s >= 0 && s < inner_radius)) throw DomainError("depth must lie in [0, R_I)");
    const double half = inner_radius / 2;
    if (s <= half) return s;
    return Stretch(half, inner_radius, half, inf, params)(s);
}

psl2::ElementarySubgroup classify_limit(const LimitState& state, const FlowParams& params)
{
    if (!std::isfinite(state.theta)) throw ConfigError("angle must be finite");
    const psl2::BoundaryPoint toward = psl2::from_disc_boundary(state.theta);
    if (state.position == LimitState::Position::CuspThin) return psl2::ElementarySubgroup::parabolic(toward);

    if (!(state.core_length > 0) || state.core_length > 2 * params.epsilon)
        throw ConfigError("collar core length must lie in (0, 2 epsilon]");
    const double r = inner_radius(state.core_length, params);
    if (!(state.s >= 0)) throw ConfigError("depth must be non-negative");
    const bool on_boundary = std::fabs(state.s - r) <= 1e-12 * std::max(1.0, r);
    if (state.position == LimitState::Position::CollarBoundary) {
        if (!on_boundary) throw ConfigError("boundary state needs s = R_I");
        return psl2::ElementarySubgroup::parabolic(toward);
    }
    if (on_boundary || state.s > r) throw ConfigError("interior state needs s < R_I");
    const psl2::Axis axis = psl2::axis_from_disc(inner_limit_depth(r, state.s, params), state.theta);
    return state.curve_kind == pants::CurveKind::Regular ? psl2::ElementarySubgroup::axis_group(axis)
                                                         : psl2::ElementarySubgroup::axis_full(axis);
}

} // namespace hypgraft::flow
