#include "hypgraft/hyptrig.hpp"

#include <cmath>
#include <limits>
#include <string>

#include "hypgraft/errors.hpp"

namespace hypgraft::trig {

namespace {

constexpr double ln2 = 0.69314718055994530942;

void require_finite(double x, const char* what)
{
    if (!std::isfinite(x)) throw DomainError(std::string(what) + ": argument not finite");
}

} // namespace

double log_sinh(double x)
{
    if (!(x > 0)) throw DomainError("log_sinh: argument must be positive");
    if (x < 20) return std::log(std::sinh(x));
    // sinh x = e^x (1 - e^{-2x}) / 2
    return x - ln2 + std::log1p(-std::exp(-2 * x));
}

double log_cosh(double x)
{
    x = std::fabs(x);
    if (x < 20) return std::log(std::cosh(x));
    return x - ln2 + std::log1p(std::exp(-2 * x));
}

double acosh_clamped(double x)
{
    if (std::isnan(x)) throw DomainError("acosh: NaN argument");
    if (x < 1) {
        if (x < 1 - 1e-12) throw DomainError("acosh: argument below 1");
        return 0;
    }
    return std::acosh(x);
}

double pentagon_side(double a, double b)
{
    require_finite(a, "pentagon_side");
    require_finite(b, "pentagon_side");
    if (!(a > 0 && b > 0)) throw DomainError("pentagon_side: sides must be positive");
    const double log_prod = log_sinh(a) + log_sinh(b);
    if (log_prod > 30) return ln2 + log_prod;
    const double prod = std::exp(log_prod);
    if (prod < 1 - 1e-12) throw DomainError("pentagon_side: sinh(a) sinh(b) < 1, no right-angled pentagon");
    return acosh_clamped(prod);
}

double hexagon_opposite(double a, double b, double c)
{
    require_finite(a, "hexagon_opposite");
    require_finite(b, "hexagon_opposite");
    require_finite(c, "hexagon_opposite");
    if (!(a >= 0 && b > 0 && c > 0)) throw DomainError("hexagon_opposite: need a >= 0 and b, c > 0");
    // coth b coth c + cosh a / (sinh b sinh c), the second term in log form
    const double coth_b = 1 / std::tanh(b);
    const double coth_c = 1 / std::tanh(c);
    const double log_ratio = log_cosh(a) - log_sinh(b) - log_sinh(c);
    if (log_ratio > 30) {
        // acosh(x) = ln(2x) up to e^{-60}
        return ln2 + log_ratio + std::log1p(coth_b * coth_c * std::exp(-log_ratio));
    }
    return acosh_clamped(coth_b * coth_c + std::exp(log_ratio));
}

double sec_integral(double y)
{
    require_finite(y, "sec_integral");
    if (!(std::fabs(y) < half_pi)) throw DomainError("sec_integral: |y| must be below pi/2");
    // ln tan(y/2 + pi/4) = asinh(tan y); the right side is accurate near 0
    return std::asinh(std::tan(y));
}

double gd(double x)
{
    if (std::isnan(x)) throw DomainError("gd: NaN argument");
    if (std::isinf(x)) return std::copysign(half_pi, x);
    return std::atan(std::sinh(x));
}

double lambert_bound(double r, double len)
{
    require_finite(r, "lambert_bound");
    require_finite(len, "lambert_bound");
    if (!(r > 0 && len > 0)) throw DomainError("lambert_bound: r and len must be positive");
    return std::tanh(r) / std::tanh(len);
}

} // namespace hypgraft::trig
