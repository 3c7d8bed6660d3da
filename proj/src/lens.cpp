#include "hypgraft/lens.hpp"

#include <algorithm>
#include <cstdlib>
#include <numeric>
#include <sstream>
#include <utility>

#include "hypgraft/errors.hpp"

namespace hypgraft::lens {

namespace {

long long mod(long long a, long long p)
{
    const long long r = a % p;
    return r < 0 ? r + p : r;
}

std::string power_list(const std::vector<long long>& powers)
{
    std::ostringstream out;
    out << "g^" << powers[0];
    for (std::size_t i = 1; i < powers.size(); ++i) out << " (or g^" << powers[i] << ")";
    return out.str();
}

} // namespace

long long inverse_mod(long long q, long long p)
{
    if (p < 2) throw DomainError("inverse needs modulus at least 2");
    long long r0 = p, r1 = mod(q, p), s0 = 0, s1 = 1;
    while (r1 != 0) {
        const long long k = r0 / r1;
        r0 = std::exchange(r1, r0 - k * r1);
        s0 = std::exchange(s1, s0 - k * s1);
    }
    if (r0 != 1) throw DomainError("q is not invertible modulo p");
    return mod(s0, p);
}

LensSpace::LensSpace(long long p, long long q)
{
    p_ = std::llabs(p);
    if (p_ <= 1) {
        if (p_ == 0 && std::llabs(q) != 1) throw DomainError("L(0,q) needs q = +-1");
        q_ = 0;
        return;
    }
    const long long r = mod(q, p_);
    if (std::gcd(r, p_) != 1) throw DomainError("L(p,q) needs gcd(p,q) = 1");
    const long long inv = inverse_mod(r, p_);
    q_ = std::min({r, p_ - r, inv, p_ - inv});
}

std::string LensSpace::to_string() const
{
    return "L(" + std::to_string(p_) + "," + std::to_string(q_) + ")";
}

bool lens_equiv(const LensSpace& a, const LensSpace& b)
{
    if (a.p() != b.p()) return false;
    if (a.p() <= 1) return true;
    const long long p = a.p();
    const long long q = b.q();
    const long long inv = inverse_mod(a.q(), p);
    return q == a.q() || q == p - a.q() || q == inv || q == p - inv;
}

ConeData ConeData::parse(const std::string& text)
{
    ConeData cd;
    std::istringstream in(text);
    std::string item;
    std::size_t i = 0;
    while (std::getline(in, item, ',')) {
        if (i == 3) throw ConfigError("expected exactly three orders");
        const auto first = item.find_first_not_of(" \t");
        item = first == std::string::npos ? std::string{} : item.substr(first, item.find_last_not_of(" \t") - first + 1);
        if (item == "inf" || item == "∞") {
            cd.orders[i++] = std::nullopt;
            continue;
        }
        std::size_t used = 0;
        int value = 0;
        try {
            value = std::stoi(item, &used);
        } catch (const std::exception&) {
            throw ConfigError("cannot parse cone order '" + item + "'");
        }
        if (used != item.size() || value < 2) throw ConfigError("cone orders are integers >= 2 or inf");
        cd.orders[i++] = value;
    }
    if (i != 3) throw ConfigError("expected exactly three orders");
    return cd;
}

int ConeData::cusps() const
{
    return static_cast<int>(std::count(orders.begin(), orders.end(), std::nullopt));
}

std::string LensResult::summary() const
{
    std::string raw = "L(" + std::to_string(p) + "," + std::to_string(q) + ")";
    if (lens_case == LensCase::ThreeCusps) return "S^3";
    if (space.is_sphere()) return raw + " ≅ S^3";
    if (space.p() == p && space.q() == q) return raw;
    return raw + " ≅ " + space.to_string();
}

LensResult lens_from_orders(const ConeData& cones)
{
    std::vector<long long> finite;
    for (const auto& o : cones.orders)
        if (o) {
            if (*o < 2) throw ConfigError("cone orders must be at least 2");
            finite.push_back(*o);
        }
    std::sort(finite.begin(), finite.end());

    LensResult r;
    switch (finite.size()) {
    case 3:
        throw Unsupported("compact sphere: the quotient of the unit tangent bundle is not computed");
    case 2: {
        const long long n = finite[0], k = finite[1];
        if (n == k) {
            if (k == 2) throw DomainError("orders (2,2,inf) do not give a hyperbolic orbifold");
            r.lens_case = LensCase::EqualCones;
            r.p = k - 2;
            r.q = 1;
            r.fibre_powers = {k, 2};
        } else {
            r.lens_case = LensCase::DistinctCones;
            r.p = n * k - n - k;
            r.q = n - 1;
            r.fibre_powers = {n, k};
        }
        break;
    }
    case 1:
        r.lens_case = LensCase::OneCone;
        r.p = 2 * finite[0] - 2;
        r.q = 1;
        r.fibre_powers = {2 * finite[0], 2};
        break;
    default:
        r.lens_case = LensCase::ThreeCusps;
        r.p = 1;
        r.q = 0;
        break;
    }
    r.space = LensSpace(r.p, r.q);
    if (r.fibre_powers.empty())
        r.note = "pi_1 trivial; N is null-homotopic";
    else
        r.note = "pi_1 = Z/" + std::to_string(r.space.p()) + "; N is homotopic to " + power_list(r.fibre_powers) +
                 " for a generator g";
    return r;
}

Meridians meridian_arithmetic(int n, int k)
{
    if (n < 2 || k < 2) throw DomainError("cone orders must be at least 2");
    const TorusClass alpha_k{1, 0};
    const TorusClass beta{0, 1};
    Meridians m;
    m.alpha_n = {-alpha_k.alpha + beta.alpha, -alpha_k.beta + beta.beta};
    m.m_k = {k * alpha_k.alpha - beta.alpha, k * alpha_k.beta - beta.beta};
    m.m_n = {n * m.alpha_n.alpha - beta.alpha, n * m.alpha_n.beta - beta.beta};

    // Solve m_n = p alpha_k + q m_k by Cramer's rule in the basis (alpha_k, beta).
    const long long det = alpha_k.alpha * m.m_k.beta - m.m_k.alpha * alpha_k.beta;
    const long long p_num = m.m_n.alpha * m.m_k.beta - m.m_k.alpha * m.m_n.beta;
    const long long q_num = alpha_k.alpha * m.m_n.beta - m.m_n.alpha * alpha_k.beta;
    m.p = p_num / det;
    m.q = q_num / det;
    return m;
}

} // namespace hypgraft::lens
