#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

namespace hypgraft::lens {

// L(p,q) in canonical form: p >= 0 and q the smallest member of the orbit
// {+-q^{+-1} mod p}.  p = 1 is the 3-sphere and p = 0 is S^2 x S^1; both
// carry q = 0.
class LensSpace {
public:
    LensSpace(long long p, long long q);

    long long p() const { return p_; }
    long long q() const { return q_; }
    bool is_sphere() const { return p_ == 1; }
    std::string to_string() const;

    friend bool operator==(const LensSpace&, const LensSpace&) = default;

private:
    long long p_ = 1;
    long long q_ = 0;
};

bool lens_equiv(const LensSpace& a, const LensSpace& b);

// Inverse of q modulo p, for gcd(p,q) = 1 and p > 1.
long long inverse_mod(long long q, long long p);

// Cone orders of a sphere with three cone points or cusps; nullopt is a cusp.
struct ConeData {
    std::array<std::optional<int>, 3> orders;

    static ConeData parse(const std::string& text); // "2,3,inf"
    int cusps() const;
};

enum class LensCase { DistinctCones, EqualCones, OneCone, ThreeCusps };

struct LensResult {
    LensCase lens_case = LensCase::ThreeCusps;
    long long p = 1; // as produced by the case formula, before canonicalization
    long long q = 0;
    LensSpace space{1, 0};
    std::vector<long long> fibre_powers; // N is homotopic to g^k for each listed k
    std::string note;

    std::string summary() const; // e.g. "L(1,1) ≅ S^3"
};

// Throws Unsupported without a cusp and DomainError for non-hyperbolic data.
LensResult lens_from_orders(const ConeData& cones);

// Integer vectors in the basis (alpha_k, beta) of the Heegaard torus.
struct TorusClass {
    long long alpha = 0;
    long long beta = 0;
    friend bool operator==(const TorusClass&, const TorusClass&) = default;
};

struct Meridians {
    TorusClass alpha_n;  // section along the n-side
    TorusClass m_k;
    TorusClass m_n;
    long long p = 0;     // m_n = p alpha_k + q m_k
    long long q = 0;
};

Meridians meridian_arithmetic(int n, int k);

} // namespace hypgraft::lens
