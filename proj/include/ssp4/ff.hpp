#pragma once

// Exact arithmetic in prime fields F_p and their extensions F_{p^k},
// univariate polynomials over them, root finding and minimal splitting
// fields. Extensions are flattened: every field is a simple extension
// F_p[t]/(m(t)) of the prime field, so element equality and Frobenius are
// cheap. The extension degree over F_p is capped at kDegreeCap.

#include <array>
#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "ssp4/error.hpp"

namespace ssp4 {

inline constexpr uint32_t kDegreeCap = 12;

class FieldTower;

// Immutable field descriptor F_{p^k} = F_p[t]/(modulus). Owned by a
// FieldTower; compared by identity within one tower, or structurally.
struct Field {
    uint32_t p;                     // characteristic, prime, < 256
    uint32_t k;                     // degree over F_p, 1 <= k <= kDegreeCap
    std::vector<uint32_t> modulus;  // monic, degree k, low-to-high; empty iff k == 1
    uint64_t size;                  // p^k
    FieldTower* tower;

    bool same(const Field& o) const {
        return p == o.p && k == o.k && modulus == o.modulus;
    }
};

// Element of F_{p^k}: coefficient vector of the residue class, reduced
// into [0, p). Plain immutable data, trivially copyable.
struct FieldElem {
    const Field* f = nullptr;
    std::array<uint8_t, kDegreeCap> c{};

    bool is_zero() const {
        for (uint32_t i = 0; i < f->k; ++i)
            if (c[i]) return false;
        return true;
    }
    bool is_one() const {
        if (c[0] != 1) return false;
        for (uint32_t i = 1; i < f->k; ++i)
            if (c[i]) return false;
        return true;
    }
    bool operator==(const FieldElem& o) const { return f == o.f && c == o.c; }
    bool operator!=(const FieldElem& o) const { return !(*this == o); }
    // Total order on elements of one field (value as base-p integer,
    // most significant coefficient first). Used for deterministic output.
    bool operator<(const FieldElem& o) const {
        for (int i = static_cast<int>(f->k) - 1; i >= 0; --i)
            if (c[i] != o.c[i]) return c[i] < o.c[i];
        return false;
    }
    uint64_t value() const {
        uint64_t v = 0;
        for (int i = static_cast<int>(f->k) - 1; i >= 0; --i) v = v * f->p + c[i];
        return v;
    }
};

FieldElem fe_make(const Field* f, int64_t a);            // image of an integer
FieldElem fe_make(const Field* f, const std::vector<uint32_t>& coeffs);
FieldElem fe_zero(const Field* f);
FieldElem fe_one(const Field* f);
FieldElem fe_from_value(const Field* f, uint64_t v);     // inverse of value()

FieldElem operator+(const FieldElem& a, const FieldElem& b);
FieldElem operator-(const FieldElem& a, const FieldElem& b);
FieldElem operator-(const FieldElem& a);
FieldElem operator*(const FieldElem& a, const FieldElem& b);

// Multiplicative inverse. Throws ZeroInversion when a == 0.
FieldElem field_inverse(const FieldElem& a);
FieldElem operator/(const FieldElem& a, const FieldElem& b);

FieldElem fe_pow(const FieldElem& a, uint64_t e);
// Frobenius x -> x^p.
FieldElem fe_frobenius(const FieldElem& a);
uint64_t fe_mult_order(const FieldElem& a);

std::string fe_to_string(const FieldElem& a);  // "7", or "t^2+3*t+1" for k > 1

// Registry of the flattened extensions of one prime field, with cached
// embeddings between them. Thread-safe; Field pointers remain valid for
// the lifetime of the tower.
class FieldTower {
  public:
    explicit FieldTower(uint32_t p);
    ~FieldTower();
    FieldTower(const FieldTower&) = delete;
    FieldTower& operator=(const FieldTower&) = delete;

    uint32_t characteristic() const { return p_; }

    // F_{p^k} with the deterministic modulus: the lexicographically smallest
    // monic irreducible of degree k (coefficient vectors compared as base-p
    // integers), except degree 2 over F_11 where t^2+7t+2 is pinned so that
    // t is the distinguished generator zeta of F_121.
    const Field* field(uint32_t k);

    // Process-wide tower for characteristic p.
    static FieldTower& global(uint32_t p);

    // Embedding of a into the field `to`; requires a.f->k | to->k.
    FieldElem embed(const FieldElem& a, const Field* to);
    // Coordinates of a in the subfield `to` (to->k | a.f->k) when a lies in
    // its image, nullopt otherwise.
    std::optional<FieldElem> lower(const FieldElem& a, const Field* to);
    // Smallest field of the tower containing a (k = degree of a over F_p).
    FieldElem minimize(const FieldElem& a);
    // F_{p^lcm(ka,kb)}.
    const Field* compositum(const Field* a, const Field* b);

  private:
    struct Impl;
    uint32_t p_;
    std::unique_ptr<Impl> impl_;
};

// Lift both elements into their compositum field.
void fe_align(FieldElem& a, FieldElem& b);

// ---------------------------------------------------------------------------
// Univariate polynomials over a field (dense, low-to-high coefficients).

struct UPoly {
    const Field* f = nullptr;
    std::vector<FieldElem> c;  // no trailing zeros; empty == zero polynomial

    bool is_zero() const { return c.empty(); }
    int degree() const { return static_cast<int>(c.size()) - 1; }  // -1 for zero
    FieldElem lead() const { return c.back(); }
};

UPoly up_zero(const Field* f);
UPoly up_from(const Field* f, std::vector<FieldElem> coeffs);
UPoly up_from_ints(const Field* f, const std::vector<int64_t>& coeffs);
UPoly up_x(const Field* f);  // the monomial X

UPoly operator+(const UPoly& a, const UPoly& b);
UPoly operator-(const UPoly& a, const UPoly& b);
UPoly operator*(const UPoly& a, const UPoly& b);
UPoly up_scale(const UPoly& a, const FieldElem& s);
UPoly up_monic(const UPoly& a);
UPoly up_derivative(const UPoly& a);
// Quotient and remainder; b must be nonzero.
std::pair<UPoly, UPoly> up_divmod(const UPoly& a, const UPoly& b);
UPoly up_mod(const UPoly& a, const UPoly& b);
// Monic gcd (0 for two zero inputs).
UPoly up_gcd(const UPoly& a, const UPoly& b);
// a^e mod m.
UPoly up_powmod(const UPoly& a, uint64_t e, const UPoly& m);
FieldElem up_eval(const UPoly& a, const FieldElem& x);
// Lift coefficients into a larger field of the same tower.
UPoly up_lift(const UPoly& a, const Field* to);
std::string up_to_string(const UPoly& a, const std::string& var = "X");

// All roots of f in its own coefficient field, multiplicity discarded.
// Exhaustive scan when |L| <= 11^4, equal-degree splitting above.
// Throws ZeroPolynomial when f == 0.
std::vector<FieldElem> univariate_roots(const UPoly& f);

// Smallest extension L' of f's field containing every root of f, plus all
// roots in L'. Throws DegreeCapExceeded when deg(L'/F_p) would pass the cap.
std::pair<const Field*, std::vector<FieldElem>> splitting_field(const UPoly& f);

// Degrees of the irreducible factors of f (with multiplicity) over its own
// field, via distinct-degree factorization. Exposed for the reconstruction
// property tests.
std::vector<int> up_factor_degrees(const UPoly& f);

// Descriptor for F_{p^{k*deg(base)}} in base's tower. Deterministic.
const Field* build_extension(const Field* base, uint32_t k);

}  // namespace ssp4
