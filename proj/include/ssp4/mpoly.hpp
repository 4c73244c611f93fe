#pragma once

// Sparse multivariate polynomials over ff fields, with lex/grevlex monomial
// orders, normal forms against a divisor list, linear change of variables,
// and partial evaluation. Terms are kept sorted descending under a fixed
// canonical order (grevlex, ring variable order); order-sensitive operations
// re-sort views internally.

#include <array>
#include <cstdint>
#include <functional>
#include <map>
#include <memory>
#include <string>
#include <vector>

#include "ssp4/ff.hpp"

namespace ssp4 {

inline constexpr int kMaxVars = 20;

struct Ring {
    std::vector<std::string> names;  // index order doubles as default precedence
    int nvars() const { return static_cast<int>(names.size()); }
    int var(const std::string& name) const;  // -1 when absent
};

using RingPtr = std::shared_ptr<const Ring>;
RingPtr make_ring(std::vector<std::string> names);

struct Mono {
    std::array<uint8_t, kMaxVars> e{};
    uint16_t deg = 0;

    bool operator==(const Mono& o) const { return deg == o.deg && e == o.e; }
    bool divides(const Mono& o) const {
        if (deg > o.deg) return false;
        for (int i = 0; i < kMaxVars; ++i)
            if (e[i] > o.e[i]) return false;
        return true;
    }
    bool is_one() const { return deg == 0; }
};

Mono mono_one();
Mono mono_var(int i, int exp = 1);
Mono mono_mul(const Mono& a, const Mono& b);
Mono mono_div(const Mono& a, const Mono& b);  // requires b | a
Mono mono_lcm(const Mono& a, const Mono& b);
bool mono_coprime(const Mono& a, const Mono& b);

enum class OrderKind { Lex, Grevlex };

// Total monomial order: kind plus a variable precedence list (most
// significant first). An empty precedence means the ring's natural order.
struct MonomialOrder {
    OrderKind kind = OrderKind::Grevlex;
    std::vector<uint8_t> prec;

    // three-way compare: >0 when a > b
    int cmp(const Mono& a, const Mono& b, int nvars) const;
    bool greater(const Mono& a, const Mono& b, int nvars) const { return cmp(a, b, nvars) > 0; }
};

inline MonomialOrder lex_order() { return {OrderKind::Lex, {}}; }
inline MonomialOrder grevlex_order() { return {OrderKind::Grevlex, {}}; }

struct Term {
    Mono m;
    FieldElem c;
};

// Sparse polynomial: nonzero terms sorted descending under canonical grevlex.
class Poly {
  public:
    Poly() = default;
    Poly(const Field* f, RingPtr ring) : f_(f), ring_(std::move(ring)) {}

    const Field* field() const { return f_; }
    const RingPtr& ring() const { return ring_; }
    bool is_zero() const { return t_.empty(); }
    int nterms() const { return static_cast<int>(t_.size()); }
    const std::vector<Term>& terms() const { return t_; }
    int total_degree() const;

    // term construction: accumulate then normalize
    void add_term(const Mono& m, const FieldElem& c);
    void normalize();  // sort canonical, merge, drop zeros

    Poly lifted(const Field* to) const;

    bool operator==(const Poly& o) const;

  private:
    const Field* f_ = nullptr;
    RingPtr ring_;
    std::vector<Term> t_;
};

Poly poly_zero(const Field* f, const RingPtr& r);
Poly poly_const(const Field* f, const RingPtr& r, const FieldElem& c);
Poly poly_var(const Field* f, const RingPtr& r, int var, int exp = 1);

Poly operator+(const Poly& a, const Poly& b);
Poly operator-(const Poly& a, const Poly& b);
Poly operator-(const Poly& a);
Poly operator*(const Poly& a, const Poly& b);
Poly poly_scale(const Poly& a, const FieldElem& s);
Poly poly_mul_term(const Poly& a, const Mono& m, const FieldElem& c);
Poly poly_monic(const Poly& a, const MonomialOrder& ord);

// Leading term under ord.
Term poly_lead(const Poly& a, const MonomialOrder& ord);

// Normal form of f against the list G: repeatedly reduce the largest
// reducible monomial by the first applicable divisor in list order.
Poly normal_form(const Poly& f, const std::vector<Poly>& G, const MonomialOrder& ord);

// P((x_0,...,x_{n-1}) * g^T) for an n x n matrix over P's field (entries
// row-major): variable i is replaced by the linear form given by row i of g.
Poly apply_linear_substitution(const Poly& P, const std::vector<FieldElem>& g);

// Substitute values for a subset of variables (var index -> value); values
// in an extension lift the result's field.
Poly evaluate_partial(const Poly& f, const std::map<int, FieldElem>& bindings);

// Full evaluation (every ring variable bound).
FieldElem evaluate_full(const Poly& f, const std::vector<FieldElem>& point);

std::string poly_to_string(const Poly& f);
// Parse "2*x^2*y + 10*z*w^2 + 3" over the given field/ring. Supports +, -,
// integer coefficients, and names from the ring. Throws ParseError.
Poly poly_parse(const Field* f, const RingPtr& r, const std::string& text);

}  // namespace ssp4
