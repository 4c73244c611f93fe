#pragma once

// Automorphism groups of canonical genus-4 curves V(Q, P): build the
// constraint system g.P = r P mod Q per Bruhat cell, solve it (Groebner
// path) or scan it (brute path), quotient by scalars, and assemble the
// finite group with generators.

#include <optional>
#include <string>
#include <vector>

#include "ssp4/groebner.hpp"
#include "ssp4/ortho.hpp"

namespace ssp4 {

enum class Engine { Groebner, Brute, Both };

std::string engine_name(Engine e);
Engine engine_parse(const std::string& s);

// Scalar-class representative: first nonzero row-major entry scaled to 1,
// entries lowered to the smallest field of definition.
struct ProjAutomorphism {
    Mat4 m;
};

// Throws SingularMatrix on non-invertible input. Idempotent.
ProjAutomorphism scalar_canonicalize(const Mat4& g);

// Order in the projective group (smallest k with g^k scalar).
int proj_order(const Mat4& g);

// Ratio r with g.P = r P mod Q, if any.
std::optional<FieldElem> action_ratio(const QuadraticForm& Q, const Poly& P, const Mat4& g);

struct AutGroupResult {
    std::string curve_id;
    QKind kind;
    const Field* field = nullptr;         // smallest field containing all entries
    std::vector<ProjAutomorphism> elems;  // identity first, rest sorted by key
    std::vector<uint16_t> table;          // n x n multiplication table (indices)
    std::vector<int> generators;          // indices into elems
    uint64_t order = 0;
    std::string engine_used;
    double seconds = 0;

    int index_of(const Mat4& g) const;  // -1 when not a member
    int inverse_of(int i) const;
};

struct AutGroupOptions {
    Engine engine = Engine::Both;
    bool parallel = true;
    SolveOptions solve;
};

// Collect the coefficients of (g_i.P - r P) mod Q over the cubic monomial
// basis, as polynomials in the pattern parameters, together with the
// pattern's side constraints.
std::vector<Poly> build_constraint_system(const QuadraticForm& Q, const Poly& P,
                                          const PatternMatrix& pat);

// The main entry point: q = 11, qprime in {0, q}; qprime = q computes
// Aut_{F_q}, qprime = 0 computes Aut over the closure (within the capped
// tower). The brute engine requires qprime = q.
AutGroupResult automorphism_group(const QuadraticForm& Q, const Poly& P, int q, int qprime,
                                  const AutGroupOptions& opts = {});

// Greedy minimal generating set over the element list (deterministic).
std::vector<int> generating_set(const AutGroupResult& g);

}  // namespace ssp4
