#pragma once

// Buchberger engine with Gebauer-Moller pair pruning and sugar selection,
// elimination ideals, the zero-dimensionality criterion, and the
// back-substitution solver with automatic splitting-field growth.

#include <cstdint>
#include <vector>

#include "ssp4/mpoly.hpp"

namespace ssp4 {

struct BuchbergerOptions {
    // processed S-pair budget; exceeding it raises ResourceBudgetExceeded
    uint64_t step_cap = 2'000'000;
    bool trace = false;  // one line per reduced S-pair on stderr
};

struct GroebnerBasis {
    MonomialOrder ord;
    std::vector<Poly> gens;  // reduced: monic, inter-reduced, sorted by LM ascending
    uint64_t pairs_processed = 0;

    bool contains_one() const {
        return gens.size() == 1 && !gens[0].is_zero() && gens[0].total_degree() == 0;
    }
};

// Reduced Groebner basis of <F> under ord; unique per (ideal, order).
GroebnerBasis reduced_groebner_basis(const std::vector<Poly>& F, const MonomialOrder& ord,
                                     const BuchbergerOptions& opts = {});

// True iff every ring variable has a pure-power leading monomial in G
// (finite-dimensional quotient).
bool is_zero_dimensional(const GroebnerBasis& G);

// Vector-space dimension of the quotient (staircase count); requires
// zero-dimensionality.
uint64_t quotient_dimension(const GroebnerBasis& G);

// Generators of G involving only variables i..n-1 (0-based); for a lex basis
// this is a reduced basis of the elimination ideal.
std::vector<Poly> eliminate(const GroebnerBasis& G, int i);

struct VarietySolution {
    std::vector<std::vector<FieldElem>> points;  // coordinates in `field`
    const Field* field = nullptr;                // smallest common field found
};

struct SolveOptions {
    BuchbergerOptions gb;
    bool trace = false;
};

// All points of V(<F>) via lex back-substitution. rational_only keeps only
// points with coordinates in `base` and performs no field growth; otherwise
// the field is grown (within the degree cap) until every branch splits.
// Throws NotZeroDimensional when the pure-power criterion fails.
VarietySolution solve_zero_dimensional(const std::vector<Poly>& F, const Field* base,
                                       bool rational_only, const SolveOptions& opts = {});

}  // namespace ssp4
