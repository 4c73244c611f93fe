#pragma once

// Exhaustive Bruhat-cell parameter scans over F_11. This is the brute engine
// behind automorphism_group: every cell of the similitude-group decomposition
// is enumerated over all parameter values, and each instantiated matrix g is
// accepted when g.P is proportional to P modulo Q.
//
// Two implementations are kept deliberately:
//   - brute_scan: the production kernel (incremental checks with early exit,
//     shared tables for the trailing parameter family, optional OpenMP),
//   - brute_scan_reference: a plain per-candidate evaluation used to validate
//     the fast kernel cell-by-cell and as the benchmark baseline.

#include <array>
#include <cstdint>
#include <vector>

#include "ssp4/mpoly.hpp"
#include "ssp4/ortho.hpp"

namespace ssp4 {

// Coefficient vector of a cubic form over F_11 on the 20-monomial basis.
using Cubic20 = std::array<uint8_t, 20>;

// The 20 degree-3 exponent tuples (i,j,k,l), in the fixed scan order.
const std::array<std::array<uint8_t, 4>, 20>& cubic_monomials();

Cubic20 cubic_from_poly(const Poly& P);

struct BruteScanOptions {
    bool parallel = true;     // OpenMP over the outer parameter space
    bool ratio_one_only = false;  // keep only candidates with g.P = P mod Q exactly
    std::vector<int> cells;   // cell indices to scan; empty = all
};

struct BruteScanResult {
    // canonical projective representatives over F_11, sorted, deduplicated
    std::vector<std::array<uint8_t, 16>> matrices;
    uint64_t candidates = 0;
};

BruteScanResult brute_scan(QKind kind, uint32_t eps, const Cubic20& P,
                           const BruteScanOptions& opts = {});

// Serial reference: same cells, same acceptance condition, evaluated naively.
BruteScanResult brute_scan_reference(QKind kind, uint32_t eps, const Cubic20& P,
                                     const std::vector<int>& cells = {});

int brute_cell_count(QKind kind);  // 8 for N1, 4 for N2, 4 for Dege

}  // namespace ssp4
