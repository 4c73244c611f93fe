#pragma once

// The three quadratic-form types cutting out nonhyperelliptic genus-4
// canonical curves, their coefficient matrices, and the Bruhat-cell pattern
// families parametrizing the orthogonal similitude groups.

#include <optional>
#include <string>
#include <vector>

#include "ssp4/linalg.hpp"
#include "ssp4/mpoly.hpp"

namespace ssp4 {

enum class QKind { N1, N2, Dege };

std::string qkind_name(QKind k);
QKind qkind_parse(const std::string& s);

struct QuadraticForm {
    QKind kind;
    FieldElem eps;  // meaningful only for N2 (a non-square)
    Poly q;         // the form in x,y,z,w over F_p
    Mat4 phi;       // coefficient matrix as displayed
};

// The geometric ring K[x,y,z,w] shared by all forms and curves.
RingPtr geometry_ring();

// eps defaults to 2, the smallest non-square mod 11.
QuadraticForm make_quadratic_form(QKind kind, const Field* f);
QuadraticForm make_quadratic_form(QKind kind, const Field* f, const FieldElem& eps);

Mat4 coefficient_matrix(const QuadraticForm& q);

// mu with g^T phi g = mu phi, mu != 0; nullopt when no such scalar exists.
std::optional<FieldElem> similitude_factor(const Mat4& g, const Mat4& phi);

enum class PatternMode { Rational, Closure };

// One Bruhat cell: a 4x4 matrix of parameter polynomials plus the side
// constraints tying inverses and nonzero conditions together. The parameter
// ring lists variables in the solving precedence.
struct PatternMatrix {
    std::string id;
    RingPtr ring;
    std::array<Poly, 16> entry;
    std::vector<Poly> constraints;

    Mat4 instantiate(const std::vector<FieldElem>& point) const;
};

// The pattern family for a kind: 8 cells for N1, 4 for N2, 4 for Dege.
// The scalar variable r is pinned to 1 in both modes (the cube map is
// surjective on F_11 and on the algebraic closure, so r = 1 may be assumed);
// the modes differ only in how the solutions are later sought.
std::vector<PatternMatrix> bruhat_patterns(QKind kind, PatternMode mode, const Field* f,
                                           const FieldElem& eps);
std::vector<PatternMatrix> bruhat_patterns(QKind kind, PatternMode mode, const Field* f);

// The general scalar constraint set with r free and r*v = 1, applicable
// over fields where the cube map is not surjective. Kept for audit dumps;
// the resulting ideal is not zero-dimensional over the closure.
std::vector<std::string> general_scalar_constraint_names(QKind kind);

// Audit dump of a pattern (entries and constraints as text).
std::string pattern_dump(const PatternMatrix& p);

}  // namespace ssp4
