#pragma once

// 4x4 matrices over ff fields: the carrier for orthogonal similitude
// elements and projective automorphisms.

#include <array>
#include <optional>
#include <string>

#include "ssp4/ff.hpp"

namespace ssp4 {

struct Mat4 {
    const Field* f = nullptr;
    std::array<FieldElem, 16> a{};

    FieldElem& at(int i, int j) { return a[i * 4 + j]; }
    const FieldElem& at(int i, int j) const { return a[i * 4 + j]; }
    bool operator==(const Mat4& o) const { return f == o.f && a == o.a; }
};

Mat4 mat_zero(const Field* f);
Mat4 mat_identity(const Field* f);
Mat4 mat_from_ints(const Field* f, const std::array<int64_t, 16>& v);
Mat4 mat_diag(const FieldElem& a, const FieldElem& b, const FieldElem& c, const FieldElem& d);

Mat4 mat_mul(const Mat4& x, const Mat4& y);
Mat4 mat_transpose(const Mat4& x);
Mat4 mat_scale(const Mat4& x, const FieldElem& s);
bool mat_is_scalar(const Mat4& x);
// Inverse; throws SingularMatrix.
Mat4 mat_inverse(const Mat4& x);
bool mat_invertible(const Mat4& x);

Mat4 mat_lift(const Mat4& x, const Field* to);
// Lower every entry to the smallest common subfield of the tower.
Mat4 mat_minimize(const Mat4& x);
Mat4 mat_frobenius(const Mat4& x);  // entrywise p-th power

// Deterministic byte key (field degree + entry coordinates); equal keys
// iff equal matrices over the same minimized field.
std::string mat_key(const Mat4& x);

std::string mat_to_string(const Mat4& x);  // row-major, for reports

}  // namespace ssp4
