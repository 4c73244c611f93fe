#include "ssp4/linalg.hpp"

#include <numeric>
#include <sstream>

namespace ssp4 {

Mat4 mat_zero(const Field* f) {
    Mat4 m;
    m.f = f;
    m.a.fill(fe_zero(f));
    return m;
}

Mat4 mat_identity(const Field* f) {
    Mat4 m = mat_zero(f);
    for (int i = 0; i < 4; ++i) m.at(i, i) = fe_one(f);
    return m;
}

Mat4 mat_from_ints(const Field* f, const std::array<int64_t, 16>& v) {
    Mat4 m = mat_zero(f);
    for (int i = 0; i < 16; ++i) m.a[i] = fe_make(f, v[i]);
    return m;
}

Mat4 mat_diag(const FieldElem& a, const FieldElem& b, const FieldElem& c, const FieldElem& d) {
    Mat4 m = mat_zero(a.f);
    m.at(0, 0) = a;
    m.at(1, 1) = b;
    m.at(2, 2) = c;
    m.at(3, 3) = d;
    return m;
}

Mat4 mat_mul(const Mat4& x, const Mat4& y) {
    Mat4 a = x, b = y;
    if (a.f != b.f) {
        const Field* c = a.f->tower->compositum(a.f, b.f);
        a = mat_lift(a, c);
        b = mat_lift(b, c);
    }
    Mat4 r = mat_zero(a.f);
    for (int i = 0; i < 4; ++i)
        for (int k = 0; k < 4; ++k) {
            if (a.at(i, k).is_zero()) continue;
            for (int j = 0; j < 4; ++j) r.at(i, j) = r.at(i, j) + a.at(i, k) * b.at(k, j);
        }
    return r;
}

Mat4 mat_transpose(const Mat4& x) {
    Mat4 r = x;
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < i; ++j) std::swap(r.at(i, j), r.at(j, i));
    return r;
}

Mat4 mat_scale(const Mat4& x, const FieldElem& s) {
    Mat4 r = x;
    for (auto& e : r.a) e = e * s;
    return r;
}

bool mat_is_scalar(const Mat4& x) {
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j) {
            if (i == j) {
                if (!(x.at(i, j) == x.at(0, 0))) return false;
            } else if (!x.at(i, j).is_zero()) {
                return false;
            }
        }
    return !x.at(0, 0).is_zero();
}

Mat4 mat_inverse(const Mat4& x) {
    // Gauss-Jordan on [x | I]
    std::array<FieldElem, 32> w;
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j) {
            w[i * 8 + j] = x.at(i, j);
            w[i * 8 + 4 + j] = i == j ? fe_one(x.f) : fe_zero(x.f);
        }
    for (int col = 0; col < 4; ++col) {
        int piv = -1;
        for (int r = col; r < 4; ++r)
            if (!w[r * 8 + col].is_zero()) {
                piv = r;
                break;
            }
        if (piv < 0) throw SingularMatrix();
        if (piv != col)
            for (int j = 0; j < 8; ++j) std::swap(w[piv * 8 + j], w[col * 8 + j]);
        FieldElem inv = field_inverse(w[col * 8 + col]);
        for (int j = 0; j < 8; ++j) w[col * 8 + j] = w[col * 8 + j] * inv;
        for (int r = 0; r < 4; ++r) {
            if (r == col || w[r * 8 + col].is_zero()) continue;
            FieldElem fac = w[r * 8 + col];
            for (int j = 0; j < 8; ++j) w[r * 8 + j] = w[r * 8 + j] - fac * w[col * 8 + j];
        }
    }
    Mat4 r = mat_zero(x.f);
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j) r.at(i, j) = w[i * 8 + 4 + j];
    return r;
}

bool mat_invertible(const Mat4& x) {
    try {
        mat_inverse(x);
        return true;
    } catch (const SingularMatrix&) {
        return false;
    }
}

Mat4 mat_lift(const Mat4& x, const Field* to) {
    if (x.f == to) return x;
    Mat4 r = mat_zero(to);
    FieldTower& tw = *to->tower;
    for (int i = 0; i < 16; ++i) r.a[i] = tw.embed(x.a[i], to);
    return r;
}

Mat4 mat_minimize(const Mat4& x) {
    FieldTower& tw = *x.f->tower;
    uint32_t need = 1;
    for (const auto& e : x.a) need = std::lcm(need, tw.minimize(e).f->k);
    if (need == x.f->k) return x;
    const Field* sub = tw.field(need);
    Mat4 r = mat_zero(sub);
    for (int i = 0; i < 16; ++i) r.a[i] = *tw.lower(x.a[i], sub);
    return r;
}

Mat4 mat_frobenius(const Mat4& x) {
    Mat4 r = x;
    for (auto& e : r.a) e = fe_frobenius(e);
    return r;
}

std::string mat_key(const Mat4& x) {
    std::string s;
    s.push_back(static_cast<char>(x.f->k));
    for (const auto& e : x.a)
        for (uint32_t i = 0; i < x.f->k; ++i) s.push_back(static_cast<char>(e.c[i]));
    return s;
}

std::string mat_to_string(const Mat4& x) {
    std::ostringstream os;
    os << "[";
    for (int i = 0; i < 4; ++i) {
        os << "[";
        for (int j = 0; j < 4; ++j) {
            os << fe_to_string(x.at(i, j));
            if (j < 3) os << ",";
        }
        os << "]";
        if (i < 3) os << ",";
    }
    os << "]";
    return os.str();
}

}  // namespace ssp4
