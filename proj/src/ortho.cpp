#include "ssp4/ortho.hpp"

#include <sstream>

namespace ssp4 {

std::string qkind_name(QKind k) {
    switch (k) {
        case QKind::N1: return "N1";
        case QKind::N2: return "N2";
        case QKind::Dege: return "Dege";
    }
    return "?";
}

QKind qkind_parse(const std::string& s) {
    if (s == "N1") return QKind::N1;
    if (s == "N2") return QKind::N2;
    if (s == "Dege") return QKind::Dege;
    throw ParseError("unknown quadratic form kind '" + s + "'");
}

RingPtr geometry_ring() {
    static RingPtr r = make_ring({"x", "y", "z", "w"});
    return r;
}

QuadraticForm make_quadratic_form(QKind kind, const Field* f) {
    return make_quadratic_form(kind, f, fe_make(f, 2));
}

QuadraticForm make_quadratic_form(QKind kind, const Field* f, const FieldElem& eps) {
    if (f->p == 2) throw Error("odd characteristic required");
    QuadraticForm q;
    q.kind = kind;
    q.eps = eps;
    RingPtr g = geometry_ring();
    switch (kind) {
        case QKind::N1:
            q.q = poly_parse(f, g, "2*x*w + 2*y*z");
            q.phi = mat_from_ints(f, {0, 0, 0, 1, 0, 0, 1, 0, 0, 1, 0, 0, 1, 0, 0, 0});
            break;
        case QKind::N2: {
            Poly p = poly_parse(f, g, "2*x*w + y^2");
            Poly z2(f, g);
            z2.add_term(mono_var(2, 2), -eps);
            z2.normalize();
            q.q = p + z2;
            q.phi = mat_from_ints(f, {0, 0, 0, 1, 0, 1, 0, 0, 0, 0, 0, 0, 1, 0, 0, 0});
            q.phi.at(2, 2) = -eps;
            break;
        }
        case QKind::Dege:
            q.q = poly_parse(f, g, "2*y*w + z^2");
            q.phi = mat_from_ints(f, {0, 0, 0, 0, 0, 0, 0, 1, 0, 0, 1, 0, 0, 1, 0, 0});
            break;
    }
    return q;
}

Mat4 coefficient_matrix(const QuadraticForm& q) { return q.phi; }

std::optional<FieldElem> similitude_factor(const Mat4& g0, const Mat4& phi0) {
    Mat4 g = g0, phi = phi0;
    if (g.f != phi.f) {
        const Field* c = g.f->tower->compositum(g.f, phi.f);
        g = mat_lift(g, c);
        phi = mat_lift(phi, c);
    }
    Mat4 m = mat_mul(mat_mul(mat_transpose(g), phi), g);
    std::optional<FieldElem> mu;
    for (int i = 0; i < 16 && !mu; ++i)
        if (!phi.a[i].is_zero()) mu = m.a[i] / phi.a[i];
    if (!mu || mu->is_zero()) return std::nullopt;
    for (int i = 0; i < 16; ++i)
        if (!(m.a[i] == *mu * phi.a[i])) return std::nullopt;
    return mu;
}

Mat4 PatternMatrix::instantiate(const std::vector<FieldElem>& point) const {
    const Field* fld = point.empty() ? entry[0].field() : point[0].f;
    for (const auto& v : point)
        if (v.f->k > fld->k) fld = v.f;
    std::vector<FieldElem> pt;
    for (const auto& v : point) pt.push_back(fld->tower->embed(v, fld));
    Mat4 m = mat_zero(fld);
    for (int i = 0; i < 16; ++i) m.a[i] = evaluate_full(entry[i], pt);
    return m;
}

namespace {

using PolyMat = std::array<Poly, 16>;

struct Builder {
    const Field* f;
    RingPtr ring;

    Poly c(int64_t v) const { return poly_const(f, ring, fe_make(f, v)); }
    Poly ce(const FieldElem& v) const { return poly_const(f, ring, f->tower->embed(v, f)); }
    Poly v(const std::string& name) const {
        int i = ring->var(name);
        if (i < 0) throw Error("pattern variable '" + name + "' missing from ring");
        return poly_var(f, ring, i);
    }
    PolyMat zero() const {
        PolyMat m;
        m.fill(poly_zero(f, ring));
        return m;
    }
    PolyMat ident() const {
        PolyMat m = zero();
        for (int i = 0; i < 4; ++i) m[i * 4 + i] = c(1);
        return m;
    }
    PolyMat diag(const Poly& a, const Poly& b, const Poly& cc, const Poly& d) const {
        PolyMat m = zero();
        m[0] = a;
        m[5] = b;
        m[10] = cc;
        m[15] = d;
        return m;
    }
    PolyMat from_ints(const std::array<int64_t, 16>& v) const {
        PolyMat m = zero();
        for (int i = 0; i < 16; ++i) m[i] = c(v[i]);
        return m;
    }
    PolyMat mul(const PolyMat& a, const PolyMat& b) const {
        PolyMat r = zero();
        for (int i = 0; i < 4; ++i)
            for (int k = 0; k < 4; ++k) {
                if (a[i * 4 + k].is_zero()) continue;
                for (int j = 0; j < 4; ++j)
                    r[i * 4 + j] = r[i * 4 + j] + a[i * 4 + k] * b[k * 4 + j];
            }
        return r;
    }
};

std::vector<std::string> subseq(const std::vector<std::string>& full,
                                const std::vector<std::string>& drop) {
    std::vector<std::string> out;
    for (const auto& s : full) {
        bool skip = false;
        for (const auto& d : drop)
            if (d == s) skip = true;
        if (!skip) out.push_back(s);
    }
    return out;
}

}  // namespace

std::vector<PatternMatrix> bruhat_patterns(QKind kind, PatternMode mode, const Field* f) {
    return bruhat_patterns(kind, mode, f, fe_make(f, 2));
}

std::vector<PatternMatrix> bruhat_patterns(QKind kind, PatternMode /*mode*/, const Field* f,
                                           const FieldElem& eps) {
    // The mode does not change the constraint set: over F_11 and over the
    // closure the cube map is surjective, so r is pinned to 1 either way.
    std::vector<PatternMatrix> out;
    const std::vector<std::string> names_n1 = {"a1", "a2", "b1", "b2", "c", "s",
                                               "d1", "d2", "e1", "e2", "r"};
    const std::vector<std::string> names_n2 = {"a1", "a2", "b1", "b2", "c1",
                                               "c2", "d1", "d2", "t", "r"};
    const std::vector<std::string> names_dege = {"a1", "a2", "a3", "s", "b", "c",
                                                 "d", "t", "e1", "e2", "e3", "r"};

    auto finish = [&](const std::string& id, const Builder& B, const PolyMat& m,
                      const std::vector<Poly>& cons) {
        PatternMatrix p;
        p.id = id;
        p.ring = B.ring;
        p.entry = m;
        p.constraints = cons;
        out.push_back(std::move(p));
    };

    switch (kind) {
        case QKind::N1: {
            struct Cell {
                int wpart;  // 0: none, 1: s1, 2: s2, 3: s1 s2
                std::vector<std::string> drop;
            };
            const Cell cells[4] = {{0, {"e1", "e2"}}, {1, {"e2"}}, {2, {"e1"}}, {3, {}}};
            for (int flip = 0; flip < 2; ++flip) {
                for (int ci = 0; ci < 4; ++ci) {
                    const Cell& cell = cells[ci];
                    Builder B{f, make_ring(subseq(names_n1, cell.drop))};
                    PolyMat tt = B.diag(B.v("a1"), B.v("b1"), B.v("c") * B.v("b2"),
                                        B.v("c") * B.v("a2"));
                    Poly d1 = B.v("d1"), d2 = B.v("d2");
                    PolyMat u = B.ident();
                    u[1] = d1;
                    u[2] = d2;
                    u[3] = -(d1 * d2);
                    u[7] = -d2;
                    u[11] = -d1;
                    PolyMat m = B.mul(tt, u);
                    if (cell.wpart == 1) {
                        m = B.mul(m, B.from_ints({0, 1, 0, 0, 1, 0, 0, 0, 0, 0, 0, 1, 0, 0, 1, 0}));
                        Poly e1 = B.v("e1");
                        PolyMat u1 = B.ident();
                        u1[1] = e1;
                        u1[11] = -e1;
                        m = B.mul(m, u1);
                    } else if (cell.wpart == 2) {
                        m = B.mul(m, B.from_ints({0, 0, 1, 0, 0, 0, 0, 1, 1, 0, 0, 0, 0, 1, 0, 0}));
                        Poly e2 = B.v("e2");
                        PolyMat u2 = B.ident();
                        u2[2] = e2;
                        u2[7] = -e2;
                        m = B.mul(m, u2);
                    } else if (cell.wpart == 3) {
                        m = B.mul(m, B.from_ints({0, 0, 0, 1, 0, 0, 1, 0, 0, 1, 0, 0, 1, 0, 0, 0}));
                        Poly e1 = B.v("e1"), e2 = B.v("e2");
                        PolyMat ue = B.ident();
                        ue[1] = e1;
                        ue[2] = e2;
                        ue[3] = -(e1 * e2);
                        ue[7] = -e2;
                        ue[11] = -e1;
                        m = B.mul(m, ue);
                    }
                    if (flip)
                        m = B.mul(B.from_ints({1, 0, 0, 0, 0, 0, 1, 0, 0, 1, 0, 0, 0, 0, 0, 1}), m);
                    std::vector<Poly> cons = {B.v("a1") * B.v("a2") - B.c(1),
                                              B.v("b1") * B.v("b2") - B.c(1),
                                              B.v("c") * B.v("s") - B.c(1), B.v("r") - B.c(1)};
                    finish("N1/O" + std::to_string(ci + 1 + 4 * flip), B, m, cons);
                }
            }
            break;
        }
        case QKind::N2: {
            FieldElem half = field_inverse(fe_make(f, 2));
            FieldElem epsinv = field_inverse(eps);
            auto make_u = [&](Builder& B, const std::string& n1, const std::string& n2) {
                Poly u = B.v(n1), v = B.v(n2);
                PolyMat m = B.ident();
                m[1] = u;
                m[2] = v;
                m[3] = poly_scale(v * v, half * epsinv) - poly_scale(u * u, half);
                m[7] = -u;
                m[11] = poly_scale(v, epsinv);
                return m;
            };
            for (int flip = 0; flip < 2; ++flip) {
                for (int ci = 0; ci < 2; ++ci) {
                    std::vector<std::string> drop = ci == 0 ? std::vector<std::string>{"d1", "d2"}
                                                            : std::vector<std::string>{};
                    Builder B{f, make_ring(subseq(names_n2, drop))};
                    PolyMat h = B.diag(B.v("a1"), B.c(1), B.c(1), B.v("a2"));
                    PolyMat rmat = B.zero();
                    rmat[0] = B.c(1);
                    rmat[5] = B.v("b1");
                    rmat[6] = B.ce(eps) * B.v("b2");
                    rmat[9] = B.v("b2");
                    rmat[10] = B.v("b1");
                    rmat[15] = B.v("b1") * B.v("b1") - B.ce(eps) * (B.v("b2") * B.v("b2"));
                    PolyMat m = B.mul(B.mul(h, rmat), make_u(B, "c1", "c2"));
                    if (ci == 1) {
                        PolyMat mw = B.from_ints({0, 0, 0, 1, 0, 1, 0, 0, 0, 0, -1, 0, 1, 0, 0, 0});
                        m = B.mul(B.mul(m, mw), make_u(B, "d1", "d2"));
                    }
                    if (flip) {
                        PolyMat ma = B.from_ints({1, 0, 0, 0, 0, 1, 0, 0, 0, 0, -1, 0, 0, 0, 0, 1});
                        m = B.mul(ma, m);
                    }
                    std::vector<Poly> cons = {
                        B.v("a1") * B.v("a2") - B.c(1),
                        (B.v("b1") * B.v("b1") - B.ce(eps) * (B.v("b2") * B.v("b2"))) * B.v("t") -
                            B.c(1),
                        B.v("r") - B.c(1)};
                    finish("N2/O" + std::to_string(ci + 1 + 2 * flip), B, m, cons);
                }
            }
            break;
        }
        case QKind::Dege: {
            FieldElem half = field_inverse(fe_make(f, 2));
            auto make_u = [&](Builder& B, const std::string& name) {
                Poly b = B.v(name);
                PolyMat m = B.ident();
                m[6] = b;
                m[7] = -poly_scale(b * b, half);
                m[11] = -b;
                return m;
            };
            for (int flip = 0; flip < 2; ++flip) {
                for (int ci = 0; ci < 2; ++ci) {
                    std::vector<std::string> drop =
                        ci == 0 ? std::vector<std::string>{"c"} : std::vector<std::string>{};
                    Builder B{f, make_ring(subseq(names_dege, drop))};
                    PolyMat tt = B.diag(B.c(1), B.v("a1") * B.v("a3"), B.v("a3"),
                                        B.v("a2") * B.v("a3"));
                    PolyMat m = B.mul(tt, make_u(B, "b"));
                    if (ci == 1) {
                        PolyMat mw = B.from_ints({1, 0, 0, 0, 0, 0, 0, 1, 0, 0, 1, 0, 0, 1, 0, 0});
                        m = B.mul(B.mul(m, mw), make_u(B, "c"));
                    }
                    PolyMat vm = B.ident();
                    vm[0] = B.v("d");
                    vm[1] = B.v("e1");
                    vm[2] = B.v("e2");
                    vm[3] = B.v("e3");
                    m = B.mul(m, vm);
                    if (flip) {
                        PolyMat ma = B.from_ints({1, 0, 0, 0, 0, 1, 0, 0, 0, 0, -1, 0, 0, 0, 0, 1});
                        m = B.mul(ma, m);
                    }
                    std::vector<Poly> cons = {B.v("a1") * B.v("a2") - B.c(1),
                                              B.v("a3") * B.v("s") - B.c(1),
                                              B.v("d") * B.v("t") - B.c(1), B.v("r") - B.c(1)};
                    finish("Dege/O" + std::to_string(ci + 1 + 2 * flip), B, m, cons);
                }
            }
            break;
        }
    }
    return out;
}

std::vector<std::string> general_scalar_constraint_names(QKind kind) {
    switch (kind) {
        case QKind::N1: return {"a1*a2 - 1", "b1*b2 - 1", "c*s - 1", "r*v - 1"};
        case QKind::N2: return {"a1*a2 - 1", "(b1^2 - eps*b2^2)*t - 1", "r*v - 1"};
        case QKind::Dege: return {"a1*a2 - 1", "a3*s - 1", "d*t - 1", "r*v - 1"};
    }
    return {};
}

std::string pattern_dump(const PatternMatrix& p) {
    std::ostringstream os;
    os << p.id << "\n";
    for (int i = 0; i < 4; ++i) {
        os << "  [";
        for (int j = 0; j < 4; ++j) {
            os << poly_to_string(p.entry[i * 4 + j]);
            if (j < 3) os << ", ";
        }
        os << "]\n";
    }
    os << "  constraints:";
    for (const auto& c : p.constraints) os << " {" << poly_to_string(c) << "}";
    os << "\n";
    return os.str();
}

}  // namespace ssp4
