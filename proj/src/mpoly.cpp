#include "ssp4/mpoly.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

namespace ssp4 {

int Ring::var(const std::string& name) const {
    for (size_t i = 0; i < names.size(); ++i)
        if (names[i] == name) return static_cast<int>(i);
    return -1;
}

RingPtr make_ring(std::vector<std::string> names) {
    if (static_cast<int>(names.size()) > kMaxVars) throw Error("too many ring variables");
    auto r = std::make_shared<Ring>();
    r->names = std::move(names);
    return r;
}

Mono mono_one() { return Mono{}; }

Mono mono_var(int i, int exp) {
    Mono m;
    m.e[i] = static_cast<uint8_t>(exp);
    m.deg = static_cast<uint16_t>(exp);
    return m;
}

Mono mono_mul(const Mono& a, const Mono& b) {
    Mono r;
    for (int i = 0; i < kMaxVars; ++i) r.e[i] = static_cast<uint8_t>(a.e[i] + b.e[i]);
    r.deg = static_cast<uint16_t>(a.deg + b.deg);
    return r;
}

Mono mono_div(const Mono& a, const Mono& b) {
    Mono r;
    for (int i = 0; i < kMaxVars; ++i) r.e[i] = static_cast<uint8_t>(a.e[i] - b.e[i]);
    r.deg = static_cast<uint16_t>(a.deg - b.deg);
    return r;
}

Mono mono_lcm(const Mono& a, const Mono& b) {
    Mono r;
    uint16_t d = 0;
    for (int i = 0; i < kMaxVars; ++i) {
        r.e[i] = std::max(a.e[i], b.e[i]);
        d = static_cast<uint16_t>(d + r.e[i]);
    }
    r.deg = d;
    return r;
}

bool mono_coprime(const Mono& a, const Mono& b) {
    for (int i = 0; i < kMaxVars; ++i)
        if (a.e[i] && b.e[i]) return false;
    return true;
}

int MonomialOrder::cmp(const Mono& a, const Mono& b, int nvars) const {
    if (kind == OrderKind::Lex) {
        if (prec.empty()) {
            for (int i = 0; i < nvars; ++i)
                if (a.e[i] != b.e[i]) return a.e[i] > b.e[i] ? 1 : -1;
            return 0;
        }
        for (int i = 0; i < nvars; ++i) {
            uint8_t v = prec[i];
            if (a.e[v] != b.e[v]) return a.e[v] > b.e[v] ? 1 : -1;
        }
        return 0;
    }
    // grevlex: total degree first; ties broken by the last differing
    // exponent (in precedence order), smaller exponent wins
    if (a.deg != b.deg) return a.deg > b.deg ? 1 : -1;
    if (prec.empty()) {
        for (int i = nvars - 1; i >= 0; --i)
            if (a.e[i] != b.e[i]) return a.e[i] < b.e[i] ? 1 : -1;
        return 0;
    }
    for (int i = nvars - 1; i >= 0; --i) {
        uint8_t v = prec[i];
        if (a.e[v] != b.e[v]) return a.e[v] < b.e[v] ? 1 : -1;
    }
    return 0;
}

namespace {
const MonomialOrder kCanon = grevlex_order();
}

int Poly::total_degree() const {
    int d = -1;
    for (const auto& t : t_) d = std::max(d, static_cast<int>(t.m.deg));
    return d;
}

void Poly::add_term(const Mono& m, const FieldElem& c) {
    if (c.is_zero()) return;
    t_.push_back({m, c});
}

void Poly::normalize() {
    int n = ring_->nvars();
    std::sort(t_.begin(), t_.end(),
              [&](const Term& x, const Term& y) { return kCanon.cmp(x.m, y.m, n) > 0; });
    std::vector<Term> out;
    out.reserve(t_.size());
    for (auto& t : t_) {
        if (!out.empty() && out.back().m == t.m) {
            out.back().c = out.back().c + t.c;
            if (out.back().c.is_zero()) out.pop_back();
        } else {
            out.push_back(t);
        }
    }
    t_ = std::move(out);
}

Poly Poly::lifted(const Field* to) const {
    if (f_ == to) return *this;
    Poly r(to, ring_);
    FieldTower& tw = *to->tower;
    for (const auto& t : t_) r.add_term(t.m, tw.embed(t.c, to));
    r.normalize();
    return r;
}

bool Poly::operator==(const Poly& o) const {
    if (t_.size() != o.t_.size()) return false;
    for (size_t i = 0; i < t_.size(); ++i)
        if (!(t_[i].m == o.t_[i].m) || !(t_[i].c == o.t_[i].c)) return false;
    return true;
}

Poly poly_zero(const Field* f, const RingPtr& r) { return Poly(f, r); }

Poly poly_const(const Field* f, const RingPtr& r, const FieldElem& c) {
    Poly p(f, r);
    p.add_term(mono_one(), c);
    p.normalize();
    return p;
}

Poly poly_var(const Field* f, const RingPtr& r, int var, int exp) {
    Poly p(f, r);
    p.add_term(mono_var(var, exp), fe_one(f));
    p.normalize();
    return p;
}

namespace {

void align(Poly& a, Poly& b) {
    if (a.field() == b.field()) return;
    FieldTower& tw = *a.field()->tower;
    const Field* c = tw.compositum(a.field(), b.field());
    a = a.lifted(c);
    b = b.lifted(c);
}

}  // namespace

Poly operator+(const Poly& a0, const Poly& b0) {
    Poly a = a0, b = b0;
    align(a, b);
    Poly r(a.field(), a.ring());
    for (const auto& t : a.terms()) r.add_term(t.m, t.c);
    for (const auto& t : b.terms()) r.add_term(t.m, t.c);
    r.normalize();
    return r;
}

Poly operator-(const Poly& a0, const Poly& b0) {
    Poly a = a0, b = b0;
    align(a, b);
    Poly r(a.field(), a.ring());
    for (const auto& t : a.terms()) r.add_term(t.m, t.c);
    for (const auto& t : b.terms()) r.add_term(t.m, -t.c);
    r.normalize();
    return r;
}

Poly operator-(const Poly& a) {
    Poly r(a.field(), a.ring());
    for (const auto& t : a.terms()) r.add_term(t.m, -t.c);
    r.normalize();
    return r;
}

Poly operator*(const Poly& a0, const Poly& b0) {
    Poly a = a0, b = b0;
    align(a, b);
    Poly r(a.field(), a.ring());
    for (const auto& s : a.terms())
        for (const auto& t : b.terms()) r.add_term(mono_mul(s.m, t.m), s.c * t.c);
    r.normalize();
    return r;
}

Poly poly_scale(const Poly& a, const FieldElem& s) {
    Poly r(a.field(), a.ring());
    for (const auto& t : a.terms()) r.add_term(t.m, t.c * s);
    r.normalize();
    return r;
}

Poly poly_mul_term(const Poly& a, const Mono& m, const FieldElem& c) {
    Poly r(a.field(), a.ring());
    for (const auto& t : a.terms()) r.add_term(mono_mul(t.m, m), t.c * c);
    r.normalize();
    return r;
}

Term poly_lead(const Poly& a, const MonomialOrder& ord) {
    if (a.is_zero()) throw ZeroPolynomial();
    int n = a.ring()->nvars();
    const Term* best = &a.terms()[0];
    for (const auto& t : a.terms())
        if (ord.cmp(t.m, best->m, n) > 0) best = &t;
    return *best;
}

Poly poly_monic(const Poly& a, const MonomialOrder& ord) {
    if (a.is_zero()) return a;
    return poly_scale(a, field_inverse(poly_lead(a, ord).c));
}

Poly normal_form(const Poly& f0, const std::vector<Poly>& G, const MonomialOrder& ord) {
    const int n = f0.ring()->nvars();
    const Field* fld = f0.field();
    for (const auto& g : G)
        if (g.field()->k > fld->k) fld = g.field();
    Poly f = f0.lifted(fld);
    std::vector<Poly> g;
    std::vector<Term> glead;
    g.reserve(G.size());
    for (const auto& gi : G) {
        if (gi.is_zero()) throw ZeroPolynomial();
        g.push_back(gi.lifted(fld));
        glead.push_back(poly_lead(g.back(), ord));
    }
    auto cmp_desc = [&](const Term& x, const Term& y) { return ord.cmp(x.m, y.m, n) > 0; };

    std::vector<Term> h(f.terms().begin(), f.terms().end());
    std::sort(h.begin(), h.end(), cmp_desc);
    std::vector<Term> result;

    while (!h.empty()) {
        const Term top = h[0];
        int divisor = -1;
        for (size_t i = 0; i < g.size(); ++i) {
            if (glead[i].m.divides(top.m)) {
                divisor = static_cast<int>(i);
                break;
            }
        }
        if (divisor < 0) {
            result.push_back(top);
            h.erase(h.begin());
            continue;
        }
        FieldElem q = top.c / glead[divisor].c;
        Mono shift = mono_div(top.m, glead[divisor].m);
        std::vector<Term> sub;
        sub.reserve(g[divisor].terms().size());
        for (const auto& t : g[divisor].terms()) sub.push_back({mono_mul(t.m, shift), t.c * q});
        std::sort(sub.begin(), sub.end(), cmp_desc);
        std::vector<Term> merged;
        merged.reserve(h.size() + sub.size());
        size_t i = 0, j = 0;
        while (i < h.size() || j < sub.size()) {
            if (j == sub.size() || (i < h.size() && ord.cmp(h[i].m, sub[j].m, n) > 0)) {
                merged.push_back(h[i++]);
            } else if (i == h.size() || ord.cmp(sub[j].m, h[i].m, n) > 0) {
                merged.push_back({sub[j].m, -sub[j].c});
                ++j;
            } else {
                FieldElem c = h[i].c - sub[j].c;
                if (!c.is_zero()) merged.push_back({h[i].m, c});
                ++i;
                ++j;
            }
        }
        h = std::move(merged);
    }
    Poly r(fld, f0.ring());
    for (const auto& t : result) r.add_term(t.m, t.c);
    r.normalize();
    return r;
}

Poly apply_linear_substitution(const Poly& P, const std::vector<FieldElem>& g) {
    const int n = P.ring()->nvars();
    if (static_cast<int>(g.size()) != n * n) throw Error("matrix size mismatch");
    const Field* fld = P.field();
    for (const auto& e : g)
        if (e.f->k > fld->k) fld = e.f;
    Poly Pl = P.lifted(fld);
    FieldTower& tw = *fld->tower;

    std::vector<Poly> rows;
    rows.reserve(n);
    for (int i = 0; i < n; ++i) {
        Poly row(fld, P.ring());
        for (int j = 0; j < n; ++j) {
            FieldElem c = tw.embed(g[i * n + j], fld);
            if (!c.is_zero()) row.add_term(mono_var(j), c);
        }
        row.normalize();
        rows.push_back(std::move(row));
    }
    std::vector<std::vector<Poly>> pows(n);
    Poly out(fld, P.ring());
    for (const auto& t : Pl.terms()) {
        Poly acc = poly_const(fld, P.ring(), t.c);
        for (int i = 0; i < n; ++i) {
            int e = t.m.e[i];
            if (!e) continue;
            while (static_cast<int>(pows[i].size()) < e) {
                if (pows[i].empty())
                    pows[i].push_back(rows[i]);
                else
                    pows[i].push_back(pows[i].back() * rows[i]);
            }
            acc = acc * pows[i][e - 1];
        }
        out = out + acc;
    }
    return out;
}

Poly evaluate_partial(const Poly& f, const std::map<int, FieldElem>& bindings) {
    const Field* fld = f.field();
    for (const auto& [v, val] : bindings) {
        if (v < 0 || v >= f.ring()->nvars()) throw Error("binding for unknown variable");
        if (val.f->k > fld->k) fld = val.f;
    }
    FieldTower& tw = *fld->tower;
    Poly r(fld, f.ring());
    for (const auto& t : f.terms()) {
        FieldElem c = tw.embed(t.c, fld);
        Mono m = t.m;
        for (const auto& [v, val] : bindings) {
            int e = m.e[v];
            if (!e) continue;
            c = c * fe_pow(tw.embed(val, fld), e);
            m.deg = static_cast<uint16_t>(m.deg - e);
            m.e[v] = 0;
        }
        r.add_term(m, c);
    }
    r.normalize();
    return r;
}

FieldElem evaluate_full(const Poly& f, const std::vector<FieldElem>& point) {
    const Field* fld = f.field();
    for (const auto& v : point)
        if (v.f->k > fld->k) fld = v.f;
    FieldTower& tw = *fld->tower;
    FieldElem acc = fe_zero(fld);
    for (const auto& t : f.terms()) {
        FieldElem c = tw.embed(t.c, fld);
        for (int i = 0; i < f.ring()->nvars(); ++i) {
            if (!t.m.e[i]) continue;
            c = c * fe_pow(tw.embed(point[i], fld), t.m.e[i]);
        }
        acc = acc + c;
    }
    return acc;
}

std::string poly_to_string(const Poly& f) {
    if (f.is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& t : f.terms()) {
        if (!first) os << " + ";
        first = false;
        std::string cs = fe_to_string(t.c);
        bool par = cs.find('+') != std::string::npos;
        bool printed = false;
        if (t.m.is_one() || !t.c.is_one()) {
            os << (par ? "(" + cs + ")" : cs);
            printed = true;
        }
        for (int i = 0; i < f.ring()->nvars(); ++i) {
            if (!t.m.e[i]) continue;
            if (printed) os << "*";
            os << f.ring()->names[i];
            if (t.m.e[i] > 1) os << "^" << int(t.m.e[i]);
            printed = true;
        }
    }
    return os.str();
}

Poly poly_parse(const Field* f, const RingPtr& r, const std::string& text) {
    Poly out(f, r);
    size_t i = 0;
    auto skip = [&] {
        while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
    };
    skip();
    bool expect_term = true;
    int64_t sign = 1;
    bool saw_any = false;
    while (i < text.size()) {
        skip();
        if (i >= text.size()) break;
        if (text[i] == '+') {
            ++i;
            expect_term = true;
            continue;
        }
        if (text[i] == '-') {
            sign = -sign;
            ++i;
            expect_term = true;
            continue;
        }
        if (!expect_term) throw ParseError("unexpected token at position " + std::to_string(i));
        int64_t coef = 1;
        Mono m = mono_one();
        bool any = false;
        for (;;) {
            skip();
            if (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) {
                int64_t v = 0;
                while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i])))
                    v = v * 10 + (text[i++] - '0');
                coef *= v;
                any = true;
            } else if (i < text.size() &&
                       (std::isalpha(static_cast<unsigned char>(text[i])) || text[i] == '_')) {
                size_t start = i;
                while (i < text.size() &&
                       (std::isalnum(static_cast<unsigned char>(text[i])) || text[i] == '_'))
                    ++i;
                std::string name = text.substr(start, i - start);
                int v = r->var(name);
                if (v < 0) throw ParseError("unknown variable '" + name + "'");
                int exp = 1;
                skip();
                if (i < text.size() && text[i] == '^') {
                    ++i;
                    skip();
                    if (i >= text.size() || !std::isdigit(static_cast<unsigned char>(text[i])))
                        throw ParseError("missing exponent");
                    exp = 0;
                    while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i])))
                        exp = exp * 10 + (text[i++] - '0');
                }
                m = mono_mul(m, mono_var(v, exp));
                any = true;
            } else {
                throw ParseError("expected coefficient or variable at position " + std::to_string(i));
            }
            skip();
            if (i < text.size() && text[i] == '*') {
                ++i;
                continue;
            }
            break;
        }
        if (!any) throw ParseError("empty term");
        out.add_term(m, fe_make(f, sign * coef));
        sign = 1;
        expect_term = false;
        saw_any = true;
    }
    if (expect_term && saw_any) throw ParseError("dangling sign");
    out.normalize();
    return out;
}

}  // namespace ssp4
