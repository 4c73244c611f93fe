#include "ssp4/autgrp.hpp"

#include <algorithm>
#include <chrono>
#include <map>
#include <numeric>
#include <set>
#include <unordered_map>

#include "ssp4/brute.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

namespace ssp4 {

std::string engine_name(Engine e) {
    switch (e) {
        case Engine::Groebner: return "groebner";
        case Engine::Brute: return "brute";
        case Engine::Both: return "both";
    }
    return "?";
}

Engine engine_parse(const std::string& s) {
    if (s == "groebner") return Engine::Groebner;
    if (s == "brute") return Engine::Brute;
    if (s == "both") return Engine::Both;
    throw ParseError("unknown engine '" + s + "'");
}

ProjAutomorphism scalar_canonicalize(const Mat4& g) {
    if (!mat_invertible(g)) throw SingularMatrix();
    Mat4 m = g;
    for (int i = 0; i < 16; ++i) {
        if (!m.a[i].is_zero()) {
            if (!m.a[i].is_one()) m = mat_scale(m, field_inverse(m.a[i]));
            break;
        }
    }
    return ProjAutomorphism{mat_minimize(m)};
}

int proj_order(const Mat4& g) {
    Mat4 acc = g;
    for (int k = 1; k <= 1000; ++k) {
        if (mat_is_scalar(acc)) return k;
        acc = mat_mul(acc, g);
    }
    throw Error("projective order exceeds bound");
}

std::optional<FieldElem> action_ratio(const QuadraticForm& Q, const Poly& P, const Mat4& g) {
    const Field* fld = g.f->k >= P.field()->k ? g.f : P.field();
    fld = fld->tower->compositum(g.f, P.field());
    std::vector<FieldElem> entries(g.a.begin(), g.a.end());
    Poly gp = apply_linear_substitution(P.lifted(fld), entries);
    Poly nf_gp = normal_form(gp, {Q.q.lifted(fld)}, grevlex_order());
    Poly nf_p = normal_form(P.lifted(fld), {Q.q.lifted(fld)}, grevlex_order());
    if (nf_p.is_zero()) throw Error("cubic reduces to zero mod Q");
    if (nf_gp.nterms() != nf_p.nterms()) return std::nullopt;
    FieldElem r = nf_gp.terms()[0].c / nf_p.terms()[0].c;
    for (int i = 0; i < nf_p.nterms(); ++i) {
        if (!(nf_gp.terms()[i].m == nf_p.terms()[i].m)) return std::nullopt;
        if (!(nf_gp.terms()[i].c == r * nf_p.terms()[i].c)) return std::nullopt;
    }
    if (r.is_zero()) return std::nullopt;
    return r;
}

// ---------------------------------------------------------------------------
// constraint system construction

namespace {

using Geo = std::array<uint8_t, 4>;

struct GeoPoly {
    std::map<Geo, Poly> t;

    void add(const Geo& m, const Poly& p) {
        auto it = t.find(m);
        if (it == t.end()) {
            if (!p.is_zero()) t.emplace(m, p);
        } else {
            it->second = it->second + p;
            if (it->second.is_zero()) t.erase(it);
        }
    }
};

GeoPoly geo_mul(const GeoPoly& a, const GeoPoly& b) {
    GeoPoly r;
    for (const auto& [ma, pa] : a.t)
        for (const auto& [mb, pb] : b.t) {
            Geo m = {static_cast<uint8_t>(ma[0] + mb[0]), static_cast<uint8_t>(ma[1] + mb[1]),
                     static_cast<uint8_t>(ma[2] + mb[2]), static_cast<uint8_t>(ma[3] + mb[3])};
            r.add(m, pa * pb);
        }
    return r;
}

}  // namespace

std::vector<Poly> build_constraint_system(const QuadraticForm& Q, const Poly& P,
                                          const PatternMatrix& pat) {
    const Field* f = pat.entry[0].field();
    const RingPtr& pring = pat.ring;
    int rvar = pring->var("r");
    if (rvar < 0) throw Error("pattern ring lacks the scalar variable r");

    // rows of the pattern as linear forms in x,y,z,w with parameter-poly coeffs
    std::array<GeoPoly, 4> rows;
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j) {
            if (pat.entry[i * 4 + j].is_zero()) continue;
            Geo m{};
            m[j] = 1;
            rows[i].add(m, pat.entry[i * 4 + j]);
        }

    // memoized row powers
    std::array<std::vector<GeoPoly>, 4> pows;
    auto row_pow = [&](int i, int e) -> const GeoPoly& {
        while (static_cast<int>(pows[i].size()) < e) {
            if (pows[i].empty())
                pows[i].push_back(rows[i]);
            else
                pows[i].push_back(geo_mul(pows[i].back(), rows[i]));
        }
        return pows[i][e - 1];
    };

    GeoPoly total;
    Poly rpoly = poly_var(f, pring, rvar);
    for (const auto& term : P.terms()) {
        GeoPoly acc;
        acc.add(Geo{}, poly_const(f, pring, f->tower->embed(term.c, f)));
        for (int v = 0; v < 4; ++v) {
            int e = term.m.e[v];
            if (e) acc = geo_mul(acc, row_pow(v, e));
        }
        for (const auto& [m, p] : acc.t) total.add(m, p);
        // minus r * P
        Geo gm = {term.m.e[0], term.m.e[1], term.m.e[2], term.m.e[3]};
        total.add(gm, -poly_scale(rpoly, f->tower->embed(term.c, f)));
    }

    // reduce modulo Q on the geometric monomials (LM under grevlex x>y>z>w)
    Geo lead{};
    std::vector<std::pair<FieldElem, Geo>> repl;
    switch (Q.kind) {
        case QKind::N1:
            lead = {0, 1, 1, 0};
            repl = {{-fe_one(f), {1, 0, 0, 1}}};
            break;
        case QKind::N2:
            lead = {0, 2, 0, 0};
            repl = {{f->tower->embed(Q.eps, f), {0, 0, 2, 0}}, {fe_make(f, -2), {1, 0, 0, 1}}};
            break;
        case QKind::Dege:
            lead = {0, 0, 2, 0};
            repl = {{fe_make(f, -2), {0, 1, 0, 1}}};
            break;
    }
    bool changed = true;
    while (changed) {
        changed = false;
        for (auto it = total.t.begin(); it != total.t.end(); ++it) {
            const Geo& m = it->first;
            if (m[0] < lead[0] || m[1] < lead[1] || m[2] < lead[2] || m[3] < lead[3]) continue;
            Poly coef = it->second;
            total.t.erase(it);
            for (const auto& [rc, de] : repl) {
                Geo tgt = {static_cast<uint8_t>(m[0] - lead[0] + de[0]),
                           static_cast<uint8_t>(m[1] - lead[1] + de[1]),
                           static_cast<uint8_t>(m[2] - lead[2] + de[2]),
                           static_cast<uint8_t>(m[3] - lead[3] + de[3])};
                total.add(tgt, poly_scale(coef, rc));
            }
            changed = true;
            break;
        }
    }

    std::vector<Poly> out;
    for (const auto& mono : cubic_monomials()) {
        Geo m = {mono[0], mono[1], mono[2], mono[3]};
        auto it = total.t.find(m);
        if (it != total.t.end() && !it->second.is_zero()) out.push_back(it->second);
    }
    for (const auto& c : pat.constraints) out.push_back(c);
    return out;
}

// ---------------------------------------------------------------------------
// group assembly

namespace {

struct Collected {
    std::vector<ProjAutomorphism> elems;
};

void assemble(AutGroupResult& R, std::vector<ProjAutomorphism> raw, const QuadraticForm& Q,
              const Poly& P) {
    // dedupe by canonical key, identity first, rest sorted
    std::map<std::string, ProjAutomorphism> uniq;
    for (auto& e : raw) uniq.emplace(mat_key(e.m), std::move(e));
    FieldTower& tower = *Q.q.field()->tower;
    const Field* f1 = tower.field(1);
    std::string idkey = mat_key(mat_identity(f1));
    if (!uniq.count(idkey)) throw ClosureViolation("identity element missing from computed set");

    R.elems.clear();
    R.elems.push_back(uniq.at(idkey));
    for (auto& [k, e] : uniq)
        if (k != idkey) R.elems.push_back(e);
    R.order = R.elems.size();

    // smallest common field
    uint32_t need = 1;
    for (const auto& e : R.elems) need = std::lcm(need, e.m.f->k);
    R.field = tower.field(need);

    // membership invariants: similitude and the defining congruence
    for (const auto& e : R.elems) {
        if (!similitude_factor(e.m, Q.phi))
            throw ClosureViolation("computed element is not a similitude");
        if (!action_ratio(Q, P, e.m))
            throw ClosureViolation("computed element does not preserve the curve");
    }

    // multiplication table; closure check
    std::unordered_map<std::string, int> index;
    for (size_t i = 0; i < R.elems.size(); ++i) index[mat_key(R.elems[i].m)] = static_cast<int>(i);
    size_t n = R.elems.size();
    R.table.assign(n * n, 0);
    std::vector<Mat4> lifted;
    for (const auto& e : R.elems) lifted.push_back(mat_lift(e.m, R.field));
    for (size_t i = 0; i < n; ++i)
        for (size_t j = 0; j < n; ++j) {
            ProjAutomorphism prod = scalar_canonicalize(mat_mul(lifted[i], lifted[j]));
            auto it = index.find(mat_key(prod.m));
            if (it == index.end())
                throw ClosureViolation("product escapes the computed element set");
            R.table[i * n + j] = static_cast<uint16_t>(it->second);
        }
}

std::vector<ProjAutomorphism> run_groebner(const QuadraticForm& Q, const Poly& P, int qprime,
                                           const AutGroupOptions& opts) {
    const Field* f = Q.q.field();
    PatternMode mode = qprime == 0 ? PatternMode::Closure : PatternMode::Rational;
    auto pats = bruhat_patterns(Q.kind, mode, f, Q.eps);
    std::vector<std::vector<ProjAutomorphism>> per(pats.size());
    std::exception_ptr err;
#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic, 1) if (opts.parallel)
#endif
    for (int pi = 0; pi < static_cast<int>(pats.size()); ++pi) {
        try {
            auto F = build_constraint_system(Q, P, pats[pi]);
            auto sol = solve_zero_dimensional(F, f, qprime != 0, opts.solve);
            for (const auto& pt : sol.points)
                per[pi].push_back(scalar_canonicalize(pats[pi].instantiate(pt)));
        } catch (...) {
#ifdef _OPENMP
#pragma omp critical
#endif
            if (!err) err = std::current_exception();
        }
    }
    if (err) std::rethrow_exception(err);
    std::vector<ProjAutomorphism> out;
    for (auto& v : per) out.insert(out.end(), v.begin(), v.end());
    return out;
}

std::vector<ProjAutomorphism> run_brute(const QuadraticForm& Q, const Poly& P,
                                        const AutGroupOptions& opts) {
    Cubic20 p20 = cubic_from_poly(P);
    uint32_t eps = Q.eps.c[0];
    BruteScanOptions bopts;
    bopts.parallel = opts.parallel;
    auto res = brute_scan(Q.kind, eps, p20, bopts);
    const Field* f1 = Q.q.field()->tower->field(1);
    std::vector<ProjAutomorphism> out;
    for (const auto& m : res.matrices) {
        Mat4 g = mat_zero(f1);
        for (int i = 0; i < 16; ++i) g.a[i] = fe_make(f1, m[i]);
        out.push_back(scalar_canonicalize(g));
    }
    return out;
}

}  // namespace

AutGroupResult automorphism_group(const QuadraticForm& Q, const Poly& P, int q, int qprime,
                                  const AutGroupOptions& opts) {
    if (q != static_cast<int>(Q.q.field()->p)) throw Error("field size mismatch");
    if (qprime != 0 && qprime != q) throw Error("qprime must be 0 or q");
    if (opts.engine != Engine::Groebner && qprime == 0)
        throw Error("brute engine requires qprime = q");
    auto t0 = std::chrono::steady_clock::now();

    AutGroupResult R;
    R.kind = Q.kind;
    R.engine_used = engine_name(opts.engine);

    std::vector<ProjAutomorphism> elems;
    if (opts.engine == Engine::Groebner) {
        elems = run_groebner(Q, P, qprime, opts);
    } else if (opts.engine == Engine::Brute) {
        elems = run_brute(Q, P, opts);
    } else {
        auto a = run_groebner(Q, P, qprime, opts);
        auto b = run_brute(Q, P, opts);
        std::set<std::string> ka, kb;
        for (const auto& e : a) ka.insert(mat_key(e.m));
        for (const auto& e : b) kb.insert(mat_key(e.m));
        if (ka != kb)
            throw EngineDisagreement("groebner found " + std::to_string(ka.size()) +
                                     " classes, brute found " + std::to_string(kb.size()));
        elems = std::move(a);
    }
    assemble(R, std::move(elems), Q, P);
    R.generators = generating_set(R);
    R.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    return R;
}

int AutGroupResult::index_of(const Mat4& g) const {
    ProjAutomorphism c;
    try {
        c = scalar_canonicalize(g);
    } catch (const SingularMatrix&) {
        return -1;
    }
    std::string key = mat_key(c.m);
    for (size_t i = 0; i < elems.size(); ++i)
        if (mat_key(elems[i].m) == key) return static_cast<int>(i);
    return -1;
}

int AutGroupResult::inverse_of(int i) const {
    size_t n = elems.size();
    for (size_t j = 0; j < n; ++j)
        if (table[i * n + j] == 0) return static_cast<int>(j);
    return -1;
}

std::vector<int> generating_set(const AutGroupResult& g) {
    size_t n = g.elems.size();
    if (n <= 1) return {};
    auto closure_size = [&](const std::vector<int>& gens) {
        std::vector<bool> in(n, false);
        in[0] = true;
        std::vector<int> frontier{0};
        size_t count = 1;
        while (!frontier.empty()) {
            std::vector<int> next;
            for (int a : frontier)
                for (int b : gens) {
                    int c = g.table[a * n + b];
                    if (!in[c]) {
                        in[c] = true;
                        next.push_back(c);
                        ++count;
                    }
                    int d = g.table[b * n + a];
                    if (!in[d]) {
                        in[d] = true;
                        next.push_back(d);
                        ++count;
                    }
                }
            frontier = std::move(next);
        }
        return count;
    };
    std::vector<int> gens;
    size_t covered = 1;
    while (covered < n) {
        int best = -1;
        size_t best_size = covered;
        for (size_t cand = 1; cand < n; ++cand) {
            std::vector<int> trial = gens;
            trial.push_back(static_cast<int>(cand));
            size_t s = closure_size(trial);
            if (s > best_size) {
                best_size = s;
                best = static_cast<int>(cand);
            }
        }
        if (best < 0) throw Error("generating set search stalled");
        gens.push_back(best);
        covered = best_size;
    }
    return gens;
}

}  // namespace ssp4
