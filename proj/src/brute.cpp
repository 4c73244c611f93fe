#include "ssp4/brute.hpp"

#include <algorithm>
#include <cstring>
#include <functional>
#include <map>
#include <mutex>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace ssp4 {

namespace {

constexpr uint32_t P = 11;

constexpr uint8_t kInv11[11] = {0, 1, 6, 4, 3, 9, 2, 8, 7, 5, 10};

inline uint8_t neg11(uint8_t a) { return a ? static_cast<uint8_t>(P - a) : 0; }

using M16 = std::array<uint8_t, 16>;
using V20 = std::array<uint8_t, 20>;

M16 m_ident() {
    M16 m{};
    m[0] = m[5] = m[10] = m[15] = 1;
    return m;
}

M16 m_mul(const M16& a, const M16& b) {
    M16 r{};
    for (int i = 0; i < 4; ++i)
        for (int k = 0; k < 4; ++k) {
            uint32_t v = a[i * 4 + k];
            if (!v) continue;
            for (int j = 0; j < 4; ++j)
                r[i * 4 + j] = static_cast<uint8_t>((r[i * 4 + j] + v * b[k * 4 + j]) % P);
        }
    return r;
}

void m_canonical(M16& m) {
    for (int i = 0; i < 16; ++i) {
        if (m[i]) {
            uint32_t inv = kInv11[m[i]];
            if (inv != 1)
                for (int j = 0; j < 16; ++j) m[j] = static_cast<uint8_t>(m[j] * inv % P);
            return;
        }
    }
}

// monomial index tables for degrees 2 and 3 over four variables
struct MonoTables {
    std::array<std::array<uint8_t, 4>, 20> m3;
    std::array<std::array<uint8_t, 4>, 10> m2;
    int idx3[256];
    int idx2[256];
    uint8_t up12[4][4];
    uint8_t up23[10][4];

    static int key(int i, int j, int k, int l) { return ((i * 4 + j) * 4 + k) * 4 + l; }

    MonoTables() {
        std::fill(std::begin(idx3), std::end(idx3), -1);
        std::fill(std::begin(idx2), std::end(idx2), -1);
        int n3 = 0, n2 = 0;
        for (int i = 3; i >= 0; --i)
            for (int j = 3 - i; j >= 0; --j)
                for (int k = 3 - i - j; k >= 0; --k) {
                    int l = 3 - i - j - k;
                    m3[n3] = {static_cast<uint8_t>(i), static_cast<uint8_t>(j),
                              static_cast<uint8_t>(k), static_cast<uint8_t>(l)};
                    idx3[key(i, j, k, l)] = n3++;
                }
        for (int i = 2; i >= 0; --i)
            for (int j = 2 - i; j >= 0; --j)
                for (int k = 2 - i - j; k >= 0; --k) {
                    int l = 2 - i - j - k;
                    m2[n2] = {static_cast<uint8_t>(i), static_cast<uint8_t>(j),
                              static_cast<uint8_t>(k), static_cast<uint8_t>(l)};
                    idx2[key(i, j, k, l)] = n2++;
                }
        for (int v = 0; v < 4; ++v)
            for (int u = 0; u < 4; ++u) {
                int e[4] = {0, 0, 0, 0};
                e[v]++;
                e[u]++;
                up12[v][u] = static_cast<uint8_t>(idx2[key(e[0], e[1], e[2], e[3])]);
            }
        for (int t = 0; t < 10; ++t)
            for (int u = 0; u < 4; ++u) {
                int e[4] = {m2[t][0], m2[t][1], m2[t][2], m2[t][3]};
                e[u]++;
                up23[t][u] = static_cast<uint8_t>(idx3[key(e[0], e[1], e[2], e[3])]);
            }
    }
};

const MonoTables& tabs() {
    static const MonoTables t;
    return t;
}

// coefficient vector of P((x,y,z,w) g^T)
V20 apply_cubic(const M16& g, const V20& p) {
    const MonoTables& T = tabs();
    int32_t acc[20] = {0};
    for (int s = 0; s < 20; ++s) {
        if (!p[s]) continue;
        const auto& e = T.m3[s];
        int rows[3];
        int nr = 0;
        for (int v = 0; v < 4; ++v)
            for (int c = 0; c < e[v]; ++c) rows[nr++] = v;
        int32_t b1[4];
        for (int j = 0; j < 4; ++j) b1[j] = int32_t(p[s]) * g[rows[0] * 4 + j];
        int32_t b2[10] = {0};
        for (int a = 0; a < 4; ++a) {
            if (!b1[a]) continue;
            for (int j = 0; j < 4; ++j)
                if (g[rows[1] * 4 + j]) b2[T.up12[a][j]] += b1[a] * g[rows[1] * 4 + j];
        }
        for (int a = 0; a < 10; ++a) {
            if (!b2[a]) continue;
            int32_t v = b2[a] % static_cast<int32_t>(P);
            if (!v) continue;
            for (int j = 0; j < 4; ++j)
                if (g[rows[2] * 4 + j]) acc[T.up23[a][j]] += v * g[rows[2] * 4 + j];
        }
    }
    V20 out;
    for (int t = 0; t < 20; ++t) out[t] = static_cast<uint8_t>(acc[t] % static_cast<int32_t>(P));
    return out;
}

// normal form modulo Q on the 20-monomial basis
struct Reducer {
    std::array<uint8_t, 4> lead;
    // replacement terms: (coefficient, exponent delta)
    std::vector<std::pair<uint8_t, std::array<uint8_t, 4>>> repl;

    static Reducer make(QKind kind, uint32_t eps) {
        Reducer r;
        switch (kind) {
            case QKind::N1:
                r.lead = {0, 1, 1, 0};
                r.repl = {{neg11(1), {1, 0, 0, 1}}};
                break;
            case QKind::N2:
                r.lead = {0, 2, 0, 0};
                r.repl = {{static_cast<uint8_t>(eps % P), {0, 0, 2, 0}}, {neg11(2), {1, 0, 0, 1}}};
                break;
            case QKind::Dege:
                r.lead = {0, 0, 2, 0};
                r.repl = {{neg11(2), {0, 1, 0, 1}}};
                break;
        }
        return r;
    }

    V20 apply(V20 v) const {
        const MonoTables& T = tabs();
        bool changed = true;
        while (changed) {
            changed = false;
            for (int t = 0; t < 20; ++t) {
                if (!v[t]) continue;
                const auto& e = T.m3[t];
                if (e[0] < lead[0] || e[1] < lead[1] || e[2] < lead[2] || e[3] < lead[3]) continue;
                uint32_t c = v[t];
                v[t] = 0;
                for (const auto& [rc, de] : repl) {
                    int tgt = T.idx3[MonoTables::key(e[0] - lead[0] + de[0], e[1] - lead[1] + de[1],
                                                     e[2] - lead[2] + de[2], e[3] - lead[3] + de[3])];
                    v[tgt] = static_cast<uint8_t>((v[tgt] + c * rc) % P);
                }
                changed = true;
            }
        }
        return v;
    }
};

// family of trailing factors: member matrices plus RED * C(member) tables
struct Family {
    std::vector<M16> mats;
    std::vector<std::array<uint8_t, 400>> M;  // row-major 20x20

    void build_tables(const Reducer& red) {
        M.resize(mats.size());
        for (size_t i = 0; i < mats.size(); ++i) {
            for (int s = 0; s < 20; ++s) {
                V20 unit{};
                unit[s] = 1;
                V20 col = red.apply(apply_cubic(mats[i], unit));
                for (int row = 0; row < 20; ++row) M[i][row * 20 + s] = col[row];
            }
        }
    }
};

M16 u_n1(uint8_t d1, uint8_t d2) {
    M16 m = m_ident();
    m[1] = d1;
    m[2] = d2;
    m[3] = static_cast<uint8_t>(neg11(static_cast<uint8_t>(d1 * d2 % P)));
    m[7] = neg11(d2);
    m[11] = neg11(d1);
    return m;
}

M16 u1_n1(uint8_t e1) {
    M16 m = m_ident();
    m[1] = e1;
    m[11] = neg11(e1);
    return m;
}

M16 u2_n1(uint8_t e2) {
    M16 m = m_ident();
    m[2] = e2;
    m[7] = neg11(e2);
    return m;
}

M16 u_n2(uint8_t c1, uint8_t c2, uint32_t eps) {
    uint32_t inv2 = kInv11[2];
    uint32_t inveps = kInv11[eps % P];
    M16 m = m_ident();
    m[1] = c1;
    m[2] = c2;
    // c2^2/(2 eps) - c1^2/2
    uint32_t t = (c2 * c2 % P) * inv2 % P * inveps % P + P - (c1 * c1 % P) * inv2 % P;
    m[3] = static_cast<uint8_t>(t % P);
    m[7] = neg11(c1);
    m[11] = static_cast<uint8_t>(c2 * inveps % P);
    return m;
}

M16 u_dege(uint8_t b) {
    M16 m = m_ident();
    m[6] = b;
    m[7] = neg11(static_cast<uint8_t>(b * b % P * kInv11[2] % P));
    m[11] = neg11(b);
    return m;
}

M16 v_dege(uint8_t d, uint8_t e1, uint8_t e2, uint8_t e3) {
    M16 m = m_ident();
    m[0] = d;
    m[1] = e1;
    m[2] = e2;
    m[3] = e3;
    return m;
}

const M16 kS1 = {0, 1, 0, 0, 1, 0, 0, 0, 0, 0, 0, 1, 0, 0, 1, 0};
const M16 kS2 = {0, 0, 1, 0, 0, 0, 0, 1, 1, 0, 0, 0, 0, 1, 0, 0};
const M16 kS12 = {0, 0, 0, 1, 0, 0, 1, 0, 0, 1, 0, 0, 1, 0, 0, 0};
const M16 kMaN1 = {1, 0, 0, 0, 0, 0, 1, 0, 0, 1, 0, 0, 0, 0, 0, 1};
const M16 kMwN2 = {0, 0, 0, 1, 0, 1, 0, 0, 0, 0, 10, 0, 1, 0, 0, 0};
const M16 kMaDiag = {1, 0, 0, 0, 0, 1, 0, 0, 0, 0, 10, 0, 0, 0, 0, 1};  // diag(1,1,-1,1)
const M16 kMwDege = {1, 0, 0, 0, 0, 0, 0, 1, 0, 0, 1, 0, 0, 1, 0, 0};

// per-(kind,eps) cached reducer and families
struct KindTables {
    Reducer red;
    std::array<uint8_t, 400> red_M;  // RED as a 20x20 matrix
    Family fam_e1, fam_e2, fam_ee;   // N1
    Family fam_d;                    // N2
    Family fam_v;                    // Dege
};

const KindTables& kind_tables(QKind kind, uint32_t eps) {
    static std::mutex mu;
    static std::map<std::pair<int, uint32_t>, std::unique_ptr<KindTables>> cache;
    std::lock_guard<std::mutex> lock(mu);
    auto key = std::make_pair(static_cast<int>(kind), kind == QKind::N2 ? eps % P : 0);
    auto it = cache.find(key);
    if (it != cache.end()) return *it->second;

    auto kt = std::make_unique<KindTables>();
    kt->red = Reducer::make(kind, eps);
    for (int s = 0; s < 20; ++s) {
        V20 unit{};
        unit[s] = 1;
        V20 col = kt->red.apply(unit);
        for (int row = 0; row < 20; ++row) kt->red_M[row * 20 + s] = col[row];
    }
    switch (kind) {
        case QKind::N1:
            for (uint32_t e = 0; e < P; ++e) kt->fam_e1.mats.push_back(u1_n1(e));
            for (uint32_t e = 0; e < P; ++e) kt->fam_e2.mats.push_back(u2_n1(e));
            for (uint32_t e1 = 0; e1 < P; ++e1)
                for (uint32_t e2 = 0; e2 < P; ++e2) kt->fam_ee.mats.push_back(u_n1(e1, e2));
            kt->fam_e1.build_tables(kt->red);
            kt->fam_e2.build_tables(kt->red);
            kt->fam_ee.build_tables(kt->red);
            break;
        case QKind::N2:
            for (uint32_t d1 = 0; d1 < P; ++d1)
                for (uint32_t d2 = 0; d2 < P; ++d2) kt->fam_d.mats.push_back(u_n2(d1, d2, eps));
            kt->fam_d.build_tables(kt->red);
            break;
        case QKind::Dege:
            for (uint32_t d = 1; d < P; ++d)
                for (uint32_t e1 = 0; e1 < P; ++e1)
                    for (uint32_t e2 = 0; e2 < P; ++e2)
                        for (uint32_t e3 = 0; e3 < P; ++e3)
                            kt->fam_v.mats.push_back(v_dege(d, e1, e2, e3));
            kt->fam_v.build_tables(kt->red);
            break;
    }
    const KindTables& ref = *kt;
    cache.emplace(key, std::move(kt));
    return ref;
}

// proportionality check data for one curve
struct Checker {
    V20 ref;                        // reduced coefficient vector of P
    std::array<uint8_t, 20> order;  // zero rows of ref first, then the pivot
    int nzero = 0;
    int pivot = -1;
    uint8_t pivinv = 0;

    static Checker make(const V20& reduced_p) {
        Checker c;
        c.ref = reduced_p;
        int pos = 0;
        for (int t = 0; t < 20; ++t)
            if (!reduced_p[t]) c.order[pos++] = static_cast<uint8_t>(t);
        c.nzero = pos;
        for (int t = 0; t < 20; ++t)
            if (reduced_p[t]) {
                c.pivot = t;
                break;
            }
        c.order[pos++] = static_cast<uint8_t>(c.pivot);
        for (int t = 0; t < 20; ++t)
            if (reduced_p[t] && t != c.pivot) c.order[pos++] = static_cast<uint8_t>(t);
        c.pivinv = kInv11[reduced_p[c.pivot]];
        return c;
    }

    // rows: 20x20 table with rows already permuted into `order`
    inline int check(const uint8_t* rows, const V20& u) const {
        int r = 0;
        for (int idx = 0; idx < 20; ++idx) {
            const uint8_t* row = rows + idx * 20;
            int32_t dot = 0;
            for (int j = 0; j < 20; ++j) dot += int32_t(row[j]) * u[j];
            int v = dot % static_cast<int32_t>(P);
            if (idx < nzero) {
                if (v) return 0;
            } else if (idx == nzero) {
                if (!v) return 0;
                r = v * pivinv % P;
            } else {
                if (v != static_cast<int>(r * ref[order[idx]] % P)) return 0;
            }
        }
        return r;
    }

    // direct check of an already-reduced vector
    inline int check_reduced(const V20& v) const {
        int r = 0;
        for (int idx = 0; idx < 20; ++idx) {
            int t = order[idx];
            if (idx < nzero) {
                if (v[t]) return 0;
            } else if (idx == nzero) {
                if (!v[t]) return 0;
                r = v[t] * pivinv % P;
            } else {
                if (v[t] != static_cast<int>(r * ref[t] % P)) return 0;
            }
        }
        return r;
    }
};

std::vector<std::array<uint8_t, 400>> permute_rows(const std::vector<std::array<uint8_t, 400>>& M,
                                                   const Checker& ck) {
    std::vector<std::array<uint8_t, 400>> out(M.size());
    for (size_t i = 0; i < M.size(); ++i)
        for (int idx = 0; idx < 20; ++idx)
            std::memcpy(out[i].data() + idx * 20, M[i].data() + ck.order[idx] * 20, 20);
    return out;
}

struct Accum {
    std::vector<M16> out;
    uint64_t count = 0;
};

void run_outer(uint64_t total, bool parallel, const std::function<void(uint64_t, Accum&)>& body,
               Accum& result) {
#ifdef _OPENMP
    if (parallel) {
        int nt = omp_get_max_threads();
        std::vector<Accum> tl(nt);
#pragma omp parallel for schedule(dynamic, 16)
        for (int64_t t = 0; t < static_cast<int64_t>(total); ++t)
            body(static_cast<uint64_t>(t), tl[omp_get_thread_num()]);
        for (auto& a : tl) {
            result.out.insert(result.out.end(), a.out.begin(), a.out.end());
            result.count += a.count;
        }
        return;
    }
#endif
    for (uint64_t t = 0; t < total; ++t) body(t, result);
}

struct ScanPlan {
    const KindTables& kt;
    const Checker ck;
    std::array<uint8_t, 400> red_perm;  // direct-check table in checker order
    bool ratio_one_only;

    ScanPlan(const KindTables& k, const V20& p, bool r1)
        : kt(k), ck(Checker::make(k.red.apply(p))), ratio_one_only(r1) {
        for (int idx = 0; idx < 20; ++idx)
            std::memcpy(red_perm.data() + idx * 20, k.red_M.data() + ck.order[idx] * 20, 20);
    }

    inline void accept(Accum& acc, const M16& g, int r) const {
        if (ratio_one_only && r != 1) return;
        M16 c = g;
        m_canonical(c);
        acc.out.push_back(c);
    }
};

void scan_cell_n1(const ScanPlan& plan, const V20& p, int cell, bool parallel, Accum& result) {
    int flip = cell / 4, w = cell % 4;
    const Family* fam = w == 1 ? &plan.kt.fam_e1 : w == 2 ? &plan.kt.fam_e2
                                : w == 3          ? &plan.kt.fam_ee
                                                  : nullptr;
    std::vector<std::array<uint8_t, 400>> famperm;
    if (fam) famperm = permute_rows(fam->M, plan.ck);
    const M16* wmat = w == 1 ? &kS1 : w == 2 ? &kS2 : w == 3 ? &kS12 : nullptr;
    uint64_t total = 10ull * 10 * 10 * 11 * 11;
    run_outer(total, parallel, [&](uint64_t t, Accum& acc) {
        uint8_t a1 = 1 + t % 10;
        t /= 10;
        uint8_t b1 = 1 + t % 10;
        t /= 10;
        uint8_t c = 1 + t % 10;
        t /= 10;
        uint8_t d1 = t % 11;
        t /= 11;
        uint8_t d2 = static_cast<uint8_t>(t);
        M16 tt{};
        tt[0] = a1;
        tt[5] = b1;
        tt[10] = static_cast<uint8_t>(c * kInv11[b1] % P);
        tt[15] = static_cast<uint8_t>(c * kInv11[a1] % P);
        M16 o = m_mul(tt, u_n1(d1, d2));
        if (wmat) o = m_mul(o, *wmat);
        if (flip) o = m_mul(kMaN1, o);
        V20 u = apply_cubic(o, p);
        if (!fam) {
            acc.count += 1;
            int r = plan.ck.check(plan.red_perm.data(), u);
            if (r) plan.accept(acc, o, r);
            return;
        }
        acc.count += fam->mats.size();
        for (size_t i = 0; i < fam->mats.size(); ++i) {
            int r = plan.ck.check(famperm[i].data(), u);
            if (r) plan.accept(acc, m_mul(o, fam->mats[i]), r);
        }
    }, result);
}

void scan_cell_n2(const ScanPlan& plan, const V20& p, uint32_t eps, int cell, bool parallel,
                  Accum& result) {
    int flip = cell / 2, w = cell % 2;
    const Family* fam = w == 1 ? &plan.kt.fam_d : nullptr;
    std::vector<std::array<uint8_t, 400>> famperm;
    if (fam) famperm = permute_rows(fam->M, plan.ck);
    uint64_t total = 10ull * 121 * 121;
    run_outer(total, parallel, [&](uint64_t t, Accum& acc) {
        uint8_t a1 = 1 + t % 10;
        t /= 10;
        uint8_t b1 = t % 11;
        t /= 11;
        uint8_t b2 = t % 11;
        t /= 11;
        uint8_t c1 = t % 11;
        t /= 11;
        uint8_t c2 = static_cast<uint8_t>(t);
        if (!b1 && !b2) return;  // b1^2 - eps b2^2 = 0 only at (0,0)
        M16 hr{};
        hr[0] = a1;
        hr[5] = b1;
        hr[6] = static_cast<uint8_t>(eps * b2 % P);
        hr[9] = b2;
        hr[10] = b1;
        uint32_t nrm = (b1 * b1 % P + P - eps * (b2 * b2 % P) % P) % P;
        hr[15] = static_cast<uint8_t>(nrm * kInv11[a1] % P);
        M16 o = m_mul(hr, u_n2(c1, c2, eps));
        if (w) o = m_mul(o, kMwN2);
        if (flip) o = m_mul(kMaDiag, o);
        V20 u = apply_cubic(o, p);
        if (!fam) {
            acc.count += 1;
            int r = plan.ck.check(plan.red_perm.data(), u);
            if (r) plan.accept(acc, o, r);
            return;
        }
        acc.count += fam->mats.size();
        for (size_t i = 0; i < fam->mats.size(); ++i) {
            int r = plan.ck.check(famperm[i].data(), u);
            if (r) plan.accept(acc, m_mul(o, fam->mats[i]), r);
        }
    }, result);
}

void scan_cell_dege(const ScanPlan& plan, const V20& p, int cell, bool parallel, Accum& result) {
    int flip = cell / 2, w = cell % 2;
    const Family& fam = plan.kt.fam_v;
    std::vector<std::array<uint8_t, 400>> famperm = permute_rows(fam.M, plan.ck);
    uint64_t total = w ? 10ull * 10 * 11 * 11 : 10ull * 10 * 11;
    run_outer(total, parallel, [&](uint64_t t, Accum& acc) {
        uint8_t a1 = 1 + t % 10;
        t /= 10;
        uint8_t a3 = 1 + t % 10;
        t /= 10;
        uint8_t b = t % 11;
        t /= 11;
        uint8_t c = static_cast<uint8_t>(t);  // only used when w == 1
        M16 tt{};
        tt[0] = 1;
        tt[5] = static_cast<uint8_t>(a1 * a3 % P);
        tt[10] = a3;
        tt[15] = static_cast<uint8_t>(kInv11[a1] * a3 % P);
        M16 o = m_mul(tt, u_dege(b));
        if (w) o = m_mul(m_mul(o, kMwDege), u_dege(c));
        if (flip) o = m_mul(kMaDiag, o);
        V20 u = apply_cubic(o, p);
        acc.count += fam.mats.size();
        for (size_t i = 0; i < fam.mats.size(); ++i) {
            int r = plan.ck.check(famperm[i].data(), u);
            if (r) plan.accept(acc, m_mul(o, fam.mats[i]), r);
        }
    }, result);
}

}  // namespace

const std::array<std::array<uint8_t, 4>, 20>& cubic_monomials() { return tabs().m3; }

Cubic20 cubic_from_poly(const Poly& P_) {
    if (P_.field()->p != 11 || P_.field()->k != 1) throw Error("brute engine expects F_11 input");
    Cubic20 out{};
    for (const auto& t : P_.terms()) {
        if (t.m.deg != 3) throw Error("brute engine expects a cubic form");
        int idx = tabs().idx3[MonoTables::key(t.m.e[0], t.m.e[1], t.m.e[2], t.m.e[3])];
        out[idx] = t.c.c[0];
    }
    return out;
}

int brute_cell_count(QKind kind) { return kind == QKind::N1 ? 8 : 4; }

BruteScanResult brute_scan(QKind kind, uint32_t eps, const Cubic20& P_, const BruteScanOptions& opts) {
    const KindTables& kt = kind_tables(kind, eps);
    ScanPlan plan(kt, P_, opts.ratio_one_only);
    std::vector<int> cells = opts.cells;
    if (cells.empty())
        for (int c = 0; c < brute_cell_count(kind); ++c) cells.push_back(c);
    Accum acc;
    for (int c : cells) {
        switch (kind) {
            case QKind::N1: scan_cell_n1(plan, P_, c, opts.parallel, acc); break;
            case QKind::N2: scan_cell_n2(plan, P_, eps, c, opts.parallel, acc); break;
            case QKind::Dege: scan_cell_dege(plan, P_, c, opts.parallel, acc); break;
        }
    }
    std::sort(acc.out.begin(), acc.out.end());
    acc.out.erase(std::unique(acc.out.begin(), acc.out.end()), acc.out.end());
    return BruteScanResult{std::move(acc.out), acc.count};
}

BruteScanResult brute_scan_reference(QKind kind, uint32_t eps, const Cubic20& P_,
                                     const std::vector<int>& cells_in) {
    Reducer red = Reducer::make(kind, eps);
    V20 pref = red.apply(P_);
    int pivot = -1;
    for (int t = 0; t < 20 && pivot < 0; ++t)
        if (pref[t]) pivot = t;
    if (pivot < 0) throw Error("cubic reduces to zero mod Q");

    auto proportional = [&](const M16& g) -> int {
        V20 v = red.apply(apply_cubic(g, P_));
        if (!v[pivot]) return 0;
        int r = v[pivot] * kInv11[pref[pivot]] % P;
        for (int t = 0; t < 20; ++t)
            if (v[t] != static_cast<uint8_t>(r * pref[t] % P)) return 0;
        return r;
    };

    std::vector<int> cells = cells_in;
    if (cells.empty())
        for (int c = 0; c < brute_cell_count(kind); ++c) cells.push_back(c);

    Accum acc;
    auto take = [&](const M16& g, int r) {
        if (!r) return;
        M16 c = g;
        m_canonical(c);
        acc.out.push_back(c);
    };

    for (int cell : cells) {
        if (kind == QKind::N1) {
            int flip = cell / 4, w = cell % 4;
            for (uint32_t a1 = 1; a1 < P; ++a1)
                for (uint32_t b1 = 1; b1 < P; ++b1)
                    for (uint32_t c = 1; c < P; ++c)
                        for (uint32_t d1 = 0; d1 < P; ++d1)
                            for (uint32_t d2 = 0; d2 < P; ++d2) {
                                M16 tt{};
                                tt[0] = a1;
                                tt[5] = b1;
                                tt[10] = static_cast<uint8_t>(c * kInv11[b1] % P);
                                tt[15] = static_cast<uint8_t>(c * kInv11[a1] % P);
                                M16 o = m_mul(tt, u_n1(d1, d2));
                                if (w == 1) o = m_mul(o, kS1);
                                if (w == 2) o = m_mul(o, kS2);
                                if (w == 3) o = m_mul(o, kS12);
                                if (flip) o = m_mul(kMaN1, o);
                                if (w == 0) {
                                    ++acc.count;
                                    take(o, proportional(o));
                                } else if (w == 1) {
                                    for (uint32_t e1 = 0; e1 < P; ++e1) {
                                        ++acc.count;
                                        M16 g = m_mul(o, u1_n1(e1));
                                        take(g, proportional(g));
                                    }
                                } else if (w == 2) {
                                    for (uint32_t e2 = 0; e2 < P; ++e2) {
                                        ++acc.count;
                                        M16 g = m_mul(o, u2_n1(e2));
                                        take(g, proportional(g));
                                    }
                                } else {
                                    for (uint32_t e1 = 0; e1 < P; ++e1)
                                        for (uint32_t e2 = 0; e2 < P; ++e2) {
                                            ++acc.count;
                                            M16 g = m_mul(o, u_n1(e1, e2));
                                            take(g, proportional(g));
                                        }
                                }
                            }
        } else if (kind == QKind::N2) {
            int flip = cell / 2, w = cell % 2;
            for (uint32_t a1 = 1; a1 < P; ++a1)
                for (uint32_t b1 = 0; b1 < P; ++b1)
                    for (uint32_t b2 = 0; b2 < P; ++b2) {
                        if (!b1 && !b2) continue;
                        for (uint32_t c1 = 0; c1 < P; ++c1)
                            for (uint32_t c2 = 0; c2 < P; ++c2) {
                                M16 hr{};
                                hr[0] = a1;
                                hr[5] = b1;
                                hr[6] = static_cast<uint8_t>(eps * b2 % P);
                                hr[9] = b2;
                                hr[10] = b1;
                                uint32_t nrm = (b1 * b1 % P + P - eps * (b2 * b2 % P) % P) % P;
                                hr[15] = static_cast<uint8_t>(nrm * kInv11[a1] % P);
                                M16 o = m_mul(hr, u_n2(c1, c2, eps));
                                if (flip) {
                                    // apply the diag(1,1,-1,1) flip on the left at the end
                                }
                                if (w == 0) {
                                    M16 g = flip ? m_mul(kMaDiag, o) : o;
                                    ++acc.count;
                                    take(g, proportional(g));
                                } else {
                                    M16 om = m_mul(o, kMwN2);
                                    for (uint32_t d1 = 0; d1 < P; ++d1)
                                        for (uint32_t d2 = 0; d2 < P; ++d2) {
                                            M16 g = m_mul(om, u_n2(d1, d2, eps));
                                            if (flip) g = m_mul(kMaDiag, g);
                                            ++acc.count;
                                            take(g, proportional(g));
                                        }
                                }
                            }
                    }
        } else {
            int flip = cell / 2, w = cell % 2;
            for (uint32_t a1 = 1; a1 < P; ++a1)
                for (uint32_t a3 = 1; a3 < P; ++a3)
                    for (uint32_t b = 0; b < P; ++b) {
                        M16 tt{};
                        tt[0] = 1;
                        tt[5] = static_cast<uint8_t>(a1 * a3 % P);
                        tt[10] = static_cast<uint8_t>(a3);
                        tt[15] = static_cast<uint8_t>(kInv11[a1] * a3 % P);
                        M16 o0 = m_mul(tt, u_dege(b));
                        uint32_t cmax = w ? P : 1;
                        for (uint32_t c = 0; c < cmax; ++c) {
                            M16 o = w ? m_mul(m_mul(o0, kMwDege), u_dege(c)) : o0;
                            if (flip) o = m_mul(kMaDiag, o);
                            for (uint32_t d = 1; d < P; ++d)
                                for (uint32_t e1 = 0; e1 < P; ++e1)
                                    for (uint32_t e2 = 0; e2 < P; ++e2)
                                        for (uint32_t e3 = 0; e3 < P; ++e3) {
                                            M16 g = m_mul(o, v_dege(d, e1, e2, e3));
                                            ++acc.count;
                                            take(g, proportional(g));
                                        }
                        }
                    }
        }
    }
    std::sort(acc.out.begin(), acc.out.end());
    acc.out.erase(std::unique(acc.out.begin(), acc.out.end()), acc.out.end());
    return BruteScanResult{std::move(acc.out), acc.count};
}

}  // namespace ssp4
