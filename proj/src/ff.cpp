#include "ssp4/ff.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <numeric>
#include <sstream>

namespace ssp4 {

namespace {

inline uint32_t mod_inv(uint32_t a, uint32_t p) {
    // extended Euclid on integers
    int64_t t = 0, nt = 1, r = p, nr = a % p;
    while (nr != 0) {
        int64_t q = r / nr;
        std::swap(t -= q * nt, nt);
        std::swap(r -= q * nr, nr);
    }
    if (r != 1) throw ZeroInversion();
    return static_cast<uint32_t>(t < 0 ? t + p : t);
}

// Schoolbook product of coefficient vectors, reduced by the field modulus.
void mul_reduce(const Field* f, const uint8_t* a, const uint8_t* b, uint8_t* out) {
    const uint32_t p = f->p, k = f->k;
    if (k == 1) {
        out[0] = static_cast<uint8_t>((uint32_t(a[0]) * b[0]) % p);
        return;
    }
    uint32_t acc[2 * kDegreeCap] = {0};
    for (uint32_t i = 0; i < k; ++i) {
        if (!a[i]) continue;
        for (uint32_t j = 0; j < k; ++j) acc[i + j] += uint32_t(a[i]) * b[j];
    }
    // reduce: t^k = -(modulus tail)
    for (int d = static_cast<int>(2 * k) - 2; d >= static_cast<int>(k); --d) {
        uint32_t c = acc[d] % p;
        if (!c) continue;
        acc[d] = 0;
        for (uint32_t j = 0; j < k; ++j) {
            // t^d = t^(d-k) * t^k = -sum m_j t^(d-k+j)
            acc[d - k + j] += c * (p - f->modulus[j] % p);
        }
    }
    for (uint32_t i = 0; i < k; ++i) out[i] = static_cast<uint8_t>(acc[i] % p);
}

}  // namespace

FieldElem fe_zero(const Field* f) {
    FieldElem e;
    e.f = f;
    return e;
}

FieldElem fe_one(const Field* f) {
    FieldElem e = fe_zero(f);
    e.c[0] = 1;
    return e;
}

FieldElem fe_make(const Field* f, int64_t a) {
    FieldElem e = fe_zero(f);
    int64_t r = a % f->p;
    if (r < 0) r += f->p;
    e.c[0] = static_cast<uint8_t>(r);
    return e;
}

FieldElem fe_make(const Field* f, const std::vector<uint32_t>& coeffs) {
    FieldElem e = fe_zero(f);
    for (size_t i = 0; i < coeffs.size() && i < f->k; ++i)
        e.c[i] = static_cast<uint8_t>(coeffs[i] % f->p);
    return e;
}

FieldElem fe_from_value(const Field* f, uint64_t v) {
    FieldElem e = fe_zero(f);
    for (uint32_t i = 0; i < f->k; ++i) {
        e.c[i] = static_cast<uint8_t>(v % f->p);
        v /= f->p;
    }
    return e;
}

FieldElem operator+(const FieldElem& a, const FieldElem& b) {
    FieldElem r = a;
    for (uint32_t i = 0; i < a.f->k; ++i) {
        uint32_t s = uint32_t(a.c[i]) + b.c[i];
        r.c[i] = static_cast<uint8_t>(s >= a.f->p ? s - a.f->p : s);
    }
    return r;
}

FieldElem operator-(const FieldElem& a, const FieldElem& b) {
    FieldElem r = a;
    for (uint32_t i = 0; i < a.f->k; ++i) {
        int32_t s = int32_t(a.c[i]) - b.c[i];
        r.c[i] = static_cast<uint8_t>(s < 0 ? s + a.f->p : s);
    }
    return r;
}

FieldElem operator-(const FieldElem& a) {
    FieldElem r = a;
    for (uint32_t i = 0; i < a.f->k; ++i) r.c[i] = a.c[i] ? static_cast<uint8_t>(a.f->p - a.c[i]) : 0;
    return r;
}

FieldElem operator*(const FieldElem& a, const FieldElem& b) {
    FieldElem r = fe_zero(a.f);
    mul_reduce(a.f, a.c.data(), b.c.data(), r.c.data());
    return r;
}

FieldElem field_inverse(const FieldElem& a) {
    if (a.is_zero()) throw ZeroInversion();
    const Field* f = a.f;
    if (f->k == 1) {
        FieldElem r = fe_zero(f);
        r.c[0] = static_cast<uint8_t>(mod_inv(a.c[0], f->p));
        return r;
    }
    // extended Euclid in F_p[t] on (a, modulus)
    const uint32_t p = f->p;
    std::vector<uint32_t> r0(f->modulus), r1(f->k, 0), s0, s1{1};
    for (uint32_t i = 0; i < f->k; ++i) r1[i] = a.c[i];
    while (!r1.empty() && r1.back() == 0) r1.pop_back();
    auto deg = [](const std::vector<uint32_t>& v) { return static_cast<int>(v.size()) - 1; };
    while (deg(r1) > 0) {
        // r0 = q*r1 + r2
        std::vector<uint32_t> q(deg(r0) - deg(r1) + 1, 0);
        std::vector<uint32_t> rem = r0;
        uint32_t lcinv = mod_inv(r1.back(), p);
        for (int d = deg(rem); d >= deg(r1); --d) {
            uint32_t c = rem[d] % p;
            if (!c) continue;
            uint32_t qc = (c * lcinv) % p;
            q[d - deg(r1)] = qc;
            for (int j = 0; j <= deg(r1); ++j) {
                rem[d - deg(r1) + j] = (rem[d - deg(r1) + j] + p * p - qc * r1[j] % p) % p;
            }
        }
        while (!rem.empty() && rem.back() == 0) rem.pop_back();
        // s2 = s0 - q*s1
        std::vector<uint32_t> s2(std::max(s0.size(), q.size() + s1.size()), 0);
        for (size_t i = 0; i < s0.size(); ++i) s2[i] = s0[i];
        for (size_t i = 0; i < q.size(); ++i)
            for (size_t j = 0; j < s1.size(); ++j)
                s2[i + j] = (s2[i + j] + p * p - q[i] * s1[j] % p) % p;
        while (!s2.empty() && s2.back() == 0) s2.pop_back();
        r0 = r1;
        r1 = rem;
        s0 = s1;
        s1 = s2;
    }
    if (r1.empty()) throw ZeroInversion();  // gcd jumped past degree 0: not coprime
    uint32_t lcinv = mod_inv(r1[0], p);
    FieldElem out = fe_zero(f);
    for (size_t i = 0; i < s1.size() && i < f->k; ++i)
        out.c[i] = static_cast<uint8_t>((s1[i] * lcinv) % p);
    return out;
}

FieldElem operator/(const FieldElem& a, const FieldElem& b) { return a * field_inverse(b); }

FieldElem fe_pow(const FieldElem& a, uint64_t e) {
    FieldElem base = a, r = fe_one(a.f);
    while (e) {
        if (e & 1) r = r * base;
        base = base * base;
        e >>= 1;
    }
    return r;
}

FieldElem fe_frobenius(const FieldElem& a) { return fe_pow(a, a.f->p); }

uint64_t fe_mult_order(const FieldElem& a) {
    if (a.is_zero()) throw ZeroInversion();
    uint64_t n = a.f->size - 1;
    uint64_t ord = n;
    // strip prime factors of n while the power stays 1
    uint64_t m = n;
    for (uint64_t q = 2; q * q <= m; ++q) {
        while (m % q == 0) {
            m /= q;
            while (ord % q == 0 && fe_pow(a, ord / q).is_one()) ord /= q;
        }
    }
    if (m > 1)
        while (ord % m == 0 && fe_pow(a, ord / m).is_one()) ord /= m;
    return ord;
}

std::string fe_to_string(const FieldElem& a) {
    if (a.f->k == 1) return std::to_string(a.c[0]);
    std::ostringstream os;
    bool first = true;
    for (int i = static_cast<int>(a.f->k) - 1; i >= 0; --i) {
        if (!a.c[i]) continue;
        if (!first) os << "+";
        first = false;
        if (i == 0 || a.c[i] != 1) os << int(a.c[i]);
        if (i > 0 && a.c[i] != 1) os << "*";
        if (i == 1) os << "t";
        if (i > 1) os << "t^" << i;
    }
    if (first) os << "0";
    return os.str();
}

// ---------------------------------------------------------------------------
// FieldTower

namespace {

// Irreducibility of a monic polynomial over F_p: f is irreducible of degree k
// iff X^{p^k} = X mod f and gcd(X^{p^{k/l}} - X, f) = 1 for every prime l | k.
struct PrimePolyOps {
    uint32_t p;
    // dense vectors low-to-high over F_p
    using V = std::vector<uint32_t>;
    static void trim(V& v) {
        while (!v.empty() && v.back() == 0) v.pop_back();
    }
    V mulmod(const V& a, const V& b, const V& f) const {
        V acc(a.size() + b.size(), 0);
        for (size_t i = 0; i < a.size(); ++i) {
            if (!a[i]) continue;
            for (size_t j = 0; j < b.size(); ++j) acc[i + j] = (acc[i + j] + a[i] * b[j]) % p;
        }
        // reduce by monic f
        int df = static_cast<int>(f.size()) - 1;
        for (int d = static_cast<int>(acc.size()) - 1; d >= df; --d) {
            uint32_t c = acc[d] % p;
            if (!c) continue;
            acc[d] = 0;
            for (int j = 0; j < df; ++j) acc[d - df + j] = (acc[d - df + j] + (p - f[j] % p) * c) % p;
        }
        acc.resize(df);
        trim(acc);
        return acc;
    }
    V xpowmod(uint64_t e, const V& f) const {
        V r{1}, base{0, 1};
        if (f.size() <= 2) {  // degree <= 1 modulus: X reduces immediately
            base = mulmod(V{1}, base, f);
        }
        while (e) {
            if (e & 1) r = mulmod(r, base, f);
            base = mulmod(base, base, f);
            e >>= 1;
        }
        return r;
    }
    V gcd(V a, V b) const {
        trim(a);
        trim(b);
        while (!b.empty()) {
            // a mod b
            int db = static_cast<int>(b.size()) - 1;
            uint32_t lcinv = mod_inv(b.back(), p);
            for (int d = static_cast<int>(a.size()) - 1; d >= db; --d) {
                uint32_t c = a[d] % p;
                if (!c) continue;
                uint32_t qc = (c * lcinv) % p;
                for (int j = 0; j <= db; ++j) a[d - db + j] = (a[d - db + j] + (p - b[j] % p) * qc % p) % p;
            }
            trim(a);
            std::swap(a, b);
        }
        return a;
    }
    bool irreducible(const V& f) const {
        uint32_t k = static_cast<uint32_t>(f.size()) - 1;
        if (k == 1) return true;
        uint64_t pk = 1;
        for (uint32_t i = 0; i < k; ++i) pk *= p;
        V xp = xpowmod(pk, f);
        // xp must equal X
        V x{0, 1};
        if (xp != x) return false;
        for (uint32_t l = 2; l <= k; ++l) {
            if (k % l) continue;
            bool isprime = true;
            for (uint32_t d = 2; d * d <= l; ++d)
                if (l % d == 0) isprime = false;
            if (!isprime) continue;
            uint64_t pe = 1;
            for (uint32_t i = 0; i < k / l; ++i) pe *= p;
            V g = xpowmod(pe, f);
            // g - X
            V diff = g;
            diff.resize(std::max<size_t>(diff.size(), 2), 0);
            diff[1] = (diff[1] + p - 1) % p;
            trim(diff);
            V gg = gcd(diff, f);
            if (gg.size() != 1) return false;
        }
        return true;
    }
};

}  // namespace

struct FieldTower::Impl {
    std::mutex mu;
    std::map<uint32_t, std::unique_ptr<Field>> fields;
    // (from_k, to_k) -> image of generator t_from in F_{p^to}, plus the
    // row-echelon data used for lowering.
    struct Emb {
        FieldElem gen_image;
        std::vector<FieldElem> powers;  // gen_image^0..^(from_k-1)
    };
    std::map<std::pair<uint32_t, uint32_t>, Emb> embeddings;
};

FieldTower::FieldTower(uint32_t p) : p_(p), impl_(new Impl) {
    if (p < 2 || p > 255) throw Error("characteristic out of supported range");
    for (uint32_t d = 2; d * d <= p; ++d)
        if (p % d == 0) throw Error("characteristic must be prime");
}

FieldTower::~FieldTower() = default;

FieldTower& FieldTower::global(uint32_t p) {
    static std::mutex mu;
    static std::map<uint32_t, std::unique_ptr<FieldTower>> towers;
    std::lock_guard<std::mutex> lock(mu);
    auto it = towers.find(p);
    if (it == towers.end()) it = towers.emplace(p, std::make_unique<FieldTower>(p)).first;
    return *it->second;
}

const Field* FieldTower::field(uint32_t k) {
    if (k < 1 || k > kDegreeCap)
        throw DegreeCapExceeded("extension degree " + std::to_string(k) + " outside [1," +
                                std::to_string(kDegreeCap) + "]");
    std::lock_guard<std::mutex> lock(impl_->mu);
    auto it = impl_->fields.find(k);
    if (it != impl_->fields.end()) return it->second.get();

    auto fld = std::make_unique<Field>();
    fld->p = p_;
    fld->k = k;
    fld->tower = this;
    fld->size = 1;
    for (uint32_t i = 0; i < k; ++i) fld->size *= p_;
    if (k > 1) {
        if (p_ == 11 && k == 2) {
            fld->modulus = {2, 7, 1};  // t^2 + 7t + 2, with root the paper's zeta
        } else {
            PrimePolyOps ops{p_};
            std::vector<uint32_t> m(k + 1, 0);
            m[k] = 1;
            uint64_t lim = fld->size;
            bool found = false;
            for (uint64_t n = 0; n < lim; ++n) {
                uint64_t v = n;
                for (uint32_t i = 0; i < k; ++i) {
                    m[i] = static_cast<uint32_t>(v % p_);
                    v /= p_;
                }
                if (ops.irreducible(m)) {
                    found = true;
                    break;
                }
            }
            if (!found) throw Error("no irreducible polynomial found");  // cannot happen
            fld->modulus = m;
        }
    }
    const Field* out = fld.get();
    impl_->fields.emplace(k, std::move(fld));
    return out;
}

const Field* build_extension(const Field* base, uint32_t k) {
    if (k < 1) throw Error("extension degree must be >= 1");
    return base->tower->field(base->k * k);
}

const Field* FieldTower::compositum(const Field* a, const Field* b) {
    return field(static_cast<uint32_t>(std::lcm(a->k, b->k)));
}

FieldElem FieldTower::embed(const FieldElem& a, const Field* to) {
    const Field* from = a.f;
    if (from == to || from->same(*to)) {
        FieldElem r = a;
        r.f = to;
        return r;
    }
    if (to->k % from->k != 0) throw Error("no embedding: degree does not divide");
    if (from->k == 1) {
        FieldElem r = fe_zero(to);
        r.c[0] = a.c[0];
        return r;
    }
    Impl::Emb* emb = nullptr;
    {
        std::lock_guard<std::mutex> lock(impl_->mu);
        auto key = std::make_pair(from->k, to->k);
        auto it = impl_->embeddings.find(key);
        if (it != impl_->embeddings.end()) emb = &it->second;
    }
    if (!emb) {
        // find the smallest root of from->modulus in `to`
        UPoly m = up_from_ints(to, {});
        m.c.clear();
        for (uint32_t i = 0; i <= from->k; ++i) m.c.push_back(fe_make(to, from->modulus[i]));
        m.f = to;
        auto roots = univariate_roots(m);
        if (roots.empty()) throw Error("embedding root not found");  // cannot happen
        std::sort(roots.begin(), roots.end());
        Impl::Emb e;
        e.gen_image = roots.front();
        e.powers.resize(from->k);
        e.powers[0] = fe_one(to);
        for (uint32_t i = 1; i < from->k; ++i) e.powers[i] = e.powers[i - 1] * e.gen_image;
        std::lock_guard<std::mutex> lock(impl_->mu);
        emb = &impl_->embeddings.emplace(std::make_pair(from->k, to->k), std::move(e)).first->second;
    }
    FieldElem r = fe_zero(to);
    for (uint32_t i = 0; i < from->k; ++i)
        if (a.c[i]) r = r + fe_make(to, a.c[i]) * emb->powers[i];
    return r;
}

std::optional<FieldElem> FieldTower::lower(const FieldElem& a, const Field* to) {
    if (a.f == to || a.f->same(*to)) {
        FieldElem r = a;
        r.f = to;
        return r;
    }
    if (a.f->k % to->k != 0) return std::nullopt;
    // a lies in the image of `to` iff Frobenius^to->k fixes it
    FieldElem fr = a;
    for (uint32_t i = 0; i < to->k; ++i) fr = fe_frobenius(fr);
    if (!(fr == a)) return std::nullopt;
    if (to->k == 1) {
        FieldElem r = fe_zero(to);
        r.c[0] = a.c[0];
        return r;
    }
    // solve for coordinates against the embedded powers of to's generator
    FieldElem gen = fe_zero(to);
    gen.c[1] = 1;
    FieldElem gi = embed(gen, a.f);
    // Gaussian solve: columns are gi^j expressed over F_p
    uint32_t n = a.f->k, m = to->k;
    std::vector<std::vector<uint32_t>> A(n, std::vector<uint32_t>(m + 1, 0));
    FieldElem pw = fe_one(a.f);
    for (uint32_t j = 0; j < m; ++j) {
        for (uint32_t i = 0; i < n; ++i) A[i][j] = pw.c[i];
        pw = pw * gi;
    }
    for (uint32_t i = 0; i < n; ++i) A[i][m] = a.c[i];
    uint32_t p = p_;
    uint32_t row = 0;
    std::vector<int> pivot_col(m, -1);
    for (uint32_t col = 0; col < m && row < n; ++col) {
        uint32_t pr = row;
        while (pr < n && A[pr][col] == 0) ++pr;
        if (pr == n) continue;
        std::swap(A[pr], A[row]);
        uint32_t inv = mod_inv(A[row][col], p);
        for (uint32_t j = 0; j <= m; ++j) A[row][j] = A[row][j] * inv % p;
        for (uint32_t i = 0; i < n; ++i) {
            if (i == row || A[i][col] == 0) continue;
            uint32_t f = A[i][col];
            for (uint32_t j = 0; j <= m; ++j) A[i][j] = (A[i][j] + (p - f) * A[row][j]) % p;
        }
        pivot_col[col] = static_cast<int>(row);
        ++row;
    }
    FieldElem out = fe_zero(to);
    for (uint32_t col = 0; col < m; ++col)
        if (pivot_col[col] >= 0) out.c[col] = static_cast<uint8_t>(A[pivot_col[col]][m]);
    // consistency rows
    for (uint32_t i = row; i < n; ++i)
        if (A[i][m] != 0) return std::nullopt;
    return out;
}

FieldElem FieldTower::minimize(const FieldElem& a) {
    for (uint32_t d = 1; d < a.f->k; ++d) {
        if (a.f->k % d) continue;
        auto low = lower(a, field(d));
        if (low) return *low;
    }
    return a;
}

void fe_align(FieldElem& a, FieldElem& b) {
    if (a.f == b.f) return;
    if (a.f->p != b.f->p) throw Error("field characteristic mismatch");
    FieldTower& tower = *a.f->tower;
    const Field* c = tower.compositum(a.f, b.f);
    a = tower.embed(a, c);
    b = tower.embed(b, c);
}

// ---------------------------------------------------------------------------
// UPoly

UPoly up_zero(const Field* f) { return UPoly{f, {}}; }

static void up_trim(UPoly& a) {
    while (!a.c.empty() && a.c.back().is_zero()) a.c.pop_back();
}

UPoly up_from(const Field* f, std::vector<FieldElem> coeffs) {
    UPoly r{f, std::move(coeffs)};
    up_trim(r);
    return r;
}

UPoly up_from_ints(const Field* f, const std::vector<int64_t>& coeffs) {
    UPoly r{f, {}};
    for (int64_t v : coeffs) r.c.push_back(fe_make(f, v));
    up_trim(r);
    return r;
}

UPoly up_x(const Field* f) { return up_from(f, {fe_zero(f), fe_one(f)}); }

UPoly operator+(const UPoly& a, const UPoly& b) {
    UPoly r{a.f, {}};
    r.c.resize(std::max(a.c.size(), b.c.size()), fe_zero(a.f));
    for (size_t i = 0; i < a.c.size(); ++i) r.c[i] = a.c[i];
    for (size_t i = 0; i < b.c.size(); ++i) r.c[i] = r.c[i] + b.c[i];
    up_trim(r);
    return r;
}

UPoly operator-(const UPoly& a, const UPoly& b) {
    UPoly r{a.f, {}};
    r.c.resize(std::max(a.c.size(), b.c.size()), fe_zero(a.f));
    for (size_t i = 0; i < a.c.size(); ++i) r.c[i] = a.c[i];
    for (size_t i = 0; i < b.c.size(); ++i) r.c[i] = r.c[i] - b.c[i];
    up_trim(r);
    return r;
}

UPoly operator*(const UPoly& a, const UPoly& b) {
    if (a.is_zero() || b.is_zero()) return up_zero(a.f);
    UPoly r{a.f, std::vector<FieldElem>(a.c.size() + b.c.size() - 1, fe_zero(a.f))};
    for (size_t i = 0; i < a.c.size(); ++i) {
        if (a.c[i].is_zero()) continue;
        for (size_t j = 0; j < b.c.size(); ++j) r.c[i + j] = r.c[i + j] + a.c[i] * b.c[j];
    }
    up_trim(r);
    return r;
}

UPoly up_scale(const UPoly& a, const FieldElem& s) {
    UPoly r = a;
    for (auto& x : r.c) x = x * s;
    up_trim(r);
    return r;
}

UPoly up_monic(const UPoly& a) {
    if (a.is_zero()) return a;
    return up_scale(a, field_inverse(a.lead()));
}

UPoly up_derivative(const UPoly& a) {
    UPoly r{a.f, {}};
    for (size_t i = 1; i < a.c.size(); ++i) r.c.push_back(fe_make(a.f, static_cast<int64_t>(i)) * a.c[i]);
    up_trim(r);
    return r;
}

std::pair<UPoly, UPoly> up_divmod(const UPoly& a, const UPoly& b) {
    if (b.is_zero()) throw ZeroPolynomial();
    UPoly q{a.f, {}}, r = a;
    int db = b.degree();
    FieldElem lcinv = field_inverse(b.lead());
    if (r.degree() >= db) q.c.resize(r.degree() - db + 1, fe_zero(a.f));
    while (r.degree() >= db) {
        int d = r.degree();
        FieldElem qc = r.lead() * lcinv;
        q.c[d - db] = qc;
        for (int j = 0; j <= db; ++j) r.c[d - db + j] = r.c[d - db + j] - qc * b.c[j];
        up_trim(r);
    }
    up_trim(q);
    return {q, r};
}

UPoly up_mod(const UPoly& a, const UPoly& b) { return up_divmod(a, b).second; }

UPoly up_gcd(const UPoly& a, const UPoly& b) {
    UPoly x = a, y = b;
    while (!y.is_zero()) {
        UPoly r = up_mod(x, y);
        x = y;
        y = r;
    }
    return up_monic(x);
}

UPoly up_powmod(const UPoly& a, uint64_t e, const UPoly& m) {
    UPoly base = up_mod(a, m);
    UPoly r = up_from(a.f, {fe_one(a.f)});
    while (e) {
        if (e & 1) r = up_mod(r * base, m);
        base = up_mod(base * base, m);
        e >>= 1;
    }
    return r;
}

FieldElem up_eval(const UPoly& a, const FieldElem& x) {
    FieldElem r = fe_zero(x.f);
    for (int i = a.degree(); i >= 0; --i) {
        FieldElem c = a.c[i];
        if (c.f != x.f) c = x.f->tower->embed(c, x.f);
        r = r * x + c;
    }
    return r;
}

UPoly up_lift(const UPoly& a, const Field* to) {
    UPoly r{to, {}};
    for (const auto& c : a.c) r.c.push_back(to->tower->embed(c, to));
    up_trim(r);
    return r;
}

std::string up_to_string(const UPoly& a, const std::string& var) {
    if (a.is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (int i = a.degree(); i >= 0; --i) {
        if (a.c[i].is_zero()) continue;
        if (!first) os << " + ";
        first = false;
        std::string cs = fe_to_string(a.c[i]);
        bool needs_paren = cs.find('+') != std::string::npos;
        if (i == 0) {
            os << (needs_paren ? "(" + cs + ")" : cs);
        } else {
            if (!a.c[i].is_one()) os << (needs_paren ? "(" + cs + ")" : cs) << "*";
            os << var;
            if (i > 1) os << "^" << i;
        }
    }
    return os.str();
}

// ---------------------------------------------------------------------------
// root finding

namespace {

constexpr uint64_t kExhaustiveLimit = 14641;  // 11^4

// roots of a squarefree product of linear factors, via equal-degree splitting
void cz_linear_roots(const UPoly& g, std::vector<FieldElem>& out, uint64_t& salt) {
    if (g.degree() <= 0) return;
    if (g.degree() == 1) {
        out.push_back(-(g.c[0] / g.c[1]));
        return;
    }
    const Field* f = g.f;
    uint64_t q = f->size;  // odd (p = 2 is always below the exhaustive limit)
    UPoly gm = up_monic(g);
    while (true) {
        FieldElem alpha = fe_from_value(f, salt % q);
        ++salt;
        UPoly shift = up_from(f, {alpha, fe_one(f)});  // X + alpha
        UPoly h = up_powmod(shift, (q - 1) / 2, gm);
        h = h - up_from(f, {fe_one(f)});
        UPoly d = up_gcd(h, gm);
        if (d.degree() > 0 && d.degree() < gm.degree()) {
            cz_linear_roots(d, out, salt);
            cz_linear_roots(up_divmod(gm, d).first, out, salt);
            return;
        }
    }
}

}  // namespace

std::vector<FieldElem> univariate_roots(const UPoly& f) {
    if (f.is_zero()) throw ZeroPolynomial();
    std::vector<FieldElem> roots;
    if (f.degree() == 0) return roots;
    const Field* L = f.f;
    if (L->size <= kExhaustiveLimit) {
        for (uint64_t v = 0; v < L->size; ++v) {
            FieldElem x = fe_from_value(L, v);
            if (up_eval(f, x).is_zero()) roots.push_back(x);
        }
    } else {
        // product of the distinct linear factors: gcd(f, X^q - X)
        UPoly xq = up_powmod(up_x(L), L->size, f);
        UPoly g = up_gcd(xq - up_x(L), f);
        uint64_t salt = 1;
        cz_linear_roots(g, roots, salt);
    }
    std::sort(roots.begin(), roots.end());
    return roots;
}

std::vector<int> up_factor_degrees(const UPoly& f0) {
    if (f0.is_zero()) throw ZeroPolynomial();
    const Field* L = f0.f;
    std::vector<int> degs;
    UPoly f = up_monic(f0);
    // peel off repeated factors: deg counts include multiplicity
    while (f.degree() > 0) {
        // squarefree part of f
        UPoly fp = up_derivative(f);
        UPoly sq;
        if (fp.is_zero()) {
            // f = g(X^p): take p-th root of coefficients
            UPoly g{L, {}};
            for (int i = 0; i <= f.degree(); i += static_cast<int>(L->p))
                g.c.push_back(fe_pow(f.c[i], L->size / L->p));
            up_trim(g);
            f = g;
            continue;
        }
        sq = up_divmod(f, up_gcd(f, fp)).first;
        // distinct-degree factorization of sq
        UPoly rest = sq;
        UPoly xq = up_x(L);
        for (int d = 1; rest.degree() > 0 && d <= rest.degree(); ++d) {
            xq = up_powmod(xq, L->size, rest);
            UPoly g = up_gcd(xq - up_mod(up_x(L), rest), rest);
            if (g.degree() > 0) {
                for (int i = 0; i < g.degree() / d; ++i) degs.push_back(d);
                rest = up_divmod(rest, g).first;
                xq = up_mod(xq, rest);
            }
            if (2 * (d + 1) > rest.degree() && rest.degree() > 0) {
                degs.push_back(rest.degree());
                rest = up_from(L, {fe_one(L)});
            }
        }
        f = up_divmod(f, sq).first;
    }
    std::sort(degs.begin(), degs.end());
    return degs;
}

std::pair<const Field*, std::vector<FieldElem>> splitting_field(const UPoly& f) {
    if (f.is_zero() || f.degree() < 1) throw ZeroPolynomial();
    const Field* L = f.f;
    auto degs = up_factor_degrees(f);
    uint64_t m = 1;
    for (int d : degs) m = std::lcm<uint64_t>(m, static_cast<uint64_t>(d));
    uint64_t total = static_cast<uint64_t>(L->k) * m;
    if (total > kDegreeCap)
        throw DegreeCapExceeded("splitting field needs degree " + std::to_string(total) +
                                " over F_" + std::to_string(L->p));
    const Field* Lp = L->tower->field(static_cast<uint32_t>(total));
    UPoly lifted = up_lift(f, Lp);
    auto roots = univariate_roots(lifted);
    return {Lp, roots};
}

}  // namespace ssp4
