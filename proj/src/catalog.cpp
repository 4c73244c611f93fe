#include "ssp4/catalog.hpp"

#include <fstream>
#include <mutex>

#include "json.hpp"

namespace ssp4 {

const Field* catalog_field() { return FieldTower::global(11).field(1); }

namespace {

struct RawCurve {
    const char* id;
    QKind kind;
    const char* poly;
    int closure_class;
};

const RawCurve kF11[] = {
    {"N1:1", QKind::N1,
     "x^2*y + x^2*z + 2*y^2*z + 5*y^2*w + 9*y*z^2 + y*z*w + 4*z^3 + 3*z^2*w + 10*z*w^2 + w^3", 1},
    {"N1:2", QKind::N1, "x^2*y + x^2*z + y^3 + y^2*z + 7*y*z^2 + 4*y*w^2 + 2*z^3 + 9*z*w^2", 2},
    {"N1:3", QKind::N1,
     "x^2*y + x^2*z + y^3 + 8*y^2*z + 3*y*z^2 + 10*y*w^2 + 10*z^3 + 10*z*w^2", 3},
    {"N1:4", QKind::N1,
     "x^2*y + x^2*z + y^3 + 9*y^2*z + 2*y^2*w + 3*y*z^2 + 3*y*z*w + 4*y*w^2 + 10*z^3 + 2*z^2*w + "
     "6*z*w^2",
     2},
    {"N1:5", QKind::N1,
     "x^2*y + x^2*z + x*z^2 + 10*y^2*w + 9*y*z^2 + 9*y*w^2 + 8*z^3 + 8*z^2*w + 8*z*w^2 + 3*w^3",
     3},
    {"N1:6", QKind::N1,
     "x^2*y + x^2*z + x*z^2 + 9*y^2*z + 5*y^2*w + y*z*w + 8*y*w^2 + 3*z^3 + 9*z^2*w + 2*z*w^2 + "
     "5*w^3",
     1},
    {"N1:7", QKind::N1,
     "x^2*y + x^2*z + x*z^2 + 4*y^3 + 2*y^2*z + 10*y^2*w + 3*y*z^2 + 8*y*z*w + 8*y*w^2 + 8*z^3 + "
     "7*z^2*w + 7*z*w^2 + 4*w^3",
     1},
    {"N1:8", QKind::N1,
     "x^2*y + x^2*z + x*z^2 + 9*y^3 + 6*y^2*z + 5*y^2*w + 8*y*z^2 + 5*y*z*w + 2*y*w^2 + z^3 + "
     "2*z^2*w + 7*z*w^2 + w^3",
     3},
    {"N2:1", QKind::N2,
     "x^2*y + x^2*z + x*y^2 + 9*x*z^2 + 6*y^3 + y^2*z + 5*y^2*w + 3*y*z^2 + 9*y*w^2 + 8*z^3 + "
     "z^2*w + 9*z*w^2 + 6*w^3",
     1},
    {"N2:2", QKind::N2, "x^2*z + 5*y^3 + 4*z*w^2", 3},
    {"N2:3", QKind::N2, "x^2*y + x^2*z + 9*y^3 + 8*y^2*z + 2*y*z^2 + 4*y*w^2 + 9*z^3 + 4*z*w^2",
     1},
    {"N2:4", QKind::N2,
     "8*x^2*y + 2*x^2*z + y^3 + 8*y^2*z + 6*y^2*w + 9*y*z^2 + 2*y*z*w + 5*y*w^2 + 9*z^3 + z^2*w + "
     "4*z*w^2 + w^3",
     3},
    {"N2:5", QKind::N2,
     "6*x^2*y + 4*x^2*z + 6*x*y^2 + 10*x*z^2 + 10*y^3 + 4*y^2*z + 3*y^2*w + 8*y*z^2 + 6*y*z*w + "
     "9*y*w^2 + 10*z^3 + z^2*w + z*w^2 + 9*w^3",
     1},
    {"Dege:1", QKind::Dege, "x^3 + y^3 + w^3", 4},
    {"Dege:2", QKind::Dege, "x^3 + y^3 + 2*w^3", 4},
    {"Dege:3", QKind::Dege, "x^3 + y^3 + z^3 + 5*w^3", 5},
    {"Dege:4", QKind::Dege, "x^3 + x*w^2 + y^3", 6},
    {"Dege:5", QKind::Dege, "x^3 + 2*x*w^2 + y^3", 6},
    {"Dege:6", QKind::Dege, "x^3 + x*z*w + y^3 + 7*z^3 + w^3", 7},
    {"Dege:7", QKind::Dege, "x^3 + x*w^2 + x*y*z + y^3 + 5*z^3 + 4*w^3", 8},
    {"Dege:8", QKind::Dege, "x^3 + 6*x*w^2 + x*y*z + y^3 + 8*z^3 + 8*w^3", 9},
    {"Dege:9", QKind::Dege, "x^3 + 5*y^3 + 2*y*z^2 + z^3 + z*w^2 + 4*w^3", 4},
    {"Dege:10", QKind::Dege, "x^3 + y^3 + 8*y*z^2 + z^2*w + 2*w^3", 4},
    {"Dege:11", QKind::Dege, "x^3 + 2*y^3 + 2*y*z^2 + 4*z^3 + z^2*w + 3*w^3", 4},
    {"Dege:12", QKind::Dege, "x^3 + 2*y^3 + 4*y*z^2 + z^2*w + 10*w^3", 5},
    {"Dege:13", QKind::Dege, "x^3 + 2*y^3 + 4*y*z^2 + z^3 + z^2*w + z*w^2 + 7*w^3", 5},
    {"Dege:14", QKind::Dege,
     "x^3 + x*y^2 + 7*x*y*z + 8*x*z^2 + 8*x*z*w + 2*x*w^2 + 2*y^3 + 4*y*z^2 + z^3 + z^2*w + "
     "z*w^2 + 7*w^3",
     8},
    {"Dege:15", QKind::Dege, "x^3 + 5*y^3 + 3*y*z^2 + 5*z^3 + z^2*w + z*w^2 + 10*w^3", 4},
    {"Dege:16", QKind::Dege, "x^3 + 6*y^3 + 2*y*z^2 + 6*z^3 + z^2*w + z*w^2 + 6*w^3", 5},
    {"Dege:17", QKind::Dege, "x^3 + 10*y^3 + 6*y*z^2 + 7*z^3 + z^2*w + z*w^2", 5},
};

// closure-class representatives, chosen so that Aut_{F_11} is maximal
const RawCurve kClosure[] = {
    {"alc:1", QKind::N1,
     "x^2*y + x^2*z + x*z^2 + 4*y^3 + 2*y^2*z + 10*y^2*w + 3*y*z^2 + 8*y*z*w + 8*y*w^2 + 8*z^3 + "
     "7*z^2*w + 7*z*w^2 + 4*w^3",
     1},
    {"alc:2", QKind::N1, "x^2*y + x^2*z + y^3 + y^2*z + 7*y*z^2 + 4*y*w^2 + 2*z^3 + 9*z*w^2", 2},
    {"alc:3", QKind::N1,
     "x^2*y + x^2*z + x*z^2 + 9*y^3 + 6*y^2*z + 5*y^2*w + 8*y*z^2 + 5*y*z*w + 2*y*w^2 + z^3 + "
     "2*z^2*w + 7*z*w^2 + w^3",
     3},
    {"alc:4", QKind::Dege, "x^3 + y^3 + 8*y*z^2 + z^2*w + 2*w^3", 4},
    {"alc:5", QKind::Dege, "x^3 + 2*y^3 + 4*y*z^2 + z^2*w + 10*w^3", 5},
    {"alc:6", QKind::Dege, "x^3 + x*w^2 + y^3", 6},
    {"alc:7", QKind::Dege, "x^3 + x*z*w + y^3 + 7*z^3 + w^3", 7},
    {"alc:8", QKind::Dege, "x^3 + x*y*z + x*w^2 + y^3 + 5*z^3 + 4*w^3", 8},
    {"alc:9", QKind::Dege, "x^3 + x*y*z + 6*x*w^2 + y^3 + 8*z^3 + 8*w^3", 9},
};

std::vector<CurveRecord> build(const RawCurve* raw, size_t n, bool closure_rep) {
    const Field* f = catalog_field();
    std::vector<CurveRecord> out;
    for (size_t i = 0; i < n; ++i) {
        CurveRecord r;
        r.id = raw[i].id;
        r.kind = raw[i].kind;
        r.Q = make_quadratic_form(raw[i].kind, f);
        r.P = poly_parse(f, geometry_ring(), raw[i].poly);
        r.closure_class = raw[i].closure_class;
        r.is_closure_rep = closure_rep;
        out.push_back(std::move(r));
    }
    return out;
}

}  // namespace

const std::vector<CurveRecord>& catalog_f11() {
    static const std::vector<CurveRecord> v = build(kF11, std::size(kF11), false);
    return v;
}

const std::vector<CurveRecord>& catalog_closure() {
    static const std::vector<CurveRecord> v = build(kClosure, std::size(kClosure), true);
    return v;
}

const CurveRecord& catalog_find(const std::string& id) {
    for (const auto& r : catalog_f11())
        if (r.id == id) return r;
    for (const auto& r : catalog_closure())
        if (r.id == id) return r;
    throw ParseError("unknown curve id '" + id + "'");
}

std::vector<CurveRecord> load_catalog_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open curve file '" + path + "'");
    nlohmann::json doc;
    try {
        in >> doc;
    } catch (const std::exception& e) {
        throw ParseError("JSON parse failure in '" + path + "': " + e.what());
    }
    std::vector<nlohmann::json> items;
    if (doc.is_array())
        items.assign(doc.begin(), doc.end());
    else
        items.push_back(doc);
    const Field* f = catalog_field();
    std::vector<CurveRecord> out;
    int n = 0;
    for (const auto& item : items) {
        ++n;
        auto fail = [&](const std::string& msg) {
            throw ParseError("curve entry " + std::to_string(n) + ": " + msg);
        };
        if (!item.contains("kind")) fail("missing field 'kind'");
        CurveRecord r;
        r.kind = qkind_parse(item["kind"].get<std::string>());
        r.id = item.value("id", "user:" + std::to_string(n));
        FieldElem eps = fe_make(f, item.value("epsilon", 2));
        if (r.kind == QKind::N2) {
            // epsilon must be a non-square
            bool square = eps.is_zero();
            for (int v = 1; v < 11 && !square; ++v)
                if (fe_make(f, v) * fe_make(f, v) == eps) square = true;
            if (square) fail("epsilon must be a non-square of F_11");
        }
        r.Q = make_quadratic_form(r.kind, f, eps);
        if (!item.contains("P")) fail("missing field 'P'");
        if (item["P"].is_string()) {
            r.P = poly_parse(f, geometry_ring(), item["P"].get<std::string>());
        } else if (item["P"].is_array()) {
            Poly p(f, geometry_ring());
            for (const auto& term : item["P"]) {
                if (!term.contains("coef") || !term.contains("exps") || term["exps"].size() != 4)
                    fail("terms need 'coef' and 4-entry 'exps'");
                Mono m = mono_one();
                for (int v = 0; v < 4; ++v) m = mono_mul(m, mono_var(v, term["exps"][v].get<int>()));
                p.add_term(m, fe_make(f, term["coef"].get<int64_t>()));
            }
            p.normalize();
            r.P = p;
        } else {
            fail("'P' must be a string or an array of terms");
        }
        if (r.P.total_degree() != 3) fail("P must be a cubic form");
        for (const auto& t : r.P.terms())
            if (t.m.deg != 3) fail("P must be homogeneous of degree 3");
        out.push_back(std::move(r));
    }
    return out;
}

// ---------------------------------------------------------------------------
// published results

const std::vector<ExpectedEntry>& expected_f11() {
    static const std::vector<ExpectedEntry> v = {
        {"N1:1", 6, "C6"},       {"N1:2", 2, "C2"},      {"N1:3", 8, "D4"},
        {"N1:4", 2, "C2"},       {"N1:5", 3, "C3"},      {"N1:6", 4, "C2xC2"},
        {"N1:7", 12, "D6"},      {"N1:8", 24, "S4"},     {"N2:1", 12, "D6"},
        {"N2:2", 4, "C2xC2"},    {"N2:3", 4, "C2xC2"},   {"N2:4", 4, "C4"},
        {"N2:5", 6, "C6"},       {"Dege:1", 4, "C2xC2"}, {"Dege:2", 4, "C2xC2"},
        {"Dege:3", 4, "C2xC2"},  {"Dege:4", 2, "C2"},    {"Dege:5", 2, "C2"},
        {"Dege:6", 1, "1"},      {"Dege:7", 2, "C2"},    {"Dege:8", 1, "1"},
        {"Dege:9", 6, "C6"},     {"Dege:10", 12, "D6"},  {"Dege:11", 12, "D6"},
        {"Dege:12", 24, "S4"},   {"Dege:13", 4, "C4"},   {"Dege:14", 2, "C2"},
        {"Dege:15", 6, "C6"},    {"Dege:16", 3, "C3"},   {"Dege:17", 8, "D4"},
    };
    return v;
}

const std::vector<ExpectedEntry>& expected_closure() {
    static const std::vector<ExpectedEntry> v = {
        {"alc:1", 12, "D6"},    {"alc:2", 4, "C2xC2"}, {"alc:3", 24, "S4"},
        {"alc:4", 36, "D6xC3"}, {"alc:5", 72, "S4xC3"}, {"alc:6", 12, "C12"},
        {"alc:7", 3, "C3"},     {"alc:8", 12, "A4"},   {"alc:9", 3, "C3"},
    };
    return v;
}

const std::vector<GaloisExpectation>& expected_galois() {
    static const std::vector<GaloisExpectation> v = {
        {1, 6, {4, 4, 6, 6, 12, 12}}, {2, 2, {2, 2}},       {3, 5, {3, 4, 4, 8, 24}},
        {4, 6, {4, 4, 6, 6, 12, 12}}, {5, 5, {3, 4, 4, 8, 24}}, {6, 2, {2, 2}},
        {7, 1, {1}},                  {8, 2, {2, 2}},       {9, 1, {1}},
    };
    return v;
}

FieldElem catalog_zeta() {
    const Field* e = FieldTower::global(11).field(2);
    return fe_make(e, std::vector<uint32_t>{0, 1});
}

std::string zeta_string(const FieldElem& a) {
    if (a.f->k == 1) return std::to_string(a.c[0]);
    if (a.f->k != 2 || a.f->p != 11) return fe_to_string(a);
    if (a.is_zero()) return "0";
    static std::once_flag once;
    static std::map<uint64_t, int> dlog;
    std::call_once(once, [] {
        FieldElem z = catalog_zeta();
        FieldElem acc = fe_one(z.f);
        for (int e = 0; e < 120; ++e) {
            dlog[acc.value()] = e;
            acc = acc * z;
        }
    });
    auto it = dlog.find(a.value());
    if (it == dlog.end()) return fe_to_string(a);
    if (it->second == 0) return "1";
    return "z^" + std::to_string(it->second);
}

namespace {

// entry text: "0".."10" or "z^e" (e possibly negative, mod 120)
FieldElem parse_entry(const std::string& s) {
    if (!s.empty() && s[0] == 'z') {
        int e = std::stoi(s.substr(2));
        e = ((e % 120) + 120) % 120;
        return fe_pow(catalog_zeta(), static_cast<uint64_t>(e));
    }
    return fe_make(catalog_field(), std::stoll(s));
}

PrintedGen gen(const std::array<const char*, 16>& entries, int order) {
    bool ext = false;
    for (const auto* s : entries)
        if (s[0] == 'z') ext = true;
    const Field* f = ext ? FieldTower::global(11).field(2) : catalog_field();
    Mat4 m = mat_zero(f);
    for (int i = 0; i < 16; ++i) m.a[i] = f->tower->embed(parse_entry(entries[i]), f);
    return PrintedGen{m, order};
}

std::map<std::string, std::vector<PrintedGen>> build_printed() {
    std::map<std::string, std::vector<PrintedGen>> g;
    g["N1:1"] = {gen({"2", "4", "5", "1", "3", "6", "5", "1", "7", "7", "1", "10", "6", "6", "10",
                      "1"},
                     6)};
    g["N1:2"] = {gen({"10", "0", "0", "0", "0", "1", "0", "0", "0", "0", "1", "0", "0", "0", "0",
                      "10"},
                     2)};
    g["N1:3"] = {gen({"5", "6", "6", "6", "5", "6", "5", "5", "5", "5", "6", "5", "6", "6", "6",
                      "5"},
                     4),
                 gen({"10", "0", "0", "0", "0", "1", "0", "0", "0", "0", "1", "0", "0", "0", "0",
                      "10"},
                     2)};
    g["N1:4"] = {gen({"10", "6", "6", "3", "10", "1", "6", "6", "2", "10", "1", "6", "9", "2",
                      "10", "10"},
                     2)};
    g["N1:5"] = {gen({"5", "7", "3", "9", "8", "7", "7", "9", "10", "3", "0", "0", "6", "8", "0",
                      "0"},
                     3)};
    g["N1:6"] = {gen({"2", "3", "10", "7", "1", "9", "5", "10", "5", "2", "9", "3", "3", "5", "1",
                      "2"},
                     2),
                 gen({"1", "5", "6", "3", "0", "0", "1", "6", "0", "1", "0", "5", "0", "0", "0",
                      "1"},
                     2)};
    g["N1:7"] = {gen({"6", "3", "5", "3", "1", "6", "1", "5", "5", "3", "6", "3", "1", "5", "1",
                      "6"},
                     2),
                 gen({"0", "6", "0", "10", "0", "8", "0", "7", "1", "0", "2", "0", "6", "0", "3",
                      "0"},
                     6)};
    g["N1:8"] = {gen({"0", "0", "5", "2", "7", "6", "9", "8", "0", "0", "8", "9", "2", "6", "1",
                      "8"},
                     4),
                 gen({"9", "5", "2", "5", "1", "3", "3", "2", "8", "5", "3", "5", "4", "8", "1",
                      "9"},
                     2)};
    g["N2:1"] = {gen({"1", "6", "9", "5", "10", "8", "6", "6", "1", "8", "1", "1", "6", "10", "9",
                      "1"},
                     2),
                 gen({"1", "0", "8", "5", "10", "1", "3", "6", "1", "0", "7", "1", "6", "1", "2",
                      "1"},
                     6)};
    g["N2:2"] = {gen({"10", "0", "0", "0", "0", "1", "0", "0", "0", "0", "1", "0", "0", "0", "0",
                      "10"},
                     2),
                 gen({"0", "0", "0", "9", "0", "1", "0", "0", "0", "0", "1", "0", "5", "0", "0",
                      "0"},
                     2)};
    g["N2:3"] = g["N2:2"];
    g["N2:4"] = {gen({"10", "8", "5", "1", "7", "4", "7", "5", "5", "5", "3", "10", "5", "7", "0",
                      "5"},
                     4)};
    g["N2:5"] = {gen({"5", "2", "2", "2", "10", "7", "8", "8", "10", "2", "1", "2", "10", "1",
                      "6", "8"},
                     6)};
    g["Dege:1"] = {gen({"1", "0", "0", "0", "0", "1", "0", "0", "0", "0", "10", "0", "0", "0",
                        "0", "1"},
                       2),
                   gen({"1", "0", "0", "0", "0", "0", "0", "1", "0", "0", "1", "0", "0", "1", "0",
                        "0"},
                       2)};
    g["Dege:2"] = {gen({"1", "0", "0", "0", "0", "1", "0", "0", "0", "0", "10", "0", "0", "0",
                        "0", "1"},
                       2),
                   gen({"1", "0", "0", "0", "0", "0", "0", "7", "0", "0", "1", "0", "0", "8", "0",
                        "0"},
                       2)};
    g["Dege:3"] = {gen({"1", "0", "0", "0", "0", "0", "0", "3", "0", "0", "1", "0", "0", "4", "0",
                        "0"},
                       2),
                   gen({"1", "0", "0", "0", "0", "7", "4", "2", "0", "5", "7", "4", "0", "10",
                        "5", "7"},
                       2)};
    g["Dege:4"] = {gen({"1", "0", "0", "0", "0", "1", "0", "0", "0", "0", "10", "0", "0", "0",
                        "0", "1"},
                       2)};
    g["Dege:5"] = g["Dege:4"];
    g["Dege:6"] = {};
    g["Dege:7"] = {gen({"1", "0", "0", "0", "0", "7", "1", "7", "0", "9", "7", "1", "0", "6", "9",
                        "7"},
                       2)};
    g["Dege:8"] = {};
    g["Dege:9"] = {gen({"1", "0", "0", "0", "0", "6", "5", "8", "0", "3", "7", "3", "0", "2", "4",
                        "7"},
                       6)};
    g["Dege:10"] = {gen({"1", "0", "0", "0", "0", "2", "9", "10", "0", "6", "6", "9", "0", "2",
                         "6", "2"},
                        2),
                    gen({"1", "0", "0", "0", "0", "2", "2", "10", "0", "6", "5", "9", "0", "2",
                         "5", "2"},
                        6)};
    g["Dege:11"] = {gen({"1", "0", "0", "0", "0", "7", "6", "10", "0", "8", "9", "6", "0", "8",
                         "8", "7"},
                        2),
                    gen({"1", "0", "0", "0", "0", "2", "1", "8", "0", "2", "0", "3", "0", "10",
                         "6", "7"},
                        6)};
    g["Dege:12"] = {gen({"1", "0", "0", "0", "0", "1", "9", "9", "0", "8", "5", "4", "0", "1",
                         "6", "4"},
                        4),
                    gen({"1", "0", "0", "0", "0", "0", "0", "3", "0", "0", "1", "0", "0", "4",
                         "0", "0"},
                        2)};
    g["Dege:13"] = {gen({"1", "0", "0", "0", "0", "9", "7", "4", "0", "1", "1", "0", "0", "3",
                         "0", "0"},
                        4)};
    g["Dege:14"] = {gen({"1", "0", "0", "0", "0", "1", "4", "3", "0", "10", "8", "4", "0", "5",
                         "10", "1"},
                        2)};
    g["Dege:15"] = {gen({"1", "0", "0", "0", "0", "8", "7", "10", "0", "5", "2", "3", "0", "6",
                         "10", "10"},
                        6)};
    g["Dege:16"] = {gen({"1", "0", "0", "0", "0", "1", "8", "1", "0", "8", "10", "0", "0", "1",
                         "0", "0"},
                        3)};
    g["Dege:17"] = {gen({"1", "0", "0", "0", "0", "3", "6", "5", "0", "2", "3", "9", "0", "3",
                         "3", "4"},
                        4),
                    gen({"1", "0", "0", "0", "0", "7", "2", "6", "0", "2", "9", "2", "0", "6",
                         "2", "7"},
                        2)};
    g["alc:1"] = g["N1:7"];
    g["alc:2"] = {gen({"10", "0", "0", "0", "0", "1", "0", "0", "0", "0", "1", "0", "0", "0", "0",
                       "10"},
                      2),
                  gen({"0", "0", "0", "z^-6", "0", "0", "7", "0", "0", "8", "0", "0", "z^6", "0",
                       "0", "0"},
                      2)};
    g["alc:3"] = g["N1:8"];
    g["alc:4"] = {gen({"1", "0", "0", "0", "0", "2", "2", "10", "0", "6", "5", "9", "0", "2", "5",
                       "2"},
                      6),
                  gen({"1", "0", "0", "0", "0", "z^80", "0", "0", "0", "0", "z^80", "0", "0", "0",
                       "0", "z^80"},
                      3),
                  gen({"1", "0", "0", "0", "0", "2", "9", "10", "0", "6", "6", "9", "0", "2", "6",
                       "2"},
                      2)};
    g["alc:5"] = {gen({"1", "0", "0", "0", "0", "5", "2", "4", "0", "8", "0", "9", "0", "9", "3",
                       "5"},
                      4),
                  gen({"1", "0", "0", "0", "0", "3", "9", "3", "0", "6", "6", "9", "0", "5", "6",
                       "3"},
                      2),
                  gen({"1", "0", "0", "0", "0", "z^80", "0", "0", "0", "0", "z^80", "0", "0", "0",
                       "0", "z^80"},
                      3)};
    g["alc:6"] = {gen({"1", "0", "0", "0", "0", "z^80", "0", "0", "0", "0", "z^70", "0", "0", "0",
                       "0", "10"},
                      12)};
    g["alc:7"] = {gen({"1", "0", "0", "0", "0", "1", "0", "0", "0", "0", "z^-40", "0", "0", "0",
                       "0", "z^40"},
                      3)};
    g["alc:8"] = {gen({"1", "0", "0", "0", "0", "z^4", "z^-40", "7", "0", "z^-8", "z^44", "1",
                       "0", "z^28", "z^32", "7"},
                      3),
                  gen({"1", "0", "0", "0", "0", "7", "z^40", "z^44", "0", "z^32", "7", "z^40",
                       "0", "z^28", "z^32", "7"},
                      2)};
    g["alc:9"] = {gen({"1", "0", "0", "0", "0", "z^40", "0", "0", "0", "0", "z^-40", "0", "0",
                       "0", "0", "1"},
                      3)};
    return g;
}

}  // namespace

const std::map<std::string, std::vector<PrintedGen>>& printed_generators() {
    static const std::map<std::string, std::vector<PrintedGen>> g = build_printed();
    return g;
}

Mat4 printed_alc8_stabilizer_generator() {
    return gen({"1", "0", "0", "0", "0", "7", "1", "7", "0", "9", "7", "1", "0", "6", "9", "7"}, 2)
        .m;
}

}  // namespace ssp4
