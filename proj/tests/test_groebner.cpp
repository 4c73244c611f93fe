#include "doctest.h"

#include <random>
#include <set>

#include "ssp4/groebner.hpp"

using namespace ssp4;

namespace {
const Field* F11() { return FieldTower::global(11).field(1); }
RingPtr xy() {
    static RingPtr r = make_ring({"x", "y"});
    return r;
}
RingPtr xyz() {
    static RingPtr r = make_ring({"x", "y", "z"});
    return r;
}

// exact brute-force oracle: rational points of a system by full scan
std::set<std::vector<uint64_t>> enumerate_variety(const std::vector<Poly>& F) {
    int n = F[0].ring()->nvars();
    const Field* f = F[0].field();
    std::set<std::vector<uint64_t>> out;
    std::vector<uint64_t> idx(n, 0);
    for (;;) {
        std::vector<FieldElem> pt;
        for (int i = 0; i < n; ++i) pt.push_back(fe_from_value(f, idx[i]));
        bool ok = true;
        for (const auto& g : F)
            if (!evaluate_full(g, pt).is_zero()) {
                ok = false;
                break;
            }
        if (ok) out.insert(idx);
        int v = 0;
        while (v < n) {
            if (++idx[v] < f->size) break;
            idx[v] = 0;
            ++v;
        }
        if (v == n) break;
    }
    return out;
}

std::set<std::vector<uint64_t>> points_as_values(const VarietySolution& s) {
    std::set<std::vector<uint64_t>> out;
    for (const auto& pt : s.points) {
        std::vector<uint64_t> v;
        for (const auto& c : pt) v.push_back(c.value());
        out.insert(v);
    }
    return out;
}
}  // namespace

TEST_CASE("reduced basis of an already-reduced set") {
    auto f1 = poly_parse(F11(), xy(), "x - 1");
    auto f2 = poly_parse(F11(), xy(), "y - 2");
    auto gb = reduced_groebner_basis({f1, f2}, lex_order());
    REQUIRE(gb.gens.size() == 2);
    CHECK(gb.gens[0] == poly_parse(F11(), xy(), "y + 9"));
    CHECK(gb.gens[1] == poly_parse(F11(), xy(), "x + 10"));
}

TEST_CASE("unit ideal from {xy - 1, x^2}") {
    auto f1 = poly_parse(F11(), xy(), "x*y - 1");
    auto f2 = poly_parse(F11(), xy(), "x^2");
    auto gb = reduced_groebner_basis({f1, f2}, lex_order());
    CHECK(gb.contains_one());
    CHECK(eliminate(gb, 1) == gb.gens);  // {1} survives every elimination
}

TEST_CASE("basis {x^2 - y, y^2 - 1} is already a lex basis") {
    auto f1 = poly_parse(F11(), xy(), "x^2 - y");
    auto f2 = poly_parse(F11(), xy(), "y^2 - 1");
    auto gb = reduced_groebner_basis({f1, f2}, lex_order());
    REQUIRE(gb.gens.size() == 2);
    CHECK(gb.gens[0] == poly_parse(F11(), xy(), "y^2 - 1"));
    CHECK(gb.gens[1] == poly_parse(F11(), xy(), "x^2 - y"));
    CHECK(is_zero_dimensional(gb));
    CHECK(quotient_dimension(gb) == 4);  // staircase {1, x, y, xy}
    SUBCASE("elimination") {
        auto e = eliminate(gb, 1);
        REQUIRE(e.size() == 1);
        CHECK(e[0] == poly_parse(F11(), xy(), "y^2 - 1"));
    }
    SUBCASE("rational variety has 2 points, closure variety has 4") {
        auto rat = solve_zero_dimensional({f1, f2}, F11(), true);
        CHECK(rat.points.size() == 2);  // y=1, x=+-1; y=-1 needs sqrt(-1), not in F_11
        auto clo = solve_zero_dimensional({f1, f2}, F11(), false);
        CHECK(clo.points.size() == 4);
        CHECK(clo.field->k == 2);
    }
}

TEST_CASE("basis uniqueness under generator permutation") {
    std::mt19937 rng(3);
    for (int trial = 0; trial < 10; ++trial) {
        std::vector<Poly> F;
        for (int i = 0; i < 3; ++i) {
            Poly p(F11(), xyz());
            for (int t = 0; t < 4; ++t) {
                Mono m = mono_one();
                for (int v = 0; v < 3; ++v) m = mono_mul(m, mono_var(v, rng() % 3));
                p.add_term(m, fe_make(F11(), rng() % 11));
            }
            p.normalize();
            if (!p.is_zero()) F.push_back(p);
        }
        if (F.empty()) continue;
        auto gb1 = reduced_groebner_basis(F, grevlex_order());
        std::reverse(F.begin(), F.end());
        auto gb2 = reduced_groebner_basis(F, grevlex_order());
        REQUIRE(gb1.gens.size() == gb2.gens.size());
        for (size_t i = 0; i < gb1.gens.size(); ++i) CHECK(gb1.gens[i] == gb2.gens[i]);
    }
}

TEST_CASE("is_zero_dimensional rejects the hyperbola") {
    auto gb = reduced_groebner_basis({poly_parse(F11(), xy(), "x*y - 1")}, lex_order());
    CHECK(!is_zero_dimensional(gb));
    CHECK_THROWS_AS(solve_zero_dimensional({poly_parse(F11(), xy(), "x*y - 1")}, F11(), true),
                    NotZeroDimensional);
}

TEST_CASE("solver examples") {
    SUBCASE("x^2+7x+2 over closure lands in F_121") {
        RingPtr rx = make_ring({"x"});
        auto f = poly_parse(F11(), rx, "x^2 + 7*x + 2");
        auto sol = solve_zero_dimensional({f}, F11(), false);
        CHECK(sol.points.size() == 2);
        CHECK(sol.field->k == 2);
        // and no rational points
        auto rat = solve_zero_dimensional({f}, F11(), true);
        CHECK(rat.points.empty());
    }
    SUBCASE("{x^2 - y, y - 4} rational gives {(2,4),(9,4)}") {
        auto f1 = poly_parse(F11(), xy(), "x^2 - y");
        auto f2 = poly_parse(F11(), xy(), "y - 4");
        auto sol = solve_zero_dimensional({f1, f2}, F11(), true);
        auto got = points_as_values(sol);
        CHECK(got == std::set<std::vector<uint64_t>>{{2, 4}, {9, 4}});
    }
    SUBCASE("triangular linear system") {
        RingPtr r3 = xyz();
        auto sol = solve_zero_dimensional({poly_parse(F11(), r3, "x - 1"),
                                           poly_parse(F11(), r3, "y - 2"),
                                           poly_parse(F11(), r3, "z - 3")},
                                          F11(), true);
        CHECK(points_as_values(sol) == std::set<std::vector<uint64_t>>{{1, 2, 3}});
    }
    SUBCASE("unit ideal gives the empty variety") {
        auto sol = solve_zero_dimensional({poly_parse(F11(), xy(), "1")}, F11(), false);
        CHECK(sol.points.empty());
    }
}

TEST_CASE("rational solver agrees with exhaustive enumeration on random systems") {
    // random zero-dimensional systems: one univariate-leading polynomial per
    // variable plus random noise
    std::mt19937 rng(2024);
    int checked = 0;
    for (int trial = 0; trial < 60; ++trial) {
        int n = 2 + static_cast<int>(rng() % 2);
        RingPtr r = n == 2 ? xy() : xyz();
        std::vector<Poly> F;
        for (int v = 0; v < n; ++v) {
            Poly p(F11(), r);
            int d = 1 + static_cast<int>(rng() % 2);
            p.add_term(mono_var(v, d), fe_one(F11()));
            for (int t = 0; t < 2; ++t) {
                Mono m = mono_one();
                for (int u = 0; u < n; ++u) m = mono_mul(m, mono_var(u, rng() % d));
                p.add_term(m, fe_make(F11(), rng() % 11));
            }
            p.normalize();
            F.push_back(p);
        }
        {  // extra random generator
            Poly p(F11(), r);
            for (int t = 0; t < 3; ++t) {
                Mono m = mono_one();
                for (int u = 0; u < n; ++u) m = mono_mul(m, mono_var(u, rng() % 2));
                p.add_term(m, fe_make(F11(), rng() % 11));
            }
            p.normalize();
            if (!p.is_zero()) F.push_back(p);
        }
        auto expect = enumerate_variety(F);
        auto sol = solve_zero_dimensional(F, F11(), true);
        CHECK(points_as_values(sol) == expect);
        ++checked;
    }
    CHECK(checked == 60);
}

TEST_CASE("step cap raises ResourceBudgetExceeded") {
    auto f1 = poly_parse(F11(), xyz(), "x^2*y + z^2 + x");
    auto f2 = poly_parse(F11(), xyz(), "y^2*z + x*y + 3");
    auto f3 = poly_parse(F11(), xyz(), "z^2*x + y + 5");
    BuchbergerOptions opts;
    opts.step_cap = 1;
    CHECK_THROWS_AS(reduced_groebner_basis({f1, f2, f3}, lex_order(), opts),
                    ResourceBudgetExceeded);
}

TEST_CASE("closure solver matches hand enumeration for mixed systems") {
    RingPtr r = xy();
    auto f1 = poly_parse(F11(), r, "x^2 + 7*x + 2");  // roots zeta, zeta^11
    auto f2 = poly_parse(F11(), r, "y^2 - 3");        // roots 5, 6
    auto sol = solve_zero_dimensional({f1, f2}, F11(), false);
    CHECK(sol.points.size() == 4);
    CHECK(sol.field->k == 2);
    const Field* e = sol.field;
    for (const auto& pt : sol.points) {
        CHECK((fe_pow(pt[0], 2) + fe_make(e, 7) * pt[0] + fe_make(e, 2)).is_zero());
        CHECK((fe_pow(pt[1], 2) - fe_make(e, 3)).is_zero());
    }
}
