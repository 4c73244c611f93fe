#include "doctest.h"

#include <random>

#include "ssp4/mpoly.hpp"

using namespace ssp4;

namespace {
const Field* F11() { return FieldTower::global(11).field(1); }
RingPtr xyzw() {
    static RingPtr r = make_ring({"x", "y", "z", "w"});
    return r;
}
Poly pp(const std::string& s) { return poly_parse(F11(), xyzw(), s); }
}  // namespace

TEST_CASE("parse and print round trip") {
    Poly p = pp("2*x^2*y + 10*z*w^2 + 3");
    CHECK(p.nterms() == 3);
    CHECK(poly_parse(F11(), xyzw(), poly_to_string(p)) == p);
    CHECK(pp("x - x").is_zero());
    CHECK(pp("12*x") == pp("x"));
    CHECK_THROWS_AS(pp("x + q"), ParseError);
}

TEST_CASE("grevlex and lex leading terms") {
    // Q^(N1): lead under grevlex x>y>z>w is y*z
    Poly q = pp("2*x*w + 2*y*z");
    auto lt = poly_lead(q, grevlex_order());
    CHECK(lt.m == mono_mul(mono_var(1), mono_var(2)));
    auto lx = poly_lead(q, lex_order());
    CHECK(lx.m == mono_mul(mono_var(0), mono_var(3)));
    // grevlex and lex agree on univariate inputs
    Poly u = pp("x^3 + 5*x + 1");
    CHECK(poly_lead(u, grevlex_order()).m == poly_lead(u, lex_order()).m);
}

TEST_CASE("normal_form") {
    SUBCASE("substitution example: x^2 mod {x - y} is y^2") {
        CHECK(normal_form(pp("x^2"), {pp("x - y")}, lex_order()) == pp("y^2"));
    }
    SUBCASE("Q reduces itself to zero") {
        CHECK(normal_form(pp("2*x*w + 2*y*z"), {pp("2*x*w + 2*y*z")}, grevlex_order()).is_zero());
    }
    SUBCASE("x^3 against {x^2 - y, y^2 - 1} under lex is x*y") {
        auto g = std::vector<Poly>{pp("x^2 - y"), pp("y^2 - 1")};
        CHECK(normal_form(pp("x^3"), g, lex_order()) == pp("x*y"));
        // continue the chain: (x*y)^2 = x^2*y^2 -> y^3 -> y
        CHECK(normal_form(pp("x^2*y^2"), g, lex_order()) == pp("y"));
    }
    SUBCASE("idempotence on random inputs") {
        std::mt19937 rng(42);
        auto rand_poly = [&](int maxdeg, int terms) {
            Poly p(F11(), xyzw());
            for (int t = 0; t < terms; ++t) {
                Mono m = mono_one();
                for (int v = 0; v < 4; ++v) m = mono_mul(m, mono_var(v, rng() % (maxdeg + 1)));
                p.add_term(m, fe_make(F11(), rng() % 11));
            }
            p.normalize();
            return p;
        };
        for (int trial = 0; trial < 30; ++trial) {
            Poly f = rand_poly(2, 6);
            std::vector<Poly> G;
            for (int j = 0; j < 2; ++j) {
                Poly g = rand_poly(2, 3);
                if (!g.is_zero()) G.push_back(g);
            }
            if (G.empty()) continue;
            for (auto ord : {lex_order(), grevlex_order()}) {
                Poly r = normal_form(f, G, ord);
                CHECK(normal_form(r, G, ord) == r);
            }
        }
    }
}

TEST_CASE("apply_linear_substitution") {
    const Field* f = F11();
    auto ident = [&] {
        std::vector<FieldElem> g(16, fe_zero(f));
        for (int i = 0; i < 4; ++i) g[i * 4 + i] = fe_one(f);
        return g;
    };
    SUBCASE("identity") {
        Poly p = pp("x^2*y + 3*z*w^2");
        CHECK(apply_linear_substitution(p, ident()) == p);
    }
    SUBCASE("diag(2,1,1,1) scales x^3 by 8") {
        auto g = ident();
        g[0] = fe_make(f, 2);
        CHECK(apply_linear_substitution(pp("x^3"), g) == pp("8*x^3"));
    }
    SUBCASE("diag(-1,1,1,-1) fixes P2^(N1) exactly") {
        auto g = ident();
        g[0] = fe_make(f, -1);
        g[15] = fe_make(f, -1);
        Poly p2 = pp("x^2*y + x^2*z + y^3 + y^2*z + 7*y*z^2 + 4*y*w^2 + 2*z^3 + 9*z*w^2");
        CHECK(apply_linear_substitution(p2, g) == p2);
    }
    SUBCASE("composition law on random matrices and cubics") {
        std::mt19937 rng(9);
        auto rand_mat = [&] {
            std::vector<FieldElem> g(16);
            for (auto& e : g) e = fe_make(f, rng() % 11);
            return g;
        };
        auto mat_mul = [&](const std::vector<FieldElem>& a, const std::vector<FieldElem>& b) {
            std::vector<FieldElem> c(16, fe_zero(f));
            for (int i = 0; i < 4; ++i)
                for (int k = 0; k < 4; ++k)
                    for (int j = 0; j < 4; ++j)
                        c[i * 4 + j] = c[i * 4 + j] + a[i * 4 + k] * b[k * 4 + j];
            return c;
        };
        for (int trial = 0; trial < 20; ++trial) {
            auto g = rand_mat(), h = rand_mat();
            Poly p(F11(), xyzw());
            for (int t = 0; t < 5; ++t) {
                int i = rng() % 4, j = rng() % 4, k = rng() % 4;
                Mono m = mono_mul(mono_var(i), mono_mul(mono_var(j), mono_var(k)));
                p.add_term(m, fe_make(f, rng() % 11));
            }
            p.normalize();
            Poly lhs = apply_linear_substitution(apply_linear_substitution(p, g), h);
            Poly rhs = apply_linear_substitution(p, mat_mul(g, h));
            CHECK(lhs == rhs);
        }
    }
}

TEST_CASE("evaluate_partial") {
    const Field* f = F11();
    SUBCASE("basic") {
        Poly p = pp("x + y");
        Poly r = evaluate_partial(p, {{1, fe_make(f, 3)}});
        CHECK(r == pp("x + 3"));
    }
    SUBCASE("x^2 - y at y=4") {
        Poly r = evaluate_partial(pp("x^2 - y"), {{1, fe_make(f, 4)}});
        CHECK(r == pp("x^2 - 4"));
        // its univariate roots over F_11 are {2, 9}: brute check
        int count = 0;
        for (int v = 0; v < 11; ++v) {
            auto val = evaluate_full(r, {fe_make(f, v), fe_zero(f), fe_zero(f), fe_zero(f)});
            if (val.is_zero()) {
                ++count;
                CHECK((v == 2 || v == 9));
            }
        }
        CHECK(count == 2);
    }
    SUBCASE("ring homomorphism on random inputs") {
        std::mt19937 rng(17);
        for (int trial = 0; trial < 25; ++trial) {
            auto rand_poly = [&] {
                Poly p(F11(), xyzw());
                for (int t = 0; t < 5; ++t) {
                    Mono m = mono_one();
                    for (int v = 0; v < 4; ++v) m = mono_mul(m, mono_var(v, rng() % 3));
                    p.add_term(m, fe_make(f, rng() % 11));
                }
                p.normalize();
                return p;
            };
            Poly a = rand_poly(), b = rand_poly();
            std::map<int, FieldElem> bind{{0, fe_make(f, rng() % 11)}, {2, fe_make(f, rng() % 11)}};
            CHECK(evaluate_partial(a + b, bind) ==
                  evaluate_partial(a, bind) + evaluate_partial(b, bind));
            CHECK(evaluate_partial(a * b, bind) ==
                  evaluate_partial(a, bind) * evaluate_partial(b, bind));
        }
    }
}

TEST_CASE("coefficient field mixing lifts to the compositum") {
    const Field* e = FieldTower::global(11).field(2);
    Poly a = pp("x + 1");
    Poly b = poly_const(e, xyzw(), fe_make(e, std::vector<uint32_t>{0, 1}));  // zeta
    Poly s = a + b;
    CHECK(s.field() == e);
    CHECK(s.nterms() == 2);
}
