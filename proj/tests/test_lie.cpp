#include "identgb/builtin.hpp"
#include "identgb/lie.hpp"

#include <doctest.h>

#include <random>

using namespace identgb;

namespace {

RationalExpr expr(const Model& m, const std::string& text) { return parse_expression(text, m.table, true); }

} // namespace

TEST_CASE("first Lie derivative of the observed state") {
    Model m = builtin_model("ex_intro");
    RationalExpr h = RationalExpr::variable(m.table.id_of("x1"));
    CHECK(lie_derivative(h, m) == expr(m, "a*x1 + b*x2"));
    CHECK(lie_derivative(RationalExpr::constant(Rat(5)), m).is_zero());
}

TEST_CASE("second Lie derivative uses the chain rule through both states") {
    Model m = builtin_model("ex_intro");
    RationalExpr h = RationalExpr::variable(m.table.id_of("x1"));
    RationalExpr l2 = lie_derivative(lie_derivative(h, m), m);
    CHECK(l2 == expr(m, "a*(a*x1+b*x2) + b*c*x1"));
}

TEST_CASE("lie_iterate returns the full chain") {
    Model m = builtin_model("ex_intro");
    auto chain = lie_iterate(0, 2, m);
    REQUIRE(chain.size() == 3);
    CHECK(chain[0] == expr(m, "x1"));
    CHECK(chain[1] == expr(m, "a*x1 + b*x2"));
    CHECK(chain[2] == expr(m, "a^2*x1 + a*b*x2 + b*c*x1"));

    auto only_g = lie_iterate(0, 0, m);
    REQUIRE(only_g.size() == 1);
    CHECK(only_g[0] == expr(m, "x1"));

    CHECK_THROWS_AS(lie_iterate(3, 1, m), parse_error);
}

TEST_CASE("goodwin first derivative keeps its rational part") {
    Model m = builtin_model("goodwin");
    auto chain = lie_iterate(0, 1, m);
    CHECK(chain[1] == expr(m, "-b*x1 + 1/(c + x4)"));
}

TEST_CASE("lie derivative is linear and Leibniz") {
    Model m = builtin_model("chemical");
    std::mt19937_64 rng(42);
    auto rand_expr = [&](int depth) {
        RationalExpr e = RationalExpr::constant(Rat(static_cast<long>(rng() % 7) - 3));
        std::vector<SymId> syms;
        for (SymId s : m.states) syms.push_back(s);
        for (SymId p : m.params) syms.push_back(p);
        for (int i = 0; i < depth; ++i) {
            RationalExpr v = RationalExpr::variable(syms[rng() % syms.size()]);
            switch (rng() % 3) {
                case 0: e = e + v; break;
                case 1: e = e * v; break;
                default: e = e - v * v; break;
            }
        }
        return e;
    };
    for (int trial = 0; trial < 20; ++trial) {
        RationalExpr h1 = rand_expr(3);
        RationalExpr h2 = rand_expr(3);
        Rat alpha(static_cast<long>(rng() % 5) + 1), beta(-static_cast<long>(rng() % 5) - 2);
        RationalExpr lin = lie_derivative(RationalExpr::constant(alpha) * h1 + RationalExpr::constant(beta) * h2, m);
        CHECK(lin == RationalExpr::constant(alpha) * lie_derivative(h1, m) +
                         RationalExpr::constant(beta) * lie_derivative(h2, m));
        RationalExpr prod = lie_derivative(h1 * h2, m);
        CHECK(prod == lie_derivative(h1, m) * h2 + h1 * lie_derivative(h2, m));
    }
}

TEST_CASE("total derivative bumps jets and kills parameters") {
    Model m = builtin_model("ex_sian");
    const SymbolTable& tab = m.table;
    SymId x = tab.id_of("x");
    SymId a = tab.id_of("a");
    SymId x1 = tab.jet(x, 1);
    SymId x2 = tab.jet(x, 2);

    QPoly e = QPoly::variable(x1) - QPoly::variable(a) * QPoly::variable(x); // x' - a x
    QPoly de = total_derivative(e, tab);
    CHECK(de == QPoly::variable(x2) - QPoly::variable(a) * QPoly::variable(x1));

    CHECK(total_derivative(QPoly::constant(3), tab).is_zero());
}

TEST_CASE("total derivative satisfies Leibniz on random jet polynomials") {
    Model m = builtin_model("ex_intro");
    const SymbolTable& tab = m.table;
    std::mt19937_64 rng(7);
    std::vector<SymId> syms = {tab.id_of("x1"), tab.id_of("x2"), tab.jet(tab.id_of("x1"), 1), tab.id_of("a")};
    auto rand_poly = [&]() {
        QPoly p = QPoly::constant(Rat(static_cast<long>(rng() % 5) - 2));
        for (int i = 0; i < 3; ++i) {
            QPoly v = QPoly::variable(syms[rng() % syms.size()]);
            p = (rng() % 2) ? p * v : p + v;
        }
        return p;
    };
    for (int trial = 0; trial < 25; ++trial) {
        QPoly p = rand_poly();
        QPoly q = rand_poly();
        CHECK(total_derivative(p + q, tab) == total_derivative(p, tab) + total_derivative(q, tab));
        CHECK(total_derivative(p * q, tab) ==
              total_derivative(p, tab) * q + p * total_derivative(q, tab));
    }
}

TEST_CASE("inputs differentiate through their jets") {
    Model m = parse_model("model mu\nstates x\nparams a\ninputs u\nx' = a*x + u\noutput y = x\n");
    RationalExpr h = RationalExpr::variable(m.table.id_of("x"));
    RationalExpr l1 = lie_derivative(h, m); // a x + u
    CHECK(l1 == expr(m, "a*x + u"));
    RationalExpr l2 = lie_derivative(l1, m); // a(ax+u) + u'
    CHECK(l2 == expr(m, "a*(a*x + u) + u'"));
}
