#include "identgb/monomial.hpp"

#include <doctest.h>

#include <random>

using namespace identgb;

namespace {

std::vector<VarInfo> jet_universe_two_states() {
    // Two states with jets up to order 4, then parameters a, b, c.
    std::vector<VarInfo> vars;
    for (const char* base : {"x1", "x2"})
        for (std::uint32_t k = 0; k <= 4; ++k)
            vars.push_back(VarInfo{std::string(base) + (k ? "_" + std::to_string(k) : ""), base, k, false});
    for (const char* p : {"a", "b", "c"}) vars.push_back(VarInfo{p, p, 0, true});
    return vars;
}

MonoId make_mono(MonomialPool& pool, std::initializer_list<std::pair<std::size_t, Exp>> exps) {
    std::vector<Exp> e(pool.nvars(), 0);
    for (auto [i, x] : exps) e[i] = x;
    return pool.intern(e);
}

} // namespace

TEST_CASE("differential degrevlex ranks jets by order then reverse name, parameters last") {
    auto vars = jet_universe_two_states();
    MonomialOrdering ord = make_diff_degrevlex(vars);
    std::vector<std::string> expected = {"x2_4", "x1_4", "x2_3", "x1_3", "x2_2", "x1_2", "x2_1",
                                         "x1_1", "x2",   "x1",   "a",    "b",    "c"};
    REQUIRE(ord.rank.size() == expected.size());
    for (std::size_t i = 0; i < expected.size(); ++i) CHECK(vars[ord.rank[i]].name == expected[i]);
}

TEST_CASE("comparator examples") {
    auto vars = jet_universe_two_states();
    MonomialPool pool(vars.size());
    MonomialOrdering ord = make_diff_degrevlex(vars);

    // indices: x1 jets 0..4 -> 0..4, x2 jets -> 5..9, a,b,c -> 10..12
    MonoId x2_4 = make_mono(pool, {{9, 1}});
    MonoId x1_4 = make_mono(pool, {{4, 1}});
    MonoId x2_3 = make_mono(pool, {{8, 1}});
    CHECK(mono_compare(pool, ord, x2_4, x1_4) > 0);
    CHECK(mono_compare(pool, ord, x1_4, x2_3) > 0);
    CHECK(mono_compare(pool, ord, pool.one(), x1_4) < 0);

    // plain degrevlex with x > y: x^2 y > x y^2
    std::vector<VarInfo> xy = {{"x", "x", 0, false}, {"y", "y", 0, false}};
    MonomialPool pxy(2);
    MonomialOrdering oxy = make_degrevlex(2);
    MonoId x2y = make_mono(pxy, {{0, 2}, {1, 1}});
    MonoId xy2 = make_mono(pxy, {{0, 1}, {1, 2}});
    CHECK(mono_compare(pxy, oxy, x2y, xy2) > 0);
}

TEST_CASE("weighted comparison puts a weight-2 variable above its neighbors") {
    // x1..x8 all order 0; weight 2 on x8.
    std::vector<VarInfo> vars;
    for (int i = 1; i <= 8; ++i)
        vars.push_back(VarInfo{"x" + std::to_string(i), "x" + std::to_string(i), 0, false});
    std::vector<std::uint64_t> w(8, 1);
    w[7] = 2;
    MonomialPool pool(8);
    MonomialOrdering ord = make_weighted(vars, w);
    pool.set_weights(ord.weights);

    MonoId x8 = make_mono(pool, {{7, 1}});
    MonoId x7 = make_mono(pool, {{6, 1}});
    CHECK(mono_compare(pool, ord, x8, x7) > 0); // weighted degree 2 vs 1
    CHECK(mono_compare(pool, ord, pool.one(), x8) < 0);
}

TEST_CASE("identity weights reduce to the tiebreak order") {
    auto vars = jet_universe_two_states();
    auto pool_w = MonomialPool(vars.size());
    auto pool_d = MonomialPool(vars.size());
    MonomialOrdering wo = make_weighted(vars, std::vector<std::uint64_t>(vars.size(), 1));
    MonomialOrdering dd = make_diff_degrevlex(vars);
    pool_w.set_weights(wo.weights);

    std::mt19937_64 rng(99);
    for (int i = 0; i < 100; ++i) {
        std::vector<Exp> e1(vars.size()), e2(vars.size());
        for (std::size_t v = 0; v < vars.size(); ++v) {
            e1[v] = rng() % 3;
            e2[v] = rng() % 3;
        }
        MonoId a_w = pool_w.intern(e1), b_w = pool_w.intern(e2);
        MonoId a_d = pool_d.intern(e1), b_d = pool_d.intern(e2);
        CHECK(mono_compare(pool_w, wo, a_w, b_w) == mono_compare(pool_d, dd, a_d, b_d));
    }
}

TEST_CASE("ordering laws: totality, 1-minimality, multiplicativity") {
    auto vars = jet_universe_two_states();
    std::vector<std::uint64_t> weights(vars.size(), 1);
    weights[5] = 3; // x2
    weights[12] = 2;

    for (int kind = 0; kind < 3; ++kind) {
        MonomialPool pool(vars.size());
        MonomialOrdering ord = kind == 0   ? make_degrevlex(vars.size())
                               : kind == 1 ? make_diff_degrevlex(vars)
                                           : make_weighted(vars, weights);
        if (ord.kind == OrderKind::weighted) pool.set_weights(ord.weights);
        std::mt19937_64 rng(kind + 1);
        for (int i = 0; i < 2000; ++i) {
            std::vector<Exp> e1(vars.size()), e2(vars.size()), e3(vars.size());
            for (std::size_t v = 0; v < vars.size(); ++v) {
                e1[v] = rng() % 3;
                e2[v] = rng() % 3;
                e3[v] = rng() % 2;
            }
            MonoId m1 = pool.intern(e1), m2 = pool.intern(e2), m3 = pool.intern(e3);
            int c12 = mono_compare(pool, ord, m1, m2);
            CHECK(c12 == -mono_compare(pool, ord, m2, m1));
            CHECK((c12 == 0) == (m1 == m2));
            CHECK(mono_compare(pool, ord, pool.one(), m1) <= 0);
            // multiplicativity
            MonoId m13 = pool.mul(m1, m3);
            MonoId m23 = pool.mul(m2, m3);
            CHECK(mono_compare(pool, ord, m13, m23) == c12);
        }
    }
}
