#include "identgb/groebner.hpp"

#include <doctest.h>

#include <memory>
#include <random>

using namespace identgb;

namespace {

std::vector<FpPoly> random_system(GBEngine& engine, MonomialPool& pool, std::mt19937_64& rng, std::size_t nvars,
                                  std::uint32_t p) {
    std::size_t npolys = 1 + rng() % 5;
    std::vector<FpPoly> sys;
    for (std::size_t i = 0; i < npolys; ++i) {
        std::size_t nterms = 1 + rng() % 5;
        std::vector<std::pair<MonoId, std::uint32_t>> terms;
        for (std::size_t t = 0; t < nterms; ++t) {
            std::vector<Exp> e(nvars, 0);
            std::uint32_t budget = rng() % 4; // total degree <= 3
            for (std::uint32_t d = 0; d < budget; ++d) e[rng() % nvars] += 1;
            terms.emplace_back(pool.intern(e), 1 + rng() % (p - 1));
        }
        FpPoly f = engine.normalize(std::move(terms));
        if (!f.is_zero()) sys.push_back(std::move(f));
    }
    if (sys.empty()) sys.push_back(engine.normalize({{pool.intern(std::vector<Exp>(nvars, 0)), 1u}}));
    return sys;
}

} // namespace

TEST_CASE("f4 matches the buchberger oracle on random systems") {
    std::mt19937_64 rng(20240917);
    int checked = 0;
    for (std::uint32_t p : {7u, 101u, 11863279u}) {
        for (int trial = 0; trial < 20; ++trial) {
            std::size_t nvars = 1 + rng() % 4;
            auto pool = std::make_shared<MonomialPool>(nvars);
            GBEngine engine(Fp(p), pool, make_degrevlex(nvars));
            auto sys = random_system(engine, *pool, rng, nvars, p);

            GroebnerBasis oracle = engine.buchberger(sys);
            auto [basis, stats] = engine.f4(sys);
            CHECK(basis.polynomials == oracle.polynomials);
            CHECK(engine.is_groebner_basis(basis.polynomials));
            CHECK(stats.max_pairs_selected <= stats.total_spolys + 1);
            ++checked;
        }
    }
    CHECK(checked == 60);
}

TEST_CASE("reduced bases are unique: reduce n-th time changes nothing") {
    std::mt19937_64 rng(7771);
    auto pool = std::make_shared<MonomialPool>(3);
    GBEngine engine(Fp(101), pool, make_degrevlex(3));
    for (int trial = 0; trial < 10; ++trial) {
        auto sys = random_system(engine, *pool, rng, 3, 101);
        auto [basis, stats] = engine.f4(sys);
        CHECK(engine.reduce_basis(basis.polynomials) == basis.polynomials);
    }
}

TEST_CASE("f4 under weighted orderings still agrees with the oracle") {
    std::mt19937_64 rng(5150);
    for (int trial = 0; trial < 12; ++trial) {
        std::size_t nvars = 2 + rng() % 3;
        std::vector<VarInfo> vars;
        for (std::size_t i = 0; i < nvars; ++i) {
            std::string n = "v" + std::to_string(i);
            vars.push_back(VarInfo{n, n, 0, false});
        }
        std::vector<std::uint64_t> w(nvars);
        for (auto& x : w) x = 1 + rng() % 3;
        auto pool = std::make_shared<MonomialPool>(nvars);
        GBEngine engine(Fp(101), pool, make_weighted(vars, w));
        auto sys = random_system(engine, *pool, rng, nvars, 101);
        GroebnerBasis oracle = engine.buchberger(sys);
        auto [basis, stats] = engine.f4(sys);
        CHECK(basis.polynomials == oracle.polynomials);
        CHECK(engine.is_groebner_basis(basis.polynomials));
    }
}
