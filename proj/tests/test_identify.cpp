#include "identgb/builtin.hpp"
#include "identgb/identify.hpp"

#include <doctest.h>

using namespace identgb;

namespace {

std::map<std::string, Verdict> verdicts_of(const std::string& model, IdentConfig cfg) {
    Model m = builtin_model(model);
    IdentReport rep = identify(m, cfg);
    REQUIRE(rep.complete);
    return rep.verdicts;
}

} // namespace

TEST_CASE("worked single-state example: a and x global, c local") {
    IdentConfig cfg;
    cfg.overrides = {{"a", 119791}, {"x", 139697}, {"c", 75091}};
    auto v = verdicts_of("ex_sian", cfg);
    CHECK(v.at("a") == Verdict::global);
    CHECK(v.at("x") == Verdict::global);
    CHECK(v.at("c") == Verdict::local);
}

TEST_CASE("two-state linear model: only a locally identifiable among parameters") {
    IdentConfig cfg;
    auto v = verdicts_of("ex_intro", cfg);
    CHECK(v.at("a") != Verdict::none);
    CHECK(v.at("b") == Verdict::none);
    CHECK(v.at("c") == Verdict::none);
    CHECK(v.at("x1") == Verdict::global);
    CHECK(v.at("x2") == Verdict::none);
}

TEST_CASE("verdicts are invariant across orderings and seeds on tiny models") {
    for (const char* name : {"ex_sian", "ex_intro", "chemical"}) {
        std::vector<IdentConfig> cfgs(4);
        cfgs[0].scheme = WeightScheme::identity;
        cfgs[1].scheme = WeightScheme::standard;
        cfgs[1].strategy = Strategy::substitute;
        cfgs[2].scheme = WeightScheme::standard;
        cfgs[2].strategy = Strategy::native;
        cfgs[3].scheme = WeightScheme::inverted;
        std::map<std::string, Verdict> reference;
        for (std::size_t i = 0; i < cfgs.size(); ++i) {
            for (std::uint64_t seed : {0ull, 42ull}) {
                IdentConfig cfg = cfgs[i];
                cfg.seed = seed;
                auto v = verdicts_of(name, cfg);
                if (reference.empty())
                    reference = v;
                else
                    CHECK(v == reference);
            }
        }
    }
}

TEST_CASE("globally identifiable symbols are locally identifiable") {
    IdentConfig cfg;
    for (const char* name : {"ex_sian", "ex_intro", "chemical"}) {
        Model m = builtin_model(name);
        IdentReport rep = identify(m, cfg);
        for (const auto& [sym, v] : rep.verdicts)
            if (v == Verdict::global) CHECK(v != Verdict::none);
    }
}

TEST_CASE("buchberger engine agrees with f4 verdicts") {
    IdentConfig f4_cfg;
    IdentConfig oracle_cfg;
    oracle_cfg.use_buchberger = true;
    auto a = verdicts_of("chemical", f4_cfg);
    auto b = verdicts_of("chemical", oracle_cfg);
    CHECK(a == b);
}

TEST_CASE("report carries config echo and counters") {
    Model m = builtin_model("ex_sian");
    IdentConfig cfg;
    cfg.scheme = WeightScheme::standard;
    IdentReport rep = identify(m, cfg);
    CHECK(rep.model == "ex_sian");
    CHECK(rep.prime == 11863279);
    CHECK(rep.ordering == "weighted");
    CHECK(rep.num_polys > 0);
    CHECK(rep.num_vars > 0);
    CHECK(rep.timings_ms.count("groebner") == 1);
    std::string json = report_to_json(rep);
    CHECK(json.find("\"verdicts\"") != std::string::npos);
    CHECK(json.find("\"max_pairs_selected\"") != std::string::npos);
}

TEST_CASE("a zero timeout yields a partial report flagged incomplete") {
    Model m = builtin_model("ex_intro");
    IdentConfig cfg;
    cfg.timeout_sec = 0;
    IdentReport rep = identify(m, cfg);
    CHECK(!rep.complete);
    CHECK(rep.incomplete_stage == "groebner");
    // local information is still present
    CHECK(rep.verdicts.at("a") == Verdict::local);
}
