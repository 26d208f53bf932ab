#include "identgb/builtin.hpp"
#include "identgb/sysgen.hpp"
#include "identgb/weights.hpp"

#include <doctest.h>

#include <map>
#include <string>

using namespace identgb;

namespace {

std::map<std::string, std::uint32_t> level_names(const Model& m, const LevelMap& lm) {
    std::map<std::string, std::uint32_t> out;
    for (const auto& [s, lvl] : lm.levels) out[m.table.name(s)] = lvl;
    return out;
}

std::map<std::string, std::uint32_t> weight_names(const Model& m, const WeightMap& wm) {
    std::map<std::string, std::uint32_t> out;
    for (const auto& [s, w] : wm.weights) out[m.table.name(s)] = w;
    return out;
}

/// Independent level oracle: the level of a symbol is the first derivative
/// order whose output values change when only that symbol's sampled value
/// is perturbed. Uses the jet-prolongation evaluation path, which shares
/// no code with the closed-form Lie iteration.
std::map<std::string, std::uint32_t> perturbation_levels(const Model& m, std::uint32_t kmax) {
    std::vector<std::uint32_t> bounds(m.outputs.size(), kmax);
    ProlongedSystem ps = prolong(m, bounds);
    const std::uint32_t p = 2147483587; // large prime, avoids accidental collisions mod p

    auto values_for = [&](std::uint64_t seed) { return sample_point(m, seed, p, {}, ps.max_input_order); };
    Sample base = values_for(1);
    OutputValues base_vals = compute_output_values(ps, base);

    std::map<std::string, std::uint32_t> out;
    std::vector<SymId> targets;
    for (SymId s : m.states) targets.push_back(s);
    for (SymId q : m.params) targets.push_back(q);
    for (SymId t : targets) {
        Sample tweaked = base;
        tweaked.values[t] += Rat(982451653);
        OutputValues vals;
        bool evaluated = false;
        for (int shift = 0; shift < 4 && !evaluated; ++shift) {
            try {
                vals = compute_output_values(ps, tweaked);
                evaluated = true;
            } catch (const invariant_error&) {
                tweaked.values[t] += Rat(104729 + shift);
            }
        }
        REQUIRE(evaluated);
        for (std::uint32_t k = 0; k <= kmax; ++k) {
            bool differs = false;
            for (std::size_t j = 0; j < m.outputs.size(); ++j)
                if (vals.exact[j][k] != base_vals.exact[j][k]) differs = true;
            if (differs) {
                out[m.table.name(t)] = k;
                break;
            }
        }
    }
    return out;
}

} // namespace

TEST_CASE("levels of the two-state linear model") {
    Model m = builtin_model("ex_intro");
    LevelMap lm = compute_levels(m, default_level_cap(m));
    auto lv = level_names(m, lm);
    CHECK(lv == std::map<std::string, std::uint32_t>{{"x1", 0}, {"a", 1}, {"b", 1}, {"x2", 1}, {"c", 2}});
    CHECK(lm.max_level == 2);
    CHECK(lm.never_appears.empty());
}

TEST_CASE("single observed state gives a level-0-only map") {
    Model m = parse_model("model tiny\nstates x1\nx1' = 1\noutput y = x1\n");
    LevelMap lm = compute_levels(m, 1);
    CHECK(level_names(m, lm) == std::map<std::string, std::uint32_t>{{"x1", 0}});
    CHECK(lm.max_level == 0);
}

TEST_CASE("goodwin levels agree with the perturbation oracle") {
    Model m = builtin_model("goodwin");
    LevelMap lm = compute_levels(m, default_level_cap(m));
    auto lv = level_names(m, lm);
    std::map<std::string, std::uint32_t> expected{{"x1", 0}, {"b", 1}, {"c", 1},     {"x4", 1},
                                                  {"x2", 2}, {"x3", 2}, {"sigma", 2}, {"gamma", 2},
                                                  {"delta", 2}, {"alpha", 3}, {"beta", 3}};
    CHECK(lv == expected);
    CHECK(lm.max_level == 3);

    auto oracle = perturbation_levels(m, 4);
    CHECK(oracle == expected);
}

TEST_CASE("levels are stable when the cap grows") {
    for (const char* name : {"ex_intro", "chemical", "seirp"}) {
        Model m = builtin_model(name);
        LevelMap small = compute_levels(m, default_level_cap(m));
        LevelMap big = compute_levels(m, default_level_cap(m) + 7);
        CHECK(small.levels == big.levels);
        CHECK(small.never_appears == big.never_appears);
    }
}

TEST_CASE("standard weights on the worked examples") {
    Model m = builtin_model("ex_intro");
    WeightMap wm = assign_weights_standard(compute_levels(m, default_level_cap(m)), m);
    auto w = weight_names(m, wm);
    CHECK(w.at("x1") == 1);
    CHECK(w.at("x2") == 2);
    CHECK(w.at("a") == 1);
    CHECK(w.at("b") == 1);
    CHECK(w.at("c") == 3); // level 2 attains the maximum

    Model chem = builtin_model("chemical");
    auto wc = weight_names(chem, assign_weights_standard(compute_levels(chem, default_level_cap(chem)), chem));
    CHECK(wc == std::map<std::string, std::uint32_t>{{"x1", 1}, {"x2", 2}, {"a", 1}, {"b", 1}, {"c", 3}});
}

TEST_CASE("standard weights for goodwin match the reference column") {
    Model m = builtin_model("goodwin");
    auto w = weight_names(m, assign_weights_standard(compute_levels(m, default_level_cap(m)), m));
    CHECK(w.at("x2") == 3);
    CHECK(w.at("x3") == 3);
    CHECK(w.at("x4") == 2);
    CHECK(w.at("beta") == 4);
    CHECK(w.at("x1") == 1);
    CHECK(w.at("b") == 1);
    CHECK(w.at("c") == 1);
    CHECK(w.at("gamma") == 1);
    CHECK(w.at("delta") == 1);
    CHECK(w.at("sigma") == 1);
    // alpha shares the maximal level with beta, so the level rule also
    // raises it even though reference tables leave it out.
    CHECK(w.at("alpha") == 4);
}

TEST_CASE("seirp weights") {
    Model m = builtin_model("seirp");
    LevelMap lm = compute_levels(m, default_level_cap(m));
    auto w = weight_names(m, assign_weights_standard(lm, m));
    CHECK(w.at("E") == 2);
    CHECK(w.at("rho") == 3);
    for (const char* one : {"S", "I", "R", "P", "alpha_e", "alpha_i", "kappa", "beta", "mu"})
        CHECK(w.at(one) == 1);
    // R and P never appear in any output derivative
    REQUIRE(lm.never_appears.size() == 2);
    CHECK(m.table.name(lm.never_appears[0]) == "R");
    CHECK(m.table.name(lm.never_appears[1]) == "P");
}

TEST_CASE("inverted weights") {
    Model two = parse_model("model two\nstates x1, x2\nparams a\nx1' = a*x2\nx2' = x2\noutput y = x1\n");
    auto w = weight_names(two, assign_weights_inverted(compute_levels(two, 3), two));
    CHECK(w == std::map<std::string, std::uint32_t>{{"x1", 2}, {"x2", 1}, {"a", 1}});

    Model m = builtin_model("goodwin");
    auto wg = weight_names(m, assign_weights_inverted(compute_levels(m, default_level_cap(m)), m));
    CHECK(wg.at("x1") == 3);
    CHECK(wg.at("x4") == 2);
    CHECK(wg.at("x2") == 1);
    CHECK(wg.at("x3") == 1);
    for (const char* p : {"b", "c", "alpha", "beta", "gamma", "delta", "sigma"}) CHECK(wg.at(p) == 1);

    Model one = parse_model("model one\nstates x1\nx1' = x1\noutput y = x1\n");
    auto w1 = weight_names(one, assign_weights_inverted(compute_levels(one, 1), one));
    CHECK(w1 == std::map<std::string, std::uint32_t>{{"x1", 1}});
}

TEST_CASE("all weights are at least one and only max-level parameters exceed one") {
    for (const std::string& name : builtin_model_names()) {
        Model m = builtin_model(name);
        LevelMap lm = compute_levels(m, default_level_cap(m));
        WeightMap wm = assign_weights_standard(lm, m);
        for (const auto& [s, w] : wm.weights) {
            CHECK(w >= 1);
            if (m.is_param(s) && w > 1) {
                REQUIRE(lm.level_of(s).has_value());
                CHECK(*lm.level_of(s) == lm.max_level);
            }
        }
        WeightMap inv = assign_weights_inverted(lm, m);
        for (const auto& [s, w] : inv.weights) {
            CHECK(w >= 1);
            if (m.is_param(s)) CHECK(w == 1);
        }
    }
}
