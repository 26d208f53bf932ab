#include "identgb/weights.hpp"

#include "identgb/lie.hpp"

#include <algorithm>
#include <set>

namespace identgb {

const char* to_string(WeightScheme s) {
    switch (s) {
        case WeightScheme::identity: return "identity";
        case WeightScheme::standard: return "standard";
        case WeightScheme::inverted: return "inverted";
    }
    return "?";
}

std::uint32_t default_level_cap(const Model& m) {
    return static_cast<std::uint32_t>(m.states.size() + m.params.size());
}

namespace {

/// States and parameters that can still occur in any future Lie derivative:
/// the closure of the current supports under "state -> symbols of its ODE".
std::set<SymId> reachable_symbols(const std::vector<RationalExpr>& current, const Model& m) {
    std::set<SymId> closure;
    std::vector<SymId> frontier;
    auto push = [&](SymId s) {
        if (closure.insert(s).second && m.is_state(s)) frontier.push_back(s);
    };
    for (const RationalExpr& e : current)
        for (SymId s : e.support()) push(s);
    while (!frontier.empty()) {
        SymId s = frontier.back();
        frontier.pop_back();
        for (SymId v : m.odes.at(s).support()) push(v);
    }
    return closure;
}

} // namespace

LevelMap compute_levels(const Model& m, std::uint32_t max_iter) {
    if (max_iter < 1) throw invariant_error("compute_levels requires max_iter >= 1");
    LevelMap lm;
    std::set<SymId> targets(m.states.begin(), m.states.end());
    targets.insert(m.params.begin(), m.params.end());

    std::vector<RationalExpr> current;
    current.reserve(m.outputs.size());
    for (const auto& [y, g] : m.outputs) current.push_back(g);

    auto record = [&](std::uint32_t level) {
        for (const RationalExpr& e : current)
            for (SymId s : e.support())
                if (targets.count(s) && !lm.levels.count(s)) lm.levels.emplace(s, level);
    };

    record(0);
    std::uint32_t i = 0;
    while (i < max_iter && lm.levels.size() < targets.size()) {
        std::set<SymId> reach = reachable_symbols(current, m);
        bool any_new_possible = false;
        for (SymId s : reach)
            if (targets.count(s) && !lm.levels.count(s)) any_new_possible = true;
        if (!any_new_possible) break;
        for (RationalExpr& e : current) e = lie_derivative(e, m);
        ++i;
        record(i);
    }
    lm.iterations_run = i;
    for (SymId s : targets)
        if (!lm.levels.count(s)) lm.never_appears.push_back(s);
    std::sort(lm.never_appears.begin(), lm.never_appears.end());
    lm.max_level = 0;
    for (const auto& [s, lvl] : lm.levels) lm.max_level = std::max(lm.max_level, lvl);
    return lm;
}

WeightMap assign_weights_standard(const LevelMap& l, const Model& m) {
    WeightMap wm;
    wm.scheme = WeightScheme::standard;
    wm.source_levels = l;
    for (SymId s : m.states) {
        auto lvl = l.level_of(s);
        wm.weights[s] = lvl ? *lvl + 1 : 1;
    }
    for (SymId p : m.params) {
        auto lvl = l.level_of(p);
        wm.weights[p] = (lvl && *lvl == l.max_level) ? *lvl + 1 : 1;
    }
    return wm;
}

WeightMap assign_weights_inverted(const LevelMap& l, const Model& m) {
    WeightMap wm;
    wm.scheme = WeightScheme::inverted;
    wm.source_levels = l;
    std::uint32_t state_max = 0;
    for (SymId s : m.states)
        if (auto lvl = l.level_of(s)) state_max = std::max(state_max, *lvl);
    for (SymId s : m.states) {
        auto lvl = l.level_of(s);
        wm.weights[s] = lvl ? state_max - *lvl + 1 : 1;
    }
    for (SymId p : m.params) wm.weights[p] = 1;
    return wm;
}

WeightMap identity_weights(const Model& m) {
    WeightMap wm;
    wm.scheme = WeightScheme::identity;
    for (SymId s : m.states) wm.weights[s] = 1;
    for (SymId p : m.params) wm.weights[p] = 1;
    return wm;
}

} // namespace identgb
