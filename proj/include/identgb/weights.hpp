#ifndef IDENTGB_WEIGHTS_HPP
#define IDENTGB_WEIGHTS_HPP

#include "identgb/model.hpp"

#include <cstdint>
#include <map>
#include <optional>
#include <vector>

namespace identgb {

/// Minimal Lie-iteration index at which each state/parameter first occurs
/// in some output derivative.
struct LevelMap {
    std::map<SymId, std::uint32_t> levels; ///< only symbols that do appear
    std::vector<SymId> never_appears;      ///< states/params with no occurrence
    std::uint32_t max_level = 0;           ///< max over assigned levels
    std::uint32_t iterations_run = 0;

    std::optional<std::uint32_t> level_of(SymId s) const {
        auto it = levels.find(s);
        if (it == levels.end()) return std::nullopt;
        return it->second;
    }
};

/// Smallest i <= max_iter with the symbol occurring in L^i(y_j) for some j,
/// where occurrence means nonzero exponent in the normalized numerator or
/// denominator. Iteration stops early once no unseen state/parameter is
/// reachable through the dependency closure of the current derivatives
/// (nothing new can ever occur past that point).
LevelMap compute_levels(const Model& m, std::uint32_t max_iter);

/// Default iteration cap: #states + #params.
std::uint32_t default_level_cap(const Model& m);

enum class WeightScheme { identity, standard, inverted };

const char* to_string(WeightScheme s);

/// Per-symbol positive weights. Jets inherit the weight of their base
/// symbol; symbols without an entry weigh 1.
struct WeightMap {
    std::map<SymId, std::uint32_t> weights;
    WeightScheme scheme = WeightScheme::identity;
    LevelMap source_levels;
    std::uint32_t zaux_weight = 1; ///< weight for the denominator-clearing aux variable, 1..3

    std::uint32_t weight_of(SymId s, const SymbolTable& tab) const {
        auto it = weights.find(tab.base(s));
        return it == weights.end() ? 1 : it->second;
    }
    bool is_identity() const {
        for (const auto& [s, w] : weights)
            if (w != 1) return false;
        return true;
    }
};

/// Weight(x_i) = Level(x_i) + 1 for states; parameters get Level + 1 only
/// when their level attains the maximum over states and parameters jointly,
/// and 1 otherwise. Symbols that never appear weigh 1.
WeightMap assign_weights_standard(const LevelMap& l, const Model& m);

/// Inverted scheme: states get M - Level + 1 with M the maximal state
/// level; parameters stay at 1.
WeightMap assign_weights_inverted(const LevelMap& l, const Model& m);

/// All weights 1.
WeightMap identity_weights(const Model& m);

} // namespace identgb

#endif
