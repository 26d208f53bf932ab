#ifndef IDENTGB_IDENTIFY_HPP
#define IDENTGB_IDENTIFY_HPP

#include "identgb/sysgen.hpp"

#include <map>
#include <optional>
#include <string>

namespace identgb {

enum class Strategy { substitute, native };
enum class Verdict { global, local, none };

const char* to_string(Strategy s);
const char* to_string(Verdict v);

struct IdentConfig {
    std::uint32_t prime = 11863279;
    std::uint64_t seed = 0;
    WeightScheme scheme = WeightScheme::identity;
    Strategy strategy = Strategy::substitute;
    bool legacy_ordering = false; ///< plain degrevlex over the construction order
    std::optional<std::uint32_t> prolongation; ///< uniform bound; unset = rank-based
    double timeout_sec = 1800;
    bool use_buchberger = false;
    std::uint32_t zaux_weight = 1;
    std::map<std::string, std::uint64_t> overrides;
};

struct IdentReport {
    std::string model;
    std::uint32_t prime = 0;
    std::uint64_t seed = 0;
    std::string ordering; ///< sian-legacy | diff-degrevlex | weighted | weighted-native | inverted
    WeightScheme scheme = WeightScheme::identity;
    Strategy strategy = Strategy::substitute;
    std::map<std::string, std::uint32_t> weights;
    std::map<std::string, Verdict> verdicts; ///< per parameter and state initial value
    F4Stats stats;
    std::map<std::string, double> timings_ms;
    bool complete = true;
    std::string incomplete_stage;
    std::size_t num_polys = 0;
    std::size_t num_vars = 0;
    std::vector<std::uint32_t> bounds;

    double total_ms() const;
    double gb_ms() const;
};

std::string ordering_label(WeightScheme scheme, Strategy strategy, bool legacy);

/// Full pipeline: levels -> weights -> bounds -> prolong -> sample ->
/// output values -> specialize -> (substitute | native ordering) ->
/// Groebner basis -> verdicts. A Groebner timeout yields a partial report
/// with local verdicts only, flagged incomplete.
IdentReport identify(const Model& m, const IdentConfig& cfg);

/// Global-identifiability test against a reduced basis: a queried variable
/// with substitution exponent w is globally identifiable iff the normal
/// form of v^w is a constant (for w = 1 this is the plain reduction test).
std::map<SymId, bool> global_verdicts(GBEngine& engine, const GroebnerBasis& basis, const SpecializedSystem& sys,
                                      const std::vector<std::uint32_t>& subst_weights,
                                      const std::vector<SymId>& query);

std::string report_to_json(const IdentReport& r);
std::string report_to_text(const IdentReport& r);

} // namespace identgb

#endif
