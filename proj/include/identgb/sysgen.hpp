#ifndef IDENTGB_SYSGEN_HPP
#define IDENTGB_SYSGEN_HPP

#include "identgb/groebner.hpp"
#include "identgb/lie.hpp"
#include "identgb/model.hpp"
#include "identgb/weights.hpp"

#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

namespace identgb {

/// Jet polynomial system obtained by successive differentiation of the
/// cleared model equations. Equation groups, in order: per output j the
/// equations for y_j^(0..bound_j); the z_aux defining equations (only when
/// an output has a denominator); per state the equations defining
/// x_i^(1..order_i).
struct ProlongedSystem {
    Model model; ///< shares the symbol table the jets live in
    std::vector<QPoly> equations;
    std::vector<std::uint32_t> orders;            ///< per-output prolongation count
    std::map<SymId, std::uint32_t> state_orders;  ///< state -> highest jet order defined
    std::optional<SymId> zaux;                    ///< denominator-clearing aux variable
    QPoly zaux_product;                           ///< z_aux * zaux_product = 1
    std::uint32_t zaux_order = 0;                 ///< highest z_aux jet defined
    std::uint32_t max_input_order = 0;            ///< highest input jet appearing
};

ProlongedSystem prolong(const Model& m, const std::vector<std::uint32_t>& bounds);

/// Sampled point for states' initial values and parameters (plus input jet
/// values when the model has inputs). Deterministic in (seed, prime).
struct Sample {
    std::map<SymId, Rat> values;
    std::uint32_t prime = 0;
    std::uint64_t seed = 0;
    std::uint32_t retries_used = 0;
};

/// Uniform values in [1, 2^20], resampled (bounded retries) until every
/// model denominator is nonzero mod p. Overrides are accepted verbatim and
/// never resampled.
Sample sample_point(const Model& m, std::uint64_t seed, std::uint32_t prime,
                    const std::map<std::string, std::uint64_t>& overrides = {},
                    std::uint32_t max_input_order = 0);

/// Exact output-derivative values: yhat[j][k] solves the triangular jet
/// system over Q; residues are the mod-p reductions.
struct OutputValues {
    std::vector<std::vector<Rat>> exact;
    std::vector<std::vector<std::uint32_t>> residues;
};

OutputValues compute_output_values(const ProlongedSystem& ps, const Sample& s);

/// Polynomial system over F_p after substituting yhat (and input jet
/// values); states' jets and parameters remain symbolic.
struct SpecializedSystem {
    std::string model_name;
    std::uint32_t prime = 0;
    std::uint64_t seed = 0;
    std::vector<VarInfo> vars; ///< universe: state jets, z_aux jets, params
    std::vector<SymId> var_syms;
    std::map<SymId, std::uint32_t> var_index;
    std::shared_ptr<MonomialPool> pool;
    std::vector<FpPoly> polynomials; ///< sorted under `ordering`
    MonomialOrdering ordering;       ///< differential degrevlex
    std::vector<std::vector<std::uint32_t>> yhat;
    std::vector<std::uint32_t> solution; ///< the sampled solution, per var (consistency witness)
};

SpecializedSystem specialize(const ProlongedSystem& ps, const OutputValues& yhat, const Sample& s);

/// Weight vector over the specialized universe (jets inherit their base
/// symbol's weight; z_aux jets carry the configured z_aux weight).
std::vector<std::uint32_t> universe_weights(const SpecializedSystem& sys, const WeightMap& w,
                                            const Model& m);

struct LocalIdentResult {
    std::vector<SymId> locally_identifiable; ///< among states (initial values) and parameters
    std::uint32_t rank = 0;
    bool degenerate = false; ///< a division by zero happened; resample and retry
};

/// Jacobian rank test at the sample over F_p: a symbol is locally
/// identifiable iff removing its column drops the rank of
/// d[L^i(g_j)] / d(x*, mu), i <= bound_j.
LocalIdentResult jacobian_local_identifiability(const Model& m, const Sample& s,
                                                const std::vector<std::uint32_t>& bounds);

/// Smallest k with stable Jacobian rank, plus one order of safety margin;
/// uniform across outputs.
std::vector<std::uint32_t> auto_prolongation_bounds(const Model& m, const Sample& s);

} // namespace identgb

#endif
