#include "identgb/identify.hpp"

#include <json.hpp>

#include <chrono>
#include <sstream>

namespace identgb {

using Clock = std::chrono::steady_clock;

const char* to_string(Strategy s) { return s == Strategy::substitute ? "substitute" : "native"; }

const char* to_string(Verdict v) {
    switch (v) {
        case Verdict::global: return "global";
        case Verdict::local: return "local";
        case Verdict::none: return "none";
    }
    return "?";
}

double IdentReport::total_ms() const {
    double t = 0;
    for (const auto& [k, v] : timings_ms) t += v;
    return t;
}

double IdentReport::gb_ms() const {
    auto it = timings_ms.find("groebner");
    return it == timings_ms.end() ? 0.0 : it->second;
}

std::string ordering_label(WeightScheme scheme, Strategy strategy, bool legacy) {
    if (legacy) return "sian-legacy";
    switch (scheme) {
        case WeightScheme::identity: return "diff-degrevlex";
        case WeightScheme::standard: return strategy == Strategy::native ? "weighted-native" : "weighted";
        case WeightScheme::inverted: return "inverted";
    }
    return "?";
}

std::map<SymId, bool> global_verdicts(GBEngine& engine, const GroebnerBasis& basis, const SpecializedSystem& sys,
                                      const std::vector<std::uint32_t>& subst_weights,
                                      const std::vector<SymId>& query) {
    std::map<SymId, bool> out;
    for (SymId q : query) {
        auto it = sys.var_index.find(q);
        if (it == sys.var_index.end()) throw invariant_error("queried symbol not in the basis ring");
        std::uint32_t v = it->second;
        std::vector<Exp> e(sys.vars.size(), 0);
        e[v] = static_cast<Exp>(subst_weights[v]);
        FpPoly probe;
        probe.terms.emplace_back(sys.pool->intern(e), 1u);
        FpPoly nf = engine.normal_form(probe, basis.polynomials);
        bool constant = nf.is_zero() || (nf.terms.size() == 1 && sys.pool->degree(nf.terms[0].first) == 0);
        out.emplace(q, constant);
    }
    return out;
}

IdentReport identify(const Model& m, const IdentConfig& cfg) {
    IdentReport rep;
    rep.model = m.name;
    rep.prime = cfg.prime;
    rep.seed = cfg.seed;
    rep.scheme = cfg.scheme;
    rep.strategy = cfg.strategy;
    rep.ordering = ordering_label(cfg.scheme, cfg.strategy, cfg.legacy_ordering);

    auto deadline = Clock::now() + std::chrono::duration_cast<Clock::duration>(
                                       std::chrono::duration<double>(cfg.timeout_sec));
    struct StageTimer {
        IdentReport& rep;
        const char* stage;
        Clock::time_point t0 = Clock::now();
        ~StageTimer() {
            rep.timings_ms[stage] = std::chrono::duration<double, std::milli>(Clock::now() - t0).count();
        }
    };
    auto timed = [&rep](const char* stage, auto&& fn) {
        StageTimer t{rep, stage};
        return fn();
    };

    // Weight assignment.
    WeightMap wm = timed("weights", [&] {
        switch (cfg.scheme) {
            case WeightScheme::identity: return identity_weights(m);
            case WeightScheme::standard: return assign_weights_standard(compute_levels(m, default_level_cap(m)), m);
            case WeightScheme::inverted: return assign_weights_inverted(compute_levels(m, default_level_cap(m)), m);
        }
        throw invariant_error("unknown scheme");
    });
    wm.zaux_weight = cfg.zaux_weight;
    for (const auto& [s, w] : wm.weights) rep.weights[m.table.name(s)] = w;

    // Sample with generous input jet coverage, retrying degenerate ranks.
    std::uint32_t input_cap = static_cast<std::uint32_t>(m.states.size() + m.params.size()) + 4;
    Sample sample;
    std::vector<std::uint32_t> bounds;
    LocalIdentResult local;
    bool settled = false;
    for (std::uint32_t attempt = 0; attempt < 5 && !settled; ++attempt) {
        sample = timed("sample", [&] {
            return sample_point(m, cfg.seed + 1000003ull * attempt, cfg.prime, cfg.overrides, input_cap);
        });
        try {
            bounds = timed("bounds", [&] {
                if (cfg.prolongation) return std::vector<std::uint32_t>(m.outputs.size(), *cfg.prolongation);
                return auto_prolongation_bounds(m, sample);
            });
            local = timed("jacobian", [&] { return jacobian_local_identifiability(m, sample, bounds); });
            settled = !local.degenerate;
        } catch (const invariant_error&) {
            settled = false;
        }
    }
    if (!settled) throw invariant_error("could not find a non-degenerate sample");
    rep.bounds = bounds;

    ProlongedSystem ps = timed("prolong", [&] { return prolong(m, bounds); });
    OutputValues yh = timed("yhat", [&] { return compute_output_values(ps, sample); });
    SpecializedSystem sys = timed("specialize", [&] { return specialize(ps, yh, sample); });
    rep.num_polys = sys.polynomials.size();
    rep.num_vars = sys.vars.size();

    std::vector<std::uint32_t> uw = universe_weights(sys, wm, ps.model);

    // Query set: parameters and state initial values.
    std::vector<SymId> query;
    for (SymId s : m.states) query.push_back(s);
    for (SymId p : m.params) query.push_back(p);

    std::set<SymId> local_set(local.locally_identifiable.begin(), local.locally_identifiable.end());

    // Groebner stage under the requested ordering realization.
    MonomialOrdering ord;
    std::vector<FpPoly> gb_input;
    std::vector<std::uint32_t> subst(sys.vars.size(), 1);
    if (cfg.legacy_ordering) {
        ord = make_degrevlex(sys.vars.size());
        gb_input = sys.polynomials;
    } else if (cfg.scheme == WeightScheme::identity) {
        ord = sys.ordering;
        gb_input = sys.polynomials;
    } else if (cfg.strategy == Strategy::substitute) {
        ord = sys.ordering;
        GBEngine pre(Fp(cfg.prime), sys.pool, sys.ordering);
        gb_input = pre.apply_weight_substitution(sys.polynomials, uw);
        subst = uw;
    } else {
        std::vector<std::uint64_t> w64(uw.begin(), uw.end());
        ord = make_weighted(sys.vars, w64);
        gb_input = sys.polynomials; // re-sorted by the engine below
    }

    GBEngine engine(Fp(cfg.prime), sys.pool, ord);
    if (cfg.strategy == Strategy::native && cfg.scheme != WeightScheme::identity) {
        for (FpPoly& f : gb_input) f = engine.normalize(std::move(f.terms));
    }

    bool gb_ok = true;
    GroebnerBasis basis;
    try {
        timed("groebner", [&] {
            if (cfg.use_buchberger) {
                basis = engine.buchberger(gb_input, deadline);
            } else {
                auto [b, st] = engine.f4(gb_input, deadline);
                basis = std::move(b);
                rep.stats = std::move(st);
            }
            return 0;
        });
    } catch (const timeout_error&) {
        gb_ok = false;
        rep.complete = false;
        rep.incomplete_stage = "groebner";
    }

    std::map<SymId, bool> global;
    if (gb_ok) {
        timed("verdicts", [&] {
            std::vector<SymId> locally_id_query;
            for (SymId q : query)
                if (local_set.count(q)) locally_id_query.push_back(q);
            global = global_verdicts(engine, basis, sys, subst, locally_id_query);
            return 0;
        });
    }

    for (SymId q : query) {
        Verdict v = Verdict::none;
        if (local_set.count(q)) v = Verdict::local;
        auto it = global.find(q);
        if (it != global.end() && it->second) v = Verdict::global;
        rep.verdicts[m.table.name(q)] = v;
    }
    return rep;
}

std::string report_to_json(const IdentReport& r) {
    nlohmann::json j;
    j["model"] = r.model;
    j["prime"] = r.prime;
    j["seed"] = r.seed;
    j["ordering"] = r.ordering;
    j["scheme"] = to_string(r.scheme);
    j["strategy"] = to_string(r.strategy);
    j["complete"] = r.complete;
    if (!r.complete) j["incomplete_stage"] = r.incomplete_stage;
    j["num_polys"] = r.num_polys;
    j["num_vars"] = r.num_vars;
    j["bounds"] = r.bounds;
    nlohmann::json w = nlohmann::json::object();
    for (const auto& [k, v] : r.weights) w[k] = v;
    j["weights"] = w;
    nlohmann::json verdicts = nlohmann::json::object();
    for (const auto& [k, v] : r.verdicts) verdicts[k] = to_string(v);
    j["verdicts"] = verdicts;
    nlohmann::json stats;
    stats["iterations"] = r.stats.iterations;
    stats["max_pairs_selected"] = r.stats.max_pairs_selected;
    stats["zero_reductions"] = r.stats.zero_reductions;
    stats["total_spolys"] = r.stats.total_spolys;
    nlohmann::json dims = nlohmann::json::array();
    for (const auto& [rows, cols] : r.stats.matrix_dims) dims.push_back({rows, cols});
    stats["matrix_dims"] = dims;
    j["stats"] = stats;
    nlohmann::json t = nlohmann::json::object();
    for (const auto& [k, v] : r.timings_ms) t[k] = v;
    j["timings_ms"] = t;
    return j.dump(2);
}

std::string report_to_text(const IdentReport& r) {
    std::ostringstream os;
    os << "model: " << r.model << "  (p = " << r.prime << ", seed = " << r.seed << ", ordering = " << r.ordering
       << ")\n";
    os << "system: " << r.num_polys << " polynomials, " << r.num_vars << " variables\n";
    if (!r.complete) os << "NOTE: incomplete (" << r.incomplete_stage << " timed out); global analysis missing\n";
    os << "verdicts:\n";
    for (const auto& [k, v] : r.verdicts) os << "  " << k << ": " << to_string(v) << "\n";
    os << "f4: max_pairs=" << r.stats.max_pairs_selected << " zero_reductions=" << r.stats.zero_reductions
       << " rounds=" << r.stats.iterations << "\n";
    return os.str();
}

} // namespace identgb
