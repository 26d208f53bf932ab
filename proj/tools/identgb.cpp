#include "identgb/bench.hpp"
#include "identgb/builtin.hpp"
#include "identgb/identify.hpp"
#include "identgb/sysio.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

namespace {

using namespace identgb;

std::string read_input(const std::string& path) {
    if (path == "-") {
        std::ostringstream os;
        os << std::cin.rdbuf();
        return os.str();
    }
    std::ifstream in(path);
    if (!in) throw parse_error("cannot open " + path);
    std::ostringstream os;
    os << in.rdbuf();
    return os.str();
}

void write_output(const std::string& path, const std::string& data) {
    if (path.empty() || path == "-") {
        std::cout << data;
        return;
    }
    std::ofstream out(path);
    if (!out) throw parse_error("cannot open " + path + " for writing");
    out << data;
}

Model load_model(const std::string& spec) {
    if (is_builtin_model(spec)) return builtin_model(spec);
    return parse_model(read_input(spec));
}

WeightScheme parse_scheme(const std::string& s) {
    if (s == "none" || s == "identity") return WeightScheme::identity;
    if (s == "standard") return WeightScheme::standard;
    if (s == "inverted") return WeightScheme::inverted;
    throw parse_error("unknown weight scheme '" + s + "'");
}

std::map<std::string, std::uint64_t> parse_overrides(const std::vector<std::string>& kvs) {
    std::map<std::string, std::uint64_t> out;
    for (const std::string& kv : kvs) {
        auto eq = kv.find('=');
        if (eq == std::string::npos) throw parse_error("override must be name=value: " + kv);
        out[kv.substr(0, eq)] = std::stoull(kv.substr(eq + 1));
    }
    return out;
}

std::string weights_json(const Model& m, const LevelMap& lm, const WeightMap& wm) {
    nlohmann::json j;
    j["model"] = m.name;
    j["scheme"] = to_string(wm.scheme);
    nlohmann::json levels = nlohmann::json::object();
    for (const auto& [s, lvl] : lm.levels) levels[m.table.name(s)] = lvl;
    nlohmann::json never = nlohmann::json::array();
    for (SymId s : lm.never_appears) never.push_back(m.table.name(s));
    j["levels"] = levels;
    j["never_appears"] = never;
    j["max_level"] = lm.max_level;
    nlohmann::json w = nlohmann::json::object();
    for (const auto& [s, wt] : wm.weights) w[m.table.name(s)] = wt;
    j["weights"] = w;
    return j.dump(2);
}

int run(int argc, char** argv) {
    CLI::App app{"Weighted monomial orderings for structural-identifiability Groebner bases"};
    app.require_subcommand(1);

    // parse
    std::string parse_model_arg;
    bool parse_print = false;
    auto* cmd_parse = app.add_subcommand("parse", "Parse and validate a model (builtin name or DSL file)");
    cmd_parse->add_option("model", parse_model_arg, "builtin model name or path to a DSL file")->required();
    cmd_parse->add_flag("--print", parse_print, "print the normalized DSL back");

    // weights
    std::string w_model, w_scheme = "standard", w_output = "text";
    bool w_all = false;
    std::uint32_t w_maxiter = 0;
    auto* cmd_weights = app.add_subcommand("weights", "Level-based weight assignment for a model");
    cmd_weights->add_option("model", w_model)->required();
    cmd_weights->add_option("--scheme", w_scheme, "standard|inverted|none");
    cmd_weights->add_flag("--all", w_all, "also print weight-1 entries");
    cmd_weights->add_option("--output", w_output, "text|json");
    cmd_weights->add_option("--max-iter", w_maxiter, "level iteration cap (default #states+#params)");

    // generate
    std::string g_model, g_out, g_prolong = "auto", g_weights = "none", g_strategy = "substitute";
    std::uint32_t g_prime = 11863279;
    std::uint64_t g_seed = 0;
    std::vector<std::string> g_set;
    auto* cmd_gen = app.add_subcommand("generate", "Emit the specialized polynomial system over F_p");
    cmd_gen->add_option("model", g_model)->required();
    cmd_gen->add_option("--prime", g_prime);
    cmd_gen->add_option("--seed", g_seed);
    cmd_gen->add_option("--prolongation", g_prolong, "auto or a uniform bound");
    cmd_gen->add_option("--weights", g_weights, "none|standard|inverted (substitution applied on emit)");
    cmd_gen->add_option("--strategy", g_strategy, "substitute|native");
    cmd_gen->add_option("--set", g_set, "value override name=value (repeatable)");
    cmd_gen->add_option("-o,--output", g_out, "output path (default stdout)");

    // gb
    std::string gb_input, gb_ordering = "diffdrl", gb_weights, gb_model, gb_engine = "f4", gb_stats;
    double gb_timeout = 1800;
    auto* cmd_gb = app.add_subcommand("gb", "Groebner basis of a system in the text format");
    cmd_gb->add_option("input", gb_input, "system file (- for stdin)")->required();
    cmd_gb->add_option("--ordering", gb_ordering, "degrevlex|diffdrl|weighted");
    cmd_gb->add_option("--weights", gb_weights, "weights file, or 'auto' with --model");
    cmd_gb->add_option("--model", gb_model, "builtin model for --weights auto");
    cmd_gb->add_option("--engine", gb_engine, "f4|buchberger");
    cmd_gb->add_option("--stats-json", gb_stats, "write F4 statistics to this path");
    cmd_gb->add_option("--timeout", gb_timeout, "seconds");

    // identify
    std::string id_model, id_weights = "none", id_strategy = "substitute", id_prolong = "auto", id_output = "text",
                id_stats;
    std::uint32_t id_prime = 11863279;
    std::uint64_t id_seed = 0;
    double id_timeout = 1800;
    bool id_buchberger = false;
    std::vector<std::string> id_set;
    auto* cmd_id = app.add_subcommand("identify", "Per-parameter identifiability verdicts");
    cmd_id->add_option("model", id_model)->required();
    cmd_id->add_option("--prime", id_prime);
    cmd_id->add_option("--seed", id_seed);
    cmd_id->add_option("--weights", id_weights, "none|standard|inverted");
    cmd_id->add_option("--strategy", id_strategy, "substitute|native");
    cmd_id->add_option("--prolongation", id_prolong, "auto or a uniform bound");
    cmd_id->add_option("--timeout", id_timeout, "seconds for the Groebner stage");
    cmd_id->add_option("--output", id_output, "text|json");
    cmd_id->add_option("--stats-json", id_stats, "write the JSON report to this path");
    cmd_id->add_flag("--buchberger", id_buchberger, "use the oracle engine instead of F4");
    cmd_id->add_option("--set", id_set, "value override name=value (repeatable)");

    // bench
    std::string b_models = "light", b_configs = "diff-degrevlex,weighted", b_output = "text", b_out;
    std::uint32_t b_prime = 11863279;
    std::uint64_t b_seed = 0;
    double b_timeout = 300;
    std::string b_prolong = "auto";
    auto* cmd_bench = app.add_subcommand("bench", "Work-counter benchmark across orderings");
    cmd_bench->add_option("--models", b_models, "light|heavy|all|jason210|comma-separated names");
    cmd_bench->add_option("--configs", b_configs, "comma-separated ordering labels");
    cmd_bench->add_option("--prime", b_prime);
    cmd_bench->add_option("--seed", b_seed);
    cmd_bench->add_option("--timeout", b_timeout, "seconds per Groebner run");
    cmd_bench->add_option("--prolongation", b_prolong, "auto or a uniform bound");
    cmd_bench->add_option("--output", b_output, "text|csv|json");
    cmd_bench->add_option("-o,--out", b_out, "output path (default stdout)");

    CLI11_PARSE(app, argc, argv);

    if (cmd_parse->parsed()) {
        Model m = load_model(parse_model_arg);
        validate_model(m);
        if (parse_print) {
            std::cout << print_model(m);
        } else {
            std::cout << "model " << m.name << ": " << m.states.size() << " states, " << m.params.size()
                      << " params, " << m.inputs.size() << " inputs, " << m.outputs.size() << " outputs\n";
        }
        return 0;
    }

    if (cmd_weights->parsed()) {
        Model m = load_model(w_model);
        std::uint32_t cap = w_maxiter ? w_maxiter : default_level_cap(m);
        LevelMap lm = compute_levels(m, cap);
        WeightScheme scheme = parse_scheme(w_scheme);
        WeightMap wm = scheme == WeightScheme::standard   ? assign_weights_standard(lm, m)
                       : scheme == WeightScheme::inverted ? assign_weights_inverted(lm, m)
                                                          : identity_weights(m);
        if (w_output == "json") {
            std::cout << weights_json(m, lm, wm) << "\n";
        } else {
            for (const auto& [s, wt] : wm.weights) {
                if (wt == 1 && !w_all) continue;
                std::cout << m.table.name(s) << "\t" << wt << "\n";
            }
            if (!lm.never_appears.empty()) {
                std::cerr << "# never appear in any output derivative:";
                for (SymId s : lm.never_appears) std::cerr << " " << m.table.name(s);
                std::cerr << "\n";
            }
        }
        return 0;
    }

    if (cmd_gen->parsed()) {
        Model m = load_model(g_model);
        IdentConfig cfg;
        cfg.prime = g_prime;
        cfg.seed = g_seed;
        cfg.overrides = parse_overrides(g_set);
        if (g_prolong != "auto") cfg.prolongation = static_cast<std::uint32_t>(std::stoul(g_prolong));
        std::uint32_t input_cap = static_cast<std::uint32_t>(m.states.size() + m.params.size()) + 4;
        Sample s = sample_point(m, g_seed, g_prime, cfg.overrides, input_cap);
        std::vector<std::uint32_t> bounds = cfg.prolongation
                                                ? std::vector<std::uint32_t>(m.outputs.size(), *cfg.prolongation)
                                                : auto_prolongation_bounds(m, s);
        ProlongedSystem ps = prolong(m, bounds);
        OutputValues yh = compute_output_values(ps, s);
        SpecializedSystem sys = specialize(ps, yh, s);
        WeightScheme scheme = parse_scheme(g_weights);
        if (scheme != WeightScheme::identity && g_strategy == "substitute") {
            WeightMap wm = scheme == WeightScheme::standard
                               ? assign_weights_standard(compute_levels(m, default_level_cap(m)), m)
                               : assign_weights_inverted(compute_levels(m, default_level_cap(m)), m);
            std::vector<std::uint32_t> uw = universe_weights(sys, wm, ps.model);
            GBEngine engine(Fp(g_prime), sys.pool, sys.ordering);
            sys.polynomials = engine.apply_weight_substitution(sys.polynomials, uw);
        }
        write_output(g_out, emit_system(sys));
        return 0;
    }

    if (cmd_gb->parsed()) {
        TextSystem sys = parse_system(read_input(gb_input));
        MonomialOrdering ord = make_degrevlex(sys.vars.size());
        if (gb_ordering == "weighted") {
            std::vector<std::uint32_t> w;
            if (gb_weights.empty()) throw parse_error("--ordering weighted needs --weights");
            if (gb_weights == "auto") {
                if (gb_model.empty()) throw parse_error("--weights auto needs --model");
                Model m = load_model(gb_model);
                WeightMap wm = assign_weights_standard(compute_levels(m, default_level_cap(m)), m);
                std::ostringstream ws;
                for (const auto& [s, wt] : wm.weights) ws << m.table.name(s) << " " << wt << "\n";
                w = parse_weights_file(ws.str(), sys.vars);
            } else {
                w = parse_weights_file(read_input(gb_weights), sys.vars);
            }
            ord = make_weighted(sys.vars, std::vector<std::uint64_t>(w.begin(), w.end()));
            ord.rank = make_degrevlex(sys.vars.size()).rank; // header order is the tiebreak rank
        } else if (gb_ordering != "degrevlex" && gb_ordering != "diffdrl") {
            throw parse_error("unknown ordering '" + gb_ordering + "'");
        }
        GBEngine engine(Fp(sys.prime), sys.pool, ord);
        auto deadline = std::chrono::steady_clock::now() +
                        std::chrono::duration_cast<std::chrono::steady_clock::duration>(
                            std::chrono::duration<double>(gb_timeout));
        GroebnerBasis basis;
        F4Stats stats;
        if (gb_engine == "buchberger") {
            basis = engine.buchberger(sys.polynomials, deadline);
        } else {
            auto [b, st] = engine.f4(sys.polynomials, deadline);
            basis = std::move(b);
            stats = std::move(st);
        }
        for (const FpPoly& f : basis.polynomials)
            std::cout << print_fppoly(f, *sys.pool, sys.vars, ord) << "\n";
        if (!gb_stats.empty()) {
            nlohmann::json j;
            j["iterations"] = stats.iterations;
            j["max_pairs_selected"] = stats.max_pairs_selected;
            j["zero_reductions"] = stats.zero_reductions;
            j["total_spolys"] = stats.total_spolys;
            nlohmann::json dims = nlohmann::json::array();
            for (const auto& [r, c] : stats.matrix_dims) dims.push_back({r, c});
            j["matrix_dims"] = dims;
            write_output(gb_stats, j.dump(2) + "\n");
        }
        return 0;
    }

    if (cmd_id->parsed()) {
        Model m = load_model(id_model);
        IdentConfig cfg;
        cfg.prime = id_prime;
        cfg.seed = id_seed;
        cfg.scheme = parse_scheme(id_weights);
        cfg.strategy = id_strategy == "native" ? Strategy::native : Strategy::substitute;
        if (id_prolong != "auto") cfg.prolongation = static_cast<std::uint32_t>(std::stoul(id_prolong));
        cfg.timeout_sec = id_timeout;
        cfg.use_buchberger = id_buchberger;
        cfg.overrides = parse_overrides(id_set);
        IdentReport rep = identify(m, cfg);
        std::string json = report_to_json(rep);
        if (!id_stats.empty()) write_output(id_stats, json + "\n");
        if (id_output == "json")
            std::cout << json << "\n";
        else
            std::cout << report_to_text(rep);
        return rep.complete ? 0 : 3;
    }

    if (cmd_bench->parsed()) {
        std::vector<std::string> models;
        if (b_models == "light") {
            models = light_tier_names();
        } else if (b_models == "all") {
            models = builtin_model_names();
            models.push_back("jason210");
        } else if (b_models == "heavy") {
            for (const std::string& n : builtin_model_names()) {
                auto light = light_tier_names();
                if (std::find(light.begin(), light.end(), n) == light.end()) models.push_back(n);
            }
        } else {
            std::stringstream ss(b_models);
            std::string item;
            while (std::getline(ss, item, ','))
                if (!item.empty()) models.push_back(item);
        }
        std::vector<std::string> configs;
        {
            std::stringstream ss(b_configs);
            std::string item;
            while (std::getline(ss, item, ','))
                if (!item.empty()) configs.push_back(item);
        }
        BenchOptions opts;
        opts.prime = b_prime;
        opts.seed = b_seed;
        opts.timeout_sec = b_timeout;
        if (b_prolong != "auto") opts.prolongation = static_cast<std::uint32_t>(std::stoul(b_prolong));
        auto rows = run_bench(models, configs, opts, [&](const BenchRow& r) {
            std::cerr << "[bench] " << r.model << " / " << r.ordering << (r.completed ? " done in " : " FAILED after ")
                      << r.time_ms << " ms\n";
        });
        write_output(b_out, emit_report(rows, b_output));
        return 0;
    }

    return 0;
}

} // namespace

int main(int argc, char** argv) {
    try {
        return run(argc, argv);
    } catch (const identgb::parse_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const identgb::timeout_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    } catch (const identgb::invariant_error& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return 4;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
}
