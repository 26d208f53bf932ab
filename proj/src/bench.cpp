#include "identgb/bench.hpp"

#include "identgb/builtin.hpp"
#include "identgb/sysio.hpp"

#include <json.hpp>

#include <chrono>
#include <cstdio>
#include <sstream>

namespace identgb {

namespace {

IdentConfig config_for(const std::string& label, const BenchOptions& opts) {
    IdentConfig cfg;
    cfg.prime = opts.prime;
    cfg.seed = opts.seed;
    cfg.timeout_sec = opts.timeout_sec;
    cfg.prolongation = opts.prolongation;
    if (label == "sian-legacy") {
        cfg.legacy_ordering = true;
    } else if (label == "diff-degrevlex") {
        cfg.scheme = WeightScheme::identity;
    } else if (label == "weighted") {
        cfg.scheme = WeightScheme::standard;
        cfg.strategy = Strategy::substitute;
    } else if (label == "weighted-native") {
        cfg.scheme = WeightScheme::standard;
        cfg.strategy = Strategy::native;
    } else if (label == "inverted") {
        cfg.scheme = WeightScheme::inverted;
        cfg.strategy = Strategy::substitute;
    } else {
        throw parse_error("unknown bench config '" + label + "'");
    }
    return cfg;
}

BenchRow run_jason210(const std::string& label, const BenchOptions& opts) {
    BenchRow row;
    row.model = "jason210";
    row.ordering = label;
    TextSystem sys = parse_system(jason210_system_text());
    row.num_polys = sys.polynomials.size();
    row.num_vars = sys.vars.size();

    MonomialOrdering ord = make_degrevlex(sys.vars.size());
    GBEngine engine(Fp(sys.prime), sys.pool, ord);
    std::vector<FpPoly> input = sys.polynomials;
    if (label == "weighted" || label == "inverted") {
        std::vector<std::uint32_t> w(sys.vars.size(), 1);
        for (std::size_t i = 0; i < sys.vars.size(); ++i)
            if (sys.vars[i].name == "x8") w[i] = 2;
        input = engine.apply_weight_substitution(input, w);
    }
    auto deadline = std::chrono::steady_clock::now() +
                    std::chrono::duration_cast<std::chrono::steady_clock::duration>(
                        std::chrono::duration<double>(opts.timeout_sec));
    auto t0 = std::chrono::steady_clock::now();
    try {
        auto [basis, stats] = engine.f4(input, deadline);
        row.time_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
        row.max_pairs = stats.max_pairs_selected;
        row.zero_reductions = stats.zero_reductions;
        row.completed = true;
    } catch (const timeout_error&) {
        row.time_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
        row.completed = false;
    }
    return row;
}

} // namespace

std::vector<BenchRow> run_bench(const std::vector<std::string>& models, const std::vector<std::string>& configs,
                                const BenchOptions& opts, const std::function<void(const BenchRow&)>& sink) {
    std::vector<BenchRow> rows;
    for (const std::string& name : models) {
        std::size_t first_row = rows.size();
        for (const std::string& label : configs) {
            BenchRow row;
            row.model = name;
            row.ordering = label;
            try {
                if (name == "jason210") {
                    row = run_jason210(label, opts);
                } else {
                    Model m = builtin_model(name);
                    IdentReport rep = identify(m, config_for(label, opts));
                    row.num_polys = rep.num_polys;
                    row.num_vars = rep.num_vars;
                    row.time_ms = rep.gb_ms();
                    row.max_pairs = rep.stats.max_pairs_selected;
                    row.zero_reductions = rep.stats.zero_reductions;
                    row.completed = rep.complete;
                }
            } catch (const std::exception&) {
                row.completed = false;
            }
            rows.push_back(row);
            if (sink) sink(rows.back());
        }
        // Speedup against the unweighted differential-degrevlex baseline.
        const BenchRow* baseline = nullptr;
        for (std::size_t i = first_row; i < rows.size(); ++i)
            if (rows[i].ordering == "diff-degrevlex" && rows[i].completed) baseline = &rows[i];
        if (baseline != nullptr) {
            for (std::size_t i = first_row; i < rows.size(); ++i) {
                if (!rows[i].completed || rows[i].time_ms <= 0) continue;
                rows[i].speedup = baseline->time_ms / rows[i].time_ms;
            }
        }
    }
    return rows;
}

namespace {

std::string fmt_ms(double v) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.3f", v);
    return buf;
}

std::string fmt_speedup(const std::optional<double>& v) {
    if (!v) return "";
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.4f", *v);
    return buf;
}

} // namespace

std::string emit_report(const std::vector<BenchRow>& rows, const std::string& format) {
    if (format == "csv") {
        std::ostringstream os;
        os << "model,polys,vars,ordering,time_ms,max_pairs,zero_reductions,completed,speedup\n";
        for (const BenchRow& r : rows) {
            os << r.model << "," << r.num_polys << "," << r.num_vars << "," << r.ordering << "," << fmt_ms(r.time_ms)
               << "," << r.max_pairs << "," << r.zero_reductions << "," << (r.completed ? "true" : "false") << ","
               << fmt_speedup(r.speedup) << "\n";
        }
        return os.str();
    }
    if (format == "json") {
        nlohmann::json arr = nlohmann::json::array();
        for (const BenchRow& r : rows) {
            nlohmann::json j;
            j["model"] = r.model;
            j["polys"] = r.num_polys;
            j["vars"] = r.num_vars;
            j["ordering"] = r.ordering;
            j["time_ms"] = r.time_ms;
            j["max_pairs"] = r.max_pairs;
            j["zero_reductions"] = r.zero_reductions;
            j["completed"] = r.completed;
            if (r.speedup)
                j["speedup"] = *r.speedup;
            else
                j["speedup"] = nullptr;
            arr.push_back(j);
        }
        return arr.dump(2);
    }
    if (format == "text") {
        std::ostringstream os;
        os << "model          polys vars  ordering         time_ms      max_pairs  zero_red   ok  speedup\n";
        for (const BenchRow& r : rows) {
            char buf[256];
            std::snprintf(buf, sizeof buf, "%-14s %5zu %5zu %-16s %12.3f %10llu %9llu %4s %8s\n", r.model.c_str(),
                          r.num_polys, r.num_vars, r.ordering.c_str(), r.time_ms,
                          static_cast<unsigned long long>(r.max_pairs),
                          static_cast<unsigned long long>(r.zero_reductions), r.completed ? "yes" : "no",
                          fmt_speedup(r.speedup).c_str());
            os << buf;
        }
        return os.str();
    }
    throw parse_error("unknown report format '" + format + "'");
}

std::vector<BenchRow> parse_bench_csv(const std::string& csv) {
    std::vector<BenchRow> rows;
    std::stringstream ss(csv);
    std::string line;
    bool header = true;
    while (std::getline(ss, line)) {
        if (line.empty()) continue;
        if (header) {
            header = false;
            continue;
        }
        std::stringstream ls(line);
        std::string field;
        std::vector<std::string> fields;
        while (std::getline(ls, field, ',')) fields.push_back(field);
        while (fields.size() < 9) fields.push_back("");
        BenchRow r;
        r.model = fields[0];
        r.num_polys = std::stoull(fields[1]);
        r.num_vars = std::stoull(fields[2]);
        r.ordering = fields[3];
        r.time_ms = std::stod(fields[4]);
        r.max_pairs = std::stoull(fields[5]);
        r.zero_reductions = std::stoull(fields[6]);
        r.completed = fields[7] == "true";
        if (!fields[8].empty()) r.speedup = std::stod(fields[8]);
        rows.push_back(std::move(r));
    }
    return rows;
}

} // namespace identgb
