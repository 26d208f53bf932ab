#ifndef IDENTGB_BENCH_HPP
#define IDENTGB_BENCH_HPP

#include "identgb/identify.hpp"

#include <functional>
#include <optional>
#include <string>
#include <vector>

namespace identgb {

struct BenchRow {
    std::string model;
    std::size_t num_polys = 0;
    std::size_t num_vars = 0;
    std::string ordering; ///< sian-legacy | diff-degrevlex | weighted | weighted-native | inverted
    double time_ms = 0;   ///< Groebner stage wall time
    std::uint64_t max_pairs = 0;
    std::uint64_t zero_reductions = 0;
    bool completed = false;
    std::optional<double> speedup; ///< baseline time / this time, baseline = diff-degrevlex
};

struct BenchOptions {
    std::uint32_t prime = 11863279;
    std::uint64_t seed = 0;
    double timeout_sec = 300;
    std::optional<std::uint32_t> prolongation;
};

/// Runs the identify pipeline per (model, config) and collects counters.
/// Rows are emitted through `sink` as they finish; a failed or timed-out
/// row never aborts the batch. The bundled raw system "jason210" is
/// accepted as a model name (configs diff-degrevlex / sian-legacy /
/// weighted, the latter with weight 2 on x8).
std::vector<BenchRow> run_bench(const std::vector<std::string>& models, const std::vector<std::string>& configs,
                                const BenchOptions& opts,
                                const std::function<void(const BenchRow&)>& sink = {});

/// Formats: "csv" (exact columns model,polys,vars,ordering,time_ms,
/// max_pairs,zero_reductions,completed,speedup), "json", "text".
std::string emit_report(const std::vector<BenchRow>& rows, const std::string& format);

std::vector<BenchRow> parse_bench_csv(const std::string& csv);

} // namespace identgb

#endif
