#ifndef IDENTGB_MONOMIAL_HPP
#define IDENTGB_MONOMIAL_HPP

#include "identgb/errors.hpp"

#include <cstdint>
#include <cstring>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

namespace identgb {

/// One variable of a polynomial-system universe.
struct VarInfo {
    std::string name;
    std::string base;    ///< jet base name ("x1" for "x1_3"); equals name for order 0
    std::uint32_t order; ///< derivative order
    bool is_param;
};

using MonoId = std::uint32_t;
using Exp = std::uint16_t;

/// Interning store for dense exponent vectors over a fixed universe.
/// Ids are stable and deterministic in insertion order; total degree (and
/// weighted degree, when weights are attached) is cached per monomial.
class MonomialPool {
  public:
    explicit MonomialPool(std::size_t nvars) : nvars_(nvars) { intern_raw(std::vector<Exp>(nvars, 0)); }

    std::size_t nvars() const { return nvars_; }
    std::size_t size() const { return degree_.size(); }

    void set_weights(std::vector<std::uint64_t> w) {
        if (!w.empty() && w.size() != nvars_) throw invariant_error("weight vector size mismatch");
        weights_ = std::move(w);
        wdegree_.clear();
        for (MonoId id = 0; id < size(); ++id) wdegree_.push_back(compute_wdeg(exps(id)));
    }
    bool has_weights() const { return !weights_.empty(); }

    MonoId one() const { return 0; }

    MonoId intern(const std::vector<Exp>& e) {
        if (e.size() != nvars_) throw invariant_error("exponent vector size mismatch");
        return intern_raw(e);
    }

    const Exp* exps(MonoId id) const { return arena_.data() + std::size_t(id) * nvars_; }
    std::uint32_t degree(MonoId id) const { return degree_[id]; }
    std::uint64_t wdegree(MonoId id) const { return wdegree_[id]; }
    std::uint64_t divmask(MonoId id) const { return mask_[id]; }

    MonoId mul(MonoId a, MonoId b) {
        std::vector<Exp> e(nvars_);
        const Exp* ea = exps(a);
        const Exp* eb = exps(b);
        for (std::size_t i = 0; i < nvars_; ++i) {
            std::uint32_t s = std::uint32_t(ea[i]) + eb[i];
            if (s > 0xffffu) throw invariant_error("exponent overflow");
            e[i] = static_cast<Exp>(s);
        }
        return intern_raw(e);
    }

    bool divides(MonoId a, MonoId b) const {
        if (degree_[a] > degree_[b]) return false;
        if (mask_[a] & ~mask_[b]) return false;
        const Exp* ea = exps(a);
        const Exp* eb = exps(b);
        for (std::size_t i = 0; i < nvars_; ++i)
            if (ea[i] > eb[i]) return false;
        return true;
    }

    std::optional<MonoId> div(MonoId a, MonoId b) {
        const Exp* ea = exps(a);
        const Exp* eb = exps(b);
        std::vector<Exp> e(nvars_);
        for (std::size_t i = 0; i < nvars_; ++i) {
            if (eb[i] > ea[i]) return std::nullopt;
            e[i] = static_cast<Exp>(ea[i] - eb[i]);
        }
        return intern_raw(e);
    }

    MonoId lcm(MonoId a, MonoId b) {
        const Exp* ea = exps(a);
        const Exp* eb = exps(b);
        std::vector<Exp> e(nvars_);
        for (std::size_t i = 0; i < nvars_; ++i) e[i] = std::max(ea[i], eb[i]);
        return intern_raw(e);
    }

    bool coprime(MonoId a, MonoId b) const {
        const Exp* ea = exps(a);
        const Exp* eb = exps(b);
        for (std::size_t i = 0; i < nvars_; ++i)
            if (ea[i] != 0 && eb[i] != 0) return false;
        return true;
    }

    /// Scale each variable's exponent by its weight (the v -> v^w map).
    MonoId weight_substitute(MonoId a, const std::vector<std::uint32_t>& w) {
        const Exp* ea = exps(a);
        std::vector<Exp> e(nvars_);
        for (std::size_t i = 0; i < nvars_; ++i) {
            std::uint64_t s = std::uint64_t(ea[i]) * w[i];
            if (s > 0xffffu) throw invariant_error("exponent overflow in weight substitution");
            e[i] = static_cast<Exp>(s);
        }
        return intern_raw(e);
    }

  private:
    std::uint64_t compute_wdeg(const Exp* e) const {
        std::uint64_t d = 0;
        for (std::size_t i = 0; i < nvars_; ++i) d += std::uint64_t(e[i]) * weights_[i];
        return d;
    }

    MonoId intern_raw(const std::vector<Exp>& e) {
        std::uint64_t h = 1469598103934665603ull;
        const unsigned char* bytes = reinterpret_cast<const unsigned char*>(e.data());
        for (std::size_t i = 0; i < e.size() * sizeof(Exp); ++i) {
            h ^= bytes[i];
            h *= 1099511628211ull;
        }
        auto [it, inserted] = buckets_.try_emplace(h);
        if (!inserted) {
            for (MonoId id : it->second)
                if (std::memcmp(exps(id), e.data(), nvars_ * sizeof(Exp)) == 0) return id;
        }
        MonoId id = static_cast<MonoId>(degree_.size());
        arena_.insert(arena_.end(), e.begin(), e.end());
        std::uint32_t d = 0;
        std::uint64_t mask = 0;
        for (std::size_t i = 0; i < e.size(); ++i) {
            d += e[i];
            if (e[i] != 0) mask |= 1ull << (i & 63u);
        }
        degree_.push_back(d);
        mask_.push_back(mask);
        if (!weights_.empty()) wdegree_.push_back(compute_wdeg(e.data()));
        it->second.push_back(id);
        return id;
    }

    std::size_t nvars_;
    std::vector<Exp> arena_;
    std::vector<std::uint32_t> degree_;
    std::vector<std::uint64_t> mask_;
    std::vector<std::uint64_t> wdegree_;
    std::vector<std::uint64_t> weights_;
    std::unordered_map<std::uint64_t, std::vector<MonoId>> buckets_;
};

enum class OrderKind { degrevlex, diff_degrevlex, weighted };

const char* to_string(OrderKind k);

/// Comparator data: rank lists variable indices from most to least
/// significant; weighted orderings also carry per-variable weights and
/// break weighted-degree ties by the full (degree, revlex) comparison.
struct MonomialOrdering {
    OrderKind kind = OrderKind::degrevlex;
    std::vector<std::uint32_t> rank;
    std::vector<std::uint64_t> weights;
};

/// Rank for plain degrevlex in declaration order.
MonomialOrdering make_degrevlex(std::size_t nvars);

/// Differential degrevlex: jets ordered by derivative order descending,
/// ties by base name reverse-alphabetical; parameters last, alphabetical.
MonomialOrdering make_diff_degrevlex(const std::vector<VarInfo>& vars);

/// Weighted ordering on top of the differential degrevlex rank.
MonomialOrdering make_weighted(const std::vector<VarInfo>& vars, const std::vector<std::uint64_t>& weights);

/// Three-way comparison under `ord`.
int mono_compare(const MonomialPool& pool, const MonomialOrdering& ord, MonoId a, MonoId b);

} // namespace identgb

#endif
