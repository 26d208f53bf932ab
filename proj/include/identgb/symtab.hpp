#ifndef IDENTGB_SYMTAB_HPP
#define IDENTGB_SYMTAB_HPP

#include "identgb/errors.hpp"

#include <cstdint>
#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

namespace identgb {

using SymId = std::uint32_t;

enum class SymKind : std::uint8_t { state, param, input, output, aux };

struct SymInfo {
    std::string name; ///< ASCII identifier; jets are rendered from (base, order)
    SymKind kind;
    SymId base;         ///< for jets, the order-0 symbol; self otherwise
    std::uint32_t order; ///< derivative order (0 for model symbols)
};

/// Interning table for model symbols and their jets.
///
/// Handles are cheap to copy and share one underlying registry, so symbols
/// created on demand while differentiating stay consistent across all
/// expressions of a model. Lookup/creation is serialized internally.
class SymbolTable {
  public:
    SymbolTable() : impl_(std::make_shared<Impl>()) {}

    SymId declare(const std::string& name, SymKind kind) {
        std::lock_guard<std::mutex> lock(impl_->mtx);
        auto it = impl_->by_name.find(name);
        if (it != impl_->by_name.end()) throw parse_error("duplicate symbol '" + name + "'");
        SymId id = static_cast<SymId>(impl_->syms.size());
        impl_->syms.push_back(SymInfo{name, kind, id, 0});
        impl_->by_name.emplace(name, id);
        return id;
    }

    /// Jet of `base` at derivative order `order` (creates it if missing).
    /// Order 0 is the base symbol itself.
    SymId jet(SymId base, std::uint32_t order) const {
        std::lock_guard<std::mutex> lock(impl_->mtx);
        const SymInfo b = impl_->syms.at(base);
        if (b.order != 0) throw invariant_error("jet() expects an order-0 base symbol");
        if (order == 0) return base;
        auto key = std::make_pair(base, order);
        auto it = impl_->jets.find(key);
        if (it != impl_->jets.end()) return it->second;
        SymId id = static_cast<SymId>(impl_->syms.size());
        impl_->syms.push_back(SymInfo{b.name + "_" + std::to_string(order), b.kind, base, order});
        impl_->jets.emplace(key, id);
        return id;
    }

    bool contains(const std::string& name) const {
        std::lock_guard<std::mutex> lock(impl_->mtx);
        return impl_->by_name.count(name) != 0;
    }

    /// The denominator-clearing aux symbol, if one was ever declared.
    std::optional<SymId> find_aux() const {
        std::lock_guard<std::mutex> lock(impl_->mtx);
        for (SymId id = 0; id < impl_->syms.size(); ++id)
            if (impl_->syms[id].kind == SymKind::aux && impl_->syms[id].order == 0) return id;
        return std::nullopt;
    }

    SymId id_of(const std::string& name) const {
        std::lock_guard<std::mutex> lock(impl_->mtx);
        auto it = impl_->by_name.find(name);
        if (it == impl_->by_name.end()) throw parse_error("undeclared symbol " + name);
        return it->second;
    }

    const SymInfo& info(SymId id) const {
        std::lock_guard<std::mutex> lock(impl_->mtx);
        return impl_->syms.at(id);
    }

    std::string name(SymId id) const { return info(id).name; }
    SymKind kind(SymId id) const { return info(id).kind; }
    std::uint32_t order(SymId id) const { return info(id).order; }
    SymId base(SymId id) const { return info(id).base; }

    std::size_t size() const {
        std::lock_guard<std::mutex> lock(impl_->mtx);
        return impl_->syms.size();
    }

  private:
    struct PairHash {
        std::size_t operator()(const std::pair<SymId, std::uint32_t>& p) const {
            return std::hash<std::uint64_t>()((std::uint64_t(p.first) << 32) | p.second);
        }
    };
    struct Impl {
        mutable std::mutex mtx;
        std::vector<SymInfo> syms;
        std::unordered_map<std::string, SymId> by_name;
        std::unordered_map<std::pair<SymId, std::uint32_t>, SymId, PairHash> jets;
    };
    std::shared_ptr<Impl> impl_;
};

} // namespace identgb

#endif
