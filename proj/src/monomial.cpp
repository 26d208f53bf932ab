#include "identgb/monomial.hpp"

#include <algorithm>

namespace identgb {

const char* to_string(OrderKind k) {
    switch (k) {
        case OrderKind::degrevlex: return "degrevlex";
        case OrderKind::diff_degrevlex: return "diffdrl";
        case OrderKind::weighted: return "weighted";
    }
    return "?";
}

MonomialOrdering make_degrevlex(std::size_t nvars) {
    MonomialOrdering o;
    o.kind = OrderKind::degrevlex;
    o.rank.resize(nvars);
    for (std::uint32_t i = 0; i < nvars; ++i) o.rank[i] = i;
    return o;
}

MonomialOrdering make_diff_degrevlex(const std::vector<VarInfo>& vars) {
    MonomialOrdering o;
    o.kind = OrderKind::diff_degrevlex;
    o.rank.resize(vars.size());
    for (std::uint32_t i = 0; i < vars.size(); ++i) o.rank[i] = i;
    std::stable_sort(o.rank.begin(), o.rank.end(), [&vars](std::uint32_t a, std::uint32_t b) {
        const VarInfo& va = vars[a];
        const VarInfo& vb = vars[b];
        if (va.is_param != vb.is_param) return vb.is_param; // jets before parameters
        if (va.is_param) return va.name < vb.name;          // parameters alphabetical
        if (va.order != vb.order) return va.order > vb.order;
        return va.base > vb.base; // same order: reverse alphabetical
    });
    return o;
}

MonomialOrdering make_weighted(const std::vector<VarInfo>& vars, const std::vector<std::uint64_t>& weights) {
    MonomialOrdering o = make_diff_degrevlex(vars);
    o.kind = OrderKind::weighted;
    o.weights = weights;
    return o;
}

int mono_compare(const MonomialPool& pool, const MonomialOrdering& ord, MonoId a, MonoId b) {
    if (a == b) return 0;
    if (ord.kind == OrderKind::weighted) {
        std::uint64_t wa = pool.wdegree(a);
        std::uint64_t wb = pool.wdegree(b);
        if (wa != wb) return wa < wb ? -1 : 1;
    }
    std::uint32_t da = pool.degree(a);
    std::uint32_t db = pool.degree(b);
    if (da != db) return da < db ? -1 : 1;
    const Exp* ea = pool.exps(a);
    const Exp* eb = pool.exps(b);
    // Reverse lexicographic: at the least significant differing variable,
    // the smaller exponent wins.
    const std::size_t n = ord.rank.size();
    for (std::size_t k = n; k-- > 0;) {
        std::uint32_t v = ord.rank[k];
        if (ea[v] != eb[v]) return ea[v] < eb[v] ? 1 : -1;
    }
    return 0;
}

} // namespace identgb
