#include "identgb/lie.hpp"

namespace identgb {

RationalExpr lie_derivative(const RationalExpr& h, const Model& m) {
    RationalExpr acc;
    for (SymId s : h.support()) {
        const SymInfo info = m.table.info(s);
        switch (info.kind) {
            case SymKind::param:
                break;
            case SymKind::state: {
                if (info.order != 0)
                    throw invariant_error("state jets cannot occur in closed-form Lie input");
                acc = acc + m.odes.at(s) * h.derivative(s);
                break;
            }
            case SymKind::input: {
                SymId next = m.table.jet(info.base, info.order + 1);
                acc = acc + RationalExpr::variable(next) * h.derivative(s);
                break;
            }
            default:
                throw parse_error("symbol " + info.name + " not declared in model");
        }
    }
    acc.cancel_known_factors(m.denominator_factors());
    return acc;
}

std::vector<RationalExpr> lie_iterate(std::size_t y_index, std::uint32_t k, const Model& m) {
    if (y_index >= m.outputs.size())
        throw parse_error("invalid output index " + std::to_string(y_index));
    std::vector<RationalExpr> out;
    out.reserve(k + 1);
    out.push_back(m.outputs[y_index].second);
    for (std::uint32_t i = 0; i < k; ++i) out.push_back(lie_derivative(out.back(), m));
    return out;
}

QPoly total_derivative(const QPoly& p, const SymbolTable& tab) {
    QPoly out;
    for (SymId s : p.support()) {
        const SymInfo info = tab.info(s);
        if (info.kind == SymKind::param) continue;
        SymId next = tab.jet(info.base, info.order + 1);
        out += p.derivative(s) * QPoly::variable(next);
    }
    return out;
}

} // namespace identgb
