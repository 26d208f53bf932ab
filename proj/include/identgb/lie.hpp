#ifndef IDENTGB_LIE_HPP
#define IDENTGB_LIE_HPP

#include "identgb/model.hpp"

#include <vector>

namespace identgb {

/// Lie derivative of h along the model vector field:
///   sum_i f_i * dh/dx_i + sum_j u_j' * dh/du_j,
/// parameters treated as constants. Input symbols may occur in h as jets of
/// any order; the derivative bumps them by one. The result is normalized
/// with the model's denominator factors cancelled.
RationalExpr lie_derivative(const RationalExpr& h, const Model& m);

/// [g_j, L(g_j), ..., L^k(g_j)] for output index y_index.
std::vector<RationalExpr> lie_iterate(std::size_t y_index, std::uint32_t k, const Model& m);

/// Total derivative on jet polynomials: each jet of order i maps to order
/// i+1, parameters map to 0, extended by the Leibniz rule.
QPoly total_derivative(const QPoly& p, const SymbolTable& tab);

} // namespace identgb

#endif
