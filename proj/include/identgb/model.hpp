#ifndef IDENTGB_MODEL_HPP
#define IDENTGB_MODEL_HPP

#include "identgb/ratexpr.hpp"
#include "identgb/symtab.hpp"

#include <map>
#include <string>
#include <vector>

namespace identgb {

/// Parsed ODE model in state-space form: x' = f(x, mu, u), y = g(x, mu, u).
struct Model {
    std::string name;
    SymbolTable table;
    std::vector<SymId> states; ///< declaration order
    std::vector<SymId> params;
    std::vector<SymId> inputs;
    std::map<SymId, RationalExpr> odes;                  ///< state -> f_i
    std::vector<std::pair<SymId, RationalExpr>> outputs; ///< (y_j, g_j), declaration order

    /// The written additive form of each right-hand side, fractions merged
    /// by denominator. Level computation scans this form; everything else
    /// uses the combined expressions above.
    std::map<SymId, std::vector<RationalExpr>> ode_terms;
    std::vector<std::vector<RationalExpr>> output_terms;

    bool is_state(SymId s) const;
    bool is_param(SymId s) const;
    bool is_input(SymId s) const;

    /// Distinct nontrivial denominator polynomials of all f_i and g_j.
    std::vector<QPoly> denominator_factors() const;
};

/// Parse the line-oriented model DSL. Lines:
///   model <name>
///   states <id>, <id>, ...      params <id>, ...      inputs <id>, ...
///   <state>' = <rational expression>
///   output <id> = <rational expression>
/// `#` starts a comment; `;` also separates statements. The returned model
/// is validated; symbol order is declaration order.
Model parse_model(const std::string& text);

/// Re-check all Model invariants; throws parse_error naming the first
/// violated one. Idempotent.
void validate_model(const Model& m);

/// Render back to DSL text (stable under parse -> print -> parse).
std::string print_model(const Model& m);

enum class ExprStyle { pretty, machine };

/// Expression printing in DSL syntax. Jets render as primes (pretty) or
/// diff(x,k) (machine).
std::string print_qpoly(const QPoly& p, const SymbolTable& tab, ExprStyle style = ExprStyle::pretty);
std::string print_ratexpr(const RationalExpr& e, const SymbolTable& tab, ExprStyle style = ExprStyle::pretty);

/// Parse a single expression over an existing table. When `allow_jets` is
/// set, x1' and x1^(3) denote jet variables.
RationalExpr parse_expression(const std::string& text, const SymbolTable& table, bool allow_jets = false);

} // namespace identgb

#endif
