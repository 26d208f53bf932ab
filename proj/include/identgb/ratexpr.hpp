#ifndef IDENTGB_RATEXPR_HPP
#define IDENTGB_RATEXPR_HPP

#include "identgb/qpoly.hpp"

#include <set>
#include <vector>

namespace identgb {

/// Quotient of two QPoly with a canonical-enough normal form:
///  - zero numerator forces denominator 1;
///  - the common rational content is removed and the denominator is made
///    integer-primitive with positive leading coefficient;
///  - the common monomial factor is cancelled;
///  - callers may additionally cancel a set of known polynomial factors
///    (the Lie pipeline passes the model's denominator polynomials, which
///    is where repeated factors actually come from).
class RationalExpr {
  public:
    RationalExpr() : num_(QPoly::zero()), den_(QPoly::constant(1)) {}
    RationalExpr(QPoly num, QPoly den);
    explicit RationalExpr(QPoly num) : RationalExpr(std::move(num), QPoly::constant(1)) {}

    static RationalExpr constant(const Rat& c) { return RationalExpr(QPoly::constant(c)); }
    static RationalExpr variable(SymId s) { return RationalExpr(QPoly::variable(s)); }

    const QPoly& num() const { return num_; }
    const QPoly& den() const { return den_; }
    bool is_zero() const { return num_.is_zero(); }
    bool is_polynomial() const { return den_.is_constant(); }

    RationalExpr operator+(const RationalExpr& o) const;
    RationalExpr operator-(const RationalExpr& o) const;
    RationalExpr operator*(const RationalExpr& o) const;
    RationalExpr operator/(const RationalExpr& o) const;
    RationalExpr operator-() const;
    RationalExpr pow(std::uint32_t k) const;
    bool operator==(const RationalExpr& o) const;

    /// Partial derivative via the quotient rule.
    RationalExpr derivative(SymId s) const;

    Rat eval(const std::map<SymId, Rat>& point) const;

    /// Symbols with nonzero exponent in the normalized numerator or
    /// denominator (the occurrence notion behind level assignment).
    std::set<SymId> support() const;

    /// Cancel every factor from `factors` that exactly divides both sides,
    /// then re-normalize. Safe to call with factors that do not divide.
    void cancel_known_factors(const std::vector<QPoly>& factors);

  private:
    void normalize();
    QPoly num_, den_;
};

/// Sum fractions sharing a normalized denominator (the canonical
/// sum-of-fractions form used by the level computation); zero summands are
/// dropped and the order follows first appearance of each denominator.
std::vector<RationalExpr> merge_by_denominator(const std::vector<RationalExpr>& terms);

} // namespace identgb

#endif
