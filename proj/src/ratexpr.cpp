#include "identgb/ratexpr.hpp"

#include <algorithm>

namespace identgb {

RationalExpr::RationalExpr(QPoly num, QPoly den) : num_(std::move(num)), den_(std::move(den)) {
    if (den_.is_zero()) throw parse_error("zero denominator");
    normalize();
}

void RationalExpr::normalize() {
    if (num_.is_zero()) {
        den_ = QPoly::constant(1);
        return;
    }
    // Cancel the shared monomial factor.
    QMono mc_num = num_.monomial_content();
    QMono mc_den = den_.monomial_content();
    QMono shared;
    {
        std::size_t i = 0, j = 0;
        while (i < mc_num.size() && j < mc_den.size()) {
            if (mc_num[i].first < mc_den[j].first)
                ++i;
            else if (mc_den[j].first < mc_num[i].first)
                ++j;
            else {
                shared.emplace_back(mc_num[i].first, std::min(mc_num[i].second, mc_den[j].second));
                ++i;
                ++j;
            }
        }
    }
    if (!shared.empty()) {
        num_ = num_.div_by_mono(shared);
        den_ = den_.div_by_mono(shared);
    }
    // Scale so the denominator is integer-primitive with positive leading
    // coefficient; the numerator absorbs the factor exactly.
    Rat dc = den_.content();
    if (den_.leading_coeff() < 0) dc = -dc;
    den_ = den_.mul_scalar(1 / dc);
    num_ = num_.mul_scalar(1 / dc);
}

RationalExpr RationalExpr::operator+(const RationalExpr& o) const {
    if (den_ == o.den_) return RationalExpr(num_ + o.num_, den_);
    return RationalExpr(num_ * o.den_ + o.num_ * den_, den_ * o.den_);
}

RationalExpr RationalExpr::operator-(const RationalExpr& o) const {
    if (den_ == o.den_) return RationalExpr(num_ - o.num_, den_);
    return RationalExpr(num_ * o.den_ - o.num_ * den_, den_ * o.den_);
}

RationalExpr RationalExpr::operator*(const RationalExpr& o) const {
    return RationalExpr(num_ * o.num_, den_ * o.den_);
}

RationalExpr RationalExpr::operator/(const RationalExpr& o) const {
    if (o.is_zero()) throw parse_error("division by zero expression");
    return RationalExpr(num_ * o.den_, den_ * o.num_);
}

RationalExpr RationalExpr::operator-() const { return RationalExpr(-num_, den_); }

RationalExpr RationalExpr::pow(std::uint32_t k) const {
    return RationalExpr(num_.pow(k), den_.pow(k));
}

bool RationalExpr::operator==(const RationalExpr& o) const {
    // Normal forms are unique up to uncancelled common polynomial factors;
    // cross-multiplication compares the underlying rational functions.
    return (num_ * o.den_) == (o.num_ * den_);
}

RationalExpr RationalExpr::derivative(SymId s) const {
    if (is_polynomial()) {
        Rat c = den_.constant_term();
        return RationalExpr(num_.derivative(s).mul_scalar(1 / c));
    }
    QPoly dn = num_.derivative(s);
    QPoly dd = den_.derivative(s);
    if (dd.is_zero()) return RationalExpr(dn, den_);
    return RationalExpr(dn * den_ - num_ * dd, den_ * den_);
}

Rat RationalExpr::eval(const std::map<SymId, Rat>& point) const {
    Rat d = den_.eval(point);
    if (d == 0) throw invariant_error("denominator vanishes at evaluation point");
    return num_.eval(point) / d;
}

std::set<SymId> RationalExpr::support() const {
    std::set<SymId> out = num_.support();
    for (SymId s : den_.support()) out.insert(s);
    return out;
}

std::vector<RationalExpr> merge_by_denominator(const std::vector<RationalExpr>& terms) {
    std::vector<RationalExpr> out;
    for (const RationalExpr& t : terms) {
        if (t.is_zero()) continue;
        bool merged = false;
        for (RationalExpr& o : out) {
            if (o.den() == t.den()) {
                o = RationalExpr(o.num() + t.num(), o.den());
                merged = true;
                break;
            }
        }
        if (!merged) out.push_back(t);
    }
    out.erase(std::remove_if(out.begin(), out.end(), [](const RationalExpr& e) { return e.is_zero(); }),
              out.end());
    return out;
}

void RationalExpr::cancel_known_factors(const std::vector<QPoly>& factors) {
    bool changed = true;
    while (changed) {
        changed = false;
        for (const QPoly& f : factors) {
            if (f.is_constant()) continue;
            while (true) {
                auto qd = den_.div_exact(f);
                if (!qd) break;
                auto qn = num_.div_exact(f);
                if (!qn) break;
                den_ = *qd;
                num_ = *qn;
                changed = true;
            }
        }
    }
    normalize();
}

} // namespace identgb
