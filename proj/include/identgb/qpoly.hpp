#ifndef IDENTGB_QPOLY_HPP
#define IDENTGB_QPOLY_HPP

#include "identgb/errors.hpp"
#include "identgb/symtab.hpp"

#include <gmpxx.h>

#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

namespace identgb {

using Rat = mpq_class;
using Int = mpz_class;

/// Sparse monomial: (symbol, exponent) pairs sorted by symbol id, exponents > 0.
using QMono = std::vector<std::pair<SymId, std::uint32_t>>;

/// Lexicographic order with lower-id symbols more significant (x0 > x1 > ...).
/// Admissible (1 minimal, multiplicative), which makes leading-term based
/// exact division sound.
int qmono_cmp(const QMono& a, const QMono& b);

struct QMonoLess {
    bool operator()(const QMono& a, const QMono& b) const { return qmono_cmp(a, b) < 0; }
};

QMono qmono_mul(const QMono& a, const QMono& b);
/// a / b, or nullopt when b does not divide a.
std::optional<QMono> qmono_div(const QMono& a, const QMono& b);
std::uint32_t qmono_deg(const QMono& m);

/// Multivariate polynomial with exact rational coefficients.
///
/// Terms live in a std::map keyed by QMono, so iteration order (and thus
/// printing, leading terms, and hashes of behavior) is canonical.
class QPoly {
  public:
    using TermMap = std::map<QMono, Rat, QMonoLess>;

    QPoly() = default;
    static QPoly zero() { return QPoly(); }
    static QPoly constant(const Rat& c);
    static QPoly variable(SymId s, std::uint32_t exp = 1);

    bool is_zero() const { return terms_.empty(); }
    bool is_constant() const;
    /// Constant term (zero if absent).
    Rat constant_term() const;
    std::size_t term_count() const { return terms_.size(); }
    const TermMap& terms() const { return terms_; }

    /// Largest monomial under the canonical order.
    const QMono& leading_mono() const;
    const Rat& leading_coeff() const;
    std::uint32_t total_degree() const;

    void add_term(const QMono& m, const Rat& c);

    QPoly operator-() const;
    QPoly operator+(const QPoly& o) const;
    QPoly operator-(const QPoly& o) const;
    QPoly operator*(const QPoly& o) const;
    QPoly& operator+=(const QPoly& o);
    QPoly& operator-=(const QPoly& o);
    bool operator==(const QPoly& o) const { return terms_ == o.terms_; }
    bool operator!=(const QPoly& o) const { return !(*this == o); }

    QPoly mul_scalar(const Rat& c) const;
    QPoly pow(std::uint32_t k) const;

    /// Partial derivative with respect to symbol s.
    QPoly derivative(SymId s) const;

    /// Exact polynomial evaluation at a (total) assignment.
    Rat eval(const std::map<SymId, Rat>& point) const;

    /// Substitute symbol -> polynomial (used for jet prolongation and
    /// weighted variable substitution at the rational layer).
    QPoly substitute(SymId s, const QPoly& repl) const;

    /// All symbols occurring with nonzero exponent.
    std::set<SymId> support() const;
    bool mentions(SymId s) const;

    /// gcd of coefficient absolute values (positive; 0 for the zero poly).
    Rat content() const;
    /// Componentwise-min exponent vector over all terms.
    QMono monomial_content() const;

    /// Exact division; nullopt if not divisible.
    std::optional<QPoly> div_exact(const QPoly& divisor) const;

    QPoly div_by_mono(const QMono& m) const;

  private:
    TermMap terms_;
};

QPoly operator*(const Rat& c, const QPoly& p);

/// gcd over Q as used for fraction normalization: exact when one argument
/// divides the other or they share monomial/content factors; falls back to 1.
/// Full multivariate gcd is intentionally not attempted here — the Lie
/// pipeline cancels the model's known denominator factors instead.
QPoly qpoly_gcd_light(const QPoly& a, const QPoly& b);

} // namespace identgb

#endif
