#ifndef IDENTGB_GROEBNER_HPP
#define IDENTGB_GROEBNER_HPP

#include "identgb/modp.hpp"
#include "identgb/monomial.hpp"

#include <chrono>
#include <memory>
#include <optional>
#include <utility>
#include <vector>

namespace identgb {

/// Polynomial over F_p: (monomial, coefficient) terms with coefficients in
/// [1, p), strictly sorted descending under the active ordering.
struct FpPoly {
    std::vector<std::pair<MonoId, std::uint32_t>> terms;

    bool is_zero() const { return terms.empty(); }
    MonoId leading_mono() const;
    std::uint32_t leading_coeff() const;
    bool operator==(const FpPoly& o) const { return terms == o.terms; }
};

/// Work counters of one F4 run.
struct F4Stats {
    std::uint64_t iterations = 0;
    std::uint64_t max_pairs_selected = 0; ///< peak batch size chosen by the normal strategy
    std::uint64_t zero_reductions = 0;    ///< S-rows that reduced to the zero row
    std::uint64_t total_spolys = 0;
    std::vector<std::pair<std::uint64_t, std::uint64_t>> matrix_dims; ///< (rows, cols) per round
};

struct GroebnerBasis {
    std::vector<FpPoly> polynomials;
    MonomialOrdering ordering;
    bool reduced = false;
};

using Deadline = std::optional<std::chrono::steady_clock::time_point>;

/// Shared context (field, monomial pool, ordering) plus the algorithms.
/// One engine instance runs sequentially; independent engines are
/// independent.
class GBEngine {
  public:
    GBEngine(Fp field, std::shared_ptr<MonomialPool> pool, MonomialOrdering ord);

    const Fp& field() const { return field_; }
    MonomialPool& pool() const { return *pool_; }
    const MonomialOrdering& ordering() const { return ord_; }

    int compare(MonoId a, MonoId b) const { return mono_compare(*pool_, ord_, a, b); }

    /// Sort terms descending, merge duplicates, drop zeros.
    FpPoly normalize(std::vector<std::pair<MonoId, std::uint32_t>> terms) const;
    FpPoly make_monic(FpPoly f) const;

    /// (lcm/LT(f))*f - (lcm/LT(g))*g.
    FpPoly spoly(const FpPoly& f, const FpPoly& g);

    /// Complete multivariate division remainder against `basis`.
    FpPoly normal_form(const FpPoly& f, const std::vector<FpPoly>& basis);

    /// Unique reduced monic basis of the ideal generated by a Groebner
    /// basis (minimalization + tail interreduction). Idempotent.
    std::vector<FpPoly> reduce_basis(std::vector<FpPoly> basis);

    /// Textbook pair-by-pair completion; the correctness oracle.
    GroebnerBasis buchberger(const std::vector<FpPoly>& sys, Deadline deadline = {});

    /// Instrumented F4 with the normal selection strategy; reduced result
    /// agrees with buchberger() on the same input and ordering.
    std::pair<GroebnerBasis, F4Stats> f4(const std::vector<FpPoly>& sys, Deadline deadline = {});

    /// Buchberger certificate: every pairwise S-polynomial reduces to zero.
    bool is_groebner_basis(const std::vector<FpPoly>& basis);

    /// v -> v^w on every polynomial (weights indexed by universe variable).
    std::vector<FpPoly> apply_weight_substitution(const std::vector<FpPoly>& sys,
                                                  const std::vector<std::uint32_t>& weights);

    bool is_homogeneous(const FpPoly& f) const;

  private:
    struct Pair {
        std::uint32_t i, j;
        MonoId lcm;
        std::uint64_t fdeg;
    };

    std::uint64_t formal_degree(MonoId m) const {
        return ord_.kind == OrderKind::weighted ? pool_->wdegree(m) : pool_->degree(m);
    }

    void check_deadline(const Deadline& d, const char* stage) const;
    FpPoly mul_term(const FpPoly& f, MonoId m, std::uint32_t c);
    /// Gebauer-Moller update of the pair queue when basis[t] is appended.
    void gm_update(std::vector<Pair>& pairs, const std::vector<FpPoly>& basis, std::vector<bool>& redundant,
                   std::uint32_t t);

    Fp field_;
    std::shared_ptr<MonomialPool> pool_;
    MonomialOrdering ord_;
};

} // namespace identgb

#endif
