#include "identgb/groebner.hpp"

#include <algorithm>
#include <queue>
#include <unordered_map>

namespace identgb {

MonoId FpPoly::leading_mono() const {
    if (terms.empty()) throw invariant_error("leading monomial of zero polynomial");
    return terms.front().first;
}

std::uint32_t FpPoly::leading_coeff() const {
    if (terms.empty()) throw invariant_error("leading coefficient of zero polynomial");
    return terms.front().second;
}

GBEngine::GBEngine(Fp field, std::shared_ptr<MonomialPool> pool, MonomialOrdering ord)
  : field_(field), pool_(std::move(pool)), ord_(std::move(ord)) {
    if (ord_.kind == OrderKind::weighted && !pool_->has_weights())
        pool_->set_weights(ord_.weights);
}

void GBEngine::check_deadline(const Deadline& d, const char* stage) const {
    if (d && std::chrono::steady_clock::now() > *d) throw timeout_error(stage);
}

FpPoly GBEngine::normalize(std::vector<std::pair<MonoId, std::uint32_t>> terms) const {
    std::sort(terms.begin(), terms.end(),
              [this](const auto& a, const auto& b) { return compare(a.first, b.first) > 0; });
    FpPoly out;
    out.terms.reserve(terms.size());
    for (const auto& [m, c] : terms) {
        std::uint32_t cc = c % field_.prime();
        if (!out.terms.empty() && out.terms.back().first == m) {
            std::uint32_t s = field_.add(out.terms.back().second, cc);
            if (s == 0)
                out.terms.pop_back();
            else
                out.terms.back().second = s;
        } else if (cc != 0) {
            out.terms.emplace_back(m, cc);
        }
    }
    return out;
}

FpPoly GBEngine::make_monic(FpPoly f) const {
    if (f.is_zero()) return f;
    std::uint32_t lc = f.terms.front().second;
    if (lc == 1) return f;
    std::uint32_t ilc = field_.inv(lc);
    for (auto& [m, c] : f.terms) c = field_.mul(c, ilc);
    return f;
}

FpPoly GBEngine::mul_term(const FpPoly& f, MonoId m, std::uint32_t c) {
    FpPoly out;
    out.terms.reserve(f.terms.size());
    for (const auto& [fm, fc] : f.terms) out.terms.emplace_back(pool_->mul(fm, m), field_.mul(fc, c));
    return out;
}

FpPoly GBEngine::spoly(const FpPoly& f, const FpPoly& g) {
    if (f.is_zero() || g.is_zero()) throw invariant_error("spoly of zero polynomial");
    MonoId l = pool_->lcm(f.leading_mono(), g.leading_mono());
    MonoId uf = *pool_->div(l, f.leading_mono());
    MonoId ug = *pool_->div(l, g.leading_mono());
    // (l/LT(f)) f - (l/LT(g)) g, normalized so both products are monic.
    FpPoly a = mul_term(f, uf, field_.inv(f.leading_coeff()));
    FpPoly b = mul_term(g, ug, field_.inv(g.leading_coeff()));
    // Merge a - b (both sorted descending, equal leading monomial cancels).
    std::vector<std::pair<MonoId, std::uint32_t>> merged;
    merged.reserve(a.terms.size() + b.terms.size());
    std::size_t i = 0, j = 0;
    while (i < a.terms.size() || j < b.terms.size()) {
        if (j == b.terms.size()) {
            merged.push_back(a.terms[i++]);
        } else if (i == a.terms.size()) {
            merged.emplace_back(b.terms[j].first, field_.neg(b.terms[j].second));
            ++j;
        } else {
            int cmp = compare(a.terms[i].first, b.terms[j].first);
            if (cmp > 0)
                merged.push_back(a.terms[i++]);
            else if (cmp < 0) {
                merged.emplace_back(b.terms[j].first, field_.neg(b.terms[j].second));
                ++j;
            } else {
                std::uint32_t c = field_.sub(a.terms[i].second, b.terms[j].second);
                if (c != 0) merged.emplace_back(a.terms[i].first, c);
                ++i;
                ++j;
            }
        }
    }
    FpPoly out;
    out.terms = std::move(merged);
    return out;
}

FpPoly GBEngine::normal_form(const FpPoly& f, const std::vector<FpPoly>& basis) {
    FpPoly rem;
    FpPoly work = f;
    while (!work.is_zero()) {
        auto [m, c] = work.terms.front();
        const FpPoly* reducer = nullptr;
        for (const FpPoly& g : basis) {
            if (!g.is_zero() && pool_->divides(g.leading_mono(), m)) {
                reducer = &g;
                break;
            }
        }
        if (reducer == nullptr) {
            rem.terms.emplace_back(m, c);
            work.terms.erase(work.terms.begin());
            continue;
        }
        MonoId u = *pool_->div(m, reducer->leading_mono());
        std::uint32_t factor = field_.div(c, reducer->leading_coeff());
        // work -= factor * u * reducer
        FpPoly sub = mul_term(*reducer, u, factor);
        std::vector<std::pair<MonoId, std::uint32_t>> merged;
        merged.reserve(work.terms.size() + sub.terms.size());
        std::size_t i = 0, j = 0;
        while (i < work.terms.size() || j < sub.terms.size()) {
            if (j == sub.terms.size()) {
                merged.push_back(work.terms[i++]);
            } else if (i == work.terms.size()) {
                merged.emplace_back(sub.terms[j].first, field_.neg(sub.terms[j].second));
                ++j;
            } else {
                int cmp = compare(work.terms[i].first, sub.terms[j].first);
                if (cmp > 0)
                    merged.push_back(work.terms[i++]);
                else if (cmp < 0) {
                    merged.emplace_back(sub.terms[j].first, field_.neg(sub.terms[j].second));
                    ++j;
                } else {
                    std::uint32_t cc = field_.sub(work.terms[i].second, sub.terms[j].second);
                    if (cc != 0) merged.emplace_back(work.terms[i].first, cc);
                    ++i;
                    ++j;
                }
            }
        }
        work.terms = std::move(merged);
    }
    return rem;
}

std::vector<FpPoly> GBEngine::reduce_basis(std::vector<FpPoly> basis) {
    basis.erase(std::remove_if(basis.begin(), basis.end(), [](const FpPoly& f) { return f.is_zero(); }),
                basis.end());
    for (FpPoly& f : basis) f = make_monic(std::move(f));
    // Interreduce to a fixpoint: each element fully reduced against the
    // rest, zero remainders dropped. On a Groebner basis this yields the
    // unique reduced basis; it also absorbs redundant generators.
    bool changed = true;
    while (changed) {
        changed = false;
        for (std::size_t i = 0; i < basis.size();) {
            std::vector<FpPoly> others;
            others.reserve(basis.size() - 1);
            for (std::size_t j = 0; j < basis.size(); ++j)
                if (j != i) others.push_back(basis[j]);
            FpPoly r = make_monic(normal_form(basis[i], others));
            if (r.is_zero()) {
                basis.erase(basis.begin() + static_cast<std::ptrdiff_t>(i));
                changed = true;
            } else {
                if (!(r == basis[i])) changed = true;
                basis[i] = std::move(r);
                ++i;
            }
        }
    }
    std::sort(basis.begin(), basis.end(),
              [this](const FpPoly& a, const FpPoly& b) { return compare(a.leading_mono(), b.leading_mono()) > 0; });
    return basis;
}

void GBEngine::gm_update(std::vector<Pair>& pairs, const std::vector<FpPoly>& basis, std::vector<bool>& redundant,
                         std::uint32_t t) {
    MonoId lt = basis[t].leading_mono();

    // Candidate pairs (i, t) for active i.
    struct Cand {
        std::uint32_t i;
        MonoId lcm;
        bool coprime;
    };
    std::vector<Cand> cands;
    for (std::uint32_t i = 0; i < t; ++i) {
        if (redundant[i]) continue;
        MonoId li = basis[i].leading_mono();
        cands.push_back({i, pool_->lcm(li, lt), pool_->coprime(li, lt)});
    }

    // Criterion M: drop (i, t) when another candidate's lcm properly
    // divides its lcm; criterion F: keep one candidate per lcm value.
    std::vector<bool> drop(cands.size(), false);
    for (std::size_t a = 0; a < cands.size(); ++a) {
        if (drop[a]) continue;
        for (std::size_t b = 0; b < cands.size(); ++b) {
            if (a == b || drop[a]) continue;
            if (cands[b].lcm == cands[a].lcm) {
                if (b < a && !drop[b]) drop[a] = true;
            } else if (!drop[b] && pool_->divides(cands[b].lcm, cands[a].lcm)) {
                drop[a] = true;
            }
        }
    }
    // Buchberger's first criterion: coprime leading monomials reduce to 0.
    for (std::size_t a = 0; a < cands.size(); ++a)
        if (cands[a].coprime) drop[a] = true;

    // Criterion B on old pairs: (i, j) is superfluous once lt divides
    // lcm(i, j) strictly finer than both mixed lcms.
    std::vector<Pair> kept;
    kept.reserve(pairs.size());
    for (const Pair& p : pairs) {
        MonoId lij = p.lcm;
        if (pool_->divides(lt, lij) && pool_->lcm(basis[p.i].leading_mono(), lt) != lij &&
            pool_->lcm(basis[p.j].leading_mono(), lt) != lij)
            continue;
        kept.push_back(p);
    }
    pairs = std::move(kept);

    for (std::size_t a = 0; a < cands.size(); ++a) {
        if (drop[a]) continue;
        pairs.push_back(Pair{cands[a].i, t, cands[a].lcm, formal_degree(cands[a].lcm)});
    }

    // Newly dominated basis elements stop spawning pairs.
    for (std::uint32_t i = 0; i < t; ++i) {
        if (redundant[i]) continue;
        if (pool_->divides(lt, basis[i].leading_mono()) && basis[i].leading_mono() != lt) redundant[i] = true;
    }
}

GroebnerBasis GBEngine::buchberger(const std::vector<FpPoly>& sys, Deadline deadline) {
    std::vector<FpPoly> basis;
    std::vector<bool> redundant;
    std::vector<Pair> pairs;
    for (const FpPoly& f : sys) {
        if (f.is_zero()) continue;
        basis.push_back(make_monic(f));
        redundant.push_back(false);
        gm_update(pairs, basis, redundant, static_cast<std::uint32_t>(basis.size()) - 1);
    }
    if (basis.empty()) throw invariant_error("buchberger: empty input system");

    while (!pairs.empty()) {
        check_deadline(deadline, "buchberger");
        // Deterministic normal-ish selection: smallest formal degree first.
        std::size_t best = 0;
        for (std::size_t k = 1; k < pairs.size(); ++k) {
            const Pair& a = pairs[k];
            const Pair& b = pairs[best];
            if (a.fdeg != b.fdeg ? a.fdeg < b.fdeg
                                 : (a.lcm != b.lcm ? compare(a.lcm, b.lcm) < 0
                                                   : (a.i != b.i ? a.i < b.i : a.j < b.j)))
                best = k;
        }
        Pair p = pairs[best];
        pairs.erase(pairs.begin() + static_cast<std::ptrdiff_t>(best));
        FpPoly s = spoly(basis[p.i], basis[p.j]);
        FpPoly r = normal_form(s, basis);
        if (r.is_zero()) continue;
        basis.push_back(make_monic(r));
        redundant.push_back(false);
        gm_update(pairs, basis, redundant, static_cast<std::uint32_t>(basis.size()) - 1);
    }

    std::vector<FpPoly> active;
    for (std::size_t i = 0; i < basis.size(); ++i)
        if (!redundant[i]) active.push_back(basis[i]);
    GroebnerBasis out;
    out.polynomials = reduce_basis(active);
    out.ordering = ord_;
    out.reduced = true;
    return out;
}

std::pair<GroebnerBasis, F4Stats> GBEngine::f4(const std::vector<FpPoly>& sys, Deadline deadline) {
    F4Stats stats;
    std::vector<FpPoly> basis;
    std::vector<bool> redundant;
    std::vector<Pair> pairs;
    for (const FpPoly& f : sys) {
        if (f.is_zero()) continue;
        basis.push_back(make_monic(f));
        redundant.push_back(false);
        gm_update(pairs, basis, redundant, static_cast<std::uint32_t>(basis.size()) - 1);
    }
    if (basis.empty()) throw invariant_error("f4: empty input system");

    // Dense accumulator with generation-stamped laziness, reused per row.
    std::vector<std::uint64_t> buf;
    std::vector<std::uint32_t> buf_gen;
    std::uint32_t gen = 0;
    const std::uint64_t p = field_.prime();

    while (!pairs.empty()) {
        check_deadline(deadline, "f4");
        stats.iterations += 1;

        // Normal strategy: all pairs of minimal formal degree.
        std::uint64_t dmin = pairs[0].fdeg;
        for (const Pair& q : pairs) dmin = std::min(dmin, q.fdeg);
        std::vector<Pair> batch;
        std::vector<Pair> rest;
        for (const Pair& q : pairs)
            (q.fdeg == dmin ? batch : rest).push_back(q);
        pairs = std::move(rest);
        std::sort(batch.begin(), batch.end(), [this](const Pair& a, const Pair& b) {
            if (a.lcm != b.lcm) return compare(a.lcm, b.lcm) < 0;
            return a.i != b.i ? a.i < b.i : a.j < b.j;
        });
        stats.max_pairs_selected = std::max(stats.max_pairs_selected, std::uint64_t(batch.size()));
        stats.total_spolys += batch.size();

        // S-polynomial rows (leading terms pre-cancelled).
        std::vector<FpPoly> srows;
        srows.reserve(batch.size());
        for (const Pair& q : batch) srows.push_back(spoly(basis[q.i], basis[q.j]));

        // Symbolic preprocessing: one reducer row per reducible monomial.
        std::unordered_map<MonoId, std::uint32_t> mono_state; // 1 = queued, 2 = done
        std::vector<MonoId> todo;
        auto enqueue = [&](MonoId m) {
            auto [it, inserted] = mono_state.try_emplace(m, 1u);
            if (inserted) todo.push_back(m);
        };
        for (const FpPoly& s : srows)
            for (const auto& [m, c] : s.terms) enqueue(m);
        std::vector<FpPoly> reducers;
        while (!todo.empty()) {
            check_deadline(deadline, "f4 preprocessing");
            MonoId m = todo.back();
            todo.pop_back();
            const FpPoly* g = nullptr;
            for (std::size_t i = 0; i < basis.size(); ++i) {
                if (redundant[i]) continue;
                if (pool_->divides(basis[i].leading_mono(), m)) {
                    g = &basis[i];
                    break;
                }
            }
            if (g == nullptr) continue;
            FpPoly row = mul_term(*g, *pool_->div(m, g->leading_mono()), field_.inv(g->leading_coeff()));
            for (const auto& [mm, cc] : row.terms) enqueue(mm);
            reducers.push_back(std::move(row));
        }

        // Column layout: all seen monomials, most significant first.
        std::vector<MonoId> cols;
        cols.reserve(mono_state.size());
        for (const auto& [m, st] : mono_state) cols.push_back(m);
        std::sort(cols.begin(), cols.end(), [this](MonoId a, MonoId b) { return compare(a, b) > 0; });
        std::unordered_map<MonoId, std::uint32_t> col_of;
        col_of.reserve(cols.size());
        for (std::uint32_t c = 0; c < cols.size(); ++c) col_of.emplace(cols[c], c);

        stats.matrix_dims.emplace_back(srows.size() + reducers.size(), cols.size());

        // Pivot rows keyed by leading column; reducers are echelon by
        // construction (distinct leading monomials).
        std::vector<std::vector<std::pair<std::uint32_t, std::uint32_t>>> pivot_rows;
        std::vector<std::int32_t> pivot_at(cols.size(), -1);
        auto install_pivot = [&](const FpPoly& f) {
            std::vector<std::pair<std::uint32_t, std::uint32_t>> row;
            row.reserve(f.terms.size());
            for (const auto& [m, c] : f.terms) row.emplace_back(col_of.at(m), c);
            std::uint32_t lead = row.front().first;
            if (pivot_at[lead] != -1) throw invariant_error("duplicate pivot column");
            pivot_at[lead] = static_cast<std::int32_t>(pivot_rows.size());
            pivot_rows.push_back(std::move(row));
        };
        for (const FpPoly& r : reducers) install_pivot(r);

        if (buf.size() < cols.size()) {
            buf.resize(cols.size());
            buf_gen.resize(cols.size(), 0);
        }

        std::vector<FpPoly> new_polys;
        for (const FpPoly& s : srows) {
            check_deadline(deadline, "f4 reduction");
            ++gen;
            std::priority_queue<std::uint32_t, std::vector<std::uint32_t>, std::greater<>> heap;
            auto touch = [&](std::uint32_t c, std::uint64_t add) {
                if (buf_gen[c] != gen) {
                    buf_gen[c] = gen;
                    buf[c] = 0;
                    heap.push(c);
                }
                buf[c] = (buf[c] + add) % p;
            };
            for (const auto& [m, c] : s.terms) touch(col_of.at(m), c);

            std::vector<std::pair<std::uint32_t, std::uint32_t>> result;
            while (!heap.empty()) {
                std::uint32_t c = heap.top();
                heap.pop();
                if (!heap.empty() && heap.top() == c) continue; // duplicate entry
                std::uint64_t v = buf[c];
                if (v == 0) continue;
                if (pivot_at[c] >= 0) {
                    const auto& prow = pivot_rows[static_cast<std::size_t>(pivot_at[c])];
                    std::uint64_t factor = p - v; // prow is monic
                    for (const auto& [pc, pv] : prow) {
                        if (pc == c) {
                            buf[c] = 0;
                            continue;
                        }
                        touch(pc, factor * pv % p);
                    }
                } else {
                    result.emplace_back(c, static_cast<std::uint32_t>(v));
                }
            }
            if (result.empty()) {
                stats.zero_reductions += 1;
                continue;
            }
            FpPoly f;
            f.terms.reserve(result.size());
            for (const auto& [c, v] : result) f.terms.emplace_back(cols[c], v);
            f = make_monic(f);
            install_pivot(f);
            new_polys.push_back(std::move(f));
        }

        for (FpPoly& f : new_polys) {
            basis.push_back(std::move(f));
            redundant.push_back(false);
            gm_update(pairs, basis, redundant, static_cast<std::uint32_t>(basis.size()) - 1);
        }
    }

    std::vector<FpPoly> active;
    for (std::size_t i = 0; i < basis.size(); ++i)
        if (!redundant[i]) active.push_back(basis[i]);
    GroebnerBasis out;
    out.polynomials = reduce_basis(active);
    out.ordering = ord_;
    out.reduced = true;
    return {out, stats};
}

bool GBEngine::is_groebner_basis(const std::vector<FpPoly>& basis) {
    for (std::size_t i = 0; i < basis.size(); ++i)
        for (std::size_t j = i + 1; j < basis.size(); ++j) {
            if (pool_->coprime(basis[i].leading_mono(), basis[j].leading_mono())) continue;
            FpPoly s = spoly(basis[i], basis[j]);
            if (!normal_form(s, basis).is_zero()) return false;
        }
    return true;
}

std::vector<FpPoly> GBEngine::apply_weight_substitution(const std::vector<FpPoly>& sys,
                                                        const std::vector<std::uint32_t>& weights) {
    if (weights.size() != pool_->nvars()) throw invariant_error("weight vector size mismatch");
    std::vector<FpPoly> out;
    out.reserve(sys.size());
    for (const FpPoly& f : sys) {
        std::vector<std::pair<MonoId, std::uint32_t>> terms;
        terms.reserve(f.terms.size());
        for (const auto& [m, c] : f.terms) terms.emplace_back(pool_->weight_substitute(m, weights), c);
        out.push_back(normalize(std::move(terms)));
    }
    return out;
}

bool GBEngine::is_homogeneous(const FpPoly& f) const {
    if (f.is_zero()) return true;
    std::uint32_t d = pool_->degree(f.terms.front().first);
    for (const auto& [m, c] : f.terms)
        if (pool_->degree(m) != d) return false;
    return true;
}

} // namespace identgb
