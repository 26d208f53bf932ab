#include "identgb/sysgen.hpp"

#include <algorithm>
#include <random>
#include <set>

namespace identgb {

namespace {

/// Builds jet equations on demand:
///   y-equation(j, k)  : D^k( y_j - cleared g_j )            (defines y_j^(k))
///   state_equation(i,k): D^(k-1)( den_i * x_i' - num_i )    (defines x_i^(k))
///   z-equation(k)      : D^k( z * Q_out - 1 )               (defines z^(k))
class JetSystemBuilder {
  public:
    explicit JetSystemBuilder(const Model& m) : m_(m) {
        for (const auto& [y, g] : m_.outputs) {
            if (!g.is_polynomial()) {
                need_zaux_ = true;
                bool dup = false;
                for (const QPoly& q : zfactors_)
                    if (q == g.den()) dup = true;
                if (!dup) zfactors_.push_back(g.den());
            }
        }
        if (need_zaux_) {
            // Reuse the aux symbol across builders on the same table; the
            // factor set is deterministic so the semantics agree.
            if (auto existing = m_.table.find_aux()) {
                zsym_ = *existing;
            } else {
                std::string name = "z_aux";
                while (m_.table.contains(name)) name += "x";
                zsym_ = m_.table.declare(name, SymKind::aux);
            }
            zprod_ = QPoly::constant(1);
            for (const QPoly& q : zfactors_) zprod_ = zprod_ * q;
        }
    }

    const Model& model() const { return m_; }
    std::optional<SymId> zaux() const { return zsym_; }
    const QPoly& zaux_product() const { return zprod_; }

    const QPoly& y_equation(std::size_t j, std::uint32_t k) {
        auto& chain = yeq_[j];
        if (chain.empty()) {
            const auto& [ysym, g] = m_.outputs.at(j);
            QPoly e = QPoly::variable(ysym);
            if (g.is_polynomial()) {
                e -= g.num().mul_scalar(1 / g.den().constant_term());
            } else {
                QPoly cofactor = *zprod_.div_exact(g.den());
                e -= g.num() * QPoly::variable(*zsym_) * cofactor;
            }
            chain.push_back(std::move(e));
        }
        while (chain.size() <= k) chain.push_back(total_derivative(chain.back(), m_.table));
        return chain[k];
    }

    const QPoly& state_equation(SymId state, std::uint32_t k) {
        if (k < 1) throw invariant_error("state_equation needs order >= 1");
        auto& chain = steq_[state];
        if (chain.empty()) {
            const RationalExpr& f = m_.odes.at(state);
            QPoly e = f.den() * QPoly::variable(m_.table.jet(state, 1)) - f.num();
            chain.push_back(std::move(e));
        }
        while (chain.size() < k) chain.push_back(total_derivative(chain.back(), m_.table));
        return chain[k - 1];
    }

    const QPoly& z_equation(std::uint32_t k) {
        if (!zsym_) throw invariant_error("model has no z_aux");
        if (zeq_.empty()) zeq_.push_back(QPoly::variable(*zsym_) * zprod_ - QPoly::constant(1));
        while (zeq_.size() <= k) zeq_.push_back(total_derivative(zeq_.back(), m_.table));
        return zeq_[k];
    }

  private:
    Model m_;
    bool need_zaux_ = false;
    std::optional<SymId> zsym_;
    std::vector<QPoly> zfactors_;
    QPoly zprod_;
    std::map<std::size_t, std::vector<QPoly>> yeq_;
    std::map<SymId, std::vector<QPoly>> steq_;
    std::vector<QPoly> zeq_;
};

} // namespace

ProlongedSystem prolong(const Model& m, const std::vector<std::uint32_t>& bounds) {
    if (bounds.size() != m.outputs.size())
        throw invariant_error("prolong: one bound per output expected");
    JetSystemBuilder builder(m);
    const SymbolTable& tab = builder.model().table;

    std::map<SymId, std::uint32_t> state_need; // state -> highest jet order required
    std::uint32_t z_need = 0;
    std::uint32_t input_need = 0;

    auto scan = [&](const QPoly& e, bool& changed) {
        for (SymId s : e.support()) {
            const SymInfo info = tab.info(s);
            if (info.kind == SymKind::state && info.order > 0) {
                auto [it, inserted] = state_need.try_emplace(info.base, info.order);
                if (!inserted && it->second < info.order) {
                    it->second = info.order;
                    changed = true;
                } else if (inserted) {
                    changed = true;
                }
            } else if (info.kind == SymKind::aux && info.order > z_need) {
                z_need = info.order;
                changed = true;
            } else if (info.kind == SymKind::input && info.order > input_need) {
                input_need = info.order;
            }
        }
    };

    bool changed = true;
    for (std::size_t j = 0; j < m.outputs.size(); ++j)
        for (std::uint32_t k = 0; k <= bounds[j]; ++k) scan(builder.y_equation(j, k), changed);

    // Defining equations pull in jets of their own; iterate to a fixpoint.
    while (changed) {
        changed = false;
        for (auto& [state, order] : state_need)
            for (std::uint32_t k = 1; k <= order; ++k) scan(builder.state_equation(state, k), changed);
        if (builder.zaux())
            for (std::uint32_t k = 0; k <= z_need; ++k) scan(builder.z_equation(k), changed);
    }

    ProlongedSystem ps;
    ps.model = builder.model();
    ps.orders = bounds;
    ps.state_orders = state_need;
    ps.zaux = builder.zaux();
    ps.zaux_product = builder.zaux_product();
    ps.zaux_order = z_need;
    ps.max_input_order = input_need;
    for (std::size_t j = 0; j < m.outputs.size(); ++j)
        for (std::uint32_t k = 0; k <= bounds[j]; ++k) ps.equations.push_back(builder.y_equation(j, k));
    if (ps.zaux)
        for (std::uint32_t k = 0; k <= z_need; ++k) ps.equations.push_back(builder.z_equation(k));
    for (SymId s : m.states) {
        auto it = state_need.find(s);
        if (it == state_need.end()) continue;
        for (std::uint32_t k = 1; k <= it->second; ++k) ps.equations.push_back(builder.state_equation(s, k));
    }
    return ps;
}

Sample sample_point(const Model& m, std::uint64_t seed, std::uint32_t prime,
                    const std::map<std::string, std::uint64_t>& overrides, std::uint32_t max_input_order) {
    if (!is_prime_u32(prime)) throw parse_error("p = " + std::to_string(prime) + " is not prime");
    Fp field(prime);
    for (const auto& [name, v] : overrides)
        if (!m.table.contains(name)) throw parse_error("override for unknown symbol " + name);

    std::mt19937_64 rng(seed);
    auto draw = [&rng]() { return Rat(static_cast<unsigned long>(1 + (rng() % (1u << 20)))); };

    std::vector<SymId> slots;
    for (SymId s : m.states) slots.push_back(s);
    for (SymId p : m.params) slots.push_back(p);
    for (SymId u : m.inputs)
        for (std::uint32_t k = 0; k <= max_input_order; ++k) slots.push_back(m.table.jet(u, k));

    Sample out;
    out.prime = prime;
    out.seed = seed;

    const std::vector<QPoly> dens = m.denominator_factors();
    for (std::uint32_t attempt = 0;; ++attempt) {
        if (attempt > 32) throw invariant_error("sampling retry budget exhausted (structurally vanishing denominator?)");
        out.values.clear();
        for (SymId s : slots) {
            auto ov = overrides.find(m.table.name(s));
            if (ov != overrides.end())
                out.values[s] = Rat(static_cast<unsigned long>(ov->second));
            else
                out.values[s] = draw();
        }
        bool ok = true;
        for (const QPoly& d : dens) {
            if (field.from_rat(d.eval(out.values)) == 0) {
                ok = false;
                break;
            }
        }
        if (ok) {
            out.retries_used = attempt;
            return out;
        }
    }
}

namespace {

/// Solves the triangular jet system value by value. P = A*v + B with v the
/// defining jet, A free of v; memoized.
template <typename Ops>
class ForwardEvaluator {
  public:
    using V = typename Ops::Value;

    ForwardEvaluator(const ProlongedSystem& ps, Ops ops) : ps_(ps), ops_(std::move(ops)) {}

    void seed(SymId s, V v) { values_.emplace(s, std::move(v)); }

    V eval_poly(const QPoly& p) {
        V acc = ops_.from_rat(Rat(0));
        for (const auto& [mono, coeff] : p.terms()) {
            V t = ops_.from_rat(coeff);
            for (const auto& [s, e] : mono)
                for (std::uint32_t i = 0; i < e; ++i) t = ops_.mul(t, value_of(s));
            acc = ops_.add(acc, t);
        }
        return acc;
    }

    /// Value of the jet defined by `eq` (linear occurrence).
    V solve(const QPoly& eq, SymId target) {
        QPoly a = eq.derivative(target);
        if (a.mentions(target)) throw invariant_error("defining equation not linear in its jet");
        QPoly b = eq.substitute(target, QPoly::zero());
        V av = eval_poly(a);
        if (ops_.is_zero(av)) throw invariant_error("degenerate: leading coefficient vanished");
        return ops_.neg(ops_.div(eval_poly(b), av));
    }

    V value_of(SymId s) {
        auto it = values_.find(s);
        if (it != values_.end()) return it->second;
        const SymInfo info = ps_.model.table.info(s);
        V v = [&] {
            if (info.kind == SymKind::aux) return solve(zaux_equation(info.order), s);
            if (info.kind == SymKind::state && info.order > 0)
                return solve(defining_equation(info.base, info.order), s);
            throw invariant_error("forward evaluation: unseeded symbol " + info.name);
        }();
        values_.emplace(s, v);
        return values_.at(s);
    }

  private:
    const QPoly& defining_equation(SymId base, std::uint32_t order) {
        auto key = std::make_pair(base, order);
        auto it = steq_.find(key);
        if (it != steq_.end()) return it->second;
        if (order == 1) {
            const RationalExpr& f = ps_.model.odes.at(base);
            QPoly e = f.den() * QPoly::variable(ps_.model.table.jet(base, 1)) - f.num();
            return steq_.emplace(key, std::move(e)).first->second;
        }
        QPoly e = total_derivative(defining_equation(base, order - 1), ps_.model.table);
        return steq_.emplace(key, std::move(e)).first->second;
    }

    const QPoly& zaux_equation(std::uint32_t order) {
        auto it = zeq_.find(order);
        if (it != zeq_.end()) return it->second;
        if (order == 0) {
            QPoly e = QPoly::variable(*ps_.zaux) * ps_.zaux_product - QPoly::constant(1);
            return zeq_.emplace(0, std::move(e)).first->second;
        }
        QPoly e = total_derivative(zaux_equation(order - 1), ps_.model.table);
        return zeq_.emplace(order, std::move(e)).first->second;
    }

    const ProlongedSystem& ps_;
    Ops ops_;
    std::map<SymId, V> values_;
    std::map<std::pair<SymId, std::uint32_t>, QPoly> steq_;
    std::map<std::uint32_t, QPoly> zeq_;
};

struct RatOps {
    using Value = Rat;
    Rat from_rat(const Rat& q) const { return q; }
    Rat add(const Rat& a, const Rat& b) const { return a + b; }
    Rat mul(const Rat& a, const Rat& b) const { return a * b; }
    Rat div(const Rat& a, const Rat& b) const { return a / b; }
    Rat neg(const Rat& a) const { return -a; }
    bool is_zero(const Rat& a) const { return a == 0; }
};

/// Residue with gradient w.r.t. the unknowns (x*, mu) over F_p.
struct FpDualOps {
    Fp field;
    std::size_t n;

    struct Value {
        std::uint32_t v;
        std::vector<std::uint32_t> g;
    };

    Value from_rat(const Rat& q) const { return {field.from_rat(q), std::vector<std::uint32_t>(n, 0)}; }
    Value unit(std::uint32_t v, std::size_t idx) const {
        Value out{v, std::vector<std::uint32_t>(n, 0)};
        out.g[idx] = 1;
        return out;
    }
    Value known(std::uint32_t v) const { return {v, std::vector<std::uint32_t>(n, 0)}; }

    Value add(const Value& a, const Value& b) const {
        Value out{field.add(a.v, b.v), a.g};
        for (std::size_t i = 0; i < n; ++i) out.g[i] = field.add(a.g[i], b.g[i]);
        return out;
    }
    Value mul(const Value& a, const Value& b) const {
        Value out{field.mul(a.v, b.v), std::vector<std::uint32_t>(n, 0)};
        for (std::size_t i = 0; i < n; ++i)
            out.g[i] = field.add(field.mul(a.g[i], b.v), field.mul(a.v, b.g[i]));
        return out;
    }
    Value div(const Value& a, const Value& b) const {
        if (b.v == 0) throw invariant_error("degenerate: division by zero residue");
        std::uint32_t inv_b = field.inv(b.v);
        std::uint32_t q = field.mul(a.v, inv_b);
        Value out{q, std::vector<std::uint32_t>(n, 0)};
        // (a/b)' = (a' - q b') / b
        for (std::size_t i = 0; i < n; ++i)
            out.g[i] = field.mul(field.sub(a.g[i], field.mul(q, b.g[i])), inv_b);
        return out;
    }
    Value neg(const Value& a) const {
        Value out{field.neg(a.v), a.g};
        for (std::size_t i = 0; i < n; ++i) out.g[i] = field.neg(a.g[i]);
        return out;
    }
    bool is_zero(const Value& a) const { return a.v == 0; }
};

} // namespace

OutputValues compute_output_values(const ProlongedSystem& ps, const Sample& s) {
    Fp field(s.prime);
    ForwardEvaluator<RatOps> ev(ps, RatOps{});
    for (const auto& [sym, v] : s.values) ev.seed(sym, v);

    OutputValues out;
    const Model& m = ps.model;
    out.exact.resize(m.outputs.size());
    out.residues.resize(m.outputs.size());
    JetSystemBuilder builder(m); // same construction as prolong()
    for (std::size_t j = 0; j < m.outputs.size(); ++j) {
        for (std::uint32_t k = 0; k <= ps.orders[j]; ++k) {
            const QPoly& e = builder.y_equation(j, k);
            SymId yk = m.table.jet(m.outputs[j].first, k);
            Rat v = ev.solve(e, yk);
            ev.seed(yk, v);
            out.exact[j].push_back(v);
            out.residues[j].push_back(field.from_rat(v));
        }
    }
    return out;
}

SpecializedSystem specialize(const ProlongedSystem& ps, const OutputValues& yhat, const Sample& s) {
    const Model& m = ps.model;
    Fp field(s.prime);

    SpecializedSystem sys;
    sys.model_name = m.name;
    sys.prime = s.prime;
    sys.seed = s.seed;
    sys.yhat = yhat.residues;

    // Universe: per state its jets 0..order, z_aux jets, then parameters.
    std::set<std::string> used_names;
    auto add_var = [&](SymId sym, const std::string& base, std::uint32_t order, bool is_param) {
        std::string name = order == 0 ? base : base + "_" + std::to_string(order);
        while (used_names.count(name)) name += "_v";
        used_names.insert(name);
        sys.var_index.emplace(sym, static_cast<std::uint32_t>(sys.vars.size()));
        sys.var_syms.push_back(sym);
        sys.vars.push_back(VarInfo{name, base, order, is_param});
    };
    for (SymId st : m.states) {
        std::uint32_t hi = 0;
        auto it = ps.state_orders.find(st);
        if (it != ps.state_orders.end()) hi = it->second;
        for (std::uint32_t k = 0; k <= hi; ++k) add_var(m.table.jet(st, k), m.table.name(st), k, false);
    }
    if (ps.zaux)
        for (std::uint32_t k = 0; k <= ps.zaux_order; ++k)
            add_var(m.table.jet(*ps.zaux, k), m.table.name(*ps.zaux), k, false);
    for (SymId p : m.params) add_var(p, m.table.name(p), 0, true);

    sys.pool = std::make_shared<MonomialPool>(sys.vars.size());
    sys.ordering = make_diff_degrevlex(sys.vars);

    // Known values: y jets and input jets become constants.
    std::map<SymId, std::uint32_t> known;
    for (std::size_t j = 0; j < m.outputs.size(); ++j)
        for (std::uint32_t k = 0; k < yhat.residues[j].size(); ++k)
            known.emplace(m.table.jet(m.outputs[j].first, k), yhat.residues[j][k]);
    for (SymId u : m.inputs)
        for (std::uint32_t k = 0; k <= ps.max_input_order; ++k) {
            SymId uj = m.table.jet(u, k);
            auto it = s.values.find(uj);
            if (it == s.values.end()) throw invariant_error("missing sampled input jet value");
            known.emplace(uj, field.from_rat(it->second));
        }

    GBEngine engine(field, sys.pool, sys.ordering);
    for (const QPoly& e : ps.equations) {
        std::vector<std::pair<MonoId, std::uint32_t>> terms;
        for (const auto& [mono, coeff] : e.terms()) {
            std::uint32_t c = field.from_rat(coeff);
            std::vector<Exp> exps(sys.vars.size(), 0);
            for (const auto& [sym, ex] : mono) {
                auto kv = known.find(sym);
                if (kv != known.end()) {
                    c = field.mul(c, field.pow(kv->second, ex));
                    continue;
                }
                auto vi = sys.var_index.find(sym);
                if (vi == sys.var_index.end())
                    throw invariant_error("specialize: missing yhat value for " + m.table.name(sym));
                exps[vi->second] = static_cast<Exp>(ex);
            }
            if (c != 0) terms.emplace_back(sys.pool->intern(exps), c);
        }
        FpPoly f = engine.normalize(std::move(terms));
        if (!f.is_zero()) sys.polynomials.push_back(std::move(f));
    }

    // Consistency witness: the sampled point solves every polynomial mod p.
    {
        ForwardEvaluator<RatOps> ev(ps, RatOps{});
        for (const auto& [sym, v] : s.values) ev.seed(sym, v);
        sys.solution.resize(sys.vars.size());
        for (std::size_t i = 0; i < sys.var_syms.size(); ++i)
            sys.solution[i] = field.from_rat(ev.value_of(sys.var_syms[i]));
        for (const FpPoly& f : sys.polynomials) {
            std::uint64_t acc = 0;
            for (const auto& [mono, c] : f.terms) {
                std::uint64_t t = c;
                const Exp* e = sys.pool->exps(mono);
                for (std::size_t v = 0; v < sys.vars.size(); ++v)
                    if (e[v]) t = t * field.pow(sys.solution[v], e[v]) % s.prime;
                acc = (acc + t) % s.prime;
            }
            if (acc != 0) throw invariant_error("specialized system does not vanish at the sampled point");
        }
    }
    return sys;
}

std::vector<std::uint32_t> universe_weights(const SpecializedSystem& sys, const WeightMap& w, const Model& m) {
    std::vector<std::uint32_t> out(sys.vars.size(), 1);
    for (std::size_t i = 0; i < sys.var_syms.size(); ++i) {
        const SymInfo info = m.table.info(sys.var_syms[i]);
        if (info.kind == SymKind::aux)
            out[i] = w.zaux_weight;
        else
            out[i] = w.weight_of(sys.var_syms[i], m.table);
    }
    return out;
}

namespace {

/// Jacobian rows of the output derivatives w.r.t. (x*, mu) at the sample.
struct JacobianRows {
    std::vector<SymId> unknowns;
    std::vector<std::vector<std::uint32_t>> rows; // grouped by derivative order k, outputs cycling
    bool degenerate = false;
};

JacobianRows jacobian_rows(const Model& m, const Sample& s, const std::vector<std::uint32_t>& bounds) {
    JacobianRows out;
    for (SymId st : m.states) out.unknowns.push_back(st);
    for (SymId p : m.params) out.unknowns.push_back(p);

    FpDualOps ops{Fp(s.prime), out.unknowns.size()};
    // A dummy prolonged system wrapper: equations are built lazily by the
    // evaluator, so a zero-bounds shell is enough.
    ProlongedSystem shell;
    shell.model = m;
    {
        // mirror the z_aux setup of prolong()
        JetSystemBuilder b(m);
        shell.model = b.model();
        shell.zaux = b.zaux();
        shell.zaux_product = b.zaux_product();
    }
    ForwardEvaluator<FpDualOps> ev(shell, ops);
    std::size_t idx = 0;
    for (SymId u : out.unknowns) ev.seed(u, ops.unit(ops.field.from_rat(s.values.at(u)), idx++));
    for (SymId u : m.inputs) {
        for (const auto& [sym, v] : s.values) {
            const SymInfo info = m.table.info(sym);
            if (info.kind == SymKind::input && info.base == u) ev.seed(sym, ops.known(ops.field.from_rat(v)));
        }
    }

    JetSystemBuilder builder(shell.model);
    std::uint32_t kmax = 0;
    for (std::uint32_t b : bounds) kmax = std::max(kmax, b);
    try {
        for (std::uint32_t k = 0; k <= kmax; ++k) {
            for (std::size_t j = 0; j < m.outputs.size(); ++j) {
                if (k > bounds[j]) continue;
                const QPoly& e = builder.y_equation(j, k);
                SymId yk = shell.model.table.jet(m.outputs[j].first, k);
                auto v = ev.solve(e, yk);
                ev.seed(yk, v);
                out.rows.push_back(v.g);
            }
        }
    } catch (const invariant_error&) {
        out.degenerate = true;
    }
    return out;
}

std::uint32_t rank_mod_p(std::vector<std::vector<std::uint32_t>> rows, const Fp& field,
                         std::optional<std::size_t> skip_col = std::nullopt) {
    if (rows.empty()) return 0;
    std::size_t ncols = rows[0].size();
    std::uint32_t rank = 0;
    std::size_t rpos = 0;
    for (std::size_t c = 0; c < ncols && rpos < rows.size(); ++c) {
        if (skip_col && *skip_col == c) continue;
        std::size_t pivot = rows.size();
        for (std::size_t r = rpos; r < rows.size(); ++r)
            if (rows[r][c] != 0) {
                pivot = r;
                break;
            }
        if (pivot == rows.size()) continue;
        std::swap(rows[rpos], rows[pivot]);
        std::uint32_t inv = field.inv(rows[rpos][c]);
        for (std::size_t r = rpos + 1; r < rows.size(); ++r) {
            if (rows[r][c] == 0) continue;
            std::uint32_t f = field.mul(rows[r][c], inv);
            for (std::size_t cc = c; cc < ncols; ++cc)
                rows[r][cc] = field.sub(rows[r][cc], field.mul(f, rows[rpos][cc]));
        }
        ++rpos;
        ++rank;
    }
    return rank;
}

} // namespace

LocalIdentResult jacobian_local_identifiability(const Model& m, const Sample& s,
                                                const std::vector<std::uint32_t>& bounds) {
    LocalIdentResult out;
    JacobianRows jr = jacobian_rows(m, s, bounds);
    if (jr.degenerate) {
        out.degenerate = true;
        return out;
    }
    Fp field(s.prime);
    out.rank = rank_mod_p(jr.rows, field);
    for (std::size_t c = 0; c < jr.unknowns.size(); ++c) {
        std::uint32_t r = rank_mod_p(jr.rows, field, c);
        if (r < out.rank) out.locally_identifiable.push_back(jr.unknowns[c]);
    }
    return out;
}

std::vector<std::uint32_t> auto_prolongation_bounds(const Model& m, const Sample& s) {
    Fp field(s.prime);
    std::size_t nunknowns = m.states.size() + m.params.size();
    std::uint32_t cap = static_cast<std::uint32_t>(nunknowns) + 2;
    std::uint32_t prev_rank = 0;
    std::uint32_t kstar = cap;
    for (std::uint32_t k = 1; k <= cap; ++k) {
        std::vector<std::uint32_t> bounds(m.outputs.size(), k);
        JacobianRows jr = jacobian_rows(m, s, bounds);
        if (jr.degenerate) throw invariant_error("degenerate sample in bound selection");
        std::uint32_t r = rank_mod_p(jr.rows, field);
        if (r == prev_rank) {
            kstar = k - 1;
            break;
        }
        prev_rank = r;
    }
    // One extra order of safety beyond the stabilized rank.
    std::uint32_t bound = kstar + 1;
    return std::vector<std::uint32_t>(m.outputs.size(), bound);
}

} // namespace identgb
