#include "identgb/qpoly.hpp"

#include <algorithm>

namespace identgb {

int qmono_cmp(const QMono& a, const QMono& b) {
    std::size_t i = 0, j = 0;
    while (i < a.size() && j < b.size()) {
        if (a[i].first != b[j].first) {
            // The side owning the lower (more significant) symbol with a
            // positive exponent is larger.
            return a[i].first < b[j].first ? 1 : -1;
        }
        if (a[i].second != b[j].second) return a[i].second > b[j].second ? 1 : -1;
        ++i;
        ++j;
    }
    if (i < a.size()) return 1;
    if (j < b.size()) return -1;
    return 0;
}

QMono qmono_mul(const QMono& a, const QMono& b) {
    QMono out;
    out.reserve(a.size() + b.size());
    std::size_t i = 0, j = 0;
    while (i < a.size() || j < b.size()) {
        if (j == b.size() || (i < a.size() && a[i].first < b[j].first)) {
            out.push_back(a[i++]);
        } else if (i == a.size() || b[j].first < a[i].first) {
            out.push_back(b[j++]);
        } else {
            out.emplace_back(a[i].first, a[i].second + b[j].second);
            ++i;
            ++j;
        }
    }
    return out;
}

std::optional<QMono> qmono_div(const QMono& a, const QMono& b) {
    QMono out;
    std::size_t i = 0;
    for (const auto& [s, e] : b) {
        while (i < a.size() && a[i].first < s) out.push_back(a[i++]);
        if (i == a.size() || a[i].first != s || a[i].second < e) return std::nullopt;
        if (a[i].second > e) out.emplace_back(s, a[i].second - e);
        ++i;
    }
    while (i < a.size()) out.push_back(a[i++]);
    return out;
}

std::uint32_t qmono_deg(const QMono& m) {
    std::uint32_t d = 0;
    for (const auto& [s, e] : m) d += e;
    return d;
}

QPoly QPoly::constant(const Rat& c) {
    QPoly p;
    if (c != 0) p.terms_.emplace(QMono{}, c);
    return p;
}

QPoly QPoly::variable(SymId s, std::uint32_t exp) {
    QPoly p;
    if (exp == 0) return constant(1);
    p.terms_.emplace(QMono{{s, exp}}, Rat(1));
    return p;
}

bool QPoly::is_constant() const {
    return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first.empty());
}

Rat QPoly::constant_term() const {
    auto it = terms_.find(QMono{});
    return it == terms_.end() ? Rat(0) : it->second;
}

const QMono& QPoly::leading_mono() const {
    if (terms_.empty()) throw invariant_error("leading_mono of zero polynomial");
    return terms_.rbegin()->first;
}

const Rat& QPoly::leading_coeff() const {
    if (terms_.empty()) throw invariant_error("leading_coeff of zero polynomial");
    return terms_.rbegin()->second;
}

std::uint32_t QPoly::total_degree() const {
    std::uint32_t d = 0;
    for (const auto& [m, c] : terms_) d = std::max(d, qmono_deg(m));
    return d;
}

void QPoly::add_term(const QMono& m, const Rat& c) {
    if (c == 0) return;
    auto [it, inserted] = terms_.emplace(m, c);
    if (!inserted) {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }
}

QPoly QPoly::operator-() const {
    QPoly out;
    for (const auto& [m, c] : terms_) out.terms_.emplace(m, -c);
    return out;
}

QPoly QPoly::operator+(const QPoly& o) const {
    QPoly out = *this;
    out += o;
    return out;
}

QPoly QPoly::operator-(const QPoly& o) const {
    QPoly out = *this;
    out -= o;
    return out;
}

QPoly& QPoly::operator+=(const QPoly& o) {
    for (const auto& [m, c] : o.terms_) add_term(m, c);
    return *this;
}

QPoly& QPoly::operator-=(const QPoly& o) {
    for (const auto& [m, c] : o.terms_) add_term(m, -c);
    return *this;
}

QPoly QPoly::operator*(const QPoly& o) const {
    QPoly out;
    for (const auto& [m1, c1] : terms_)
        for (const auto& [m2, c2] : o.terms_) out.add_term(qmono_mul(m1, m2), c1 * c2);
    return out;
}

QPoly QPoly::mul_scalar(const Rat& c) const {
    QPoly out;
    if (c == 0) return out;
    for (const auto& [m, cc] : terms_) out.terms_.emplace(m, cc * c);
    return out;
}

QPoly operator*(const Rat& c, const QPoly& p) { return p.mul_scalar(c); }

QPoly QPoly::pow(std::uint32_t k) const {
    QPoly acc = QPoly::constant(1);
    QPoly base = *this;
    while (k > 0) {
        if (k & 1u) acc = acc * base;
        k >>= 1u;
        if (k > 0) base = base * base;
    }
    return acc;
}

QPoly QPoly::derivative(SymId s) const {
    QPoly out;
    for (const auto& [m, c] : terms_) {
        for (std::size_t i = 0; i < m.size(); ++i) {
            if (m[i].first != s) continue;
            QMono dm = m;
            Rat dc = c * Rat(static_cast<long>(m[i].second));
            if (dm[i].second == 1)
                dm.erase(dm.begin() + static_cast<std::ptrdiff_t>(i));
            else
                dm[i].second -= 1;
            out.add_term(dm, dc);
            break;
        }
    }
    return out;
}

Rat QPoly::eval(const std::map<SymId, Rat>& point) const {
    Rat acc(0);
    for (const auto& [m, c] : terms_) {
        Rat t = c;
        for (const auto& [s, e] : m) {
            auto it = point.find(s);
            if (it == point.end()) throw invariant_error("eval: unassigned symbol id " + std::to_string(s));
            Rat v = it->second;
            for (std::uint32_t k = 0; k < e; ++k) t *= v;
        }
        acc += t;
    }
    return acc;
}

QPoly QPoly::substitute(SymId s, const QPoly& repl) const {
    QPoly out;
    for (const auto& [m, c] : terms_) {
        std::uint32_t e = 0;
        QMono rest;
        rest.reserve(m.size());
        for (const auto& [ss, ee] : m) {
            if (ss == s)
                e = ee;
            else
                rest.push_back({ss, ee});
        }
        if (e == 0) {
            out.add_term(m, c);
        } else {
            QPoly factor = repl.pow(e);
            for (const auto& [fm, fc] : factor.terms()) out.add_term(qmono_mul(rest, fm), fc * c);
        }
    }
    return out;
}

std::set<SymId> QPoly::support() const {
    std::set<SymId> out;
    for (const auto& [m, c] : terms_)
        for (const auto& [s, e] : m) out.insert(s);
    return out;
}

bool QPoly::mentions(SymId s) const {
    for (const auto& [m, c] : terms_)
        for (const auto& [ss, e] : m)
            if (ss == s) return true;
    return false;
}

Rat QPoly::content() const {
    if (terms_.empty()) return Rat(0);
    Int num_gcd(0), den_lcm(1);
    for (const auto& [m, c] : terms_) {
        mpz_gcd(num_gcd.get_mpz_t(), num_gcd.get_mpz_t(), c.get_num().get_mpz_t());
        mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), c.get_den().get_mpz_t());
    }
    Rat out(num_gcd, den_lcm);
    out.canonicalize();
    if (out == 0) throw invariant_error("content: zero gcd for nonzero polynomial");
    return out;
}

QMono QPoly::monomial_content() const {
    if (terms_.empty()) return QMono{};
    auto it = terms_.begin();
    QMono acc = it->first;
    ++it;
    for (; it != terms_.end() && !acc.empty(); ++it) {
        const QMono& m = it->first;
        QMono next;
        std::size_t i = 0, j = 0;
        while (i < acc.size() && j < m.size()) {
            if (acc[i].first < m[j].first)
                ++i;
            else if (m[j].first < acc[i].first)
                ++j;
            else {
                next.emplace_back(acc[i].first, std::min(acc[i].second, m[j].second));
                ++i;
                ++j;
            }
        }
        acc = std::move(next);
    }
    return acc;
}

std::optional<QPoly> QPoly::div_exact(const QPoly& divisor) const {
    if (divisor.is_zero()) throw invariant_error("division by zero polynomial");
    QPoly rem = *this;
    QPoly quot;
    const QMono& dlm = divisor.leading_mono();
    const Rat& dlc = divisor.leading_coeff();
    while (!rem.is_zero()) {
        auto q = qmono_div(rem.leading_mono(), dlm);
        if (!q) return std::nullopt;
        Rat c = rem.leading_coeff() / dlc;
        quot.add_term(*q, c);
        QPoly step;
        for (const auto& [m, cc] : divisor.terms()) step.add_term(qmono_mul(*q, m), cc * c);
        rem -= step;
    }
    return quot;
}

QPoly QPoly::div_by_mono(const QMono& m) const {
    QPoly out;
    for (const auto& [mm, c] : terms_) {
        auto q = qmono_div(mm, m);
        if (!q) throw invariant_error("div_by_mono: monomial does not divide a term");
        out.add_term(*q, c);
    }
    return out;
}

QPoly qpoly_gcd_light(const QPoly& a, const QPoly& b) {
    if (a.is_zero() || b.is_zero()) return QPoly::constant(1);
    if (a.div_exact(b)) return b;
    if (b.div_exact(a)) return a;
    return QPoly::constant(1);
}

} // namespace identgb
