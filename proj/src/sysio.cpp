#include "identgb/sysio.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <sstream>

namespace identgb {

std::string print_fppoly(const FpPoly& f, const MonomialPool& pool, const std::vector<VarInfo>& vars,
                         const MonomialOrdering& ord) {
    if (f.is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [m, c] : f.terms) {
        if (!first) os << " + ";
        first = false;
        const Exp* e = pool.exps(m);
        bool wrote = false;
        if (c != 1 || pool.degree(m) == 0) {
            os << c;
            wrote = true;
        }
        for (std::uint32_t pos = 0; pos < ord.rank.size(); ++pos) {
            std::uint32_t v = ord.rank[pos];
            if (e[v] == 0) continue;
            if (wrote) os << "*";
            os << vars[v].name;
            if (e[v] > 1) os << "^" << e[v];
            wrote = true;
        }
    }
    return os.str();
}

std::string emit_system(const SpecializedSystem& sys) {
    std::ostringstream os;
    os << "# system: " << sys.model_name << "\n";
    os << "# prime: " << sys.prime << "\n";
    os << "# seed: " << sys.seed << "\n";
    os << "# variables: ";
    for (std::uint32_t pos = 0; pos < sys.ordering.rank.size(); ++pos)
        os << (pos ? ", " : "") << sys.vars[sys.ordering.rank[pos]].name;
    os << "\n";
    for (const FpPoly& f : sys.polynomials) os << print_fppoly(f, *sys.pool, sys.vars, sys.ordering) << "\n";
    return os.str();
}

namespace {

std::string trim(const std::string& s) {
    std::size_t a = s.find_first_not_of(" \t\r");
    if (a == std::string::npos) return "";
    std::size_t b = s.find_last_not_of(" \t\r");
    return s.substr(a, b - a + 1);
}

/// Expanded-form polynomial over named variables; supports + - * ^ and
/// parenthesized subexpressions.
class PolyTextParser {
  public:
    PolyTextParser(const std::string& s, const std::map<std::string, std::uint32_t>& index, MonomialPool& pool,
                   const Fp& field, int lineno)
      : s_(s), index_(index), pool_(pool), field_(field), line_(lineno) {}

    std::vector<std::pair<MonoId, std::uint32_t>> parse() {
        auto terms = expr();
        skip_ws();
        if (pos_ != s_.size()) throw parse_error("trailing input in polynomial", line_, int(pos_) + 1);
        return terms;
    }

  private:
    using Terms = std::vector<std::pair<MonoId, std::uint32_t>>;

    void skip_ws() {
        while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    }
    bool accept(char c) {
        skip_ws();
        if (pos_ < s_.size() && s_[pos_] == c) {
            ++pos_;
            return true;
        }
        return false;
    }

    Terms expr() {
        bool neg = accept('-');
        if (!neg) accept('+');
        Terms acc = term();
        if (neg) negate(acc);
        while (true) {
            if (accept('+')) {
                Terms t = term();
                acc.insert(acc.end(), t.begin(), t.end());
            } else if (accept('-')) {
                Terms t = term();
                negate(t);
                acc.insert(acc.end(), t.begin(), t.end());
            } else {
                break;
            }
        }
        return acc;
    }

    Terms term() {
        Terms acc = factor();
        while (accept('*')) {
            Terms rhs = factor();
            acc = multiply(acc, rhs);
        }
        return acc;
    }

    Terms factor() {
        Terms base = primary();
        if (accept('^')) {
            skip_ws();
            std::uint64_t k = read_number();
            Terms acc = constant(1);
            for (std::uint64_t i = 0; i < k; ++i) acc = multiply(acc, base);
            return acc;
        }
        return base;
    }

    Terms primary() {
        skip_ws();
        if (pos_ >= s_.size()) throw parse_error("unexpected end of polynomial", line_, int(pos_) + 1);
        if (accept('(')) {
            Terms inner = expr();
            if (!accept(')')) throw parse_error("expected ')'", line_, int(pos_) + 1);
            return inner;
        }
        char c = s_[pos_];
        if (std::isdigit(static_cast<unsigned char>(c))) {
            return constant(field_.from_int(mpz_class(read_digits())));
        }
        if (std::isalpha(static_cast<unsigned char>(c))) {
            std::size_t start = pos_;
            while (pos_ < s_.size() &&
                   (std::isalnum(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '_'))
                ++pos_;
            std::string name = s_.substr(start, pos_ - start);
            auto it = index_.find(name);
            if (it == index_.end()) throw parse_error("unknown variable " + name, line_, int(start) + 1);
            std::vector<Exp> e(pool_.nvars(), 0);
            e[it->second] = 1;
            return {{pool_.intern(e), 1u}};
        }
        throw parse_error(std::string("unexpected character '") + c + "' in polynomial", line_, int(pos_) + 1);
    }

    std::string read_digits() {
        std::size_t start = pos_;
        while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
        return s_.substr(start, pos_ - start);
    }
    std::uint64_t read_number() {
        std::string d = read_digits();
        if (d.empty()) throw parse_error("expected integer", line_, int(pos_) + 1);
        return std::stoull(d);
    }

    Terms constant(std::uint32_t c) {
        if (c == 0) return {};
        return {{pool_.one(), c}};
    }
    void negate(Terms& t) {
        for (auto& [m, c] : t) c = field_.neg(c);
    }
    Terms multiply(const Terms& a, const Terms& b) {
        Terms out;
        out.reserve(a.size() * b.size());
        for (const auto& [ma, ca] : a)
            for (const auto& [mb, cb] : b) out.emplace_back(pool_.mul(ma, mb), field_.mul(ca, cb));
        return out;
    }

    const std::string& s_;
    std::size_t pos_ = 0;
    const std::map<std::string, std::uint32_t>& index_;
    MonomialPool& pool_;
    const Fp& field_;
    int line_;
};

} // namespace

TextSystem parse_system(const std::string& text) {
    TextSystem sys;
    std::vector<std::pair<int, std::string>> poly_lines;
    {
        std::stringstream ss(text);
        std::string raw;
        int lineno = 0;
        while (std::getline(ss, raw)) {
            ++lineno;
            std::string line = trim(raw);
            if (line.empty()) continue;
            if (line[0] == '#') {
                auto starts = [&line](const char* k) { return line.rfind(k, 0) == 0; };
                if (starts("# system:")) sys.name = trim(line.substr(9));
                if (starts("# prime:")) sys.prime = static_cast<std::uint32_t>(std::stoull(trim(line.substr(8))));
                if (starts("# variables:")) {
                    std::stringstream vs(line.substr(12));
                    std::string item;
                    while (std::getline(vs, item, ',')) {
                        item = trim(item);
                        if (!item.empty()) sys.vars.push_back(VarInfo{item, item, 0, false});
                    }
                }
                continue;
            }
            poly_lines.emplace_back(lineno, line);
        }
    }
    if (sys.prime == 0) throw parse_error("missing '# prime:' header");
    if (sys.vars.empty()) throw parse_error("missing '# variables:' header");
    if (!is_prime_u32(sys.prime)) throw parse_error("p = " + std::to_string(sys.prime) + " is not prime");

    sys.pool = std::make_shared<MonomialPool>(sys.vars.size());
    Fp field(sys.prime);
    std::map<std::string, std::uint32_t> index;
    for (std::uint32_t i = 0; i < sys.vars.size(); ++i) index.emplace(sys.vars[i].name, i);

    GBEngine engine(field, sys.pool, make_degrevlex(sys.vars.size()));
    for (const auto& [lineno, line] : poly_lines) {
        PolyTextParser p(line, index, *sys.pool, field, lineno);
        FpPoly f = engine.normalize(p.parse());
        if (!f.is_zero()) sys.polynomials.push_back(std::move(f));
    }
    return sys;
}

std::vector<std::uint32_t> parse_weights_file(const std::string& text, const std::vector<VarInfo>& vars) {
    std::map<std::string, std::uint32_t> by_name;
    std::stringstream ss(text);
    std::string raw;
    int lineno = 0;
    while (std::getline(ss, raw)) {
        ++lineno;
        std::string line = trim(raw);
        if (line.empty() || line[0] == '#') continue;
        std::stringstream ls(line);
        std::string name;
        long w = 0;
        ls >> name >> w;
        if (name.empty() || w < 1) throw parse_error("bad weight line '" + line + "'", lineno, 1);
        by_name[name] = static_cast<std::uint32_t>(w);
    }
    std::vector<std::uint32_t> out(vars.size(), 1);
    for (std::size_t i = 0; i < vars.size(); ++i) {
        auto it = by_name.find(vars[i].name);
        if (it == by_name.end()) it = by_name.find(vars[i].base);
        if (it != by_name.end()) out[i] = it->second;
    }
    return out;
}

} // namespace identgb
