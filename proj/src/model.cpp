#include "identgb/model.hpp"

#include <algorithm>
#include <cctype>
#include <set>
#include <sstream>

namespace identgb {

namespace {

struct Token {
    enum Kind { ident, number, op, end } kind;
    std::string text;
    int line, col;
};

class Lexer {
  public:
    Lexer(const std::string& s, int line) : s_(s), line_(line) {}

    Token next() {
        skip_ws();
        int col = static_cast<int>(pos_) + 1;
        if (pos_ >= s_.size()) return {Token::end, "", line_, col};
        char c = s_[pos_];
        if (std::isalpha(static_cast<unsigned char>(c))) {
            std::size_t start = pos_;
            while (pos_ < s_.size() &&
                   (std::isalnum(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '_'))
                ++pos_;
            return {Token::ident, s_.substr(start, pos_ - start), line_, col};
        }
        if (std::isdigit(static_cast<unsigned char>(c))) {
            std::size_t start = pos_;
            while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
            return {Token::number, s_.substr(start, pos_ - start), line_, col};
        }
        static const std::string ops = "+-*/^()',=";
        if (ops.find(c) != std::string::npos) {
            ++pos_;
            return {Token::op, std::string(1, c), line_, col};
        }
        throw parse_error(std::string("unexpected character '") + c + "'", line_, col);
    }

  private:
    void skip_ws() {
        while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    }
    const std::string& s_;
    std::size_t pos_ = 0;
    int line_;
};

class ExprParser {
  public:
    ExprParser(const std::string& text, const SymbolTable& table, bool allow_jets, int line)
      : lex_(text, line), table_(table), allow_jets_(allow_jets), line_(line) {
        advance();
    }

    RationalExpr parse() {
        RationalExpr e = expr();
        if (cur_.kind != Token::end) throw parse_error("trailing input '" + cur_.text + "'", line_, cur_.col);
        return e;
    }

    /// Top-level additive terms, signs folded in.
    std::vector<RationalExpr> parse_terms() {
        std::vector<RationalExpr> out;
        bool neg = false;
        while (true) {
            if (accept_op("-"))
                neg = !neg;
            else if (accept_op("+"))
                ;
            else
                break;
        }
        RationalExpr first = term();
        out.push_back(neg ? -first : first);
        while (cur_.kind == Token::op && (cur_.text == "+" || cur_.text == "-")) {
            bool minus = cur_.text == "-";
            advance();
            RationalExpr t = term();
            out.push_back(minus ? -t : t);
        }
        if (cur_.kind != Token::end) throw parse_error("trailing input '" + cur_.text + "'", line_, cur_.col);
        return out;
    }

  private:
    void advance() { cur_ = lex_.next(); }

    bool accept_op(const char* o) {
        if (cur_.kind == Token::op && cur_.text == o) {
            advance();
            return true;
        }
        return false;
    }

    void expect_op(const char* o) {
        if (!accept_op(o)) throw parse_error(std::string("expected '") + o + "'", line_, cur_.col);
    }

    RationalExpr expr() {
        bool neg = false;
        while (true) {
            if (accept_op("-"))
                neg = !neg;
            else if (accept_op("+"))
                ;
            else
                break;
        }
        RationalExpr acc = term();
        if (neg) acc = -acc;
        while (cur_.kind == Token::op && (cur_.text == "+" || cur_.text == "-")) {
            bool minus = cur_.text == "-";
            advance();
            RationalExpr rhs = term();
            acc = minus ? acc - rhs : acc + rhs;
        }
        return acc;
    }

    RationalExpr term() {
        RationalExpr acc = factor();
        while (cur_.kind == Token::op && (cur_.text == "*" || cur_.text == "/")) {
            bool div = cur_.text == "/";
            advance();
            RationalExpr rhs = factor();
            if (div && rhs.is_zero()) throw parse_error("division by zero", line_, cur_.col);
            acc = div ? acc / rhs : acc * rhs;
        }
        return acc;
    }

    RationalExpr factor() {
        if (accept_op("-")) return -factor();
        if (accept_op("+")) return factor();
        RationalExpr base = primary();
        if (cur_.kind == Token::op && cur_.text == "^") {
            advance();
            bool parens = accept_op("(");
            if (cur_.kind != Token::number)
                throw parse_error("exponent must be a non-negative integer", line_, cur_.col);
            unsigned long k = std::stoul(cur_.text);
            advance();
            if (parens) {
                expect_op(")");
                if (allow_jets_ && pending_jet_base_) {
                    // ident^(k) in jet-aware contexts is the k-th derivative
                    SymId j = table_.jet(*pending_jet_base_, static_cast<std::uint32_t>(k));
                    pending_jet_base_.reset();
                    return RationalExpr::variable(j);
                }
            }
            pending_jet_base_.reset();
            return base.pow(static_cast<std::uint32_t>(k));
        }
        pending_jet_base_.reset();
        return base;
    }

    RationalExpr primary() {
        pending_jet_base_.reset();
        if (accept_op("(")) {
            RationalExpr e = expr();
            expect_op(")");
            return e;
        }
        if (cur_.kind == Token::number) {
            Rat c(cur_.text);
            advance();
            return RationalExpr::constant(c);
        }
        if (cur_.kind == Token::ident) {
            std::string name = cur_.text;
            int col = cur_.col;
            advance();
            if (name == "diff" && allow_jets_ && cur_.kind == Token::op && cur_.text == "(") {
                advance();
                if (cur_.kind != Token::ident) throw parse_error("diff() expects a symbol", line_, cur_.col);
                SymId base = lookup(cur_.text, cur_.col);
                advance();
                expect_op(",");
                if (cur_.kind != Token::number) throw parse_error("diff() expects an order", line_, cur_.col);
                std::uint32_t k = static_cast<std::uint32_t>(std::stoul(cur_.text));
                advance();
                expect_op(")");
                return RationalExpr::variable(table_.jet(base, k));
            }
            SymId id = lookup(name, col);
            std::uint32_t primes = 0;
            while (cur_.kind == Token::op && cur_.text == "'") {
                ++primes;
                advance();
            }
            if (primes > 0) {
                if (!allow_jets_) throw parse_error("derivative not allowed here", line_, col);
                return RationalExpr::variable(table_.jet(id, primes));
            }
            pending_jet_base_ = id;
            return RationalExpr::variable(id);
        }
        throw parse_error("expected expression", line_, cur_.col);
    }

    SymId lookup(const std::string& name, int col) {
        if (!table_.contains(name)) throw parse_error("undeclared symbol " + name, line_, col);
        return table_.id_of(name);
    }

    Lexer lex_;
    Token cur_{};
    const SymbolTable& table_;
    bool allow_jets_;
    int line_;
    std::optional<SymId> pending_jet_base_;
};

std::string trim(const std::string& s) {
    std::size_t a = s.find_first_not_of(" \t\r");
    if (a == std::string::npos) return "";
    std::size_t b = s.find_last_not_of(" \t\r");
    return s.substr(a, b - a + 1);
}

bool valid_ident(const std::string& s) {
    if (s.empty() || !std::isalpha(static_cast<unsigned char>(s[0]))) return false;
    return std::all_of(s.begin(), s.end(), [](unsigned char c) { return std::isalnum(c) || c == '_'; });
}

std::vector<std::string> split_idents(const std::string& s, int line) {
    std::vector<std::string> out;
    std::stringstream ss(s);
    std::string item;
    while (std::getline(ss, item, ',')) {
        item = trim(item);
        if (!valid_ident(item)) throw parse_error("invalid identifier '" + item + "'", line, 1);
        out.push_back(item);
    }
    if (out.empty()) throw parse_error("empty declaration list", line, 1);
    return out;
}

} // namespace

bool Model::is_state(SymId s) const { return std::find(states.begin(), states.end(), s) != states.end(); }
bool Model::is_param(SymId s) const { return std::find(params.begin(), params.end(), s) != params.end(); }
bool Model::is_input(SymId s) const { return std::find(inputs.begin(), inputs.end(), s) != inputs.end(); }

std::vector<QPoly> Model::denominator_factors() const {
    std::vector<QPoly> out;
    auto add = [&out](const QPoly& d) {
        if (d.is_constant()) return;
        for (const QPoly& q : out)
            if (q == d) return;
        out.push_back(d);
    };
    for (const auto& [s, f] : odes) add(f.den());
    for (const auto& [y, g] : outputs) add(g.den());
    return out;
}

RationalExpr parse_expression(const std::string& text, const SymbolTable& table, bool allow_jets) {
    return ExprParser(text, table, allow_jets, 0).parse();
}

Model parse_model(const std::string& text) {
    Model m;
    bool saw_model_line = false;

    // Statements are lines; ';' separates statements within a line.
    std::vector<std::pair<int, std::string>> stmts;
    {
        std::stringstream ss(text);
        std::string raw;
        int lineno = 0;
        while (std::getline(ss, raw)) {
            ++lineno;
            std::size_t hash = raw.find('#');
            if (hash != std::string::npos) raw = raw.substr(0, hash);
            std::stringstream parts(raw);
            std::string stmt;
            while (std::getline(parts, stmt, ';')) {
                stmt = trim(stmt);
                if (!stmt.empty()) stmts.emplace_back(lineno, stmt);
            }
        }
    }

    for (const auto& [lineno, stmt] : stmts) {
        std::stringstream ls(stmt);
        std::string head;
        ls >> head;
        std::string rest = trim(stmt.substr(head.size() < stmt.size() ? head.size() : stmt.size()));

        if (head == "model") {
            if (saw_model_line) throw parse_error("duplicate model line", lineno, 1);
            if (!valid_ident(rest)) throw parse_error("invalid model name '" + rest + "'", lineno, 1);
            m.name = rest;
            saw_model_line = true;
        } else if (head == "states" || head == "params" || head == "inputs") {
            SymKind kind = head == "states" ? SymKind::state : head == "params" ? SymKind::param : SymKind::input;
            for (const std::string& id : split_idents(rest, lineno)) {
                SymId s = m.table.declare(id, kind);
                if (kind == SymKind::state) m.states.push_back(s);
                if (kind == SymKind::param) m.params.push_back(s);
                if (kind == SymKind::input) m.inputs.push_back(s);
            }
        } else if (head == "output") {
            std::size_t eq = rest.find('=');
            if (eq == std::string::npos) throw parse_error("output line needs '='", lineno, 1);
            std::string yname = trim(rest.substr(0, eq));
            if (!valid_ident(yname)) throw parse_error("invalid output name '" + yname + "'", lineno, 1);
            RationalExpr g = ExprParser(rest.substr(eq + 1), m.table, false, lineno).parse();
            SymId y = m.table.declare(yname, SymKind::output);
            m.outputs.emplace_back(y, std::move(g));
        } else {
            // <state>' = <expr>
            std::size_t eq = stmt.find('=');
            if (eq == std::string::npos) throw parse_error("unrecognized statement '" + stmt + "'", lineno, 1);
            std::string lhs = trim(stmt.substr(0, eq));
            if (lhs.size() < 2 || lhs.back() != '\'')
                throw parse_error("left-hand side must be <state>'", lineno, 1);
            std::string sname = trim(lhs.substr(0, lhs.size() - 1));
            if (!m.table.contains(sname)) throw parse_error("undeclared symbol " + sname, lineno, 1);
            SymId s = m.table.id_of(sname);
            if (m.table.kind(s) != SymKind::state)
                throw parse_error("'" + sname + "' is not a state", lineno, 1);
            if (m.odes.count(s)) throw parse_error("duplicate ODE for state " + sname, lineno, 1);
            m.odes.emplace(s, ExprParser(stmt.substr(eq + 1), m.table, false, lineno).parse());
        }
    }

    if (!saw_model_line) throw parse_error("missing 'model <name>' line", 1, 1);
    validate_model(m);
    return m;
}

void validate_model(const Model& m) {
    std::set<SymId> declared(m.states.begin(), m.states.end());
    declared.insert(m.params.begin(), m.params.end());
    declared.insert(m.inputs.begin(), m.inputs.end());

    for (SymId s : m.states)
        if (!m.odes.count(s)) throw parse_error("state " + m.table.name(s) + " has no ODE");
    for (const auto& [s, f] : m.odes) {
        if (!m.is_state(s)) throw parse_error("ODE given for non-state " + m.table.name(s));
        for (SymId v : f.support())
            if (!declared.count(v))
                throw parse_error("undeclared symbol " + m.table.name(v) + " in ODE of " + m.table.name(s));
        if (f.den().is_zero()) throw parse_error("zero denominator in ODE of " + m.table.name(s));
    }
    std::set<SymId> outs;
    for (const auto& [y, g] : m.outputs) {
        if (declared.count(y))
            throw parse_error("output " + m.table.name(y) + " collides with a declared symbol");
        if (!outs.insert(y).second) throw parse_error("duplicate output " + m.table.name(y));
        for (SymId v : g.support())
            if (!declared.count(v))
                throw parse_error("undeclared symbol " + m.table.name(v) + " in output " + m.table.name(y));
        if (g.den().is_zero()) throw parse_error("zero denominator in output " + m.table.name(y));
    }
}

namespace {

std::string sym_display(const SymbolTable& tab, SymId s, ExprStyle style) {
    const SymInfo info = tab.info(s);
    if (info.order == 0) return info.name;
    std::string base = tab.name(info.base);
    if (style == ExprStyle::machine) return "diff(" + base + "," + std::to_string(info.order) + ")";
    if (info.order <= 3) return base + std::string(info.order, '\'');
    return base + "^(" + std::to_string(info.order) + ")";
}

std::string rat_str(const Rat& c) {
    std::ostringstream os;
    os << c;
    return os.str();
}

} // namespace

std::string print_qpoly(const QPoly& p, const SymbolTable& tab, ExprStyle style) {
    if (p.is_zero()) return "0";
    std::string out;
    // Leading term first.
    for (auto it = p.terms().rbegin(); it != p.terms().rend(); ++it) {
        const auto& [m, c] = *it;
        Rat ac = c < 0 ? Rat(-c) : c;
        std::string term;
        bool coeff_one = ac == 1;
        if (!coeff_one || m.empty()) term += rat_str(ac);
        for (const auto& [s, e] : m) {
            if (!term.empty()) term += "*";
            term += sym_display(tab, s, style);
            if (e > 1) term += "^" + std::to_string(e);
        }
        if (out.empty())
            out = (c < 0 ? "-" : "") + term;
        else
            out += (c < 0 ? " - " : " + ") + term;
    }
    return out;
}

std::string print_ratexpr(const RationalExpr& e, const SymbolTable& tab, ExprStyle style) {
    if (e.is_polynomial()) return print_qpoly(e.num(), tab, style);
    std::string num = print_qpoly(e.num(), tab, style);
    std::string den = print_qpoly(e.den(), tab, style);
    return "(" + num + ")/(" + den + ")";
}

std::string print_model(const Model& m) {
    std::ostringstream os;
    os << "model " << m.name << "\n";
    auto list = [&](const char* head, const std::vector<SymId>& ids) {
        if (ids.empty()) return;
        os << head << " ";
        for (std::size_t i = 0; i < ids.size(); ++i) os << (i ? ", " : "") << m.table.name(ids[i]);
        os << "\n";
    };
    list("states", m.states);
    list("params", m.params);
    list("inputs", m.inputs);
    for (SymId s : m.states)
        os << m.table.name(s) << "' = " << print_ratexpr(m.odes.at(s), m.table) << "\n";
    for (const auto& [y, g] : m.outputs)
        os << "output " << m.table.name(y) << " = " << print_ratexpr(g, m.table) << "\n";
    return os.str();
}

} // namespace identgb
