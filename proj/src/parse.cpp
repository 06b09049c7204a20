#include "symlog/parse.hpp"

#include "symlog/error.hpp"

#include <cctype>
#include <set>
#include <sstream>
#include <vector>

namespace symlog {

namespace {

struct Token {
    enum class Kind { Ident, Sym, End };
    Kind kind = Kind::End;
    std::string text;
    size_t pos = 0;
};

const std::set<std::string> kSymReserved = {"inl", "inr"};
const std::set<std::string> kLmmReserved = {"mu", "mut", "bar", "tilde"};

std::vector<Token> lex(const std::string& src) {
    std::vector<Token> out;
    size_t i = 0;
    const size_t n = src.size();
    while (i < n) {
        char c = src[i];
        if (std::isspace(static_cast<unsigned char>(c))) {
            ++i;
            continue;
        }
        if (c == '!') {
            parse_error("'!' is reserved for generated names (offset " +
                        std::to_string(i) + ")");
        }
        if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
            size_t j = i;
            while (j < n && (std::isalnum(static_cast<unsigned char>(src[j])) ||
                             src[j] == '_' || src[j] == '\'')) {
                ++j;
            }
            out.push_back({Token::Kind::Ident, src.substr(i, j - i), i});
            i = j;
            continue;
        }
        auto two = [&](const char* s) {
            return i + 1 < n && src[i] == s[0] && src[i + 1] == s[1];
        };
        if (two("|-")) {
            out.push_back({Token::Kind::Sym, "|-", i});
            i += 2;
            continue;
        }
        if (two("/\\")) {
            out.push_back({Token::Kind::Sym, "/\\", i});
            i += 2;
            continue;
        }
        if (two("\\/")) {
            out.push_back({Token::Kind::Sym, "\\/", i});
            i += 2;
            continue;
        }
        if (two("->")) {
            out.push_back({Token::Kind::Sym, "->", i});
            i += 2;
            continue;
        }
        static const std::string singles = "\\:.,<>()[]*~#|";
        if (singles.find(c) != std::string::npos) {
            out.push_back({Token::Kind::Sym, std::string(1, c), i});
            ++i;
            continue;
        }
        parse_error("unexpected character '" + std::string(1, c) +
                    "' (offset " + std::to_string(i) + ")");
    }
    out.push_back({Token::Kind::End, "", n});
    return out;
}

struct Cursor {
    std::vector<Token> toks;
    size_t at = 0;

    const Token& peek() const { return toks[at]; }
    const Token& next() { return toks[at++]; }
    bool is_sym(const std::string& s) const {
        return toks[at].kind == Token::Kind::Sym && toks[at].text == s;
    }
    bool eat_sym(const std::string& s) {
        if (!is_sym(s)) return false;
        ++at;
        return true;
    }
    void expect_sym(const std::string& s, const std::string& where) {
        if (!eat_sym(s)) {
            parse_error("expected '" + s + "' " + where + " (offset " +
                        std::to_string(peek().pos) + ", found '" + peek().text +
                        "')");
        }
    }
    std::string expect_ident(const std::string& where,
                             const std::set<std::string>& reserved) {
        if (peek().kind != Token::Kind::Ident) {
            parse_error("expected identifier " + where + " (offset " +
                        std::to_string(peek().pos) + ", found '" + peek().text +
                        "')");
        }
        std::string name = next().text;
        if (reserved.count(name)) {
            parse_error("'" + name + "' is reserved and cannot name a variable " +
                        where);
        }
        return name;
    }
    void expect_end(const std::string& what) {
        if (peek().kind != Token::Kind::End) {
            parse_error("trailing input after " + what + " (offset " +
                        std::to_string(peek().pos) + ", found '" + peek().text +
                        "')");
        }
    }
};

// ---- propositional types ----

SymTypePtr sym_type_expr(Cursor& cur);

SymTypePtr sym_type_atom(Cursor& cur) {
    if (cur.eat_sym("#")) return sym_bottom();
    if (cur.eat_sym("~")) {
        std::string name = cur.expect_ident("after '~'", kSymReserved);
        return sym_neg_atom(name);
    }
    if (cur.eat_sym("(")) {
        SymTypePtr t = sym_type_expr(cur);
        cur.expect_sym(")", "to close type group");
        return t;
    }
    std::string name = cur.expect_ident("in type", kSymReserved);
    return sym_atom(name);
}

void forbid_bottom(const SymTypePtr& t, const char* op) {
    if (t->kind == SymType::Kind::Bottom) {
        parse_error(std::string("'#' cannot appear under '") + op + "'");
    }
}

SymTypePtr sym_type_and(Cursor& cur) {
    SymTypePtr left = sym_type_atom(cur);
    while (cur.is_sym("/\\")) {
        cur.next();
        SymTypePtr right = sym_type_atom(cur);
        forbid_bottom(left, "/\\");
        forbid_bottom(right, "/\\");
        left = sym_and(left, right);
    }
    return left;
}

SymTypePtr sym_type_expr(Cursor& cur) {
    SymTypePtr left = sym_type_and(cur);
    while (cur.is_sym("\\/")) {
        cur.next();
        SymTypePtr right = sym_type_and(cur);
        forbid_bottom(left, "\\/");
        forbid_bottom(right, "\\/");
        left = sym_or(left, right);
    }
    return left;
}

// ---- symmetric-calculus terms ----

SymTermPtr sym_term_expr(Cursor& cur);

SymTermPtr sym_term_expr(Cursor& cur) {
    if (cur.eat_sym("\\")) {
        std::string x = cur.expect_ident("after '\\'", kSymReserved);
        cur.expect_sym(":", "after binder name");
        SymTypePtr ann = sym_type_expr(cur);
        cur.expect_sym(".", "after binder type");
        SymTermPtr body = sym_term_expr(cur);
        return sym_lam(x, ann, body);
    }
    if (cur.eat_sym("<")) {
        SymTermPtr first = sym_term_expr(cur);
        cur.expect_sym(",", "between pair components");
        SymTermPtr second = sym_term_expr(cur);
        cur.expect_sym(">", "to close pair");
        return sym_pair(first, second);
    }
    if (cur.eat_sym("(")) {
        SymTermPtr first = sym_term_expr(cur);
        if (cur.eat_sym("*")) {
            SymTermPtr second = sym_term_expr(cur);
            cur.expect_sym(")", "to close application");
            return sym_star(first, second);
        }
        cur.expect_sym(")", "to close term group");
        return first;
    }
    if (cur.peek().kind == Token::Kind::Ident &&
        (cur.peek().text == "inl" || cur.peek().text == "inr")) {
        int side = cur.next().text == "inl" ? 1 : 2;
        cur.expect_sym("[", side == 1 ? "after 'inl'" : "after 'inr'");
        SymTypePtr other = sym_type_expr(cur);
        cur.expect_sym("]", "to close injection annotation");
        SymTermPtr arg = sym_term_expr(cur);
        return sym_inj(side, other, arg);
    }
    std::string name = cur.expect_ident("in term", kSymReserved);
    return sym_var(name);
}

// ---- computational types ----

LmmTypePtr lmm_type_expr(Cursor& cur);

LmmTypePtr lmm_type_prefix(Cursor& cur) {
    if (cur.eat_sym("~")) return lmm_neg(lmm_type_prefix(cur));
    if (cur.eat_sym("(")) {
        LmmTypePtr t = lmm_type_expr(cur);
        cur.expect_sym(")", "to close type group");
        return t;
    }
    std::string name = cur.expect_ident("in type", kLmmReserved);
    return lmm_atom(name);
}

LmmTypePtr lmm_type_expr(Cursor& cur) {
    LmmTypePtr left = lmm_type_prefix(cur);
    if (cur.eat_sym("->")) {
        LmmTypePtr right = lmm_type_expr(cur);
        return lmm_arrow(left, right);
    }
    return left;
}

// ---- computational terms ----
//
// Every composite position fixes the sort of its subterm, so the parser
// threads an expectation: L (producer), R (consumer), C (command), or None
// at top level. A bare identifier is an l-variable unless the expectation
// says otherwise; at top level lmm_resort_var can flip it afterwards.

enum class SortHint { None, L, R, C };

LmmTermPtr lmm_term_expr(Cursor& cur, SortHint hint, bool enforce = true);

void check_hint(const LmmTermPtr& u, SortHint hint, size_t pos) {
    if (hint == SortHint::None) return;
    LmmSort want = hint == SortHint::L   ? LmmSort::L
                   : hint == SortHint::R ? LmmSort::R
                                         : LmmSort::C;
    if (lmm_sort(u) != want) {
        const char* names[] = {"a command", "an l-term", "an r-term"};
        parse_error(std::string("expected ") + names[static_cast<int>(want)] +
                    " (offset " + std::to_string(pos) + ")");
    }
}

// A '.' right after a unit makes the unit a stack head, so the hint applies
// to the whole cons, not the head. Validation waits for the expr level.
bool cons_follows(Cursor& cur, SortHint hint) {
    return (hint == SortHint::R || hint == SortHint::None) && cur.is_sym(".");
}

LmmTermPtr lmm_term_unit(Cursor& cur, SortHint hint, bool enforce) {
    size_t start = cur.peek().pos;
    if (cur.eat_sym("<")) {
        LmmTermPtr left = lmm_term_expr(cur, SortHint::L);
        cur.expect_sym("|", "between command sides");
        LmmTermPtr right = lmm_term_expr(cur, SortHint::R);
        cur.expect_sym(">", "to close command");
        LmmTermPtr c = lmm_cut(left, right);
        if (enforce && !cons_follows(cur, hint)) check_hint(c, hint, start);
        return c;
    }
    if (cur.eat_sym("\\")) {
        std::string x = cur.expect_ident("after '\\'", kLmmReserved);
        cur.expect_sym(":", "after binder name");
        LmmTypePtr ann = lmm_type_expr(cur);
        cur.expect_sym(".", "after binder type");
        LmmTermPtr body = lmm_term_expr(cur, SortHint::L);
        LmmTermPtr t = lmm_lam(x, ann, body);
        if (enforce && !cons_follows(cur, hint)) check_hint(t, hint, start);
        return t;
    }
    if (cur.eat_sym("(")) {
        // Inside the parens the hint still steers identifier sorting, but
        // the sort check waits until we can see whether a '.' follows.
        LmmTermPtr inner = lmm_term_expr(cur, hint, false);
        cur.expect_sym(")", "to close term group");
        if (enforce && !cons_follows(cur, hint)) {
            check_hint(inner, hint, start);
        }
        return inner;
    }
    if (cur.peek().kind == Token::Kind::Ident) {
        const std::string& word = cur.peek().text;
        if (word == "mu" || word == "mut") {
            bool is_mu = word == "mu";
            cur.next();
            std::string x = cur.expect_ident(is_mu ? "after 'mu'" : "after 'mut'",
                                             kLmmReserved);
            cur.expect_sym(":", "after binder name");
            LmmTypePtr ann = lmm_type_expr(cur);
            cur.expect_sym(".", "after binder type");
            LmmTermPtr body = lmm_term_expr(cur, SortHint::C);
            LmmTermPtr t = is_mu ? lmm_mu(x, ann, body) : lmm_mut(x, ann, body);
            if (enforce && !cons_follows(cur, hint)) check_hint(t, hint, start);
            return t;
        }
        if (word == "bar" || word == "tilde") {
            bool is_bar = word == "bar";
            cur.next();
            cur.expect_sym("(", is_bar ? "after 'bar'" : "after 'tilde'");
            LmmTermPtr inner =
                lmm_term_expr(cur, is_bar ? SortHint::R : SortHint::L);
            cur.expect_sym(")", "to close argument");
            LmmTermPtr t = is_bar ? lmm_bar(inner) : lmm_tilde(inner);
            if (enforce && !cons_follows(cur, hint)) check_hint(t, hint, start);
            return t;
        }
        std::string name = cur.expect_ident("in term", kLmmReserved);
        if (hint == SortHint::R && !cur.is_sym(".")) return lmm_rvar(name);
        if (hint == SortHint::C) {
            parse_error("expected a command (offset " + std::to_string(start) +
                        ")");
        }
        return lmm_lvar(name);
    }
    parse_error("expected a term (offset " + std::to_string(start) +
                ", found '" + cur.peek().text + "')");
}

LmmTermPtr lmm_term_expr(Cursor& cur, SortHint hint, bool enforce) {
    size_t start = cur.peek().pos;
    LmmTermPtr unit = lmm_term_unit(cur, hint, enforce);
    if ((hint == SortHint::R || hint == SortHint::None) && cur.is_sym(".")) {
        cur.next();
        if (unit->kind == LmmTerm::Kind::RVar) {
            // The identifier was provisionally sorted by the consumer hint;
            // a following '.' shows it heads a stack instead.
            unit = lmm_lvar(unit->name);
        }
        if (lmm_sort(unit) != LmmSort::L) {
            parse_error("the head of '.' must be an l-term (offset " +
                        std::to_string(start) + ")");
        }
        LmmTermPtr tail = lmm_term_expr(cur, SortHint::R);
        return lmm_cons(unit, tail);
    }
    return unit;
}

void parse_lmm_zone(Cursor& cur, LmmSequent& seq, bool left_zone) {
    while (true) {
        std::string name = cur.expect_ident("in sequent entry", kLmmReserved);
        cur.expect_sym(":", "after variable name in sequent");
        LmmTypePtr ty = lmm_type_expr(cur);
        if (left_zone) {
            seq.bind_l(name, ty);
        } else {
            seq.bind_r(name, ty);
        }
        if (!cur.eat_sym(",")) break;
    }
}

} // namespace

SymTypePtr parse_sym_type(const std::string& src) {
    Cursor cur{lex(src)};
    SymTypePtr t = sym_type_expr(cur);
    cur.expect_end("type");
    return t;
}

SymTermPtr parse_sym_term(const std::string& src) {
    Cursor cur{lex(src)};
    SymTermPtr t = sym_term_expr(cur);
    cur.expect_end("term");
    return t;
}

SymContext parse_sym_context(const std::string& src) {
    Cursor cur{lex(src)};
    SymContext ctx;
    if (cur.peek().kind == Token::Kind::End) return ctx;
    while (true) {
        std::string name = cur.expect_ident("in context entry", kSymReserved);
        cur.expect_sym(":", "after variable name in context");
        SymTypePtr ty = sym_type_expr(cur);
        ctx.bind(name, ty);
        if (!cur.eat_sym(",")) break;
    }
    cur.expect_end("context");
    return ctx;
}

LmmTypePtr parse_lmm_type(const std::string& src) {
    Cursor cur{lex(src)};
    LmmTypePtr t = lmm_type_expr(cur);
    cur.expect_end("type");
    return t;
}

LmmTermPtr parse_lmm_term(const std::string& src) {
    Cursor cur{lex(src)};
    LmmTermPtr t = lmm_term_expr(cur, SortHint::None);
    cur.expect_end("term");
    return t;
}

LmmSequent parse_lmm_sequent(const std::string& src) {
    Cursor cur{lex(src)};
    LmmSequent seq;
    if (cur.peek().kind == Token::Kind::End) return seq;
    if (!cur.is_sym("|-")) parse_lmm_zone(cur, seq, true);
    if (cur.eat_sym("|-")) {
        if (cur.peek().kind != Token::Kind::End) parse_lmm_zone(cur, seq, false);
    }
    cur.expect_end("sequent");
    return seq;
}

LmmTermPtr lmm_resort_var(const LmmTermPtr& u, const LmmSequent& seq) {
    if (u->kind == LmmTerm::Kind::LVar && !seq.find_l(u->name) &&
        seq.find_r(u->name)) {
        return lmm_rvar(u->name);
    }
    return u;
}

} // namespace symlog
