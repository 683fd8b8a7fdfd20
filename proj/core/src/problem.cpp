#include "cdim/problem.hpp"

#include <cctype>

namespace cdim {

namespace {

enum class TokenKind { Ident, Integer, Symbol, Newline, End };

struct Token {
    TokenKind kind = TokenKind::End;
    std::string text;
    int line = 1;
    int column = 1;
};

class Lexer {
public:
    explicit Lexer(const std::string& text) : text_(text) {}

    Token next() {
        skip_space_and_comments();
        Token token;
        token.line = line_;
        token.column = column_;
        if (pos_ >= text_.size()) {
            token.kind = TokenKind::End;
            return token;
        }
        const char c = text_[pos_];
        if (c == '\n') {
            advance();
            token.kind = TokenKind::Newline;
            token.text = "\n";
            return token;
        }
        if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
            token.kind = TokenKind::Ident;
            while (pos_ < text_.size() &&
                   (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_')) {
                token.text += text_[pos_];
                advance();
            }
            return token;
        }
        if (std::isdigit(static_cast<unsigned char>(c))) {
            token.kind = TokenKind::Integer;
            while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
                token.text += text_[pos_];
                advance();
            }
            return token;
        }
        static const std::string symbols = "+-*^()[]=,:/";
        if (symbols.find(c) != std::string::npos) {
            token.kind = TokenKind::Symbol;
            token.text = std::string(1, c);
            advance();
            return token;
        }
        throw ParseError(line_, column_, std::string("unexpected character '") + c + "'");
    }

private:
    void advance() {
        if (text_[pos_] == '\n') {
            ++line_;
            column_ = 1;
        } else {
            ++column_;
        }
        ++pos_;
    }

    void skip_space_and_comments() {
        while (pos_ < text_.size()) {
            const char c = text_[pos_];
            if (c == '#') {
                while (pos_ < text_.size() && text_[pos_] != '\n') advance();
            } else if (c == ' ' || c == '\t' || c == '\r') {
                advance();
            } else {
                return;
            }
        }
    }

    const std::string& text_;
    std::size_t pos_ = 0;
    int line_ = 1;
    int column_ = 1;
};

class Parser {
public:
    explicit Parser(const std::string& text) : lexer_(text) { shift(); }

    ProblemFile parse() {
        while (current_.kind != TokenKind::End) {
            if (current_.kind == TokenKind::Newline) {
                shift();
                continue;
            }
            declaration();
        }
        if (!problem_.ring)
            throw ParseError(current_.line, current_.column, "missing 'ring:' declaration");
        return std::move(problem_);
    }

private:
    void shift() { current_ = lexer_.next(); }

    [[noreturn]] void fail(const std::string& expected) {
        std::string got;
        switch (current_.kind) {
        case TokenKind::End:
            got = "end of input";
            break;
        case TokenKind::Newline:
            got = "end of line";
            break;
        default:
            got = "'" + current_.text + "'";
        }
        throw ParseError(current_.line, current_.column, "expected " + expected + ", got " + got);
    }

    bool at_symbol(const std::string& s) const {
        return current_.kind == TokenKind::Symbol && current_.text == s;
    }

    Token expect_ident(const std::string& what) {
        if (current_.kind != TokenKind::Ident) fail(what);
        Token t = current_;
        shift();
        return t;
    }

    Token expect_integer(const std::string& what) {
        if (current_.kind != TokenKind::Integer) fail(what);
        Token t = current_;
        shift();
        return t;
    }

    void expect_symbol(const std::string& s) {
        if (!at_symbol(s)) fail("'" + s + "'");
        shift();
    }

    void end_of_line() {
        if (current_.kind == TokenKind::Newline) {
            shift();
            return;
        }
        if (current_.kind != TokenKind::End) fail("end of line");
    }

    std::uint64_t integer_u64(const Token& token, std::uint64_t limit, const std::string& what) {
        mpz_class v(token.text);
        if (v > limit)
            throw ParseError(token.line, token.column, what + " out of range: " + token.text);
        return static_cast<std::uint64_t>(v.get_ui());
    }

    void declaration() {
        Token head = expect_ident("a declaration (ring/ideal/base/coeff-chars/dim-cap)");
        if (head.text == "ring") {
            ring_declaration(head);
        } else if (head.text == "ideal") {
            ideal_declaration(false);
        } else if (head.text == "base") {
            ideal_declaration(true);
        } else if (head.text == "coeff") {
            expect_symbol("-");
            Token tail = expect_ident("'chars'");
            if (tail.text != "chars") fail("'chars'");
            chars_declaration();
        } else if (head.text == "dim") {
            expect_symbol("-");
            Token tail = expect_ident("'cap'");
            if (tail.text != "cap") fail("'cap'");
            cap_declaration();
        } else {
            throw ParseError(head.line, head.column, "unknown declaration '" + head.text + "'");
        }
    }

    void ring_declaration(const Token& head) {
        if (problem_.ring) throw ParseError(head.line, head.column, "duplicate ring declaration");
        expect_symbol(":");
        Token kw = expect_ident("'char'");
        if (kw.text != "char") fail("'char'");
        expect_symbol("=");
        Token chr = expect_integer("a characteristic");
        std::uint64_t p = integer_u64(chr, (std::uint64_t(1) << 62) - 1, "characteristic");
        if (p != 0 && !is_prime_u64(p))
            throw ParseError(chr.line, chr.column,
                             "characteristic must be 0 or a prime, got " + chr.text);
        Token vars = expect_ident("'vars'");
        if (vars.text != "vars") fail("'vars'");
        expect_symbol("=");
        expect_symbol("[");
        std::vector<std::string> names;
        names.push_back(expect_ident("a variable name").text);
        while (at_symbol(",")) {
            shift();
            names.push_back(expect_ident("a variable name").text);
        }
        expect_symbol("]");
        end_of_line();
        for (std::size_t i = 0; i < names.size(); ++i)
            for (std::size_t j = i + 1; j < names.size(); ++j)
                if (names[i] == names[j])
                    throw ParseError(head.line, head.column,
                                     "duplicate variable name " + names[i]);
        problem_.ring = make_ring(FieldSpec(p), std::move(names));
    }

    void ideal_declaration(bool is_base) {
        Token name = expect_ident("an ideal name");
        if (!problem_.ring)
            throw ParseError(name.line, name.column, "ideal declared before the ring");
        for (const IdealDecl& decl : problem_.ideals)
            if (decl.name == name.text)
                throw ParseError(name.line, name.column, "duplicate ideal name " + name.text);
        for (const IdealDecl& decl : problem_.bases)
            if (decl.name == name.text)
                throw ParseError(name.line, name.column, "duplicate ideal name " + name.text);
        expect_symbol(":");
        IdealDecl decl;
        decl.name = name.text;
        decl.generators.push_back(expression());
        while (at_symbol(",")) {
            shift();
            decl.generators.push_back(expression());
        }
        end_of_line();
        (is_base ? problem_.bases : problem_.ideals).push_back(std::move(decl));
    }

    void chars_declaration() {
        expect_symbol(":");
        if (!problem_.coeff_chars.empty())
            throw ParseError(current_.line, current_.column, "duplicate coeff-chars declaration");
        Token first = expect_integer("a characteristic");
        auto check = [&](const Token& token) {
            std::uint64_t p = integer_u64(token, (std::uint64_t(1) << 62) - 1, "characteristic");
            if (p != 0 && !is_prime_u64(p))
                throw ParseError(token.line, token.column,
                                 "coefficient characteristic must be 0 or a prime, got " +
                                     token.text);
            return p;
        };
        problem_.coeff_chars.push_back(check(first));
        while (at_symbol(",")) {
            shift();
            problem_.coeff_chars.push_back(check(expect_integer("a characteristic")));
        }
        end_of_line();
    }

    void cap_declaration() {
        expect_symbol(":");
        Token cap = expect_integer("a dimension cap");
        problem_.dim_cap = static_cast<int>(integer_u64(cap, 62, "dim-cap"));
        end_of_line();
    }

    // expr := ['-'] term { ('+'|'-') term }
    Polynomial expression() {
        bool negate = false;
        if (at_symbol("-")) {
            negate = true;
            shift();
        }
        Polynomial acc = term();
        if (negate) acc = -acc;
        while (at_symbol("+") || at_symbol("-")) {
            const bool minus = current_.text == "-";
            shift();
            Polynomial rhs = term();
            acc = minus ? acc - rhs : acc + rhs;
        }
        return acc;
    }

    // term := factor { '*' factor }
    Polynomial term() {
        Polynomial acc = factor();
        while (at_symbol("*")) {
            shift();
            acc = acc * factor();
        }
        return acc;
    }

    // factor := atom [ '^' INT ]
    Polynomial factor() {
        Polynomial base = atom();
        if (!at_symbol("^")) return base;
        shift();
        Token exp = expect_integer("an exponent");
        std::uint64_t e = integer_u64(exp, 100000, "exponent");
        Polynomial acc = Polynomial::constant(problem_.ring, FieldElement::one(problem_.ring->field()));
        for (std::uint64_t i = 0; i < e; ++i) acc = acc * base;
        return acc;
    }

    // atom := INT ['/' INT] | IDENT | '(' expr ')'
    Polynomial atom() {
        const FieldSpec& field = problem_.ring->field();
        if (current_.kind == TokenKind::Integer) {
            Token num = current_;
            shift();
            if (at_symbol("/")) {
                Token slash = current_;
                shift();
                Token den = expect_integer("a denominator");
                if (!field.is_rational())
                    throw ParseError(slash.line, slash.column,
                                     "rational literal in positive characteristic");
                mpz_class d(den.text);
                if (d == 0) throw ParseError(den.line, den.column, "zero denominator");
                return Polynomial::constant(
                    problem_.ring, FieldElement::from_rational(mpz_class(num.text), d));
            }
            FieldElement c = field.is_rational()
                                 ? FieldElement::from_rational(mpz_class(num.text), 1)
                                 : FieldElement::from_residue(
                                       field, mpz_class(mpz_class(num.text) % field.characteristic())
                                                  .get_ui());
            return Polynomial::constant(problem_.ring, std::move(c));
        }
        if (current_.kind == TokenKind::Ident) {
            Token name = current_;
            shift();
            int index = problem_.ring->variable_index(name.text);
            if (index < 0)
                throw ParseError(name.line, name.column, "unknown variable " + name.text);
            return Polynomial::variable(problem_.ring, index);
        }
        if (at_symbol("(")) {
            shift();
            Polynomial inner = expression();
            expect_symbol(")");
            return inner;
        }
        fail("a number, a variable or '('");
    }

    Lexer lexer_;
    Token current_;
    ProblemFile problem_;
};

} // namespace

ProblemFile parse_problem(const std::string& text) { return Parser(text).parse(); }

std::string print_problem(const ProblemFile& problem) {
    std::string out = "ring: char=" + std::to_string(problem.ring->field().characteristic()) +
                      " vars=[";
    const auto& names = problem.ring->variable_names();
    for (std::size_t i = 0; i < names.size(); ++i) {
        if (i) out += ",";
        out += names[i];
    }
    out += "]\n";
    auto emit_decl = [&](const char* keyword, const IdealDecl& decl) {
        out += std::string(keyword) + " " + decl.name + ":";
        for (std::size_t i = 0; i < decl.generators.size(); ++i) {
            out += i ? ", " : " ";
            out += decl.generators[i].to_string();
        }
        out += "\n";
    };
    for (const IdealDecl& decl : problem.ideals) emit_decl("ideal", decl);
    for (const IdealDecl& decl : problem.bases) emit_decl("base", decl);
    if (!problem.coeff_chars.empty()) {
        out += "coeff-chars: ";
        for (std::size_t i = 0; i < problem.coeff_chars.size(); ++i) {
            if (i) out += ",";
            out += std::to_string(problem.coeff_chars[i]);
        }
        out += "\n";
    }
    if (problem.dim_cap) out += "dim-cap: " + std::to_string(*problem.dim_cap) + "\n";
    return out;
}

bool operator==(const IdealDecl& a, const IdealDecl& b) {
    return a.name == b.name && a.generators == b.generators;
}

bool operator==(const ProblemFile& a, const ProblemFile& b) {
    return same_ring(a.ring, b.ring) && a.ideals == b.ideals && a.bases == b.bases &&
           a.coeff_chars == b.coeff_chars && a.dim_cap == b.dim_cap;
}

} // namespace cdim
