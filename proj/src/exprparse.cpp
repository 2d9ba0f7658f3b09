#include "cfseq/exprparse.hpp"

#include <algorithm>
#include <cctype>

#include "cfseq/error.hpp"

namespace cfseq {

namespace {

using SymPoly = UniPoly<MultiRat>;

struct Token {
    enum Kind { number, ident, plus, minus, star, caret, lparen, rparen, end } kind;
    std::string text;
};

class Lexer {
public:
    explicit Lexer(std::string_view text) : text_(text) {}

    Token next() {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
        if (pos_ >= text_.size()) return {Token::end, ""};
        char c = text_[pos_];
        if (std::isdigit(static_cast<unsigned char>(c))) {
            std::size_t start = pos_;
            while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
            return {Token::number, std::string(text_.substr(start, pos_ - start))};
        }
        if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
            std::size_t start = pos_;
            while (pos_ < text_.size() &&
                   (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_'))
                ++pos_;
            return {Token::ident, std::string(text_.substr(start, pos_ - start))};
        }
        ++pos_;
        switch (c) {
            case '+': return {Token::plus, "+"};
            case '-': return {Token::minus, "-"};
            case '*': return {Token::star, "*"};
            case '^': return {Token::caret, "^"};
            case '(': return {Token::lparen, "("};
            case ')': return {Token::rparen, ")"};
        }
        throw InputError(std::string("unexpected character '") + c + "' in expression");
    }

private:
    std::string_view text_;
    std::size_t pos_ = 0;
};

class Parser {
public:
    Parser(std::string_view text, const std::vector<std::string>& symbols)
        : lexer_(text), symbols_(symbols) {
        advance();
    }

    SymPoly parse() {
        SymPoly p = expression();
        expect(Token::end, "end of expression");
        return p;
    }

private:
    void advance() { tok_ = lexer_.next(); }

    void expect(Token::Kind k, const std::string& what) {
        if (tok_.kind != k)
            throw InputError("expected " + what + ", got '" + tok_.text + "'");
    }

    SymPoly expression() {
        bool negate = false;
        if (tok_.kind == Token::plus || tok_.kind == Token::minus) {
            negate = tok_.kind == Token::minus;
            advance();
        }
        SymPoly acc = term();
        if (negate) acc = -acc;
        while (tok_.kind == Token::plus || tok_.kind == Token::minus) {
            bool sub = tok_.kind == Token::minus;
            advance();
            SymPoly rhs = term();
            acc = sub ? acc - rhs : acc + rhs;
        }
        return acc;
    }

    SymPoly term() {
        SymPoly acc = factor();
        while (tok_.kind == Token::star) {
            advance();
            acc = acc * factor();
        }
        return acc;
    }

    SymPoly factor() {
        if (tok_.kind == Token::minus) {
            advance();
            return -factor();
        }
        SymPoly base = primary();
        if (tok_.kind == Token::caret) {
            advance();
            expect(Token::number, "a nonnegative integer exponent");
            int e = std::stoi(tok_.text);
            advance();
            SymPoly acc = SymPoly::constant(MultiRat(1));
            for (int k = 0; k < e; ++k) acc = acc * base;
            return acc;
        }
        return base;
    }

    SymPoly primary() {
        switch (tok_.kind) {
            case Token::number: {
                Rational v = parse_rational(tok_.text);
                advance();
                return SymPoly::constant(MultiRat(v));
            }
            case Token::ident: {
                std::string name = tok_.text;
                advance();
                if (name == "x") return SymPoly::monomial(MultiRat(1), 1);
                if (std::find(symbols_.begin(), symbols_.end(), name) != symbols_.end())
                    return SymPoly::constant(MultiRat::variable(name));
                throw InputError("unknown symbol '" + name + "' (declare it with --symbolic)");
            }
            case Token::lparen: {
                advance();
                SymPoly p = expression();
                expect(Token::rparen, "')'");
                advance();
                return p;
            }
            default:
                throw InputError("expected a number, symbol, or '(', got '" + tok_.text + "'");
        }
    }

    Lexer lexer_;
    Token tok_;
    const std::vector<std::string>& symbols_;
};

} // namespace

UniPoly<MultiRat> parse_charpoly(std::string_view text, const std::vector<std::string>& symbols) {
    return Parser(text, symbols).parse();
}

bool is_constant_poly(const UniPoly<MultiRat>& p) {
    for (int k = 0; k <= p.degree(); ++k)
        if (!p.coeff(k).is_constant()) return false;
    return true;
}

RatPoly to_rational_poly(const UniPoly<MultiRat>& p) {
    std::vector<Rational> c;
    for (int k = 0; k <= p.degree(); ++k) c.push_back(p.coeff(k).constant_value());
    return RatPoly(std::move(c));
}

} // namespace cfseq
