#include "speccert/parser.hpp"

#include <cctype>

namespace speccert {

namespace {

struct Token {
    enum Kind { Int_, Ident, Plus, Minus, Star, Slash, Caret, LParen, RParen, End };
    Kind kind;
    size_t pos;
    Int value;         // Int_
    std::string name;  // Ident
};

std::vector<Token> tokenize(const std::string& text) {
    std::vector<Token> out;
    size_t i = 0;
    while (i < text.size()) {
        char c = text[i];
        if (std::isspace(static_cast<unsigned char>(c))) { ++i; continue; }
        Token tok;
        tok.pos = i;
        if (std::isdigit(static_cast<unsigned char>(c))) {
            size_t j = i;
            while (j < text.size() && std::isdigit(static_cast<unsigned char>(text[j]))) ++j;
            tok.kind = Token::Int_;
            tok.value = Int(text.substr(i, j - i));
            i = j;
        } else if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
            size_t j = i;
            while (j < text.size() &&
                   (std::isalnum(static_cast<unsigned char>(text[j])) || text[j] == '_'))
                ++j;
            tok.kind = Token::Ident;
            tok.name = text.substr(i, j - i);
            i = j;
        } else {
            switch (c) {
                case '+': tok.kind = Token::Plus; break;
                case '-': tok.kind = Token::Minus; break;
                case '*': tok.kind = Token::Star; break;
                case '/': tok.kind = Token::Slash; break;
                case '^': tok.kind = Token::Caret; break;
                case '(': tok.kind = Token::LParen; break;
                case ')': tok.kind = Token::RParen; break;
                default:
                    throw parse_error(std::string("unexpected character '") + c + "'", i);
            }
            ++i;
        }
        out.push_back(std::move(tok));
    }
    out.push_back(Token{Token::End, text.size(), Int(0), {}});
    return out;
}

// Recursive-descent parser over an algebra supplying the value semantics.
template <typename Alg>
class Parser {
public:
    Parser(const std::string& text, Alg alg)
        : toks_(tokenize(text)), alg_(std::move(alg)) {}

    typename Alg::Value parse() {
        auto v = expr();
        if (cur().kind != Token::End)
            throw parse_error("trailing input", cur().pos);
        return v;
    }

private:
    const Token& cur() const { return toks_[i_]; }
    void advance() { ++i_; }

    typename Alg::Value expr() {
        auto v = term();
        for (;;) {
            if (cur().kind == Token::Plus) {
                advance();
                v = alg_.add(v, term());
            } else if (cur().kind == Token::Minus) {
                advance();
                v = alg_.sub(v, term());
            } else {
                return v;
            }
        }
    }

    typename Alg::Value term() {
        auto v = factor();
        for (;;) {
            if (cur().kind == Token::Star) {
                advance();
                v = alg_.mul(v, factor());
            } else if (cur().kind == Token::Slash) {
                size_t pos = cur().pos;
                advance();
                v = alg_.div(v, factor(), pos);
            } else {
                return v;
            }
        }
    }

    typename Alg::Value factor() {
        if (cur().kind == Token::Minus) {
            advance();
            return alg_.neg(factor());
        }
        return power();
    }

    typename Alg::Value power() {
        auto v = atom();
        if (cur().kind == Token::Caret) {
            advance();
            if (cur().kind != Token::Int_)
                throw parse_error("exponent must be a nonnegative integer literal",
                                  cur().pos);
            if (!cur().value.fits_uint_p())
                throw parse_error("exponent too large", cur().pos);
            unsigned e = static_cast<unsigned>(cur().value.get_ui());
            advance();
            return alg_.pow(v, e);
        }
        return v;
    }

    typename Alg::Value atom() {
        const Token& t = cur();
        switch (t.kind) {
            case Token::Int_: {
                advance();
                return alg_.from_int(t.value);
            }
            case Token::Ident: {
                advance();
                return alg_.from_var(t.name, t.pos);
            }
            case Token::LParen: {
                advance();
                auto v = expr();
                if (cur().kind != Token::RParen)
                    throw parse_error("expected ')'", cur().pos);
                advance();
                return v;
            }
            default:
                throw parse_error("expected a number, variable, or '('", t.pos);
        }
    }

    std::vector<Token> toks_;
    size_t i_ = 0;
    Alg alg_;
};

struct RatFnAlg {
    using Value = RatFn;
    std::string var;

    Value from_int(const Int& n) const { return RatFn(Rat(n)); }
    Value from_var(const std::string& name, size_t pos) const {
        if (name != var)
            throw parse_error("unknown variable '" + name + "', expected '" + var + "'",
                              pos);
        return RatFn(Poly::variable(var));
    }
    Value add(const Value& a, const Value& b) const { return a + b; }
    Value sub(const Value& a, const Value& b) const { return a - b; }
    Value mul(const Value& a, const Value& b) const { return a * b; }
    Value div(const Value& a, const Value& b, size_t pos) const {
        if (b.is_zero()) throw parse_error("division by the zero polynomial", pos);
        return a / b;
    }
    Value neg(const Value& a) const { return -a; }
    Value pow(Value a, unsigned e) const {
        Value r(Rat(1));
        while (e) {
            if (e & 1) r = r * a;
            a = a * a;
            e >>= 1;
        }
        return r;
    }
};

struct BiAlg {
    using Value = BiPolyR;
    std::string tvar, xvar;

    Value from_int(const Int& n) const { return Value({RatFn(Rat(n))}); }
    Value from_var(const std::string& name, size_t pos) const {
        if (name == xvar) return Value({RatFn(Rat(0)), RatFn(Rat(1))});
        if (name == tvar) return Value({RatFn(Poly::variable(tvar))});
        throw parse_error("unknown variable '" + name + "'", pos);
    }
    Value add(const Value& a, const Value& b) const { return a + b; }
    Value sub(const Value& a, const Value& b) const { return a - b; }
    Value mul(const Value& a, const Value& b) const { return a * b; }
    Value div(const Value& a, const Value& b, size_t pos) const {
        if (b.is_zero()) throw parse_error("division by zero", pos);
        if (b.degree() != 0 || !b.coeff(0).is_constant())
            throw parse_error("division by a variable expression is not allowed here",
                              pos);
        Rat c = b.coeff(0).constant_value();
        std::vector<RatFn> r(a.degree() + 1);
        for (int i = 0; i <= a.degree(); ++i) r[i] = a.coeff(i) / RatFn(c);
        return Value(std::move(r));
    }
    Value neg(const Value& a) const { return -a; }
    Value pow(Value a, unsigned e) const {
        Value r({RatFn(Rat(1))});
        while (e) {
            if (e & 1) r = r * a;
            a = a * a;
            e >>= 1;
        }
        return r;
    }
};

}  // namespace

RatFn parse_expr(const std::string& text, const std::string& var) {
    return Parser<RatFnAlg>(text, RatFnAlg{var}).parse();
}

BiPoly parse_bipoly(const std::string& text, const std::string& tvar,
                    const std::string& xvar) {
    BiPolyR r = Parser<BiAlg>(text, BiAlg{tvar, xvar}).parse();
    for (int i = 0; i <= r.degree(); ++i) {
        if (!r.coeff(i).is_polynomial())
            throw parse_error("expression is not polynomial in " + tvar, 0);
    }
    auto [cleared, mult] = r.clear_denominators();
    (void)mult;  // mult == 1 after the polynomial check
    return cleared;
}

ParsedPoint parse_point(const std::string& text, const std::string& var) {
    // trim
    size_t b = text.find_first_not_of(" \t");
    size_t e = text.find_last_not_of(" \t");
    if (b == std::string::npos) throw parse_error("empty point", 0);
    std::string s = text.substr(b, e - b + 1);
    ParsedPoint p;
    if (s == "O" || s == "o") {
        p.infinity = true;
        return p;
    }
    if (s.front() != '(' || s.back() != ')')
        throw parse_error("point must be 'O' or '(x, y)'", b);
    int depth = 0;
    size_t comma = std::string::npos;
    for (size_t i = 0; i < s.size(); ++i) {
        if (s[i] == '(') ++depth;
        else if (s[i] == ')') --depth;
        else if (s[i] == ',' && depth == 1) {
            comma = i;
            break;
        }
    }
    if (comma == std::string::npos)
        throw parse_error("point must contain a top-level comma", b);
    p.x = parse_expr(s.substr(1, comma - 1), var);
    p.y = parse_expr(s.substr(comma + 1, s.size() - comma - 2), var);
    return p;
}

}  // namespace speccert
