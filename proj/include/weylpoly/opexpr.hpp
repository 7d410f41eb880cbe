#pragma once

#include <cstddef>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "weylpoly/operator_calculus.hpp"
#include "weylpoly/operator_poly.hpp"
#include "weylpoly/quad_scalar.hpp"
#include "weylpoly/rational.hpp"
#include "weylpoly/univariate_poly.hpp"

namespace weylpoly {

struct SourcePos {
    std::size_t line = 1;    // 1-based
    std::size_t column = 1;  // 1-based, in bytes
};

class ParseError : public std::runtime_error {
public:
    ParseError(SourcePos pos, const std::string& message)
        : std::runtime_error("line " + std::to_string(pos.line) + ", column " +
                             std::to_string(pos.column) + ": " + message),
          pos_(pos) {}

    SourcePos pos() const { return pos_; }

private:
    SourcePos pos_;
};

class LowerError : public std::runtime_error {
public:
    LowerError(SourcePos begin, SourcePos end, const std::string& message)
        : std::runtime_error("line " + std::to_string(begin.line) + ", column " +
                             std::to_string(begin.column) + " to line " +
                             std::to_string(end.line) + ", column " +
                             std::to_string(end.column) + ": " + message),
          begin_(begin),
          end_(end) {}

    SourcePos begin() const { return begin_; }
    SourcePos end() const { return end_; }

private:
    SourcePos begin_;
    SourcePos end_;
};

/// Parse tree of the surface language (opexpr-v1). Sum and Product hold any
/// number of children; Power holds its base with a literal exponent;
/// Commutator and Conjugate hold exactly two children.
struct OpExprAst {
    enum class Kind {
        Sum,
        Product,
        Power,
        Commutator,
        Conjugate,
        AtomX,
        AtomP,
        AtomI,
        AtomSqrt2,
        AtomRational,
    };

    Kind kind = Kind::AtomRational;
    std::vector<OpExprAst> children;
    unsigned long exponent = 0;  // Power only
    Rational value;              // AtomRational only
    SourcePos begin;
    SourcePos end;  // position of the last token of this node
};

namespace opexpr_detail {

constexpr std::size_t kMaxInputBytes = 64 * 1024;
constexpr std::size_t kMaxDepth = 64;
constexpr unsigned long kMaxExponent = 1ul << 20;

enum class TokenKind {
    Plus,
    Minus,
    Star,
    Caret,
    LParen,
    RParen,
    LBracket,
    RBracket,
    Comma,
    Semicolon,
    Number,
    AtomX,
    AtomP,
    AtomI,
    AtomSqrt2,
    Conj,
    End,
};

struct Token {
    TokenKind kind = TokenKind::End;
    SourcePos pos;
    Rational value;  // Number only
    std::string text;
};

inline std::vector<Token> lex(std::string_view text) {
    if (text.size() > kMaxInputBytes) {
        throw ParseError({1, 1}, "input exceeds the 64 KiB limit");
    }
    std::vector<Token> tokens;
    SourcePos pos;
    std::size_t k = 0;
    auto advance = [&](std::size_t count) {
        for (std::size_t j = 0; j < count; ++j, ++k) {
            if (text[k] == '\n') {
                ++pos.line;
                pos.column = 1;
            } else {
                ++pos.column;
            }
        }
    };
    auto is_digit = [](char c) { return c >= '0' && c <= '9'; };
    auto is_word = [&](char c) {
        return (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z') || c == '_' || is_digit(c);
    };
    while (k < text.size()) {
        const char c = text[k];
        if (c == ' ' || c == '\t' || c == '\r' || c == '\n') {
            advance(1);
            continue;
        }
        const SourcePos start = pos;
        if (static_cast<unsigned char>(c) >= 0x80) {
            throw ParseError(start, "unexpected non-ASCII byte");
        }
        switch (c) {
            case '+': tokens.push_back({TokenKind::Plus, start, {}, "+"}); advance(1); continue;
            case '-': tokens.push_back({TokenKind::Minus, start, {}, "-"}); advance(1); continue;
            case '*': tokens.push_back({TokenKind::Star, start, {}, "*"}); advance(1); continue;
            case '^': tokens.push_back({TokenKind::Caret, start, {}, "^"}); advance(1); continue;
            case '(': tokens.push_back({TokenKind::LParen, start, {}, "("}); advance(1); continue;
            case ')': tokens.push_back({TokenKind::RParen, start, {}, ")"}); advance(1); continue;
            case '[': tokens.push_back({TokenKind::LBracket, start, {}, "["}); advance(1); continue;
            case ']': tokens.push_back({TokenKind::RBracket, start, {}, "]"}); advance(1); continue;
            case ',': tokens.push_back({TokenKind::Comma, start, {}, ","}); advance(1); continue;
            case ';': tokens.push_back({TokenKind::Semicolon, start, {}, ";"}); advance(1); continue;
            default: break;
        }
        if (is_digit(c)) {
            std::size_t len = 0;
            while (k + len < text.size() && is_digit(text[k + len])) {
                ++len;
            }
            std::string numerator(text.substr(k, len));
            advance(len);
            std::string denominator;
            if (k < text.size() && text[k] == '/') {
                const SourcePos slash = pos;
                advance(1);
                len = 0;
                while (k + len < text.size() && is_digit(text[k + len])) {
                    ++len;
                }
                if (len == 0) {
                    throw ParseError(slash, "expected digits after '/' in rational literal");
                }
                denominator = std::string(text.substr(k, len));
                advance(len);
            }
            if (k < text.size() && is_word(text[k])) {
                throw ParseError(pos, "unexpected character in number");
            }
            Token tok{TokenKind::Number, start, {}, numerator};
            if (denominator.empty()) {
                tok.value = Rational(mpz_class(numerator));
            } else {
                tok.text += "/" + denominator;
                const mpz_class den(denominator);
                if (den == 0) {
                    throw ParseError(start, "zero denominator in rational literal");
                }
                tok.value = Rational(mpz_class(numerator), den);
            }
            tokens.push_back(std::move(tok));
            continue;
        }
        if (is_word(c)) {
            std::size_t len = 0;
            while (k + len < text.size() && is_word(text[k + len])) {
                ++len;
            }
            const std::string word(text.substr(k, len));
            advance(len);
            if (word == "x") {
                tokens.push_back({TokenKind::AtomX, start, {}, word});
            } else if (word == "p") {
                tokens.push_back({TokenKind::AtomP, start, {}, word});
            } else if (word == "i") {
                tokens.push_back({TokenKind::AtomI, start, {}, word});
            } else if (word == "sqrt2") {
                tokens.push_back({TokenKind::AtomSqrt2, start, {}, word});
            } else if (word == "conj") {
                tokens.push_back({TokenKind::Conj, start, {}, word});
            } else {
                throw ParseError(start, "unknown symbol '" + word + "'");
            }
            continue;
        }
        throw ParseError(start, std::string("unexpected character '") + c + "'");
    }
    tokens.push_back({TokenKind::End, pos, {}, "end of input"});
    return tokens;
}

class Parser {
public:
    explicit Parser(std::vector<Token> tokens) : tokens_(std::move(tokens)) {}

    OpExprAst parse() {
        OpExprAst ast = parse_expr(0);
        if (peek().kind != TokenKind::End) {
            throw ParseError(peek().pos, "unexpected token '" + peek().text + "'");
        }
        return ast;
    }

private:
    const Token& peek() const { return tokens_[index_]; }
    const Token& take() { return tokens_[index_++]; }

    void expect(TokenKind kind, const char* what) {
        if (peek().kind != kind) {
            if (peek().kind == TokenKind::End) {
                throw ParseError(peek().pos,
                                 std::string("unexpected end of input, expected ") + what);
            }
            throw ParseError(peek().pos, std::string("expected ") + what + ", found '" +
                                             peek().text + "'");
        }
        take();
    }

    /// depth counts nesting of parenthesized/bracketed/conj subexpressions,
    /// the only unbounded recursion in the grammar.
    void check_depth(std::size_t depth) const {
        if (depth > kMaxDepth) {
            throw ParseError(peek().pos, "nesting depth exceeds the limit of 64");
        }
    }

    /// Unary minus rewrites to Product(-1, term), making the grammar LL(1).
    OpExprAst parse_signed_term(std::size_t depth) {
        if (peek().kind == TokenKind::Minus) {
            const Token minus = take();
            OpExprAst term = parse_term(depth);
            OpExprAst negated;
            negated.kind = OpExprAst::Kind::Product;
            negated.begin = minus.pos;
            negated.end = term.end;
            OpExprAst minus_one;
            minus_one.kind = OpExprAst::Kind::AtomRational;
            minus_one.value = Rational(-1);
            minus_one.begin = minus.pos;
            minus_one.end = minus.pos;
            negated.children.push_back(std::move(minus_one));
            negated.children.push_back(std::move(term));
            return negated;
        }
        return parse_term(depth);
    }

    OpExprAst parse_expr(std::size_t depth) {
        check_depth(depth);
        OpExprAst first = parse_signed_term(depth);
        if (peek().kind != TokenKind::Plus && peek().kind != TokenKind::Minus) {
            return first;
        }
        OpExprAst sum;
        sum.kind = OpExprAst::Kind::Sum;
        sum.begin = first.begin;
        sum.children.push_back(std::move(first));
        while (peek().kind == TokenKind::Plus || peek().kind == TokenKind::Minus) {
            const Token op = take();
            OpExprAst term = parse_signed_term(depth);
            if (op.kind == TokenKind::Minus) {
                OpExprAst negated;
                negated.kind = OpExprAst::Kind::Product;
                negated.begin = op.pos;
                negated.end = term.end;
                OpExprAst minus_one;
                minus_one.kind = OpExprAst::Kind::AtomRational;
                minus_one.value = Rational(-1);
                minus_one.begin = op.pos;
                minus_one.end = op.pos;
                negated.children.push_back(std::move(minus_one));
                negated.children.push_back(std::move(term));
                sum.children.push_back(std::move(negated));
            } else {
                sum.children.push_back(std::move(term));
            }
        }
        sum.end = sum.children.back().end;
        return sum;
    }

    OpExprAst parse_term(std::size_t depth) {
        OpExprAst first = parse_factor(depth);
        if (peek().kind != TokenKind::Star) {
            return first;
        }
        OpExprAst product;
        product.kind = OpExprAst::Kind::Product;
        product.begin = first.begin;
        product.children.push_back(std::move(first));
        while (peek().kind == TokenKind::Star) {
            take();
            product.children.push_back(parse_factor(depth));
        }
        product.end = product.children.back().end;
        return product;
    }

    OpExprAst parse_factor(std::size_t depth) {
        OpExprAst base = parse_atom(depth);
        if (peek().kind != TokenKind::Caret) {
            return base;
        }
        take();
        if (peek().kind != TokenKind::Number) {
            if (peek().kind == TokenKind::End) {
                throw ParseError(peek().pos, "unexpected end of input, expected exponent");
            }
            throw ParseError(peek().pos, "expected a nonnegative integer exponent, found '" +
                                             peek().text + "'");
        }
        const Token exponent = take();
        if (!exponent.value.is_integer() || exponent.value.sign() < 0) {
            throw ParseError(exponent.pos, "exponent must be a nonnegative integer literal");
        }
        if (!exponent.value.numerator().fits_ulong_p() ||
            exponent.value.numerator().get_ui() > kMaxExponent) {
            throw ParseError(exponent.pos, "exponent exceeds the limit of 1048576");
        }
        OpExprAst power;
        power.kind = OpExprAst::Kind::Power;
        power.exponent = exponent.value.numerator().get_ui();
        power.begin = base.begin;
        power.end = exponent.pos;
        power.children.push_back(std::move(base));
        return power;
    }

    OpExprAst parse_atom(std::size_t depth) {
        const Token& tok = peek();
        OpExprAst node;
        node.begin = tok.pos;
        node.end = tok.pos;
        switch (tok.kind) {
            case TokenKind::AtomX:
                node.kind = OpExprAst::Kind::AtomX;
                take();
                return node;
            case TokenKind::AtomP:
                node.kind = OpExprAst::Kind::AtomP;
                take();
                return node;
            case TokenKind::AtomI:
                node.kind = OpExprAst::Kind::AtomI;
                take();
                return node;
            case TokenKind::AtomSqrt2:
                node.kind = OpExprAst::Kind::AtomSqrt2;
                take();
                return node;
            case TokenKind::Number:
                node.kind = OpExprAst::Kind::AtomRational;
                node.value = take().value;
                return node;
            case TokenKind::LParen: {
                take();
                OpExprAst inner = parse_expr(depth + 1);
                inner.begin = tok.pos;
                inner.end = peek().pos;
                expect(TokenKind::RParen, "')'");
                return inner;
            }
            case TokenKind::LBracket: {
                take();
                node.kind = OpExprAst::Kind::Commutator;
                node.children.push_back(parse_expr(depth + 1));
                expect(TokenKind::Comma, "','");
                node.children.push_back(parse_expr(depth + 1));
                node.end = peek().pos;
                expect(TokenKind::RBracket, "']'");
                return node;
            }
            case TokenKind::Conj: {
                take();
                node.kind = OpExprAst::Kind::Conjugate;
                expect(TokenKind::LParen, "'('");
                node.children.push_back(parse_expr(depth + 1));
                expect(TokenKind::Semicolon, "';'");
                node.children.push_back(parse_expr(depth + 1));
                node.end = peek().pos;
                expect(TokenKind::RParen, "')'");
                return node;
            }
            case TokenKind::End:
                throw ParseError(tok.pos, "unexpected end of input, expected expression");
            default:
                throw ParseError(tok.pos, "unexpected token '" + tok.text + "'");
        }
    }

    std::vector<Token> tokens_;
    std::size_t index_ = 0;
};

}  // namespace opexpr_detail

inline OpExprAst parse_opexpr(std::string_view text) {
    return opexpr_detail::Parser(opexpr_detail::lex(text)).parse();
}

/// Recursive evaluation into the normal-ordered algebra. conj(A; B) expands
/// the terminating ad-series e^A B e^{−A}; a series that fails to terminate
/// raises LowerError carrying the span of the conj subexpression.
inline OperatorPoly lower_ast(const OpExprAst& ast) {
    switch (ast.kind) {
        case OpExprAst::Kind::Sum: {
            OperatorPoly acc;
            for (const OpExprAst& child : ast.children) {
                acc += lower_ast(child);
            }
            return acc;
        }
        case OpExprAst::Kind::Product: {
            OperatorPoly acc = OperatorPoly::one();
            for (const OpExprAst& child : ast.children) {
                acc = acc * lower_ast(child);
            }
            return acc;
        }
        case OpExprAst::Kind::Power:
            return op_power(lower_ast(ast.children.front()), ast.exponent);
        case OpExprAst::Kind::Commutator:
            return commutator(lower_ast(ast.children.front()), lower_ast(ast.children.back()));
        case OpExprAst::Kind::Conjugate: {
            const OperatorPoly exponent = lower_ast(ast.children.front());
            const OperatorPoly target = lower_ast(ast.children.back());
            try {
                return similarity_conjugate(exponent, target, QuadScalar::one());
            } catch (const NonTerminatingConjugation&) {
                throw LowerError(ast.begin, ast.end,
                                 "conjugation series does not terminate");
            }
        }
        case OpExprAst::Kind::AtomX:
            return OperatorPoly::x();
        case OpExprAst::Kind::AtomP:
            return OperatorPoly::p();
        case OpExprAst::Kind::AtomI:
            return OperatorPoly(QuadScalar::i());
        case OpExprAst::Kind::AtomSqrt2:
            return OperatorPoly(QuadScalar::sqrt2());
        case OpExprAst::Kind::AtomRational:
            return OperatorPoly(QuadScalar(ast.value));
    }
    throw std::logic_error("lower_ast: unhandled node kind");
}

namespace opexpr_detail {

/// One printable term: a signed product of a rational magnitude, optional
/// sqrt2/i factors, and a monomial suffix.
struct Piece {
    bool negative = false;
    std::string text;
};

inline void append_pieces(std::vector<Piece>& pieces, const QuadScalar& coeff,
                          const std::string& monomial) {
    struct Component {
        const Rational& value;
        const char* radical_tag;
    };
    const Component components[4] = {
        {coeff.a(), ""},
        {coeff.b(), "sqrt2"},
        {coeff.c(), "i"},
        {coeff.d(), "sqrt2*i"},
    };
    for (const Component& comp : components) {
        if (comp.value.is_zero()) {
            continue;
        }
        const Rational magnitude = comp.value.abs();
        std::string text;
        const bool has_tag = comp.radical_tag[0] != '\0';
        if (magnitude != Rational(1) || (!has_tag && monomial.empty())) {
            text = magnitude.to_string();
        }
        if (has_tag) {
            if (!text.empty()) {
                text += "*";
            }
            text += comp.radical_tag;
        }
        if (!monomial.empty()) {
            if (!text.empty()) {
                text += "*";
            }
            text += monomial;
        }
        pieces.push_back({comp.value.sign() < 0, std::move(text)});
    }
}

inline std::string join_pieces(const std::vector<Piece>& pieces) {
    if (pieces.empty()) {
        return "0";
    }
    std::string out;
    for (std::size_t k = 0; k < pieces.size(); ++k) {
        if (k == 0) {
            if (pieces[k].negative) {
                out += "- ";
            }
        } else {
            out += pieces[k].negative ? " - " : " + ";
        }
        out += pieces[k].text;
    }
    return out;
}

inline std::string monomial_text(std::size_t xdeg, std::size_t pdeg) {
    std::string out;
    if (xdeg == 1) {
        out += "x";
    } else if (xdeg > 1) {
        out += "x^" + std::to_string(xdeg);
    }
    if (pdeg > 0) {
        if (!out.empty()) {
            out += "*";
        }
        if (pdeg == 1) {
            out += "p";
        } else {
            out += "p^" + std::to_string(pdeg);
        }
    }
    return out;
}

}  // namespace opexpr_detail

/// Deterministic text form: terms in graded order (total degree descending,
/// then p-degree descending), each scalar split into its rational, sqrt2, i,
/// and sqrt2*i components. The output re-parses to the same OperatorPoly.
inline std::string format_canonical(const OperatorPoly& op) {
    if (!op.grade_zero_only()) {
        throw std::domain_error("format_canonical: graded operators are not printable");
    }
    std::vector<std::pair<OpMonomial, QuadScalar>> terms;
    for (const auto& [mono, c] : op.terms()) {
        terms.emplace_back(mono, c.at(0));
    }
    std::sort(terms.begin(), terms.end(), [](const auto& lhs, const auto& rhs) {
        if (lhs.first.total_degree() != rhs.first.total_degree()) {
            return lhs.first.total_degree() > rhs.first.total_degree();
        }
        return lhs.first.pdeg > rhs.first.pdeg;
    });
    std::vector<opexpr_detail::Piece> pieces;
    for (const auto& [mono, c] : terms) {
        opexpr_detail::append_pieces(pieces, c,
                                     opexpr_detail::monomial_text(mono.xdeg, mono.pdeg));
    }
    return opexpr_detail::join_pieces(pieces);
}

/// Same conventions as format_canonical, degree descending.
inline std::string format_univariate(const UnivariatePoly& poly) {
    std::vector<opexpr_detail::Piece> pieces;
    if (!poly.is_zero()) {
        for (std::size_t k = *poly.degree() + 1; k-- > 0;) {
            if (!poly.coeff(k).is_zero()) {
                opexpr_detail::append_pieces(pieces, poly.coeff(k),
                                             opexpr_detail::monomial_text(k, 0));
            }
        }
    }
    return opexpr_detail::join_pieces(pieces);
}

/// Same conventions, degree ascending; the generate/plain table form.
inline std::string format_univariate_ascending(const UnivariatePoly& poly) {
    std::vector<opexpr_detail::Piece> pieces;
    if (!poly.is_zero()) {
        for (std::size_t k = 0; k <= *poly.degree(); ++k) {
            if (!poly.coeff(k).is_zero()) {
                opexpr_detail::append_pieces(pieces, poly.coeff(k),
                                             opexpr_detail::monomial_text(k, 0));
            }
        }
    }
    return opexpr_detail::join_pieces(pieces);
}

}  // namespace weylpoly
