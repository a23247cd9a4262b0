#include "parser.hpp"

#include <cctype>
#include <string>

namespace amoeba::detail {

namespace {

struct Token {
    enum class Kind { Number, Z, X, Op, End } kind;
    std::string text;
    std::size_t index = 0; // variable index for X
    std::size_t pos = 0;
};

class Lexer {
  public:
    explicit Lexer(std::string_view text) : text_(text) {}

    std::vector<Token> run() {
        std::vector<Token> out;
        std::size_t i = 0;
        while (i < text_.size()) {
            char c = text_[i];
            if (std::isspace(static_cast<unsigned char>(c))) {
                ++i;
                continue;
            }
            if (std::isdigit(static_cast<unsigned char>(c))) {
                std::size_t j = i;
                while (j < text_.size() && std::isdigit(static_cast<unsigned char>(text_[j])))
                    ++j;
                out.push_back({Token::Kind::Number, std::string(text_.substr(i, j - i)), 0, i});
                i = j;
                continue;
            }
            if (c == 'z') {
                out.push_back({Token::Kind::Z, "z", 0, i});
                ++i;
                continue;
            }
            if (c == 'x') {
                std::size_t j = i + 1;
                while (j < text_.size() && std::isdigit(static_cast<unsigned char>(text_[j])))
                    ++j;
                if (j == i + 1)
                    throw SyntaxError(i, "variable 'x' needs an index");
                std::size_t idx = std::stoul(std::string(text_.substr(i + 1, j - i - 1)));
                if (idx == 0)
                    throw SyntaxError(i, "variable indices start at 1");
                out.push_back({Token::Kind::X, std::string(text_.substr(i, j - i)), idx, i});
                i = j;
                continue;
            }
            if (std::string_view("+-*/^()").find(c) != std::string_view::npos) {
                out.push_back({Token::Kind::Op, std::string(1, c), 0, i});
                ++i;
                continue;
            }
            throw SyntaxError(i, std::string("unexpected character '") + c + "'");
        }
        out.push_back({Token::Kind::End, "", 0, text_.size()});
        return out;
    }

  private:
    std::string_view text_;
};

class Parser {
  public:
    Parser(std::string_view text, std::size_t rank, Field field)
        : tokens_(Lexer(text).run()), rank_(rank), field_(field) {}

    TermMap parse() {
        TermMap result = expr();
        if (peek().kind != Token::Kind::End)
            throw SyntaxError(peek().pos, "unexpected '" + peek().text + "'");
        return result;
    }

  private:
    const Token &peek() const { return tokens_[pos_]; }
    bool is_op(char c) const { return peek().kind == Token::Kind::Op && peek().text[0] == c; }

    Scalar lift(const Scalar &s) const { return s.in_field(field_); }

    TermMap constant(const Scalar &c) const {
        TermMap m;
        if (!c.is_zero())
            m.emplace(Exponent(rank_, 0), lift(c));
        return m;
    }

    static void add_into(TermMap &acc, const TermMap &other, bool negate) {
        for (const auto &[e, c] : other) {
            auto it = acc.find(e);
            Scalar v = negate ? -c : c;
            if (it == acc.end()) {
                acc.emplace(e, v);
            } else {
                it->second = it->second + v;
                if (it->second.is_zero())
                    acc.erase(it);
            }
        }
    }

    static TermMap multiply(const TermMap &a, const TermMap &b) {
        TermMap out;
        for (const auto &[ea, ca] : a) {
            for (const auto &[eb, cb] : b) {
                Exponent e(ea);
                for (std::size_t i = 0; i < e.size(); ++i)
                    e[i] += eb[i];
                add_into(out, TermMap{{e, ca * cb}}, false);
            }
        }
        return out;
    }

    TermMap invert(const TermMap &m, std::size_t pos) const {
        if (m.empty())
            throw Error(ErrorCode::ZeroInput, "division by zero at position " + std::to_string(pos));
        if (m.size() != 1)
            throw SyntaxError(pos, "only monomials and scalars can be inverted");
        const auto &[e, c] = *m.begin();
        Exponent neg(e);
        for (auto &x : neg)
            x = -x;
        return TermMap{{neg, lift(Scalar(1)) / c}};
    }

    TermMap expr() {
        TermMap acc;
        bool negate = false;
        if (is_op('+') || is_op('-')) {
            negate = is_op('-');
            ++pos_;
        }
        add_into(acc, term(), negate);
        while (is_op('+') || is_op('-')) {
            negate = is_op('-');
            ++pos_;
            add_into(acc, term(), negate);
        }
        return acc;
    }

    bool starts_atom() const {
        auto k = peek().kind;
        return k == Token::Kind::Number || k == Token::Kind::Z || k == Token::Kind::X || is_op('(');
    }

    TermMap term() {
        TermMap acc = power();
        while (true) {
            if (is_op('*')) {
                ++pos_;
                acc = multiply(acc, power());
            } else if (is_op('/')) {
                std::size_t at = peek().pos;
                ++pos_;
                acc = multiply(acc, invert(power(), at));
            } else if (starts_atom()) {
                acc = multiply(acc, power());
            } else {
                return acc;
            }
        }
    }

    TermMap power() {
        std::size_t at = peek().pos;
        TermMap base = atom();
        if (!is_op('^'))
            return base;
        ++pos_;
        bool negative = false;
        if (is_op('-') || is_op('+')) {
            negative = is_op('-');
            ++pos_;
        }
        if (peek().kind != Token::Kind::Number)
            throw SyntaxError(peek().pos, "expected an integer exponent");
        unsigned long k = std::stoul(peek().text);
        if (k > 4096)
            throw SyntaxError(peek().pos, "exponent too large");
        ++pos_;
        if (negative)
            base = invert(base, at);
        TermMap result = constant(Scalar(1));
        for (unsigned long i = 0; i < k; ++i)
            result = multiply(result, base);
        return result;
    }

    TermMap atom() {
        const Token &t = peek();
        switch (t.kind) {
        case Token::Kind::Number: {
            ++pos_;
            return constant(Scalar(Rational(Integer(t.text))));
        }
        case Token::Kind::Z: {
            if (field_ != Field::Qz)
                throw SyntaxError(t.pos, "variable z is not allowed over Q");
            ++pos_;
            return constant(Scalar(RationalFunction(Poly::z())));
        }
        case Token::Kind::X: {
            if (t.index > rank_)
                throw Error(ErrorCode::RankMismatch, "variable " + t.text + " exceeds rank " +
                                                         std::to_string(rank_) + " at position " +
                                                         std::to_string(t.pos));
            ++pos_;
            Exponent e(rank_, 0);
            e[t.index - 1] = 1;
            return TermMap{{e, lift(Scalar(1))}};
        }
        case Token::Kind::Op:
            if (t.text == "(") {
                ++pos_;
                TermMap inner = expr();
                if (!is_op(')'))
                    throw SyntaxError(peek().pos, "expected ')'");
                ++pos_;
                return inner;
            }
            throw SyntaxError(t.pos, "unexpected '" + t.text + "'");
        case Token::Kind::End: throw SyntaxError(t.pos, "unexpected end of input");
        }
        throw SyntaxError(t.pos, "unexpected token");
    }

    std::vector<Token> tokens_;
    std::size_t pos_ = 0;
    std::size_t rank_;
    Field field_;
};

} // namespace

TermMap parse_expression(std::string_view text, std::size_t rank, Field field) {
    return Parser(text, rank, field).parse();
}

Scalar parse_scalar_expression(std::string_view text, Field field) {
    TermMap m = Parser(text, 0, field).parse();
    if (m.empty())
        return Scalar(Rational(0)).in_field(field);
    return m.begin()->second;
}

} // namespace amoeba::detail
