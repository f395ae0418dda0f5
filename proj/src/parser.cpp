#include "planaut/parser.hpp"

#include <cctype>
#include <optional>
#include <sstream>

namespace planaut {

namespace {

constexpr unsigned kMaxExponent = 1000;
constexpr std::size_t kMaxNesting = 256;

enum class Tok { Number, Ident, Plus, Minus, Star, Slash, Caret, LParen, RParen, Equals, Separator, End };

struct Token {
    Tok kind;
    std::string_view text;
    std::size_t offset;
    std::size_t line;
    std::size_t column;
};

std::string describe_token(const Token& t) {
    switch (t.kind) {
        case Tok::End: return "end of input";
        case Tok::Separator: return t.text == ";" ? "';'" : "end of line";
        default: return "'" + std::string(t.text) + "'";
    }
}

class Lexer {
public:
    explicit Lexer(std::string_view src) : src_(src) {}

    std::vector<Token> run() {
        std::vector<Token> out;
        while (pos_ < src_.size()) {
            const char ch = src_[pos_];
            if (ch == ' ' || ch == '\t' || ch == '\r') {
                advance(1);
            } else if (ch == '#') {
                while (pos_ < src_.size() && src_[pos_] != '\n') advance(1);
            } else if (ch == '\n' || ch == ';') {
                out.push_back(make(Tok::Separator, 1));
                if (ch == '\n') {
                    ++pos_;
                    ++line_;
                    column_ = 1;
                } else {
                    advance(1);
                }
            } else if (std::isdigit(static_cast<unsigned char>(ch))) {
                std::size_t n = 0;
                while (pos_ + n < src_.size() && std::isdigit(static_cast<unsigned char>(src_[pos_ + n]))) ++n;
                out.push_back(make(Tok::Number, n));
                advance(n);
            } else if (std::isalpha(static_cast<unsigned char>(ch)) || ch == '_') {
                std::size_t n = 0;
                while (pos_ + n < src_.size() &&
                       (std::isalnum(static_cast<unsigned char>(src_[pos_ + n])) || src_[pos_ + n] == '_')) {
                    ++n;
                }
                out.push_back(make(Tok::Ident, n));
                advance(n);
            } else {
                Tok kind;
                switch (ch) {
                    case '+': kind = Tok::Plus; break;
                    case '-': kind = Tok::Minus; break;
                    case '*': kind = Tok::Star; break;
                    case '/': kind = Tok::Slash; break;
                    case '^': kind = Tok::Caret; break;
                    case '(': kind = Tok::LParen; break;
                    case ')': kind = Tok::RParen; break;
                    case '=': kind = Tok::Equals; break;
                    default:
                        throw ParseError(line_, column_, {}, std::string(1, ch), "unexpected character");
                }
                out.push_back(make(kind, 1));
                advance(1);
            }
        }
        out.push_back(Token{Tok::End, {}, src_.size(), line_, column_});
        return out;
    }

private:
    Token make(Tok kind, std::size_t length) const {
        return Token{kind, src_.substr(pos_, length), pos_, line_, column_};
    }
    void advance(std::size_t n) {
        pos_ += n;
        column_ += n;
    }

    std::string_view src_;
    std::size_t pos_ = 0;
    std::size_t line_ = 1;
    std::size_t column_ = 1;
};

const std::vector<std::string> kOperandStart = {"number", "'x'", "'y'", "'('", "'-'"};

class Parser {
public:
    explicit Parser(std::vector<Token> tokens) : tokens_(std::move(tokens)) {}

    const Token& peek() const { return tokens_[pos_]; }
    const Token& previous() const { return tokens_[pos_ - 1]; }
    bool at(Tok kind) const { return peek().kind == kind; }
    const Token& take() { return tokens_[pos_++]; }

    [[noreturn]] void fail(std::vector<std::string> expected, const std::string& detail = {}) const {
        const Token& t = peek();
        throw ParseError(t.line, t.column, std::move(expected), describe_token(t), detail);
    }

    void skip_separators() {
        while (at(Tok::Separator)) take();
    }

    BivarPoly expr() {
        BivarPoly acc = term();
        while (at(Tok::Plus) || at(Tok::Minus)) {
            const bool minus = take().kind == Tok::Minus;
            BivarPoly rhs = term();
            if (minus) {
                acc -= rhs;
            } else {
                acc += rhs;
            }
        }
        return acc;
    }

    // Tokens that may legally follow a complete expression, for error sets.
    static std::vector<std::string> after_operand(std::vector<std::string> closers) {
        std::vector<std::string> out = {"'+'", "'-'", "'*'", "'^'"};
        out.insert(out.end(), closers.begin(), closers.end());
        return out;
    }

private:
    struct DepthGuard {
        explicit DepthGuard(Parser& p) : parser(p) {
            if (++parser.depth_ > kMaxNesting) parser.fail({}, "nesting too deep");
        }
        ~DepthGuard() { --parser.depth_; }
        DepthGuard(const DepthGuard&) = delete;
        DepthGuard& operator=(const DepthGuard&) = delete;
        Parser& parser;
    };

    BivarPoly term() {
        BivarPoly acc = unary();
        while (at(Tok::Star)) {
            take();
            acc *= unary();
        }
        return acc;
    }

    BivarPoly unary() {
        if (at(Tok::Minus)) {
            take();
            const DepthGuard guard(*this);
            return -unary();
        }
        return power();
    }

    BivarPoly power() {
        BivarPoly base = primary();
        if (!at(Tok::Caret)) return base;
        take();
        return pow(base, exponent());
    }

    unsigned exponent() {
        if (!at(Tok::Number)) fail({"non-negative integer exponent"});
        const Token& t = take();
        const unsigned base = small_integer(t);
        if (!at(Tok::Caret)) return base;
        take();
        const unsigned rest = exponent();
        unsigned long long v = 1;
        for (unsigned i = 0; i < rest; ++i) {
            v *= base;
            if (v > kMaxExponent) break;
        }
        if (v > kMaxExponent) throw ParseError(t.line, t.column, {}, std::string(t.text), "exponent too large");
        return static_cast<unsigned>(v);
    }

    static unsigned small_integer(const Token& t) {
        if (t.text.size() > 5) throw ParseError(t.line, t.column, {}, std::string(t.text), "exponent too large");
        const unsigned v = static_cast<unsigned>(std::stoul(std::string(t.text)));
        if (v > kMaxExponent) throw ParseError(t.line, t.column, {}, std::string(t.text), "exponent too large");
        return v;
    }

    BivarPoly primary() {
        const Token& t = peek();
        switch (t.kind) {
            case Tok::Number: {
                take();
                std::string literal(t.text);
                if (at(Tok::Slash)) {
                    take();
                    if (!at(Tok::Number)) fail({"number"}, "rational literal needs a denominator");
                    const Token& den = take();
                    if (den.text.find_first_not_of('0') == std::string_view::npos) {
                        throw ParseError(den.line, den.column, {}, std::string(den.text), "zero denominator");
                    }
                    literal += "/" + std::string(den.text);
                }
                return BivarPoly(Rational::parse(literal));
            }
            case Tok::Ident:
                if (t.text == "x") {
                    take();
                    return BivarPoly::x();
                }
                if (t.text == "y") {
                    take();
                    return BivarPoly::y();
                }
                fail(kOperandStart, "only the variables x and y are allowed");
            case Tok::LParen: {
                take();
                const DepthGuard guard(*this);
                BivarPoly inner = expr();
                if (!at(Tok::RParen)) fail(after_operand({"')'"}));
                take();
                return inner;
            }
            default:
                fail(kOperandStart);
        }
    }

    std::vector<Token> tokens_;
    std::size_t pos_ = 0;
    std::size_t depth_ = 0;
};

std::string monomial_text(const Monomial& m) {
    std::string out;
    const auto factor = [&](const char* name, std::uint32_t e) {
        if (e == 0) return;
        if (!out.empty()) out += "*";
        out += name;
        if (e > 1) out += "^" + std::to_string(e);
    };
    factor("x", m.xexp);
    factor("y", m.yexp);
    return out;
}

}  // namespace

ParseError::ParseError(std::size_t line, std::size_t column, std::vector<std::string> expected, std::string found,
                       const std::string& detail)
    : Error(ErrorCode::Parse,
            [&] {
                std::ostringstream os;
                os << line << ":" << column << ": ";
                if (!detail.empty()) os << detail << "; ";
                if (!expected.empty()) {
                    os << "expected ";
                    if (expected.size() > 1) os << "one of ";
                    for (std::size_t i = 0; i < expected.size(); ++i) os << (i ? ", " : "") << expected[i];
                    os << " but ";
                }
                os << "found " << (found.empty() ? "nothing" : found);
                return os.str();
            }()),
      line_(line),
      column_(column),
      expected_(std::move(expected)),
      found_(std::move(found)) {}

BivarPoly parse_poly(std::string_view text) {
    Parser parser(Lexer(text).run());
    parser.skip_separators();
    BivarPoly p = parser.expr();
    parser.skip_separators();
    if (!parser.at(Tok::End)) parser.fail(Parser::after_operand({"end of input"}));
    return p;
}

std::string print_poly(const BivarPoly& p) {
    if (p.is_zero()) return "0";
    std::string out;
    bool first = true;
    for (const auto& [m, c] : p.terms()) {
        const bool negative = c.sign() < 0;
        if (first) {
            if (negative) out += "-";
        } else {
            out += negative ? " - " : " + ";
        }
        first = false;
        const Rational magnitude = c.abs();
        const std::string mono = monomial_text(m);
        if (mono.empty()) {
            out += magnitude.to_string();
        } else if (magnitude.is_one()) {
            out += mono;
        } else {
            out += magnitude.to_string() + "*" + mono;
        }
    }
    return out;
}

MapDocument parse_map_document(std::string_view text) {
    Parser parser(Lexer(text).run());
    std::optional<BivarPoly> f;
    std::optional<BivarPoly> g;
    MapDocument doc;
    for (;;) {
        parser.skip_separators();
        if (parser.at(Tok::End)) break;
        if (!parser.at(Tok::Ident) || (parser.peek().text != "f" && parser.peek().text != "g")) {
            parser.fail({"'f'", "'g'"});
        }
        const bool is_f = parser.peek().text == "f";
        if ((is_f && f) || (!is_f && g)) parser.fail({is_f ? "'g'" : "'f'"}, "duplicate binding");
        parser.take();
        if (!parser.at(Tok::Equals)) parser.fail({"'='"});
        parser.take();
        const std::size_t begin = parser.peek().offset;
        BivarPoly value = parser.expr();
        const Token& last = parser.previous();
        const std::string source(text.substr(begin, last.offset + last.text.size() - begin));
        if (!parser.at(Tok::Separator) && !parser.at(Tok::End)) {
            parser.fail(Parser::after_operand({"';'", "end of line"}));
        }
        if (is_f) {
            f = std::move(value);
            doc.f_source = source;
        } else {
            g = std::move(value);
            doc.g_source = source;
        }
    }
    if (!f || !g) parser.fail({f ? "'g'" : "'f'"}, "both f and g must be defined");
    doc.parsed = {std::move(*f), std::move(*g)};
    return doc;
}

std::string print_map_document(const PlaneMap& map) {
    return "f = " + print_poly(map.f) + "\ng = " + print_poly(map.g) + "\n";
}

}  // namespace planaut
