#include "gocohom/expr.hpp"

#include <algorithm>
#include <cctype>
#include <vector>

namespace gocohom {

namespace {

struct Token {
    enum class Kind { Number, Lambda, GenA, GenB, GenW, GenD, Plus, Star, Caret, LParen, RParen, End };
    Kind kind = Kind::End;
    std::size_t pos = 0;
    long long num = 0;            // Number, or generator subscript
    std::vector<int> members;     // GenD
};

class Lexer {
public:
    Lexer(std::string_view text) : text_(text) {}

    std::vector<Token> run() {
        std::vector<Token> out;
        while (true) {
            skip_ws();
            const std::size_t pos = i_;
            if (i_ >= text_.size()) {
                out.push_back({Token::Kind::End, pos, 0, {}});
                return out;
            }
            const char c = text_[i_];
            if (c == '+') { ++i_; out.push_back({Token::Kind::Plus, pos, 0, {}}); continue; }
            if (c == '*') { ++i_; out.push_back({Token::Kind::Star, pos, 0, {}}); continue; }
            if (c == '^') { ++i_; out.push_back({Token::Kind::Caret, pos, 0, {}}); continue; }
            if (c == '(') { ++i_; out.push_back({Token::Kind::LParen, pos, 0, {}}); continue; }
            if (c == ')') { ++i_; out.push_back({Token::Kind::RParen, pos, 0, {}}); continue; }
            if (std::isdigit(static_cast<unsigned char>(c))) {
                out.push_back({Token::Kind::Number, pos, read_number(), {}});
                continue;
            }
            if (std::isalpha(static_cast<unsigned char>(c))) {
                out.push_back(read_ident(pos));
                continue;
            }
            throw parse_error(pos, std::string("unexpected character '") + c + "'");
        }
    }

private:
    void skip_ws() {
        while (i_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[i_]))) ++i_;
    }

    long long read_number() {
        long long v = 0;
        while (i_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[i_]))) {
            v = v * 10 + (text_[i_] - '0');
            if (v > 1'000'000) throw parse_error(i_, "number too large");
            ++i_;
        }
        return v;
    }

    Token read_ident(std::size_t pos) {
        const char letter = text_[i_++];
        if (letter == 'd') {
            if (i_ >= text_.size() || text_[i_] != '{')
                throw parse_error(pos, "expected '{' after 'd'");
            ++i_;
            std::vector<int> members;
            while (true) {
                skip_ws();
                if (i_ >= text_.size() || !std::isdigit(static_cast<unsigned char>(text_[i_])))
                    throw parse_error(i_, "expected an index inside d{...}");
                members.push_back(static_cast<int>(read_number()));
                skip_ws();
                if (i_ < text_.size() && text_[i_] == ',') { ++i_; continue; }
                if (i_ < text_.size() && text_[i_] == '}') { ++i_; break; }
                throw parse_error(i_, "expected ',' or '}' in d{...}");
            }
            return {Token::Kind::GenD, pos, 0, std::move(members)};
        }
        std::string word(1, letter);
        while (i_ < text_.size() &&
               std::isalnum(static_cast<unsigned char>(text_[i_])))
            word += text_[i_++];
        if (word == "L") return {Token::Kind::Lambda, pos, 0, {}};
        if (word.size() >= 2 && (word[0] == 'a' || word[0] == 'b' || word[0] == 'w')) {
            long long sub = 0;
            for (std::size_t k = 1; k < word.size(); ++k) {
                if (!std::isdigit(static_cast<unsigned char>(word[k])))
                    throw parse_error(pos, "unknown identifier '" + word + "'");
                sub = sub * 10 + (word[k] - '0');
            }
            const Token::Kind kind = word[0] == 'a'   ? Token::Kind::GenA
                                     : word[0] == 'b' ? Token::Kind::GenB
                                                      : Token::Kind::GenW;
            return {kind, pos, sub, {}};
        }
        throw parse_error(pos, "unknown identifier '" + word + "'");
    }

    std::string_view text_;
    std::size_t i_ = 0;
};

class Parser {
public:
    Parser(std::vector<Token> tokens, RingPtr ring, int n, bool w_mode,
           const CohomRingLayout* layout)
        : tokens_(std::move(tokens)), ring_(std::move(ring)), n_(n), w_mode_(w_mode),
          layout_(layout) {}

    Poly2 run() {
        Poly2 p = parse_sum();
        expect(Token::Kind::End, "unexpected trailing input");
        return p;
    }

private:
    const Token& cur() const { return tokens_[i_]; }
    void advance() { ++i_; }
    void expect(Token::Kind kind, const char* message) {
        if (cur().kind != kind) throw parse_error(cur().pos, message);
    }

    Poly2 parse_sum() {
        Poly2 acc = parse_product();
        while (cur().kind == Token::Kind::Plus) {
            advance();
            acc = acc + parse_product();
        }
        return acc;
    }

    Poly2 parse_product() {
        Poly2 acc = parse_factor();
        while (cur().kind == Token::Kind::Star) {
            advance();
            acc = acc * parse_factor();
        }
        return acc;
    }

    Poly2 parse_factor() {
        Poly2 base = parse_atom();
        if (cur().kind == Token::Kind::Caret) {
            advance();
            if (cur().kind != Token::Kind::Number)
                throw parse_error(cur().pos, "expected an exponent after '^'");
            const long long e = cur().num;
            advance();
            return pow(base, static_cast<unsigned>(e));
        }
        return base;
    }

    Poly2 parse_atom() {
        const Token t = cur();
        switch (t.kind) {
            case Token::Kind::Number:
                advance();
                return (t.num & 1) ? Poly2::one(ring_) : Poly2::zero(ring_);
            case Token::Kind::LParen: {
                advance();
                Poly2 inner = parse_sum();
                expect(Token::Kind::RParen, "expected ')'");
                advance();
                return inner;
            }
            case Token::Kind::Lambda:
                advance();
                return Poly2::variable(ring_, layout_->idx_lambda());
            case Token::Kind::GenA: {
                advance();
                const long long sub = t.num;
                if (sub < 1 || sub > 2 * n_ - 1 || sub % 2 == 0)
                    throw parse_error(t.pos, "a-subscript must be odd and at most 2n-1");
                return Poly2::variable(ring_, layout_->idx_a(static_cast<int>((sub + 1) / 2)));
            }
            case Token::Kind::GenB: {
                advance();
                const long long sub = t.num;
                if (sub < 4 || sub > 4 * n_ || sub % 4 != 0)
                    throw parse_error(t.pos, "b-subscript must be a multiple of 4, at most 4n");
                return Poly2::variable(ring_, layout_->idx_b(static_cast<int>(sub / 4)));
            }
            case Token::Kind::GenW: {
                advance();
                const long long sub = t.num;
                if (sub < 1 || sub > 2 * n_)
                    throw parse_error(t.pos, "w-subscript must be between 1 and 2n");
                return Poly2::variable(ring_, static_cast<std::size_t>(sub - 1));
            }
            case Token::Kind::GenD: {
                advance();
                std::vector<int> members = t.members;
                std::sort(members.begin(), members.end());
                if (std::adjacent_find(members.begin(), members.end()) != members.end())
                    throw parse_error(t.pos, "repeated index inside d{...}");
                if (members.size() < 2)
                    throw parse_error(t.pos, "d{...} needs at least two indices");
                if (members.front() < 1 || members.back() > n_)
                    throw parse_error(t.pos, "d{...} index out of range for n");
                return Poly2::variable(ring_, layout_->idx_d(layout_->rank_of(members)));
            }
            default:
                throw parse_error(t.pos, "expected a value");
        }
    }

    std::vector<Token> tokens_;
    RingPtr ring_;
    int n_;
    bool w_mode_;
    const CohomRingLayout* layout_;
    std::size_t i_ = 0;
};

}  // namespace

Parsed parse_expr(std::string_view text, int n) {
    if (n < 1) throw std::invalid_argument("parse_expr: n must be positive");
    std::vector<Token> tokens = Lexer(text).run();

    bool has_w = false, has_model = false;
    std::size_t mix_pos = 0;
    for (const Token& t : tokens) {
        const bool w = t.kind == Token::Kind::GenW;
        const bool model = t.kind == Token::Kind::Lambda || t.kind == Token::Kind::GenA ||
                           t.kind == Token::Kind::GenB || t.kind == Token::Kind::GenD;
        if ((w && has_model) || (model && has_w)) mix_pos = t.pos;
        has_w = has_w || w;
        has_model = has_model || model;
    }
    if (has_w && has_model)
        throw parse_error(mix_pos, "cannot mix w-variables with L/a/b/d generators");

    if (has_w) {
        Parser parser(std::move(tokens), c_ring(n), n, true, nullptr);
        return parser.run();
    }
    const CohomRingLayout layout = cohom_free_layout(n);
    Parser parser(std::move(tokens), layout.ring, n, false, &layout);
    return eval_in_model(n, parser.run());
}

}  // namespace gocohom
