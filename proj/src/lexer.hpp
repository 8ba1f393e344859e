#pragma once

#include <cctype>
#include <string>
#include <string_view>

#include "cdalg/error.hpp"
#include "cdalg/rational.hpp"

namespace cdalg::detail {

enum class TokenKind { number, basis, ident, plus, minus, star, slash, lparen, rparen, comma, end };

struct Token {
    TokenKind kind;
    std::string text;
    std::size_t index = 0; // basis index for TokenKind::basis
    std::size_t pos = 0;
};

class Lexer {
  public:
    explicit Lexer(std::string_view src) : src_(src) { advance(); }

    const Token& peek() const { return current_; }

    Token next() {
        Token t = current_;
        advance();
        return t;
    }

    [[noreturn]] void error(const std::string& what) const {
        fail(ErrorCode::parse, what + " at offset " + std::to_string(current_.pos) + " in '" + std::string(src_) + "'");
    }

    /// coeff := int | int '/' int
    Rational parse_coefficient() {
        if (current_.kind != TokenKind::number) error("expected integer");
        std::string text = next().text;
        if (current_.kind == TokenKind::slash) {
            next();
            if (current_.kind != TokenKind::number) error("expected denominator");
            text += "/" + next().text;
        }
        return Rational::parse(text);
    }

  private:
    void advance() {
        while (pos_ < src_.size() && std::isspace(static_cast<unsigned char>(src_[pos_]))) ++pos_;
        current_ = Token{TokenKind::end, "", 0, pos_};
        if (pos_ >= src_.size()) return;
        const char c = src_[pos_];
        const std::size_t start = pos_;
        if (std::isdigit(static_cast<unsigned char>(c))) {
            while (pos_ < src_.size() && std::isdigit(static_cast<unsigned char>(src_[pos_]))) ++pos_;
            current_ = Token{TokenKind::number, std::string(src_.substr(start, pos_ - start)), 0, start};
            return;
        }
        if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
            while (pos_ < src_.size() &&
                   (std::isalnum(static_cast<unsigned char>(src_[pos_])) || src_[pos_] == '_')) {
                ++pos_;
            }
            std::string word(src_.substr(start, pos_ - start));
            if (word.size() > 1 && word[0] == 'e' &&
                word.find_first_not_of("0123456789", 1) == std::string::npos) {
                if (word.size() > 19) fail(ErrorCode::out_of_range, "basis index too large: " + word);
                current_ = Token{TokenKind::basis, word, std::stoull(word.substr(1)), start};
            } else {
                current_ = Token{TokenKind::ident, word, 0, start};
            }
            return;
        }
        ++pos_;
        TokenKind k;
        switch (c) {
        case '+': k = TokenKind::plus; break;
        case '-': k = TokenKind::minus; break;
        case '*': k = TokenKind::star; break;
        case '/': k = TokenKind::slash; break;
        case '(': k = TokenKind::lparen; break;
        case ')': k = TokenKind::rparen; break;
        case ',': k = TokenKind::comma; break;
        default:
            fail(ErrorCode::parse, std::string("unexpected character '") + c + "' at offset " + std::to_string(start) +
                                       " in '" + std::string(src_) + "'");
        }
        current_ = Token{k, std::string(1, c), 0, start};
    }

    std::string_view src_;
    std::size_t pos_ = 0;
    Token current_;
};

} // namespace cdalg::detail
