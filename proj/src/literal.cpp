#include "cdalg/literal.hpp"

#include <cctype>
#include <string>

#include "cdalg/error.hpp"
#include "lexer.hpp"

namespace cdalg {

Element parse_element(unsigned level, std::string_view text) {
    detail::Lexer lex(text);
    Element out(level);
    bool first = true;
    while (true) {
        int sign = 1;
        const auto& tok = lex.peek();
        if (tok.kind == detail::TokenKind::plus || tok.kind == detail::TokenKind::minus) {
            sign = tok.kind == detail::TokenKind::minus ? -1 : 1;
            lex.next();
        } else if (!first) {
            if (tok.kind == detail::TokenKind::end) break;
            lex.error("expected '+' or '-'");
        } else if (tok.kind == detail::TokenKind::end) {
            lex.error("empty literal");
        }
        first = false;

        Rational coeff(1);
        std::size_t index = 0;
        if (lex.peek().kind == detail::TokenKind::number) {
            coeff = lex.parse_coefficient();
            if (lex.peek().kind == detail::TokenKind::star) {
                lex.next();
                if (lex.peek().kind != detail::TokenKind::basis) lex.error("expected basis element after '*'");
            }
            if (lex.peek().kind == detail::TokenKind::basis) index = lex.next().index;
        } else if (lex.peek().kind == detail::TokenKind::basis) {
            index = lex.next().index;
        } else {
            lex.error("expected coefficient or basis element");
        }
        if (index >= out.dimension()) {
            fail(ErrorCode::out_of_range,
                 "e" + std::to_string(index) + " does not exist at level " + std::to_string(level));
        }
        Rational c = out[index];
        c += sign < 0 ? -coeff : coeff;
        out.set(index, std::move(c));
    }
    return out;
}

std::string format_element(const Element& x) {
    std::string out;
    for (std::size_t i = 0; i < x.dimension(); ++i) {
        const Rational& c = x[i];
        if (c.is_zero()) continue;
        const bool negative = c.sign() < 0;
        if (out.empty()) {
            if (negative) out += "-";
        } else {
            out += negative ? " - " : " + ";
        }
        const Rational mag = c.abs();
        if (i == 0) {
            out += mag.str();
        } else {
            if (!mag.is_one()) out += mag.str() + "*";
            out += "e" + std::to_string(i);
        }
    }
    return out.empty() ? "0" : out;
}

} // namespace cdalg
