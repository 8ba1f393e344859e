#include "cdalg/expression.hpp"

#include <string>
#include <vector>

#include "cdalg/error.hpp"
#include "lexer.hpp"

namespace cdalg {

namespace {

using detail::Lexer;
using detail::TokenKind;

class Evaluator {
  public:
    Evaluator(unsigned level, std::string_view text) : level_(level), lex_(text) {}

    Element run() {
        Element v = expr();
        if (lex_.peek().kind != TokenKind::end) lex_.error("unexpected trailing input");
        return v;
    }

  private:
    Element expr() {
        Element acc(level_);
        bool first = true;
        while (true) {
            const TokenKind k = lex_.peek().kind;
            int sign = 1;
            if (k == TokenKind::plus || k == TokenKind::minus) {
                sign = k == TokenKind::minus ? -1 : 1;
                lex_.next();
            } else if (!first) {
                break;
            }
            first = false;
            Element term = prod();
            if (sign < 0) {
                acc -= term;
            } else {
                acc += term;
            }
        }
        return acc;
    }

    Element prod() {
        Element acc = unary();
        while (true) {
            const TokenKind k = lex_.peek().kind;
            if (k == TokenKind::star) {
                lex_.next();
                acc = multiply(acc, unary());
            } else if (k == TokenKind::basis) {
                // juxtaposition such as "2e10"
                acc = multiply(acc, atom());
            } else {
                return acc;
            }
        }
    }

    Element unary() {
        if (lex_.peek().kind == TokenKind::minus) {
            lex_.next();
            return -unary();
        }
        return atom();
    }

    Element atom() {
        const auto& tok = lex_.peek();
        switch (tok.kind) {
        case TokenKind::number:
            return Element::scalar(level_, lex_.parse_coefficient());
        case TokenKind::basis: {
            const std::size_t index = lex_.next().index;
            if (index >= dimension_of(level_)) {
                fail(ErrorCode::out_of_range,
                     "e" + std::to_string(index) + " does not exist at level " + std::to_string(level_));
            }
            return Element::basis(level_, index);
        }
        case TokenKind::lparen: {
            lex_.next();
            Element v = expr();
            expect(TokenKind::rparen, "')'");
            return v;
        }
        case TokenKind::ident:
            return call();
        default:
            lex_.error("expected operand");
        }
    }

    Element call() {
        const std::string name = lex_.next().text;
        expect(TokenKind::lparen, "'(' after " + name);
        std::vector<Element> args;
        args.push_back(expr());
        while (lex_.peek().kind == TokenKind::comma) {
            lex_.next();
            args.push_back(expr());
        }
        expect(TokenKind::rparen, "')'");
        auto arity = [&](std::size_t n) {
            if (args.size() != n) {
                fail(ErrorCode::parse, name + "() takes " + std::to_string(n) + " argument(s), got " +
                                           std::to_string(args.size()));
            }
        };
        if (name == "conj") {
            arity(1);
            return conjugate(args[0]);
        }
        if (name == "tilde") {
            arity(1);
            return tilde(args[0]);
        }
        if (name == "comm") {
            arity(2);
            return commutator(args[0], args[1]);
        }
        if (name == "assoc") {
            arity(3);
            return associator(args[0], args[1], args[2]);
        }
        fail(ErrorCode::parse, "unknown function '" + name + "' (known: conj, tilde, comm, assoc)");
    }

    void expect(TokenKind kind, const std::string& what) {
        if (lex_.peek().kind != kind) lex_.error("expected " + what);
        lex_.next();
    }

    unsigned level_;
    Lexer lex_;
};

} // namespace

Element evaluate(unsigned level, std::string_view text) { return Evaluator(level, text).run(); }

} // namespace cdalg
