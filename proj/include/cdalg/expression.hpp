#pragma once

#include <string_view>

#include "cdalg/element.hpp"

namespace cdalg {

/// Evaluates an algebra expression at the given level. Extends the literal
/// grammar with products, parentheses and functions:
///
///     expr  := ['+'|'-'] prod (('+'|'-') prod)*
///     prod  := unary (('*' unary) | basis)*      -- '*' is left-associative
///     unary := '-' unary | atom
///     atom  := coeff | 'e' index | '(' expr ')'
///            | conj(expr) | tilde(expr) | comm(expr, expr) | assoc(expr, expr, expr)
///
/// The algebra is nonassociative, so "a*b*c" means "(a*b)*c"; write the
/// parentheses when the other grouping is wanted.
Element evaluate(unsigned level, std::string_view text);

} // namespace cdalg
