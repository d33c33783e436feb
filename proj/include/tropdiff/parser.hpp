#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "tropdiff/diffalg.hpp"
#include "tropdiff/natset.hpp"
#include "tropdiff/rational.hpp"
#include "tropdiff/series.hpp"

namespace tropdiff {

// Expression grammar:
//   poly   := term (('+'|'-') term)*
//   term   := factor ('*' factor)*
//   factor := base ('^' nat)?
//   base   := rational | 't' | 'x(' nat ',' nat ')' | '(' poly ')'
//   rational := ['-'] nat ('/' nat)?
struct SourceSpan {
    std::size_t begin = 0;
    std::size_t end = 0;
};

struct Ast {
    enum class Kind { Rational, T, Var, Pow, Mul, Sum, Paren };
    Kind kind = Kind::Rational;
    SourceSpan span;
    Rational value;           // Rational
    std::uint32_t var_i = 0;  // Var
    std::uint32_t var_j = 0;  // Var
    std::uint32_t exponent = 0; // Pow
    std::vector<Ast> children;  // Pow: base; Mul: factors; Sum: terms; Paren: inner
    std::vector<bool> negated;  // Sum: sign per term (index 0 unused, always false)
};

// Structural equality, ignoring source spans.
bool ast_equal(const Ast& a, const Ast& b);

// Canonical text; parsing it again yields a structurally identical tree.
std::string ast_to_string(const Ast& a);

Ast parse_poly_ast(const std::string& text);

// Elaborates to a differential polynomial with coefficients truncated at
// `trunc`. VariableIndex for x(i,j) with i < 1.
DiffPolynomial parse_poly(const std::string& text, std::uint32_t trunc);

// A polynomial in t alone, as a series. `exact` marks whether the text is the
// whole series or a truncation prefix.
TruncatedSeries parse_series(const std::string& text, std::uint32_t trunc, bool exact);

Rational parse_rational(const std::string& text);

struct ParsedNatSet {
    NatSet set;
    bool was_canonical = true; // NonCanonicalWarning when false; never an error
};

// NatSet grammar: '{' [nat (',' nat)*] '}' ['+' 'per(' nat ';' nat ';' [nat (',' nat)*] ')']
ParsedNatSet parse_natset(const std::string& text);

} // namespace tropdiff
