#include "tropdiff/parser.hpp"

#include <cctype>
#include <sstream>

#include "tropdiff/errors.hpp"

namespace tropdiff {

namespace {

struct Cursor {
    const std::string& text;
    std::size_t pos = 0;

    void skip_ws() {
        while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
    }

    bool at_end() {
        skip_ws();
        return pos >= text.size();
    }

    char peek() {
        skip_ws();
        return pos < text.size() ? text[pos] : '\0';
    }

    bool accept(char c) {
        skip_ws();
        if (pos < text.size() && text[pos] == c) {
            ++pos;
            return true;
        }
        return false;
    }

    [[noreturn]] void error(const std::string& what) const {
        std::size_t line = 1, col = 1;
        for (std::size_t i = 0; i < pos && i < text.size(); ++i) {
            if (text[i] == '\n') {
                ++line;
                col = 1;
            } else {
                ++col;
            }
        }
        fail(ErrorKind::Syntax, what + " at line " + std::to_string(line) + ", column " + std::to_string(col));
    }

    void expect(char c, const std::string& what) {
        if (!accept(c)) error("expected '" + std::string(1, c) + "' " + what);
    }

    std::uint64_t natural() {
        skip_ws();
        if (pos >= text.size() || !std::isdigit(static_cast<unsigned char>(text[pos]))) error("expected a natural number");
        std::uint64_t v = 0;
        while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) {
            v = v * 10 + static_cast<std::uint64_t>(text[pos] - '0');
            if (v > (1ull << 62)) error("number too large");
            ++pos;
        }
        return v;
    }
};

Ast parse_sum(Cursor& c);

Ast parse_base(Cursor& c) {
    const std::size_t begin = (c.skip_ws(), c.pos);
    Ast node;
    if (c.accept('(')) {
        node.kind = Ast::Kind::Paren;
        node.children.push_back(parse_sum(c));
        c.expect(')', "to close a parenthesized polynomial");
        node.span = {begin, c.pos};
        return node;
    }
    if (c.accept('t')) {
        node.kind = Ast::Kind::T;
        node.span = {begin, c.pos};
        return node;
    }
    if (c.accept('x')) {
        c.expect('(', "after 'x'");
        const std::uint64_t i = c.natural();
        c.expect(',', "between variable indices");
        const std::uint64_t j = c.natural();
        c.expect(')', "to close the variable");
        node.kind = Ast::Kind::Var;
        node.var_i = static_cast<std::uint32_t>(i);
        node.var_j = static_cast<std::uint32_t>(j);
        node.span = {begin, c.pos};
        return node;
    }
    const bool minus = c.accept('-');
    if (!std::isdigit(static_cast<unsigned char>(c.peek()))) c.error("expected a rational, 't', 'x(i,j)' or '('");
    const std::uint64_t num = c.natural();
    std::uint64_t den = 1;
    if (c.accept('/')) den = c.natural();
    if (den == 0) c.error("zero denominator");
    node.kind = Ast::Kind::Rational;
    node.value = Rational(static_cast<unsigned long>(num), static_cast<unsigned long>(den));
    node.value.canonicalize();
    if (minus) node.value = -node.value;
    node.span = {begin, c.pos};
    return node;
}

Ast parse_factor(Cursor& c) {
    const std::size_t begin = (c.skip_ws(), c.pos);
    Ast base = parse_base(c);
    if (c.accept('^')) {
        Ast pow;
        pow.kind = Ast::Kind::Pow;
        pow.exponent = static_cast<std::uint32_t>(c.natural());
        pow.children.push_back(std::move(base));
        pow.span = {begin, c.pos};
        return pow;
    }
    return base;
}

Ast parse_term(Cursor& c) {
    const std::size_t begin = (c.skip_ws(), c.pos);
    Ast first = parse_factor(c);
    if (c.peek() != '*') return first;
    Ast mul;
    mul.kind = Ast::Kind::Mul;
    mul.children.push_back(std::move(first));
    while (c.accept('*')) mul.children.push_back(parse_factor(c));
    mul.span = {begin, c.pos};
    return mul;
}

Ast parse_sum(Cursor& c) {
    const std::size_t begin = (c.skip_ws(), c.pos);
    Ast first = parse_term(c);
    if (c.peek() != '+' && c.peek() != '-') return first;
    Ast sum;
    sum.kind = Ast::Kind::Sum;
    sum.children.push_back(std::move(first));
    sum.negated.push_back(false);
    while (true) {
        if (c.accept('+')) {
            sum.children.push_back(parse_term(c));
            sum.negated.push_back(false);
        } else if (c.accept('-')) {
            sum.children.push_back(parse_term(c));
            sum.negated.push_back(true);
        } else {
            break;
        }
    }
    sum.span = {begin, c.pos};
    return sum;
}

DiffPolynomial elaborate(const Ast& a, std::uint32_t trunc, std::uint32_t& max_var) {
    switch (a.kind) {
    case Ast::Kind::Rational:
        return DiffPolynomial::from_series(TruncatedSeries::constant(a.value, trunc), 0);
    case Ast::Kind::T:
        return DiffPolynomial::from_series(TruncatedSeries::t_term(Rational(1), 1, trunc), 0);
    case Ast::Kind::Var: {
        if (a.var_i < 1) fail(ErrorKind::VariableIndex, "variable index i must be >= 1 in x(i,j)");
        max_var = std::max(max_var, a.var_i);
        DiffPolynomial p(a.var_i);
        p.add_term(DiffMonomial::variable(a.var_i, a.var_j), TruncatedSeries::constant(Rational(1), trunc));
        return p;
    }
    case Ast::Kind::Pow: {
        DiffPolynomial base = elaborate(a.children.front(), trunc, max_var);
        DiffPolynomial acc = DiffPolynomial::from_series(TruncatedSeries::constant(Rational(1), trunc), base.n_vars());
        for (std::uint32_t i = 0; i < a.exponent; ++i) acc = acc.mul(base);
        return acc;
    }
    case Ast::Kind::Mul: {
        DiffPolynomial acc = elaborate(a.children.front(), trunc, max_var);
        for (std::size_t i = 1; i < a.children.size(); ++i) {
            DiffPolynomial rhs = elaborate(a.children[i], trunc, max_var);
            const std::uint32_t n = std::max(acc.n_vars(), rhs.n_vars());
            acc = acc.with_n_vars(n).mul(rhs.with_n_vars(n));
        }
        return acc;
    }
    case Ast::Kind::Sum: {
        DiffPolynomial acc = elaborate(a.children.front(), trunc, max_var);
        for (std::size_t i = 1; i < a.children.size(); ++i) {
            DiffPolynomial rhs = elaborate(a.children[i], trunc, max_var);
            const std::uint32_t n = std::max(acc.n_vars(), rhs.n_vars());
            acc = acc.with_n_vars(n);
            rhs = rhs.with_n_vars(n);
            acc = a.negated[i] ? acc.sub(rhs) : acc.add(rhs);
        }
        return acc;
    }
    case Ast::Kind::Paren:
        return elaborate(a.children.front(), trunc, max_var);
    }
    fail(ErrorKind::InternalInvariant, "unreachable AST kind");
}

} // namespace

bool ast_equal(const Ast& a, const Ast& b) {
    if (a.kind != b.kind || a.children.size() != b.children.size()) return false;
    switch (a.kind) {
    case Ast::Kind::Rational:
        if (a.value != b.value) return false;
        break;
    case Ast::Kind::Var:
        if (a.var_i != b.var_i || a.var_j != b.var_j) return false;
        break;
    case Ast::Kind::Pow:
        if (a.exponent != b.exponent) return false;
        break;
    case Ast::Kind::Sum:
        if (a.negated != b.negated) return false;
        break;
    default:
        break;
    }
    for (std::size_t i = 0; i < a.children.size(); ++i)
        if (!ast_equal(a.children[i], b.children[i])) return false;
    return true;
}

std::string ast_to_string(const Ast& a) {
    std::ostringstream out;
    switch (a.kind) {
    case Ast::Kind::Rational:
        out << a.value.get_str();
        break;
    case Ast::Kind::T:
        out << "t";
        break;
    case Ast::Kind::Var:
        out << "x(" << a.var_i << "," << a.var_j << ")";
        break;
    case Ast::Kind::Pow:
        out << ast_to_string(a.children.front()) << "^" << a.exponent;
        break;
    case Ast::Kind::Mul:
        for (std::size_t i = 0; i < a.children.size(); ++i) {
            if (i) out << "*";
            out << ast_to_string(a.children[i]);
        }
        break;
    case Ast::Kind::Sum:
        for (std::size_t i = 0; i < a.children.size(); ++i) {
            if (i) out << (a.negated[i] ? " - " : " + ");
            out << ast_to_string(a.children[i]);
        }
        break;
    case Ast::Kind::Paren:
        out << "(" << ast_to_string(a.children.front()) << ")";
        break;
    }
    return out.str();
}

Ast parse_poly_ast(const std::string& text) {
    Cursor c{text};
    Ast a = parse_sum(c);
    if (!c.at_end()) c.error("unexpected trailing input");
    return a;
}

DiffPolynomial parse_poly(const std::string& text, std::uint32_t trunc) {
    if (trunc == 0) fail(ErrorKind::EmptyPrecision, "truncation order must be >= 1");
    const Ast a = parse_poly_ast(text);
    std::uint32_t max_var = 0;
    DiffPolynomial p = elaborate(a, trunc, max_var);
    return p.with_n_vars(std::max(max_var, std::max(p.n_vars(), 1u)));
}

TruncatedSeries parse_series(const std::string& text, std::uint32_t trunc, bool exact) {
    const DiffPolynomial p = parse_poly(text, trunc);
    for (const auto& [m, c] : p.terms())
        if (!m.is_one()) fail(ErrorKind::Syntax, "a series must not contain differential variables");
    auto it = p.terms().find(DiffMonomial::one());
    TruncatedSeries s = it == p.terms().end() ? TruncatedSeries::zero(trunc, true) : it->second;
    if (!exact) return TruncatedSeries::from_coefficients(s.coefficients(), false);
    return s;
}

Rational parse_rational(const std::string& text) {
    Cursor c{text};
    const bool minus = c.accept('-');
    const std::uint64_t num = c.natural();
    std::uint64_t den = 1;
    if (c.accept('/')) den = c.natural();
    if (den == 0) c.error("zero denominator");
    if (!c.at_end()) c.error("unexpected trailing input");
    Rational r(static_cast<unsigned long>(num), static_cast<unsigned long>(den));
    r.canonicalize();
    return minus ? Rational(-r) : r;
}

ParsedNatSet parse_natset(const std::string& text) {
    Cursor c{text};
    std::vector<std::uint32_t> finite;
    c.expect('{', "to open a set");
    if (!c.accept('}')) {
        finite.push_back(static_cast<std::uint32_t>(c.natural()));
        while (c.accept(',')) finite.push_back(static_cast<std::uint32_t>(c.natural()));
        c.expect('}', "to close a set");
    }
    std::uint32_t threshold = 0, period = 0;
    std::vector<std::uint32_t> residues;
    if (c.accept('+')) {
        c.expect('p', "in 'per'");
        c.expect('e', "in 'per'");
        c.expect('r', "in 'per'");
        c.expect('(', "after 'per'");
        threshold = static_cast<std::uint32_t>(c.natural());
        c.expect(';', "between per fields");
        period = static_cast<std::uint32_t>(c.natural());
        c.expect(';', "between per fields");
        if (c.peek() != ')') {
            residues.push_back(static_cast<std::uint32_t>(c.natural()));
            while (c.accept(',')) residues.push_back(static_cast<std::uint32_t>(c.natural()));
        }
        c.expect(')', "to close 'per'");
        if (period == 0 && !residues.empty()) c.error("period 0 admits no residues");
    }
    if (!c.at_end()) c.error("unexpected trailing input");

    ParsedNatSet out;
    out.set = NatSet::make(finite, threshold, period, residues);
    std::string stripped;
    for (char ch : text)
        if (!std::isspace(static_cast<unsigned char>(ch))) stripped.push_back(ch);
    out.was_canonical = stripped == out.set.to_string();
    return out;
}

} // namespace tropdiff
