#include "hvir/parse.hpp"

#include <cctype>

namespace hvir {

namespace {

struct Cursor {
    const std::string& s;
    std::size_t pos = 0;

    void skip_ws() {
        while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos]))) ++pos;
    }
    bool done() {
        skip_ws();
        return pos >= s.size();
    }
    char peek() {
        skip_ws();
        return pos < s.size() ? s[pos] : '\0';
    }
    bool eat(char c) {
        skip_ws();
        if (pos < s.size() && s[pos] == c) {
            ++pos;
            return true;
        }
        return false;
    }
    bool eat_str(const std::string& t) {
        skip_ws();
        if (s.compare(pos, t.size(), t) == 0) {
            pos += t.size();
            return true;
        }
        return false;
    }
    [[noreturn]] void fail(const std::string& what) {
        throw ParseError(what + " at position " + std::to_string(pos) + " in \"" + s + "\"");
    }
};

mpz_class parse_integer(Cursor& c) {
    c.skip_ws();
    std::string digits;
    while (c.pos < c.s.size() && std::isdigit(static_cast<unsigned char>(c.s[c.pos])))
        digits += c.s[c.pos++];
    if (digits.empty()) c.fail("expected digits");
    return mpz_class(digits);
}

mpq_class parse_fraction(Cursor& c) {
    const mpz_class num = parse_integer(c);
    if (c.eat('/')) {
        const mpz_class den = parse_integer(c);
        if (den == 0) c.fail("zero denominator");
        mpq_class q(num, den);
        q.canonicalize();
        return q;
    }
    return mpq_class(num);
}

// "√d", "sqrt(d)" or "sqrtd"; returns the radicand.
bool try_parse_radical(Cursor& c, long& d) {
    if (c.eat_str("√") || c.eat_str("sqrt")) {
        const bool paren = c.eat('(');
        d = static_cast<long>(parse_integer(c).get_si());
        if (paren && !c.eat(')')) c.fail("expected ')'");
        return true;
    }
    return false;
}

// One signed term of a scalar: fraction, fraction√d, or bare √d.
FieldScalar parse_scalar_term(Cursor& c, int sign) {
    long d = 1;
    if (try_parse_radical(c, d))
        return FieldScalar(0, sign, d);
    mpq_class q = parse_fraction(c);
    if (sign < 0) q = -q;
    if (try_parse_radical(c, d)) return FieldScalar(0, q, d);
    return FieldScalar(q);
}

FieldScalar parse_scalar_expr(Cursor& c) {
    int sign = 1;
    if (c.eat('-'))
        sign = -1;
    else
        c.eat('+');
    FieldScalar r = parse_scalar_term(c, sign);
    while (true) {
        if (c.eat('+'))
            sign = 1;
        else if (c.eat('-'))
            sign = -1;
        else
            break;
        r += parse_scalar_term(c, sign);
    }
    return r;
}

// Scalar inside [...]; consumes the closing bracket.
FieldScalar parse_bracketed_scalar(Cursor& c) {
    if (!c.eat('[')) c.fail("expected '['");
    FieldScalar v = parse_scalar_expr(c);
    if (!c.eat(']')) c.fail("expected ']'");
    return v;
}

Generator parse_generator_at(Cursor& c, const GroupPtr& group) {
    if (c.eat_str("C_LI") || c.eat_str("CLI")) return Generator::central(GenTag::CLI);
    if (c.eat_str("C_I") || c.eat_str("CI")) return Generator::central(GenTag::CI);
    if (c.eat('L')) return Generator::L(group->element(parse_bracketed_scalar(c)));
    if (c.eat('I')) return Generator::I(group->element(parse_bracketed_scalar(c)));
    if (c.eat('C')) return Generator::central(GenTag::C);
    c.fail("expected generator");
}

Monomial parse_monomial_at(Cursor& c, const GroupPtr& group) {
    std::vector<GroupElement> ps, js;
    while (true) {
        c.skip_ws();
        if (c.eat('v')) break;
        char tag;
        if (c.eat('I'))
            tag = 'I';
        else if (c.eat('L'))
            tag = 'L';
        else
            c.fail("expected monomial factor or 'v'");
        GroupElement idx = group->element(parse_bracketed_scalar(c));
        if (!idx.is_negative()) c.fail("monomial factor index must be negative");
        (tag == 'I' ? ps : js).push_back(-idx);
    }
    return Monomial(std::move(ps), std::move(js));
}

// Generic "c1*T1 + c2*T2" combination parser; TermFn consumes one term body.
template <typename Out, typename TermFn>
Out parse_combination(Cursor& c, Out zero, TermFn&& term) {
    c.skip_ws();
    // A bare "0" denotes the zero element.
    if (c.peek() == '0') {
        ++c.pos;
        if (!c.done()) c.fail("unexpected trailing text after 0");
        return zero;
    }
    Out out = zero;
    bool first = true;
    while (true) {
        int sign = 1;
        bool any_sign = false;
        while (true) {
            if (c.eat('-')) {
                sign = -sign;
                any_sign = true;
            } else if (c.eat('+')) {
                any_sign = true;
            } else {
                break;
            }
        }
        if (!first && !any_sign) break;
        c.skip_ws();
        FieldScalar coeff(sign);
        // Leading coefficient is optional; it is present iff the term does
        // not start with a generator letter.
        const char p = c.peek();
        if (p == '(') {
            c.eat('(');
            coeff = coeff * parse_scalar_expr(c);
            if (!c.eat(')')) c.fail("expected ')'");
            if (!c.eat('*')) c.fail("expected '*' after coefficient");
        } else if (p != 'L' && p != 'I' && p != 'C' && p != 'v') {
            coeff = coeff * parse_scalar_term(c, 1);
            if (!c.eat('*')) c.fail("expected '*' after coefficient");
        }
        term(out, coeff);
        first = false;
        if (c.done()) break;
    }
    if (!c.done()) c.fail("unexpected trailing text");
    return out;
}

} // namespace

FieldScalar parse_scalar(const std::string& text) {
    Cursor c{text};
    FieldScalar v = parse_scalar_expr(c);
    if (!c.done()) c.fail("unexpected trailing text");
    return v;
}

GroupElement parse_group_element(const std::string& text, const GroupPtr& group) {
    return group->element(parse_scalar(text));
}

Generator parse_generator(const std::string& text, const GroupPtr& group) {
    Cursor c{text};
    Generator g = parse_generator_at(c, group);
    if (!c.done()) c.fail("unexpected trailing text");
    return g;
}

AlgebraElement parse_algebra_element(const std::string& text, const GroupPtr& group) {
    Cursor c{text};
    return parse_combination(
        c, AlgebraElement(group), [&](AlgebraElement& out, const FieldScalar& coeff) {
            out.add_term(parse_generator_at(c, group), coeff);
        });
}

Monomial parse_monomial(const std::string& text, const GroupPtr& group) {
    Cursor c{text};
    Monomial m = parse_monomial_at(c, group);
    if (!c.done()) c.fail("unexpected trailing text");
    return m;
}

ModuleVector parse_module_vector(const std::string& text, const VermaPtr& ctx) {
    Cursor c{text};
    return parse_combination(c, ModuleVector(ctx),
                             [&](ModuleVector& out, const FieldScalar& coeff) {
                                 out.add_term(parse_monomial_at(c, ctx->group), coeff);
                             });
}

} // namespace hvir
