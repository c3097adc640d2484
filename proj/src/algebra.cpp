#include "hvir/algebra.hpp"

#include <sstream>

namespace hvir {

std::string tag_name(GenTag t) {
    switch (t) {
        case GenTag::L: return "L";
        case GenTag::I: return "I";
        case GenTag::C: return "C";
        case GenTag::CI: return "C_I";
        case GenTag::CLI: return "C_LI";
    }
    return "?";
}

bool tag_is_central(GenTag t) {
    return t == GenTag::C || t == GenTag::CI || t == GenTag::CLI;
}

Generator Generator::central(GenTag t) {
    if (!tag_is_central(t)) throw PreconditionError("not a central tag");
    return {t, std::nullopt};
}

bool Generator::operator==(const Generator& o) const {
    if (tag != o.tag) return false;
    if (!index) return !o.index;
    return o.index && *index == *o.index;
}

std::string Generator::str() const {
    if (is_central()) return tag_name(tag);
    return tag_name(tag) + "[" + index->str() + "]";
}

bool GeneratorLess::operator()(const Generator& x, const Generator& y) const {
    if (x.tag != y.tag) return static_cast<int>(x.tag) < static_cast<int>(y.tag);
    if (!x.index || !y.index) return false;  // equal central tags
    return x.index->compare(*y.index) == Ordering::Less;
}

// ---------------------------------------------------------------------------
// AlgebraElement

AlgebraElement AlgebraElement::basis(const Generator& g, const GroupPtr& group) {
    AlgebraElement e(group);
    e.add_term(g, FieldScalar(1));
    return e;
}

void AlgebraElement::add_term(const Generator& g, const FieldScalar& coeff) {
    if (coeff.is_zero()) return;
    auto [it, inserted] = terms_.emplace(g, coeff);
    if (!inserted) {
        it->second += coeff;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

AlgebraElement AlgebraElement::operator+(const AlgebraElement& o) const {
    if (!group_->same_as(*o.group_)) throw ContextError("algebra elements over different groups");
    AlgebraElement r = *this;
    for (const auto& [g, c] : o.terms_) r.add_term(g, c);
    return r;
}

AlgebraElement AlgebraElement::operator-(const AlgebraElement& o) const {
    return *this + o.scaled(FieldScalar(-1));
}

AlgebraElement AlgebraElement::scaled(const FieldScalar& c) const {
    AlgebraElement r(group_);
    if (c.is_zero()) return r;
    for (const auto& [g, coeff] : terms_) r.add_term(g, coeff * c);
    return r;
}

bool AlgebraElement::operator==(const AlgebraElement& o) const {
    if (!group_->same_as(*o.group_)) throw ContextError("algebra elements over different groups");
    return terms_ == o.terms_;
}

std::string AlgebraElement::str() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [g, c] : terms_) {
        if (!first) os << " + ";
        first = false;
        if (c.is_binomial())
            os << "(" << c.str() << ")*" << g.str();
        else
            os << c.str() << "*" << g.str();
    }
    return os.str();
}

// ---------------------------------------------------------------------------
// Bracket

AlgebraElement bracket(const Generator& u, const Generator& v, const GroupPtr& group) {
    AlgebraElement r(group);
    if (u.is_central() || v.is_central()) return r;
    const GroupElement& mu = *u.index;
    const GroupElement& nu = *v.index;
    require_same_context(mu, nu);
    const bool opposite = (mu + nu).is_zero();
    const FieldScalar m = mu.value();

    if (u.tag == GenTag::L && v.tag == GenTag::L) {
        r.add_term(Generator::L(mu + nu), m - nu.value());
        if (opposite)
            r.add_term(Generator::central(GenTag::C),
                       (m * m * m - m) * FieldScalar::fraction(1, 12));
    } else if (u.tag == GenTag::L && v.tag == GenTag::I) {
        r.add_term(Generator::I(mu + nu), -nu.value());
        if (opposite) r.add_term(Generator::central(GenTag::CLI), -(m * m + m));
    } else if (u.tag == GenTag::I && v.tag == GenTag::L) {
        return bracket(v, u, group).scaled(FieldScalar(-1));
    } else {  // I, I
        if (opposite) r.add_term(Generator::central(GenTag::CI), m);
    }
    return r;
}

AlgebraElement bracket(const AlgebraElement& u, const AlgebraElement& v) {
    if (!u.group()->same_as(*v.group()))
        throw ContextError("bracket of elements over different groups");
    AlgebraElement r(u.group());
    for (const auto& [gu, cu] : u.terms())
        for (const auto& [gv, cv] : v.terms())
            r = r + bracket(gu, gv, u.group()).scaled(cu * cv);
    return r;
}

// ---------------------------------------------------------------------------
// Theta

namespace {

mpz_class integer_index(const Generator& g) {
    return g.index->value().integer_value();
}

void require_integer_context(const AlgebraElement& u) {
    if (!u.group()->same_as(*OrderedGroup::integers()))
        throw PreconditionError("theta expects an element with integer indexing");
}

} // namespace

AlgebraElement theta_generator(const GroupElement& x, const Generator& g_int) {
    const GroupPtr& target = x.group();
    if (x.is_zero()) throw PreconditionError("theta requires x != 0");
    const FieldScalar xv = x.value();
    const FieldScalar xinv = xv.inverse();
    AlgebraElement r(target);
    switch (g_int.tag) {
        case GenTag::L: {
            const mpz_class i = integer_index(g_int);
            r.add_term(Generator::L(x * i), xinv);
            if (i == 0)
                r.add_term(Generator::central(GenTag::C),
                           (xv - xinv) * FieldScalar::fraction(1, 24));
            break;
        }
        case GenTag::I: {
            const mpz_class i = integer_index(g_int);
            r.add_term(Generator::I(x * i), xinv);
            if (i == 0)
                r.add_term(Generator::central(GenTag::CLI), FieldScalar(1) - xinv);
            break;
        }
        case GenTag::C:
            r.add_term(Generator::central(GenTag::C), xv);
            break;
        case GenTag::CI:
            r.add_term(Generator::central(GenTag::CI), xinv);
            break;
        case GenTag::CLI:
            r.add_term(Generator::central(GenTag::CLI), FieldScalar(1));
            break;
    }
    return r;
}

AlgebraElement theta(const GroupElement& x, const AlgebraElement& u) {
    require_integer_context(u);
    AlgebraElement r(x.group());
    for (const auto& [g, c] : u.terms()) r = r + theta_generator(x, g).scaled(c);
    return r;
}

namespace {

// Inverse image of a single central generator, read off the forward table.
AlgebraElement theta_inverse_central(const GroupElement& x, GenTag tag) {
    const GroupPtr ints = OrderedGroup::integers();
    // theta(central) = s * central; invert the scale.
    const AlgebraElement fwd = theta_generator(x, Generator::central(tag));
    const FieldScalar s = fwd.terms().begin()->second;
    AlgebraElement r(ints);
    r.add_term(Generator::central(tag), s.inverse());
    return r;
}

} // namespace

AlgebraElement theta_inverse(const GroupElement& x, const AlgebraElement& u) {
    if (x.is_zero()) throw PreconditionError("theta requires x != 0");
    const GroupPtr ints = OrderedGroup::integers();
    AlgebraElement r(ints);
    for (const auto& [g, c] : u.terms()) {
        AlgebraElement inv(ints);
        if (g.is_central()) {
            inv = theta_inverse_central(x, g.tag);
        } else {
            const FieldScalar q = g.index->value() / x.value();
            if (!q.is_integer())
                throw PreconditionError("index " + g.index->str() + " is not a multiple of " +
                                        x.str());
            Generator g_int{g.tag, ints->element(FieldScalar(mpq_class(q.integer_value())))};
            // Candidate x*g_int maps to g plus central error terms; cancel them.
            inv = AlgebraElement::basis(g_int, ints).scaled(x.value());
            AlgebraElement err = theta(x, inv) - AlgebraElement::basis(g, x.group());
            for (const auto& [eg, ec] : err.terms()) {
                if (!eg.is_central())
                    throw ProofViolationError("theta inversion left a non-central residue");
                inv = inv - theta_inverse_central(x, eg.tag).scaled(ec);
            }
        }
        r = r + inv.scaled(c);
    }
    return r;
}

// ---------------------------------------------------------------------------
// Highest weights

bool HighestWeight::operator==(const HighestWeight& o) const {
    return h == o.h && h_I == o.h_I && c == o.c && c_I == o.c_I && c_LI == o.c_LI;
}

std::string HighestWeight::str() const {
    return "(" + h.str() + ", " + h_I.str() + ", " + c.str() + ", " + c_I.str() + ", " +
           c_LI.str() + ")";
}

HighestWeight transport_highest_weight(const GroupElement& x, const HighestWeight& hw) {
    if (!x.is_positive()) throw PreconditionError("transport requires x > 0");
    const FieldScalar xv = x.value();
    const FieldScalar xinv = xv.inverse();
    HighestWeight out;
    out.h = xinv * hw.h + (xv - xinv) * FieldScalar::fraction(1, 24) * hw.c;
    out.h_I = xinv * hw.h_I + (FieldScalar(1) - xinv) * hw.c_LI;
    out.c = xv * hw.c;
    out.c_I = xinv * hw.c_I;
    out.c_LI = hw.c_LI;
    return out;
}

} // namespace hvir
