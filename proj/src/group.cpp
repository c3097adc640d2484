#include "hvir/group.hpp"

#include <algorithm>

namespace hvir {

namespace {

bool rational_integer(const mpq_class& q, mpz_class& out) {
    if (q.get_den() != 1) return false;
    out = q.get_num();
    return true;
}

} // namespace

// ---------------------------------------------------------------------------
// OrderedGroup

OrderedGroup::OrderedGroup(long d, std::vector<FieldScalar> gens, OrderKind kind, int cap)
    : d_(d), gens_(std::move(gens)), kind_(kind), height_cap_(cap) {}

GroupPtr OrderedGroup::make(long d, std::vector<FieldScalar> generators, OrderKind kind,
                            int height_cap) {
    if (generators.empty() || generators.size() > 2)
        throw PreconditionError("group rank must be 1 or 2");
    for (const auto& g : generators)
        if (g.is_zero()) throw PreconditionError("zero generator");
    if (generators.size() == 2) {
        // Require Q-linear independence in the (1, √d) basis.
        const mpq_class det = generators[0].rational_part() * generators[1].radical_part() -
                              generators[1].rational_part() * generators[0].radical_part();
        if (det == 0) throw PreconditionError("generators are Q-linearly dependent");
    }
    return GroupPtr(new OrderedGroup(d, std::move(generators), kind, height_cap));
}

GroupPtr OrderedGroup::integers() {
    static GroupPtr g = make(1, {FieldScalar(1)}, OrderKind::RealEmbedding);
    return g;
}

GroupPtr OrderedGroup::quadratic(long d, OrderKind kind) {
    return make(d, {FieldScalar(1), FieldScalar::sqrt_of(d)}, kind);
}

std::optional<std::vector<mpz_class>> OrderedGroup::coordinates(const FieldScalar& v) const {
    if (!v.is_rational() && v.radicand() != d_) return std::nullopt;
    if (gens_.size() == 1) {
        const FieldScalar& g = gens_[0];
        mpq_class q;
        if (g.rational_part() != 0)
            q = v.rational_part() / g.rational_part();
        else
            q = v.radical_part() / g.radical_part();
        mpz_class n;
        if (!rational_integer(q, n)) return std::nullopt;
        if (!(FieldScalar(g) * FieldScalar(q) == v)) return std::nullopt;
        return std::vector<mpz_class>{n};
    }
    // Solve [g0 g1] * (m, n)^T = v in the (1, √d) basis.
    const mpq_class a0 = gens_[0].rational_part(), b0 = gens_[0].radical_part();
    const mpq_class a1 = gens_[1].rational_part(), b1 = gens_[1].radical_part();
    const mpq_class det = a0 * b1 - a1 * b0;
    const mpq_class m = (v.rational_part() * b1 - a1 * v.radical_part()) / det;
    const mpq_class n = (a0 * v.radical_part() - v.rational_part() * b0) / det;
    mpz_class mi, ni;
    if (!rational_integer(m, mi) || !rational_integer(n, ni)) return std::nullopt;
    return std::vector<mpz_class>{mi, ni};
}

GroupElement OrderedGroup::element(const FieldScalar& v) const {
    return GroupElement(v, shared_from_this());
}

GroupElement OrderedGroup::element_from_coords(const std::vector<mpz_class>& coords) const {
    if (coords.size() != gens_.size()) throw PreconditionError("coordinate arity mismatch");
    FieldScalar v;
    for (std::size_t i = 0; i < coords.size(); ++i)
        v += gens_[i] * FieldScalar(mpq_class(coords[i]));
    return GroupElement(v, shared_from_this());
}

GroupElement OrderedGroup::zero() const {
    return GroupElement(FieldScalar(), shared_from_this());
}

bool OrderedGroup::same_as(const OrderedGroup& o) const {
    if (this == &o) return true;
    return d_ == o.d_ && kind_ == o.kind_ && gens_ == o.gens_;
}

void require_same_context(const GroupElement& x, const GroupElement& y) {
    if (!x.group()->same_as(*y.group()))
        throw ContextError("elements belong to different groups");
}

// ---------------------------------------------------------------------------
// GroupElement

GroupElement::GroupElement(FieldScalar value, GroupPtr group)
    : value_(std::move(value)), group_(std::move(group)) {
    if (!group_) throw PreconditionError("null group context");
    auto c = group_->coordinates(value_);
    if (!c) throw PreconditionError("value " + value_.str() + " is not in the group lattice");
    coords_ = std::move(*c);
}

Ordering GroupElement::compare(const GroupElement& o) const {
    require_same_context(*this, o);
    if (group_->order_kind() == OrderKind::RealEmbedding) {
        const int s = (value_ - o.value_).sign();
        return s < 0 ? Ordering::Less : s > 0 ? Ordering::Greater : Ordering::Equal;
    }
    // Lexicographic on coordinates, last generator major.
    for (std::size_t i = coords_.size(); i-- > 0;) {
        const int c = cmp(coords_[i], o.coords_[i]);
        if (c < 0) return Ordering::Less;
        if (c > 0) return Ordering::Greater;
    }
    return Ordering::Equal;
}

bool GroupElement::is_positive() const {
    return compare(group_->zero()) == Ordering::Greater;
}

bool GroupElement::is_negative() const {
    return compare(group_->zero()) == Ordering::Less;
}

GroupElement GroupElement::operator+(const GroupElement& o) const {
    require_same_context(*this, o);
    return GroupElement(value_ + o.value_, group_);
}

GroupElement GroupElement::operator-(const GroupElement& o) const {
    require_same_context(*this, o);
    return GroupElement(value_ - o.value_, group_);
}

GroupElement GroupElement::operator-() const {
    return GroupElement(-value_, group_);
}

GroupElement GroupElement::operator*(const mpz_class& n) const {
    return GroupElement(value_ * FieldScalar(mpq_class(n)), group_);
}

bool GroupElement::operator==(const GroupElement& o) const {
    require_same_context(*this, o);
    return value_ == o.value_;
}

// ---------------------------------------------------------------------------
// Order classification

OrderClass classify_order(const GroupPtr& g) {
    if (!g || g->rank() == 0) throw PreconditionError("degenerate group");
    if (g->rank() == 1) {
        GroupElement a = g->element_from_coords({1});
        if (!a.is_positive()) a = -a;
        return {false, a};
    }
    if (g->order_kind() == OrderKind::RealEmbedding) return {true, std::nullopt};
    // Lexicographic rank 2: the minor-coordinate sublattice Z*g0 sits below
    // every element with a nonzero major coordinate.
    GroupElement a = g->element_from_coords({1, 0});
    if (!a.is_positive()) a = -a;
    return {false, a};
}

// ---------------------------------------------------------------------------
// Lattice search

namespace {

bool contains(const std::vector<GroupElement>& set, const GroupElement& x) {
    return std::any_of(set.begin(), set.end(), [&](const GroupElement& f) { return f == x; });
}

template <typename Fn>
void for_each_point_at_height(const OrderedGroup& g, long h, Fn&& fn) {
    if (g.rank() == 1) {
        fn({mpz_class(-h)});
        fn({mpz_class(h)});
        return;
    }
    for (long m = -h; m <= h; ++m) {
        if (m == -h || m == h) {
            for (long n = -h; n <= h; ++n) fn({mpz_class(m), mpz_class(n)});
        } else {
            fn({mpz_class(m), mpz_class(-h)});
            fn({mpz_class(m), mpz_class(h)});
        }
    }
}

} // namespace

GroupElement find_positive_below(const GroupPtr& g, const GroupElement& bound,
                                 const std::vector<GroupElement>& forbidden,
                                 const std::vector<GroupElement>& offsets,
                                 std::optional<int> height_cap) {
    if (!bound.is_positive()) throw PreconditionError("bound must be positive");
    const long cap = height_cap.value_or(g->height_cap());
    std::optional<GroupElement> found;
    for (long h = 1; h <= cap && !found; ++h) {
        for_each_point_at_height(*g, h, [&](const std::vector<mpz_class>& coords) {
            if (found) return;
            GroupElement x = g->element_from_coords(coords);
            if (!x.is_positive() || x.compare(bound) != Ordering::Less) return;
            if (contains(forbidden, x)) return;
            for (const GroupElement& c : offsets)
                if (contains(forbidden, c - x)) return;
            found = std::move(x);
        });
    }
    if (!found)
        throw SearchExhaustedError("no admissible element below " + bound.str() +
                                   " within height cap " + std::to_string(cap));
    return *found;
}

// ---------------------------------------------------------------------------
// Discrete decomposition

Decomposition decompose(const GroupElement& x, const GroupElement& a) {
    require_same_context(x, a);
    const OrderClass oc = classify_order(x.group());
    if (oc.dense || !(*oc.min_positive == a))
        throw PreconditionError("a is not the minimal positive element of a discrete order");
    // Za part: x = n*a with integer n.
    {
        const FieldScalar q = x.value() / a.value();
        if (q.is_integer()) {
            const mpz_class n = q.integer_value();
            if (a * n == x) return {Region::ZPart, n};
        }
    }
    // Rank-2 lexicographic: the major coordinate decides the half.
    const mpz_class& major = x.coords().back();
    if (major > 0) return {Region::HPlus, 0};
    if (major < 0) return {Region::HMinus, 0};
    throw ProofViolationError("element with zero major coordinate escaped Za");
}

} // namespace hvir
