#include "hvir/verma.hpp"

#include <algorithm>
#include <sstream>

namespace hvir {

bool VermaContext::same_as(const VermaContext& o) const {
    return group->same_as(*o.group) && hw == o.hw;
}

// ---------------------------------------------------------------------------
// Monomial

namespace {

struct GroupElementOrderLess {
    bool operator()(const GroupElement& x, const GroupElement& y) const {
        return x.compare(y) == Ordering::Less;
    }
};

} // namespace

Monomial::Monomial(std::vector<GroupElement> ps, std::vector<GroupElement> js)
    : ps_(std::move(ps)), js_(std::move(js)) {
    for (const auto& p : ps_)
        if (!p.is_positive()) throw PreconditionError("monomial entry must be positive");
    for (const auto& j : js_)
        if (!j.is_positive()) throw PreconditionError("monomial entry must be positive");
    std::sort(ps_.begin(), ps_.end(), GroupElementOrderLess{});
    std::sort(js_.begin(), js_.end(), GroupElementOrderLess{});
}

FieldScalar Monomial::degree() const {
    FieldScalar d;
    for (const auto& p : ps_) d += p.value();
    for (const auto& j : js_) d += j.value();
    return d;
}

Monomial Monomial::with_factor(GenTag tag, const GroupElement& p) const {
    if (!p.is_positive()) throw PreconditionError("factor magnitude must be positive");
    Monomial m = *this;
    auto& v = (tag == GenTag::I) ? m.ps_ : m.js_;
    v.insert(std::upper_bound(v.begin(), v.end(), p, GroupElementOrderLess{}), p);
    return m;
}

std::pair<Generator, Monomial> Monomial::split_leftmost() const {
    if (is_vacuum()) throw PreconditionError("vacuum monomial has no factors");
    Monomial rest = *this;
    if (!ps_.empty()) {
        GroupElement p = ps_.front();
        rest.ps_.erase(rest.ps_.begin());
        return {Generator::I(-p), rest};
    }
    GroupElement j = js_.front();
    rest.js_.erase(rest.js_.begin());
    return {Generator::L(-j), rest};
}

std::string Monomial::str() const {
    std::ostringstream os;
    for (auto it = ps_.rbegin(); it != ps_.rend(); ++it) os << "I[" << (-*it).str() << "]";
    for (const auto& j : js_) os << "L[" << (-j).str() << "]";
    os << "v";
    return os.str();
}

namespace {

// -1 / 0 / +1 comparison of sequences by group order; `desc` walks from the
// largest entry down, missing entries count as smallest.
int compare_sequences(const std::vector<GroupElement>& x, const std::vector<GroupElement>& y,
                      bool desc) {
    const std::size_t n = std::max(x.size(), y.size());
    for (std::size_t k = 0; k < n; ++k) {
        const std::size_t ix = desc ? x.size() - 1 - k : k;
        const std::size_t iy = desc ? y.size() - 1 - k : k;
        const bool hx = k < x.size();
        const bool hy = k < y.size();
        if (!hx && !hy) break;
        if (!hx) return -1;
        if (!hy) return 1;
        const Ordering o = x[ix].compare(y[iy]);
        if (o == Ordering::Less) return -1;
        if (o == Ordering::Greater) return 1;
    }
    return 0;
}

} // namespace

bool MonomialLess::operator()(const Monomial& x, const Monomial& y) const {
    if (x.is_vacuum() || y.is_vacuum()) return x.is_vacuum() && !y.is_vacuum();
    const int dc = (x.degree() - y.degree()).sign();
    if (dc != 0) return dc < 0;
    const int pc = compare_sequences(x.ps(), y.ps(), /*desc=*/true);
    if (pc != 0) return pc < 0;
    return compare_sequences(x.js(), y.js(), /*desc=*/false) < 0;
}

// ---------------------------------------------------------------------------
// ModuleVector

void ModuleVector::add_term(const Monomial& m, const FieldScalar& coeff) {
    if (coeff.is_zero()) return;
    auto [it, inserted] = terms_.emplace(m, coeff);
    if (!inserted) {
        it->second += coeff;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

ModuleVector ModuleVector::operator+(const ModuleVector& o) const {
    if (!ctx_->same_as(*o.ctx_)) throw ContextError("vectors from different modules");
    ModuleVector r = *this;
    for (const auto& [m, c] : o.terms_) r.add_term(m, c);
    return r;
}

ModuleVector ModuleVector::operator-(const ModuleVector& o) const {
    return *this + o.scaled(FieldScalar(-1));
}

ModuleVector ModuleVector::scaled(const FieldScalar& c) const {
    ModuleVector r(ctx_);
    if (c.is_zero()) return r;
    for (const auto& [m, coeff] : terms_) r.add_term(m, coeff * c);
    return r;
}

bool ModuleVector::operator==(const ModuleVector& o) const {
    if (!ctx_->same_as(*o.ctx_)) throw ContextError("vectors from different modules");
    return terms_ == o.terms_;
}

std::string ModuleVector::str() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [m, c] : terms_) {
        if (!first) os << " + ";
        first = false;
        if (c.is_binomial())
            os << "(" << c.str() << ")*" << m.str();
        else
            os << c.str() << "*" << m.str();
    }
    return os.str();
}

// ---------------------------------------------------------------------------
// VermaModule

VermaModule::VermaModule(GroupPtr group, HighestWeight hw)
    : ctx_(std::make_shared<VermaContext>(VermaContext{std::move(group), std::move(hw)})) {}

ModuleVector VermaModule::vacuum() const {
    return monomial_vector(Monomial{});
}

ModuleVector VermaModule::monomial_vector(const Monomial& m) const {
    ModuleVector v(ctx_);
    v.add_term(m, FieldScalar(1));
    return v;
}

FieldScalar weight(const Monomial& m, const VermaContext& ctx) {
    return ctx.hw.h + m.degree();
}

// ---------------------------------------------------------------------------
// Straightening

namespace {

ModuleVector apply_generator(const Generator& g, const Monomial& m, const VermaPtr& ctx);

ModuleVector apply_to_vector(const Generator& g, const ModuleVector& v) {
    ModuleVector r(v.context());
    for (const auto& [m, c] : v.terms())
        r = r + apply_generator(g, m, v.context()).scaled(c);
    return r;
}

ModuleVector apply_element(const AlgebraElement& e, const Monomial& m, const VermaPtr& ctx) {
    ModuleVector r(ctx);
    for (const auto& [g, c] : e.terms()) r = r + apply_generator(g, m, ctx).scaled(c);
    return r;
}

ModuleVector apply_generator(const Generator& g, const Monomial& m, const VermaPtr& ctx) {
    ModuleVector out(ctx);
    const HighestWeight& hw = ctx->hw;

    if (g.is_central()) {
        const FieldScalar& s = g.tag == GenTag::C    ? hw.c
                               : g.tag == GenTag::CI ? hw.c_I
                                                     : hw.c_LI;
        out.add_term(m, s);
        return out;
    }
    const GroupElement& mu = *g.index;
    if (!mu.group()->same_as(*ctx->group))
        throw ContextError("generator index from a different group");

    if (m.is_vacuum()) {
        if (mu.is_positive()) return out;
        if (mu.is_zero()) {
            out.add_term(m, g.tag == GenTag::L ? hw.h : hw.h_I);
            return out;
        }
        out.add_term(m.with_factor(g.tag, -mu), FieldScalar(1));
        return out;
    }

    // A lowering I commutes freely to the I-block at the front.
    if (g.tag == GenTag::I && mu.is_negative()) {
        out.add_term(m.with_factor(GenTag::I, -mu), FieldScalar(1));
        return out;
    }
    // A lowering L no larger than every present factor slots in directly.
    if (g.tag == GenTag::L && mu.is_negative() && m.ps().empty() &&
        (-mu).compare(m.js().front()) != Ordering::Greater) {
        out.add_term(m.with_factor(GenTag::L, -mu), FieldScalar(1));
        return out;
    }

    // g f rest = f (g rest) + [g, f] rest, then renormalize.
    const auto [f, rest] = m.split_leftmost();
    ModuleVector r = apply_to_vector(f, apply_generator(g, rest, ctx));
    r = r + apply_element(bracket(g, f, ctx->group), rest, ctx);
    return r;
}

} // namespace

ModuleVector act(const Generator& g, const ModuleVector& v) {
    return apply_to_vector(g, v);
}

ModuleVector act_element(const AlgebraElement& e, const ModuleVector& v) {
    if (!e.group()->same_as(*v.context()->group))
        throw ContextError("element and vector over different groups");
    ModuleVector r(v.context());
    for (const auto& [m, c] : v.terms())
        r = r + apply_element(e, m, v.context()).scaled(c);
    return r;
}

ModuleVector act_word(const std::vector<Generator>& ws, const ModuleVector& v) {
    ModuleVector r = v;
    for (auto it = ws.rbegin(); it != ws.rend(); ++it) r = act(*it, r);
    return r;
}

std::map<FieldScalar, ModuleVector, FieldScalarRealLess> weight_components(const ModuleVector& v) {
    std::map<FieldScalar, ModuleVector, FieldScalarRealLess> parts;
    for (const auto& [m, c] : v.terms()) {
        const FieldScalar w = weight(m, *v.context());
        auto it = parts.find(w);
        if (it == parts.end()) it = parts.emplace(w, ModuleVector(v.context())).first;
        it->second.add_term(m, c);
    }
    return parts;
}

// ---------------------------------------------------------------------------
// Level bases

std::vector<std::vector<long>> integer_partitions(long n) {
    std::vector<std::vector<long>> out;
    std::vector<long> cur;
    // Descending parts, largest first part enumerated first.
    auto rec = [&](auto&& self, long rem, long maxpart) -> void {
        if (rem == 0) {
            out.push_back(cur);
            return;
        }
        for (long p = std::min(rem, maxpart); p >= 1; --p) {
            cur.push_back(p);
            self(self, rem - p, p);
            cur.pop_back();
        }
    };
    rec(rec, n, n);
    return out;
}

std::vector<Monomial> basis_at_level(const VermaModule& M, long n) {
    if (n <= 0) throw PreconditionError("level must be positive");
    const OrderClass oc = classify_order(M.group());
    if (oc.dense) throw PreconditionError("level bases require a discrete order");
    const GroupElement a = *oc.min_positive;

    std::vector<Monomial> out;
    for (long k = n; k >= 0; --k) {
        for (const auto& ipart : integer_partitions(k)) {
            std::vector<GroupElement> ps;
            ps.reserve(ipart.size());
            for (long p : ipart) ps.push_back(a * p);
            for (const auto& lpart : integer_partitions(n - k)) {
                std::vector<GroupElement> js;
                js.reserve(lpart.size());
                for (long j : lpart) js.push_back(a * j);
                out.emplace_back(ps, js);
            }
        }
    }
    return out;
}

// ---------------------------------------------------------------------------
// Subalgebra view

SubalgebraView::SubalgebraView(const VermaModule& M, const GroupElement& x)
    : x_(x), ctx_(M.context()), transported_(transport_highest_weight(x, M.hw())) {
    if (!x.is_positive()) throw PreconditionError("subalgebra scale must be positive");
    // The theta images of the zero modes and centrals must act on v_h by the
    // transported scalars.
    const ModuleVector vh = M.vacuum();
    const GroupPtr ints = OrderedGroup::integers();
    const GroupElement zero = ints->zero();
    const std::pair<Generator, FieldScalar> checks[] = {
        {Generator::L(zero), transported_.h},        {Generator::I(zero), transported_.h_I},
        {Generator::central(GenTag::C), transported_.c},
        {Generator::central(GenTag::CI), transported_.c_I},
        {Generator::central(GenTag::CLI), transported_.c_LI},
    };
    for (const auto& [g, expected] : checks) {
        const ModuleVector got = act_image(g, vh);
        if (!(got == vh.scaled(expected)))
            throw ProofViolationError("transported scalar mismatch for " + g.str());
    }
}

ModuleVector SubalgebraView::act_image(const Generator& g_int, const ModuleVector& v) const {
    return act_element(theta_generator(x_, g_int), v);
}

bool SubalgebraView::contains(const Monomial& m) const {
    auto in_lattice = [&](const GroupElement& e) {
        const FieldScalar q = e.value() / x_.value();
        return q.is_integer() && x_ * q.integer_value() == e;
    };
    return std::all_of(m.ps().begin(), m.ps().end(), in_lattice) &&
           std::all_of(m.js().begin(), m.js().end(), in_lattice);
}

} // namespace hvir
