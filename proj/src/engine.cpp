#include "hvir/engine.hpp"

#include <algorithm>
#include <cstdint>
#include <sstream>

namespace hvir {

// ---------------------------------------------------------------------------
// Digests and traces

std::string vector_digest(const ModuleVector& v) {
    // FNV-1a over the canonical serialization.
    const std::string s = v.str();
    std::uint64_t h = 1469598103934665603ull;
    for (unsigned char ch : s) {
        h ^= ch;
        h *= 1099511628211ull;
    }
    std::ostringstream os;
    os << std::hex << h;
    return os.str();
}

bool replay_trace(const ReductionTrace& t) {
    ModuleVector cur = t.input;
    for (const TraceStep& step : t.steps) {
        cur = act(step.op, cur);
        if (vector_digest(cur) != step.digest) return false;
    }
    return cur == t.outcome;
}

namespace {

/// Applies operators to a running vector while recording the trace.
class TraceBuilder {
  public:
    explicit TraceBuilder(ModuleVector input) : current_(input), trace_{std::move(input), {}, current_} {}

    const ModuleVector& current() const { return current_; }

    void apply(const Generator& g) {
        current_ = act(g, current_);
        trace_.steps.push_back({g, vector_digest(current_)});
    }

    ReductionTrace finish() {
        trace_.outcome = current_;
        return trace_;
    }

  private:
    ModuleVector current_;
    ReductionTrace trace_;
};

bool is_weight_vector(const ModuleVector& v) {
    return weight_components(v).size() <= 1;
}

bool is_all_I(const ModuleVector& v) {
    return std::all_of(v.terms().begin(), v.terms().end(),
                       [](const auto& t) { return t.first.js().empty(); });
}

bool is_vacuum_multiple(const ModuleVector& v) {
    return v.terms().size() == 1 && v.terms().begin()->first.is_vacuum();
}

std::size_t max_l_count(const ModuleVector& v) {
    std::size_t r = 0;
    for (const auto& [m, c] : v.terms()) r = std::max(r, m.js().size());
    return r;
}

GroupElement require_dense(const ModuleVector& v) {
    const OrderClass oc = classify_order(v.context()->group);
    if (!oc.dense) throw PreconditionError("operation requires a dense order");
    return v.context()->group->zero();
}

} // namespace

std::string verdict_kind_name(VerdictKind k) {
    switch (k) {
        case VerdictKind::Irreducible: return "Irreducible";
        case VerdictKind::Reducible: return "Reducible";
        case VerdictKind::UnknownUpToLevel: return "UnknownUpToLevel";
        case VerdictKind::ClaimedReducibleNoWitness: return "ClaimedReducibleNoWitness";
    }
    return "?";
}

// ---------------------------------------------------------------------------
// Dense order: stripping the L-part

namespace {

void strip_L_part_impl(TraceBuilder& tb) {
    const GroupPtr& group = tb.current().context()->group;
    while (true) {
        const std::size_t r = max_l_count(tb.current());
        if (r == 0) return;

        std::vector<GroupElement> forbidden;  // every I-entry in the support
        std::vector<GroupElement> offsets;    // smallest L-entry of each top term
        std::optional<GroupElement> bound;
        for (const auto& [m, c] : tb.current().terms()) {
            for (const auto& p : m.ps())
                if (std::find(forbidden.begin(), forbidden.end(), p) == forbidden.end())
                    forbidden.push_back(p);
            if (m.js().size() == r) {
                const GroupElement& j1 = m.js().front();
                if (std::find(offsets.begin(), offsets.end(), j1) == offsets.end())
                    offsets.push_back(j1);
                if (!bound || j1.compare(*bound) == Ordering::Less) bound = j1;
            }
        }
        const GroupElement x = find_positive_below(group, *bound, forbidden, offsets);
        tb.apply(Generator::I(x));
        if (tb.current().is_zero() || max_l_count(tb.current()) != r - 1)
            throw ProofViolationError("I_x application failed to lower the L-depth");
    }
}

} // namespace

Reduction strip_L_part(const ModuleVector& u0) {
    require_dense(u0);
    if (u0.is_zero() || is_vacuum_multiple(u0))
        throw PreconditionError("input must be a weight vector outside F*v_h");
    if (!is_weight_vector(u0)) throw PreconditionError("input must be a single weight component");
    TraceBuilder tb(u0);
    strip_L_part_impl(tb);
    return {tb.current(), tb.finish()};
}

// ---------------------------------------------------------------------------
// Tuple order on I-index multisets

std::vector<GroupElement> max_monomial(const std::vector<std::vector<GroupElement>>& tuples) {
    if (tuples.empty()) throw PreconditionError("max_monomial of empty family");
    auto less = [](const std::vector<GroupElement>& x, const std::vector<GroupElement>& y) {
        const std::size_t n = std::max(x.size(), y.size());
        for (std::size_t k = 0; k < n; ++k) {
            // Missing positions read as zero, which is below every entry.
            if (k >= x.size()) return true;
            if (k >= y.size()) return false;
            const Ordering o = x[k].compare(y[k]);
            if (o != Ordering::Equal) return o == Ordering::Less;
        }
        return false;
    };
    return *std::max_element(tuples.begin(), tuples.end(), less);
}

namespace {

// Entry tuple of an I-monomial, largest entry first (the order the
// positionwise comparison walks).
std::vector<GroupElement> descending_ps(const Monomial& m) {
    std::vector<GroupElement> t(m.ps().rbegin(), m.ps().rend());
    return t;
}

std::vector<GroupElement> min_monomial_desc(const std::vector<std::vector<GroupElement>>& tuples) {
    auto less = [](const std::vector<GroupElement>& x, const std::vector<GroupElement>& y) {
        const std::size_t n = std::max(x.size(), y.size());
        for (std::size_t k = 0; k < n; ++k) {
            if (k >= x.size()) return true;
            if (k >= y.size()) return false;
            const Ordering o = x[k].compare(y[k]);
            if (o != Ordering::Equal) return o == Ordering::Less;
        }
        return false;
    };
    return *std::min_element(tuples.begin(), tuples.end(), less);
}

} // namespace

// ---------------------------------------------------------------------------
// Dense order, case 1 (c_I != 0)

namespace {

FieldScalar finish_at_vacuum(TraceBuilder& tb) {
    if (tb.current().terms().size() != 1 || !tb.current().terms().begin()->first.is_vacuum())
        throw ProofViolationError("reduction did not land on a multiple of v_h");
    const FieldScalar b = tb.current().terms().begin()->second;
    if (b.is_zero()) throw ProofViolationError("vanished at v_h");
    return b;
}

void reduce_dense_case1_impl(TraceBuilder& tb) {
    if (is_vacuum_multiple(tb.current())) return;
    std::vector<std::vector<GroupElement>> tuples;
    for (const auto& [m, c] : tb.current().terms()) tuples.push_back(descending_ps(m));
    const std::vector<GroupElement> q = max_monomial(tuples);
    for (const GroupElement& qi : q) tb.apply(Generator::I(qi));
}

} // namespace

ScalarReduction reduce_dense_case1(const ModuleVector& u) {
    if (u.is_zero()) throw PreconditionError("input must be nonzero");
    if (!is_weight_vector(u)) throw PreconditionError("input must be a single weight component");
    if (!is_all_I(u)) throw PreconditionError("input must be a combination of I-monomials");
    if (u.context()->hw.c_I.is_zero()) throw PreconditionError("case 1 requires c_I != 0");
    TraceBuilder tb(u);
    reduce_dense_case1_impl(tb);
    const FieldScalar b = finish_at_vacuum(tb);
    return {b, tb.finish()};
}

// ---------------------------------------------------------------------------
// Dense order, case 2 (c_I = 0, c_LI != 0)

namespace {

// The degenerate ladder entry h_I/c_LI - 1, as a group element when it lies
// in the lattice and is positive.
std::optional<GroupElement> bad_ladder_entry(const VermaContext& ctx) {
    const FieldScalar bad = ctx.hw.h_I / ctx.hw.c_LI - FieldScalar(1);
    if (!ctx.group->coordinates(bad)) return std::nullopt;
    GroupElement e = ctx.group->element(bad);
    if (!e.is_positive()) return std::nullopt;
    return e;
}

std::optional<GroupElement> largest_entry(const ModuleVector& v) {
    std::optional<GroupElement> top;
    for (const auto& [m, c] : v.terms())
        if (!m.ps().empty() && (!top || m.ps().back().compare(*top) == Ordering::Greater))
            top = m.ps().back();
    return top;
}

std::size_t count_entry(const ModuleVector& v, const GroupElement& e) {
    std::size_t n = 0;
    for (const auto& [m, c] : v.terms())
        n += std::count_if(m.ps().begin(), m.ps().end(),
                           [&](const GroupElement& p) { return p == e; });
    return n;
}

void reduce_dense_case2_impl(TraceBuilder& tb) {
    const VermaPtr ctx = tb.current().context();
    const GroupPtr& group = ctx->group;
    const std::optional<GroupElement> bad = bad_ladder_entry(*ctx);

    // Peel to a single monomial: each L_{q1-y} kills every term without the
    // global maximal entry q1 and rewrites one q1 into y in the survivors.
    std::size_t guard = 0;
    while (tb.current().terms().size() > 1) {
        if (++guard > 100000) throw ProofViolationError("peel loop did not terminate");
        if (!is_all_I(tb.current())) throw ProofViolationError("peel left an L-factor");
        const GroupElement q1 = *largest_entry(tb.current());
        const std::size_t q1_count = count_entry(tb.current(), q1);

        std::optional<GroupElement> second;  // largest entry strictly below q1
        for (const auto& [m, c] : tb.current().terms())
            for (const auto& p : m.ps())
                if (p.compare(q1) == Ordering::Less &&
                    (!second || p.compare(*second) == Ordering::Greater))
                    second = p;
        GroupElement y_bound = second ? q1 - *second : q1;
        if (q1.compare(y_bound) == Ordering::Less) y_bound = q1;
        std::vector<GroupElement> forbidden;
        if (bad) forbidden.push_back(*bad);
        const GroupElement y = find_positive_below(group, y_bound, forbidden);

        tb.apply(Generator::L(q1 - y));
        if (tb.current().is_zero()) throw ProofViolationError("peel step vanished");
        const GroupElement new_top = *largest_entry(tb.current());
        const bool progressed =
            new_top.compare(q1) == Ordering::Less ||
            (new_top == q1 && count_entry(tb.current(), q1) < q1_count);
        if (!progressed) throw ProofViolationError("peel step made no progress");
    }

    // Ladder: consume the single monomial from its largest entry down,
    // detouring when the top entry is the degenerate one.
    guard = 0;
    while (!tb.current().is_zero() && !is_vacuum_multiple(tb.current())) {
        if (++guard > 100000) throw ProofViolationError("ladder loop did not terminate");
        const Monomial m = tb.current().terms().begin()->first;
        if (tb.current().terms().size() != 1 || !m.js().empty())
            throw ProofViolationError("ladder expects a single I-monomial");
        const GroupElement z1 = m.ps().back();
        const bool degenerate = bad && z1 == *bad;
        if (!degenerate) {
            tb.apply(Generator::L(z1));
            if (tb.current().terms().size() != 1)
                throw ProofViolationError("ladder step split the monomial");
        } else {
            // Replace the degenerate entry by a small fresh one.
            std::optional<GroupElement> next;  // largest entry strictly below z1
            for (const auto& p : m.ps())
                if (p.compare(z1) == Ordering::Less &&
                    (!next || p.compare(*next) == Ordering::Greater))
                    next = p;
            const GroupElement x_bound = next ? z1 - *next : z1;
            const GroupElement xp = find_positive_below(group, x_bound, {});
            tb.apply(Generator::L(z1 - xp));
            if (tb.current().terms().size() != 1 ||
                tb.current().terms().begin()->first.factor_count() != m.factor_count())
                throw ProofViolationError("degenerate detour did not replace the entry");
        }
        if (tb.current().is_zero()) throw ProofViolationError("ladder step vanished");
    }
}

} // namespace

ScalarReduction reduce_dense_case2(const ModuleVector& u) {
    if (u.is_zero()) throw PreconditionError("input must be nonzero");
    if (!is_weight_vector(u)) throw PreconditionError("input must be a single weight component");
    if (!is_all_I(u)) throw PreconditionError("input must be a combination of I-monomials");
    if (!u.context()->hw.c_I.is_zero() || u.context()->hw.c_LI.is_zero())
        throw PreconditionError("case 2 requires c_I = 0 and c_LI != 0");
    TraceBuilder tb(u);
    reduce_dense_case2_impl(tb);
    const FieldScalar b = finish_at_vacuum(tb);
    return {b, tb.finish()};
}

ScalarReduction reduce_dense(const ModuleVector& u0) {
    require_dense(u0);
    const HighestWeight& hw = u0.context()->hw;
    if (hw.c_I.is_zero() && hw.c_LI.is_zero())
        throw PreconditionError("dense reduction requires (c_I, c_LI) != (0, 0)");
    if (u0.is_zero() || is_vacuum_multiple(u0))
        throw PreconditionError("input must be a weight vector outside F*v_h");
    if (!is_weight_vector(u0)) throw PreconditionError("input must be a single weight component");
    TraceBuilder tb(u0);
    strip_L_part_impl(tb);
    if (!hw.c_I.is_zero())
        reduce_dense_case1_impl(tb);
    else
        reduce_dense_case2_impl(tb);
    const FieldScalar b = finish_at_vacuum(tb);
    return {b, tb.finish()};
}

// ---------------------------------------------------------------------------
// Discrete order

namespace {

struct DiscreteContext {
    GroupElement a;  // minimal positive element

    bool in_za(const GroupElement& e) const {
        return decompose(e, a).region == Region::ZPart;
    }
    bool in_hplus(const GroupElement& e) const {
        return decompose(e, a).region == Region::HPlus;
    }
};

bool monomial_in_za(const Monomial& m, const DiscreteContext& dc) {
    return std::all_of(m.ps().begin(), m.ps().end(),
                       [&](const GroupElement& p) { return dc.in_za(p); }) &&
           std::all_of(m.js().begin(), m.js().end(),
                       [&](const GroupElement& j) { return dc.in_za(j); });
}

std::size_t hplus_factor_count(const Monomial& m, const DiscreteContext& dc) {
    std::size_t n = 0;
    for (const auto& p : m.ps()) n += dc.in_hplus(p) ? 1 : 0;
    for (const auto& j : m.js()) n += dc.in_hplus(j) ? 1 : 0;
    return n;
}

// (max per-term H+ factor count, number of terms attaining the max)
std::pair<std::size_t, std::size_t> hplus_measure(const ModuleVector& v,
                                                  const DiscreteContext& dc) {
    std::size_t mx = 0, cnt = 0;
    for (const auto& [m, c] : v.terms()) {
        const std::size_t n = hplus_factor_count(m, dc);
        if (n > mx) {
            mx = n;
            cnt = 1;
        } else if (n == mx && n > 0) {
            ++cnt;
        }
    }
    return {mx, cnt};
}

// Deterministic stream of raising candidates used by the verified greedy
// strip: L_{w - n*a} for every H+ index w in the support, then the I-indexed
// fallbacks.
std::vector<Generator> strip_candidates(const ModuleVector& v, const DiscreteContext& dc) {
    std::vector<GroupElement> ws;
    for (const auto& [m, c] : v.terms()) {
        for (const auto& p : m.ps())
            if (dc.in_hplus(p) && std::find(ws.begin(), ws.end(), p) == ws.end()) ws.push_back(p);
        for (const auto& j : m.js())
            if (dc.in_hplus(j) && std::find(ws.begin(), ws.end(), j) == ws.end()) ws.push_back(j);
    }
    std::sort(ws.begin(), ws.end());
    constexpr long kShiftRange = 6;
    std::vector<Generator> out;
    for (const GroupElement& w : ws)
        for (long n = 0; n <= kShiftRange; ++n) out.push_back(Generator::L(w - dc.a * n));
    for (const GroupElement& w : ws)
        for (long n = 0; n <= kShiftRange; ++n) out.push_back(Generator::I(w - dc.a * n));
    return out;
}

void greedy_strip_hplus(TraceBuilder& tb, const DiscreteContext& dc) {
    while (true) {
        const auto measure = hplus_measure(tb.current(), dc);
        if (measure.first == 0) return;
        bool progressed = false;
        for (const Generator& g : strip_candidates(tb.current(), dc)) {
            const ModuleVector next = act(g, tb.current());
            if (next.is_zero()) continue;
            if (hplus_measure(next, dc) < measure) {
                tb.apply(g);
                progressed = true;
                break;
            }
        }
        if (!progressed)
            throw StripExhaustedError("greedy H+ strip ran out of verified candidates");
    }
}

void reduce_discrete_ci_nonzero(TraceBuilder& tb, const DiscreteContext& dc) {
    // Kill the I-part of the top filtration layer by pairing against the
    // maximal mixed I-tuple.
    const std::size_t r = max_l_count(tb.current());
    std::vector<std::vector<GroupElement>> tuples;
    for (const auto& [m, c] : tb.current().terms())
        if (m.js().size() == r && !m.ps().empty()) tuples.push_back(descending_ps(m));
    if (!tuples.empty()) {
        const std::vector<GroupElement> q0 = max_monomial(tuples);
        for (const GroupElement& qi : q0) tb.apply(Generator::I(qi));
        if (tb.current().is_zero()) throw ProofViolationError("I_{q0} application vanished");
    }
    greedy_strip_hplus(tb, dc);
}

void reduce_discrete_ci_zero(TraceBuilder& tb, const DiscreteContext& dc) {
    // Step 1: convert every H+-indexed L-factor into an I-factor with a
    // raising I_eps ladder.
    std::optional<GroupElement> j0;  // minimal H+ L-entry
    std::size_t n0 = 0;              // max per-term H+ L-count
    std::vector<GroupElement> j1s;   // smallest H+ L-entry per term
    std::vector<GroupElement> hplus_ps;
    for (const auto& [m, c] : tb.current().terms()) {
        std::size_t cnt = 0;
        std::optional<GroupElement> j1;
        for (const auto& j : m.js())
            if (dc.in_hplus(j)) {
                ++cnt;
                if (!j1 || j.compare(*j1) == Ordering::Less) j1 = j;
                if (!j0 || j.compare(*j0) == Ordering::Less) j0 = j;
            }
        if (j1) j1s.push_back(*j1);
        n0 = std::max(n0, cnt);
        for (const auto& p : m.ps())
            if (dc.in_hplus(p)) hplus_ps.push_back(p);
    }
    if (j0) {
        std::optional<GroupElement> eps;
        for (long m = 1; m <= tb.current().context()->group->height_cap() && !eps; ++m) {
            const GroupElement cand = *j0 - dc.a * m;
            const bool clash = std::any_of(j1s.begin(), j1s.end(), [&](const GroupElement& j1) {
                const GroupElement diff = j1 - cand;
                return std::find(hplus_ps.begin(), hplus_ps.end(), diff) != hplus_ps.end();
            });
            if (!clash) eps = cand;
        }
        if (!eps) throw SearchExhaustedError("no admissible epsilon for the I-ladder");
        for (std::size_t k = 0; k < n0; ++k) tb.apply(Generator::I(*eps));
        if (tb.current().is_zero()) throw ProofViolationError("I_eps ladder vanished");
        for (const auto& [m, c] : tb.current().terms())
            for (const auto& j : m.js())
                if (dc.in_hplus(j))
                    throw ProofViolationError("H+ L-factor survived the I-ladder");
    }

    // Step 2: remove the H+-indexed I-factors of a minimal term with the
    // L_{q_s - a} recursion; weight homogeneity then clears the residue.
    std::size_t guard = 0;
    while (true) {
        if (++guard > 100000) throw ProofViolationError("I-factor recursion did not terminate");
        std::size_t tmin = SIZE_MAX;
        std::vector<std::vector<GroupElement>> minimal_tuples;
        for (const auto& [m, c] : tb.current().terms()) {
            std::vector<GroupElement> hp;
            for (const auto& p : m.ps())
                if (dc.in_hplus(p)) hp.push_back(p);
            if (hp.size() < tmin) {
                tmin = hp.size();
                minimal_tuples.clear();
            }
            if (hp.size() == tmin)
                minimal_tuples.push_back({hp.rbegin(), hp.rend()});  // descending
        }
        if (tmin == 0 || tmin == SIZE_MAX) break;
        const std::vector<GroupElement> q = min_monomial_desc(minimal_tuples);
        const GroupElement qs = q.back();  // smallest entry of the minimal tuple
        tb.apply(Generator::L(qs - dc.a));
        if (tb.current().is_zero()) throw ProofViolationError("L_{q_s - a} step vanished");
    }
}

} // namespace

Reduction reduce_discrete(const ModuleVector& u0) {
    const OrderClass oc = classify_order(u0.context()->group);
    if (oc.dense) throw PreconditionError("reduce_discrete requires a discrete order");
    const DiscreteContext dc{*oc.min_positive};
    if (u0.is_zero() || is_vacuum_multiple(u0))
        throw PreconditionError("input must be a weight vector outside F*v_h");
    if (!is_weight_vector(u0)) throw PreconditionError("input must be a single weight component");

    TraceBuilder tb(u0);
    const bool already = std::all_of(u0.terms().begin(), u0.terms().end(), [&](const auto& t) {
        return monomial_in_za(t.first, dc);
    });
    if (!already) {
        if (!u0.context()->hw.c_I.is_zero())
            reduce_discrete_ci_nonzero(tb, dc);
        else
            reduce_discrete_ci_zero(tb, dc);
    }
    if (tb.current().is_zero()) throw ProofViolationError("discrete reduction reached zero");
    for (const auto& [m, c] : tb.current().terms())
        if (!monomial_in_za(m, dc))
            throw ProofViolationError("discrete reduction left an index outside Za");
    return {tb.current(), tb.finish()};
}

// ---------------------------------------------------------------------------
// Singular vectors

namespace {

std::vector<Generator> raising_set(const GroupElement& a) {
    return {Generator::L(a), Generator::L(a * 2), Generator::I(a)};
}

} // namespace

bool is_singular(const ModuleVector& v) {
    if (!is_weight_vector(v)) throw PreconditionError("is_singular expects a weight vector");
    if (v.is_zero() || is_vacuum_multiple(v)) return false;
    const OrderClass oc = classify_order(v.context()->group);
    if (oc.dense) throw PreconditionError("is_singular expects a discrete order");
    const DiscreteContext dc{*oc.min_positive};
    for (const auto& [m, c] : v.terms())
        if (!monomial_in_za(m, dc)) throw PreconditionError("indices must lie in Za");
    const std::vector<Generator> ops = raising_set(dc.a);
    return std::all_of(ops.begin(), ops.end(),
                       [&](const Generator& g) { return act(g, v).is_zero(); });
}

std::vector<std::vector<FieldScalar>> exact_kernel(Matrix m) {
    const std::size_t rows = m.size();
    const std::size_t cols = rows == 0 ? 0 : m[0].size();
    std::vector<std::size_t> pivot_col;  // per pivot row
    std::size_t rank = 0;
    for (std::size_t col = 0; col < cols && rank < rows; ++col) {
        std::size_t pr = rank;
        while (pr < rows && m[pr][col].is_zero()) ++pr;
        if (pr == rows) continue;
        std::swap(m[rank], m[pr]);
        const FieldScalar inv = m[rank][col].inverse();
        for (std::size_t c = col; c < cols; ++c) m[rank][c] *= inv;
        for (std::size_t r = 0; r < rows; ++r) {
            if (r == rank || m[r][col].is_zero()) continue;
            const FieldScalar f = m[r][col];
            for (std::size_t c = col; c < cols; ++c) m[r][c] -= f * m[rank][c];
        }
        pivot_col.push_back(col);
        ++rank;
    }
    std::vector<bool> is_pivot(cols, false);
    for (std::size_t c : pivot_col) is_pivot[c] = true;

    std::vector<std::vector<FieldScalar>> kernel;
    for (std::size_t free = 0; free < cols; ++free) {
        if (is_pivot[free]) continue;
        std::vector<FieldScalar> v(cols, FieldScalar(0));
        v[free] = FieldScalar(1);
        for (std::size_t r = 0; r < rank; ++r) v[pivot_col[r]] = -m[r][free];
        kernel.push_back(std::move(v));
    }
    return kernel;
}

std::vector<LevelKernel> singular_search(const VermaModule& M, long max_level) {
    if (max_level < 1) throw PreconditionError("level bound must be >= 1");
    const OrderClass oc = classify_order(M.group());
    if (oc.dense) throw PreconditionError("singular search requires a discrete order");
    const GroupElement a = *oc.min_positive;

    std::vector<LevelKernel> found;
    for (long n = 1; n <= max_level; ++n) {
        const std::vector<Monomial> basis = basis_at_level(M, n);
        // Row space: every monomial reachable by the three raising operators.
        std::map<Monomial, std::size_t, MonomialLess> row_of;
        std::vector<std::vector<ModuleVector>> images;  // per op, per basis monomial
        for (const Generator& g : raising_set(a)) {
            images.emplace_back();
            for (const Monomial& b : basis) {
                ModuleVector img = act(g, M.monomial_vector(b));
                for (const auto& [m, c] : img.terms()) row_of.emplace(m, 0);
                images.back().push_back(std::move(img));
            }
        }
        std::size_t next = 0;
        for (auto& [m, idx] : row_of) idx = next++;

        Matrix mat(row_of.size() * raising_set(a).size(),
                   std::vector<FieldScalar>(basis.size(), FieldScalar(0)));
        for (std::size_t op = 0; op < images.size(); ++op)
            for (std::size_t col = 0; col < basis.size(); ++col)
                for (const auto& [m, c] : images[op][col].terms())
                    mat[op * row_of.size() + row_of[m]][col] = c;

        std::vector<ModuleVector> vectors;
        for (const auto& coeffs : exact_kernel(std::move(mat))) {
            ModuleVector v(M.context());
            for (std::size_t col = 0; col < basis.size(); ++col) v.add_term(basis[col], coeffs[col]);
            vectors.push_back(std::move(v));
        }
        if (!vectors.empty()) found.push_back({n, std::move(vectors)});
    }
    return found;
}

// ---------------------------------------------------------------------------
// Decision procedure

namespace {

// Truncated evidence for the dense (c_I, c_LI) = (0, 0) regimes: no monomial
// with an I-factor may reach F*v_h under raising operators up to the bound.
bool i_monomials_closed_under_raising(const VermaModule& M, long bound) {
    const GroupPtr& g = M.group();
    std::vector<GroupElement> indices;
    for (long h = 1; h <= bound; ++h) {
        if (g->rank() == 1) {
            indices.push_back(g->element_from_coords({h}));
        } else {
            for (long m = -h; m <= h; ++m)
                for (long n = -h; n <= h; ++n)
                    if (std::max(std::abs(m), std::abs(n)) == h) {
                        GroupElement e = g->element_from_coords({m, n});
                        if (e.is_positive()) indices.push_back(std::move(e));
                    }
        }
    }
    std::vector<Monomial> samples;
    for (std::size_t i = 0; i < indices.size() && i < 4; ++i) {
        samples.emplace_back(std::vector<GroupElement>{indices[i]}, std::vector<GroupElement>{});
        for (std::size_t k = 0; k < indices.size() && k < 4; ++k)
            samples.emplace_back(std::vector<GroupElement>{indices[i], indices[k]},
                                 std::vector<GroupElement>{});
    }
    for (const Monomial& m : samples) {
        for (const GroupElement& x : indices) {
            for (const Generator& op : {Generator::L(x), Generator::I(x)}) {
                const ModuleVector img = act(op, M.monomial_vector(m));
                for (const auto& [mm, c] : img.terms())
                    if (mm.ps().empty())
                        return false;  // escaped the I-monomial span
            }
        }
    }
    return true;
}

} // namespace

Verdict decide(const VermaModule& M, long max_level) {
    if (max_level < 1) throw PreconditionError("level bound must be >= 1");
    const OrderClass oc = classify_order(M.group());
    const HighestWeight& hw = M.hw();

    if (oc.dense) {
        if (!hw.c_I.is_zero() || !hw.c_LI.is_zero())
            return {VerdictKind::Irreducible, "(c_I, c_LI) != (0, 0) with a dense order",
                    std::nullopt, std::nullopt, std::nullopt};
        if (hw.h_I.is_zero()) {
            if (!i_monomials_closed_under_raising(M, 2))
                throw ProofViolationError("I-monomial span is not raising-closed");
            const GroupElement w = M.group()->element_from_coords(
                M.group()->rank() == 1 ? std::vector<mpz_class>{1}
                                       : std::vector<mpz_class>{1, 0});
            const Monomial witness({w.is_positive() ? w : -w}, {});
            return {VerdictKind::Reducible,
                    "c_I = c_LI = h_I = 0: the I-monomials span a proper graded submodule",
                    M.monomial_vector(witness), 1, std::nullopt};
        }
        return {VerdictKind::ClaimedReducibleNoWitness,
                "c_I = c_LI = 0, h_I != 0: U(I~)V contains I_0 v_h = h_I v_h, so the claimed "
                "submodule is not proper as stated; no witness is fabricated",
                std::nullopt, std::nullopt, std::nullopt};
    }

    // Discrete order: reducibility is equivalent to reducibility of the
    // Za-submodule, searched level by level after parameter transport.
    const GroupElement a = *oc.min_positive;
    const HighestWeight hw_a = transport_highest_weight(a, hw);
    const VermaModule Ma(OrderedGroup::integers(), hw_a);
    const auto kernels = singular_search(Ma, max_level);
    if (!kernels.empty()) {
        const LevelKernel& first = kernels.front();
        return {VerdictKind::Reducible, "singular vector in the Za-submodule",
                first.kernel.front(), first.level, std::nullopt};
    }
    return {VerdictKind::UnknownUpToLevel, "no singular vector up to the level bound",
            std::nullopt, std::nullopt, max_level};
}

} // namespace hvir
