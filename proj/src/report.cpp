#include "hvir/report.hpp"

#include <random>
#include <sstream>

#include "hvir/parse.hpp"

namespace hvir {

using nlohmann::json;

GroupPtr make_group(const JobConfig& cfg) {
    std::string g = cfg.group;
    std::string order = cfg.order;
    if (g == "zsqrt2-real") {
        g = "zsqrt2";
        if (order.empty()) order = "real";
    } else if (g == "zsqrt2-lex") {
        g = "zsqrt2";
        if (order.empty()) order = "lex";
    }
    if (g == "int") {
        if (!order.empty() && order != "natural")
            throw ParseError("group 'int' only supports the natural order");
        return OrderedGroup::integers();
    }
    if (g == "zsqrt2") {
        if (order == "real") return OrderedGroup::quadratic(2, OrderKind::RealEmbedding);
        if (order == "lex") return OrderedGroup::quadratic(2, OrderKind::Lexicographic);
        throw ParseError("group 'zsqrt2' needs --order real or --order lex");
    }
    throw ParseError("unknown group preset '" + cfg.group + "'");
}

HighestWeight parse_highest_weight(const std::string& text) {
    std::vector<std::string> parts;
    std::string cur;
    for (char c : text) {
        if (c == ',') {
            parts.push_back(cur);
            cur.clear();
        } else {
            cur += c;
        }
    }
    parts.push_back(cur);
    if (parts.size() != 5)
        throw ParseError("highest weight needs 5 comma-separated scalars, got " +
                         std::to_string(parts.size()));
    HighestWeight hw;
    hw.h = parse_scalar(parts[0]);
    hw.h_I = parse_scalar(parts[1]);
    hw.c = parse_scalar(parts[2]);
    hw.c_I = parse_scalar(parts[3]);
    hw.c_LI = parse_scalar(parts[4]);
    return hw;
}

ModuleVector sample_weight_vector(const VermaPtr& ctx, unsigned seed) {
    std::mt19937 rng(seed);
    const GroupPtr& g = ctx->group;
    auto random_positive = [&]() -> GroupElement {
        std::uniform_int_distribution<long> coord(-3, 3);
        for (;;) {
            std::vector<mpz_class> cs;
            for (std::size_t k = 0; k < g->rank(); ++k) cs.emplace_back(coord(rng));
            GroupElement e = g->element_from_coords(cs);
            if (e.is_positive()) return e;
        }
    };
    std::uniform_int_distribution<int> nf_dist(1, 4);
    std::uniform_int_distribution<int> tag_dist(0, 1);
    std::uniform_int_distribution<int> coeff_dist(1, 5);

    const int nf = nf_dist(rng);
    std::vector<GroupElement> ps, js;
    std::vector<std::pair<GenTag, GroupElement>> factors;
    for (int k = 0; k < nf; ++k) {
        const GroupElement idx = random_positive();
        const GenTag tag = tag_dist(rng) ? GenTag::I : GenTag::L;
        factors.emplace_back(tag, idx);
        (tag == GenTag::I ? ps : js).push_back(idx);
    }
    std::vector<Monomial> monomials{Monomial(ps, js)};
    // Same-weight siblings: flip one factor tag at a time (degree unchanged).
    for (std::size_t flip = 0; flip < factors.size(); ++flip) {
        std::vector<GroupElement> ps2, js2;
        for (std::size_t k = 0; k < factors.size(); ++k) {
            GenTag tag = factors[k].first;
            if (k == flip) tag = tag == GenTag::I ? GenTag::L : GenTag::I;
            (tag == GenTag::I ? ps2 : js2).push_back(factors[k].second);
        }
        Monomial m(ps2, js2);
        if (std::none_of(monomials.begin(), monomials.end(),
                         [&](const Monomial& prev) { return prev == m; }))
            monomials.push_back(std::move(m));
    }
    ModuleVector v(ctx);
    for (const Monomial& m : monomials) {
        long c = coeff_dist(rng);
        if (tag_dist(rng)) c = -c;
        v.add_term(m, FieldScalar(c));
    }
    if (v.is_zero()) v.add_term(monomials.front(), FieldScalar(1));
    return v;
}

// ---------------------------------------------------------------------------
// JSON forms

json scalar_json(const FieldScalar& s) { return s.str(); }

json highest_weight_json(const HighestWeight& hw) {
    return json{{"h", hw.h.str()},
                {"h_I", hw.h_I.str()},
                {"c", hw.c.str()},
                {"c_I", hw.c_I.str()},
                {"c_LI", hw.c_LI.str()}};
}

json algebra_element_json(const AlgebraElement& e) {
    json terms = json::array();
    for (const auto& [g, c] : e.terms()) {
        json t{{"tag", tag_name(g.tag)}, {"coeff", c.str()}};
        if (g.index) t["index"] = g.index->str();
        terms.push_back(std::move(t));
    }
    return json{{"text", e.str()}, {"terms", std::move(terms)}};
}

namespace {

json monomial_json(const Monomial& m) {
    json ps = json::array(), js = json::array();
    for (const auto& p : m.ps()) ps.push_back(p.str());
    for (const auto& j : m.js()) js.push_back(j.str());
    return json{{"text", m.str()}, {"ps", std::move(ps)}, {"js", std::move(js)}};
}

} // namespace

json module_vector_json(const ModuleVector& v) {
    json terms = json::array();
    for (const auto& [m, c] : v.terms())
        terms.push_back(json{{"monomial", monomial_json(m)}, {"coeff", c.str()}});
    return json{{"text", v.str()}, {"terms", std::move(terms)}};
}

json trace_json(const ReductionTrace& t) {
    json steps = json::array();
    for (const TraceStep& s : t.steps)
        steps.push_back(json{{"op", s.op.str()}, {"digest", s.digest}});
    return json{{"input", module_vector_json(t.input)},
                {"steps", std::move(steps)},
                {"outcome", module_vector_json(t.outcome)}};
}

json verdict_json(const Verdict& v) {
    json out{{"verdict", verdict_kind_name(v.kind)}, {"reason", v.reason}};
    if (v.witness) out["witness"] = module_vector_json(*v.witness);
    if (v.level) out["level"] = *v.level;
    if (v.max_level) out["max_level"] = *v.max_level;
    return out;
}

// ---------------------------------------------------------------------------
// Dispatch

namespace {

struct Job {
    json report;
    std::ostringstream summary;
};

void run_bracket(const JobConfig& cfg, const GroupPtr& g, Job& job) {
    const AlgebraElement u = parse_algebra_element(cfg.lhs, g);
    const AlgebraElement v = parse_algebra_element(cfg.rhs, g);
    const AlgebraElement r = bracket(u, v);
    job.report["result"] = algebra_element_json(r);
    job.summary << "[" << u.str() << ", " << v.str() << "] = " << r.str() << "\n";
}

void run_act(const JobConfig& cfg, const VermaPtr& ctx, Job& job) {
    const Generator g = parse_generator(cfg.generator_text, ctx->group);
    const ModuleVector v = parse_module_vector(cfg.vector_text, ctx);
    const ModuleVector r = act(g, v);
    job.report["result"] = module_vector_json(r);
    job.summary << g.str() << " . (" << v.str() << ") = " << r.str() << "\n";
}

void run_basis(const JobConfig& cfg, const VermaPtr& ctx, Job& job) {
    const VermaModule M(ctx->group, ctx->hw);
    json levels = json::array();
    job.summary << "level dimensions up to " << cfg.max_level << ":\n";
    for (long n = 1; n <= cfg.max_level; ++n) {
        const std::vector<Monomial> basis = basis_at_level(M, n);
        json names = json::array();
        for (const Monomial& m : basis) names.push_back(m.str());
        levels.push_back(json{{"level", n},
                              {"dimension", basis.size()},
                              {"monomials", std::move(names)}});
        job.summary << "  n=" << n << ": dim " << basis.size() << "\n";
    }
    job.report["levels"] = std::move(levels);
}

void run_transport(const JobConfig& cfg, const VermaPtr& ctx, Job& job) {
    const GroupElement x = parse_group_element(cfg.x_text, ctx->group);
    const HighestWeight out = transport_highest_weight(x, ctx->hw);
    job.report["x"] = x.str();
    job.report["transported"] = highest_weight_json(out);
    job.summary << "x = " << x.str() << ": " << ctx->hw.str() << " -> " << out.str() << "\n";
}

void run_singular(const JobConfig& cfg, const VermaPtr& ctx, Job& job) {
    const VermaModule M(ctx->group, ctx->hw);
    const auto found = singular_search(M, cfg.max_level);
    json levels = json::array();
    if (found.empty())
        job.summary << "no singular vectors up to level " << cfg.max_level << "\n";
    for (const LevelKernel& lk : found) {
        json vs = json::array();
        job.summary << "level " << lk.level << ":\n";
        for (const ModuleVector& v : lk.kernel) {
            vs.push_back(module_vector_json(v));
            job.summary << "  " << v.str() << "\n";
        }
        levels.push_back(json{{"level", lk.level}, {"kernel", std::move(vs)}});
    }
    job.report["levels"] = std::move(levels);
}

void run_reduce(const JobConfig& cfg, const VermaPtr& ctx, Job& job) {
    const ModuleVector v = cfg.vector_text.empty()
                               ? sample_weight_vector(ctx, cfg.seed)
                               : parse_module_vector(cfg.vector_text, ctx);
    const OrderClass oc = classify_order(ctx->group);
    job.report["input"] = module_vector_json(v);
    if (oc.dense) {
        const ScalarReduction r = reduce_dense(v);
        job.report["kind"] = "dense";
        job.report["value"] = r.value.str();
        job.report["trace"] = trace_json(r.trace);
        job.summary << v.str() << "  ~>  (" << r.value.str() << ")*v\n";
        job.summary << "trace: " << r.trace.steps.size() << " steps, replay "
                    << (replay_trace(r.trace) ? "ok" : "FAILED") << "\n";
    } else {
        const Reduction r = reduce_discrete(v);
        job.report["kind"] = "discrete";
        job.report["outcome"] = module_vector_json(r.outcome);
        job.report["trace"] = trace_json(r.trace);
        job.summary << v.str() << "  ~>  " << r.outcome.str() << "\n";
        job.summary << "trace: " << r.trace.steps.size() << " steps, replay "
                    << (replay_trace(r.trace) ? "ok" : "FAILED") << "\n";
    }
}

void run_decide(const JobConfig& cfg, const VermaPtr& ctx, Job& job) {
    const VermaModule M(ctx->group, ctx->hw);
    const Verdict v = decide(M, cfg.max_level);
    job.report["verdict"] = verdict_json(v);
    job.summary << verdict_kind_name(v.kind) << ": " << v.reason << "\n";
    if (v.witness) job.summary << "witness: " << v.witness->str() << "\n";
    if (v.level) job.summary << "level: " << *v.level << "\n";
    if (v.max_level) job.summary << "searched up to level " << *v.max_level << "\n";
}

} // namespace

RunResult run(const JobConfig& cfg) {
    Job job;
    job.report["command"] = cfg.command;
    job.report["group"] = cfg.group;
    if (!cfg.order.empty()) job.report["order"] = cfg.order;
    RunResult out;
    try {
        const GroupPtr g = make_group(cfg);
        const HighestWeight hw = parse_highest_weight(cfg.hw);
        job.report["hw"] = highest_weight_json(hw);
        const VermaPtr ctx = VermaModule(g, hw).context();

        if (cfg.command == "bracket")
            run_bracket(cfg, g, job);
        else if (cfg.command == "act")
            run_act(cfg, ctx, job);
        else if (cfg.command == "basis")
            run_basis(cfg, ctx, job);
        else if (cfg.command == "transport")
            run_transport(cfg, ctx, job);
        else if (cfg.command == "singular")
            run_singular(cfg, ctx, job);
        else if (cfg.command == "reduce")
            run_reduce(cfg, ctx, job);
        else if (cfg.command == "decide")
            run_decide(cfg, ctx, job);
        else
            throw ParseError("unknown command '" + cfg.command + "'");
        out.exit_code = 0;
    } catch (const ParseError& e) {
        out.exit_code = 2;
        job.report["error"] = {{"kind", "parse"}, {"what", e.what()}};
        job.summary << "parse error: " << e.what() << "\n";
    } catch (const ProofViolationError& e) {
        out.exit_code = 3;
        job.report["error"] = {{"kind", "proof-violation"}, {"what", e.what()}};
        job.summary << "proof violation: " << e.what() << "\n";
    } catch (const SearchExhaustedError& e) {
        out.exit_code = 4;
        job.report["error"] = {{"kind", "search-exhausted"}, {"what", e.what()}};
        job.summary << "search exhausted: " << e.what() << "\n";
    } catch (const Error& e) {
        out.exit_code = 2;
        job.report["error"] = {{"kind", "invalid-input"}, {"what", e.what()}};
        job.summary << "error: " << e.what() << "\n";
    }
    out.summary = job.summary.str();
    out.report = std::move(job.report);
    return out;
}

} // namespace hvir
