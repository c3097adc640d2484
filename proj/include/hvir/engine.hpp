#ifndef HVIR_ENGINE_HPP
#define HVIR_ENGINE_HPP

#include <optional>
#include <string>
#include <vector>

#include "hvir/verma.hpp"

namespace hvir {

// ---------------------------------------------------------------------------
// Reduction traces

struct TraceStep {
    Generator op;
    std::string digest;  // digest of the vector after applying op
};

/// Audit trail of a reduction: replaying the steps from the input must
/// reproduce the outcome exactly.
struct ReductionTrace {
    ModuleVector input;
    std::vector<TraceStep> steps;
    ModuleVector outcome;
};

std::string vector_digest(const ModuleVector& v);
/// Re-executes the trace; true iff every step digest and the outcome match.
bool replay_trace(const ReductionTrace& t);

struct Reduction {
    ModuleVector outcome;
    ReductionTrace trace;
};

struct ScalarReduction {
    FieldScalar value;  // the nonzero multiple of v_h reached
    ReductionTrace trace;
};

// ---------------------------------------------------------------------------
// Verdicts

enum class VerdictKind { Irreducible, Reducible, UnknownUpToLevel, ClaimedReducibleNoWitness };

struct Verdict {
    VerdictKind kind;
    std::string reason;
    std::optional<ModuleVector> witness;  // Reducible: a singular vector
    std::optional<long> level;            // Reducible: level of the witness
    std::optional<long> max_level;        // UnknownUpToLevel
};

std::string verdict_kind_name(VerdictKind k);

// ---------------------------------------------------------------------------
// Dense-order reductions

/// Removes every L-factor from a weight vector over a dense order by repeated
/// I_x applications, landing on a combination of pure I-monomials.
Reduction strip_L_part(const ModuleVector& u0);

/// Unique maximum of a nonempty family of index tuples, compared positionwise
/// as given with missing entries reading as zero.
std::vector<GroupElement> max_monomial(const std::vector<std::vector<GroupElement>>& tuples);

/// c_I != 0: pairs away the maximal I-monomial and reaches b*v_h, b != 0.
ScalarReduction reduce_dense_case1(const ModuleVector& u);
/// c_I = 0, c_LI != 0: peels to a single I-monomial, then runs the L-ladder
/// with a detour around the degenerate entry h_I/c_LI - 1.
ScalarReduction reduce_dense_case2(const ModuleVector& u);
/// Full dense pipeline: strip L-part, then case 1 or case 2 by c_I.
ScalarReduction reduce_dense(const ModuleVector& u0);

// ---------------------------------------------------------------------------
// Discrete-order reduction

/// Carries a weight vector into the Za-indexed submodule (nonzero output, all
/// indices in Za), replaying the discrete branch of the reducibility proof.
Reduction reduce_discrete(const ModuleVector& u0);

// ---------------------------------------------------------------------------
// Singular vectors

/// True iff v is a nonzero weight vector, not proportional to v_h, with all
/// indices in Za, annihilated by L_a, L_{2a} and I_a.
bool is_singular(const ModuleVector& v);

struct LevelKernel {
    long level;
    std::vector<ModuleVector> kernel;
};

/// Exact kernels of the stacked (L_a, L_2a, I_a) action per level <= max_level;
/// only levels with nonzero kernels are reported.
std::vector<LevelKernel> singular_search(const VermaModule& M, long max_level);

using Matrix = std::vector<std::vector<FieldScalar>>;

/// Exact nullspace basis in pivot/free-variable canonical form.
std::vector<std::vector<FieldScalar>> exact_kernel(Matrix m);

/// Top-level (ir)reducibility decision.
Verdict decide(const VermaModule& M, long max_level);

} // namespace hvir

#endif
