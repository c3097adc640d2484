#ifndef HVIR_REPORT_HPP
#define HVIR_REPORT_HPP

#include <json.hpp>

#include <string>

#include "hvir/engine.hpp"

namespace hvir {

/// One batch job: group/weight configuration plus a command and its
/// parameters, as assembled by the command line front end.
struct JobConfig {
    std::string command;            // bracket|act|basis|transport|singular|reduce|decide
    std::string group = "int";      // int | zsqrt2 | zsqrt2-real | zsqrt2-lex
    std::string order;              // natural | real | lex (optional, must match preset)
    std::string hw = "0,0,0,0,0";   // five comma-separated scalars
    long max_level = 6;
    std::string lhs, rhs;           // bracket operands
    std::string generator_text;     // act
    std::string vector_text;        // act / reduce
    std::string x_text;             // transport scale
    unsigned seed = 0;              // reduce sampling when no vector is given
    std::string json_path;          // optional machine-readable output file
};

struct RunResult {
    int exit_code = 0;           // 0 ok, 2 parse, 3 proof violation, 4 search exhausted
    std::string summary;         // plain-text report
    nlohmann::json report;       // machine-readable report
};

GroupPtr make_group(const JobConfig& cfg);
HighestWeight parse_highest_weight(const std::string& text);

/// Deterministic pseudo-random weight vector: one monomial with 1..4 factors
/// of index height <= 3, plus same-weight tag-flip siblings, with small
/// nonzero coefficients. Identical seeds give identical vectors.
ModuleVector sample_weight_vector(const VermaPtr& ctx, unsigned seed);

nlohmann::json scalar_json(const FieldScalar& s);
nlohmann::json highest_weight_json(const HighestWeight& hw);
nlohmann::json algebra_element_json(const AlgebraElement& e);
nlohmann::json module_vector_json(const ModuleVector& v);
nlohmann::json trace_json(const ReductionTrace& t);
nlohmann::json verdict_json(const Verdict& v);

/// Executes the job. Never throws: errors are folded into the exit code and
/// report. Identical configs produce byte-identical summaries and reports.
RunResult run(const JobConfig& cfg);

} // namespace hvir

#endif
