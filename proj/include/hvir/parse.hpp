#ifndef HVIR_PARSE_HPP
#define HVIR_PARSE_HPP

#include <string>

#include "hvir/verma.hpp"

namespace hvir {

/// Parse "p/q+r/s√d" (also accepts sqrt(d) / sqrtd spellings). Throws ParseError.
FieldScalar parse_scalar(const std::string& text);

GroupElement parse_group_element(const std::string& text, const GroupPtr& group);

/// "L[2]", "I[-1+√2]", "C", "C_I", "C_LI" (underscores optional).
Generator parse_generator(const std::string& text, const GroupPtr& group);

/// "4*L[0] + 1/2*C" or "0".
AlgebraElement parse_algebra_element(const std::string& text, const GroupPtr& group);

/// "I[-1]L[-2]v" (factor indices must be negative), "v" for the vacuum.
Monomial parse_monomial(const std::string& text, const GroupPtr& group);

/// "-2*I[-1]v + 1*L[-1]v" or "0".
ModuleVector parse_module_vector(const std::string& text, const VermaPtr& ctx);

} // namespace hvir

#endif
