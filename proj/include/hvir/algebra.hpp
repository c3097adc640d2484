#ifndef HVIR_ALGEBRA_HPP
#define HVIR_ALGEBRA_HPP

#include <map>
#include <optional>
#include <string>

#include "hvir/group.hpp"

namespace hvir {

enum class GenTag { L, I, C, CI, CLI };

std::string tag_name(GenTag t);
bool tag_is_central(GenTag t);

/// Basis generator L_μ, I_μ, C, C_I or C_LI; centrals carry no index.
struct Generator {
    GenTag tag;
    std::optional<GroupElement> index;  // present iff tag is L or I

    static Generator L(GroupElement mu) { return {GenTag::L, std::move(mu)}; }
    static Generator I(GroupElement mu) { return {GenTag::I, std::move(mu)}; }
    static Generator central(GenTag t);

    bool is_central() const { return tag_is_central(tag); }
    bool operator==(const Generator& o) const;
    std::string str() const;
};

/// Orders generators by (tag, index) for canonical serialization.
struct GeneratorLess {
    bool operator()(const Generator& x, const Generator& y) const;
};

/// Finite linear combination of generators; zero coefficients are never stored.
class AlgebraElement {
  public:
    explicit AlgebraElement(GroupPtr group) : group_(std::move(group)) {}
    static AlgebraElement basis(const Generator& g, const GroupPtr& group);

    const GroupPtr& group() const { return group_; }
    const std::map<Generator, FieldScalar, GeneratorLess>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    void add_term(const Generator& g, const FieldScalar& coeff);
    AlgebraElement operator+(const AlgebraElement& o) const;
    AlgebraElement operator-(const AlgebraElement& o) const;
    AlgebraElement scaled(const FieldScalar& c) const;

    bool operator==(const AlgebraElement& o) const;
    std::string str() const;

  private:
    GroupPtr group_;
    std::map<Generator, FieldScalar, GeneratorLess> terms_;
};

/// Bracket of two basis generators (Lie algebra structure constants).
AlgebraElement bracket(const Generator& u, const Generator& v, const GroupPtr& group);
/// Bilinear extension.
AlgebraElement bracket(const AlgebraElement& u, const AlgebraElement& v);

/// Isomorphism from the integer-indexed algebra onto the Zx-indexed copy:
/// L_i ↦ x⁻¹L_{ix} + δ_{i,0}((x-x⁻¹)/24)C, I_i ↦ x⁻¹I_{ix} + δ_{i,0}(1-x⁻¹)C_LI,
/// C ↦ xC, C_I ↦ x⁻¹C_I, C_LI ↦ C_LI.
AlgebraElement theta(const GroupElement& x, const AlgebraElement& u);
AlgebraElement theta_generator(const GroupElement& x, const Generator& g_int);
/// Inverse images, solved from the same table.
AlgebraElement theta_inverse(const GroupElement& x, const AlgebraElement& u);

/// The 5-tuple (h, h_I, c, c_I, c_LI) of highest-weight scalars.
struct HighestWeight {
    FieldScalar h, h_I, c, c_I, c_LI;

    bool operator==(const HighestWeight& o) const;
    std::string str() const;
};

/// Transported scalars for the Zx-submodule generated by the highest weight
/// vector: (x⁻¹h + ((x-x⁻¹)/24)c, x⁻¹h_I + (1-x⁻¹)c_LI, xc, x⁻¹c_I, c_LI).
HighestWeight transport_highest_weight(const GroupElement& x, const HighestWeight& hw);

} // namespace hvir

#endif
