#ifndef HVIR_VERMA_HPP
#define HVIR_VERMA_HPP

#include <map>
#include <memory>
#include <utility>
#include <vector>

#include "hvir/algebra.hpp"

namespace hvir {

struct VermaContext {
    GroupPtr group;
    HighestWeight hw;

    bool same_as(const VermaContext& o) const;
};

using VermaPtr = std::shared_ptr<const VermaContext>;

/// Normal-form PBW monomial I_{-p_s}...I_{-p_1} L_{-j_1}...L_{-j_k} applied
/// to the highest weight vector. Both index multisets are stored ascending;
/// all entries are strictly positive.
class Monomial {
  public:
    Monomial() = default;  // the highest weight vector itself
    Monomial(std::vector<GroupElement> ps, std::vector<GroupElement> js);

    const std::vector<GroupElement>& ps() const { return ps_; }
    const std::vector<GroupElement>& js() const { return js_; }
    bool is_vacuum() const { return ps_.empty() && js_.empty(); }
    std::size_t factor_count() const { return ps_.size() + js_.size(); }

    /// Sum of all index magnitudes (the L_0-weight above h); zero scalar for v_h.
    FieldScalar degree() const;

    /// New monomial with one extra lowering factor of magnitude p > 0.
    Monomial with_factor(GenTag tag, const GroupElement& p) const;
    /// Leftmost factor of the word and the remaining monomial.
    std::pair<Generator, Monomial> split_leftmost() const;

    bool operator==(const Monomial& o) const { return ps_ == o.ps_ && js_ == o.js_; }
    std::string str() const;

  private:
    std::vector<GroupElement> ps_, js_;
};

/// Canonical order: degree, then I-part (largest entries first), then L-part.
struct MonomialLess {
    bool operator()(const Monomial& x, const Monomial& y) const;
};

class ModuleVector {
  public:
    explicit ModuleVector(VermaPtr ctx) : ctx_(std::move(ctx)) {}

    const VermaPtr& context() const { return ctx_; }
    const std::map<Monomial, FieldScalar, MonomialLess>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    void add_term(const Monomial& m, const FieldScalar& coeff);
    ModuleVector operator+(const ModuleVector& o) const;
    ModuleVector operator-(const ModuleVector& o) const;
    ModuleVector scaled(const FieldScalar& c) const;

    bool operator==(const ModuleVector& o) const;
    std::string str() const;

  private:
    VermaPtr ctx_;
    std::map<Monomial, FieldScalar, MonomialLess> terms_;
};

class VermaModule {
  public:
    VermaModule(GroupPtr group, HighestWeight hw);

    const VermaPtr& context() const { return ctx_; }
    const GroupPtr& group() const { return ctx_->group; }
    const HighestWeight& hw() const { return ctx_->hw; }

    /// The highest weight vector v_h.
    ModuleVector vacuum() const;
    ModuleVector monomial_vector(const Monomial& m) const;

  private:
    VermaPtr ctx_;
};

/// L_0-eigenvalue of the monomial: h + Σp + Σj.
FieldScalar weight(const Monomial& m, const VermaContext& ctx);

/// Module action of a single generator, straightened to normal form.
ModuleVector act(const Generator& g, const ModuleVector& v);
ModuleVector act_element(const AlgebraElement& e, const ModuleVector& v);
/// Iterated action, rightmost generator applied first.
ModuleVector act_word(const std::vector<Generator>& ws, const ModuleVector& v);

struct FieldScalarRealLess {
    bool operator()(const FieldScalar& x, const FieldScalar& y) const { return x < y; }
};

/// Partition of a vector into its weight components; the parts sum to v.
std::map<FieldScalar, ModuleVector, FieldScalarRealLess> weight_components(const ModuleVector& v);

/// All monomials of total index n*a over a discrete group with minimal
/// positive element a, deterministically ordered (I-heavy blocks first).
std::vector<Monomial> basis_at_level(const VermaModule& M, long n);

/// Integer partitions of n, entries descending, deterministic order.
std::vector<std::vector<long>> integer_partitions(long n);

/// View of the Zx-submodule generated by v_h, acted on through theta images.
class SubalgebraView {
  public:
    SubalgebraView(const VermaModule& M, const GroupElement& x);

    const GroupElement& scale() const { return x_; }
    const HighestWeight& transported() const { return transported_; }
    /// Action of the theta image of an integer-indexed generator.
    ModuleVector act_image(const Generator& g_int, const ModuleVector& v) const;
    /// True when every index of m lies in Zx.
    bool contains(const Monomial& m) const;

  private:
    GroupElement x_;
    VermaPtr ctx_;
    HighestWeight transported_;
};

} // namespace hvir

#endif
