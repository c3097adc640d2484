#ifndef HVIR_GROUP_HPP
#define HVIR_GROUP_HPP

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "hvir/scalar.hpp"

namespace hvir {

enum class OrderKind {
    RealEmbedding,   // compare a+b√d as real numbers
    Lexicographic,   // compare integer coordinates, last generator major
};

enum class Ordering { Less, Equal, Greater };

class OrderedGroup;
using GroupPtr = std::shared_ptr<const OrderedGroup>;

/// An element of a totally ordered additive subgroup, validated at
/// construction to lie in the group's generator lattice.
class GroupElement {
  public:
    GroupElement(FieldScalar value, GroupPtr group);

    const FieldScalar& value() const { return value_; }
    const GroupPtr& group() const { return group_; }
    const std::vector<mpz_class>& coords() const { return coords_; }

    Ordering compare(const GroupElement& o) const;
    bool is_zero() const { return value_.is_zero(); }
    bool is_positive() const;
    bool is_negative() const;

    GroupElement operator+(const GroupElement& o) const;
    GroupElement operator-(const GroupElement& o) const;
    GroupElement operator-() const;
    GroupElement operator*(const mpz_class& n) const;

    bool operator==(const GroupElement& o) const;
    bool operator!=(const GroupElement& o) const { return !(*this == o); }
    /// Strict order for use as a container key; agrees with the group order.
    bool operator<(const GroupElement& o) const { return compare(o) == Ordering::Less; }

    std::string str() const { return value_.str(); }

  private:
    FieldScalar value_;
    GroupPtr group_;
    std::vector<mpz_class> coords_;
};

/// A totally ordered additive subgroup of Q(√d) of rank 1 or 2, given by a
/// generator lattice and one of two effective order kinds.
class OrderedGroup : public std::enable_shared_from_this<OrderedGroup> {
  public:
    static GroupPtr integers();
    /// Z + Z√d with generators {1, √d}.
    static GroupPtr quadratic(long d, OrderKind kind);
    static GroupPtr make(long d, std::vector<FieldScalar> generators, OrderKind kind,
                         int height_cap = 1000);

    long radicand() const { return d_; }
    const std::vector<FieldScalar>& generators() const { return gens_; }
    std::size_t rank() const { return gens_.size(); }
    OrderKind order_kind() const { return kind_; }
    int height_cap() const { return height_cap_; }

    /// Integer coordinates of v in the generator lattice, if any.
    std::optional<std::vector<mpz_class>> coordinates(const FieldScalar& v) const;

    GroupElement element(const FieldScalar& v) const;
    GroupElement element_from_coords(const std::vector<mpz_class>& coords) const;
    GroupElement zero() const;

    bool same_as(const OrderedGroup& o) const;

  private:
    OrderedGroup(long d, std::vector<FieldScalar> gens, OrderKind kind, int cap);

    long d_;
    std::vector<FieldScalar> gens_;
    OrderKind kind_;
    int height_cap_;
};

void require_same_context(const GroupElement& x, const GroupElement& y);

struct OrderClass {
    bool dense;
    std::optional<GroupElement> min_positive;  // set iff discrete
};

OrderClass classify_order(const GroupPtr& g);

/// First lattice point x with 0 ≺ x ≺ bound, x ∉ forbidden and, for every
/// offset c, c - x ∉ forbidden, enumerating by height then lexicographically.
GroupElement find_positive_below(const GroupPtr& g, const GroupElement& bound,
                                 const std::vector<GroupElement>& forbidden,
                                 const std::vector<GroupElement>& offsets = {},
                                 std::optional<int> height_cap = std::nullopt);

enum class Region { ZPart, HPlus, HMinus };

struct Decomposition {
    Region region;
    mpz_class n;  // meaningful only for ZPart: x = n*a
};

/// Position of x in G = Za ∪ H+ ∪ H-, for a the minimal positive element.
Decomposition decompose(const GroupElement& x, const GroupElement& a);

} // namespace hvir

#endif
