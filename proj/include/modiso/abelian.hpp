#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "modiso/errors.hpp"

namespace modiso {

using Coord = long long;
using BigInt = boost::multiprecision::cpp_int;
using Vec = std::vector<Coord>;

// Per-factor orders are capped so that every product of two reduced
// coordinates fits in a machine word; cardinalities are exact BigInt.
inline constexpr Coord kMaxFactorOrder = (1LL << 31);

Coord gcd_ll(Coord a, Coord b);
Coord lcm_checked(Coord a, Coord b);

/// Presentation of a finite abelian group as ⊕ Z/orders[i].
/// Order-1 factors are allowed and denote trivial summands.
class GroupShape {
public:
    GroupShape() = default;
    explicit GroupShape(std::vector<Coord> orders);

    const std::vector<Coord>& orders() const { return orders_; }
    std::size_t rank() const { return orders_.size(); }
    Coord order_at(std::size_t i) const { return orders_[i]; }
    /// lcm of the factor orders (the group exponent divides this).
    Coord exponent() const { return lcm_; }
    const BigInt& order() const { return order_; }
    bool is_trivial() const { return order_ == 1; }

    Vec zero() const { return Vec(orders_.size(), 0); }
    Vec reduce(const Vec& coords) const;
    Vec add(const Vec& a, const Vec& b) const;
    Vec sub(const Vec& a, const Vec& b) const;
    Vec neg(const Vec& a) const;
    Vec scale(Coord c, const Vec& a) const;
    bool is_zero(const Vec& a) const;
    /// Additive order of an element.
    Coord element_order(const Vec& a) const;

    friend bool operator==(const GroupShape&, const GroupShape&) = default;

private:
    std::vector<Coord> orders_;
    Coord lcm_ = 1;
    BigInt order_ = 1;
};

GroupShape concat(const GroupShape& a, const GroupShape& b);

/// Canonical Howell-form basis of a subgroup. Two subgroups of the same
/// ambient shape are equal iff their SubgroupBasis compare equal.
struct SubgroupBasis {
    GroupShape shape;            // ambient
    std::vector<Vec> rows;       // nonzero, echelon, canonical
    std::vector<int> pivot_col;  // per row
    std::vector<Coord> pivot;    // embedded pivot value, divides exponent lcm
    BigInt order = 1;

    bool contains(const Vec& x) const;
    bool is_whole() const { return order == shape.order(); }

    friend bool operator==(const SubgroupBasis& a, const SubgroupBasis& b) {
        return a.shape == b.shape && a.rows == b.rows;
    }
};

SubgroupBasis canonical_subgroup(const GroupShape& shape, std::span<const Vec> gens);
SubgroupBasis zero_subgroup(const GroupShape& shape);
SubgroupBasis full_subgroup(const GroupShape& shape);

/// Integer coefficients over basis.rows re-evaluating to x, or nullopt.
std::optional<Vec> member(const SubgroupBasis& basis, const Vec& x);

SubgroupBasis subgroup_sum(const SubgroupBasis& a, const SubgroupBasis& b);
SubgroupBasis subgroup_intersect(const SubgroupBasis& a, const SubgroupBasis& b);

/// A system of linear congruences: one congruence per codomain factor,
///   sum_i matrix[j][i] * x_i  ≡  rhs[j]  (mod codomain.orders[j]),
/// with unknown i ranging over Z/domain.orders[i]. When `domain` is absent
/// every unknown ranges modulo the lcm of the codomain orders.
struct LinearSystem {
    GroupShape codomain;
    std::vector<Vec> matrix;  // codomain.rank() rows, one column per unknown
    Vec rhs;
    std::optional<GroupShape> domain;
};

struct SolveResult {
    Vec particular;        // in the domain shape
    SubgroupBasis kernel;  // of the homogeneous system, in the domain shape
};

std::optional<SolveResult> solve(const LinearSystem& sys);

/// Graph-based image/kernel of the homomorphism sending domain generator i
/// to rows[i]. Throws ValidationError if the map is not well defined.
struct ImageKernel {
    SubgroupBasis image;   // in codomain
    SubgroupBasis kernel;  // in domain
};

ImageKernel image_and_kernel(std::span<const Vec> rows, const GroupShape& domain,
                             const GroupShape& codomain);

/// Image of `x` under the generator-image matrix `rows`.
Vec apply_rows(std::span<const Vec> rows, const Vec& x, const GroupShape& domain,
               const GroupShape& codomain);

/// Presentation of shape/sub together with projection and a choice of lifts.
struct QuotientPresentation {
    GroupShape ambient;
    GroupShape qshape;           // trivial factors dropped
    std::vector<Vec> proj_rows;  // per ambient generator: image in qshape
    std::vector<Vec> lift_rows;  // per quotient generator: one preimage

    Vec project(const Vec& x) const;
    Vec lift(const Vec& y) const;
};

QuotientPresentation quotient(const GroupShape& shape, const SubgroupBasis& sub);

/// Independent-generator presentation of a subgroup: the subgroup is the
/// internal direct sum of the cyclic groups generated by `gens`, of the
/// stated orders. Bridges canonical bases and abstract shapes.
struct SubgroupDecomposition {
    SubgroupBasis basis;
    GroupShape shape;            // invariant-factor orders of the subgroup
    std::vector<Vec> gens;       // ambient elements, one per shape factor

    std::optional<Vec> to_coords(const Vec& x) const;  // nullopt if x outside
    Vec from_coords(const Vec& y) const;

private:
    friend SubgroupDecomposition decompose(const SubgroupBasis&);
    std::vector<Vec> vmat_;  // row-coefficient -> abstract coords, reduced
};

SubgroupDecomposition decompose(const SubgroupBasis& basis);

/// All elements of the group in lexicographic coordinate order. Guarded:
/// throws BudgetError when the order exceeds `max_count`.
std::vector<Vec> enumerate_elements(const GroupShape& shape, std::uint64_t max_count);

}  // namespace modiso
