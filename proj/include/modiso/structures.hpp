#pragma once

#include <memory>
#include <span>
#include <vector>

#include "modiso/abelian.hpp"

namespace modiso {

/// A finite ring presented by additive generator orders and a multiplication
/// tensor; mul_gens(i,j) holds the coordinates of e_i * e_j. Instances are
/// immutable shared handles, cheap to copy. Construct via validate_ring.
class FiniteRing {
public:
    FiniteRing() = default;

    const GroupShape& shape() const { return p_->shape; }
    std::size_t rank() const { return p_->shape.rank(); }
    const BigInt& order() const { return p_->shape.order(); }
    const Vec& one() const { return p_->one; }
    /// additive order of 1 (the order of the prime subring)
    Coord characteristic() const { return p_->chr; }
    bool is_trivial() const { return p_->shape.is_trivial(); }

    const Vec& mul_gens(std::size_t i, std::size_t j) const {
        return p_->mul[i * rank() + j];
    }
    Vec mul(const Vec& x, const Vec& y) const;
    Vec pow(const Vec& x, Coord e) const;

    friend bool operator==(const FiniteRing& a, const FiniteRing& b) {
        return a.p_ == b.p_ || (a.p_ && b.p_ && a.p_->shape == b.p_->shape &&
                                a.p_->mul == b.p_->mul && a.p_->one == b.p_->one);
    }

private:
    struct Impl {
        GroupShape shape;
        std::vector<Vec> mul;  // rank*rank entries, row-major
        Vec one;
        Coord chr = 1;
    };
    std::shared_ptr<const Impl> p_;
    friend FiniteRing validate_ring(const GroupShape&, const std::vector<Vec>&, const Vec&);
};

/// Checks well-definedness, associativity on generator triples and the unit
/// laws; throws ValidationError naming the failing axiom.
FiniteRing validate_ring(const GroupShape& shape, const std::vector<Vec>& mul, const Vec& one);

class FiniteModule {
public:
    FiniteModule() = default;

    const FiniteRing& ring() const { return p_->ring; }
    const GroupShape& shape() const { return p_->shape; }
    std::size_t rank() const { return p_->shape.rank(); }
    const BigInt& order() const { return p_->shape.order(); }
    bool is_zero_module() const { return p_->shape.is_trivial(); }

    /// coordinates of e_i acting on module generator j
    const Vec& act_gens(std::size_t i, std::size_t j) const {
        return p_->action[i * rank() + j];
    }
    /// r.x for a ring element r and a module element x
    Vec act(const Vec& r, const Vec& x) const;

    friend bool operator==(const FiniteModule& a, const FiniteModule& b) {
        return a.p_ == b.p_ || (a.p_ && b.p_ && a.p_->ring == b.p_->ring &&
                                a.p_->shape == b.p_->shape && a.p_->action == b.p_->action);
    }

private:
    struct Impl {
        FiniteRing ring;
        GroupShape shape;
        std::vector<Vec> action;  // rank(ring) * rank(module) entries
    };
    std::shared_ptr<const Impl> p_;
    friend FiniteModule validate_module(const FiniteRing&, const GroupShape&,
                                        const std::vector<Vec>&);
};

FiniteModule validate_module(const FiniteRing& ring, const GroupShape& shape,
                             const std::vector<Vec>& action);

/// The ring acting on itself by left multiplication.
FiniteModule regular_module(const FiniteRing& ring);

struct ModuleHom;  // homspace.hpp

struct DirectSum {
    FiniteModule module;
    std::vector<std::size_t> offsets;  // generator offset per component
    std::vector<ModuleHom> injections;
    std::vector<ModuleHom> projections;
    ~DirectSum();
    DirectSum();
    DirectSum(DirectSum&&) noexcept;
    DirectSum& operator=(DirectSum&&) noexcept;
    DirectSum(const DirectSum&);
    DirectSum& operator=(const DirectSum&);
};

DirectSum direct_sum(const FiniteRing& ring, std::span<const FiniteModule> parts);

/// An R-stable subgroup of a module, held as a canonical subgroup basis.
struct Submodule {
    FiniteModule ambient;
    SubgroupBasis basis;

    const BigInt& order() const { return basis.order; }
    bool is_zero() const { return basis.order == 1; }
    bool is_whole() const { return basis.order == ambient.order(); }

    friend bool operator==(const Submodule& a, const Submodule& b) {
        return a.ambient == b.ambient && a.basis == b.basis;
    }
};

/// Smallest R-stable subgroup containing elems.
Submodule submodule_generated(const FiniteModule& m, std::span<const Vec> elems);
Submodule zero_submodule(const FiniteModule& m);
Submodule full_submodule(const FiniteModule& m);
/// Wraps an action-closed subgroup; throws ValidationError if not closed.
Submodule submodule_from_subgroup(const FiniteModule& m, SubgroupBasis basis);

struct AbstractSubmodule {
    FiniteModule ambient;
    FiniteModule module;           // standalone presentation of the submodule
    SubgroupDecomposition coords;  // ambient <-> abstract conversion
};

AbstractSubmodule submodule_as_module(const Submodule& u);

struct QuotientModule {
    FiniteModule module;
    QuotientPresentation pres;  // of the underlying groups
};

QuotientModule quotient_module(const FiniteModule& m, const Submodule& u);

/// A left ideal: submodule of the regular module.
using LeftIdeal = Submodule;

/// {r in R : r.M = 0} as a left ideal (two-sided by construction).
LeftIdeal annihilator(const FiniteModule& m);
/// Intersection of the annihilators of several modules over one ring.
LeftIdeal annihilator_intersection(const FiniteRing& ring, std::span<const FiniteModule> mods);

LeftIdeal ideal_product(const FiniteRing& ring, const LeftIdeal& a, const LeftIdeal& b);

struct IdealPowerChain {
    int exponent;      // first n with I^n = I^{n+1}
    LeftIdeal stable;  // basis of I^n (= I^{2n})
};

IdealPowerChain ideal_power_chain(const FiniteRing& ring, const LeftIdeal& ideal);

/// Stabilized power I^d for d a power of two >= length_bound(R)+1; the same
/// subgroup as ideal_power_chain().stable, via repeated squaring.
struct StabilizedPower {
    Coord exponent;  // the power of two used
    LeftIdeal stable;
};
StabilizedPower ideal_stable_power(const FiniteRing& ring, const LeftIdeal& ideal);

/// floor(log2(order)), an upper bound on composition length; 0 for order 1.
int length_bound(const BigInt& order);

}  // namespace modiso
