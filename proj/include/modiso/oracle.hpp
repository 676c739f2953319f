#pragma once

#include <cstdint>
#include <optional>

#include "modiso/homspace.hpp"
#include "modiso/structures.hpp"

namespace modiso {

/// Brute-force reference implementations, used in tests and certificate
/// audits. They share only element arithmetic with the solving path and
/// refuse over-budget inputs instead of running unboundedly.
struct OracleBudget {
    std::uint64_t max_module_order = 64;
    std::uint64_t max_hom_enum = 1u << 16;

    /// Reads MODISO_ORACLE_MAX_ORDER / MODISO_ORACLE_MAX_ENUM when set.
    static OracleBudget from_env();
};

/// All R-linear maps M -> N, by exhaustive assignment of generator images.
std::vector<ModuleHom> oracle_homs(const FiniteModule& m, const FiniteModule& n,
                                   const OracleBudget& budget = {});

/// True iff some enumerated hom is bijective; returns a witness if so.
std::optional<ModuleHom> oracle_iso(const FiniteModule& m, const FiniteModule& n,
                                    const OracleBudget& budget = {});

/// Minimum size of a generating subset, by exhaustive search in increasing k.
int oracle_mingen(const FiniteModule& m, const OracleBudget& budget = {});

/// One representative per isomorphism class of direct summands of M,
/// enumerated through idempotent endomorphisms.
struct OracleSummand {
    std::vector<Vec> elements;  // the summand, as a sorted element list
    BigInt order;
};
std::vector<OracleSummand> oracle_summand_classes(const FiniteModule& m,
                                                  const OracleBudget& budget = {});

/// Isomorphism test between element-set submodules U <= M and V <= N,
/// by exhaustive extension of generator assignments.
bool oracle_subiso(const FiniteModule& m, const std::vector<Vec>& u_elems,
                   const FiniteModule& n, const std::vector<Vec>& v_elems,
                   const OracleBudget& budget = {});

}  // namespace modiso
