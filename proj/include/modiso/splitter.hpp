#pragma once

#include <optional>

#include "modiso/homspace.hpp"
#include "modiso/nilpotent.hpp"

namespace modiso {

ModuleHom hom_pow(const ModuleHom& s, Coord e);
bool hom_is_nilpotent(const ModuleHom& s);

/// Smallest power of two >= length_bound(M)+1.
Coord fitting_exponent(const FiniteModule& m);

/// M = ker(s^d) ⊕ im(s^d), with s invertible on the image part.
struct FittingDecomposition {
    Coord exponent;
    Submodule kernel_part;
    Submodule image_part;
    ModuleHom onto_kernel;  // idempotent, image = kernel_part
    ModuleHom onto_image;
};

FittingDecomposition fitting(const ModuleHom& s, Coord d);

/// Decomposition M1 = N1 ⊕ K1, M2 = N2 ⊕ K2 with ker(f) <= K1 and
/// f carrying N1 isomorphically onto the summand N2.
struct FDecomposition {
    Submodule n1, k1, n2, k2;
    AbstractSubmodule n1_abs, k1_abs, n2_abs, k2_abs;
    ModuleHom iso;  // n1_abs.module -> n2_abs.module, bijective
    ModuleHom onto_n1, onto_k1;  // idempotent endos of M1
    ModuleHom onto_n2, onto_k2;
};

/// Shared per-pair state for repeated splitter tests.
struct SplitterContext {
    FiniteModule m1, m2;
    HomGroup back;       // Hom(M2, M1)
    EndRingView end1;    // End(M1)
    FiniteModule e_reg;  // regular module of End(M1)
};

SplitterContext make_splitter_context(const FiniteModule& m1, const FiniteModule& m2);

/// Returns g with g∘f non-nilpotent when f is a splitter, nullopt otherwise.
std::optional<ModuleHom> is_splitter(const SplitterContext& ctx, const ModuleHom& f);
std::optional<ModuleHom> is_splitter(const ModuleHom& f);

FDecomposition f_decomposition(const ModuleHom& f, const ModuleHom& g);

struct SummandPiece {
    FiniteModule n1, n2;  // abstract isomorphic pieces
    ModuleHom iso;        // n1 -> n2
    ModuleHom into_m1;    // n1 -> M1
    ModuleHom from_m1;    // M1 -> n1
    ModuleHom into_m2;
    ModuleHom from_m2;
};

struct CommonSummandResult {
    Submodule a;         // direct summand of M1
    Submodule b;         // direct summand of M2
    ModuleHom f_total;   // M1 -> M2, bijective from A onto B
    std::vector<SummandPiece> pieces;
    FiniteModule residual1, residual2;  // final non-matching remainders
    ModuleHom residual1_incl, residual2_incl;
    Submodule residual1_sub, residual2_sub;
};

/// Peels maximal isomorphic direct summands by repeated splitter detection.
CommonSummandResult common_summand(const FiniteModule& m1, const FiniteModule& m2);

/// Full isomorphism via common_summand; present iff the common summand is
/// everything on both sides.
std::optional<ModuleHom> iso_splitter(const FiniteModule& m1, const FiniteModule& m2);

}  // namespace modiso
