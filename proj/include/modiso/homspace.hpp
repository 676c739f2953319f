#pragma once

#include <functional>
#include <optional>

#include "modiso/structures.hpp"

namespace modiso {

/// An R-linear map given by the images of the domain generators.
struct ModuleHom {
    FiniteModule dom;
    FiniteModule cod;
    std::vector<Vec> images;  // one codomain element per domain generator

    Vec apply(const Vec& x) const;
    bool is_zero() const;

    friend bool operator==(const ModuleHom& a, const ModuleHom& b) {
        return a.dom == b.dom && a.cod == b.cod && a.images == b.images;
    }
};

/// Throws ValidationError unless images define a well-defined R-linear map.
ModuleHom validate_hom(const FiniteModule& dom, const FiniteModule& cod,
                       std::vector<Vec> images);

ModuleHom identity_hom(const FiniteModule& m);
ModuleHom zero_hom(const FiniteModule& dom, const FiniteModule& cod);
ModuleHom compose(const ModuleHom& f, const ModuleHom& g);  // f after g
ModuleHom add(const ModuleHom& f, const ModuleHom& g);
ModuleHom scale(Coord c, const ModuleHom& f);

Submodule kernel(const ModuleHom& f);
Submodule image(const ModuleHom& f);
bool is_bijective(const ModuleHom& f);

/// Additive presentation of Hom_R(M,N): independent generators and their
/// orders. encode/decode convert between homs and coordinate vectors over
/// the generators.
struct HomGroup {
    FiniteModule dom;
    FiniteModule cod;
    GroupShape shape;             // orders of the independent generators
    std::vector<ModuleHom> gens;
    BigInt order;

    Vec encode(const ModuleHom& f) const;
    ModuleHom decode(const Vec& coords) const;

private:
    friend HomGroup hom_group(const FiniteModule&, const FiniteModule&);
    GroupShape flat_;                 // coordinate space of image matrices
    SubgroupDecomposition coords_;
};

HomGroup hom_group(const FiniteModule& m, const FiniteModule& n);

/// End_R(M) as a validated FiniteRing; multiplication is composition.
struct EndRingView {
    FiniteModule mod;
    FiniteRing ring;
    HomGroup homs;

    Vec encode(const ModuleHom& f) const { return homs.encode(f); }
    ModuleHom decode(const Vec& x) const { return homs.decode(x); }
};

EndRingView end_ring(const FiniteModule& m);

/// Hom_R(M2,M1) as a left module over End_R(M1), acting by composition.
struct HomAsEndModule {
    EndRingView end;  // E = End(M1)
    HomGroup homs;    // K = Hom(M2, M1)
    FiniteModule module;

    Vec encode(const ModuleHom& f) const { return homs.encode(f); }
    ModuleHom decode(const Vec& x) const { return homs.decode(x); }
};

HomAsEndModule hom_as_end_module(const FiniteModule& m2, const FiniteModule& m1);

/// Solves g ∘ f = x for g: M2 -> M1, given f: M1 -> M2 and x: M1 -> M1.
std::optional<ModuleHom> divide_right(const ModuleHom& f, const ModuleHom& x);

/// Projections of M = U ⊕ V (internal); rejects non-complementary pairs.
struct ProjectionPair {
    ModuleHom onto_u;
    ModuleHom onto_v;
};
ProjectionPair internal_projections(const FiniteModule& m, const Submodule& u,
                                    const Submodule& v);

ModuleHom inclusion_hom(const AbstractSubmodule& u);
/// f restricted to U (as a map from the abstract presentation of U).
ModuleHom restrict(const ModuleHom& f, const AbstractSubmodule& u);
/// f with codomain cut down to W; requires image(f) ⊆ W.
ModuleHom corestrict(const ModuleHom& f, const AbstractSubmodule& w);

/// Well-definedness + R-linearity checked by direct element arithmetic;
/// used to audit emitted certificates.
bool hom_axioms_hold(const ModuleHom& f, std::string* why = nullptr);

}  // namespace modiso
