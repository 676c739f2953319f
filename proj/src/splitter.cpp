#include "modiso/splitter.hpp"

namespace modiso {

ModuleHom hom_pow(const ModuleHom& s, Coord e) {
    check_internal(s.dom == s.cod, "hom_pow: not an endomorphism");
    check_internal(e >= 1, "hom_pow: exponent must be positive");
    ModuleHom base = s;
    ModuleHom acc = identity_hom(s.dom);
    while (e > 0) {
        if (e & 1) acc = compose(acc, base);
        e >>= 1;
        if (e) base = compose(base, base);
    }
    return acc;
}

bool hom_is_nilpotent(const ModuleHom& s) {
    if (s.dom.is_zero_module()) return true;
    return hom_pow(s, length_bound(s.dom.order()) + 1).is_zero();
}

Coord fitting_exponent(const FiniteModule& m) {
    Coord want = length_bound(m.order()) + 1;
    Coord d = 1;
    while (d < want) d *= 2;
    return d;
}

FittingDecomposition fitting(const ModuleHom& s, Coord d) {
    check_internal(s.dom == s.cod, "fitting: not an endomorphism");
    if (d < length_bound(s.dom.order()))
        throw InputError("fitting: exponent below the length bound");
    ModuleHom sd = hom_pow(s, d);
    Submodule k = kernel(sd);
    Submodule n = image(sd);
    auto pp = internal_projections(s.dom, k, n);
    return FittingDecomposition{d, std::move(k), std::move(n), std::move(pp.onto_u),
                                std::move(pp.onto_v)};
}

SplitterContext make_splitter_context(const FiniteModule& m1, const FiniteModule& m2) {
    check_internal(m1.ring() == m2.ring(), "splitter: mixed rings");
    SplitterContext ctx;
    ctx.m1 = m1;
    ctx.m2 = m2;
    ctx.back = hom_group(m2, m1);
    ctx.end1 = end_ring(m1);
    ctx.e_reg = regular_module(ctx.end1.ring);
    return ctx;
}

std::optional<ModuleHom> is_splitter(const SplitterContext& ctx, const ModuleHom& f) {
    // left ideal of End(M1) generated by { c∘f : c generates Hom(M2,M1) };
    // it equals { g∘f : g in Hom(M2,M1) }, so f is a splitter iff the ideal
    // is not nilpotent
    std::vector<Vec> gens;
    gens.reserve(ctx.back.gens.size());
    for (const ModuleHom& c : ctx.back.gens)
        gens.push_back(ctx.end1.encode(compose(c, f)));
    LeftIdeal ideal = submodule_generated(ctx.e_reg, gens);
    if (ideal.is_zero()) return std::nullopt;
    if (ideal_is_nilpotent(ctx.end1.ring, ideal)) return std::nullopt;
    auto cert = find_non_nilpotent(ctx.end1.ring, ideal);
    ModuleHom x = ctx.end1.decode(cert.element);
    auto g = divide_right(f, x);
    check_internal(g.has_value(), "splitter witness must be recoverable");
    check_internal(!hom_is_nilpotent(compose(*g, f)), "g∘f must be non-nilpotent");
    return g;
}

std::optional<ModuleHom> is_splitter(const ModuleHom& f) {
    return is_splitter(make_splitter_context(f.dom, f.cod), f);
}

FDecomposition f_decomposition(const ModuleHom& f, const ModuleHom& g) {
    const FiniteModule& m1 = f.dom;
    const FiniteModule& m2 = f.cod;
    ModuleHom s = compose(g, f);
    ModuleHom t = compose(f, g);
    if (hom_is_nilpotent(s))
        throw ValidationError("non-nilpotent", "g∘f is nilpotent; no f-decomposition");
    Coord d = std::max(fitting_exponent(m1), fitting_exponent(m2));
    auto fit1 = fitting(s, d);
    auto fit2 = fitting(t, d);

    FDecomposition out;
    out.n1 = std::move(fit1.image_part);
    out.k1 = std::move(fit1.kernel_part);
    out.n2 = std::move(fit2.image_part);
    out.k2 = std::move(fit2.kernel_part);
    out.onto_n1 = std::move(fit1.onto_image);
    out.onto_k1 = std::move(fit1.onto_kernel);
    out.onto_n2 = std::move(fit2.onto_image);
    out.onto_k2 = std::move(fit2.onto_kernel);

    check_internal(!out.n1.is_zero(), "N1 must be nonzero for a splitter");
    // f carries N1 onto N2
    std::vector<Vec> fn1;
    for (const Vec& r : out.n1.basis.rows) fn1.push_back(f.apply(r));
    check_internal(canonical_subgroup(m2.shape(), fn1) == out.n2.basis,
                   "f(N1) != N2 in the Fitting decomposition");
    // ker(f) <= K1
    for (const Vec& r : kernel(f).basis.rows)
        check_internal(out.k1.basis.contains(r), "ker(f) escapes K1");

    out.n1_abs = submodule_as_module(out.n1);
    out.k1_abs = submodule_as_module(out.k1);
    out.n2_abs = submodule_as_module(out.n2);
    out.k2_abs = submodule_as_module(out.k2);
    out.iso = corestrict(restrict(f, out.n1_abs), out.n2_abs);
    check_internal(is_bijective(out.iso), "restricted f must be bijective");
    return out;
}

CommonSummandResult common_summand(const FiniteModule& m1, const FiniteModule& m2) {
    check_internal(m1.ring() == m2.ring(), "common_summand: mixed rings");
    CommonSummandResult out;
    FiniteModule cur1 = m1, cur2 = m2;
    ModuleHom incl1 = identity_hom(m1), proj1 = identity_hom(m1);
    ModuleHom incl2 = identity_hom(m2), proj2 = identity_hom(m2);

    int guard = length_bound(m1.order()) + 2;
    for (int round = 0; round < guard; ++round) {
        if (cur1.is_zero_module() || cur2.is_zero_module()) break;
        auto ctx = make_splitter_context(cur1, cur2);
        HomGroup forward = hom_group(cur1, cur2);
        std::optional<ModuleHom> g;
        const ModuleHom* b = nullptr;
        for (const ModuleHom& cand : forward.gens) {
            g = is_splitter(ctx, cand);
            if (g) {
                b = &cand;
                break;
            }
        }
        if (!g) break;  // no generator splits, hence no splitter exists

        auto fd = f_decomposition(*b, *g);
        SummandPiece piece;
        piece.n1 = fd.n1_abs.module;
        piece.n2 = fd.n2_abs.module;
        piece.iso = fd.iso;
        piece.into_m1 = compose(incl1, inclusion_hom(fd.n1_abs));
        piece.from_m1 = compose(corestrict(fd.onto_n1, fd.n1_abs), proj1);
        piece.into_m2 = compose(incl2, inclusion_hom(fd.n2_abs));
        piece.from_m2 = compose(corestrict(fd.onto_n2, fd.n2_abs), proj2);
        out.pieces.push_back(std::move(piece));

        incl1 = compose(incl1, inclusion_hom(fd.k1_abs));
        proj1 = compose(corestrict(fd.onto_k1, fd.k1_abs), proj1);
        incl2 = compose(incl2, inclusion_hom(fd.k2_abs));
        proj2 = compose(corestrict(fd.onto_k2, fd.k2_abs), proj2);
        cur1 = fd.k1_abs.module;
        cur2 = fd.k2_abs.module;
    }

    std::vector<Vec> a_rows, b_rows;
    ModuleHom f_total = zero_hom(m1, m2);
    BigInt piece_product = 1;
    for (const SummandPiece& p : out.pieces) {
        for (const Vec& g : p.into_m1.images) a_rows.push_back(g);
        for (const Vec& g : p.into_m2.images) b_rows.push_back(g);
        f_total = add(f_total, compose(p.into_m2, compose(p.iso, p.from_m1)));
        piece_product *= p.n1.order();
    }
    out.a = submodule_from_subgroup(m1, canonical_subgroup(m1.shape(), a_rows));
    out.b = submodule_from_subgroup(m2, canonical_subgroup(m2.shape(), b_rows));
    check_internal(out.a.order() == piece_product, "A is not the direct sum of the pieces");
    check_internal(out.b.order() == piece_product, "B is not the direct sum of the pieces");
    out.f_total = std::move(f_total);
    out.residual1 = cur1;
    out.residual2 = cur2;
    out.residual1_sub = submodule_from_subgroup(
        m1, canonical_subgroup(m1.shape(), incl1.images));
    out.residual2_sub = submodule_from_subgroup(
        m2, canonical_subgroup(m2.shape(), incl2.images));
    out.residual1_incl = std::move(incl1);
    out.residual2_incl = std::move(incl2);
    return out;
}

std::optional<ModuleHom> iso_splitter(const FiniteModule& m1, const FiniteModule& m2) {
    auto r = common_summand(m1, m2);
    if (r.a.order() != m1.order() || r.b.order() != m2.order()) return std::nullopt;
    check_internal(is_bijective(r.f_total), "total map must be bijective on full peel");
    return r.f_total;
}

}  // namespace modiso
