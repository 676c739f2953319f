#include "modiso/nilpotent.hpp"

namespace modiso {

bool element_is_nilpotent(const FiniteRing& ring, const Vec& x) {
    if (ring.is_trivial()) return true;
    Coord l = length_bound(ring.order()) + 1;
    return ring.shape().is_zero(ring.pow(x, l));
}

bool ideal_is_nilpotent(const FiniteRing& ring, const LeftIdeal& ideal) {
    return ideal_stable_power(ring, ideal).stable.order() == 1;
}

NonNilpotentCertificate find_non_nilpotent(const FiniteRing& ring, const LeftIdeal& ideal) {
    auto sp = ideal_stable_power(ring, ideal);
    if (sp.stable.order() == 1)
        throw ValidationError("non-nilpotent", "the ideal is nilpotent");
    const std::vector<Vec>& basis = sp.stable.basis.rows;  // additive basis of I^n

    // b.a != 0 for some additive basis elements, since I^n = I^{2n} != 0
    Vec a;
    bool found = false;
    for (const Vec& bb : basis) {
        for (const Vec& aa : basis)
            if (!ring.shape().is_zero(ring.mul(bb, aa))) {
                a = aa;
                found = true;
                break;
            }
        if (found) break;
    }
    check_internal(found, "stable power squares to zero despite being stable");

    FiniteModule reg = regular_module(ring);
    BigInt prev_ra_order = ring.order() + 1;
    int guard = length_bound(ring.order()) + 2;
    for (int iter = 0; iter < guard; ++iter) {
        // I^n a as an additive span, and Ra
        std::vector<Vec> ina_gens;
        ina_gens.reserve(basis.size());
        for (const Vec& alpha : basis) ina_gens.push_back(ring.mul(alpha, a));
        auto ina = canonical_subgroup(ring.shape(), ina_gens);
        std::vector<Vec> a_only{a};
        auto ra = submodule_generated(reg, a_only);
        check_internal(ra.order() < prev_ra_order, "Ra did not strictly decrease");
        prev_ra_order = ra.order();

        if (ina == ra.basis) {
            // solve x.a = a with x = sum c_alpha alpha over I^n
            std::vector<Coord> coeff_orders;
            for (const Vec& alpha : basis)
                coeff_orders.push_back(ring.shape().element_order(alpha));
            GroupShape coeffs(coeff_orders);
            std::vector<Vec> matrix(ring.shape().rank(), Vec(coeffs.rank(), 0));
            for (std::size_t c = 0; c < coeffs.rank(); ++c)
                for (std::size_t j = 0; j < ring.shape().rank(); ++j)
                    matrix[j][c] = ina_gens[c][j];
            auto sol = solve(LinearSystem{ring.shape(), matrix, a, coeffs});
            check_internal(sol.has_value(), "a in I^n.a = Ra must be reachable");
            Vec x = ring.shape().zero();
            for (std::size_t c = 0; c < coeffs.rank(); ++c)
                x = ring.shape().add(x, ring.shape().scale(sol->particular[c], basis[c]));
            check_internal(ideal.basis.contains(x), "witness escaped the ideal");
            Coord l = length_bound(ring.order()) + 1;
            Vec power = ring.pow(x, l);
            check_internal(!ring.shape().is_zero(power), "witness power vanished");
            return NonNilpotentCertificate{std::move(x), l, std::move(power)};
        }

        // pick c in the additive basis of I^n a with I^n c != 0
        found = false;
        for (const Vec& c : ina.rows) {
            for (const Vec& alpha : basis)
                if (!ring.shape().is_zero(ring.mul(alpha, c))) {
                    a = c;
                    found = true;
                    break;
                }
            if (found) break;
        }
        check_internal(found, "no refinement element exists in I^n.a");
    }
    throw InternalError("find_non_nilpotent failed to terminate");
}

}  // namespace modiso
