#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "modiso/oracle.hpp"
#include "modiso/splitter.hpp"
#include "support.hpp"

using namespace modiso;
using namespace modiso::testing;

namespace {

FiniteModule z4_plus_z2() {
    auto z4 = ring_zn(4);
    std::vector<FiniteModule> parts{regular_module(z4), zn_module(z4, 2)};
    return direct_sum(z4, parts).module;
}

}  // namespace

TEST_CASE("is_splitter: examples") {
    auto z4 = ring_zn(4);
    auto reg = regular_module(z4);
    auto z2 = zn_module(z4, 2);

    CHECK_FALSE(is_splitter(zero_hom(reg, z2)).has_value());

    // reduction Z/4 -> Z/2: every g lands in <2>, so every g∘f is nilpotent
    ModuleHom reduction = validate_hom(reg, z2, {{1}});
    CHECK_FALSE(is_splitter(reduction).has_value());

    // second-coordinate projection Z/4⊕Z/2 -> Z/2 is a splitter
    auto m = z4_plus_z2();
    ModuleHom proj2 = validate_hom(m, z2, {{0}, {1}});
    auto g = is_splitter(proj2);
    REQUIRE(g.has_value());
    CHECK_FALSE(hom_is_nilpotent(compose(*g, proj2)));
}

TEST_CASE("is_splitter agrees with oracle exhaustion") {
    for (const auto& sr : suite_rings()) {
        auto pool = module_pool(sr.ring, 16, 4, 77);
        for (const auto& m1 : pool)
            for (const auto& m2 : pool) {
                auto ctx = make_splitter_context(m1, m2);
                auto back = oracle_homs(m2, m1);
                for (const auto& f : hom_group(m1, m2).gens) {
                    bool oracle_split = false;
                    for (const auto& g : back)
                        if (!hom_is_nilpotent(compose(g, f))) {
                            oracle_split = true;
                            break;
                        }
                    CHECK(is_splitter(ctx, f).has_value() == oracle_split);
                }
            }
    }
}

TEST_CASE("fitting: examples") {
    auto m = z4_plus_z2();
    ModuleHom s = validate_hom(m, m, {{2, 0}, {0, 1}});  // (a,b) -> (2a, b)
    auto fit = fitting(s, 4);
    CHECK(fit.kernel_part.order() == 4);
    CHECK(fit.kernel_part.basis.contains({1, 0}));
    CHECK(fit.image_part.order() == 2);
    CHECK(fit.image_part.basis.contains({0, 1}));
    CHECK(add(fit.onto_kernel, fit.onto_image) == identity_hom(m));
    CHECK(compose(fit.onto_kernel, fit.onto_kernel) == fit.onto_kernel);

    auto fid = fitting(identity_hom(m), 4);
    CHECK(fid.kernel_part.is_zero());
    CHECK(fid.image_part.is_whole());

    ModuleHom nil = validate_hom(m, m, {{2, 0}, {0, 0}});
    CHECK(hom_is_nilpotent(nil));
    auto fn = fitting(nil, 4);
    CHECK(fn.kernel_part.is_whole());
    CHECK(fn.image_part.is_zero());
}

TEST_CASE("fitting invariants on random endomorphisms") {
    std::mt19937_64 rng(2024);
    for (const auto& sr : suite_rings()) {
        for (const auto& m : module_pool(sr.ring, 16, 4, 13)) {
            auto ends = hom_group(m, m);
            if (ends.gens.empty()) continue;
            for (int trial = 0; trial < 6; ++trial) {
                Vec y(ends.shape.rank());
                for (std::size_t i = 0; i < y.size(); ++i)
                    y[i] = (Coord)(rng() % (std::uint64_t)ends.shape.order_at(i));
                ModuleHom s = ends.decode(y);
                auto fit = fitting(s, fitting_exponent(m));
                CHECK(subgroup_intersect(fit.kernel_part.basis, fit.image_part.basis).order ==
                      1);
                CHECK(fit.kernel_part.order() * fit.image_part.order() == m.order());
                // s restricted to the image part is bijective
                auto n_abs = submodule_as_module(fit.image_part);
                auto s_on_n = corestrict(restrict(s, n_abs), n_abs);
                CHECK(is_bijective(s_on_n));
            }
        }
    }
}

TEST_CASE("f_decomposition: examples") {
    auto z4 = ring_zn(4);
    auto m = z4_plus_z2();
    auto z2 = zn_module(z4, 2);

    // f = identity
    auto fd = f_decomposition(identity_hom(m), identity_hom(m));
    CHECK(fd.n1.is_whole());
    CHECK(fd.k1.is_zero());
    CHECK(fd.n2.is_whole());
    CHECK(is_bijective(fd.iso));

    // f = second-coordinate projection, g = inclusion
    ModuleHom proj2 = validate_hom(m, z2, {{0}, {1}});
    ModuleHom inc2 = validate_hom(z2, m, {{0, 1}});
    auto fd2 = f_decomposition(proj2, inc2);
    CHECK(fd2.n1.order() == 2);
    CHECK(fd2.n1.basis.contains({0, 1}));
    CHECK(fd2.k1.order() == 4);
    CHECK(fd2.n2.is_whole());
    CHECK(fd2.k2.is_zero());

    // nilpotent g∘f rejected
    auto reg = regular_module(z4);
    ModuleHom reduction = validate_hom(reg, z2, {{1}});
    ModuleHom incl = validate_hom(z2, reg, {{2}});
    CHECK_THROWS_AS(f_decomposition(reduction, incl), ValidationError);
}

TEST_CASE("common_summand: examples") {
    auto z4 = ring_zn(4);
    auto m = z4_plus_z2();

    auto same = common_summand(m, m);
    CHECK(same.a.is_whole());
    CHECK(same.b.is_whole());
    CHECK(is_bijective(same.f_total));

    std::vector<FiniteModule> parts22{zn_module(z4, 2), zn_module(z4, 2)};
    auto m22 = direct_sum(z4, parts22).module;
    auto r = common_summand(m, m22);
    CHECK(r.a.order() == 2);
    CHECK(r.b.order() == 2);
    CHECK(r.residual1.order() == 4);
    CHECK(r.residual2.order() == 2);

    auto r2 = common_summand(regular_module(z4), m22);
    CHECK(r2.a.order() == 2);

    // f_total carries A bijectively onto B
    auto a_abs = submodule_as_module(r.a);
    auto b_abs = submodule_as_module(r.b);
    CHECK(is_bijective(corestrict(restrict(r.f_total, a_abs), b_abs)));
}

TEST_CASE("common_summand maximality against the oracle") {
    for (const auto& sr : suite_rings()) {
        auto pool = module_pool(sr.ring, 16, 4, 41);
        for (const auto& m1 : pool)
            for (const auto& m2 : pool) {
                auto r = common_summand(m1, m2);
                auto c1 = oracle_summand_classes(m1);
                auto c2 = oracle_summand_classes(m2);
                BigInt best = 1;
                for (const auto& s1 : c1)
                    for (const auto& s2 : c2)
                        if (s1.order > best &&
                            oracle_subiso(m1, s1.elements, m2, s2.elements))
                            best = s1.order;
                CHECK(r.a.order() == best);
            }
    }
}

TEST_CASE("iso_splitter: examples") {
    auto z4 = ring_zn(4);
    auto m = z4_plus_z2();
    auto same = iso_splitter(m, m);
    REQUIRE(same.has_value());
    CHECK(is_bijective(*same));

    auto m2 = ring_matrix(2, 2);
    std::vector<FiniteModule> ss{column_module(m2, 2, 2), column_module(m2, 2, 2)};
    auto s2 = direct_sum(m2, ss).module;
    auto iso = iso_splitter(regular_module(m2), s2);
    REQUIRE(iso.has_value());
    CHECK(is_bijective(*iso));
    CHECK(hom_axioms_hold(*iso));

    std::vector<FiniteModule> parts22{zn_module(z4, 2), zn_module(z4, 2)};
    auto m22 = direct_sum(z4, parts22).module;
    CHECK_FALSE(iso_splitter(regular_module(z4), m22).has_value());
}
