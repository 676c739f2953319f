#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "modiso/homspace.hpp"
#include "modiso/oracle.hpp"
#include "support.hpp"

using namespace modiso;
using namespace modiso::testing;

TEST_CASE("hom_group: examples") {
    auto z4 = ring_zn(4);
    auto h = hom_group(regular_module(z4), zn_module(z4, 2));
    CHECK(h.order == 2);
    REQUIRE(h.gens.size() == 1);
    CHECK(h.shape.orders() == std::vector<Coord>{2});

    auto z6 = ring_zn(6);
    auto h0 = hom_group(zn_module(z6, 2), zn_module(z6, 3));
    CHECK(h0.order == 1);
    CHECK(h0.gens.empty());

    auto m2 = ring_matrix(2, 2);
    auto s = column_module(m2, 2, 2);
    auto hs = hom_group(s, s);
    CHECK(hs.order == 2);  // scalars F2
}

TEST_CASE("hom_group completeness against the oracle") {
    for (const auto& sr : suite_rings()) {
        auto pool = module_pool(sr.ring, 16, 5, 23);
        for (std::size_t a = 0; a < pool.size(); ++a)
            for (std::size_t b = 0; b < pool.size(); ++b) {
                auto h = hom_group(pool[a], pool[b]);
                auto all = oracle_homs(pool[a], pool[b]);
                CHECK(h.order == (BigInt)all.size());
                // every oracle hom encodes and decodes back to itself
                for (std::size_t i = 0; i < all.size(); i += 3) {
                    auto y = h.encode(all[i]);
                    CHECK(h.decode(y).images == all[i].images);
                }
            }
    }
}

TEST_CASE("compose, add, scale, identity") {
    auto z4 = ring_zn(4);
    auto reg = regular_module(z4);
    auto z2 = zn_module(z4, 2);
    ModuleHom reduction = validate_hom(reg, z2, {{1}});
    ModuleHom inclusion = validate_hom(z2, reg, {{2}});
    // inclusion after reduction is multiplication by 2 on Z/4
    CHECK(compose(inclusion, reduction).images == std::vector<Vec>{{2}});
    CHECK(compose(reduction, identity_hom(reg)) == reduction);
    CHECK(add(reduction, scale(-1, reduction)).is_zero());
}

TEST_CASE("kernel and image") {
    auto z4 = ring_zn(4);
    auto reg = regular_module(z4);
    ModuleHom mult2 = validate_hom(reg, reg, {{2}});
    CHECK(kernel(mult2).order() == 2);
    CHECK(image(mult2).order() == 2);
    CHECK(image(mult2).basis.contains({2}));

    CHECK(kernel(identity_hom(reg)).is_zero());
    CHECK(image(identity_hom(reg)).is_whole());

    auto zh = zero_hom(reg, reg);
    CHECK(kernel(zh).is_whole());
    CHECK(image(zh).is_zero());

    for (const auto& sr : suite_rings()) {
        auto pool = module_pool(sr.ring, 16, 4, 31);
        for (const auto& m : pool)
            for (const auto& n : pool)
                for (const auto& f : hom_group(m, n).gens)
                    CHECK(kernel(f).order() * image(f).order() == m.order());
    }
}

TEST_CASE("end_ring: examples") {
    auto z4 = ring_zn(4);
    auto e1 = end_ring(regular_module(z4));
    CHECK(e1.ring.order() == 4);
    CHECK(e1.ring.characteristic() == 4);

    auto e2 = end_ring(zn_module(z4, 2));
    CHECK(e2.ring.order() == 2);

    auto m2 = ring_matrix(2, 2);
    std::vector<FiniteModule> ss{column_module(m2, 2, 2), column_module(m2, 2, 2)};
    auto s2 = direct_sum(m2, ss);
    auto e3 = end_ring(s2.module);
    CHECK(e3.ring.order() == (BigInt)oracle_homs(s2.module, s2.module).size());
    CHECK(e3.ring.order() == 16);

    // encode/decode intertwine composition with ring multiplication
    for (std::size_t i = 0; i < e3.homs.gens.size(); ++i)
        for (std::size_t j = 0; j < e3.homs.gens.size(); ++j) {
            Vec lhs = e3.ring.mul(e3.encode(e3.homs.gens[i]), e3.encode(e3.homs.gens[j]));
            Vec rhs = e3.encode(compose(e3.homs.gens[i], e3.homs.gens[j]));
            CHECK(lhs == rhs);
        }
    CHECK(e3.decode(e3.ring.one()) == identity_hom(s2.module));
}

TEST_CASE("hom_as_end_module: examples") {
    auto z4 = ring_zn(4);
    auto reg = regular_module(z4);
    auto k1 = hom_as_end_module(reg, reg);
    CHECK(k1.module.order() == 4);  // regular module of End = Z/4

    auto k2 = hom_as_end_module(zn_module(z4, 2), reg);
    CHECK(k2.module.order() == 2);
    // E-action intertwines: encode(e ° k) = e . encode(k)
    for (const auto& e : k2.end.homs.gens)
        for (const auto& k : k2.homs.gens)
            CHECK(k2.encode(compose(e, k)) ==
                  k2.module.act(k2.end.encode(e), k2.encode(k)));

    auto z6 = ring_zn(6);
    auto kz = hom_as_end_module(zn_module(z6, 2), zn_module(z6, 3));
    CHECK(kz.module.order() == 1);
}

TEST_CASE("divide_right: examples") {
    auto z4 = ring_zn(4);
    auto reg = regular_module(z4);
    auto z2 = zn_module(z4, 2);

    // f = identity: g = x
    ModuleHom mult2 = validate_hom(reg, reg, {{2}});
    auto g0 = divide_right(identity_hom(reg), mult2);
    REQUIRE(g0.has_value());
    CHECK(g0->images == mult2.images);

    // f = reduction, x = mult-by-2: g = (1 -> 2)
    ModuleHom reduction = validate_hom(reg, z2, {{1}});
    auto g1 = divide_right(reduction, mult2);
    REQUIRE(g1.has_value());
    CHECK(compose(*g1, reduction).images == mult2.images);

    // f = 0, x != 0: no solution
    CHECK_FALSE(divide_right(zero_hom(reg, z2), mult2).has_value());
}

TEST_CASE("internal_projections") {
    auto z4 = ring_zn(4);
    std::vector<FiniteModule> parts{regular_module(z4), zn_module(z4, 2)};
    auto ds = direct_sum(z4, parts);
    const auto& m = ds.module;
    auto u = submodule_generated(m, std::vector<Vec>{{1, 0}});
    auto v = submodule_generated(m, std::vector<Vec>{{0, 1}});
    auto pp = internal_projections(m, u, v);
    CHECK(compose(pp.onto_u, pp.onto_u) == pp.onto_u);
    CHECK(compose(pp.onto_v, pp.onto_v) == pp.onto_v);
    CHECK(add(pp.onto_u, pp.onto_v) == identity_hom(m));
    CHECK(compose(pp.onto_u, pp.onto_v).is_zero());
    CHECK(image(pp.onto_u).basis == u.basis);
    CHECK(kernel(pp.onto_u).basis == v.basis);

    auto pf = internal_projections(m, full_submodule(m), zero_submodule(m));
    CHECK(pf.onto_u == identity_hom(m));
    CHECK(pf.onto_v.is_zero());

    // non-complementary pair rejected: U = <(2,0)>, V = <(1,1)>
    auto u2 = submodule_generated(m, std::vector<Vec>{{2, 0}});
    auto v2 = submodule_generated(m, std::vector<Vec>{{1, 1}});
    CHECK_THROWS_AS(internal_projections(m, u2, v2), ValidationError);
}

TEST_CASE("restrict and corestrict") {
    auto z4 = ring_zn(4);
    auto reg = regular_module(z4);
    auto u = submodule_as_module(submodule_generated(reg, std::vector<Vec>{{2}}));

    CHECK(restrict(identity_hom(reg), u) == inclusion_hom(u));

    ModuleHom mult2 = validate_hom(reg, reg, {{2}});
    CHECK(restrict(mult2, u).is_zero());

    auto co = corestrict(mult2, u);
    CHECK(image(co).is_whole());
    CHECK(compose(inclusion_hom(u), co).images == mult2.images);

    // corestrict to a submodule not containing the image is rejected
    CHECK_THROWS_AS(corestrict(identity_hom(reg), u), ValidationError);
}
