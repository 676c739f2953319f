#pragma once

// Shared builders for the structures exercised across the test suites:
// small commutative rings, matrix rings over Z/n, and standard modules.

#include <map>
#include <random>
#include <string>
#include <vector>

#include "modiso/homspace.hpp"
#include "modiso/structures.hpp"

namespace modiso::testing {

inline FiniteRing ring_zn(Coord n) {
    GroupShape shape({n});
    std::vector<Vec> mul{{1 % n}};
    return validate_ring(shape, mul, {1 % n});
}

// F_2[x]/(x^2): generators 1, x
inline FiniteRing ring_f2x() {
    GroupShape shape({2, 2});
    std::vector<Vec> mul{{1, 0}, {0, 1}, {0, 1}, {0, 0}};
    return validate_ring(shape, mul, {1, 0});
}

// F_4 = F_2[w]/(w^2+w+1): generators 1, w
inline FiniteRing ring_f4() {
    GroupShape shape({2, 2});
    std::vector<Vec> mul{{1, 0}, {0, 1}, {0, 1}, {1, 1}};
    return validate_ring(shape, mul, {1, 0});
}

// n x n matrix ring over Z/q, generators E_{ab} in row-major order
inline FiniteRing ring_matrix(Coord q, int n) {
    std::size_t t = (std::size_t)(n * n);
    GroupShape shape(std::vector<Coord>(t, q));
    std::vector<Vec> mul(t * t, Vec(t, 0));
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b)
            for (int c = 0; c < n; ++c)
                for (int d = 0; d < n; ++d) {
                    std::size_t i = (std::size_t)(a * n + b), j = (std::size_t)(c * n + d);
                    if (b == c) mul[i * t + j][(std::size_t)(a * n + d)] = 1 % q;
                }
    Vec one(t, 0);
    for (int a = 0; a < n; ++a) one[(std::size_t)(a * n + a)] = 1 % q;
    return validate_ring(shape, mul, one);
}

// upper triangular 2x2 over F_2: generators E11, E12, E22
inline FiniteRing ring_ut2_f2() {
    GroupShape shape({2, 2, 2});
    std::vector<Vec> mul(9, Vec(3, 0));
    auto set = [&](int i, int j, int k) { mul[(std::size_t)(i * 3 + j)][(std::size_t)k] = 1; };
    set(0, 0, 0);  // E11 E11 = E11
    set(0, 1, 1);  // E11 E12 = E12
    set(1, 2, 1);  // E12 E22 = E12
    set(2, 2, 2);  // E22 E22 = E22
    return validate_ring(shape, mul, {1, 0, 1});
}

// the column module (Z/q)^n of the n x n matrix ring over Z/q
inline FiniteModule column_module(const FiniteRing& mat_ring, Coord q, int n) {
    GroupShape shape(std::vector<Coord>((std::size_t)n, q));
    std::size_t t = (std::size_t)(n * n), u = (std::size_t)n;
    std::vector<Vec> action(t * u, Vec(u, 0));
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b)
            for (int c = 0; c < n; ++c)
                if (b == c) action[(std::size_t)(a * n + b) * u + (std::size_t)c][(std::size_t)a] = 1 % q;
    return validate_module(mat_ring, shape, action);
}

// cyclic module Z/d over Z/n (d must divide n)
inline FiniteModule zn_module(const FiniteRing& zn, Coord d) {
    return validate_module(zn, GroupShape({d}), {{1 % d}});
}

// the suite used throughout the acceptance criteria
struct SuiteRing {
    std::string name;
    FiniteRing ring;
};

inline std::vector<SuiteRing> suite_rings() {
    std::vector<SuiteRing> out;
    for (Coord n = 2; n <= 9; ++n) out.push_back({"Z/" + std::to_string(n), ring_zn(n)});
    out.push_back({"F2[x]/(x^2)", ring_f2x()});
    out.push_back({"F4", ring_f4()});
    out.push_back({"UT2(F2)", ring_ut2_f2()});
    out.push_back({"M2(F2)", ring_matrix(2, 2)});
    return out;
}

// Deterministic pool of small valid modules over `ring`: standard pieces
// (regular module, quotients, column modules) plus rejection-sampled random
// action tensors, all of order <= max_order.
inline std::vector<FiniteModule> module_pool(const FiniteRing& ring, BigInt max_order,
                                             std::size_t want, std::uint64_t seed) {
    std::vector<FiniteModule> pool;
    auto push = [&](const FiniteModule& m) {
        if (m.order() > max_order) return;
        for (const auto& p : pool)
            if (p == m) return;
        pool.push_back(m);
    };
    FiniteModule reg = regular_module(ring);
    push(reg);
    // quotients of the regular module by principal left ideals
    std::mt19937_64 rng(seed);
    std::vector<Vec> elems = enumerate_elements(ring.shape(), 4096);
    for (const Vec& e : elems) {
        std::vector<Vec> one{e};
        auto sub = submodule_generated(reg, one);
        if (sub.is_zero()) continue;
        if (!sub.is_whole()) push(quotient_module(reg, sub).module);
        push(submodule_as_module(sub).module);
        if (pool.size() >= want) return pool;
    }
    // direct sums of pairs from the current pool
    std::size_t base = pool.size();
    for (std::size_t i = 0; i < base && pool.size() < want; ++i)
        for (std::size_t j = i; j < base && pool.size() < want; ++j) {
            std::vector<FiniteModule> parts{pool[i], pool[j]};
            auto ds = direct_sum(ring, parts);
            push(ds.module);
        }
    // random action tensors, rejection-sampled
    std::vector<Coord> orders_choices{2, 3, 4, 2, 2, 4};
    for (int tries = 0; tries < 4000 && pool.size() < want; ++tries) {
        std::size_t u = 1 + rng() % 2;
        std::vector<Coord> orders;
        for (std::size_t k = 0; k < u; ++k)
            orders.push_back(orders_choices[rng() % orders_choices.size()]);
        GroupShape shape(orders);
        if (shape.order() > max_order) continue;
        std::vector<Vec> action(ring.rank() * u, Vec(u, 0));
        for (auto& v : action)
            for (std::size_t k = 0; k < u; ++k) v[k] = (Coord)(rng() % (std::uint64_t)orders[k]);
        try {
            push(validate_module(ring, shape, action));
        } catch (const ValidationError&) {
        } catch (const InputError&) {
        }
    }
    return pool;
}

}  // namespace modiso::testing
