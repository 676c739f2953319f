#include "modiso/structures.hpp"

#include <algorithm>
#include <string>

#include "modiso/homspace.hpp"

namespace modiso {

namespace {

std::string triple(std::size_t i, std::size_t j, std::size_t k) {
    return "(" + std::to_string(i) + "," + std::to_string(j) + "," + std::to_string(k) + ")";
}

// z_k = sum_{i,j} x_i y_j t[i*n+j][k], reduced in `out_shape`
Vec bilinear(const GroupShape& out_shape, const std::vector<Vec>& tensor, std::size_t ncols,
             const Vec& x, const Vec& y) {
    std::vector<__int128> acc(out_shape.rank(), 0);
    Coord lim = out_shape.exponent();
    for (std::size_t i = 0; i < x.size(); ++i) {
        if (x[i] == 0) continue;
        for (std::size_t j = 0; j < y.size(); ++j) {
            if (y[j] == 0) continue;
            Coord c = (Coord)((__int128)x[i] * y[j] % lim);
            const Vec& t = tensor[i * ncols + j];
            for (std::size_t k = 0; k < t.size(); ++k)
                if (t[k] != 0) acc[k] += (__int128)c * t[k];
        }
    }
    Vec out(out_shape.rank());
    for (std::size_t k = 0; k < out.size(); ++k) {
        Coord m = out_shape.order_at(k);
        Coord r = (Coord)(acc[k] % m);
        out[k] = r < 0 ? r + m : r;
    }
    return out;
}

Vec unit_vec(const GroupShape& shape, std::size_t i) {
    Vec v = shape.zero();
    v[i] = 1 % shape.order_at(i);
    return v;
}

}  // namespace

Vec FiniteRing::mul(const Vec& x, const Vec& y) const {
    return bilinear(shape(), p_->mul, rank(), x, y);
}

Vec FiniteRing::pow(const Vec& x, Coord e) const {
    check_internal(e >= 1, "ring pow: exponent must be positive");
    Vec base = shape().reduce(x);
    Vec acc;
    bool have = false;
    while (e > 0) {
        if (e & 1) {
            acc = have ? mul(acc, base) : base;
            have = true;
        }
        e >>= 1;
        if (e) base = mul(base, base);
    }
    return acc;
}

FiniteRing validate_ring(const GroupShape& shape, const std::vector<Vec>& mul, const Vec& one) {
    std::size_t t = shape.rank();
    if (mul.size() != t * t) throw InputError("multiplication tensor has wrong size");
    for (const Vec& v : mul)
        if (v.size() != t) throw InputError("multiplication tensor entry has wrong rank");
    if (one.size() != t) throw InputError("unit element has wrong rank");
    for (std::size_t i = 0; i < t; ++i)
        for (std::size_t j = 0; j < t; ++j) {
            const Vec& v = mul[i * t + j];
            for (std::size_t k = 0; k < t; ++k)
                if (v[k] < 0 || v[k] >= shape.order_at(k))
                    throw InputError("tensor coordinate out of range at " + triple(i, j, k));
        }
    for (std::size_t k = 0; k < t; ++k)
        if (one[k] < 0 || one[k] >= shape.order_at(k))
            throw InputError("unit coordinate out of range");

    // well-definedness of the bilinear extension
    for (std::size_t i = 0; i < t; ++i)
        for (std::size_t j = 0; j < t; ++j) {
            const Vec& v = mul[i * t + j];
            if (!shape.is_zero(shape.scale(shape.order_at(i), v)) ||
                !shape.is_zero(shape.scale(shape.order_at(j), v)))
                throw ValidationError("well-defined",
                                      "generator orders do not annihilate e_" +
                                          std::to_string(i) + "*e_" + std::to_string(j));
        }

    auto impl = std::make_shared<FiniteRing::Impl>();
    impl->shape = shape;
    impl->mul = mul;
    impl->one = one;
    FiniteRing r;
    r.p_ = impl;

    for (std::size_t i = 0; i < t; ++i) {
        Vec ei = unit_vec(shape, i);
        for (std::size_t j = 0; j < t; ++j) {
            Vec ej = unit_vec(shape, j);
            for (std::size_t k = 0; k < t; ++k) {
                Vec ek = unit_vec(shape, k);
                if (r.mul(r.mul(ei, ej), ek) != r.mul(ei, r.mul(ej, ek)))
                    throw ValidationError("associativity",
                                          "associativity fails at generators " + triple(i, j, k));
            }
        }
    }
    for (std::size_t i = 0; i < t; ++i) {
        Vec ei = unit_vec(shape, i);
        if (r.mul(one, ei) != ei || r.mul(ei, one) != ei)
            throw ValidationError("unit", "unit law fails at generator " + std::to_string(i));
    }
    impl->chr = shape.element_order(one);
    return r;
}

Vec FiniteModule::act(const Vec& r, const Vec& x) const {
    return bilinear(shape(), p_->action, rank(), r, x);
}

FiniteModule validate_module(const FiniteRing& ring, const GroupShape& shape,
                             const std::vector<Vec>& action) {
    std::size_t t = ring.rank(), u = shape.rank();
    if (action.size() != t * u) throw InputError("action tensor has wrong size");
    for (const Vec& v : action)
        if (v.size() != u) throw InputError("action tensor entry has wrong rank");
    for (std::size_t i = 0; i < t; ++i)
        for (std::size_t j = 0; j < u; ++j) {
            const Vec& v = action[i * u + j];
            for (std::size_t k = 0; k < u; ++k)
                if (v[k] < 0 || v[k] >= shape.order_at(k))
                    throw InputError("action coordinate out of range at " + triple(i, j, k));
            if (!shape.is_zero(shape.scale(ring.shape().order_at(i), v)) ||
                !shape.is_zero(shape.scale(shape.order_at(j), v)))
                throw ValidationError("well-defined",
                                      "generator orders do not annihilate e_" +
                                          std::to_string(i) + "*f_" + std::to_string(j));
        }

    auto impl = std::make_shared<FiniteModule::Impl>();
    impl->ring = ring;
    impl->shape = shape;
    impl->action = action;
    FiniteModule m;
    m.p_ = impl;

    for (std::size_t i = 0; i < t; ++i) {
        Vec ei = unit_vec(ring.shape(), i);
        for (std::size_t j = 0; j < t; ++j) {
            Vec ej = unit_vec(ring.shape(), j);
            for (std::size_t k = 0; k < u; ++k) {
                Vec fk = unit_vec(shape, k);
                if (m.act(ring.mul(ei, ej), fk) != m.act(ei, m.act(ej, fk)))
                    throw ValidationError(
                        "associativity", "module associativity fails at " + triple(i, j, k));
            }
        }
    }
    for (std::size_t k = 0; k < u; ++k) {
        Vec fk = unit_vec(shape, k);
        if (m.act(ring.one(), fk) != fk)
            throw ValidationError("unit",
                                  "1 does not fix module generator " + std::to_string(k));
    }
    return m;
}

FiniteModule regular_module(const FiniteRing& ring) {
    std::vector<Vec> action;
    action.reserve(ring.rank() * ring.rank());
    for (std::size_t i = 0; i < ring.rank(); ++i)
        for (std::size_t j = 0; j < ring.rank(); ++j) action.push_back(ring.mul_gens(i, j));
    return validate_module(ring, ring.shape(), action);
}

DirectSum::~DirectSum() = default;
DirectSum::DirectSum() = default;
DirectSum::DirectSum(DirectSum&&) noexcept = default;
DirectSum& DirectSum::operator=(DirectSum&&) noexcept = default;
DirectSum::DirectSum(const DirectSum&) = default;
DirectSum& DirectSum::operator=(const DirectSum&) = default;

DirectSum direct_sum(const FiniteRing& ring, std::span<const FiniteModule> parts) {
    std::vector<Coord> orders;
    std::vector<std::size_t> offsets;
    for (const FiniteModule& p : parts) {
        check_internal(p.ring() == ring, "direct_sum: mixed rings");
        offsets.push_back(orders.size());
        orders.insert(orders.end(), p.shape().orders().begin(), p.shape().orders().end());
    }
    GroupShape shape(orders);
    std::size_t u = shape.rank(), t = ring.rank();
    std::vector<Vec> action(t * u, Vec());
    for (std::size_t pi = 0; pi < parts.size(); ++pi) {
        const FiniteModule& p = parts[pi];
        for (std::size_t i = 0; i < t; ++i)
            for (std::size_t j = 0; j < p.rank(); ++j) {
                Vec v(u, 0);
                const Vec& src = p.act_gens(i, j);
                std::copy(src.begin(), src.end(), v.begin() + (std::ptrdiff_t)offsets[pi]);
                action[i * u + offsets[pi] + j] = std::move(v);
            }
    }
    DirectSum out;
    out.module = validate_module(ring, shape, action);
    out.offsets = offsets;
    for (std::size_t pi = 0; pi < parts.size(); ++pi) {
        const FiniteModule& p = parts[pi];
        std::vector<Vec> inj, proj;
        for (std::size_t j = 0; j < p.rank(); ++j) {
            Vec v(u, 0);
            v[offsets[pi] + j] = 1 % shape.order_at(offsets[pi] + j);
            inj.push_back(std::move(v));
        }
        for (std::size_t k = 0; k < u; ++k) {
            Vec v(p.rank(), 0);
            if (k >= offsets[pi] && k < offsets[pi] + p.rank())
                v[k - offsets[pi]] = 1 % p.shape().order_at(k - offsets[pi]);
            proj.push_back(std::move(v));
        }
        out.injections.push_back(ModuleHom{p, out.module, std::move(inj)});
        out.projections.push_back(ModuleHom{out.module, p, std::move(proj)});
    }
    return out;
}

Submodule submodule_from_subgroup(const FiniteModule& m, SubgroupBasis basis) {
    check_internal(basis.shape == m.shape(), "submodule: ambient mismatch");
    for (std::size_t i = 0; i < m.ring().rank(); ++i) {
        Vec ei = unit_vec(m.ring().shape(), i);
        for (const Vec& b : basis.rows)
            if (!basis.contains(m.act(ei, b)))
                throw ValidationError("action-closed",
                                      "subgroup is not closed under the ring action");
    }
    return Submodule{m, std::move(basis)};
}

Submodule submodule_generated(const FiniteModule& m, std::span<const Vec> elems) {
    std::vector<Vec> gens;
    for (const Vec& e : elems) gens.push_back(m.shape().reduce(e));
    auto basis = canonical_subgroup(m.shape(), gens);
    const FiniteRing& ring = m.ring();
    for (;;) {
        std::vector<Vec> fresh;
        for (std::size_t i = 0; i < ring.rank(); ++i) {
            Vec ei = unit_vec(ring.shape(), i);
            for (const Vec& b : basis.rows) {
                Vec img = m.act(ei, b);
                if (!basis.contains(img)) fresh.push_back(std::move(img));
            }
        }
        if (fresh.empty()) break;
        fresh.insert(fresh.end(), basis.rows.begin(), basis.rows.end());
        basis = canonical_subgroup(m.shape(), fresh);
    }
    return Submodule{m, std::move(basis)};
}

Submodule zero_submodule(const FiniteModule& m) {
    return Submodule{m, zero_subgroup(m.shape())};
}

Submodule full_submodule(const FiniteModule& m) {
    return Submodule{m, full_subgroup(m.shape())};
}

AbstractSubmodule submodule_as_module(const Submodule& u) {
    auto dec = decompose(u.basis);
    const FiniteModule& amb = u.ambient;
    std::size_t t = amb.ring().rank();
    std::vector<Vec> action(t * dec.shape.rank());
    for (std::size_t i = 0; i < t; ++i) {
        Vec ei = unit_vec(amb.ring().shape(), i);
        for (std::size_t j = 0; j < dec.shape.rank(); ++j) {
            auto coords = dec.to_coords(amb.act(ei, dec.gens[j]));
            check_internal(coords.has_value(), "submodule_as_module: action escapes");
            action[i * dec.shape.rank() + j] = std::move(*coords);
        }
    }
    AbstractSubmodule out;
    out.ambient = amb;
    out.module = validate_module(amb.ring(), dec.shape, action);
    out.coords = std::move(dec);
    return out;
}

QuotientModule quotient_module(const FiniteModule& m, const Submodule& u) {
    check_internal(u.ambient == m, "quotient_module: ambient mismatch");
    auto pres = quotient(m.shape(), u.basis);
    std::size_t t = m.ring().rank(), q = pres.qshape.rank();
    std::vector<Vec> action(t * q);
    for (std::size_t i = 0; i < t; ++i) {
        Vec ei = unit_vec(m.ring().shape(), i);
        for (std::size_t j = 0; j < q; ++j) {
            Vec y = pres.qshape.zero();
            y[j] = 1;
            action[i * q + j] = pres.project(m.act(ei, pres.lift(y)));
        }
    }
    QuotientModule out;
    out.module = validate_module(m.ring(), pres.qshape, action);
    out.pres = std::move(pres);
    return out;
}

LeftIdeal annihilator(const FiniteModule& m) {
    std::vector<FiniteModule> one{m};
    return annihilator_intersection(m.ring(), one);
}

LeftIdeal annihilator_intersection(const FiniteRing& ring,
                                   std::span<const FiniteModule> mods) {
    // kernel of r -> (r.f_j) over all module generators; codomain is one
    // copy of M per generator of M
    std::vector<Coord> cod_orders;
    for (const FiniteModule& m : mods) {
        check_internal(m.ring() == ring, "annihilator: mixed rings");
        const auto& o = m.shape().orders();
        for (std::size_t j = 0; j < m.rank(); ++j)
            cod_orders.insert(cod_orders.end(), o.begin(), o.end());
    }
    GroupShape cod(cod_orders);
    std::vector<Vec> rows(ring.rank());
    for (std::size_t i = 0; i < ring.rank(); ++i) {
        Vec row;
        row.reserve(cod.rank());
        for (const FiniteModule& m : mods)
            for (std::size_t j = 0; j < m.rank(); ++j) {
                const Vec& v = m.act_gens(i, j);
                row.insert(row.end(), v.begin(), v.end());
            }
        rows[i] = std::move(row);
    }
    auto ik = image_and_kernel(rows, ring.shape(), cod);
    return submodule_from_subgroup(regular_module(ring), std::move(ik.kernel));
}

LeftIdeal ideal_product(const FiniteRing& ring, const LeftIdeal& a, const LeftIdeal& b) {
    std::vector<Vec> gens;
    gens.reserve(a.basis.rows.size() * b.basis.rows.size());
    for (const Vec& x : a.basis.rows)
        for (const Vec& y : b.basis.rows) gens.push_back(ring.mul(x, y));
    return Submodule{a.ambient, canonical_subgroup(ring.shape(), gens)};
}

IdealPowerChain ideal_power_chain(const FiniteRing& ring, const LeftIdeal& ideal) {
    LeftIdeal cur = ideal;
    int n = 1;
    for (;;) {
        LeftIdeal next = ideal_product(ring, cur, ideal);
        if (next.basis == cur.basis) return IdealPowerChain{n, std::move(cur)};
        cur = std::move(next);
        ++n;
        check_internal(n <= length_bound(ring.order()) + 2, "ideal power chain too long");
    }
}

StabilizedPower ideal_stable_power(const FiniteRing& ring, const LeftIdeal& ideal) {
    Coord target = length_bound(ring.order()) + 1;
    Coord e = 1;
    LeftIdeal cur = ideal;
    while (e < target) {
        LeftIdeal next = ideal_product(ring, cur, cur);
        e *= 2;
        if (next.basis == cur.basis) break;  // stabilized early
        cur = std::move(next);
    }
    return StabilizedPower{e, std::move(cur)};
}

int length_bound(const BigInt& order) {
    check_internal(order >= 1, "length_bound: nonpositive order");
    return (int)boost::multiprecision::msb(order);
}

}  // namespace modiso
