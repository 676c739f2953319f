#include "modiso/homspace.hpp"

#include <algorithm>

namespace modiso {

namespace {

Vec unit_vec(const GroupShape& shape, std::size_t i) {
    Vec v = shape.zero();
    v[i] = 1 % shape.order_at(i);
    return v;
}

std::vector<Vec> unflatten(const Vec& flat, std::size_t u, std::size_t v) {
    std::vector<Vec> images(u);
    for (std::size_t j = 0; j < u; ++j)
        images[j] = Vec(flat.begin() + (std::ptrdiff_t)(j * v),
                        flat.begin() + (std::ptrdiff_t)((j + 1) * v));
    return images;
}

Vec flatten(const std::vector<Vec>& images) {
    Vec flat;
    for (const Vec& r : images) flat.insert(flat.end(), r.begin(), r.end());
    return flat;
}

// coordinate space of image matrices dom -> cod
GroupShape flat_shape(const FiniteModule& dom, const FiniteModule& cod) {
    std::vector<Coord> orders;
    orders.reserve(dom.rank() * cod.rank());
    for (std::size_t j = 0; j < dom.rank(); ++j)
        orders.insert(orders.end(), cod.shape().orders().begin(), cod.shape().orders().end());
    return GroupShape(orders);
}

}  // namespace

Vec ModuleHom::apply(const Vec& x) const {
    return apply_rows(images, dom.shape().reduce(x), dom.shape(), cod.shape());
}

bool ModuleHom::is_zero() const {
    return std::all_of(images.begin(), images.end(),
                       [&](const Vec& v) { return cod.shape().is_zero(v); });
}

ModuleHom validate_hom(const FiniteModule& dom, const FiniteModule& cod,
                       std::vector<Vec> images) {
    ModuleHom f{dom, cod, std::move(images)};
    std::string why;
    if (!hom_axioms_hold(f, &why)) throw ValidationError("R-linear", why);
    return f;
}

bool hom_axioms_hold(const ModuleHom& f, std::string* why) {
    if (f.dom.ring() != f.cod.ring()) {
        if (why) *why = "domain and codomain over different rings";
        return false;
    }
    if (f.images.size() != f.dom.rank()) {
        if (why) *why = "one image per domain generator required";
        return false;
    }
    const GroupShape& cs = f.cod.shape();
    for (std::size_t j = 0; j < f.images.size(); ++j) {
        if (f.images[j].size() != cs.rank()) {
            if (why) *why = "image rank mismatch";
            return false;
        }
        if (!cs.is_zero(cs.scale(f.dom.shape().order_at(j), f.images[j]))) {
            if (why) *why = "not well defined at generator " + std::to_string(j);
            return false;
        }
    }
    const FiniteRing& ring = f.dom.ring();
    for (std::size_t i = 0; i < ring.rank(); ++i) {
        Vec ei = unit_vec(ring.shape(), i);
        for (std::size_t j = 0; j < f.dom.rank(); ++j) {
            Vec lhs = f.cod.act(ei, f.images[j]);
            Vec rhs = f.apply(f.dom.act_gens(i, j));
            if (lhs != rhs) {
                if (why)
                    *why = "not R-linear at ring generator " + std::to_string(i) +
                           ", module generator " + std::to_string(j);
                return false;
            }
        }
    }
    return true;
}

ModuleHom identity_hom(const FiniteModule& m) {
    std::vector<Vec> images;
    for (std::size_t j = 0; j < m.rank(); ++j) images.push_back(unit_vec(m.shape(), j));
    return ModuleHom{m, m, std::move(images)};
}

ModuleHom zero_hom(const FiniteModule& dom, const FiniteModule& cod) {
    return ModuleHom{dom, cod, std::vector<Vec>(dom.rank(), cod.shape().zero())};
}

ModuleHom compose(const ModuleHom& f, const ModuleHom& g) {
    check_internal(g.cod == f.dom, "compose: middle module mismatch");
    std::vector<Vec> images(g.images.size());
    for (std::size_t j = 0; j < g.images.size(); ++j) images[j] = f.apply(g.images[j]);
    return ModuleHom{g.dom, f.cod, std::move(images)};
}

ModuleHom add(const ModuleHom& f, const ModuleHom& g) {
    check_internal(f.dom == g.dom && f.cod == g.cod, "add: shape mismatch");
    std::vector<Vec> images(f.images.size());
    for (std::size_t j = 0; j < images.size(); ++j)
        images[j] = f.cod.shape().add(f.images[j], g.images[j]);
    return ModuleHom{f.dom, f.cod, std::move(images)};
}

ModuleHom scale(Coord c, const ModuleHom& f) {
    std::vector<Vec> images(f.images.size());
    for (std::size_t j = 0; j < images.size(); ++j)
        images[j] = f.cod.shape().scale(c, f.images[j]);
    return ModuleHom{f.dom, f.cod, std::move(images)};
}

Submodule kernel(const ModuleHom& f) {
    auto ik = image_and_kernel(f.images, f.dom.shape(), f.cod.shape());
    return submodule_from_subgroup(f.dom, std::move(ik.kernel));
}

Submodule image(const ModuleHom& f) {
    auto ik = image_and_kernel(f.images, f.dom.shape(), f.cod.shape());
    return submodule_from_subgroup(f.cod, std::move(ik.image));
}

bool is_bijective(const ModuleHom& f) {
    if (f.dom.order() != f.cod.order()) return false;
    auto ik = image_and_kernel(f.images, f.dom.shape(), f.cod.shape());
    return ik.kernel.order == 1;
}

Vec HomGroup::encode(const ModuleHom& f) const {
    check_internal(f.dom == dom && f.cod == cod, "encode: wrong hom space");
    auto y = coords_.to_coords(flatten(f.images));
    check_internal(y.has_value(), "encode: map is not R-linear");
    return *y;
}

ModuleHom HomGroup::decode(const Vec& y) const {
    return ModuleHom{dom, cod, unflatten(coords_.from_coords(y), dom.rank(), cod.rank())};
}

HomGroup hom_group(const FiniteModule& m, const FiniteModule& n) {
    check_internal(m.ring() == n.ring(), "hom_group: mixed rings");
    const FiniteRing& ring = m.ring();
    std::size_t u = m.rank(), v = n.rank(), t = ring.rank();
    GroupShape flat = flat_shape(m, n);

    // congruences: well-definedness (one block per domain generator) and
    // R-linearity (one block per ring generator x domain generator)
    std::vector<Coord> cod_orders;
    cod_orders.reserve((u + t * u) * v);
    for (std::size_t j = 0; j < u; ++j)
        cod_orders.insert(cod_orders.end(), n.shape().orders().begin(),
                          n.shape().orders().end());
    for (std::size_t i = 0; i < t; ++i)
        for (std::size_t j = 0; j < u; ++j)
            cod_orders.insert(cod_orders.end(), n.shape().orders().begin(),
                              n.shape().orders().end());
    GroupShape cons(cod_orders);

    std::vector<Vec> matrix(cons.rank(), Vec(flat.rank(), 0));
    std::size_t row = 0;
    for (std::size_t j = 0; j < u; ++j) {
        Coord mj = m.shape().order_at(j);
        for (std::size_t k = 0; k < v; ++k)
            matrix[row + k][j * v + k] = mj % n.shape().order_at(k);
        row += v;
    }
    for (std::size_t i = 0; i < t; ++i)
        for (std::size_t j = 0; j < u; ++j) {
            // e_i . g_j  -  g(e_i . f_j) = 0
            for (std::size_t k = 0; k < v; ++k) {
                const Vec& av = n.act_gens(i, k);  // e_i . f^N_k
                for (std::size_t l = 0; l < v; ++l)
                    if (av[l] != 0) matrix[row + l][j * v + k] = av[l];
            }
            const Vec& c = m.act_gens(i, j);  // e_i . f^M_j over domain generators
            for (std::size_t l2 = 0; l2 < u; ++l2) {
                if (c[l2] == 0) continue;
                for (std::size_t k = 0; k < v; ++k) {
                    Coord& cell = matrix[row + k][l2 * v + k];
                    Coord o = n.shape().order_at(k);
                    cell = ((cell - c[l2]) % o + o) % o;
                }
            }
            row += v;
        }

    auto sol = solve(LinearSystem{cons, matrix, cons.zero(), flat});
    check_internal(sol.has_value(), "hom_group: homogeneous system must be solvable");

    HomGroup h;
    h.dom = m;
    h.cod = n;
    h.flat_ = flat;
    h.coords_ = decompose(sol->kernel);
    h.shape = h.coords_.shape;
    h.order = h.shape.order();
    for (std::size_t i = 0; i < h.coords_.gens.size(); ++i)
        h.gens.push_back(ModuleHom{m, n, unflatten(h.coords_.gens[i], u, v)});
    return h;
}

EndRingView end_ring(const FiniteModule& m) {
    EndRingView view;
    view.mod = m;
    view.homs = hom_group(m, m);
    std::size_t s = view.homs.gens.size();
    std::vector<Vec> mul(s * s);
    for (std::size_t i = 0; i < s; ++i)
        for (std::size_t j = 0; j < s; ++j)
            mul[i * s + j] = view.homs.encode(compose(view.homs.gens[i], view.homs.gens[j]));
    view.ring = validate_ring(view.homs.shape, mul, view.homs.encode(identity_hom(m)));
    return view;
}

HomAsEndModule hom_as_end_module(const FiniteModule& m2, const FiniteModule& m1) {
    HomAsEndModule out;
    out.end = end_ring(m1);
    out.homs = hom_group(m2, m1);
    std::size_t t = out.end.homs.gens.size(), u = out.homs.gens.size();
    std::vector<Vec> action(t * u);
    for (std::size_t i = 0; i < t; ++i)
        for (std::size_t j = 0; j < u; ++j)
            action[i * u + j] =
                out.homs.encode(compose(out.end.homs.gens[i], out.homs.gens[j]));
    out.module = validate_module(out.end.ring, out.homs.shape, action);
    return out;
}

std::optional<ModuleHom> divide_right(const ModuleHom& f, const ModuleHom& x) {
    const FiniteModule& m1 = f.dom;
    const FiniteModule& m2 = f.cod;
    check_internal(x.dom == m1 && x.cod == m1, "divide_right: x must be an endomorphism");
    const FiniteRing& ring = m1.ring();
    std::size_t u1 = m1.rank(), u2 = m2.rank(), t = ring.rank();
    GroupShape flat = flat_shape(m2, m1);

    std::vector<Coord> cod_orders;
    auto push_block = [&](std::size_t count) {
        for (std::size_t c = 0; c < count; ++c)
            cod_orders.insert(cod_orders.end(), m1.shape().orders().begin(),
                              m1.shape().orders().end());
    };
    push_block(u2);          // well-definedness of g
    push_block(t * u2);      // R-linearity of g
    push_block(u1);          // g(f(f_j)) = x(f_j)
    GroupShape cons(cod_orders);

    std::vector<Vec> matrix(cons.rank(), Vec(flat.rank(), 0));
    Vec rhs = cons.zero();
    std::size_t row = 0;
    std::size_t v = u1;  // codomain rank of g
    for (std::size_t j = 0; j < u2; ++j) {
        Coord mj = m2.shape().order_at(j);
        for (std::size_t k = 0; k < v; ++k)
            matrix[row + k][j * v + k] = mj % m1.shape().order_at(k);
        row += v;
    }
    for (std::size_t i = 0; i < t; ++i)
        for (std::size_t j = 0; j < u2; ++j) {
            for (std::size_t k = 0; k < v; ++k) {
                const Vec& av = m1.act_gens(i, k);
                for (std::size_t l = 0; l < v; ++l)
                    if (av[l] != 0) matrix[row + l][j * v + k] = av[l];
            }
            const Vec& c = m2.act_gens(i, j);
            for (std::size_t l2 = 0; l2 < u2; ++l2) {
                if (c[l2] == 0) continue;
                for (std::size_t k = 0; k < v; ++k) {
                    Coord& cell = matrix[row + k][l2 * v + k];
                    Coord o = m1.shape().order_at(k);
                    cell = ((cell - c[l2]) % o + o) % o;
                }
            }
            row += v;
        }
    for (std::size_t j = 0; j < u1; ++j) {
        const Vec& fj = f.images[j];  // f(f^{M1}_j) in M2 coordinates
        for (std::size_t l = 0; l < u2; ++l) {
            if (fj[l] == 0) continue;
            for (std::size_t k = 0; k < v; ++k) {
                Coord& cell = matrix[row + k][l * v + k];
                Coord o = m1.shape().order_at(k);
                cell = (Coord)(((__int128)cell + fj[l]) % o);
            }
        }
        for (std::size_t k = 0; k < v; ++k) rhs[row + k] = x.images[j][k];
        row += v;
    }

    auto sol = solve(LinearSystem{cons, matrix, rhs, flat});
    if (!sol) return std::nullopt;
    ModuleHom g{m2, m1, unflatten(sol->particular, u2, v)};
    check_internal(hom_axioms_hold(g), "divide_right: solution is not a hom");
    check_internal(compose(g, f) == validate_hom(x.dom, x.cod, x.images),
                   "divide_right: g∘f != x");
    return g;
}

ProjectionPair internal_projections(const FiniteModule& m, const Submodule& u,
                                    const Submodule& v) {
    check_internal(u.ambient == m && v.ambient == m, "internal_projections: ambient mismatch");
    if (subgroup_intersect(u.basis, v.basis).order != 1 ||
        u.basis.order * v.basis.order != m.order())
        throw ValidationError("complementary",
                              "the two submodules are not an internal direct sum");
    std::vector<Coord> dom_orders;
    for (const Vec& r : u.basis.rows) dom_orders.push_back(m.shape().element_order(r));
    std::size_t nu = u.basis.rows.size();
    for (const Vec& r : v.basis.rows) dom_orders.push_back(m.shape().element_order(r));
    GroupShape coeffs(dom_orders);

    std::vector<Vec> matrix(m.shape().rank(), Vec(coeffs.rank(), 0));
    for (std::size_t c = 0; c < coeffs.rank(); ++c) {
        const Vec& src = c < nu ? u.basis.rows[c] : v.basis.rows[c - nu];
        for (std::size_t j = 0; j < m.shape().rank(); ++j) matrix[j][c] = src[j];
    }
    std::vector<Vec> pu_images(m.rank());
    for (std::size_t j = 0; j < m.rank(); ++j) {
        Vec fj = unit_vec(m.shape(), j);
        auto sol = solve(LinearSystem{m.shape(), matrix, fj, coeffs});
        check_internal(sol.has_value(), "internal_projections: decomposition must exist");
        Vec upart = m.shape().zero();
        for (std::size_t c = 0; c < nu; ++c)
            upart = m.shape().add(upart, m.shape().scale(sol->particular[c], u.basis.rows[c]));
        pu_images[j] = std::move(upart);
    }
    ModuleHom pu = validate_hom(m, m, pu_images);
    ModuleHom pv = add(identity_hom(m), scale(-1, pu));
    return ProjectionPair{std::move(pu), std::move(pv)};
}

ModuleHom inclusion_hom(const AbstractSubmodule& u) {
    return validate_hom(u.module, u.ambient, u.coords.gens);
}

ModuleHom restrict(const ModuleHom& f, const AbstractSubmodule& u) {
    check_internal(u.ambient == f.dom, "restrict: submodule of a different module");
    std::vector<Vec> images(u.coords.gens.size());
    for (std::size_t j = 0; j < images.size(); ++j) images[j] = f.apply(u.coords.gens[j]);
    return ModuleHom{u.module, f.cod, std::move(images)};
}

ModuleHom corestrict(const ModuleHom& f, const AbstractSubmodule& w) {
    check_internal(w.ambient == f.cod, "corestrict: submodule of a different module");
    std::vector<Vec> images(f.images.size());
    for (std::size_t j = 0; j < images.size(); ++j) {
        auto c = w.coords.to_coords(f.images[j]);
        if (!c)
            throw ValidationError("corestrict",
                                  "image is not contained in the target submodule");
        images[j] = std::move(*c);
    }
    return ModuleHom{f.dom, w.module, std::move(images)};
}

}  // namespace modiso
