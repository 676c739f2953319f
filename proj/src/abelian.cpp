#include "modiso/abelian.hpp"

#include <algorithm>
#include <numeric>

namespace modiso {

Coord gcd_ll(Coord a, Coord b) {
    if (a < 0) a = -a;
    if (b < 0) b = -b;
    while (b) {
        Coord t = a % b;
        a = b;
        b = t;
    }
    return a;
}

Coord lcm_checked(Coord a, Coord b) {
    Coord g = gcd_ll(a, b);
    __int128 l = (__int128)(a / g) * b;
    if (l >= kMaxFactorOrder)
        throw InputError("group exponent exceeds the supported bound 2^31");
    return (Coord)l;
}

namespace {

Coord mod_pos(__int128 a, Coord m) {
    if (m == 1) return 0;
    Coord r = (Coord)(a % m);
    return r < 0 ? r + m : r;
}

// extended gcd: returns g, sets s,t with s*a + t*b = g, g >= 0
Coord xgcd(Coord a, Coord b, Coord& s, Coord& t) {
    Coord old_r = a, r = b;
    Coord old_s = 1, s1 = 0;
    Coord old_t = 0, t1 = 1;
    while (r != 0) {
        Coord q = old_r / r;
        Coord tmp = old_r - q * r;
        old_r = r;
        r = tmp;
        tmp = old_s - q * s1;
        old_s = s1;
        s1 = tmp;
        tmp = old_t - q * t1;
        old_t = t1;
        t1 = tmp;
    }
    if (old_r < 0) {
        old_r = -old_r;
        old_s = -old_s;
        old_t = -old_t;
    }
    s = old_s;
    t = old_t;
    return old_r;
}

Coord mod_inverse(Coord a, Coord m) {
    Coord s, t;
    Coord g = xgcd(a % m, m, s, t);
    check_internal(g == 1, "mod_inverse: not invertible");
    return mod_pos(s, m);
}

// unit w mod L with w*a ≡ gcd(a,L) (mod L); a in [1, L)
Coord stabilize_unit(Coord a, Coord L) {
    Coord g = gcd_ll(a, L);
    Coord m = L / g;
    if (m == 1) return 1;
    Coord w = mod_inverse((a / g) % m, m);
    if (w == 0) w = m;
    while (gcd_ll(w, L) != 1) w += m;
    return w;
}

struct HowellRow {
    Vec v;  // embedded coordinates mod L
    int pivot = -1;
    Coord pval = 0;
};

bool row_is_zero(const Vec& v) {
    return std::all_of(v.begin(), v.end(), [](Coord c) { return c == 0; });
}

// Canonical Howell form of the span of `rows` in (Z/L)^ncols.
std::vector<HowellRow> howell_form(std::vector<Vec> rows, Coord L, std::size_t ncols) {
    std::vector<HowellRow> placed;
    if (L == 1 || ncols == 0) return placed;
    std::vector<Vec> work;
    work.reserve(rows.size());
    for (auto& r : rows)
        if (!row_is_zero(r)) work.push_back(std::move(r));

    for (std::size_t c = 0; c < ncols; ++c) {
        // combine all worklist rows with nonzero entry at column c
        std::size_t pi = work.size();
        for (std::size_t i = 0; i < work.size(); ++i) {
            if (work[i][c] == 0) continue;
            if (pi == work.size()) {
                pi = i;
                continue;
            }
            Coord a = work[pi][c], b = work[i][c];
            Coord s, t;
            Coord g = xgcd(a, b, s, t);
            Coord u2 = b / g, v2 = a / g;
            Vec nr(ncols, 0), no(ncols, 0);
            for (std::size_t k = c; k < ncols; ++k) {
                __int128 x = work[pi][k], y = work[i][k];
                nr[k] = mod_pos((__int128)s * x + (__int128)t * y, L);
                no[k] = mod_pos((__int128)u2 * x - (__int128)v2 * y, L);
            }
            work[pi] = std::move(nr);
            work[i] = std::move(no);
        }
        if (pi == work.size()) continue;
        // normalize pivot to gcd(entry, L), via a unit multiplier
        Vec prow = std::move(work[pi]);
        work.erase(work.begin() + (std::ptrdiff_t)pi);
        Coord a = prow[c];
        Coord g = gcd_ll(a, L);
        Coord w = stabilize_unit(a, L);
        if (w != 1)
            for (std::size_t k = c; k < ncols; ++k) prow[k] = mod_pos((__int128)w * prow[k], L);
        check_internal(prow[c] == g, "howell: pivot normalization failed");
        // Howell closure: (L/g)*row has strictly more leading zeros
        if (g != 1) {
            Vec aug(ncols, 0);
            Coord f = L / g;
            bool nz = false;
            for (std::size_t k = c + 1; k < ncols; ++k) {
                aug[k] = mod_pos((__int128)f * prow[k], L);
                nz = nz || aug[k] != 0;
            }
            if (nz) work.push_back(std::move(aug));
        }
        HowellRow hr;
        hr.v = std::move(prow);
        hr.pivot = (int)c;
        hr.pval = g;
        placed.push_back(std::move(hr));
        // drop exhausted work rows
        std::erase_if(work, row_is_zero);
    }
    // reduce entries above each pivot into [0, pivot)
    for (std::size_t i = 0; i < placed.size(); ++i) {
        for (std::size_t j = i + 1; j < placed.size(); ++j) {
            int c = placed[j].pivot;
            Coord q = placed[i].v[(std::size_t)c] / placed[j].pval;
            if (q == 0) continue;
            for (std::size_t k = (std::size_t)c; k < ncols; ++k)
                placed[i].v[k] =
                    mod_pos((__int128)placed[i].v[k] - (__int128)q * placed[j].v[k], L);
        }
    }
    return placed;
}

Vec embed(const GroupShape& shape, const Vec& x) {
    Coord L = shape.exponent();
    Vec e(x.size());
    for (std::size_t c = 0; c < x.size(); ++c)
        e[c] = mod_pos((__int128)(L / shape.order_at(c)) * x[c], L);
    return e;
}

Vec unembed(const GroupShape& shape, const Vec& v) {
    Coord L = shape.exponent();
    Vec x(v.size());
    for (std::size_t c = 0; c < v.size(); ++c) {
        Coord s = L / shape.order_at(c);
        check_internal(v[c] % s == 0, "howell row escapes the embedded image");
        x[c] = v[c] / s;
    }
    return x;
}

}  // namespace

GroupShape::GroupShape(std::vector<Coord> orders) : orders_(std::move(orders)) {
    for (Coord n : orders_) {
        if (n < 1) throw InputError("group factor orders must be >= 1");
        if (n >= kMaxFactorOrder) throw InputError("group factor order exceeds 2^31");
        lcm_ = lcm_checked(lcm_, n);
        order_ *= n;
    }
}

Vec GroupShape::reduce(const Vec& coords) const {
    if (coords.size() != orders_.size()) throw InputError("coordinate rank mismatch");
    Vec r(coords.size());
    for (std::size_t i = 0; i < coords.size(); ++i) r[i] = mod_pos(coords[i], orders_[i]);
    return r;
}

Vec GroupShape::add(const Vec& a, const Vec& b) const {
    Vec r(orders_.size());
    for (std::size_t i = 0; i < r.size(); ++i) r[i] = mod_pos((__int128)a[i] + b[i], orders_[i]);
    return r;
}

Vec GroupShape::sub(const Vec& a, const Vec& b) const {
    Vec r(orders_.size());
    for (std::size_t i = 0; i < r.size(); ++i) r[i] = mod_pos((__int128)a[i] - b[i], orders_[i]);
    return r;
}

Vec GroupShape::neg(const Vec& a) const {
    Vec r(orders_.size());
    for (std::size_t i = 0; i < r.size(); ++i) r[i] = mod_pos(-(__int128)a[i], orders_[i]);
    return r;
}

Vec GroupShape::scale(Coord c, const Vec& a) const {
    Vec r(orders_.size());
    for (std::size_t i = 0; i < r.size(); ++i) r[i] = mod_pos((__int128)c * a[i], orders_[i]);
    return r;
}

bool GroupShape::is_zero(const Vec& a) const { return row_is_zero(a); }

Coord GroupShape::element_order(const Vec& a) const {
    Coord l = 1;
    for (std::size_t i = 0; i < a.size(); ++i)
        l = lcm_checked(l, orders_[i] / gcd_ll(orders_[i], a[i]));
    return l;
}

GroupShape concat(const GroupShape& a, const GroupShape& b) {
    std::vector<Coord> o = a.orders();
    o.insert(o.end(), b.orders().begin(), b.orders().end());
    return GroupShape(std::move(o));
}

bool SubgroupBasis::contains(const Vec& x) const { return member(*this, x).has_value(); }

SubgroupBasis canonical_subgroup(const GroupShape& shape, std::span<const Vec> gens) {
    std::vector<Vec> embedded;
    embedded.reserve(gens.size());
    for (const Vec& g : gens) embedded.push_back(embed(shape, shape.reduce(g)));
    auto placed = howell_form(std::move(embedded), shape.exponent(), shape.rank());
    SubgroupBasis b;
    b.shape = shape;
    for (auto& hr : placed) {
        b.rows.push_back(unembed(shape, hr.v));
        b.pivot_col.push_back(hr.pivot);
        b.pivot.push_back(hr.pval);
        b.order *= shape.exponent() / hr.pval;
    }
    return b;
}

SubgroupBasis zero_subgroup(const GroupShape& shape) {
    return canonical_subgroup(shape, std::span<const Vec>());
}

SubgroupBasis full_subgroup(const GroupShape& shape) {
    std::vector<Vec> gens;
    for (std::size_t i = 0; i < shape.rank(); ++i) {
        Vec e = shape.zero();
        e[i] = 1 % shape.order_at(i);
        gens.push_back(std::move(e));
    }
    return canonical_subgroup(shape, gens);
}

std::optional<Vec> member(const SubgroupBasis& basis, const Vec& x) {
    const GroupShape& shape = basis.shape;
    Vec cur = embed(shape, shape.reduce(x));
    Coord L = shape.exponent();
    Vec coeffs(basis.rows.size(), 0);
    for (std::size_t r = 0; r < basis.rows.size(); ++r) {
        std::size_t c = (std::size_t)basis.pivot_col[r];
        Coord e = cur[c];
        if (e == 0) continue;
        if (e % basis.pivot[r] != 0) return std::nullopt;
        Coord q = e / basis.pivot[r];
        coeffs[r] = q;
        Vec row = embed(shape, basis.rows[r]);
        for (std::size_t k = c; k < cur.size(); ++k)
            cur[k] = mod_pos((__int128)cur[k] - (__int128)q * row[k], L);
    }
    if (!row_is_zero(cur)) return std::nullopt;
    return coeffs;
}

SubgroupBasis subgroup_sum(const SubgroupBasis& a, const SubgroupBasis& b) {
    check_internal(a.shape == b.shape, "subgroup_sum: ambient mismatch");
    std::vector<Vec> gens = a.rows;
    gens.insert(gens.end(), b.rows.begin(), b.rows.end());
    return canonical_subgroup(a.shape, gens);
}

SubgroupBasis subgroup_intersect(const SubgroupBasis& a, const SubgroupBasis& b) {
    check_internal(a.shape == b.shape, "subgroup_intersect: ambient mismatch");
    // span{(x, x) : x in A} + span{(y, 0) : y in B} meets 0 ⊕ G exactly in A ∩ B
    const GroupShape& g = a.shape;
    GroupShape dbl = concat(g, g);
    std::vector<Vec> rows;
    for (const Vec& r : a.rows) {
        Vec v = r;
        v.insert(v.end(), r.begin(), r.end());
        rows.push_back(std::move(v));
    }
    for (const Vec& r : b.rows) {
        Vec v = r;
        v.insert(v.end(), g.rank(), 0);
        rows.push_back(std::move(v));
    }
    auto basis = canonical_subgroup(dbl, rows);
    std::vector<Vec> tail;
    for (std::size_t i = 0; i < basis.rows.size(); ++i)
        if (basis.pivot_col[i] >= (int)g.rank())
            tail.emplace_back(basis.rows[i].begin() + (std::ptrdiff_t)g.rank(),
                              basis.rows[i].end());
    return canonical_subgroup(g, tail);
}

Vec apply_rows(std::span<const Vec> rows, const Vec& x, const GroupShape& domain,
               const GroupShape& codomain) {
    check_internal(rows.size() == domain.rank() && x.size() == domain.rank(),
                   "apply_rows: rank mismatch");
    std::vector<__int128> acc(codomain.rank(), 0);
    for (std::size_t i = 0; i < rows.size(); ++i) {
        if (x[i] == 0) continue;
        for (std::size_t k = 0; k < codomain.rank(); ++k)
            acc[k] += (__int128)x[i] * rows[i][k];
    }
    Vec out(codomain.rank());
    for (std::size_t k = 0; k < codomain.rank(); ++k)
        out[k] = mod_pos(acc[k], codomain.order_at(k));
    return out;
}

namespace {

struct GraphBasis {
    GroupShape combined;
    SubgroupBasis basis;  // of span{(rows[i], e_i)} in codomain ⊕ domain
    std::size_t split;    // = codomain rank
};

GraphBasis graph_basis(std::span<const Vec> rows, const GroupShape& domain,
                       const GroupShape& codomain) {
    GraphBasis g;
    g.combined = concat(codomain, domain);
    g.split = codomain.rank();
    std::vector<Vec> gens;
    gens.reserve(rows.size());
    for (std::size_t i = 0; i < rows.size(); ++i) {
        Vec v = codomain.reduce(rows[i]);
        Vec tag(domain.rank(), 0);
        tag[i] = 1 % domain.order_at(i);
        v.insert(v.end(), tag.begin(), tag.end());
        gens.push_back(std::move(v));
    }
    g.basis = canonical_subgroup(g.combined, gens);
    return g;
}

SubgroupBasis kernel_from_graph(const GraphBasis& g, const GroupShape& domain) {
    std::vector<Vec> tail;
    for (std::size_t i = 0; i < g.basis.rows.size(); ++i)
        if (g.basis.pivot_col[i] >= (int)g.split)
            tail.emplace_back(g.basis.rows[i].begin() + (std::ptrdiff_t)g.split,
                              g.basis.rows[i].end());
    return canonical_subgroup(domain, tail);
}

// reduce (target, 0) over the graph rows; returns the accumulated domain part
std::optional<Vec> particular_from_graph(const GraphBasis& g, const GroupShape& domain,
                                         const GroupShape& codomain, const Vec& target) {
    Coord L = g.combined.exponent();
    Vec cur = embed(g.combined, [&] {
        Vec v = codomain.reduce(target);
        v.insert(v.end(), domain.rank(), 0);
        return v;
    }());
    Vec x(domain.rank(), 0);
    for (std::size_t r = 0; r < g.basis.rows.size(); ++r) {
        if (g.basis.pivot_col[r] >= (int)g.split) break;
        std::size_t c = (std::size_t)g.basis.pivot_col[r];
        Coord e = cur[c];
        if (e == 0) continue;
        if (e % g.basis.pivot[r] != 0) return std::nullopt;
        Coord q = e / g.basis.pivot[r];
        Vec row = embed(g.combined, g.basis.rows[r]);
        for (std::size_t k = c; k < cur.size(); ++k)
            cur[k] = mod_pos((__int128)cur[k] - (__int128)q * row[k], L);
        for (std::size_t k = 0; k < domain.rank(); ++k) {
            Coord t = g.basis.rows[r][g.split + k];
            x[k] = mod_pos((__int128)x[k] + (__int128)q * t, domain.order_at(k));
        }
    }
    for (std::size_t k = 0; k < g.split; ++k)
        if (cur[k] != 0) return std::nullopt;
    return x;
}

void check_well_defined(std::span<const Vec> rows, const GroupShape& domain,
                        const GroupShape& codomain) {
    if (rows.size() != domain.rank()) throw InputError("generator-image count mismatch");
    for (std::size_t i = 0; i < rows.size(); ++i) {
        if (rows[i].size() != codomain.rank()) throw InputError("image rank mismatch");
        if (!codomain.is_zero(codomain.scale(domain.order_at(i), rows[i])))
            throw ValidationError("well-defined",
                                  "generator " + std::to_string(i) +
                                      ": its order does not annihilate its image");
    }
}

}  // namespace

ImageKernel image_and_kernel(std::span<const Vec> rows, const GroupShape& domain,
                             const GroupShape& codomain) {
    check_well_defined(rows, domain, codomain);
    ImageKernel r;
    r.image = canonical_subgroup(codomain, rows);
    r.kernel = kernel_from_graph(graph_basis(rows, domain, codomain), domain);
    check_internal(r.image.order * r.kernel.order == domain.order(),
                   "image/kernel order law violated");
    return r;
}

std::optional<SolveResult> solve(const LinearSystem& sys) {
    const GroupShape& cod = sys.codomain;
    if (sys.matrix.size() != cod.rank()) throw InputError("solve: row count mismatch");
    std::size_t n = sys.domain ? sys.domain->rank()
                               : (sys.matrix.empty() ? 0 : sys.matrix[0].size());
    for (const Vec& row : sys.matrix)
        if (row.size() != n) throw InputError("solve: ragged matrix");
    GroupShape dom = sys.domain ? *sys.domain : GroupShape(Vec(n, cod.exponent()));
    // per-unknown image columns
    std::vector<Vec> cols(n, Vec(cod.rank(), 0));
    for (std::size_t j = 0; j < cod.rank(); ++j)
        for (std::size_t i = 0; i < n; ++i)
            cols[i][j] = mod_pos(sys.matrix[j][i], cod.order_at(j));
    check_well_defined(cols, dom, cod);
    auto g = graph_basis(cols, dom, cod);
    auto part = particular_from_graph(g, dom, cod, sys.rhs);
    if (!part) return std::nullopt;
    return SolveResult{*part, kernel_from_graph(g, dom)};
}

// ---------- quotients and decompositions (Smith normal form over BigInt) ----

namespace {

struct Snf {
    std::vector<BigInt> diag;             // ncols entries, positive
    std::vector<std::vector<BigInt>> v;   // ncols x ncols
    std::vector<std::vector<BigInt>> vinv;
};

Snf smith_diagonalize(std::vector<std::vector<BigInt>> a, std::size_t ncols) {
    std::size_t nrows = a.size();
    Snf out;
    out.v.assign(ncols, std::vector<BigInt>(ncols, 0));
    out.vinv.assign(ncols, std::vector<BigInt>(ncols, 0));
    for (std::size_t i = 0; i < ncols; ++i) out.v[i][i] = out.vinv[i][i] = 1;

    auto col_addmul = [&](std::size_t dst, std::size_t src, const BigInt& q) {
        // col_dst += q * col_src
        for (std::size_t i = 0; i < nrows; ++i) a[i][dst] += q * a[i][src];
        for (std::size_t i = 0; i < ncols; ++i) out.v[i][dst] += q * out.v[i][src];
        for (std::size_t j = 0; j < ncols; ++j) out.vinv[src][j] -= q * out.vinv[dst][j];
    };
    auto col_swap = [&](std::size_t x, std::size_t y) {
        for (std::size_t i = 0; i < nrows; ++i) std::swap(a[i][x], a[i][y]);
        for (std::size_t i = 0; i < ncols; ++i) std::swap(out.v[i][x], out.v[i][y]);
        std::swap(out.vinv[x], out.vinv[y]);
    };
    auto col_negate = [&](std::size_t x) {
        for (std::size_t i = 0; i < nrows; ++i) a[i][x] = -a[i][x];
        for (std::size_t i = 0; i < ncols; ++i) out.v[i][x] = -out.v[i][x];
        for (std::size_t j = 0; j < ncols; ++j) out.vinv[x][j] = -out.vinv[x][j];
    };

    for (std::size_t pos = 0; pos < ncols; ++pos) {
        for (;;) {
            // locate minimal nonzero |entry| in the remaining block
            std::size_t bi = nrows, bj = ncols;
            BigInt best = 0;
            for (std::size_t i = pos; i < nrows; ++i)
                for (std::size_t j = pos; j < ncols; ++j) {
                    if (a[i][j] == 0) continue;
                    BigInt m = abs(a[i][j]);
                    if (bi == nrows || m < best) {
                        best = m;
                        bi = i;
                        bj = j;
                    }
                }
            check_internal(bi != nrows, "smith: relation lattice not of full rank");
            if (bi != pos) std::swap(a[bi], a[pos]);
            if (bj != pos) col_swap(bj, pos);
            if (a[pos][pos] < 0) col_negate(pos);
            BigInt p = a[pos][pos];
            bool clean = true;
            for (std::size_t i = pos + 1; i < nrows; ++i) {
                if (a[i][pos] == 0) continue;
                BigInt q = a[i][pos] / p;
                if (q != 0)
                    for (std::size_t j = pos; j < ncols; ++j) a[i][j] -= q * a[pos][j];
                if (a[i][pos] != 0) clean = false;
            }
            for (std::size_t j = pos + 1; j < ncols; ++j) {
                if (a[pos][j] == 0) continue;
                BigInt q = a[pos][j] / p;
                if (q != 0) col_addmul(j, pos, -q);
                if (a[pos][j] != 0) clean = false;
            }
            if (!clean) continue;
            // enforce divisibility of the remaining block by the pivot
            bool fixed = false;
            for (std::size_t i = pos + 1; i < nrows && !fixed; ++i)
                for (std::size_t j = pos + 1; j < ncols && !fixed; ++j)
                    if (a[i][j] % p != 0) {
                        for (std::size_t k = pos; k < ncols; ++k) a[pos][k] += a[i][k];
                        fixed = true;
                    }
            if (!fixed) break;
        }
    }
    out.diag.resize(ncols);
    for (std::size_t i = 0; i < ncols; ++i) out.diag[i] = a[i][i];
    return out;
}

std::vector<std::vector<BigInt>> relation_matrix(const GroupShape& shape,
                                                 const SubgroupBasis& sub) {
    std::vector<std::vector<BigInt>> a;
    for (const Vec& r : sub.rows) {
        std::vector<BigInt> row(r.begin(), r.end());
        a.push_back(std::move(row));
    }
    for (std::size_t i = 0; i < shape.rank(); ++i) {
        std::vector<BigInt> row(shape.rank(), 0);
        row[i] = shape.order_at(i);
        a.push_back(std::move(row));
    }
    return a;
}

Coord big_to_coord_mod(const BigInt& x, Coord m) {
    if (m == 1) return 0;
    BigInt r = x % m;
    if (r < 0) r += m;
    return (Coord)r;
}

}  // namespace

Vec QuotientPresentation::project(const Vec& x) const {
    return apply_rows(proj_rows, ambient.reduce(x), ambient, qshape);
}

Vec QuotientPresentation::lift(const Vec& y) const {
    check_internal(y.size() == qshape.rank(), "quotient lift: rank mismatch");
    Vec out = ambient.zero();
    for (std::size_t j = 0; j < y.size(); ++j)
        out = ambient.add(out, ambient.scale(y[j], lift_rows[j]));
    return out;
}

QuotientPresentation quotient(const GroupShape& shape, const SubgroupBasis& sub) {
    check_internal(sub.shape == shape, "quotient: ambient mismatch");
    std::size_t u = shape.rank();
    auto snf = smith_diagonalize(relation_matrix(shape, sub), u);
    std::vector<std::size_t> kept;
    std::vector<Coord> qorders;
    for (std::size_t j = 0; j < u; ++j) {
        check_internal(snf.diag[j] > 0, "quotient: nonpositive invariant factor");
        if (snf.diag[j] != 1) {
            if (snf.diag[j] >= kMaxFactorOrder)
                throw InputError("quotient factor exceeds the supported bound");
            kept.push_back(j);
            qorders.push_back((Coord)snf.diag[j]);
        }
    }
    QuotientPresentation q;
    q.ambient = shape;
    q.qshape = GroupShape(qorders);
    q.proj_rows.assign(u, Vec(kept.size(), 0));
    for (std::size_t i = 0; i < u; ++i)
        for (std::size_t j = 0; j < kept.size(); ++j)
            q.proj_rows[i][j] = big_to_coord_mod(snf.v[i][kept[j]], qorders[j]);
    q.lift_rows.assign(kept.size(), Vec(u, 0));
    for (std::size_t j = 0; j < kept.size(); ++j)
        for (std::size_t i = 0; i < u; ++i)
            q.lift_rows[j][i] = big_to_coord_mod(snf.vinv[kept[j]][i], shape.order_at(i));
    check_internal(q.qshape.order() * sub.order == shape.order(),
                   "quotient: order law violated");
    return q;
}

std::optional<Vec> SubgroupDecomposition::to_coords(const Vec& x) const {
    auto c = member(basis, x);
    if (!c) return std::nullopt;
    std::vector<__int128> acc(shape.rank(), 0);
    for (std::size_t i = 0; i < c->size(); ++i)
        for (std::size_t j = 0; j < shape.rank(); ++j)
            acc[j] += (__int128)(*c)[i] * vmat_[i][j];
    Vec y(shape.rank());
    for (std::size_t j = 0; j < shape.rank(); ++j)
        y[j] = mod_pos(acc[j], shape.order_at(j));
    return y;
}

Vec SubgroupDecomposition::from_coords(const Vec& y) const {
    check_internal(y.size() == shape.rank(), "from_coords: rank mismatch");
    Vec x = basis.shape.zero();
    for (std::size_t j = 0; j < y.size(); ++j)
        x = basis.shape.add(x, basis.shape.scale(y[j], gens[j]));
    return x;
}

SubgroupDecomposition decompose(const SubgroupBasis& basis) {
    SubgroupDecomposition d;
    d.basis = basis;
    std::size_t k = basis.rows.size();
    if (k == 0) {
        d.shape = GroupShape();
        return d;
    }
    // relations among the basis rows: kernel of Z^k -> ambient
    std::vector<Coord> row_orders(k);
    for (std::size_t i = 0; i < k; ++i)
        row_orders[i] = basis.shape.element_order(basis.rows[i]);
    GroupShape coeff_shape{row_orders};
    auto g = graph_basis(basis.rows, coeff_shape, basis.shape);
    auto rel = kernel_from_graph(g, coeff_shape);
    std::vector<std::vector<BigInt>> a = relation_matrix(coeff_shape, rel);
    auto snf = smith_diagonalize(std::move(a), k);
    std::vector<std::size_t> kept;
    std::vector<Coord> qorders;
    for (std::size_t j = 0; j < k; ++j)
        if (snf.diag[j] != 1) {
            kept.push_back(j);
            qorders.push_back((Coord)snf.diag[j]);
        }
    d.shape = GroupShape(qorders);
    d.vmat_.assign(k, Vec(kept.size(), 0));
    for (std::size_t i = 0; i < k; ++i)
        for (std::size_t j = 0; j < kept.size(); ++j)
            d.vmat_[i][j] = big_to_coord_mod(snf.v[i][kept[j]], qorders[j]);
    for (std::size_t j = 0; j < kept.size(); ++j) {
        Vec gen = basis.shape.zero();
        for (std::size_t i = 0; i < k; ++i) {
            Coord c = big_to_coord_mod(snf.vinv[kept[j]][i], row_orders[i]);
            gen = basis.shape.add(gen, basis.shape.scale(c, basis.rows[i]));
        }
        d.gens.push_back(std::move(gen));
    }
    check_internal(d.shape.order() == basis.order, "decompose: order mismatch");
    return d;
}

std::vector<Vec> enumerate_elements(const GroupShape& shape, std::uint64_t max_count) {
    if (shape.order() > max_count)
        throw BudgetError("enumeration of " + shape.order().str() + " elements over budget");
    std::vector<Vec> out;
    out.reserve((std::size_t)shape.order());
    Vec cur = shape.zero();
    out.push_back(cur);
    for (;;) {
        std::size_t i = shape.rank();
        bool wrapped = true;
        while (i > 0) {
            --i;
            if (++cur[i] < shape.order_at(i)) {
                wrapped = false;
                break;
            }
            cur[i] = 0;
        }
        if (wrapped) return out;
        out.push_back(cur);
    }
}

}  // namespace modiso
