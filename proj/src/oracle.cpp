#include "modiso/oracle.hpp"

#include <algorithm>
#include <cstdlib>
#include <functional>
#include <map>
#include <set>

namespace modiso {

namespace {

std::uint64_t env_u64(const char* name, std::uint64_t fallback) {
    const char* v = std::getenv(name);
    if (!v || !*v) return fallback;
    return std::strtoull(v, nullptr, 10);
}

Vec unit_vec(const GroupShape& shape, std::size_t i) {
    Vec v = shape.zero();
    v[i] = 1 % shape.order_at(i);
    return v;
}

// additive span of `gens` closed under the ring action, by plain breadth
// first enumeration of elements (independent of the canonical-form engine)
std::set<Vec> element_closure(const FiniteModule& m, const std::vector<Vec>& gens) {
    std::set<Vec> span;
    span.insert(m.shape().zero());
    std::vector<Vec> work(span.begin(), span.end());
    auto push = [&](Vec v) {
        if (span.insert(v).second) work.push_back(std::move(v));
    };
    for (const Vec& g : gens) push(m.shape().reduce(g));
    while (!work.empty()) {
        Vec w = std::move(work.back());
        work.pop_back();
        for (const Vec& g : gens) push(m.shape().add(w, g));
        for (std::size_t i = 0; i < m.ring().rank(); ++i)
            push(m.act(unit_vec(m.ring().shape(), i), w));
    }
    return span;
}

std::multiset<Coord> order_multiset(const FiniteModule& m, std::uint64_t cap) {
    std::multiset<Coord> out;
    for (const Vec& x : enumerate_elements(m.shape(), cap))
        out.insert(m.shape().element_order(x));
    return out;
}

}  // namespace

OracleBudget OracleBudget::from_env() {
    OracleBudget b;
    b.max_module_order = env_u64("MODISO_ORACLE_MAX_ORDER", b.max_module_order);
    b.max_hom_enum = env_u64("MODISO_ORACLE_MAX_ENUM", b.max_hom_enum);
    return b;
}

std::vector<ModuleHom> oracle_homs(const FiniteModule& m, const FiniteModule& n,
                                   const OracleBudget& budget) {
    check_internal(m.ring() == n.ring(), "oracle_homs: mixed rings");
    if (m.order() > budget.max_module_order || n.order() > budget.max_module_order)
        throw BudgetError("oracle_homs: module order over budget");
    std::size_t u = m.rank();
    // per-generator candidates: torsion elements killed by the generator order
    std::vector<std::vector<Vec>> cands(u);
    BigInt total = 1;
    auto nelems = enumerate_elements(n.shape(), budget.max_module_order);
    for (std::size_t j = 0; j < u; ++j) {
        for (const Vec& y : nelems)
            if (n.shape().is_zero(n.shape().scale(m.shape().order_at(j), y)))
                cands[j].push_back(y);
        total *= (BigInt)cands[j].size();
    }
    if (total > budget.max_hom_enum) throw BudgetError("oracle_homs: enumeration over budget");

    // linearity constraints testable once generators 0..j are assigned
    const FiniteRing& ring = m.ring();
    std::vector<std::vector<std::pair<std::size_t, std::size_t>>> early(u);
    for (std::size_t i = 0; i < ring.rank(); ++i)
        for (std::size_t j = 0; j < u; ++j) {
            std::size_t maxl = j;
            for (std::size_t l = 0; l < u; ++l)
                if (m.act_gens(i, j)[l] != 0) maxl = std::max(maxl, l);
            early[maxl].push_back({i, j});
        }

    std::vector<ModuleHom> out;
    std::vector<Vec> images(u);
    std::vector<Vec> eis;
    for (std::size_t i = 0; i < ring.rank(); ++i) eis.push_back(unit_vec(ring.shape(), i));

    auto linear_at = [&](std::size_t i, std::size_t j) {
        Vec lhs = n.act(eis[i], images[j]);
        Vec rhs = n.shape().zero();
        const Vec& c = m.act_gens(i, j);
        for (std::size_t l = 0; l < u; ++l)
            if (c[l] != 0) rhs = n.shape().add(rhs, n.shape().scale(c[l], images[l]));
        return lhs == rhs;
    };

    std::function<void(std::size_t)> rec = [&](std::size_t j) {
        if (j == u) {
            out.push_back(ModuleHom{m, n, images});
            return;
        }
        for (const Vec& y : cands[j]) {
            images[j] = y;
            bool ok = true;
            for (auto [i, jj] : early[j])
                if (!linear_at(i, jj)) {
                    ok = false;
                    break;
                }
            if (ok) rec(j + 1);
        }
    };
    rec(0);
    return out;
}

std::optional<ModuleHom> oracle_iso(const FiniteModule& m, const FiniteModule& n,
                                    const OracleBudget& budget) {
    if (m.order() != n.order()) return std::nullopt;
    if (m.order() > budget.max_module_order || n.order() > budget.max_module_order)
        throw BudgetError("oracle_iso: module order over budget");
    if (order_multiset(m, budget.max_module_order) !=
        order_multiset(n, budget.max_module_order))
        return std::nullopt;  // not even isomorphic as groups
    auto melems = enumerate_elements(m.shape(), budget.max_module_order);
    for (const ModuleHom& h : oracle_homs(m, n, budget)) {
        std::set<Vec> imgs;
        for (const Vec& x : melems) imgs.insert(h.apply(x));
        if ((BigInt)imgs.size() == n.order()) return h;
    }
    return std::nullopt;
}

int oracle_mingen(const FiniteModule& m, const OracleBudget& budget) {
    if (m.order() > budget.max_module_order)
        throw BudgetError("oracle_mingen: module order over budget");
    if (m.order() == 1) return 0;
    auto elems = enumerate_elements(m.shape(), budget.max_module_order);
    std::size_t total = elems.size();
    std::vector<Vec> chosen;
    std::function<bool(int, std::size_t)> search = [&](int k, std::size_t from) {
        if (k == 0) return element_closure(m, chosen).size() == total;
        for (std::size_t i = from; i < total; ++i) {
            chosen.push_back(elems[i]);
            if (search(k - 1, i + 1)) return true;
            chosen.pop_back();
        }
        return false;
    };
    for (int k = 1;; ++k) {
        chosen.clear();
        if (search(k, 0)) return k;
        check_internal(k <= (int)m.rank() + 1, "oracle_mingen: generator count exceeds rank");
    }
}

bool oracle_subiso(const FiniteModule& m, const std::vector<Vec>& u_elems,
                   const FiniteModule& n, const std::vector<Vec>& v_elems,
                   const OracleBudget& budget) {
    if (u_elems.size() != v_elems.size()) return false;
    std::set<Vec> uset(u_elems.begin(), u_elems.end());
    std::set<Vec> vset(v_elems.begin(), v_elems.end());
    // additive invariants must match
    std::multiset<Coord> uords, vords;
    for (const Vec& x : uset) uords.insert(m.shape().element_order(x));
    for (const Vec& y : vset) vords.insert(n.shape().element_order(y));
    if (uords != vords) return false;

    // greedy generating sequence for U
    std::vector<Vec> gens;
    std::set<Vec> span = element_closure(m, gens);
    for (const Vec& x : uset) {
        if (span.count(x)) continue;
        gens.push_back(x);
        span = element_closure(m, gens);
        if (span.size() == uset.size()) break;
    }
    check_internal(span == uset, "oracle_subiso: input is not a submodule");

    std::vector<std::vector<Vec>> cands(gens.size());
    BigInt total = 1;
    for (std::size_t j = 0; j < gens.size(); ++j) {
        Coord o = m.shape().element_order(gens[j]);
        for (const Vec& y : vset)
            if (n.shape().element_order(y) == o) cands[j].push_back(y);
        total *= (BigInt)cands[j].size();
    }
    if (total > budget.max_hom_enum)
        throw BudgetError("oracle_subiso: enumeration over budget");

    std::vector<Vec> ulist(uset.begin(), uset.end());
    std::vector<Vec> imgs(gens.size());
    std::function<bool(std::size_t)> rec = [&](std::size_t j) -> bool {
        if (j < gens.size()) {
            for (const Vec& y : cands[j]) {
                imgs[j] = y;
                if (rec(j + 1)) return true;
            }
            return false;
        }
        // extend by breadth-first table construction; reject on conflicts
        std::map<Vec, Vec> h;
        h[m.shape().zero()] = n.shape().zero();
        std::vector<Vec> work{m.shape().zero()};
        while (!work.empty()) {
            Vec a = std::move(work.back());
            work.pop_back();
            Vec ha = h[a];
            for (std::size_t g = 0; g < gens.size(); ++g) {
                Vec b = m.shape().add(a, gens[g]);
                Vec hb = n.shape().add(ha, imgs[g]);
                auto it = h.find(b);
                if (it == h.end()) {
                    h[b] = hb;
                    work.push_back(b);
                } else if (it->second != hb) {
                    return false;
                }
            }
        }
        if (h.size() != uset.size()) return false;
        // full additivity, R-linearity, bijectivity
        std::set<Vec> image;
        for (auto& [a, ha] : h) image.insert(ha);
        if (image.size() != vset.size()) return false;
        for (auto& [a, ha] : h)
            for (auto& [b, hb] : h)
                if (h.at(m.shape().add(a, b)) != n.shape().add(ha, hb)) return false;
        for (std::size_t i = 0; i < m.ring().rank(); ++i) {
            Vec ei = unit_vec(m.ring().shape(), i);
            for (auto& [a, ha] : h)
                if (h.at(m.act(ei, a)) != n.act(ei, ha)) return false;
        }
        return true;
    };
    return rec(0);
}

std::vector<OracleSummand> oracle_summand_classes(const FiniteModule& m,
                                                  const OracleBudget& budget) {
    if (m.order() > budget.max_module_order)
        throw BudgetError("oracle_summand_classes: module order over budget");
    auto elems = enumerate_elements(m.shape(), budget.max_module_order);
    std::vector<OracleSummand> classes;
    auto consider = [&](const std::vector<Vec>& elements) {
        for (const auto& c : classes)
            if (c.elements.size() == elements.size() &&
                oracle_subiso(m, c.elements, m, elements, budget))
                return;
        classes.push_back(OracleSummand{elements, BigInt(elements.size())});
    };
    for (const ModuleHom& e : oracle_homs(m, m, budget)) {
        if (!(compose(e, e) == e)) continue;
        std::set<Vec> img;
        for (const Vec& x : elems) img.insert(e.apply(x));
        consider(std::vector<Vec>(img.begin(), img.end()));
    }
    std::sort(classes.begin(), classes.end(),
              [](const OracleSummand& a, const OracleSummand& b) {
                  return a.order < b.order ||
                         (a.order == b.order && a.elements < b.elements);
              });
    return classes;
}

}  // namespace modiso
