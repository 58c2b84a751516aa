// Finite group actions on posets and simplicial complexes: translativity,
// quotient posets, decoupled decompositions, orbit complexes, the explicit
// shelling order for decoupled abelian actions, and shelling verification.
#pragma once

#include <algorithm>
#include <map>
#include <numeric>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "strata/homology.hpp"
#include "strata/poset.hpp"
#include "strata/simplicial.hpp"

namespace strata {

struct NotTranslative : Error {
    explicit NotTranslative(const std::string& w) : Error(w) {}
};
struct NoDecompositionSupplied : Error {
    explicit NoDecompositionSupplied(const std::string& w) : Error(w) {}
};
struct NotDecoupled : Error {
    explicit NotDecoupled(const std::string& w) : Error(w) {}
};
struct OrderIncomplete : Error {
    explicit OrderIncomplete(const std::string& w) : Error(w) {}
};
struct PreconditionsFailed : Error {
    explicit PreconditionsFailed(const std::string& w) : Error(w) {}
};

using Perm = std::vector<int>;

inline Perm perm_identity(int n) {
    Perm p(n);
    std::iota(p.begin(), p.end(), 0);
    return p;
}

inline Perm perm_compose(const Perm& f, const Perm& g) {  // (f o g)(x) = f(g(x))
    Perm r(g.size());
    for (size_t i = 0; i < g.size(); ++i) r[i] = f[g[i]];
    return r;
}

inline Perm perm_inverse(const Perm& f) {
    Perm r(f.size());
    for (size_t i = 0; i < f.size(); ++i) r[f[i]] = static_cast<int>(i);
    return r;
}

// BFS closure with the identity first; deterministic given generator order.
inline std::vector<Perm> group_closure(const std::vector<Perm>& gens, int n,
                                       size_t limit = 100000) {
    std::vector<Perm> order;
    std::set<Perm> seen;
    order.push_back(perm_identity(n));
    seen.insert(order.front());
    for (size_t head = 0; head < order.size(); ++head) {
        for (const Perm& g : gens) {
            Perm h = perm_compose(g, order[head]);
            if (seen.insert(h).second) {
                order.push_back(std::move(h));
                if (order.size() > limit) throw Error("group_closure: order limit exceeded");
            }
        }
    }
    return order;
}

struct PosetAction {
    FinitePoset poset;
    std::vector<Perm> generators;
    std::vector<Perm> group;  // closure, identity first

    PosetAction(FinitePoset p, std::vector<Perm> gens)
        : poset(std::move(p)), generators(std::move(gens)) {
        const int n = poset.size();
        for (const Perm& g : generators) {
            if (static_cast<int>(g.size()) != n) throw Error("PosetAction: permutation size mismatch");
            Perm check = g;
            std::sort(check.begin(), check.end());
            for (int i = 0; i < n; ++i)
                if (check[i] != i) throw Error("PosetAction: not a permutation");
            for (const auto& [a, b] : poset.cover_pairs())
                if (!is_cover(g[a], g[b]))
                    throw Error("PosetAction: generator does not preserve covers");
        }
        group = group_closure(generators, n);
    }

private:
    bool is_cover(int a, int b) const {
        for (const auto& [x, y] : poset.cover_pairs())
            if (x == a && y == b) return true;
        return false;
    }
};

struct TranslativeCheck {
    bool translative = false;
    // witness on failure: p, g p, and a common upper bound
    std::string p, gp, bound;
};

inline TranslativeCheck is_translative(const PosetAction& a) {
    const FinitePoset& P = a.poset;
    const int n = P.size();
    for (const Perm& g : a.group) {
        for (int p = 0; p < n; ++p) {
            if (g[p] == p) continue;
            for (int u = 0; u < n; ++u)
                if (P.leq(p, u) && P.leq(g[p], u))
                    return {false, P.name(p), P.name(g[p]), P.name(u)};
        }
    }
    return {true, "", "", ""};
}

// Orbits named by their lexicographically smallest member; order
// G p <= G q iff g p <= q for some g.
inline FinitePoset quotient_poset(const PosetAction& a) {
    const FinitePoset& P = a.poset;
    const int n = P.size();
    std::vector<int> orbit(n, -1);
    std::vector<std::vector<int>> orbits;
    for (int i = 0; i < n; ++i) {
        if (orbit[i] >= 0) continue;
        std::vector<int> members;
        for (const Perm& g : a.group)
            if (orbit[g[i]] < 0) {
                orbit[g[i]] = static_cast<int>(orbits.size());
                members.push_back(g[i]);
            }
        orbits.push_back(std::move(members));
    }
    const int m = static_cast<int>(orbits.size());
    std::vector<std::string> names(m);
    for (int k = 0; k < m; ++k) {
        std::string best = P.name(orbits[k][0]);
        for (int e : orbits[k]) best = std::min(best, P.name(e));
        names[k] = best;
    }
    // orbit order
    std::vector<std::vector<char>> ord(m, std::vector<char>(m, 0));
    for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y)
            if (P.leq(x, y)) ord[orbit[x]][orbit[y]] = 1;
    for (int k = 0; k < m; ++k) ord[k][k] = 0;
    // antisymmetry must hold for finite length posets
    for (int i = 0; i < m; ++i)
        for (int j = 0; j < m; ++j)
            if (i != j && ord[i][j] && ord[j][i])
                throw Error("quotient_poset: quotient relation is not antisymmetric");
    std::vector<std::pair<int, int>> covers;
    for (int i = 0; i < m; ++i)
        for (int j = 0; j < m; ++j) {
            if (!ord[i][j]) continue;
            bool direct = true;
            for (int z = 0; z < m && direct; ++z)
                if (z != i && z != j && ord[i][z] && ord[z][j]) direct = false;
            if (direct) covers.emplace_back(i, j);
        }
    return FinitePoset(std::move(names), std::move(covers));
}

struct SimplicialQuotientReport {
    bool translative = false;
    bool quotient_simplicial = false;
    std::string quotient_witness;
    bool biconditional_holds = false;
};

inline SimplicialQuotientReport simplicial_quotient_check(const PosetAction& a) {
    auto chk = is_simplicial(a.poset);
    if (!chk.simplicial)
        throw NotSimplicial("simplicial_quotient_check: input poset is not simplicial");
    SimplicialQuotientReport r;
    r.translative = is_translative(a).translative;
    auto q = is_simplicial(quotient_poset(a));
    r.quotient_simplicial = q.simplicial;
    r.quotient_witness = q.witness;
    r.biconditional_holds = (r.translative == r.quotient_simplicial);
    return r;
}

struct ComplexAction {
    SimplicialComplexData complex;
    std::vector<Perm> generators;  // on vertices
    std::vector<Perm> group;
    std::vector<std::vector<Perm>> decomposition;  // generator sets of H_0..H_d (may be empty)

    ComplexAction(SimplicialComplexData sc, std::vector<Perm> gens,
                  std::vector<std::vector<Perm>> decomp = {})
        : complex(std::move(sc)), generators(std::move(gens)), decomposition(std::move(decomp)) {
        const int n = static_cast<int>(complex.vertices().size());
        for (const Perm& g : generators) {
            if (static_cast<int>(g.size()) != n) throw Error("ComplexAction: permutation size mismatch");
            for (const Face& f : complex.facets())
                if (!complex.contains(apply(g, f)))
                    throw Error("ComplexAction: generator does not preserve facets");
        }
        group = group_closure(generators, n);
        for (const auto& sub : decomposition)
            for (const Perm& g : sub)
                if (std::find(group.begin(), group.end(), g) == group.end())
                    throw Error("ComplexAction: decomposition generator outside the group");
    }

    static Face apply(const Perm& g, const Face& f) {
        Face r;
        r.reserve(f.size());
        for (int v : f) r.push_back(g[v]);
        std::sort(r.begin(), r.end());
        return r;
    }

    std::vector<Perm> stabilizer(const Face& f) const {
        std::vector<Perm> out;
        for (const Perm& g : group)
            if (apply(g, f) == f) out.push_back(g);
        return out;
    }
};

// Face-poset action induced by the vertex permutations. Face indices follow
// SimplicialComplexData::all_faces(), which matches face_poset element order.
inline PosetAction face_poset_action(const ComplexAction& a) {
    FinitePoset fp = face_poset(a.complex);
    std::vector<Face> faces = a.complex.all_faces();
    std::map<Face, int> idx;
    for (size_t i = 0; i < faces.size(); ++i) idx[faces[i]] = static_cast<int>(i);
    std::vector<Perm> gens;
    for (const Perm& g : a.generators) {
        Perm fg(faces.size());
        for (size_t i = 0; i < faces.size(); ++i)
            fg[i] = idx.at(ComplexAction::apply(g, faces[i]));
        gens.push_back(std::move(fg));
    }
    return PosetAction(std::move(fp), std::move(gens));
}

struct DecoupledCheck {
    bool decoupled = false;
    std::string reason;
    Face witness;  // first failing facet, when applicable
};

namespace detail {

inline std::vector<Perm> sorted_subgroup(std::vector<Perm> g) {
    std::sort(g.begin(), g.end());
    return g;
}

}  // namespace detail

inline DecoupledCheck is_decoupled(const ComplexAction& a) {
    if (a.decomposition.empty())
        throw NoDecompositionSupplied("is_decoupled: no decomposition supplied");
    if (!a.complex.is_pure()) return {false, "complex is not pure", {}};
    const int d = a.complex.dim();
    if (static_cast<int>(a.decomposition.size()) != d + 1)
        return {false, "decomposition must have dim+1 summands", {}};

    if (!is_translative(face_poset_action(a)).translative)
        return {false, "action is not translative", {}};

    const int n = static_cast<int>(a.complex.vertices().size());
    std::vector<std::vector<Perm>> subs;
    size_t prod = 1;
    for (const auto& gens : a.decomposition) {
        auto h = group_closure(gens, n);
        if (h.size() <= 1) return {false, "a summand is the trivial group", {}};
        prod *= h.size();
        subs.push_back(std::move(h));
    }
    if (prod != a.group.size())
        return {false, "summand orders do not multiply to the group order", {}};
    // internal direct sum: the product map is injective
    {
        std::set<Perm> products;
        std::vector<size_t> cnt(subs.size(), 0);
        for (;;) {
            Perm acc = perm_identity(n);
            for (size_t i = 0; i < subs.size(); ++i) acc = perm_compose(acc, subs[i][cnt[i]]);
            if (!products.insert(acc).second)
                return {false, "decomposition is not a direct sum", {}};
            size_t pos = 0;
            while (pos < cnt.size()) {
                if (++cnt[pos] < subs[pos].size()) break;
                cnt[pos] = 0;
                ++pos;
            }
            if (pos == cnt.size()) break;
        }
    }

    std::vector<std::vector<Perm>> targets;
    for (auto& h : subs) targets.push_back(detail::sorted_subgroup(h));
    std::sort(targets.begin(), targets.end());

    for (const Face& f : a.complex.facets()) {
        if (d == 0) {
            if (a.stabilizer(f).size() != 1)
                return {false, "facet stabilizer is nontrivial", f};
            continue;
        }
        std::vector<std::vector<Perm>> stabs;
        for (size_t i = 0; i < f.size(); ++i) {
            Face rest;
            for (size_t j = 0; j < f.size(); ++j)
                if (j != i) rest.push_back(f[j]);
            stabs.push_back(detail::sorted_subgroup(a.stabilizer(rest)));
        }
        std::sort(stabs.begin(), stabs.end());
        if (stabs != targets)
            return {false, "codimension-one stabilizers do not match the decomposition", f};
    }
    return {true, "", {}};
}

// All faces lying in some g sigma.
inline SimplicialComplexData orbit_complex(const ComplexAction& a, Face sigma) {
    std::sort(sigma.begin(), sigma.end());
    if (!a.complex.contains(sigma)) throw Error("orbit_complex: not a face");
    std::vector<Face> facets;
    for (const Perm& g : a.group) facets.push_back(ComplexAction::apply(g, sigma));
    return SimplicialComplexData(a.complex.vertices(), std::move(facets));
}

struct ShellingCheck {
    bool shellable = false;
    Face witness_m1, witness_m2;  // failing pair, when not a shelling
};

// Pairwise criterion: for m1 < m2 there must be m3 < m2 and x in m2 with
// m1 cap m2 inside m3 cap m2 = m2 minus {x}.
inline ShellingCheck verify_shelling(const SimplicialComplexData& sc,
                                     const std::vector<Face>& order) {
    if (!sc.is_pure()) throw Error("verify_shelling: complex is not pure");
    std::set<Face> in_order(order.begin(), order.end());
    std::set<Face> facets(sc.facets().begin(), sc.facets().end());
    if (in_order != facets || order.size() != sc.facets().size())
        throw OrderIncomplete("verify_shelling: order does not enumerate the facets");
    for (size_t j = 1; j < order.size(); ++j) {
        const Face& m2 = order[j];
        for (size_t i = 0; i < j; ++i) {
            const Face& m1 = order[i];
            Face inter;
            std::set_intersection(m1.begin(), m1.end(), m2.begin(), m2.end(),
                                  std::back_inserter(inter));
            bool ok = false;
            for (size_t k = 0; k < j && !ok; ++k) {
                Face cap;
                std::set_intersection(order[k].begin(), order[k].end(), m2.begin(), m2.end(),
                                      std::back_inserter(cap));
                if (cap.size() + 1 == m2.size() &&
                    std::includes(cap.begin(), cap.end(), inter.begin(), inter.end()))
                    ok = true;
            }
            if (!ok) return {false, m1, m2};
        }
    }
    return {true, {}, {}};
}

// Shelling order for the orbit complex of sigma under a decoupled abelian
// action: facets are labeled through the quotient by stab(sigma), each label
// component well-ordered with the identity first, and the labels compared
// lexicographically.
inline std::vector<Face> shelling_order(const ComplexAction& a, Face sigma) {
    std::sort(sigma.begin(), sigma.end());
    auto dc = is_decoupled(a);
    if (!dc.decoupled) throw NotDecoupled("shelling_order: " + dc.reason);
    const int n = static_cast<int>(a.complex.vertices().size());
    for (const Perm& g : a.group)
        for (const Perm& h : a.group)
            if (perm_compose(g, h) != perm_compose(h, g))
                throw Error("shelling_order: group is not abelian");

    SimplicialComplexData orb = orbit_complex(a, sigma);
    std::vector<Face> facets = orb.facets();
    if (sigma.empty()) return facets;

    std::vector<Perm> K = a.stabilizer(sigma);
    // smallest facet of the ambient complex containing sigma
    Face beta;
    for (const Face& f : a.complex.facets())
        if (std::includes(f.begin(), f.end(), sigma.begin(), sigma.end())) {
            beta = f;
            break;
        }
    if (beta.empty()) throw Error("shelling_order: no facet contains sigma");

    // L_x = stab(beta minus x) for x in sigma, enumerated identity-first
    std::vector<std::vector<Perm>> L;
    for (int x : sigma) {
        Face rest;
        for (int v : beta)
            if (v != x) rest.push_back(v);
        std::vector<Perm> stab = a.stabilizer(rest);
        // identity-first enumeration: BFS closure of the subgroup
        L.push_back(group_closure(stab, n));
    }
    // tuples of L and their products
    std::map<Perm, std::vector<size_t>> label_of_product;
    {
        std::vector<size_t> cnt(L.size(), 0);
        for (;;) {
            Perm acc = perm_identity(n);
            for (size_t i = 0; i < L.size(); ++i) acc = perm_compose(acc, L[i][cnt[i]]);
            if (!label_of_product.emplace(acc, cnt).second)
                throw Error("shelling_order: label components do not form a direct sum");
            size_t pos = 0;
            while (pos < cnt.size()) {
                if (++cnt[pos] < L[pos].size()) break;
                cnt[pos] = 0;
                ++pos;
            }
            if (pos == cnt.size()) break;
        }
    }

    if (label_of_product.size() * K.size() != a.group.size())
        throw Error("shelling_order: group does not split as labels + stabilizer");

    // lambda(m): the unique tuple whose product carries sigma to m
    std::vector<std::pair<std::vector<size_t>, Face>> labeled;
    for (const Face& m : facets) {
        std::optional<std::vector<size_t>> label;
        for (const auto& [l, tup] : label_of_product) {
            if (ComplexAction::apply(l, sigma) != m) continue;
            label = tup;
            break;
        }
        if (!label) throw Error("shelling_order: facet without label");
        labeled.emplace_back(*label, m);
    }
    std::sort(labeled.begin(), labeled.end());
    std::vector<Face> out;
    out.reserve(labeled.size());
    for (auto& [l, m] : labeled) out.push_back(std::move(m));
    return out;
}

struct QuotientHcmReport {
    bool input_cm = false;
    bool quotient_cm = false;
    std::string witness_lo, witness_hi;
};

// Homological consequence check: a decoupled abelian action on a complex
// that is CM over Q has a quotient face poset whose proper part is CM over Q.
// The identity group is admitted directly (the quotient is the complex).
inline QuotientHcmReport quotient_hcm_check(const ComplexAction& a) {
    if (a.group.size() > 1) {
        auto dc = is_decoupled(a);
        if (!dc.decoupled) throw PreconditionsFailed("quotient_hcm_check: " + dc.reason);
    }
    QuotientHcmReport r;
    r.input_cm = is_cm_complex(a.complex, 0).cm;
    if (!r.input_cm) throw PreconditionsFailed("quotient_hcm_check: complex is not CM over Q");
    FinitePoset q = quotient_poset(face_poset_action(a));
    auto res = is_cm_poset(q.proper_part(), 0);
    r.quotient_cm = res.cm;
    r.witness_lo = res.witness_lo;
    r.witness_hi = res.witness_hi;
    return r;
}

}  // namespace strata
