#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "strata/action.hpp"

using namespace strata;

namespace {

// cycle graph on n vertices as a 1-dimensional complex
SimplicialComplexData cycle_complex(int n) {
    std::vector<std::string> verts;
    for (int i = 0; i < n; ++i) verts.push_back("v" + std::to_string(i));
    std::vector<Face> facets;
    for (int i = 0; i < n; ++i) facets.push_back({i, (i + 1) % n});
    return SimplicialComplexData(verts, facets);
}

Perm rotation(int n, int step) {
    Perm g(n);
    for (int i = 0; i < n; ++i) g[i] = (i + step) % n;
    return g;
}

// complete bipartite complex on parts of size 3, with the product of two
// 3-cycles acting
ComplexAction k33_action(bool diagonal_decomposition = false) {
    std::vector<std::string> verts = {"a0", "a1", "a2", "b0", "b1", "b2"};
    std::vector<Face> facets;
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) facets.push_back({i, 3 + j});
    Perm ga = {1, 2, 0, 3, 4, 5};
    Perm gb = {0, 1, 2, 4, 5, 3};
    std::vector<std::vector<Perm>> decomp;
    if (diagonal_decomposition) {
        Perm diag = perm_compose(ga, gb);
        decomp = {{diag}, {diag}};
    } else {
        decomp = {{ga}, {gb}};
    }
    return ComplexAction(SimplicialComplexData(verts, facets), {ga, gb}, decomp);
}

}  // namespace

TEST_CASE("group closure and permutation helpers") {
    Perm r = rotation(6, 1);
    auto g = group_closure({r}, 6);
    CHECK(g.size() == 6);
    CHECK(g[0] == perm_identity(6));
    CHECK(perm_compose(r, perm_inverse(r)) == perm_identity(6));
}

TEST_CASE("translativity") {
    // trivial action
    SimplicialComplexData edge({"a", "b"}, {{0, 1}});
    PosetAction trivial(face_poset(edge), {});
    CHECK(is_translative(trivial).translative);

    // swapping the endpoints of an edge is not translative
    FinitePoset ep = face_poset(edge);
    Perm swap_ab(ep.size());
    for (int i = 0; i < ep.size(); ++i) swap_ab[i] = i;
    std::swap(swap_ab[ep.index_of("{a}")], swap_ab[ep.index_of("{b}")]);
    PosetAction swapped(ep, {swap_ab});
    auto chk = is_translative(swapped);
    CHECK_FALSE(chk.translative);
    CHECK(chk.bound == "{a,b}");

    // free rotation of a 9-cycle by three steps
    PosetAction rot = face_poset_action(
        ComplexAction(cycle_complex(9), {rotation(9, 3)}));
    CHECK(is_translative(rot).translative);
}

TEST_CASE("quotient posets") {
    // trivial action: the quotient is the poset itself
    SimplicialComplexData edge({"a", "b"}, {{0, 1}});
    FinitePoset ep = face_poset(edge);
    FinitePoset q0 = quotient_poset(PosetAction(ep, {}));
    CHECK(q0.size() == ep.size());
    CHECK(q0.names() == ep.names());
    CHECK(q0.cover_pairs().size() == ep.cover_pairs().size());

    // 9-cycle mod rotation by 3: three vertex orbits, three edge orbits
    FinitePoset q3 = quotient_poset(face_poset_action(
        ComplexAction(cycle_complex(9), {rotation(9, 3)})));
    int rank1 = 0, rank2 = 0;
    for (int i = 0; i < q3.size(); ++i) {
        if (q3.rank(i) == 1) ++rank1;
        if (q3.rank(i) == 2) ++rank2;
    }
    CHECK(rank1 == 3);
    CHECK(rank2 == 3);
    CHECK(is_simplicial(q3).simplicial);

    // edge swap: the quotient has a rank-1 element over a single atom
    Perm swap_ab(ep.size());
    for (int i = 0; i < ep.size(); ++i) swap_ab[i] = i;
    std::swap(swap_ab[ep.index_of("{a}")], swap_ab[ep.index_of("{b}")]);
    FinitePoset qs = quotient_poset(PosetAction(ep, {swap_ab}));
    CHECK(qs.size() == 3);
    CHECK_FALSE(is_simplicial(qs).simplicial);
}

TEST_CASE("simplicial quotient biconditional") {
    SimplicialComplexData edge({"a", "b"}, {{0, 1}});
    FinitePoset ep = face_poset(edge);
    CHECK(simplicial_quotient_check(PosetAction(ep, {})).biconditional_holds);

    Perm swap_ab(ep.size());
    for (int i = 0; i < ep.size(); ++i) swap_ab[i] = i;
    std::swap(swap_ab[ep.index_of("{a}")], swap_ab[ep.index_of("{b}")]);
    auto rep = simplicial_quotient_check(PosetAction(ep, {swap_ab}));
    CHECK(rep.biconditional_holds);
    CHECK_FALSE(rep.translative);
    CHECK_FALSE(rep.quotient_simplicial);

    auto rot = simplicial_quotient_check(face_poset_action(
        ComplexAction(cycle_complex(9), {rotation(9, 3)})));
    CHECK(rot.biconditional_holds);
    CHECK(rot.translative);
    CHECK(rot.quotient_simplicial);
}

TEST_CASE("translative quotients preserve lower intervals") {
    // the quotient map restricts to an isomorphism on every lower set:
    // sizes and cover counts agree element by element
    std::vector<ComplexAction> actions;
    actions.emplace_back(cycle_complex(9), std::vector<Perm>{rotation(9, 3)});
    actions.emplace_back(cycle_complex(8), std::vector<Perm>{rotation(8, 2)});
    actions.push_back(k33_action());
    for (const ComplexAction& ca : actions) {
        PosetAction a = face_poset_action(ca);
        REQUIRE(is_translative(a).translative);
        const FinitePoset& P = a.poset;
        FinitePoset Q = quotient_poset(a);
        // map each element to its orbit (by representative name)
        for (int x = 0; x < P.size(); ++x) {
            std::string rep = P.name(x);
            for (const Perm& g : a.group) rep = std::min(rep, P.name(g[x]));
            int qx = Q.index_of(rep);
            long below_p = 0, below_q = 0;
            for (int z = 0; z < P.size(); ++z)
                if (P.leq(z, x)) ++below_p;
            for (int z = 0; z < Q.size(); ++z)
                if (Q.leq(z, qx)) ++below_q;
            CHECK(below_p == below_q);
            CHECK(P.covered_by(x).size() == Q.covered_by(qx).size());
        }
    }
}

TEST_CASE("stabilizers of faces intersect over vertices") {
    // for translative actions on face posets: stab(x) = cap of stab(v)
    ComplexAction a(cycle_complex(9), {rotation(9, 3)});
    for (const Face& f : a.complex.facets()) {
        auto sf = a.stabilizer(f);
        std::vector<Perm> inter = a.group;
        for (int v : f) {
            auto sv = a.stabilizer({v});
            std::vector<Perm> keep;
            for (const Perm& g : inter)
                if (std::find(sv.begin(), sv.end(), g) != sv.end()) keep.push_back(g);
            inter = keep;
        }
        std::sort(sf.begin(), sf.end());
        std::sort(inter.begin(), inter.end());
        CHECK(sf == inter);
    }
}

TEST_CASE("decoupledness") {
    CHECK(is_decoupled(k33_action()).decoupled);

    auto diag = is_decoupled(k33_action(true));
    CHECK_FALSE(diag.decoupled);

    // one free orbit of vertices, d = 0
    std::vector<std::string> pts = {"p0", "p1", "p2", "p3", "p4"};
    std::vector<Face> verts;
    for (int i = 0; i < 5; ++i) verts.push_back({i});
    ComplexAction free5(SimplicialComplexData(pts, verts), {rotation(5, 1)},
                        {{rotation(5, 1)}});
    CHECK(is_decoupled(free5).decoupled);

    ComplexAction nodecomp(cycle_complex(6), {rotation(6, 2)});
    CHECK_THROWS_AS((void)is_decoupled(nodecomp), NoDecompositionSupplied);

    // free Z/2 on the 6-cycle cannot be decoupled with this decomposition
    ComplexAction halfturn(cycle_complex(6), {rotation(6, 3)},
                           {{rotation(6, 3)}, {rotation(6, 3)}});
    CHECK_FALSE(is_decoupled(halfturn).decoupled);
}

TEST_CASE("orbit complexes") {
    ComplexAction a = k33_action();
    // an edge orbit is everything
    SimplicialComplexData orb = orbit_complex(a, {0, 3});
    CHECK(orb.facets().size() == 9);
    // a vertex orbit
    SimplicialComplexData vo = orbit_complex(a, {0});
    CHECK(vo.facets().size() == 3);
    CHECK(vo.dim() == 0);
    // trivial group: the orbit complex of sigma is its closure
    ComplexAction triv(a.complex, {});
    CHECK(orbit_complex(triv, {0, 3}).facets().size() == 1);
}

TEST_CASE("shelling verification") {
    // two triangles sharing an edge: any order is a shelling
    SimplicialComplexData two({"a", "b", "c", "d"}, {{0, 1, 2}, {1, 2, 3}});
    CHECK(verify_shelling(two, {{0, 1, 2}, {1, 2, 3}}).shellable);
    CHECK(verify_shelling(two, {{1, 2, 3}, {0, 1, 2}}).shellable);

    // bowtie: fails in either order
    SimplicialComplexData bow({"a", "b", "c", "d", "e"}, {{0, 1, 2}, {2, 3, 4}});
    auto rep = verify_shelling(bow, {{0, 1, 2}, {2, 3, 4}});
    CHECK_FALSE(rep.shellable);
    CHECK(rep.witness_m1 == Face{0, 1, 2});
    CHECK(rep.witness_m2 == Face{2, 3, 4});

    CHECK_THROWS_AS((void)verify_shelling(two, {{0, 1, 2}}), OrderIncomplete);
}

TEST_CASE("constructed shelling orders pass verification") {
    ComplexAction a = k33_action();
    std::vector<Face> order = shelling_order(a, {0, 3});
    CHECK(order.size() == 9);
    CHECK(verify_shelling(orbit_complex(a, {0, 3}), order).shellable);

    // shelled complexes have homology concentrated in top degree
    HomologyResult h = homology_integral(orbit_complex(a, {0, 3}));
    CHECK(h.betti_at(0) == 0);
    CHECK(h.betti_at(1) == 4);
    CHECK(h.torsion_at(0).empty());
    CHECK(h.torsion_at(1).empty());

    // the empty face has a one-element orbit: vacuously shellable
    std::vector<Face> trivial_order = shelling_order(a, {});
    CHECK(verify_shelling(orbit_complex(a, {}), trivial_order).shellable);

    // d = 0 free orbit: any order of the points
    std::vector<std::string> pts = {"p0", "p1", "p2", "p3", "p4"};
    std::vector<Face> verts;
    for (int i = 0; i < 5; ++i) verts.push_back({i});
    ComplexAction free5(SimplicialComplexData(pts, verts), {rotation(5, 1)},
                        {{rotation(5, 1)}});
    CHECK(shelling_order(free5, {0}).size() == 5);
}

TEST_CASE("quotient CM consequence") {
    auto rep = quotient_hcm_check(k33_action());
    CHECK(rep.input_cm);
    CHECK(rep.quotient_cm);

    // trivial action on a CM complex: the quotient is the complex itself
    SimplicialComplexData two({"a", "b", "c", "d"}, {{0, 1, 2}, {1, 2, 3}});
    auto triv_rep = quotient_hcm_check(ComplexAction(two, {}));
    CHECK(triv_rep.input_cm);
    CHECK(triv_rep.quotient_cm);

    // half turn of the 6-cycle: rejected at the decoupledness check
    ComplexAction halfturn(cycle_complex(6), {rotation(6, 3)},
                           {{rotation(6, 3)}, {rotation(6, 3)}});
    CHECK_THROWS_AS((void)quotient_hcm_check(halfturn), PreconditionsFailed);
}
