#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "strata/homology.hpp"

using namespace strata;

namespace {

SimplicialComplexData hollow_triangle() {
    return SimplicialComplexData({"a", "b", "c"}, {{0, 1}, {0, 2}, {1, 2}});
}

SimplicialComplexData full_triangle() {
    return SimplicialComplexData({"a", "b", "c"}, {{0, 1, 2}});
}

SimplicialComplexData bowtie() {
    // two triangles glued at the middle vertex c
    return SimplicialComplexData({"a", "b", "c", "d", "e"}, {{0, 1, 2}, {2, 3, 4}});
}

}  // namespace

TEST_CASE("chain complex basics") {
    ChainComplexData cc = chain_complex(hollow_triangle());
    CHECK(cc.dim() == 1);
    CHECK(cc.count(0) == 3);
    CHECK(cc.count(1) == 3);
    CHECK(rank(cc.boundary[1]) == 2);

    ChainComplexData pt = chain_complex(SimplicialComplexData({"v"}, {{0}}));
    CHECK(pt.dim() == 0);
    CHECK(pt.count(0) == 1);

    // composition of consecutive boundaries vanishes (checked at build, and
    // directly here for the 2-simplex)
    ChainComplexData tri = chain_complex(full_triangle());
    CHECK((tri.boundary[1] * tri.boundary[2]).is_zero());
}

TEST_CASE("homology of small complexes") {
    HomologyResult circle = homology_integral(hollow_triangle());
    CHECK(circle.betti_at(0) == 0);
    CHECK(circle.betti_at(1) == 1);
    CHECK(circle.torsion_at(0).empty());

    HomologyResult disk = homology_integral(full_triangle());
    CHECK(disk.betti_at(0) == 0);
    CHECK(disk.betti_at(1) == 0);

    // two points: reduced betti_0 = 1
    HomologyResult pts = homology_integral(SimplicialComplexData({"a", "b"}, {{0}, {1}}));
    CHECK(pts.betti_at(0) == 1);

    // complex {empty face}: H_{-1} = Z
    HomologyResult empty = homology_integral(SimplicialComplexData({}, {}));
    CHECK(empty.betti_at(-1) == 1);

    // a projective-plane triangulation has H_1 = Z/2
    SimplicialComplexData rp2b(
        {"1", "2", "3", "4", "5", "6"},
        {{0, 1, 2}, {0, 2, 3}, {0, 3, 4}, {0, 4, 5}, {0, 1, 5},
         {1, 2, 4}, {2, 4, 5}, {2, 3, 5}, {1, 3, 5}, {1, 3, 4}});
    HomologyResult h = homology_integral(rp2b);
    CHECK(h.betti_at(0) == 0);
    CHECK(h.betti_at(1) == 0);
    CHECK(h.betti_at(2) == 0);
    REQUIRE(h.torsion_at(1).size() == 1);
    CHECK(h.torsion_at(1)[0] == 2);
    // universal coefficients: over F_2 both H_1 and H_2 pick up rank
    CHECK(h.betti_mod(1, 2) == 1);
    CHECK(h.betti_mod(2, 2) == 1);
    CHECK(h.betti_mod(1, 3) == 0);
    CHECK(h.betti_mod(2, 3) == 0);
}

TEST_CASE("euler characteristic from betti agrees with chain counts") {
    std::mt19937 rng(315u);
    std::uniform_int_distribution<int> nv(2, 5), nf(1, 5), coin(0, 1);
    for (int iter = 0; iter < 25; ++iter) {
        int n = nv(rng);
        std::vector<std::string> verts;
        for (int i = 0; i < n; ++i) verts.push_back(std::to_string(i));
        std::vector<Face> facets;
        for (int f = nf(rng); f > 0; --f) {
            Face face;
            for (int v = 0; v < n; ++v)
                if (coin(rng)) face.push_back(v);
            if (!face.empty()) facets.push_back(face);
        }
        if (facets.empty()) facets.push_back({0});
        SimplicialComplexData sc(verts, facets);
        HomologyResult h = homology_integral(sc);
        long euler_from_faces = -1;
        for (const Face& f : sc.all_faces())
            if (!f.empty()) euler_from_faces += (f.size() % 2 == 1) ? 1 : -1;
        long euler_from_betti = 0;
        for (int k = -1; k <= sc.dim(); ++k)
            euler_from_betti += (k % 2 == 0 ? 1 : -1) * h.betti_at(k);
        CHECK(euler_from_faces == euler_from_betti);
    }
}

TEST_CASE("poset euler characteristic equals the betti alternating sum") {
    std::vector<FinitePoset> posets;
    posets.push_back(face_poset(bowtie()).without_bottom());
    posets.push_back(face_poset(hollow_triangle()).without_bottom());
    posets.push_back(face_poset(full_triangle()));
    for (const FinitePoset& p : posets) {
        SimplicialComplexData oc = order_complex(p);
        HomologyResult h = homology_integral(oc);
        Int alt(0);
        for (int k = -1; k <= oc.dim(); ++k)
            alt += (k % 2 == 0 ? 1 : -1) * Int(h.betti_at(k));
        CHECK(reduced_euler(p) == alt);
        // the number of k-faces of the order complex is the number of
        // (k+1)-element chains
        std::vector<long> face_counts(oc.dim() + 1, 0);
        for (const Face& f : oc.all_faces())
            if (!f.empty()) ++face_counts[f.size() - 1];
        long chains2 = 0;  // 2-element chains = strict comparabilities
        for (int a = 0; a < p.size(); ++a)
            for (int b = 0; b < p.size(); ++b)
                if (p.lt(a, b)) ++chains2;
        CHECK(face_counts[0] == p.size());
        if (oc.dim() >= 1) CHECK(face_counts[1] == chains2);
    }
}

TEST_CASE("cohen-macaulay for complexes") {
    CHECK(is_cm_complex(full_triangle(), 0).cm);
    CHECK(is_cm_complex(hollow_triangle(), 0).cm);
    auto bow = is_cm_complex(bowtie(), 0);
    CHECK_FALSE(bow.cm);
    CHECK(bow.witness == Face{2});  // link of the middle vertex is two disjoint edges
}

TEST_CASE("cohen-macaulay for posets") {
    // Boolean-type posets are CM in every characteristic
    SimplicialComplexData simplex({"a", "b", "c"}, {{0, 1, 2}});
    FinitePoset b3 = face_poset(simplex);
    for (long ch : {0L, 2L, 3L, 5L}) CHECK(is_cm_poset(b3.without_bottom(), ch).cm);

    // disjoint union of an edge and a point, as a face poset with the empty
    // face removed: disconnected, so not CM; witness is the whole poset
    SimplicialComplexData disc({"a", "b", "c"}, {{0, 1}, {2}});
    auto rep = is_cm_poset(face_poset(disc).without_bottom(), 0);
    CHECK_FALSE(rep.cm);
    CHECK(rep.witness_lo == "0^");
    CHECK(rep.witness_hi == "1^");
}

TEST_CASE("poset CM agrees with complex CM through the face poset") {
    std::mt19937 rng(9090u);
    std::uniform_int_distribution<int> nv(2, 5), nf(1, 4), coin(0, 1);
    for (int iter = 0; iter < 12; ++iter) {
        int n = nv(rng);
        std::vector<std::string> verts;
        for (int i = 0; i < n; ++i) verts.push_back(std::to_string(i));
        std::vector<Face> facets;
        for (int f = nf(rng); f > 0; --f) {
            Face face;
            for (int v = 0; v < n; ++v)
                if (coin(rng)) face.push_back(v);
            if (!face.empty()) facets.push_back(face);
        }
        if (facets.empty()) facets.push_back({0});
        SimplicialComplexData sc(verts, facets);
        for (long ch : {0L, 2L}) {
            bool complex_cm = is_cm_complex(sc, ch).cm;
            bool poset_cm = is_cm_poset(face_poset(sc).without_bottom(), ch).cm;
            CHECK(complex_cm == poset_cm);
        }
    }
}
