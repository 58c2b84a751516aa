#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "strata/poset.hpp"

using namespace strata;

namespace {

// The ten-element simplicial poset with two triangles over a common boundary.
FinitePoset two_triangles() {
    return FinitePoset(
        {"0", "a", "b", "c", "l1", "l2", "l3", "l4", "T1", "T2"},
        std::vector<std::pair<std::string, std::string>>{
            {"0", "a"}, {"0", "b"}, {"0", "c"},
            {"a", "l1"}, {"a", "l3"},
            {"b", "l1"}, {"b", "l2"}, {"b", "l4"},
            {"c", "l2"}, {"c", "l3"}, {"c", "l4"},
            {"l1", "T1"}, {"l1", "T2"},
            {"l2", "T1"}, {"l2", "T2"},
            {"l3", "T1"}, {"l3", "T2"}});
}

SimplicialComplexData full_simplex(int n) {
    std::vector<std::string> verts;
    for (int i = 0; i < n; ++i) verts.push_back(std::string(1, static_cast<char>('a' + i)));
    Face all(n);
    for (int i = 0; i < n; ++i) all[i] = i;
    return SimplicialComplexData(verts, {all});
}

FinitePoset boolean_algebra(int n) { return face_poset(full_simplex(n)); }

std::vector<long> as_longs(const std::vector<Int>& v) {
    std::vector<long> out;
    for (const Int& x : v) out.push_back(to_long(x));
    return out;
}

// Random simplicial poset: face poset of a random complex, sometimes with a
// maximal face doubled over the same boundary (so not a complex).
FinitePoset random_simplicial_poset(std::mt19937& rng) {
    std::uniform_int_distribution<int> nv(2, 5), nf(1, 4), coin(0, 1);
    int n = nv(rng);
    std::vector<std::string> verts;
    for (int i = 0; i < n; ++i) verts.push_back(std::string(1, static_cast<char>('a' + i)));
    std::vector<Face> facets;
    int k = nf(rng);
    for (int f = 0; f < k; ++f) {
        Face face;
        for (int v = 0; v < n; ++v)
            if (coin(rng)) face.push_back(v);
        if (!face.empty()) facets.push_back(face);
    }
    if (facets.empty()) facets.push_back({0});
    SimplicialComplexData sc(verts, facets);
    FinitePoset p = face_poset(sc);
    if (coin(rng)) return p;
    // double a maximal element over the same lower boundary
    auto maxima = p.maximal_elements();
    std::uniform_int_distribution<size_t> pick(0, maxima.size() - 1);
    int m = maxima[pick(rng)];
    if (p.rank(m) == 0) return p;
    std::vector<std::string> names = p.names();
    names.push_back(p.name(m) + "'");
    std::vector<std::pair<int, int>> covers = p.cover_pairs();
    for (int below : p.covered_by(m)) covers.emplace_back(below, static_cast<int>(names.size()) - 1);
    return FinitePoset(std::move(names), std::move(covers));
}

}  // namespace

TEST_CASE("validation") {
    FinitePoset b3 = boolean_algebra(3);
    PosetValidation v = validate(b3);
    CHECK(v.bounded_below);
    CHECK(v.bounded_above);
    CHECK(v.graded);
    CHECK(v.length == 3);

    FinitePoset fig = two_triangles();
    PosetValidation vf = validate(fig);
    CHECK(vf.bounded_below);
    CHECK_FALSE(vf.bounded_above);
    CHECK(vf.graded);
    CHECK(vf.length == 3);

    FinitePoset anti({"0", "x", "y"}, std::vector<std::pair<std::string, std::string>>{
                                          {"0", "x"}, {"0", "y"}});
    PosetValidation va = validate(anti);
    CHECK(va.graded);
    CHECK(va.length == 1);

    CHECK_THROWS_AS(FinitePoset({"a", "b"}, std::vector<std::pair<std::string, std::string>>{
                                                {"a", "b"}, {"b", "a"}}),
                    CycleDetected);
    CHECK_THROWS_AS(FinitePoset({"a", "b", "c"},
                                std::vector<std::pair<std::string, std::string>>{
                                    {"a", "b"}, {"b", "c"}, {"a", "c"}}),
                    RedundantCover);
}

TEST_CASE("simpliciality") {
    CHECK(is_simplicial(two_triangles()).simplicial);
    CHECK(is_simplicial(boolean_algebra(3)).simplicial);
    SimplicialComplexData edge_pt({"a", "b", "c"}, {{0, 1}, {2}});
    CHECK(is_simplicial(face_poset(edge_pt)).simplicial);

    // a rank-2 element whose lower interval has 3 elements
    FinitePoset chain3({"0", "a", "b"}, std::vector<std::pair<std::string, std::string>>{
                                            {"0", "a"}, {"a", "b"}});
    auto chk = is_simplicial(chain3);
    CHECK_FALSE(chk.simplicial);
    CHECK(chk.witness == "b");
}

TEST_CASE("mobius") {
    FinitePoset b3 = boolean_algebra(3);
    int bot = *b3.bottom();
    int top = *b3.top();
    CHECK(mobius(b3, bot, top) == -1);
    for (int x = 0; x < b3.size(); ++x)
        if (b3.rank(x) == 2) CHECK(mobius(b3, bot, x) == 1);
    CHECK_THROWS_AS((void)mobius(b3, top, bot), NotComparable);

    // simplicial posets: mu(0,x) = (-1)^rk(x)
    FinitePoset fig = two_triangles();
    std::vector<Int> mu = mobius_row(fig, *fig.bottom());
    for (int x = 0; x < fig.size(); ++x)
        CHECK(mu[x] == (fig.rank(x) % 2 == 0 ? 1 : -1));
}

TEST_CASE("f-vector, h-polynomial, characteristic polynomial") {
    FinitePoset fig = two_triangles();
    CHECK(as_longs(f_vector(fig)) == std::vector<long>{1, 3, 4, 2});

    Polynomial1 h = h_polynomial(fig);  // 1 + t^2
    CHECK(h.coeff(0) == 1);
    CHECK(h.coeff(1) == 0);
    CHECK(h.coeff(2) == 1);
    CHECK(h.degree() == 2);

    Polynomial1 chi = characteristic_polynomial(fig);  // t^3 - 3t^2 + 4t - 2
    CHECK(chi.coeff(3) == 1);
    CHECK(chi.coeff(2) == -3);
    CHECK(chi.coeff(1) == 4);
    CHECK(chi.coeff(0) == -2);

    // boundary of the 2-simplex: f = (1,3,3), h = 1 + t + t^2
    SimplicialComplexData bdry({"a", "b", "c"}, {{0, 1}, {0, 2}, {1, 2}});
    FinitePoset bp = face_poset(bdry);
    CHECK(as_longs(f_vector(bp)) == std::vector<long>{1, 3, 3});
    Polynomial1 hb = h_polynomial(bp);
    CHECK(hb.coeff(0) == 1);
    CHECK(hb.coeff(1) == 1);
    CHECK(hb.coeff(2) == 1);

    CHECK_THROWS_AS((void)f_vector(FinitePoset({"a", "b"}, std::vector<std::pair<int, int>>{})),
                    NotSimplicial);
}

TEST_CASE("chi and h determine each other: chi(t) = (t-1)^d h(1/(1-t))") {
    std::mt19937 rng(20230505u);
    for (int iter = 0; iter < 40; ++iter) {
        FinitePoset p = random_simplicial_poset(rng);
        const int d = p.length();
        Polynomial1 h = h_polynomial(p);
        // (t-1)^d h(1/(1-t)) = sum_i h_i (-1)^d (1-t)^{d-i}
        Polynomial1 one_minus_t;
        one_minus_t.set_coeff(0, Int(1));
        one_minus_t.set_coeff(1, Int(-1));
        Polynomial1 rhs;
        for (int i = 0; i <= h.degree(); ++i)
            rhs = rhs + one_minus_t.pow(d - i) * h.coeff(i);
        if (d % 2 != 0) rhs = rhs * Int(-1);
        CHECK(characteristic_polynomial(p) == rhs);
        // and the direct expansion chi(t) = sum_i f_{i-1} (-1)^i t^{d-i}
        std::vector<Int> f = f_vector(p);
        Polynomial1 direct;
        for (int i = 0; i < static_cast<int>(f.size()); ++i)
            direct = direct + Polynomial1::monomial((i % 2 == 0 ? f[i] : Int(-f[i])), d - i);
        CHECK(characteristic_polynomial(p) == direct);
    }
}

TEST_CASE("order complex") {
    FinitePoset chain({"a", "b"}, std::vector<std::pair<std::string, std::string>>{{"a", "b"}});
    SimplicialComplexData oc = order_complex(chain);
    CHECK(oc.facets().size() == 1);
    CHECK(oc.facets()[0].size() == 2);

    FinitePoset anti({"a", "b"}, std::vector<std::pair<int, int>>{});
    SimplicialComplexData oa = order_complex(anti);
    CHECK(oa.facets().size() == 2);
    CHECK(oa.dim() == 0);

    // proper part of B_3: hexagon (6 vertices, 6 edges)
    FinitePoset hex = boolean_algebra(3).proper_part();
    SimplicialComplexData oh = order_complex(hex);
    CHECK(oh.dim() == 1);
    CHECK(oh.facets().size() == 6);
    auto faces = oh.all_faces();
    long v = 0, e = 0;
    for (const Face& f : faces) {
        if (f.size() == 1) ++v;
        if (f.size() == 2) ++e;
    }
    CHECK(v == 6);
    CHECK(e == 6);

    // #0-faces = #1-chains
    FinitePoset fig = two_triangles();
    SimplicialComplexData of = order_complex(fig);
    long chains1 = 0;
    for (const Face& f : of.all_faces())
        if (f.size() == 1) ++chains1;
    CHECK(chains1 == fig.size());
}

TEST_CASE("reduced euler and the two identities") {
    FinitePoset b2 = boolean_algebra(2);
    EulerReport r2 = euler_identities_check(b2);
    CHECK(r2.first_identity);
    CHECK(r2.bounded_above);
    CHECK(r2.second_identity);
    CHECK(r2.euler_without_bottom == 0);  // path a - ab - b is contractible

    FinitePoset fig = two_triangles();
    EulerReport rf = euler_identities_check(fig);
    CHECK(rf.first_identity);
    CHECK(rf.euler_without_bottom == 0);  // -chi(1) = -(1-3+4-2) = 0
    CHECK_FALSE(rf.bounded_above);

    FinitePoset single({"0"}, std::vector<std::pair<int, int>>{});
    EulerReport rs = euler_identities_check(single);
    CHECK(rs.euler_without_bottom == -1);
    CHECK(rs.minus_chi_at_one == -1);
    CHECK(rs.first_identity);
}

TEST_CASE("interval and extremal accessors") {
    FinitePoset b3 = boolean_algebra(3);
    std::vector<int> keep;
    for (int i = 0; i < b3.size(); ++i)
        if (i != *b3.top()) keep.push_back(i);
    FinitePoset trunc = b3.induced(keep);
    CHECK(trunc.length() == 2);
    CHECK(trunc.is_graded());

    // antichain + bottom, with a top adjoined: the diamond, which is B_2
    FinitePoset anti({"0", "x", "y"}, std::vector<std::pair<std::string, std::string>>{
                                          {"0", "x"}, {"0", "y"}});
    FinitePoset diamond = anti.adjoin_top();
    CHECK(diamond.size() == 4);
    CHECK(diamond.top().has_value());
    CHECK(diamond.is_graded());
    CHECK(is_simplicial(diamond).simplicial);

    // interval [atom, top] in B_3 is a square
    int a = -1;
    for (int i = 0; i < b3.size(); ++i)
        if (b3.rank(i) == 1) { a = i; break; }
    FinitePoset iv = b3.interval(a, *b3.top());
    CHECK(iv.size() == 4);
    CHECK(iv.length() == 2);
}
