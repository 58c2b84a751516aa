#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "strata/gsemimatroid.hpp"
#include "strata/homology.hpp"

using namespace strata;

namespace {

ArrangementSpec example_toric(int p = 1) {
    ArrangementSpec s;
    s.d = 3;
    s.n = 4;
    s.p = p;
    s.q = 1;
    s.matrix = IntMatrix::from_rows({{Int(1), Int(1), Int(1), Int(3)},
                                     {Int(0), Int(5), Int(0), Int(5)},
                                     {Int(0), Int(0), Int(5), Int(5)}});
    return s;
}

ArrangementSpec one_column(long value, int p) {
    ArrangementSpec s;
    s.d = 1;
    s.n = 1;
    s.p = p;
    s.q = 1;
    s.matrix = IntMatrix::from_rows({{Int(value)}});
    return s;
}

Polynomial2 poly2(std::vector<std::tuple<int, int, long>> terms) {
    Polynomial2 p;
    for (auto& [i, j, c] : terms) p = p + Polynomial2::monomial(Int(c), i, j);
    return p;
}

}  // namespace

TEST_CASE("quotient data from an arrangement") {
    QuotientSemimatroid q = from_arrangement(example_toric());
    CHECK(q.d == 3);
    CHECK(q.ground == 4);
    for (const auto& c : q.central)
        if (c.mask == 0b0011u) CHECK(c.m == 5);

    QuotientSemimatroid lin = from_arrangement(example_toric(0));
    for (const auto& c : lin.central) CHECK(c.m == 1);

    QuotientSemimatroid empty = from_arrangement(ArrangementSpec{0, 0, 1, 0, IntMatrix(0, 0)});
    CHECK(tutte(empty) == Polynomial2(Int(1)));
}

TEST_CASE("tutte polynomial") {
    // coloop: single primitive character, p = 0
    ArrangementSpec coloop = one_column(1, 0);
    CHECK(tutte(from_arrangement(coloop)) == poly2({{1, 0, 1}}));

    // d=1, character (5), p=1: T = x + 4
    CHECK(tutte(from_arrangement(one_column(5, 1))) == poly2({{1, 0, 1}, {0, 0, 4}}));

    // worked example, frozen from the subset-sum oracle:
    // T = x^3 + x^2 + 25x + 25y + 48
    Polynomial2 T = tutte(from_arrangement(example_toric()));
    CHECK(T == poly2({{3, 0, 1}, {2, 0, 1}, {1, 0, 25}, {0, 1, 25}, {0, 0, 48}}));
    CHECK(T.eval(Int(1), Int(1)) == 100);  // number of bases with multiplicity
    CHECK(T.eval(Int(0), Int(0)) == 48);
    CHECK(T.eval(Int(0), Int(1)) == 73);
}

TEST_CASE("h polynomial of the independence poset") {
    CHECK(h_poly_independence(from_arrangement(one_column(1, 0))) == Polynomial1(Int(1)));

    Polynomial1 h5 = h_poly_independence(from_arrangement(one_column(5, 1)));
    CHECK(h5.coeff(0) == 1);
    CHECK(h5.coeff(1) == 4);

    // cross-module identity on the worked example
    ArrangementSpec s = example_toric();
    CHECK(h_poly_independence(from_arrangement(s)) == h_polynomial(independence_poset(s)));
}

TEST_CASE("characteristic polynomial of the layer poset") {
    Polynomial1 chi_coloop = char_poly_layers(from_arrangement(one_column(1, 0)));
    CHECK(chi_coloop.coeff(1) == 1);
    CHECK(chi_coloop.coeff(0) == -1);

    Polynomial1 chi5 = char_poly_layers(from_arrangement(one_column(5, 1)));
    CHECK(chi5.coeff(1) == 1);
    CHECK(chi5.coeff(0) == -5);

    ArrangementSpec s = example_toric();
    CHECK(char_poly_layers(from_arrangement(s)) ==
          characteristic_polynomial(layers_poset(s)));
}

TEST_CASE("delta of the worked example") {
    DeltaReport rep = delta(example_toric());
    REQUIRE(rep.per_basis.size() == 4);
    CHECK(rep.delta == 5);
    for (const auto& e : rep.per_basis) CHECK(e.delta == 5);

    // w vectors of the first basis {1,2,3}, fixed signs
    const auto& first = rep.per_basis[0];
    CHECK(first.basis == std::vector<int>{0, 1, 2});
    CHECK(first.w[0] == std::vector<Int>{Int(5), Int(-1), Int(-1)});
    CHECK(first.w[1] == std::vector<Int>{Int(0), Int(1), Int(0)});
    CHECK(first.w[2] == std::vector<Int>{Int(0), Int(0), Int(1)});

    // remaining bases, as tabulated (up to the fixed sign convention)
    CHECK(rep.per_basis[1].basis == std::vector<int>{0, 1, 3});
    CHECK(rep.per_basis[1].w[0] == std::vector<Int>{Int(5), Int(-1), Int(-2)});
    CHECK(rep.per_basis[1].w[1] == std::vector<Int>{Int(0), Int(1), Int(-1)});
    CHECK(rep.per_basis[1].w[2] == std::vector<Int>{Int(0), Int(0), Int(1)});
    CHECK(rep.per_basis[2].basis == std::vector<int>{0, 2, 3});
    CHECK(rep.per_basis[2].w[0] == std::vector<Int>{Int(5), Int(-2), Int(-1)});
    CHECK(rep.per_basis[2].w[1] == std::vector<Int>{Int(0), Int(1), Int(-1)});
    CHECK(rep.per_basis[2].w[2] == std::vector<Int>{Int(0), Int(1), Int(0)});
    CHECK(rep.per_basis[3].basis == std::vector<int>{1, 2, 3});
    CHECK(rep.per_basis[3].w[0] == std::vector<Int>{Int(5), Int(-2), Int(-1)});
    CHECK(rep.per_basis[3].w[1] == std::vector<Int>{Int(5), Int(-1), Int(-2)});
    CHECK(rep.per_basis[3].w[2] == std::vector<Int>{Int(5), Int(-1), Int(-1)});

    // identity matrix: delta = 1
    ArrangementSpec id;
    id.d = 3;
    id.n = 3;
    id.p = 1;
    id.matrix = IntMatrix::identity(3);
    CHECK(delta(id).delta == 1);

    // p = 2: each basis contributes det^2
    DeltaReport rep2 = delta(example_toric(2));
    CHECK(rep2.delta == 25);
    for (const auto& e : rep2.per_basis) CHECK(e.delta == 25);

    CHECK_THROWS_AS((void)delta(example_toric(0)), NotRefined);
}

TEST_CASE("delta of general supports and divisibility") {
    ArrangementSpec s = example_toric();
    // full supports agree with the per-basis values
    DeltaReport rep = delta(s);
    for (const auto& e : rep.per_basis)
        CHECK(delta_of_support(s, e.basis) == e.delta);
    // singletons are trivial
    for (int i = 0; i < 4; ++i) CHECK(delta_of_support(s, {i}) == 1);
    // divisibility along inclusions, pairs inside triples
    for (const auto& e : rep.per_basis)
        for (int drop = 0; drop < 3; ++drop) {
            std::vector<int> pair;
            for (int j = 0; j < 3; ++j)
                if (j != drop) pair.push_back(e.basis[j]);
            Int dp = delta_of_support(s, pair);
            CHECK(e.delta % dp == 0);
        }
    CHECK_THROWS_AS((void)delta_of_support(s, {0, 1, 2, 3}), NotIndependent);
}

TEST_CASE("chi of the independence poset via Moebius equals (-1)^d T(1-t,1)") {
    std::vector<ArrangementSpec> corpus = {example_toric(), one_column(5, 1),
                                           one_column(1, 0), example_toric(2)};
    for (const ArrangementSpec& s : corpus) {
        QuotientSemimatroid q = from_arrangement(s);
        Polynomial1 tx = tutte(q).substitute_y(Int(1));
        Polynomial1 one_minus_t;
        one_minus_t.set_coeff(0, Int(1));
        one_minus_t.set_coeff(1, Int(-1));
        Polynomial1 expect = tx.compose(one_minus_t);
        if (q.d % 2 != 0) expect = expect * Int(-1);
        CHECK(characteristic_polynomial(independence_poset(s)) == expect);
    }
}

TEST_CASE("h nonnegativity and basis count on random essential arrangements") {
    std::mt19937 rng(5551u);
    std::uniform_int_distribution<int> entry(-3, 3);
    int made = 0;
    while (made < 10) {
        ArrangementSpec s;
        s.d = 2;
        s.n = 3 + made % 2;
        s.p = 1 + made % 2;
        s.q = 1;
        s.matrix = IntMatrix(s.d, s.n);
        for (int j = 0; j < s.n; ++j) {
            bool zero = true;
            while (zero)
                for (int i = 0; i < s.d; ++i) {
                    s.matrix.at(i, j) = entry(rng);
                    if (s.matrix.at(i, j) != 0) zero = false;
                }
        }
        if (rank(s.matrix) != s.d) continue;
        ++made;
        QuotientSemimatroid q = from_arrangement(s);
        Polynomial1 h = h_poly_independence(q);
        for (int k = 0; k <= h.degree(); ++k) CHECK(h.coeff(k) >= 0);
        // T(1,1) counts the bases with multiplicity
        Int bases(0);
        for (const auto& c : q.central)
            if (c.rho == q.d && __builtin_popcount(c.mask) == q.d) bases += c.m;
        CHECK(tutte(q).eval(Int(1), Int(1)) == bases);
    }
}

TEST_CASE("betti predictions against homology") {
    // d=1, character (5): layer proper part is five points
    {
        ArrangementSpec s = one_column(5, 1);
        BettiPredictions b = betti_predictions(from_arrangement(s));
        CHECK(b.layers_top == 4);
        HomologyResult h = homology_integral(order_complex(layers_poset(s).without_bottom()));
        CHECK(h.betti_at(0) == b.layers_top.get_si());
    }
    // coloop: the single-point proper part has no reduced homology
    {
        ArrangementSpec s = one_column(1, 0);
        BettiPredictions b = betti_predictions(from_arrangement(s));
        CHECK(b.layers_top == 0);
        HomologyResult h = homology_integral(order_complex(layers_poset(s).without_bottom()));
        CHECK(h.betti_at(0) == 0);
    }
    // worked example: top Betti of both posets
    {
        ArrangementSpec s = example_toric();
        BettiPredictions b = betti_predictions(from_arrangement(s));
        CHECK(b.layers_top == 48);
        CHECK(b.independence_top == 73);
        HomologyResult hp = homology_integral(order_complex(layers_poset(s).without_bottom()));
        CHECK(hp.betti_at(2) == 48);
        CHECK(hp.betti_at(0) == 0);
        CHECK(hp.betti_at(1) == 0);
        HomologyResult hi = homology_integral(order_complex(independence_poset(s).without_bottom()));
        CHECK(hi.betti_at(2) == 73);
        CHECK(hi.betti_at(0) == 0);
        CHECK(hi.betti_at(1) == 0);
    }
}
