// Finite quotient data of a translative group action on a semimatroid:
// ground set with multiplicity and rank functions, the weighted Tutte
// polynomial, the derived h / characteristic polynomials, the index delta
// (per basis and overall) and the Betti-number predictions.
#pragma once

#include <algorithm>
#include <map>
#include <string>
#include <vector>

#include "strata/arrangement.hpp"
#include "strata/intmatrix.hpp"
#include "strata/polynomial.hpp"

namespace strata {

struct NotIndependent : Error {
    explicit NotIndependent(const std::string& w) : Error(w) {}
};

struct QuotientSemimatroid {
    int ground = 0;  // |E|, elements 0..ground-1
    int d = 0;       // total rank
    struct CentralSet {
        unsigned mask;
        int rho;
        Int m;
    };
    std::vector<CentralSet> central;  // downward-closed family
};

inline QuotientSemimatroid from_arrangement(const ArrangementSpec& spec) {
    validate_spec(spec);
    QuotientSemimatroid q;
    q.ground = spec.n;
    q.d = subset_rank(spec, (1u << spec.n) - 1);
    for (unsigned mask = 0; mask < (1u << spec.n); ++mask)
        q.central.push_back({mask, subset_rank(spec, mask), multiplicity(spec, mask)});
    return q;
}

// T(x,y) = sum over central A of m(A) (x-1)^{d-rho(A)} (y-1)^{|A|-rho(A)}
inline Polynomial2 tutte(const QuotientSemimatroid& q) {
    Polynomial2 xm1 = Polynomial2::x() + Polynomial2(Int(-1));
    Polynomial2 ym1 = Polynomial2::y() + Polynomial2(Int(-1));
    std::map<std::pair<int, int>, Int> weight;  // (d-rho, |A|-rho) -> sum of m
    for (const auto& c : q.central)
        weight[{q.d - c.rho, __builtin_popcount(c.mask) - c.rho}] += c.m;
    Polynomial2 t;
    for (const auto& [e, w] : weight)
        t = t + xm1.pow(e.first) * ym1.pow(e.second) * w;
    return t;
}

// h-polynomial of the independence poset: t^d T(1/t, 1).
inline Polynomial1 h_poly_independence(const QuotientSemimatroid& q) {
    Polynomial1 tx1 = tutte(q).substitute_y(Int(1));  // polynomial in x, degree <= d
    Polynomial1 h;
    for (int k = 0; k <= tx1.degree(); ++k)
        if (tx1.coeff(k) != 0) h.set_coeff(q.d - k, tx1.coeff(k));
    return h;
}

// Characteristic polynomial of the poset of layers: (-1)^d T(1-t, 0).
inline Polynomial1 char_poly_layers(const QuotientSemimatroid& q) {
    Polynomial1 tx0 = tutte(q).substitute_y(Int(0));
    Polynomial1 one_minus_t;
    one_minus_t.set_coeff(0, Int(1));
    one_minus_t.set_coeff(1, Int(-1));
    Polynomial1 chi = tx0.compose(one_minus_t);
    if (q.d % 2 != 0) chi = chi * Int(-1);
    return chi;
}

struct DeltaReport {
    struct BasisEntry {
        std::vector<int> basis;                     // 0-based column indices
        std::vector<std::vector<Int>> w;            // primitive kernel generators
        Int delta;                                  // |det(w_1..w_d)|^p
    };
    std::vector<BasisEntry> per_basis;
    Int delta = 1;  // lcm over bases
};

// delta for a full basis B: w_j generates Z^d cap the kernel of the other
// characters; the index is computed in Z^{pd} with the block lattice
// (Z w_1)^p + ... + (Z w_d)^p and cross-checked against |det|^p.
inline DeltaReport delta(const ArrangementSpec& spec) {
    SpecReport rep = validate_spec(spec);
    if (!rep.essential) throw NotEssential("delta: arrangement is not essential");
    if (spec.p < 1) throw NotRefined("delta: p = 0 carries no torsion (delta = 1)");

    DeltaReport out;
    const int d = spec.d;
    std::vector<std::vector<int>> bases;
    for (unsigned mask = 0; mask < (1u << spec.n); ++mask) {
        if (__builtin_popcount(mask) != d) continue;
        if (subset_rank(spec, mask) != d) continue;
        std::vector<int> b;
        for (int i = 0; i < spec.n; ++i)
            if (mask & (1u << i)) b.push_back(i);
        bases.push_back(std::move(b));
    }

    for (const auto& b : bases) {
        DeltaReport::BasisEntry e;
        e.basis = b;
        for (int j = 0; j < d; ++j) {
            unsigned rest = 0;
            for (int l = 0; l < d; ++l)
                if (l != j) rest |= (1u << b[l]);
            LatticeBasis ker = kernel_lattice(spec.rows_of(rest));
            if (ker.rank() != 1) throw Error("delta: kernel of a cobasis is not rank one");
            e.w.push_back(ker.generators[0]);
        }
        // index of the block lattice in Z^{pd}
        LatticeBasis block;
        block.ambient_dim = spec.p * d;
        for (int copy = 0; copy < spec.p; ++copy)
            for (int j = 0; j < d; ++j) {
                std::vector<Int> v(spec.p * d, Int(0));
                for (int c = 0; c < d; ++c) v[copy * d + c] = e.w[j][c];
                block.generators.push_back(std::move(v));
            }
        LatticeIndex idx = lattice_index(block, LatticeBasis::standard(spec.p * d));
        if (!idx.finite) throw Error("delta: block lattice has infinite index");
        e.delta = idx.value;
        // determinant shortcut as a cross-check
        IntMatrix W = IntMatrix::from_columns(e.w);
        Int shortcut = pow(abs(det(W)), static_cast<unsigned long>(spec.p));
        if (shortcut != e.delta) throw Error("delta: block index disagrees with det^p");
        out.per_basis.push_back(std::move(e));
    }
    out.delta = 1;
    for (const auto& e : out.per_basis) out.delta = lcm(out.delta, e.delta);
    return out;
}

// delta for a general independent support X: the index
// [G^(X) : sum_i stab_{G^(X)}(X minus x_i)] computed in the quotient
// lattice Z^d / stab(X), raised to the p-th power for the p block copies.
inline Int delta_of_support(const ArrangementSpec& spec, const std::vector<int>& X) {
    SpecReport rep = validate_spec(spec);
    if (!rep.essential) throw NotEssential("delta_of_support: arrangement is not essential");
    if (spec.p < 1) throw NotRefined("delta_of_support: p = 0 carries no torsion");
    if (X.empty()) throw NotIndependent("delta_of_support: empty support");
    unsigned mask = 0;
    for (int i : X) mask |= (1u << i);
    const int k = static_cast<int>(X.size());
    if (subset_rank(spec, mask) != k)
        throw NotIndependent("delta_of_support: support is dependent");

    // stab(X) = Z^d cap the common kernel; saturated of rank d - k
    LatticeBasis stab = kernel_lattice(spec.rows_of(mask));
    // quotient coordinates: complete stab to a basis of Z^d through SNF
    // of its column matrix (divisors are all 1 since the kernel is pure)
    std::vector<std::vector<Int>> quot_rows;  // k rows of the projection Z^d -> Z^k
    {
        IntMatrix B = stab.as_columns();
        SmithDecomposition s = smith_normal_form(B);
        int r = s.rank();
        for (const Int& dv : s.divisors)
            if (dv != 0 && dv != 1) throw Error("delta_of_support: stabilizer is not pure");
        // rows r..d-1 of U give coordinates transverse to the stabilizer
        for (int i = r; i < spec.d; ++i) quot_rows.push_back(s.U.row(i));
    }
    auto project = [&](const std::vector<Int>& v) {
        std::vector<Int> out;
        out.reserve(quot_rows.size());
        for (const auto& row : quot_rows) {
            Int acc(0);
            for (int c = 0; c < spec.d; ++c) acc += row[c] * v[c];
            out.push_back(std::move(acc));
        }
        return out;
    };

    // H = sum over x in X of the image of stab(X minus x); its index in the
    // quotient lattice is the torsion order of the matrix of all images
    std::vector<std::vector<Int>> images;
    for (int x : X) {
        unsigned rest = mask & ~(1u << x);
        LatticeBasis sx = kernel_lattice(spec.rows_of(rest));
        for (const auto& g : sx.generators) images.push_back(project(g));
    }
    IntMatrix all = IntMatrix::from_columns(images);
    if (rank(all) != k) throw Error("delta_of_support: summands do not span the quotient");
    Int idx = torsion_order(all);
    return pow(idx, static_cast<unsigned long>(spec.p));
}

struct BettiPredictions {
    int d = 0;
    Int layers_top;       // T(0,0): rank of the top homology of the layer poset minus bottom
    Int independence_top; // T(0,1): rank of the top homology of the independence poset minus bottom
    bool layers_bounded_above = false;
    Int layers_proper_top;  // T(1,0): top homology of the proper part, when bounded above
};

inline BettiPredictions betti_predictions(const QuotientSemimatroid& q) {
    Polynomial2 t = tutte(q);
    BettiPredictions b;
    b.d = q.d;
    b.layers_top = t.eval(Int(0), Int(0));
    b.independence_top = t.eval(Int(0), Int(1));
    // bounded above <=> a single component of full support at top rank
    Int top_layers(0);
    for (const auto& c : q.central)
        if (c.rho == q.d && c.mask == (1u << q.ground) - 1) top_layers += c.m;
    b.layers_bounded_above = (top_layers == 1) && q.ground > 0;
    b.layers_proper_top = t.eval(Int(1), Int(0));
    return b;
}

}  // namespace strata
