// Central (p,q)/toric arrangements given by an integer character matrix:
// flats of the column matroid, multiplicities through torsion orders, the
// poset of layers and the independence poset of (support, component) pairs.
//
// Supports are bitmasks over the columns; the desk-scale envelope is n <= 16
// columns (2^n subset enumeration).
#pragma once

#include <algorithm>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include "strata/intmatrix.hpp"
#include "strata/poset.hpp"

namespace strata {

struct ZeroColumn : Error {
    explicit ZeroColumn(const std::string& w) : Error(w) {}
};
struct NotEssential : Error {
    explicit NotEssential(const std::string& w) : Error(w) {}
};
struct NotRefined : Error {
    explicit NotRefined(const std::string& w) : Error(w) {}
};

struct ArrangementSpec {
    int d = 0;   // ambient rank
    int n = 0;   // number of characters
    int p = 0;   // refinement exponent: 0 linear, 1 toric, 2 elliptic-type, ...
    int q = 0;   // carried for documentation; combinatorially inert
    IntMatrix matrix;  // d x n, columns are the characters a_1..a_n

    std::vector<Int> column(int i) const { return matrix.column(i); }

    // |X| x d matrix whose rows are the characters indexed by the mask
    IntMatrix rows_of(unsigned mask) const {
        std::vector<std::vector<Int>> rows;
        for (int i = 0; i < n; ++i)
            if (mask & (1u << i)) rows.push_back(matrix.column(i));
        IntMatrix m(static_cast<int>(rows.size()), d);
        for (size_t r = 0; r < rows.size(); ++r)
            for (int c = 0; c < d; ++c) m.at(static_cast<int>(r), c) = rows[r][c];
        return m;
    }
};

struct SpecReport {
    int rank = 0;
    bool essential = false;
    bool refined = false;  // granted only when essential and p >= 1
};

inline SpecReport validate_spec(const ArrangementSpec& spec) {
    if (spec.n > 16) throw Error("validate_spec: more than 16 characters unsupported");
    if (spec.d != spec.matrix.rows() || spec.n != spec.matrix.cols())
        throw Error("validate_spec: matrix shape disagrees with (d, n)");
    for (int j = 0; j < spec.n; ++j) {
        bool zero = true;
        for (int i = 0; i < spec.d; ++i)
            if (spec.matrix.at(i, j) != 0) { zero = false; break; }
        if (zero) throw ZeroColumn("validate_spec: zero column " + std::to_string(j + 1));
    }
    SpecReport r;
    r.rank = rank(spec.matrix);
    r.essential = (r.rank == spec.d);
    r.refined = r.essential && spec.p >= 1;
    return r;
}

inline int subset_rank(const ArrangementSpec& spec, unsigned mask) {
    if (mask == 0) return 0;
    return rank(spec.rows_of(mask));
}

// Number of connected components over the support: 1 for linear (p = 0),
// otherwise the torsion order of the chosen columns.
inline Int multiplicity(const ArrangementSpec& spec, unsigned mask) {
    if (spec.p == 0 || mask == 0) return 1;
    return torsion_order(spec.rows_of(mask));
}

// { i : a_i lies in the Q-span of the columns of X }
inline unsigned closure(const ArrangementSpec& spec, unsigned mask) {
    int r = subset_rank(spec, mask);
    unsigned cl = mask;
    for (int i = 0; i < spec.n; ++i) {
        if (cl & (1u << i)) continue;
        if (subset_rank(spec, mask | (1u << i)) == r) cl |= (1u << i);
    }
    return cl;
}

struct Flat {
    unsigned mask;
    int rank;
};

inline std::vector<Flat> flats(const ArrangementSpec& spec) {
    std::map<unsigned, int> seen;
    for (unsigned mask = 0; mask < (1u << spec.n); ++mask) {
        unsigned cl = closure(spec, mask);
        if (!seen.count(cl)) seen[cl] = subset_rank(spec, cl);
    }
    std::vector<Flat> out;
    for (auto& [m, r] : seen) out.push_back({m, r});
    std::sort(out.begin(), out.end(), [](const Flat& a, const Flat& b) {
        if (a.rank != b.rank) return a.rank < b.rank;
        return a.mask < b.mask;
    });
    return out;
}

struct Layer {
    unsigned support;
    std::vector<Rat> component;
};

namespace detail {

inline std::string support_str(unsigned mask, int n) {
    std::string s = "{";
    bool first = true;
    for (int i = 0; i < n; ++i)
        if (mask & (1u << i)) {
            if (!first) s += ",";
            s += std::to_string(i + 1);
            first = false;
        }
    return s + "}";
}

inline std::string layer_name(const Layer& l, int n) {
    std::string s = support_str(l.support, n) + "@(";
    for (size_t i = 0; i < l.component.size(); ++i) {
        if (i) s += ",";
        s += to_string(l.component[i]);
    }
    return s + ")";
}

// Reusable integer solver for one support: decides membership of w in the
// integer column span of the |X| x d character matrix.
struct SupportSolver {
    IntMatrix B;
    SmithDecomposition s;

    explicit SupportSolver(IntMatrix m) : B(std::move(m)), s(smith_normal_form(B)) {}

    bool contains(const std::vector<Int>& w) const {
        std::vector<Int> u = s.U.apply(w);
        const int mn = static_cast<int>(s.divisors.size());
        for (int i = 0; i < B.rows(); ++i) {
            if (i < mn && s.divisors[i] != 0) {
                if (u[i] % s.divisors[i] != 0) return false;
            } else if (u[i] != 0) {
                return false;
            }
        }
        return true;
    }
};

}  // namespace detail

// Containment test between components: (X, v) <= (X', v') iff X subset X'
// and A_X (v' - v) lies in A_X Z^d.
inline bool component_contains(const ArrangementSpec& spec, unsigned sub_mask,
                               const std::vector<Rat>& v, unsigned super_mask,
                               const std::vector<Rat>& vp) {
    if ((sub_mask & ~super_mask) != 0) throw Error("component_contains: supports not nested");
    if (sub_mask == 0) return true;
    IntMatrix A = spec.rows_of(sub_mask);
    std::vector<Int> w(A.rows());
    int r = 0;
    for (int i = 0; i < spec.n; ++i) {
        if (!(sub_mask & (1u << i))) continue;
        Rat acc(0);
        for (int c = 0; c < spec.d; ++c) acc += Rat(spec.matrix.at(c, i)) * (vp[c] - v[c]);
        acc.canonicalize();
        if (acc.get_den() != 1)
            throw Error("component_contains: pairing is not integral");
        w[r++] = acc.get_num();
    }
    return detail::SupportSolver(A).contains(w);
}

namespace detail {

// Shared builder for the layer and independence posets from an explicit
// (support, component) list; the order is support inclusion together with
// component containment.
inline FinitePoset build_component_poset(const ArrangementSpec& spec,
                                         const std::vector<Layer>& given,
                                         const std::vector<int>& ranks) {
    const std::vector<Layer>& layers = given;
    const std::vector<int>& layer_rank = ranks;
    std::map<unsigned, SupportSolver> solver;
    for (const Layer& l : layers)
        if (!solver.count(l.support)) solver.emplace(l.support, SupportSolver(spec.rows_of(l.support)));
    const int m = static_cast<int>(layers.size());

    auto leq = [&](int a, int b) {
        const Layer& la = layers[a];
        const Layer& lb = layers[b];
        if ((la.support & ~lb.support) != 0) return false;
        if (la.support == 0) return true;
        // pair the characters of the sub-support against the difference
        std::vector<Int> w;
        for (int i = 0; i < spec.n; ++i) {
            if (!(la.support & (1u << i))) continue;
            Rat acc(0);
            for (int c = 0; c < spec.d; ++c)
                acc += Rat(spec.matrix.at(c, i)) * (lb.component[c] - la.component[c]);
            acc.canonicalize();
            if (acc.get_den() != 1) return false;
            w.push_back(acc.get_num());
        }
        return solver.at(la.support).contains(w);
    };

    // order matrix, then covers via the rank grading
    std::vector<std::vector<char>> ord(m, std::vector<char>(m, 0));
    for (int a = 0; a < m; ++a)
        for (int b = 0; b < m; ++b)
            if (a != b && layer_rank[a] < layer_rank[b] && leq(a, b)) ord[a][b] = 1;
    std::vector<std::pair<int, int>> covers;
    for (int a = 0; a < m; ++a)
        for (int b = 0; b < m; ++b) {
            if (!ord[a][b]) continue;
            bool direct = true;
            if (layer_rank[b] > layer_rank[a] + 1) {
                for (int z = 0; z < m && direct; ++z)
                    if (z != a && z != b && ord[a][z] && ord[z][b]) direct = false;
            }
            if (direct) covers.emplace_back(a, b);
        }
    std::vector<std::string> names;
    names.reserve(m);
    for (const Layer& l : layers) names.push_back(layer_name(l, spec.n));
    return FinitePoset(std::move(names), std::move(covers));
}

}  // namespace detail

// Poset of layers: connected components of the intersections, each recorded
// once under its exact support (the set of ALL characters integral on the
// component). Supports need not be Q-closed: a component of a dependent
// intersection survives as its own layer whenever the extra dependent
// characters pair non-integrally against it.
inline FinitePoset layers_poset(const ArrangementSpec& spec) {
    validate_spec(spec);
    std::vector<Layer> layers;
    std::vector<int> ranks;
    for (unsigned mask = 0; mask < (1u << spec.n); ++mask) {
        int r = subset_rank(spec, mask);
        std::vector<std::vector<Rat>> reps;
        if (spec.p == 0 || mask == 0) {
            reps.assign(1, std::vector<Rat>(spec.d, Rat(0)));
            // p = 0: the single layer per subset lives at the Q-closure
            if (closure(spec, mask) != mask) continue;
        } else {
            reps = component_representatives(spec.rows_of(mask));
        }
        unsigned span_closure = closure(spec, mask);
        for (auto& v : reps) {
            // exact support: characters in the Q-span that pair integrally
            unsigned support = mask;
            for (int j = 0; j < spec.n; ++j) {
                if (mask & (1u << j)) continue;
                if (!(span_closure & (1u << j))) continue;
                Rat acc(0);
                for (int c = 0; c < spec.d; ++c)
                    acc += Rat(spec.matrix.at(c, j)) * v[c];
                acc.canonicalize();
                if (acc.get_den() == 1) support |= (1u << j);
            }
            if (support != mask) continue;  // recorded at its full support
            layers.push_back(Layer{mask, std::move(v)});
            ranks.push_back(r);
        }
    }
    // deterministic element order: by rank, then support, then component
    std::vector<size_t> order(layers.size());
    for (size_t i = 0; i < order.size(); ++i) order[i] = i;
    std::sort(order.begin(), order.end(), [&](size_t a, size_t b) {
        if (ranks[a] != ranks[b]) return ranks[a] < ranks[b];
        if (layers[a].support != layers[b].support) return layers[a].support < layers[b].support;
        return layers[a].component < layers[b].component;
    });
    std::vector<Layer> sorted_layers;
    std::vector<int> sorted_ranks;
    for (size_t i : order) {
        sorted_layers.push_back(layers[i]);
        sorted_ranks.push_back(ranks[i]);
    }
    return detail::build_component_poset(spec, sorted_layers, sorted_ranks);
}

// Independence poset: (independent subset, component) pairs; always passes
// is_simplicial for these translative arrangements.
inline FinitePoset independence_poset(const ArrangementSpec& spec) {
    validate_spec(spec);
    std::vector<Layer> layers;
    std::vector<int> ranks;
    for (unsigned mask = 0; mask < (1u << spec.n); ++mask) {
        int k = __builtin_popcount(mask);
        if (k > spec.d) continue;
        if (subset_rank(spec, mask) != k) continue;
        std::vector<std::vector<Rat>> reps;
        if (spec.p == 0 || mask == 0)
            reps.assign(1, std::vector<Rat>(spec.d, Rat(0)));
        else
            reps = component_representatives(spec.rows_of(mask));
        for (auto& v : reps) {
            layers.push_back(Layer{mask, std::move(v)});
            ranks.push_back(k);
        }
    }
    return detail::build_component_poset(spec, layers, ranks);
}

}  // namespace strata
