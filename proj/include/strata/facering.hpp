// The face-ring presentation of a finite simplicial poset: one variable per
// nonbottom element graded by rank, relations x_p x_q = x_{p^q} sum of the
// minimal common upper bounds. Hilbert functions are computed degreewise by
// exact row reduction (characteristic 0 or p), with no Groebner machinery.
// Also: the order-ideal lattice identities and the invariant-ring comparison
// for translative actions.
#pragma once

#include <algorithm>
#include <map>
#include <set>
#include <string>
#include <vector>

#include "strata/action.hpp"
#include "strata/linalg.hpp"
#include "strata/poset.hpp"

namespace strata {

struct NotOrderIdeal : Error {
    explicit NotOrderIdeal(const std::string& w) : Error(w) {}
};
struct DegreeTooLarge : Error {
    explicit DegreeTooLarge(const std::string& w) : Error(w) {}
};

struct GradedPresentation {
    struct Var {
        std::string name;
        int degree;
    };
    using Mono = std::vector<int>;         // exponents, indexed like vars
    using Poly = std::map<Mono, Int>;      // monomial -> coefficient

    std::vector<Var> vars;
    std::vector<Poly> generators;          // each homogeneous in the grading

    int weighted_degree(const Mono& m) const {
        int d = 0;
        for (size_t i = 0; i < vars.size(); ++i) d += m[i] * vars[i].degree;
        return d;
    }

    int generator_degree(const Poly& g) const {
        if (g.empty()) return 0;
        return weighted_degree(g.begin()->first);
    }
};

namespace detail {

// All exponent vectors of weighted degree k, lexicographic in var order.
inline void weighted_monomials_rec(const std::vector<GradedPresentation::Var>& vars,
                                   size_t i, int remaining,
                                   GradedPresentation::Mono& cur,
                                   std::vector<GradedPresentation::Mono>& out) {
    if (i == vars.size()) {
        if (remaining == 0) out.push_back(cur);
        return;
    }
    int dv = vars[i].degree;
    for (int e = 0; dv * e <= remaining; ++e) {
        cur[i] = e;
        weighted_monomials_rec(vars, i + 1, remaining - dv * e, cur, out);
        if (dv == 0) break;  // degree-0 vars would loop (not produced here)
    }
    cur[i] = 0;
}

inline std::vector<GradedPresentation::Mono> weighted_monomials(
    const std::vector<GradedPresentation::Var>& vars, int k) {
    std::vector<GradedPresentation::Mono> out;
    GradedPresentation::Mono cur(vars.size(), 0);
    weighted_monomials_rec(vars, 0, k, cur, out);
    return out;
}

}  // namespace detail

// Stanley's ideal of a simplicial poset relative to an order ideal: x_p for
// p outside the ideal, and x_p x_q - y_{p ^ q} * sum of minimal common upper
// bounds (inside the ideal) for incomparable p, q in the ideal, with the
// bottom variable dehomogenized to 1.
inline GradedPresentation stanley_ideal(const FinitePoset& P, std::vector<int> ideal) {
    auto chk = is_simplicial(P);
    if (!chk.simplicial)
        throw NotSimplicial("stanley_ideal: poset is not simplicial (witness " + chk.witness + ")");
    const int bot = *P.bottom();

    std::sort(ideal.begin(), ideal.end());
    ideal.erase(std::unique(ideal.begin(), ideal.end()), ideal.end());
    std::vector<char> in_ideal(P.size(), 0);
    for (int e : ideal) in_ideal[e] = 1;
    if (ideal.empty() || !in_ideal[bot])
        throw NotOrderIdeal("stanley_ideal: ideal must contain the bottom element");
    for (int e : ideal)
        for (int z = 0; z < P.size(); ++z)
            if (P.leq(z, e) && !in_ideal[z])
                throw NotOrderIdeal("stanley_ideal: set is not downward closed at " + P.name(z));

    GradedPresentation pres;
    std::vector<int> var_elem;  // poset element per variable
    for (int e = 0; e < P.size(); ++e)
        if (e != bot) var_elem.push_back(e);
    std::sort(var_elem.begin(), var_elem.end(),
              [&](int a, int b) { return P.name(a) < P.name(b); });
    std::vector<int> var_of(P.size(), -1);
    for (size_t i = 0; i < var_elem.size(); ++i) {
        var_of[var_elem[i]] = static_cast<int>(i);
        pres.vars.push_back({P.name(var_elem[i]), P.rank(var_elem[i])});
    }
    const size_t nv = pres.vars.size();

    auto mono_of = [&](std::initializer_list<int> elems) {
        GradedPresentation::Mono m(nv, 0);
        for (int e : elems) m[var_of[e]] += 1;
        return m;
    };

    // x_p for p outside the ideal
    for (int e = 0; e < P.size(); ++e) {
        if (e == bot || in_ideal[e]) continue;
        GradedPresentation::Poly g;
        g[mono_of({e})] = 1;
        pres.generators.push_back(std::move(g));
    }

    // relations for incomparable pairs inside the ideal
    for (size_t ia = 0; ia < ideal.size(); ++ia)
        for (size_t ib = ia + 1; ib < ideal.size(); ++ib) {
            int p = ideal[ia], q = ideal[ib];
            if (p == bot || q == bot) continue;
            if (P.leq(p, q) || P.leq(q, p)) continue;
            // minimal common upper bounds within the ideal
            std::vector<int> ubs;
            for (int z : ideal)
                if (P.leq(p, z) && P.leq(q, z)) ubs.push_back(z);
            std::vector<int> minimal;
            for (int z : ubs) {
                bool is_min = true;
                for (int w : ubs)
                    if (w != z && P.leq(w, z)) { is_min = false; break; }
                if (is_min) minimal.push_back(z);
            }
            GradedPresentation::Poly g;
            g[mono_of({p, q})] = 1;
            if (!minimal.empty()) {
                // the meet exists whenever p and q have a common upper bound
                std::vector<int> lbs;
                for (int z = 0; z < P.size(); ++z)
                    if (P.leq(z, p) && P.leq(z, q)) lbs.push_back(z);
                int meet = -1;
                for (int z : lbs) {
                    bool is_max = true;
                    for (int w : lbs)
                        if (w != z && P.leq(z, w)) { is_max = false; break; }
                    if (is_max) {
                        if (meet >= 0) throw Error("stanley_ideal: meet is not unique");
                        meet = z;
                    }
                }
                for (int z : minimal) {
                    GradedPresentation::Mono m =
                        meet == bot ? mono_of({z}) : mono_of({meet, z});
                    g[m] -= 1;
                    if (g[m] == 0) g.erase(m);
                }
            }
            if (!g.empty()) pres.generators.push_back(std::move(g));
        }
    // sanity: homogeneity in the grading
    for (const auto& g : pres.generators) {
        int deg = pres.generator_degree(g);
        for (const auto& [m, c] : g)
            if (pres.weighted_degree(m) != deg)
                throw Error("stanley_ideal: generator is not homogeneous");
    }
    return pres;
}

inline GradedPresentation stanley_ideal(const FinitePoset& P) {
    std::vector<int> all(P.size());
    for (int i = 0; i < P.size(); ++i) all[i] = i;
    return stanley_ideal(P, std::move(all));
}

struct HilbertTable {
    long characteristic = 0;
    std::vector<Int> values;  // degrees 0..D
};

namespace detail {

// Degree-k span of the ideal inside the monomial basis, as a dense row
// space (used where subspace sums and intersections are needed).
template <typename F>
RowSpace<F> ideal_span(const F& field, const GradedPresentation& pres, int k,
                       const std::vector<GradedPresentation::Mono>& basis,
                       const std::map<GradedPresentation::Mono, int>& index) {
    RowSpace<F> space(field, static_cast<int>(basis.size()));
    for (const auto& g : pres.generators) {
        int e = pres.generator_degree(g);
        if (e > k) continue;
        for (const auto& mult : weighted_monomials(pres.vars, k - e)) {
            std::vector<typename F::Elem> row(basis.size(), field.zero());
            for (const auto& [m, c] : g) {
                GradedPresentation::Mono prod(m.size());
                for (size_t i = 0; i < m.size(); ++i) prod[i] = m[i] + mult[i];
                row[index.at(prod)] = field.add(row[index.at(prod)], field.from_int(c));
            }
            space.insert(std::move(row));
        }
    }
    return space;
}

// Sparse variant for plain rank counting.
template <typename F>
SparseRowSpace<F> ideal_span_sparse(const F& field, const GradedPresentation& pres,
                                    int k,
                                    const std::map<GradedPresentation::Mono, int>& index) {
    SparseRowSpace<F> space(field);
    for (const auto& g : pres.generators) {
        int e = pres.generator_degree(g);
        if (e > k) continue;
        for (const auto& mult : weighted_monomials(pres.vars, k - e)) {
            typename SparseRowSpace<F>::SparseVec row;
            for (const auto& [m, c] : g) {
                GradedPresentation::Mono prod(m.size());
                for (size_t i = 0; i < m.size(); ++i) prod[i] = m[i] + mult[i];
                auto val = field.from_int(c);
                if (!field.is_zero(val)) row.emplace_back(index.at(prod), val);
            }
            std::sort(row.begin(), row.end(),
                      [](const auto& a, const auto& b) { return a.first < b.first; });
            space.insert(std::move(row));
        }
    }
    return space;
}

template <typename F>
HilbertTable hilbert_with_field(const F& field, long characteristic,
                                const GradedPresentation& pres, int D) {
    HilbertTable t;
    t.characteristic = characteristic;
    for (int k = 0; k <= D; ++k) {
        auto basis = weighted_monomials(pres.vars, k);
        std::map<GradedPresentation::Mono, int> index;
        for (size_t i = 0; i < basis.size(); ++i) index[basis[i]] = static_cast<int>(i);
        auto span = ideal_span_sparse(field, pres, k, index);
        t.values.push_back(Int(static_cast<long>(basis.size()) - span.dim()));
    }
    return t;
}

}  // namespace detail

inline HilbertTable hilbert_function(const GradedPresentation& pres, int D,
                                     long characteristic) {
    if (D > 12) throw DegreeTooLarge("hilbert_function: degree bound exceeds 12");
    if (characteristic == 0)
        return detail::hilbert_with_field(RationalField{}, 0, pres, D);
    return detail::hilbert_with_field(PrimeField(characteristic), characteristic, pres, D);
}

// Coefficients of sum_i f_{i-1} t^i / (1-t)^i up to degree D.
inline HilbertTable hilbert_from_f(const FinitePoset& P, int D) {
    std::vector<Int> f = f_vector(P);
    HilbertTable t;
    t.characteristic = 0;
    t.values.push_back(Int(1));
    for (int k = 1; k <= D; ++k) {
        Int acc(0);
        for (size_t i = 1; i < f.size(); ++i)
            if (k >= static_cast<int>(i))
                acc += f[i] * binomial(k - 1, static_cast<long>(i) - 1);
        t.values.push_back(acc);
    }
    return t;
}

struct IdealLatticeReport {
    struct Degree {
        bool sum_ok = false;           // I_a + I_b = I_{a cap b}
        bool intersection_ok = false;  // I_a cap I_b = I_{a cup b}
        bool decomposition_ok = false; // I_a = cap over q in a of I_(q)
        bool reversal_ok = false;      // a subset b => I_b subset I_a
    };
    std::vector<Degree> degrees;  // 0..D

    bool all_hold() const {
        for (const auto& d : degrees)
            if (!d.sum_ok || !d.intersection_ok || !d.decomposition_ok || !d.reversal_ok)
                return false;
        return true;
    }
};

namespace detail {

inline std::vector<int> principal_ideal(const FinitePoset& P, int q) {
    std::vector<int> out;
    for (int z = 0; z < P.size(); ++z)
        if (P.leq(z, q)) out.push_back(z);
    return out;
}

template <typename F>
IdealLatticeReport ideal_lattice_with_field(const F& field, const FinitePoset& P,
                                            const std::vector<int>& a,
                                            const std::vector<int>& b, int D) {
    std::set<int> sa(a.begin(), a.end()), sb(b.begin(), b.end());
    std::vector<int> cap, cup;
    for (int z = 0; z < P.size(); ++z) {
        if (sa.count(z) && sb.count(z)) cap.push_back(z);
        if (sa.count(z) || sb.count(z)) cup.push_back(z);
    }
    GradedPresentation ia = stanley_ideal(P, a);
    GradedPresentation ib = stanley_ideal(P, b);
    GradedPresentation icap = stanley_ideal(P, cap);
    GradedPresentation icup = stanley_ideal(P, cup);
    std::vector<GradedPresentation> principals;
    for (int q : a) principals.push_back(stanley_ideal(P, principal_ideal(P, q)));

    bool a_sub_b = std::includes(sb.begin(), sb.end(), sa.begin(), sa.end());

    IdealLatticeReport rep;
    for (int k = 0; k <= D; ++k) {
        auto basis = weighted_monomials(ia.vars, k);
        std::map<GradedPresentation::Mono, int> index;
        for (size_t i = 0; i < basis.size(); ++i) index[basis[i]] = static_cast<int>(i);
        auto span_a = ideal_span(field, ia, k, basis, index);
        auto span_b = ideal_span(field, ib, k, basis, index);
        auto span_cap = ideal_span(field, icap, k, basis, index);
        auto span_cup = ideal_span(field, icup, k, basis, index);

        IdealLatticeReport::Degree deg;
        deg.sum_ok = span_a.sum(span_b).same_space(span_cap);
        deg.intersection_ok = span_a.intersect(span_b).same_space(span_cup);
        // I_a = intersection of the principal ideals over elements of a
        RowSpace<F> inter(field, static_cast<int>(basis.size()));
        bool first = true;
        for (const auto& pr : principals) {
            auto sp = ideal_span(field, pr, k, basis, index);
            inter = first ? sp : inter.intersect(sp);
            first = false;
        }
        deg.decomposition_ok = first ? (span_a.dim() == 0) : inter.same_space(span_a);
        deg.reversal_ok = !a_sub_b || span_a.contains_space(span_b);
        rep.degrees.push_back(deg);
    }
    return rep;
}

}  // namespace detail

inline IdealLatticeReport ideal_lattice_check(const FinitePoset& P,
                                              const std::vector<int>& a,
                                              const std::vector<int>& b, int D,
                                              long characteristic) {
    if (D > 12) throw DegreeTooLarge("ideal_lattice_check: degree bound exceeds 12");
    if (characteristic == 0)
        return detail::ideal_lattice_with_field(RationalField{}, P, a, b, D);
    return detail::ideal_lattice_with_field(PrimeField(characteristic), P, a, b, D);
}

struct InvariantReport {
    std::vector<Int> fixed_dims;     // dim of the G-fixed part of (S/I_P)_k
    std::vector<Int> quotient_dims;  // Hilbert values of the quotient poset ring
    bool agree = false;
};

// Characteristic-zero comparison of the invariant ring of the face ring of P
// with the face ring of P/G, degree by degree: the fixed-subspace dimension
// is the average over the group of (fixed monomials minus the trace on the
// degree-k piece of the ideal).
inline InvariantReport invariant_hilbert_check(const PosetAction& action, int D) {
    auto tr = is_translative(action);
    if (!tr.translative)
        throw NotTranslative("invariant_hilbert_check: action is not translative (moves " +
                             tr.p + " to " + tr.gp + " under a bound " + tr.bound + ")");
    const FinitePoset& P = action.poset;
    GradedPresentation pres = stanley_ideal(P);
    FinitePoset Q = quotient_poset(action);
    HilbertTable hq = hilbert_function(stanley_ideal(Q), D, 0);

    // permutation of the variables induced by each group element
    const size_t nv = pres.vars.size();
    std::vector<int> var_of_elem(P.size(), -1);
    for (size_t i = 0; i < nv; ++i) var_of_elem[P.index_of(pres.vars[i].name)] = static_cast<int>(i);
    std::vector<std::vector<int>> var_perm;
    for (const Perm& g : action.group) {
        std::vector<int> vp(nv);
        for (int e = 0; e < P.size(); ++e)
            if (var_of_elem[e] >= 0) vp[var_of_elem[e]] = var_of_elem[g[e]];
        var_perm.push_back(std::move(vp));
    }

    InvariantReport rep;
    RationalField field;
    for (int k = 0; k <= D; ++k) {
        auto basis = detail::weighted_monomials(pres.vars, k);
        std::map<GradedPresentation::Mono, int> index;
        for (size_t i = 0; i < basis.size(); ++i) index[basis[i]] = static_cast<int>(i);
        auto span = detail::ideal_span_sparse(field, pres, k, index);
        Rat total(0);
        for (size_t gi = 0; gi < action.group.size(); ++gi) {
            const auto& vp = var_perm[gi];
            long fixed = 0;
            std::vector<int> mono_image(basis.size());
            for (size_t i = 0; i < basis.size(); ++i) {
                GradedPresentation::Mono img(nv, 0);
                for (size_t v = 0; v < nv; ++v) img[vp[v]] = basis[i][v];
                mono_image[i] = index.at(img);
                if (mono_image[i] == static_cast<int>(i)) ++fixed;
            }
            // trace of g on the ideal span: the basis is in reduced echelon
            // form, so the coordinate of any member along row r is its value
            // at the r-th pivot column
            Rat trace(0);
            for (int r = 0; r < span.dim(); ++r) {
                SparseRowSpace<RationalField>::SparseVec img;
                for (const auto& [col, val] : span.basis()[r])
                    img.emplace_back(mono_image[col], val);
                std::sort(img.begin(), img.end(),
                          [](const auto& a, const auto& b) { return a.first < b.first; });
                if (!span.contains(img))
                    throw Error("invariant_hilbert_check: ideal span is not stable");
                trace += span.at(img, span.pivot(r));
            }
            total += Rat(fixed) - trace;
        }
        Rat avg = total / Rat(static_cast<long>(action.group.size()));
        avg.canonicalize();
        if (avg.get_den() != 1)
            throw Error("invariant_hilbert_check: non-integral fixed dimension");
        rep.fixed_dims.push_back(avg.get_num());
    }
    rep.quotient_dims = hq.values;
    rep.agree = (rep.fixed_dims == rep.quotient_dims);
    return rep;
}

}  // namespace strata
