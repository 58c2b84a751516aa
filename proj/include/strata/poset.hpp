// Finite posets presented by cover relations: rank and gradedness, Moebius
// function, f/h/characteristic polynomials of simplicial posets, order
// complexes and Euler-characteristic identities.
//
// Elements are opaque string identifiers; all structure lives in the covers.
// Construction validates acyclicity and irredundancy of the cover relation
// and precomputes the order relation, so a FinitePoset value is immutable
// and cheap to query afterwards.
#pragma once

#include <algorithm>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "strata/numbers.hpp"
#include "strata/polynomial.hpp"
#include "strata/simplicial.hpp"

namespace strata {

struct CycleDetected : Error {
    explicit CycleDetected(const std::string& w) : Error(w) {}
};
struct RedundantCover : Error {
    explicit RedundantCover(const std::string& w) : Error(w) {}
};
struct NotComparable : Error {
    explicit NotComparable(const std::string& w) : Error(w) {}
};
struct NotSimplicial : Error {
    explicit NotSimplicial(const std::string& w) : Error(w) {}
};
struct NotGraded : Error {
    explicit NotGraded(const std::string& w) : Error(w) {}
};
struct NotBoundedBelow : Error {
    explicit NotBoundedBelow(const std::string& w) : Error(w) {}
};

class FinitePoset {
public:
    FinitePoset() = default;

    FinitePoset(std::vector<std::string> elements,
                const std::vector<std::pair<std::string, std::string>>& covers)
        : names_(std::move(elements)) {
        for (int i = 0; i < size(); ++i) {
            if (index_.count(names_[i])) throw Error("FinitePoset: duplicate element " + names_[i]);
            index_[names_[i]] = i;
        }
        std::vector<std::pair<int, int>> cv;
        cv.reserve(covers.size());
        for (const auto& [a, b] : covers) cv.emplace_back(index_of(a), index_of(b));
        init(cv);
    }

    FinitePoset(std::vector<std::string> elements, std::vector<std::pair<int, int>> covers)
        : names_(std::move(elements)) {
        for (int i = 0; i < size(); ++i) {
            if (index_.count(names_[i])) throw Error("FinitePoset: duplicate element " + names_[i]);
            index_[names_[i]] = i;
        }
        init(std::move(covers));
    }

    int size() const { return static_cast<int>(names_.size()); }
    const std::string& name(int i) const { return names_[i]; }
    const std::vector<std::string>& names() const { return names_; }

    int index_of(const std::string& n) const {
        auto it = index_.find(n);
        if (it == index_.end()) throw Error("FinitePoset: unknown element " + n);
        return it->second;
    }

    bool leq(int a, int b) const { return up_[a][b]; }
    bool lt(int a, int b) const { return a != b && up_[a][b]; }

    const std::vector<std::pair<int, int>>& cover_pairs() const { return covers_; }

    std::vector<int> covers_of(int x) const {  // elements covering x
        std::vector<int> out;
        for (const auto& [a, b] : covers_)
            if (a == x) out.push_back(b);
        return out;
    }
    std::vector<int> covered_by(int x) const {  // elements covered by x
        std::vector<int> out;
        for (const auto& [a, b] : covers_)
            if (b == x) out.push_back(a);
        return out;
    }

    std::optional<int> bottom() const { return bottom_; }
    bool has_bottom() const { return bottom_.has_value(); }

    std::optional<int> top() const {
        std::optional<int> t;
        for (int i = 0; i < size(); ++i) {
            bool maximal = true;
            for (int j = 0; j < size(); ++j)
                if (lt(i, j)) { maximal = false; break; }
            if (maximal) {
                if (t) return std::nullopt;
                t = i;
            }
        }
        return t;
    }

    // length of the longest chain in P_{<= x}, i.e. the derived rank
    int rank(int x) const { return height_[x]; }

    int length() const { return length_; }

    bool is_graded() const { return graded_; }

    std::vector<int> minimal_elements() const {
        std::vector<int> out;
        for (int i = 0; i < size(); ++i)
            if (covered_by(i).empty()) out.push_back(i);
        return out;
    }
    std::vector<int> maximal_elements() const {
        std::vector<int> out;
        for (int i = 0; i < size(); ++i)
            if (covers_of(i).empty()) out.push_back(i);
        return out;
    }

    // Induced subposet; covers are recomputed from the restricted order.
    FinitePoset induced(const std::vector<int>& keep) const {
        std::vector<std::string> nm;
        nm.reserve(keep.size());
        std::map<int, int> re;
        for (int k : keep) {
            re[k] = static_cast<int>(nm.size());
            nm.push_back(names_[k]);
        }
        std::vector<std::pair<int, int>> cv;
        for (size_t ai = 0; ai < keep.size(); ++ai)
            for (size_t bi = 0; bi < keep.size(); ++bi) {
                int a = keep[ai], b = keep[bi];
                if (!lt(a, b)) continue;
                bool is_cover = true;
                for (int z : keep)
                    if (lt(a, z) && lt(z, b)) { is_cover = false; break; }
                if (is_cover) cv.emplace_back(re[a], re[b]);
            }
        return FinitePoset(std::move(nm), std::move(cv));
    }

    FinitePoset without_bottom() const {
        if (!bottom_) throw NotBoundedBelow("without_bottom: poset has no bottom element");
        std::vector<int> keep;
        for (int i = 0; i < size(); ++i)
            if (i != *bottom_) keep.push_back(i);
        return induced(keep);
    }

    FinitePoset adjoin_top(const std::string& top_name = "1^") const {
        std::vector<std::string> nm = names_;
        nm.push_back(top_name);
        int t = size();
        std::vector<std::pair<int, int>> cv = covers_;
        for (int m : maximal_elements()) cv.emplace_back(m, t);
        if (size() == 0) { /* top over nothing */ }
        return FinitePoset(std::move(nm), std::move(cv));
    }

    // Remove the bottom and, when present, the top element.
    FinitePoset proper_part() const {
        if (!bottom_) throw NotBoundedBelow("proper_part: poset has no bottom element");
        auto t = top();
        std::vector<int> keep;
        for (int i = 0; i < size(); ++i) {
            if (i == *bottom_) continue;
            if (t && i == *t) continue;
            keep.push_back(i);
        }
        return induced(keep);
    }

    FinitePoset interval(int a, int b) const {
        if (!leq(a, b)) throw NotComparable("interval: elements not comparable");
        std::vector<int> keep;
        for (int z = 0; z < size(); ++z)
            if (leq(a, z) && leq(z, b)) keep.push_back(z);
        return induced(keep);
    }

    FinitePoset open_interval(int a, int b) const {
        if (!leq(a, b)) throw NotComparable("open_interval: elements not comparable");
        std::vector<int> keep;
        for (int z = 0; z < size(); ++z)
            if (z != a && z != b && leq(a, z) && leq(z, b)) keep.push_back(z);
        return induced(keep);
    }

    FinitePoset upper_set(int x) const {  // P_{> x}
        std::vector<int> keep;
        for (int z = 0; z < size(); ++z)
            if (lt(x, z)) keep.push_back(z);
        return induced(keep);
    }

    FinitePoset lower_set(int x) const {  // P_{< x}
        std::vector<int> keep;
        for (int z = 0; z < size(); ++z)
            if (lt(z, x)) keep.push_back(z);
        return induced(keep);
    }

    std::vector<int> atoms() const {
        if (!bottom_) throw NotBoundedBelow("atoms: poset has no bottom element");
        return covers_of(*bottom_);
    }

private:
    void init(std::vector<std::pair<int, int>> covers) {
        std::sort(covers.begin(), covers.end());
        covers.erase(std::unique(covers.begin(), covers.end()), covers.end());
        covers_ = std::move(covers);
        const int n = size();
        for (const auto& [a, b] : covers_) {
            if (a < 0 || a >= n || b < 0 || b >= n) throw Error("FinitePoset: cover index out of range");
            if (a == b) throw CycleDetected("FinitePoset: self-cover at " + names_[a]);
        }
        // topological order (Kahn)
        std::vector<int> indeg(n, 0);
        std::vector<std::vector<int>> adj(n);
        for (const auto& [a, b] : covers_) {
            adj[a].push_back(b);
            ++indeg[b];
        }
        std::vector<int> order;
        std::vector<int> q;
        for (int i = 0; i < n; ++i)
            if (indeg[i] == 0) q.push_back(i);
        while (!q.empty()) {
            int x = q.back();
            q.pop_back();
            order.push_back(x);
            for (int y : adj[x])
                if (--indeg[y] == 0) q.push_back(y);
        }
        if (static_cast<int>(order.size()) != n)
            throw CycleDetected("FinitePoset: cover relation has a cycle");

        // reachability: up_[a][b] <=> a <= b
        up_.assign(n, std::vector<char>(n, 0));
        for (auto it = order.rbegin(); it != order.rend(); ++it) {
            int x = *it;
            up_[x][x] = 1;
            for (int y : adj[x])
                for (int b = 0; b < n; ++b)
                    if (up_[y][b]) up_[x][b] = 1;
        }

        // irredundancy: no cover implied by transitivity
        for (const auto& [a, b] : covers_)
            for (int z : adj[a])
                if (z != b && up_[z][b])
                    throw RedundantCover("FinitePoset: redundant cover " + names_[a] + " < " + names_[b]);

        // heights (derived ranks) and length
        height_.assign(n, 0);
        length_ = n == 0 ? -1 : 0;
        for (int x : order) {
            for (int y : adj[x]) height_[y] = std::max(height_[y], height_[x] + 1);
        }
        for (int i = 0; i < n; ++i) length_ = std::max(length_, height_[i]);

        // unique minimal element?
        int nmin = 0, bot = -1;
        for (int i = 0; i < n; ++i) {
            bool minimal = true;
            for (const auto& [a, b] : covers_)
                if (b == i) { minimal = false; break; }
            if (minimal) { ++nmin; bot = i; }
        }
        if (nmin == 1) bottom_ = bot;

        // graded: bounded below and every cover raises the height by one
        graded_ = bottom_.has_value();
        for (const auto& [a, b] : covers_)
            if (height_[b] != height_[a] + 1) { graded_ = false; break; }
    }

    std::vector<std::string> names_;
    std::map<std::string, int> index_;
    std::vector<std::pair<int, int>> covers_;
    std::vector<std::vector<char>> up_;
    std::vector<int> height_;
    int length_ = -1;
    std::optional<int> bottom_;
    bool graded_ = false;
};

struct PosetValidation {
    bool bounded_below = false;
    bool bounded_above = false;
    bool graded = false;
    int length = -1;
};

inline PosetValidation validate(const FinitePoset& p) {
    PosetValidation r;
    r.bounded_below = p.has_bottom();
    r.bounded_above = p.top().has_value();
    r.graded = p.is_graded();
    r.length = p.length();
    return r;
}

// Moebius values mu(x, y) for all y, by recursion over the interval [x, .).
inline std::vector<Int> mobius_row(const FinitePoset& p, int x) {
    const int n = p.size();
    std::vector<Int> mu(n, Int(0));
    // process elements of P_{>= x} in order of height
    std::vector<int> zs;
    for (int z = 0; z < n; ++z)
        if (p.leq(x, z)) zs.push_back(z);
    std::sort(zs.begin(), zs.end(), [&](int a, int b) { return p.rank(a) < p.rank(b); });
    for (int z : zs) {
        if (z == x) {
            mu[z] = 1;
            continue;
        }
        Int acc(0);
        for (int w : zs)
            if (p.leq(w, z) && w != z) acc += mu[w];
        mu[z] = -acc;
    }
    return mu;
}

inline Int mobius(const FinitePoset& p, int x, int y) {
    if (!p.leq(x, y)) throw NotComparable("mobius: x is not below y");
    return mobius_row(p, x)[y];
}

// Boolean-interval test for every lower interval; witness is the first
// element (in storage order) whose interval fails.
struct SimplicialCheck {
    bool simplicial = false;
    std::string witness;  // empty when simplicial
};

inline SimplicialCheck is_simplicial(const FinitePoset& p) {
    if (p.size() == 0) return {false, "(empty poset)"};
    if (!p.has_bottom()) {
        auto mins = p.minimal_elements();
        return {false, p.name(mins.size() > 1 ? mins[1] : mins[0])};
    }
    const int n = p.size();
    std::vector<int> atom_of(n, -1);
    std::vector<int> atoms = p.atoms();
    for (size_t i = 0; i < atoms.size(); ++i) atom_of[atoms[i]] = static_cast<int>(i);

    for (int x = 0; x < n; ++x) {
        // atoms below x
        std::vector<int> ax;
        for (int a : atoms)
            if (p.leq(a, x)) ax.push_back(a);
        const int k = static_cast<int>(ax.size());
        if (k != p.rank(x)) return {false, p.name(x)};
        if (k > 30) throw Error("is_simplicial: interval too large");
        // collect the lower interval and its atom sets
        std::vector<int> below;
        for (int z = 0; z < n; ++z)
            if (p.leq(z, x)) below.push_back(z);
        if (static_cast<int>(below.size()) != (1 << k)) return {false, p.name(x)};
        std::set<unsigned> masks;
        std::vector<unsigned> mask_of(below.size());
        for (size_t zi = 0; zi < below.size(); ++zi) {
            unsigned m = 0;
            for (int i = 0; i < k; ++i)
                if (p.leq(ax[i], below[zi])) m |= (1u << i);
            mask_of[zi] = m;
            masks.insert(m);
        }
        if (masks.size() != below.size()) return {false, p.name(x)};
        // order embedding both ways: subset of atoms must imply comparability
        for (size_t i = 0; i < below.size(); ++i)
            for (size_t j = 0; j < below.size(); ++j)
                if ((mask_of[i] & mask_of[j]) == mask_of[i] && !p.leq(below[i], below[j]))
                    return {false, p.name(x)};
    }
    return {true, ""};
}

// f[i] = number of elements of rank i (so f[0] = f_{-1} = 1).
inline std::vector<Int> f_vector(const FinitePoset& p) {
    auto chk = is_simplicial(p);
    if (!chk.simplicial) throw NotSimplicial("f_vector: poset is not simplicial (witness " + chk.witness + ")");
    std::vector<Int> f(p.length() + 1, Int(0));
    for (int i = 0; i < p.size(); ++i) f[p.rank(i)] += 1;
    return f;
}

// h_P(t) = sum_i f_{i-1} t^i (1-t)^{d-i}
inline Polynomial1 h_polynomial(const FinitePoset& p) {
    std::vector<Int> f = f_vector(p);
    const int d = p.length();
    Polynomial1 one_minus_t;
    one_minus_t.set_coeff(0, Int(1));
    one_minus_t.set_coeff(1, Int(-1));
    Polynomial1 h;
    for (int i = 0; i <= d; ++i) {
        Polynomial1 term = Polynomial1::monomial(f[i], i) * one_minus_t.pow(d - i);
        h = h + term;
    }
    return h;
}

// chi_P(t) = sum_x mu(0,x) t^{d - rk(x)}
inline Polynomial1 characteristic_polynomial(const FinitePoset& p) {
    if (!p.has_bottom()) throw NotBoundedBelow("characteristic_polynomial: no bottom element");
    if (!p.is_graded()) throw NotGraded("characteristic_polynomial: poset is not graded");
    const int d = p.length();
    std::vector<Int> mu = mobius_row(p, *p.bottom());
    Polynomial1 chi;
    for (int x = 0; x < p.size(); ++x)
        if (mu[x] != 0) chi = chi + Polynomial1::monomial(mu[x], d - p.rank(x));
    return chi;
}

// Order complex: vertices are the poset elements, faces are the chains.
inline SimplicialComplexData order_complex(const FinitePoset& p) {
    std::vector<Face> maximal_chains;
    std::vector<int> chain;
    const int n = p.size();
    auto dfs = [&](auto&& self, int x) -> void {
        chain.push_back(x);
        std::vector<int> ups = p.covers_of(x);
        if (ups.empty()) {
            maximal_chains.push_back(chain);
        } else {
            for (int y : ups) self(self, y);
        }
        chain.pop_back();
    };
    for (int x = 0; x < n; ++x)
        if (p.covered_by(x).empty()) dfs(dfs, x);
    // chains are faces over vertex set = elements; sort each chain by index
    for (Face& f : maximal_chains) std::sort(f.begin(), f.end());
    return SimplicialComplexData(p.names(), std::move(maximal_chains));
}

// Reduced Euler characteristic of the order complex, by chain counting.
inline Int reduced_euler(const FinitePoset& p) {
    const int n = p.size();
    // count[k][x] = number of (k+1)-element chains with maximum x
    Int total(-1);  // the empty face
    std::vector<Int> cur(n, Int(1));  // 1-element chains
    int sign = 1;                     // (-1)^dim for dimension 0
    for (int len = 1; len <= n; ++len) {
        Int level(0);
        for (int x = 0; x < n; ++x) level += cur[x];
        if (level == 0) break;
        total += sign > 0 ? level : Int(-level);
        // extend chains upward
        std::vector<Int> nxt(n, Int(0));
        for (int x = 0; x < n; ++x) {
            if (cur[x] == 0) continue;
            for (int y = 0; y < n; ++y)
                if (p.lt(x, y)) nxt[y] += cur[x];
        }
        cur = std::move(nxt);
        sign = -sign;
    }
    return total;
}

struct EulerReport {
    Int euler_without_bottom;   // eps of P without 0^
    Int minus_chi_at_one;       // -sum_x mu(0,x)
    bool first_identity = false;
    bool bounded_above = false;
    Int euler_proper;           // eps of P minus 0^ and 1^ (when bounded above)
    Int chi_at_zero;            // mu(0^, 1^)
    bool second_identity = false;

    bool all_hold() const { return first_identity && (!bounded_above || second_identity); }
};

// Checks eps(P \ 0^) = -chi_P(1), and when bounded above
// eps(P \ {0^, 1^}) = chi_P(0) = mu(0^, 1^).
inline EulerReport euler_identities_check(const FinitePoset& p) {
    if (!p.has_bottom()) throw NotBoundedBelow("euler_identities_check: no bottom element");
    EulerReport r;
    std::vector<Int> mu = mobius_row(p, *p.bottom());
    Int chi1(0);
    for (int x = 0; x < p.size(); ++x) chi1 += mu[x];
    r.minus_chi_at_one = -chi1;
    r.euler_without_bottom = reduced_euler(p.without_bottom());
    r.first_identity = (r.euler_without_bottom == r.minus_chi_at_one);
    auto t = p.top();
    r.bounded_above = t.has_value() && *t != *p.bottom();
    if (r.bounded_above) {
        r.chi_at_zero = mu[*t];
        r.euler_proper = reduced_euler(p.proper_part());
        r.second_identity = (r.euler_proper == r.chi_at_zero);
    }
    return r;
}

// Face poset of a simplicial complex, including the empty face as bottom.
// Elements are named "{}"/"{v}"/"{v,w}"... using vertex names.
inline FinitePoset face_poset(const SimplicialComplexData& sc) {
    std::vector<Face> faces = sc.all_faces();
    auto face_name = [&](const Face& f) {
        std::string s = "{";
        for (size_t i = 0; i < f.size(); ++i) {
            if (i) s += ",";
            s += sc.vertices()[f[i]];
        }
        s += "}";
        return s;
    };
    std::vector<std::string> names;
    names.reserve(faces.size());
    for (const Face& f : faces) names.push_back(face_name(f));
    std::vector<std::pair<int, int>> covers;
    for (size_t i = 0; i < faces.size(); ++i)
        for (size_t j = 0; j < faces.size(); ++j) {
            if (faces[j].size() != faces[i].size() + 1) continue;
            if (std::includes(faces[j].begin(), faces[j].end(), faces[i].begin(), faces[i].end()))
                covers.emplace_back(static_cast<int>(i), static_cast<int>(j));
        }
    return FinitePoset(std::move(names), std::move(covers));
}

}  // namespace strata
