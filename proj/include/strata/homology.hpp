// Simplicial chain complexes with the augmentation included, integral
// reduced homology through Smith normal form, field Betti numbers via
// universal coefficients, and the Cohen-Macaulay checks for complexes
// (links) and posets (open intervals).
#pragma once

#include <algorithm>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "strata/intmatrix.hpp"
#include "strata/poset.hpp"
#include "strata/simplicial.hpp"

namespace strata {

struct ChainComplexData {
    // faces[k] lists the (k)-dimensional faces, k = 0..dim, lexicographic;
    // the empty face in dimension -1 is implicit (single generator).
    std::vector<std::vector<Face>> faces;
    // boundary[k] : C_k -> C_{k-1} for k = 0..dim; boundary[0] is the
    // augmentation onto the empty face.
    std::vector<IntMatrix> boundary;

    int dim() const { return static_cast<int>(faces.size()) - 1; }
    int count(int k) const {
        if (k == -1) return 1;
        if (k < -1 || k > dim()) return 0;
        return static_cast<int>(faces[k].size());
    }
};

inline ChainComplexData chain_complex(const SimplicialComplexData& sc) {
    ChainComplexData cc;
    std::vector<Face> all = sc.all_faces();
    int d = sc.dim();
    if (d < 0) return cc;  // complex {empty face}: only C_{-1}
    cc.faces.assign(d + 1, {});
    for (const Face& f : all)
        if (!f.empty()) cc.faces[f.size() - 1].push_back(f);
    for (auto& fs : cc.faces) std::sort(fs.begin(), fs.end());

    std::vector<std::map<Face, int>> idx(d + 1);
    for (int k = 0; k <= d; ++k)
        for (size_t i = 0; i < cc.faces[k].size(); ++i) idx[k][cc.faces[k][i]] = static_cast<int>(i);

    cc.boundary.resize(d + 1);
    // augmentation
    cc.boundary[0] = IntMatrix(1, cc.count(0));
    for (int j = 0; j < cc.count(0); ++j) cc.boundary[0].at(0, j) = 1;
    for (int k = 1; k <= d; ++k) {
        IntMatrix b(cc.count(k - 1), cc.count(k));
        for (int j = 0; j < cc.count(k); ++j) {
            const Face& f = cc.faces[k][j];
            int sign = 1;
            for (size_t drop = 0; drop < f.size(); ++drop) {
                Face sub;
                for (size_t i = 0; i < f.size(); ++i)
                    if (i != drop) sub.push_back(f[i]);
                b.at(idx[k - 1].at(sub), j) = sign;
                sign = -sign;
            }
        }
        cc.boundary[k] = std::move(b);
    }
    // d o d = 0 sanity
    for (int k = 1; k <= d; ++k)
        if (!(cc.boundary[k - 1] * cc.boundary[k]).is_zero())
            throw Error("chain_complex: boundary composition is nonzero");
    return cc;
}

struct HomologyResult {
    // degrees -1 .. dim; reduced homology
    std::map<int, long> betti;                 // free rank
    std::map<int, std::vector<Int>> torsion;   // divisors > 1, divisibility chain

    long betti_at(int k) const {
        auto it = betti.find(k);
        return it == betti.end() ? 0 : it->second;
    }
    const std::vector<Int>& torsion_at(int k) const {
        static const std::vector<Int> none;
        auto it = torsion.find(k);
        return it == torsion.end() ? none : it->second;
    }

    // rank over a field of characteristic p (0 = rationals), by universal
    // coefficients from the integral data
    long betti_mod(int k, long p) const {
        long r = betti_at(k);
        if (p == 0) return r;
        for (const Int& d : torsion_at(k))
            if (d % p == 0) ++r;
        for (const Int& d : torsion_at(k - 1))
            if (d % p == 0) ++r;
        return r;
    }
};

inline HomologyResult homology_integral(const SimplicialComplexData& sc) {
    ChainComplexData cc = chain_complex(sc);
    const int d = cc.dim();
    HomologyResult h;
    // rank of boundary_k and torsion of coker restricted to the kernel
    std::vector<long> rk(d + 2, 0);  // rk[k] = rank of boundary_k, k = 0..d ; rk[d+1] = 0
    std::vector<std::vector<Int>> tor(d + 2);
    for (int k = 0; k <= d; ++k) {
        std::vector<Int> divs = smith_divisors(cc.boundary[k]);
        long r = 0;
        std::vector<Int> t;
        for (const Int& v : divs)
            if (v != 0) {
                ++r;
                if (v > 1) t.push_back(v);
            }
        rk[k] = r;
        tor[k] = std::move(t);
    }
    for (int k = -1; k <= d; ++k) {
        long dim_k = cc.count(k);
        long bk = dim_k - (k >= 0 ? rk[k] : 0) - (k + 1 <= d ? rk[k + 1] : 0);
        h.betti[k] = bk;
        if (k + 1 <= d && !tor[k + 1].empty()) h.torsion[k] = tor[k + 1];
    }
    return h;
}

inline std::vector<long> betti(const SimplicialComplexData& sc, long characteristic) {
    HomologyResult h = homology_integral(sc);
    int d = sc.dim();
    std::vector<long> out;
    for (int k = 0; k <= std::max(d, 0); ++k) out.push_back(h.betti_mod(k, characteristic));
    return out;
}

// t-acyclic over characteristic p: reduced homology vanishes in degrees
// -1..t ("(-1)-acyclic" = nonempty).
inline bool acyclic_through(const HomologyResult& h, int t, long p) {
    for (int k = -1; k <= t; ++k)
        if (h.betti_mod(k, p) != 0) return false;
    return true;
}

struct CmComplexReport {
    bool cm = false;
    Face witness;  // failing link, when not CM
};

// Reisner-style criterion: every link (including lk of the empty face) is
// acyclic through codimension 1 over the given characteristic.
inline CmComplexReport is_cm_complex(const SimplicialComplexData& sc, long characteristic) {
    std::vector<Face> fs = sc.all_faces();
    for (const Face& f : fs) {
        SimplicialComplexData lk = sc.link(f);
        HomologyResult h = homology_integral(lk);
        if (!acyclic_through(h, lk.dim() - 1, characteristic)) return {false, f};
    }
    return {true, {}};
}

struct CmPosetReport {
    bool cm = false;
    std::string witness_lo, witness_hi;  // failing open interval, "0^"/"1^" for the virtual ends
};

// Interval criterion over the poset extended by virtual bottom and top:
// every open interval (x, y) -- including (x, 1^) upper sets, (0^, y) lower
// sets and (0^, 1^) = P itself -- must be acyclic through codimension 1.
inline CmPosetReport is_cm_poset(const FinitePoset& p, long characteristic) {
    const int n = p.size();
    // deterministic scan order: by element name, virtual bottom first
    std::vector<int> by_name(n);
    for (int i = 0; i < n; ++i) by_name[i] = i;
    std::sort(by_name.begin(), by_name.end(),
              [&](int a, int b) { return p.name(a) < p.name(b); });

    auto check = [&](const FinitePoset& q) {
        HomologyResult h = homology_integral(order_complex(q));
        return acyclic_through(h, q.length() - 1, characteristic);
    };

    if (!check(p)) return {false, "0^", "1^"};
    for (int xi = -1; xi < n; ++xi) {
        int x = xi < 0 ? -1 : by_name[xi];
        for (int yi = 0; yi <= n; ++yi) {
            int y = yi < n ? by_name[yi] : -2;
            FinitePoset q;
            if (x >= 0 && y >= 0) {
                if (!p.lt(x, y)) continue;
                q = p.open_interval(x, y);
            } else if (x >= 0) {
                q = p.upper_set(x);
            } else if (y >= 0) {
                q = p.lower_set(y);
            } else {
                continue;  // (0^, 1^) handled above
            }
            if (!check(q))
                return {false, x >= 0 ? p.name(x) : "0^", y >= 0 ? p.name(y) : "1^"};
        }
    }
    return {true, "", ""};
}

}  // namespace strata
