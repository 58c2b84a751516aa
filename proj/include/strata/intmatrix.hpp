// Integer matrices and lattice computations: Smith normal form, kernel
// lattices, saturation, subgroup indices and component representatives on
// the torus. Everything is exact; determinism is part of the contract
// (pivot choice and normalization are fixed).
#pragma once

#include <algorithm>
#include <optional>
#include <utility>
#include <vector>

#include "strata/numbers.hpp"

namespace strata {

class IntMatrix {
public:
    IntMatrix() : rows_(0), cols_(0) {}
    IntMatrix(int rows, int cols)
        : rows_(rows), cols_(cols), a_(static_cast<size_t>(rows) * cols, Int(0)) {
        if (rows < 0 || cols < 0) throw Error("IntMatrix: negative dimension");
    }

    static IntMatrix identity(int n) {
        IntMatrix m(n, n);
        for (int i = 0; i < n; ++i) m.at(i, i) = 1;
        return m;
    }

    static IntMatrix from_rows(const std::vector<std::vector<Int>>& rows) {
        int r = static_cast<int>(rows.size());
        int c = r == 0 ? 0 : static_cast<int>(rows[0].size());
        IntMatrix m(r, c);
        for (int i = 0; i < r; ++i) {
            if (static_cast<int>(rows[i].size()) != c)
                throw Error("IntMatrix: ragged rows");
            for (int j = 0; j < c; ++j) m.at(i, j) = rows[i][j];
        }
        return m;
    }

    static IntMatrix from_columns(const std::vector<std::vector<Int>>& cols) {
        int c = static_cast<int>(cols.size());
        int r = c == 0 ? 0 : static_cast<int>(cols[0].size());
        IntMatrix m(r, c);
        for (int j = 0; j < c; ++j) {
            if (static_cast<int>(cols[j].size()) != r)
                throw Error("IntMatrix: ragged columns");
            for (int i = 0; i < r; ++i) m.at(i, j) = cols[j][i];
        }
        return m;
    }

    int rows() const { return rows_; }
    int cols() const { return cols_; }

    Int& at(int r, int c) { return a_[static_cast<size_t>(r) * cols_ + c]; }
    const Int& at(int r, int c) const { return a_[static_cast<size_t>(r) * cols_ + c]; }

    std::vector<Int> row(int r) const {
        std::vector<Int> out(cols_);
        for (int j = 0; j < cols_; ++j) out[j] = at(r, j);
        return out;
    }

    std::vector<Int> column(int c) const {
        std::vector<Int> out(rows_);
        for (int i = 0; i < rows_; ++i) out[i] = at(i, c);
        return out;
    }

    IntMatrix transpose() const {
        IntMatrix t(cols_, rows_);
        for (int i = 0; i < rows_; ++i)
            for (int j = 0; j < cols_; ++j) t.at(j, i) = at(i, j);
        return t;
    }

    IntMatrix operator*(const IntMatrix& o) const {
        if (cols_ != o.rows_) throw Error("IntMatrix: dimension mismatch in product");
        IntMatrix p(rows_, o.cols_);
        for (int i = 0; i < rows_; ++i)
            for (int k = 0; k < cols_; ++k) {
                const Int& aik = at(i, k);
                if (aik == 0) continue;
                for (int j = 0; j < o.cols_; ++j) p.at(i, j) += aik * o.at(k, j);
            }
        return p;
    }

    std::vector<Int> apply(const std::vector<Int>& x) const {
        if (static_cast<int>(x.size()) != cols_) throw Error("IntMatrix: apply size mismatch");
        std::vector<Int> y(rows_, Int(0));
        for (int i = 0; i < rows_; ++i)
            for (int j = 0; j < cols_; ++j)
                if (at(i, j) != 0) y[i] += at(i, j) * x[j];
        return y;
    }

    bool operator==(const IntMatrix& o) const {
        return rows_ == o.rows_ && cols_ == o.cols_ && a_ == o.a_;
    }

    bool is_zero() const {
        for (const Int& v : a_) if (v != 0) return false;
        return true;
    }

private:
    int rows_, cols_;
    std::vector<Int> a_;
};

struct SmithDecomposition {
    IntMatrix U;                 // rows x rows, unimodular
    IntMatrix V;                 // cols x cols, unimodular
    std::vector<Int> divisors;   // length min(rows, cols); d_i >= 0, d_i | d_{i+1}

    int rank() const {
        int r = 0;
        for (const Int& d : divisors) if (d != 0) ++r;
        return r;
    }
};

namespace detail {

// Position of an entry of smallest nonzero absolute value in M[t.., t..],
// preferring units and scanning row-major for determinism.
inline std::optional<std::pair<int, int>> snf_pivot(const IntMatrix& M, int t) {
    std::optional<std::pair<int, int>> best;
    Int best_abs;
    for (int i = t; i < M.rows(); ++i)
        for (int j = t; j < M.cols(); ++j) {
            const Int& v = M.at(i, j);
            if (v == 0) continue;
            Int a = abs(v);
            if (a == 1) return std::make_pair(i, j);
            if (!best || a < best_abs) {
                best = std::make_pair(i, j);
                best_abs = a;
            }
        }
    return best;
}

inline void row_swap(IntMatrix& M, int a, int b) {
    if (a == b) return;
    for (int j = 0; j < M.cols(); ++j) std::swap(M.at(a, j), M.at(b, j));
}

inline void col_swap(IntMatrix& M, int a, int b) {
    if (a == b) return;
    for (int i = 0; i < M.rows(); ++i) std::swap(M.at(i, a), M.at(i, b));
}

// row[a] -= q * row[b]
inline void row_axpy(IntMatrix& M, int a, int b, const Int& q) {
    if (q == 0) return;
    for (int j = 0; j < M.cols(); ++j) M.at(a, j) -= q * M.at(b, j);
}

inline void col_axpy(IntMatrix& M, int a, int b, const Int& q) {
    if (q == 0) return;
    for (int i = 0; i < M.rows(); ++i) M.at(i, a) -= q * M.at(i, b);
}

}  // namespace detail

// Smith normal form with unimodular transforms: U * A * V = diag(divisors).
// Divisors are nonnegative and form a divisibility chain.
inline SmithDecomposition smith_normal_form(const IntMatrix& A) {
    const int r = A.rows(), c = A.cols();
    IntMatrix M = A;
    IntMatrix U = IntMatrix::identity(r);
    IntMatrix V = IntMatrix::identity(c);
    const int mn = std::min(r, c);

    for (int t = 0; t < mn; ++t) {
        for (;;) {
            auto piv = detail::snf_pivot(M, t);
            if (!piv) goto done;  // remaining block is zero
            detail::row_swap(M, t, piv->first);
            detail::row_swap(U, t, piv->first);
            detail::col_swap(M, t, piv->second);
            detail::col_swap(V, t, piv->second);

            bool clean = true;
            for (int i = t + 1; i < r; ++i) {
                if (M.at(i, t) == 0) continue;
                Int q = M.at(i, t) / M.at(t, t);  // truncated quotient
                detail::row_axpy(M, i, t, q);
                detail::row_axpy(U, i, t, q);
                if (M.at(i, t) != 0) clean = false;
            }
            for (int j = t + 1; j < c; ++j) {
                if (M.at(t, j) == 0) continue;
                Int q = M.at(t, j) / M.at(t, t);
                detail::col_axpy(M, j, t, q);
                detail::col_axpy(V, j, t, q);
                if (M.at(t, j) != 0) clean = false;
            }
            if (!clean) continue;  // smaller residues appeared; re-pick pivot

            // Pivot must divide every entry of the remaining block.
            int bad_i = -1;
            for (int i = t + 1; i < r && bad_i < 0; ++i)
                for (int j = t + 1; j < c; ++j)
                    if (M.at(i, j) % M.at(t, t) != 0) {
                        bad_i = i;
                        break;
                    }
            if (bad_i < 0) break;
            // Fold the offending row into row t and restart the reduction.
            for (int j = 0; j < c; ++j) M.at(t, j) += M.at(bad_i, j);
            for (int j = 0; j < r; ++j) U.at(t, j) += U.at(bad_i, j);
        }
        if (M.at(t, t) < 0) {
            for (int j = 0; j < c; ++j) M.at(t, j) = -M.at(t, j);
            for (int j = 0; j < r; ++j) U.at(t, j) = -U.at(t, j);
        }
    }
done:
    SmithDecomposition out;
    out.U = std::move(U);
    out.V = std::move(V);
    out.divisors.resize(mn);
    for (int i = 0; i < mn; ++i) out.divisors[i] = M.at(i, i);
    return out;
}

// Divisors only (no transforms); same algorithm, used where only ranks or
// torsion are needed.
inline std::vector<Int> smith_divisors(const IntMatrix& A) {
    const int r = A.rows(), c = A.cols();
    IntMatrix M = A;
    const int mn = std::min(r, c);
    int t = 0;
    for (; t < mn; ++t) {
        for (;;) {
            auto piv = detail::snf_pivot(M, t);
            if (!piv) goto done;
            detail::row_swap(M, t, piv->first);
            detail::col_swap(M, t, piv->second);
            bool clean = true;
            for (int i = t + 1; i < r; ++i) {
                if (M.at(i, t) == 0) continue;
                Int q = M.at(i, t) / M.at(t, t);
                detail::row_axpy(M, i, t, q);
                if (M.at(i, t) != 0) clean = false;
            }
            for (int j = t + 1; j < c; ++j) {
                if (M.at(t, j) == 0) continue;
                Int q = M.at(t, j) / M.at(t, t);
                detail::col_axpy(M, j, t, q);
                if (M.at(t, j) != 0) clean = false;
            }
            if (!clean) continue;
            int bad_i = -1;
            for (int i = t + 1; i < r && bad_i < 0; ++i)
                for (int j = t + 1; j < c; ++j)
                    if (M.at(i, j) % M.at(t, t) != 0) {
                        bad_i = i;
                        break;
                    }
            if (bad_i < 0) break;
            for (int j = 0; j < c; ++j) M.at(t, j) += M.at(bad_i, j);
        }
    }
done:
    std::vector<Int> divs(mn, Int(0));
    for (int i = 0; i < t; ++i) divs[i] = abs(M.at(i, i));
    return divs;
}

inline int rank(const IntMatrix& A) {
    int r = 0;
    for (const Int& d : smith_divisors(A)) if (d != 0) ++r;
    return r;
}

// Determinant by fraction-free (Bareiss) elimination.
inline Int det(const IntMatrix& A) {
    if (A.rows() != A.cols()) throw Error("det: matrix not square");
    const int n = A.rows();
    if (n == 0) return 1;
    IntMatrix M = A;
    Int prev = 1;
    int sign = 1;
    for (int k = 0; k < n - 1; ++k) {
        if (M.at(k, k) == 0) {
            int p = -1;
            for (int i = k + 1; i < n; ++i)
                if (M.at(i, k) != 0) { p = i; break; }
            if (p < 0) return 0;
            detail::row_swap(M, k, p);
            sign = -sign;
        }
        for (int i = k + 1; i < n; ++i)
            for (int j = k + 1; j < n; ++j)
                M.at(i, j) = divexact(M.at(i, j) * M.at(k, k) - M.at(i, k) * M.at(k, j), prev);
        prev = M.at(k, k);
    }
    return sign > 0 ? M.at(n - 1, n - 1) : Int(-M.at(n - 1, n - 1));
}

// |Tors(Z^rows / column-span(A))| = product of the nonzero Smith divisors.
inline Int torsion_order(const IntMatrix& A) {
    Int t = 1;
    for (const Int& d : smith_divisors(A)) if (d != 0) t *= d;
    return t;
}

// A subgroup of Z^ambient_dim presented by a list of Q-linearly independent
// generator vectors.
struct LatticeBasis {
    int ambient_dim = 0;
    std::vector<std::vector<Int>> generators;

    int rank() const { return static_cast<int>(generators.size()); }

    IntMatrix as_columns() const {
        IntMatrix m(ambient_dim, rank());
        for (int j = 0; j < rank(); ++j)
            for (int i = 0; i < ambient_dim; ++i) m.at(i, j) = generators[j][i];
        return m;
    }

    static LatticeBasis standard(int dim) {
        LatticeBasis L;
        L.ambient_dim = dim;
        for (int i = 0; i < dim; ++i) {
            std::vector<Int> e(dim, Int(0));
            e[i] = 1;
            L.generators.push_back(std::move(e));
        }
        return L;
    }
};

namespace detail {

// Sign convention for generator vectors: first nonzero coordinate positive.
inline void normalize_sign(std::vector<Int>& v) {
    for (const Int& x : v) {
        if (x == 0) continue;
        if (x < 0)
            for (Int& y : v) y = -y;
        return;
    }
}

}  // namespace detail

// Basis of { x in Z^cols : A x = 0 }. The result is saturated and the
// generators are primitive (columns of a unimodular matrix).
inline LatticeBasis kernel_lattice(const IntMatrix& A) {
    SmithDecomposition s = smith_normal_form(A);
    const int c = A.cols();
    int r = s.rank();
    LatticeBasis L;
    L.ambient_dim = c;
    for (int j = r; j < c; ++j) {
        std::vector<Int> g = s.V.column(j);
        detail::normalize_sign(g);
        L.generators.push_back(std::move(g));
    }
    return L;
}

// Solve B x = v over the integers; nullopt when no integer solution exists.
inline std::optional<std::vector<Int>> solve_integer(const IntMatrix& B,
                                                     const std::vector<Int>& v) {
    if (static_cast<int>(v.size()) != B.rows()) throw Error("solve_integer: size mismatch");
    SmithDecomposition s = smith_normal_form(B);
    std::vector<Int> w = s.U.apply(v);
    const int mn = static_cast<int>(s.divisors.size());
    std::vector<Int> y(B.cols(), Int(0));
    for (int i = 0; i < B.rows(); ++i) {
        if (i < mn && s.divisors[i] != 0) {
            if (w[i] % s.divisors[i] != 0) return std::nullopt;
            y[i] = w[i] / s.divisors[i];
        } else if (w[i] != 0) {
            return std::nullopt;
        }
    }
    return s.V.apply(y);
}

// Membership of v in the integer column span of B.
inline bool in_column_span(const IntMatrix& B, const std::vector<Int>& v) {
    return solve_integer(B, v).has_value();
}

// Saturation { x in Z^d : n x in <L> for some n > 0 }, computed through the
// rational orthogonal complement.
inline LatticeBasis saturate(const LatticeBasis& L) {
    if (L.rank() == 0) {
        LatticeBasis out;
        out.ambient_dim = L.ambient_dim;
        return out;
    }
    IntMatrix B = L.as_columns();
    // Rows orthogonal to <L>.
    LatticeBasis ortho = kernel_lattice(B.transpose());
    if (ortho.rank() == 0) return LatticeBasis::standard(L.ambient_dim);
    IntMatrix C(ortho.rank(), L.ambient_dim);
    for (int i = 0; i < ortho.rank(); ++i)
        for (int j = 0; j < L.ambient_dim; ++j) C.at(i, j) = ortho.generators[i][j];
    return kernel_lattice(C);
}

struct NotASubgroup : Error {
    explicit NotASubgroup(const std::string& what) : Error(what) {}
};

struct LatticeIndex {
    bool finite = false;
    Int value = 0;  // meaningful only when finite

    static LatticeIndex infinite() { return LatticeIndex{false, Int(0)}; }
    static LatticeIndex of(Int v) { return LatticeIndex{true, std::move(v)}; }

    bool operator==(const LatticeIndex& o) const {
        return finite == o.finite && (!finite || value == o.value);
    }
};

// Group index [<ambient> : <sub>]. Throws NotASubgroup when some generator of
// sub is not in <ambient>; INFINITE exactly when the ranks differ.
inline LatticeIndex lattice_index(const LatticeBasis& sub, const LatticeBasis& ambient) {
    if (sub.ambient_dim != ambient.ambient_dim)
        throw Error("lattice_index: ambient dimension mismatch");
    IntMatrix B = ambient.as_columns();
    SmithDecomposition s = smith_normal_form(B);
    std::vector<std::vector<Int>> coords;
    for (const auto& g : sub.generators) {
        // Solve B x = g reusing the decomposition.
        std::vector<Int> w = s.U.apply(g);
        std::vector<Int> y(B.cols(), Int(0));
        for (int i = 0; i < B.rows(); ++i) {
            bool ok = true;
            if (i < static_cast<int>(s.divisors.size()) && s.divisors[i] != 0) {
                if (w[i] % s.divisors[i] != 0) ok = false;
                else y[i] = w[i] / s.divisors[i];
            } else if (w[i] != 0) {
                ok = false;
            }
            if (!ok) throw NotASubgroup("lattice_index: generator outside ambient lattice");
        }
        coords.push_back(s.V.apply(y));
    }
    if (sub.rank() < ambient.rank()) return LatticeIndex::infinite();
    if (sub.rank() > ambient.rank())
        throw Error("lattice_index: sub rank exceeds ambient rank");
    IntMatrix X = IntMatrix::from_columns(coords);
    Int d = abs(det(X));
    if (d == 0) throw Error("lattice_index: dependent sub generators");
    return LatticeIndex::of(d);
}

// One rational representative per connected component of
// { x in (R/Z)^d : a_i . x in Z for every row a_i of A }, zero included,
// each reduced into [0,1)^d, sorted lexicographically.
inline std::vector<std::vector<Rat>> component_representatives(const IntMatrix& A) {
    const int d = A.cols();
    SmithDecomposition s = smith_normal_form(A);
    const int mn = static_cast<int>(s.divisors.size());

    std::vector<Int> moduli;  // nonzero divisors, in chain order
    for (int i = 0; i < mn; ++i)
        if (s.divisors[i] != 0) moduli.push_back(s.divisors[i]);
    const int k = static_cast<int>(moduli.size());

    std::vector<std::vector<Rat>> reps;
    std::vector<Int> counter(k, Int(0));
    for (;;) {
        // y has t_i / d_i in the constrained coordinates, zero elsewhere.
        std::vector<Rat> y(d, Rat(0));
        for (int i = 0; i < k; ++i) y[i] = make_rat(counter[i], moduli[i]);
        std::vector<Rat> x(d, Rat(0));
        for (int r = 0; r < d; ++r) {
            Rat acc(0);
            for (int c = 0; c < d; ++c)
                if (y[c] != 0) acc += Rat(s.V.at(r, c)) * y[c];
            acc.canonicalize();
            x[r] = frac_part(acc);
        }
        reps.push_back(std::move(x));
        int pos = k - 1;
        while (pos >= 0) {
            counter[pos] += 1;
            if (counter[pos] < moduli[pos]) break;
            counter[pos] = 0;
            --pos;
        }
        if (pos < 0) break;
    }
    std::sort(reps.begin(), reps.end());
    return reps;
}

}  // namespace strata
