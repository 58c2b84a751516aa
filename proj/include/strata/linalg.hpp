// Exact dense linear algebra over the rationals and over prime fields:
// row reduction, rank, row-space containment, sums and intersections.
// Field is a small policy type so the face-ring code can run the same
// degreewise computations in characteristic 0 and characteristic p.
#pragma once

#include <cstdint>
#include <vector>

#include "strata/numbers.hpp"

namespace strata {

struct RationalField {
    using Elem = Rat;
    Elem zero() const { return Rat(0); }
    Elem one() const { return Rat(1); }
    Elem from_int(const Int& v) const { return Rat(v); }
    bool is_zero(const Elem& a) const { return a == 0; }
    Elem add(const Elem& a, const Elem& b) const { return a + b; }
    Elem sub(const Elem& a, const Elem& b) const { return a - b; }
    Elem mul(const Elem& a, const Elem& b) const { return a * b; }
    Elem div(const Elem& a, const Elem& b) const { return a / b; }
    Elem neg(const Elem& a) const { return -a; }
};

struct PrimeField {
    long p;
    using Elem = long;
    explicit PrimeField(long prime) : p(prime) {
        if (prime < 2) throw Error("PrimeField: characteristic must be a prime >= 2");
        if (prime >= (1L << 31)) throw Error("PrimeField: characteristic too large");
    }
    Elem zero() const { return 0; }
    Elem one() const { return 1; }
    Elem from_int(const Int& v) const {
        Int r = v % p;
        long x = r.get_si();
        return x < 0 ? x + p : x;
    }
    bool is_zero(const Elem& a) const { return a == 0; }
    Elem add(const Elem& a, const Elem& b) const { return (a + b) % p; }
    Elem sub(const Elem& a, const Elem& b) const { return ((a - b) % p + p) % p; }
    Elem mul(const Elem& a, const Elem& b) const { return (a * b) % p; }
    Elem inv(const Elem& a) const {
        // extended Euclid
        long t = 0, nt = 1, r = p, nr = a % p;
        while (nr != 0) {
            long q = r / nr;
            long tmp = t - q * nt; t = nt; nt = tmp;
            tmp = r - q * nr; r = nr; nr = tmp;
        }
        if (r != 1) throw Error("PrimeField: not invertible");
        return t < 0 ? t + p : t;
    }
    Elem div(const Elem& a, const Elem& b) const { return mul(a, inv(b)); }
    Elem neg(const Elem& a) const { return a == 0 ? 0 : p - a; }
};

// Rows in reduced row echelon form; represents a subspace of F^width.
template <typename F>
class RowSpace {
public:
    explicit RowSpace(const F& field, int width) : f_(field), width_(width) {}

    int width() const { return width_; }
    int dim() const { return static_cast<int>(rows_.size()); }

    // Reduce v against the basis; returns the residue.
    std::vector<typename F::Elem> reduce(std::vector<typename F::Elem> v) const {
        for (size_t i = 0; i < rows_.size(); ++i) {
            const auto& c = v[pivots_[i]];
            if (!f_.is_zero(c)) {
                auto coef = c;  // rows are normalized with pivot 1
                for (int j = 0; j < width_; ++j)
                    v[j] = f_.sub(v[j], f_.mul(coef, rows_[i][j]));
            }
        }
        return v;
    }

    bool contains(const std::vector<typename F::Elem>& v) const {
        auto r = reduce(v);
        for (const auto& x : r)
            if (!f_.is_zero(x)) return false;
        return true;
    }

    // Insert v; returns true if the dimension grew.
    bool insert(std::vector<typename F::Elem> v) {
        v = reduce(std::move(v));
        int piv = -1;
        for (int j = 0; j < width_; ++j)
            if (!f_.is_zero(v[j])) { piv = j; break; }
        if (piv < 0) return false;
        auto inv = f_.div(f_.one(), v[piv]);
        for (int j = 0; j < width_; ++j) v[j] = f_.mul(v[j], inv);
        // back-substitute into existing rows
        for (size_t i = 0; i < rows_.size(); ++i) {
            const auto& c = rows_[i][piv];
            if (!f_.is_zero(c)) {
                auto coef = c;
                for (int j = 0; j < width_; ++j)
                    rows_[i][j] = f_.sub(rows_[i][j], f_.mul(coef, v[j]));
            }
        }
        // keep rows sorted by pivot
        size_t pos = 0;
        while (pos < pivots_.size() && pivots_[pos] < piv) ++pos;
        rows_.insert(rows_.begin() + pos, std::move(v));
        pivots_.insert(pivots_.begin() + pos, piv);
        return true;
    }

    const std::vector<std::vector<typename F::Elem>>& basis() const { return rows_; }
    const std::vector<int>& pivots() const { return pivots_; }

    bool same_space(const RowSpace& o) const {
        if (dim() != o.dim()) return false;
        for (const auto& r : o.rows_)
            if (!contains(r)) return false;
        return true;
    }

    bool contains_space(const RowSpace& o) const {
        for (const auto& r : o.rows_)
            if (!contains(r)) return false;
        return true;
    }

    RowSpace sum(const RowSpace& o) const {
        RowSpace s = *this;
        for (const auto& r : o.rows_) s.insert(r);
        return s;
    }

    // Subspace intersection via the kernel of the stacked coordinate system.
    RowSpace intersect(const RowSpace& o) const {
        RowSpace out(f_, width_);
        if (dim() == 0 || o.dim() == 0) return out;
        // Solve x^T A = y^T B: kernel vectors of [A^T | -B^T] columns (x; y).
        const int na = dim(), nb = o.dim();
        std::vector<std::vector<typename F::Elem>> m(width_,
            std::vector<typename F::Elem>(na + nb, f_.zero()));
        for (int i = 0; i < na; ++i)
            for (int j = 0; j < width_; ++j) m[j][i] = rows_[i][j];
        for (int i = 0; i < nb; ++i)
            for (int j = 0; j < width_; ++j) m[j][na + i] = f_.neg(o.rows_[i][j]);
        // kernel of m (width_ x (na+nb)) over F
        auto ker = kernel(m, na + nb);
        for (const auto& k : ker) {
            std::vector<typename F::Elem> v(width_, f_.zero());
            for (int i = 0; i < na; ++i)
                if (!f_.is_zero(k[i]))
                    for (int j = 0; j < width_; ++j)
                        v[j] = f_.add(v[j], f_.mul(k[i], rows_[i][j]));
            out.insert(std::move(v));
        }
        return out;
    }

private:
    // kernel of the column system given as rows m[0..h-1] of width w
    std::vector<std::vector<typename F::Elem>> kernel(
        std::vector<std::vector<typename F::Elem>> m, int w) const {
        int h = static_cast<int>(m.size());
        std::vector<int> pivot_col;
        int r = 0;
        for (int c = 0; c < w && r < h; ++c) {
            int pr = -1;
            for (int i = r; i < h; ++i)
                if (!f_.is_zero(m[i][c])) { pr = i; break; }
            if (pr < 0) continue;
            std::swap(m[r], m[pr]);
            auto inv = f_.div(f_.one(), m[r][c]);
            for (int j = 0; j < w; ++j) m[r][j] = f_.mul(m[r][j], inv);
            for (int i = 0; i < h; ++i) {
                if (i == r || f_.is_zero(m[i][c])) continue;
                auto coef = m[i][c];
                for (int j = 0; j < w; ++j)
                    m[i][j] = f_.sub(m[i][j], f_.mul(coef, m[r][j]));
            }
            pivot_col.push_back(c);
            ++r;
        }
        std::vector<bool> is_pivot(w, false);
        for (int c : pivot_col) is_pivot[c] = true;
        std::vector<std::vector<typename F::Elem>> ker;
        for (int c = 0; c < w; ++c) {
            if (is_pivot[c]) continue;
            std::vector<typename F::Elem> v(w, f_.zero());
            v[c] = f_.one();
            for (int i = 0; i < r; ++i)
                v[pivot_col[i]] = f_.neg(m[i][c]);
            ker.push_back(std::move(v));
        }
        return ker;
    }

    F f_;
    int width_;
    std::vector<std::vector<typename F::Elem>> rows_;
    std::vector<int> pivots_;
};

// Sparse variant for the degreewise ideal spans: rows are sorted
// (column, value) pairs kept in reduced echelon form. Monomial ideals keep
// these rows very sparse, which is what makes degree-truncated Hilbert
// computations on hundreds of presentations affordable.
template <typename F>
class SparseRowSpace {
public:
    using Entry = std::pair<int, typename F::Elem>;
    using SparseVec = std::vector<Entry>;  // strictly increasing columns

    explicit SparseRowSpace(const F& field) : f_(field) {}

    int dim() const { return static_cast<int>(rows_.size()); }
    const std::vector<SparseVec>& basis() const { return rows_; }
    int pivot(int r) const { return rows_[r].front().first; }

    // v -= c * row (sparse merge); drops explicit zeros
    SparseVec axpy(const SparseVec& v, const typename F::Elem& c, const SparseVec& row) const {
        SparseVec out;
        out.reserve(v.size() + row.size());
        size_t i = 0, j = 0;
        while (i < v.size() || j < row.size()) {
            if (j == row.size() || (i < v.size() && v[i].first < row[j].first)) {
                out.push_back(v[i++]);
            } else if (i == v.size() || row[j].first < v[i].first) {
                out.emplace_back(row[j].first, f_.neg(f_.mul(c, row[j].second)));
                ++j;
            } else {
                auto val = f_.sub(v[i].second, f_.mul(c, row[j].second));
                if (!f_.is_zero(val)) out.emplace_back(v[i].first, val);
                ++i;
                ++j;
            }
        }
        return out;
    }

    SparseVec reduce(SparseVec v) const {
        size_t r = 0;
        while (!v.empty() && r < rows_.size()) {
            if (rows_[r].front().first < v.front().first) {
                ++r;
                continue;
            }
            // find the coefficient of v at this row's pivot
            int p = rows_[r].front().first;
            auto it = std::lower_bound(v.begin(), v.end(), p,
                                       [](const Entry& e, int c) { return e.first < c; });
            if (it != v.end() && it->first == p) v = axpy(v, it->second, rows_[r]);
            ++r;
        }
        return v;
    }

    bool contains(const SparseVec& v) const { return reduce(v).empty(); }

    bool insert(SparseVec v) {
        v = reduce(std::move(v));
        if (v.empty()) return false;
        // normalize pivot to 1
        auto inv = f_.div(f_.one(), v.front().second);
        for (auto& [c, val] : v) val = f_.mul(val, inv);
        int piv = v.front().first;
        // eliminate the new pivot from existing rows
        for (auto& row : rows_) {
            auto it = std::lower_bound(row.begin(), row.end(), piv,
                                       [](const Entry& e, int c) { return e.first < c; });
            if (it != row.end() && it->first == piv) row = axpy(row, it->second, v);
        }
        size_t pos = 0;
        while (pos < rows_.size() && rows_[pos].front().first < piv) ++pos;
        rows_.insert(rows_.begin() + pos, std::move(v));
        return true;
    }

    // value of v at column c
    typename F::Elem at(const SparseVec& v, int c) const {
        auto it = std::lower_bound(v.begin(), v.end(), c,
                                   [](const Entry& e, int col) { return e.first < col; });
        if (it != v.end() && it->first == c) return it->second;
        return f_.zero();
    }

private:
    F f_;
    std::vector<SparseVec> rows_;  // sorted by pivot column
};

}  // namespace strata
