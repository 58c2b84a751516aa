// Dense univariate and sparse bivariate polynomials with exact integer
// coefficients, plus the substitutions needed for Tutte / h / characteristic
// polynomial identities.
#pragma once

#include <map>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "strata/numbers.hpp"

namespace strata {

class Polynomial1 {
public:
    Polynomial1() = default;
    explicit Polynomial1(Int constant) {
        if (constant != 0) c_.push_back(std::move(constant));
    }
    static Polynomial1 monomial(const Int& coef, int exp) {
        Polynomial1 p;
        if (coef != 0) {
            p.c_.assign(exp + 1, Int(0));
            p.c_[exp] = coef;
        }
        return p;
    }
    static Polynomial1 variable() { return monomial(Int(1), 1); }

    int degree() const { return static_cast<int>(c_.size()) - 1; }  // -1 for zero
    bool is_zero() const { return c_.empty(); }

    const Int& coeff(int e) const {
        static const Int zero(0);
        if (e < 0 || e >= static_cast<int>(c_.size())) return zero;
        return c_[e];
    }

    void set_coeff(int e, Int v) {
        if (e >= static_cast<int>(c_.size())) c_.resize(e + 1, Int(0));
        c_[e] = std::move(v);
        trim();
    }

    Polynomial1 operator+(const Polynomial1& o) const {
        Polynomial1 r;
        r.c_.resize(std::max(c_.size(), o.c_.size()), Int(0));
        for (size_t i = 0; i < c_.size(); ++i) r.c_[i] += c_[i];
        for (size_t i = 0; i < o.c_.size(); ++i) r.c_[i] += o.c_[i];
        r.trim();
        return r;
    }

    Polynomial1 operator-(const Polynomial1& o) const { return *this + (o * Int(-1)); }

    Polynomial1 operator*(const Polynomial1& o) const {
        if (is_zero() || o.is_zero()) return Polynomial1();
        Polynomial1 r;
        r.c_.assign(c_.size() + o.c_.size() - 1, Int(0));
        for (size_t i = 0; i < c_.size(); ++i) {
            if (c_[i] == 0) continue;
            for (size_t j = 0; j < o.c_.size(); ++j)
                if (o.c_[j] != 0) r.c_[i + j] += c_[i] * o.c_[j];
        }
        r.trim();
        return r;
    }

    Polynomial1 operator*(const Int& s) const {
        if (s == 0) return Polynomial1();
        Polynomial1 r = *this;
        for (Int& v : r.c_) v *= s;
        return r;
    }

    Polynomial1 pow(int e) const {
        Polynomial1 r(Int(1));
        for (int i = 0; i < e; ++i) r = r * (*this);
        return r;
    }

    Int eval(const Int& x) const {
        Int acc(0);
        for (int i = degree(); i >= 0; --i) acc = acc * x + c_[i];
        return acc;
    }

    // Substitute t -> g(t).
    Polynomial1 compose(const Polynomial1& g) const {
        Polynomial1 acc;
        for (int i = degree(); i >= 0; --i) {
            acc = acc * g;
            acc = acc + Polynomial1(c_[i]);
        }
        return acc;
    }

    bool operator==(const Polynomial1& o) const { return c_ == o.c_; }

    std::string str(const std::string& var = "t") const {
        if (is_zero()) return "0";
        std::ostringstream os;
        bool first = true;
        for (int e = degree(); e >= 0; --e) {
            const Int& a = c_[e];
            if (a == 0) continue;
            if (!first) os << (a > 0 ? " + " : " - ");
            else if (a < 0) os << "-";
            Int m = abs(a);
            if (m != 1 || e == 0) os << m.get_str();
            if (e >= 1) {
                if (m != 1) os << "*";
                os << var;
                if (e > 1) os << "^" << e;
            }
            first = false;
        }
        return os.str();
    }

    const std::vector<Int>& coefficients() const { return c_; }

private:
    void trim() {
        while (!c_.empty() && c_.back() == 0) c_.pop_back();
    }
    std::vector<Int> c_;  // c_[e] = coefficient of t^e, no zero leading coeff
};

class Polynomial2 {
public:
    Polynomial2() = default;
    explicit Polynomial2(Int constant) {
        if (constant != 0) t_[{0, 0}] = std::move(constant);
    }
    static Polynomial2 monomial(const Int& coef, int ex, int ey) {
        Polynomial2 p;
        if (coef != 0) p.t_[{ex, ey}] = coef;
        return p;
    }
    static Polynomial2 x() { return monomial(Int(1), 1, 0); }
    static Polynomial2 y() { return monomial(Int(1), 0, 1); }

    bool is_zero() const { return t_.empty(); }

    const std::map<std::pair<int, int>, Int>& terms() const { return t_; }

    Polynomial2 operator+(const Polynomial2& o) const {
        Polynomial2 r = *this;
        for (const auto& [e, c] : o.t_) {
            Int& v = r.t_[e];
            v += c;
            if (v == 0) r.t_.erase(e);
        }
        return r;
    }

    Polynomial2 operator*(const Polynomial2& o) const {
        Polynomial2 r;
        for (const auto& [e1, c1] : t_)
            for (const auto& [e2, c2] : o.t_) {
                std::pair<int, int> e{e1.first + e2.first, e1.second + e2.second};
                Int& v = r.t_[e];
                v += c1 * c2;
                if (v == 0) r.t_.erase(e);
            }
        return r;
    }

    Polynomial2 operator*(const Int& s) const {
        Polynomial2 r;
        if (s == 0) return r;
        for (const auto& [e, c] : t_) r.t_[e] = c * s;
        return r;
    }

    Polynomial2 pow(int e) const {
        Polynomial2 r(Int(1));
        for (int i = 0; i < e; ++i) r = r * (*this);
        return r;
    }

    Int eval(const Int& vx, const Int& vy) const {
        Int acc(0);
        for (const auto& [e, c] : t_)
            acc += c * strata::pow(vx, e.first) * strata::pow(vy, e.second);
        return acc;
    }

    // Substitute a constant for y (resp. x), leaving a univariate polynomial.
    Polynomial1 substitute_y(const Int& vy) const {
        Polynomial1 r;
        for (const auto& [e, c] : t_) {
            Int term = c * strata::pow(vy, e.second);
            if (term != 0) r.set_coeff(e.first, r.coeff(e.first) + term);
        }
        return r;
    }
    Polynomial1 substitute_x(const Int& vx) const {
        Polynomial1 r;
        for (const auto& [e, c] : t_) {
            Int term = c * strata::pow(vx, e.first);
            if (term != 0) r.set_coeff(e.second, r.coeff(e.second) + term);
        }
        return r;
    }

    bool operator==(const Polynomial2& o) const { return t_ == o.t_; }

    std::string str() const {
        if (t_.empty()) return "0";
        std::ostringstream os;
        bool first = true;
        // highest total degree first, then x-degree
        std::vector<std::pair<std::pair<int, int>, Int>> v(t_.begin(), t_.end());
        std::sort(v.begin(), v.end(), [](const auto& a, const auto& b) {
            int ta = a.first.first + a.first.second, tb = b.first.first + b.first.second;
            if (ta != tb) return ta > tb;
            return a.first.first > b.first.first;
        });
        for (const auto& [e, a] : v) {
            if (!first) os << (a > 0 ? " + " : " - ");
            else if (a < 0) os << "-";
            Int m = abs(a);
            bool unit = (m == 1) && (e.first > 0 || e.second > 0);
            if (!unit) os << m.get_str();
            bool need_star = !unit;
            if (e.first > 0) {
                if (need_star) os << "*";
                os << "x";
                if (e.first > 1) os << "^" << e.first;
                need_star = true;
            }
            if (e.second > 0) {
                if (need_star) os << "*";
                os << "y";
                if (e.second > 1) os << "^" << e.second;
            }
            first = false;
        }
        return os.str();
    }

private:
    std::map<std::pair<int, int>, Int> t_;
};

}  // namespace strata
