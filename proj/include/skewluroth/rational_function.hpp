/*
   Copyright 2026 The skewluroth authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#pragma once

#include <algorithm>
#include <optional>
#include <utility>

#include "linalg.hpp"
#include "polynomial.hpp"
#include "traits.hpp"

namespace skewluroth {

/**
 * Rational function num/den over a field F, always kept canonical:
 * den != 0, gcd(num, den) = 1, den monic, and 0 is represented as 0/1.
 */
template <class F>
class RatFunc {
   public:
    RatFunc() : den_(1) {}
    RatFunc(long v) : num_(v), den_(1) {}  // NOLINT: implicit constant
    RatFunc(F v) : num_(std::move(v)), den_(1) {}  // NOLINT: implicit constant
    RatFunc(Poly<F> p) : num_(std::move(p)), den_(1) {}  // NOLINT: implicit embedding
    RatFunc(Poly<F> num, Poly<F> den) : num_(std::move(num)), den_(std::move(den)) {
        normalize();
    }

    static RatFunc x() { return RatFunc(Poly<F>::x()); }

    const Poly<F>& num() const { return num_; }
    const Poly<F>& den() const { return den_; }

    bool is_zero() const { return num_.is_zero(); }
    bool is_one() const { return num_ == Poly<F>(1) && den_ == Poly<F>(1); }
    bool is_constant() const { return num_.is_constant() && den_.is_constant(); }
    bool is_polynomial() const { return den_ == Poly<F>(1); }

    F constant_value() const {
        if (!is_constant()) throw precondition_error("rational function is not constant");
        return num_.constant_term();  // den is a monic constant, i.e. 1
    }

    /// max(deg num, deg den); zero exactly for constants. Equals the field
    /// extension degree [F(X) : F(f)] for nonconstant f.
    int degree() const {
        if (is_zero()) return 0;
        return std::max(num_.degree(), den_.degree());
    }

    RatFunc operator-() const { return make(-num_, den_); }
    RatFunc operator+(const RatFunc& o) const {
        return RatFunc(num_ * o.den_ + o.num_ * den_, den_ * o.den_);
    }
    RatFunc operator-(const RatFunc& o) const { return *this + (-o); }
    RatFunc operator*(const RatFunc& o) const {
        return RatFunc(num_ * o.num_, den_ * o.den_);
    }
    RatFunc operator/(const RatFunc& o) const { return *this * o.inverse(); }
    RatFunc& operator+=(const RatFunc& o) { return *this = *this + o; }
    RatFunc& operator-=(const RatFunc& o) { return *this = *this - o; }
    RatFunc& operator*=(const RatFunc& o) { return *this = *this * o; }
    RatFunc& operator/=(const RatFunc& o) { return *this = *this / o; }

    RatFunc inverse() const {
        if (is_zero()) throw division_by_zero();
        return RatFunc(den_, num_);
    }

    bool operator==(const RatFunc& o) const { return num_ == o.num_ && den_ == o.den_; }
    bool operator!=(const RatFunc& o) const { return !(*this == o); }

    /// f(-X).
    RatFunc substitute_neg() const {
        return RatFunc(num_.substitute_neg(), den_.substitute_neg());
    }

    bool is_even() const { return substitute_neg() == *this; }
    bool is_odd() const { return substitute_neg() == -*this; }

    template <class G, class Fn>
    RatFunc<G> map(Fn&& fn) const {
        return RatFunc<G>(num_.template map<G>(fn), den_.template map<G>(fn));
    }

   private:
    static RatFunc make(Poly<F> num, Poly<F> den) {
        // Already coprime with monic den; skips re-normalization.
        RatFunc r;
        r.num_ = std::move(num);
        r.den_ = std::move(den);
        return r;
    }

    void normalize() {
        if (den_.is_zero()) throw division_by_zero("rational function with zero denominator");
        if (num_.is_zero()) {
            den_ = Poly<F>(1);
            return;
        }
        Poly<F> g = gcd(num_, den_);
        if (g.degree() > 0) {
            num_ = divmod(num_, g).first;
            den_ = divmod(den_, g).first;
        }
        F s = den_.lc().inverse();
        num_ = num_ * s;
        den_ = den_ * s;
    }

    Poly<F> num_, den_;
};

template <class F>
inline constexpr bool is_formally_real_v<RatFunc<F>> = is_formally_real_v<F>;

/// R(f): substitute f into the rational function R. The degree is
/// multiplicative: deg(R o f) = deg R * deg f for nonconstant R, f.
template <class F>
RatFunc<F> compose(const RatFunc<F>& R, const RatFunc<F>& f) {
    std::size_t r = static_cast<std::size_t>(std::max(R.num().degree(), R.den().degree()));
    if (R.is_zero()) return RatFunc<F>();
    Poly<F> num = compose_homogeneous(R.num(), f.num(), f.den(), r);
    Poly<F> den = compose_homogeneous(R.den(), f.num(), f.den(), r);
    return RatFunc<F>(std::move(num), std::move(den));
}

/**
 * Writes f(X) = g(X^2) + h(X^2)*X and returns (g, h) as rational functions in
 * a fresh variable. Computed by multiplying numerator and denominator by
 * den(-X), which makes the denominator even, then splitting the numerator by
 * parity.
 */
template <class F>
std::pair<RatFunc<F>, RatFunc<F>> even_odd_split(const RatFunc<F>& f) {
    Poly<F> dneg = f.den().substitute_neg();
    Poly<F> num = f.num() * dneg;
    Poly<F> den = f.den() * dneg;  // even polynomial
    auto [den_e, den_o] = den.even_odd_parts();
    if (!den_o.is_zero()) throw internal_error("even-odd split: denominator not even");
    auto [num_e, num_o] = num.even_odd_parts();
    return {RatFunc<F>(num_e, den_e), RatFunc<F>(num_o, den_e)};
}

/// For even f, the rational function g with f(X) = g(X^2); for odd f (with
/// odd_part = true), the g with f(X) = g(X^2)*X.
template <class F>
RatFunc<F> unsquare(const RatFunc<F>& f, bool odd_part) {
    auto [g, h] = even_odd_split(f);
    if (odd_part) {
        if (!g.is_zero()) throw precondition_error("unsquare: element is not odd");
        return h;
    }
    if (!h.is_zero()) throw precondition_error("unsquare: element is not even");
    return g;
}

/**
 * Moebius transformation f -> (a f + b)/(c f + d) with ad - bc != 0.
 * Canonical scaling: divide through so the first nonzero of (c, d) is 1.
 */
template <class F>
class Mobius {
   public:
    Mobius() : a_(1), b_(0), c_(0), d_(1) {}
    Mobius(F a, F b, F c, F d)
        : a_(std::move(a)), b_(std::move(b)), c_(std::move(c)), d_(std::move(d)) {
        if ((a_ * d_ - b_ * c_).is_zero())
            throw precondition_error("Moebius transform with zero determinant");
        F s = !c_.is_zero() ? c_.inverse() : d_.inverse();
        a_ = a_ * s; b_ = b_ * s; c_ = c_ * s; d_ = d_ * s;
    }

    const F& a() const { return a_; }
    const F& b() const { return b_; }
    const F& c() const { return c_; }
    const F& d() const { return d_; }

    bool is_identity() const {
        return c_.is_zero() && b_.is_zero() && a_.is_one() && d_.is_one();
    }

    bool operator==(const Mobius& o) const {
        return a_ == o.a_ && b_ == o.b_ && c_ == o.c_ && d_ == o.d_;
    }
    bool operator!=(const Mobius& o) const { return !(*this == o); }

   private:
    F a_, b_, c_, d_;
};

template <class F>
RatFunc<F> mobius_apply(const Mobius<F>& m, const RatFunc<F>& f) {
    RatFunc<F> den = f * m.c() + RatFunc<F>(m.d());
    if (den.is_zero()) throw precondition_error("Moebius transform degenerates on input");
    return (f * m.a() + RatFunc<F>(m.b())) / den;
}

/**
 * Finds M with F_img = mobius_apply(M, f) when one exists, by solving the
 * homogeneous linear system N_F*(c*P_f + d*Q_f) = D_F*(a*P_f + b*Q_f) in the
 * four unknowns and checking the determinant. Absence is a value.
 */
template <class F>
std::optional<Mobius<F>> mobius_solve(const RatFunc<F>& f, const RatFunc<F>& img) {
    if (f.is_constant()) throw precondition_error("mobius_solve needs a nonconstant base");
    const Poly<F>&P = f.num(), &Q = f.den(), &N = img.num(), &D = img.den();
    // Column polynomials for (a, b, c, d).
    Poly<F> cols[4] = {D * P, D * Q, -(N * P), -(N * Q)};
    int maxdeg = -1;
    for (const auto& p : cols) maxdeg = std::max(maxdeg, p.degree());
    std::vector<std::vector<F>> m;
    for (int row = 0; row <= maxdeg; ++row) {
        std::vector<F> r(4, F(0));
        for (int col = 0; col < 4; ++col) r[col] = cols[col].at(static_cast<std::size_t>(row));
        m.push_back(std::move(r));
    }
    auto basis = detail::nullspace(m, 4);
    for (const auto& v : basis) {
        if ((v[0] * v[3] - v[1] * v[2]).is_zero()) continue;
        Mobius<F> cand(v[0], v[1], v[2], v[3]);
        if (mobius_apply(cand, f) == img) return cand;
    }
    return std::nullopt;
}

}  // namespace skewluroth
