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

#include <initializer_list>
#include <tuple>
#include <utility>
#include <vector>

#include "error.hpp"
#include "limits.hpp"

namespace skewluroth {

/**
 * Dense univariate polynomial over a commutative field F, coefficients stored
 * ascending. No trailing zero coefficient; the zero polynomial is the empty
 * list and has degree -1 (standing in for degree minus infinity).
 */
template <class F>
class Poly {
   public:
    Poly() = default;
    Poly(long v) { if (v != 0) c_.push_back(F(v)); }  // NOLINT: implicit constant
    Poly(F v) {  // NOLINT: implicit constant
        if (!v.is_zero()) c_.push_back(std::move(v));
    }
    Poly(std::initializer_list<F> coeffs) : c_(coeffs) { trim(); }
    explicit Poly(std::vector<F> coeffs) : c_(std::move(coeffs)) { trim(); }

    /// The monomial X.
    static Poly x() { return Poly(std::vector<F>{F(0), F(1)}); }
    /// c * X^e.
    static Poly monomial(F c, std::size_t e) {
        if (c.is_zero()) return Poly();
        std::vector<F> v(e + 1, F(0));
        v[e] = std::move(c);
        return Poly(std::move(v));
    }

    int degree() const { return static_cast<int>(c_.size()) - 1; }
    bool is_zero() const { return c_.empty(); }
    bool is_constant() const { return c_.size() <= 1; }
    const std::vector<F>& coefficients() const { return c_; }

    /// Coefficient of X^i (zero beyond the degree).
    F at(std::size_t i) const { return i < c_.size() ? c_[i] : F(0); }

    const F& lc() const {
        if (c_.empty()) throw precondition_error("leading coefficient of zero polynomial");
        return c_.back();
    }

    F constant_term() const { return at(0); }

    bool is_monic() const { return !c_.empty() && c_.back().is_one(); }

    Poly operator-() const {
        Poly r = *this;
        for (auto& c : r.c_) c = -c;
        return r;
    }

    Poly operator+(const Poly& o) const {
        std::vector<F> r(std::max(c_.size(), o.c_.size()), F(0));
        for (std::size_t i = 0; i < c_.size(); ++i) r[i] += c_[i];
        for (std::size_t i = 0; i < o.c_.size(); ++i) r[i] += o.c_[i];
        return Poly(std::move(r));
    }
    Poly operator-(const Poly& o) const { return *this + (-o); }

    Poly operator*(const Poly& o) const {
        if (is_zero() || o.is_zero()) return Poly();
        check_degree(static_cast<long>(degree()) + o.degree());
        std::vector<F> r(c_.size() + o.c_.size() - 1, F(0));
        for (std::size_t i = 0; i < c_.size(); ++i)
            for (std::size_t j = 0; j < o.c_.size(); ++j) r[i + j] += c_[i] * o.c_[j];
        return Poly(std::move(r));
    }

    Poly operator*(const F& s) const {
        if (s.is_zero()) return Poly();
        Poly r = *this;
        for (auto& c : r.c_) c = c * s;
        return r;
    }

    Poly& operator+=(const Poly& o) { return *this = *this + o; }
    Poly& operator-=(const Poly& o) { return *this = *this - o; }
    Poly& operator*=(const Poly& o) { return *this = *this * o; }

    bool operator==(const Poly& o) const { return c_ == o.c_; }
    bool operator!=(const Poly& o) const { return !(*this == o); }

    Poly monic() const {
        if (is_zero()) return *this;
        return *this * lc().inverse();
    }

    F eval(const F& x) const {
        F r(0);
        for (auto it = c_.rbegin(); it != c_.rend(); ++it) r = r * x + *it;
        return r;
    }

    /// p(-X): alternate the signs of odd coefficients.
    Poly substitute_neg() const {
        Poly r = *this;
        for (std::size_t i = 1; i < r.c_.size(); i += 2) r.c_[i] = -r.c_[i];
        return r;
    }

    /// p(X) -> p(X^2).
    Poly spread_square() const {
        if (is_zero()) return Poly();
        check_degree(2L * degree());
        std::vector<F> r(2 * c_.size() - 1, F(0));
        for (std::size_t i = 0; i < c_.size(); ++i) r[2 * i] = c_[i];
        return Poly(std::move(r));
    }

    /// Split p(X) = e(X^2) + X * o(X^2); returns (e, o) as polynomials in one
    /// variable of half the degree.
    std::pair<Poly, Poly> even_odd_parts() const {
        std::vector<F> e, o;
        for (std::size_t i = 0; i < c_.size(); ++i)
            (i % 2 == 0 ? e : o).push_back(c_[i]);
        return {Poly(std::move(e)), Poly(std::move(o))};
    }

    template <class G, class Fn>
    Poly<G> map(Fn&& fn) const {
        std::vector<G> r;
        r.reserve(c_.size());
        for (const auto& c : c_) r.push_back(fn(c));
        return Poly<G>(std::move(r));
    }

   private:
    void trim() {
        while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
    }

    std::vector<F> c_;
};

template <class F>
std::pair<Poly<F>, Poly<F>> divmod(const Poly<F>& a, const Poly<F>& b) {
    if (b.is_zero()) throw division_by_zero("polynomial division by zero");
    Poly<F> q, r = a;
    F lci = b.lc().inverse();
    while (!r.is_zero() && r.degree() >= b.degree()) {
        std::size_t e = static_cast<std::size_t>(r.degree() - b.degree());
        Poly<F> m = Poly<F>::monomial(r.lc() * lci, e);
        q += m;
        r -= m * b;
    }
    return {q, r};
}

/// Monic gcd by the Euclidean algorithm (remainders re-normalized each step
/// to curb coefficient growth).
template <class F>
Poly<F> gcd(Poly<F> a, Poly<F> b) {
    while (!b.is_zero()) {
        Poly<F> r = divmod(a, b).second;
        a = std::move(b);
        b = r.is_zero() ? r : r.monic();
    }
    return a.monic();
}

/// Extended Euclid: returns (g, u, v) with u*a + v*b = g, g monic.
template <class F>
std::tuple<Poly<F>, Poly<F>, Poly<F>> extended_gcd(const Poly<F>& a, const Poly<F>& b) {
    Poly<F> r0 = a, r1 = b;
    Poly<F> u0(1), v0, u1, v1(1);
    while (!r1.is_zero()) {
        auto [q, r2] = divmod(r0, r1);
        Poly<F> u2 = u0 - q * u1, v2 = v0 - q * v1;
        r0 = std::move(r1); r1 = std::move(r2);
        u0 = std::move(u1); u1 = std::move(u2);
        v0 = std::move(v1); v1 = std::move(v2);
    }
    if (r0.is_zero()) return {r0, u0, v0};
    F s = r0.lc().inverse();
    return {r0 * s, u0 * s, v0 * s};
}

/// Homogenized composition: sum_i p_i * num^i * den^(r-i), the numerator of
/// p(num/den) scaled by den^r.
template <class F>
Poly<F> compose_homogeneous(const Poly<F>& p, const Poly<F>& num, const Poly<F>& den,
                            std::size_t r) {
    std::vector<Poly<F>> num_pow(r + 1), den_pow(r + 1);
    num_pow[0] = Poly<F>(1);
    den_pow[0] = Poly<F>(1);
    for (std::size_t i = 1; i <= r; ++i) {
        num_pow[i] = num_pow[i - 1] * num;
        den_pow[i] = den_pow[i - 1] * den;
    }
    Poly<F> acc;
    for (std::size_t i = 0; i <= r; ++i) {
        F c = p.at(i);
        if (c.is_zero()) continue;
        acc += num_pow[i] * den_pow[r - i] * c;
    }
    return acc;
}

}  // namespace skewluroth
