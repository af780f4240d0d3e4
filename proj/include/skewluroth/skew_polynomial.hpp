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
#include "gaussian.hpp"
#include "limits.hpp"
#include "quaternion.hpp"

namespace skewluroth {

/**
 * Twist configurations for skew polynomial rings D[T, sigma] with the rule
 * T*a = sigma(a)*T. Each twist carries its coefficient domain, the
 * automorphism and its inverse, and equality (twists with state, like inner
 * conjugation, compare their defining unit).
 */

/// Complex conjugation on F(i); order 2. The configuration of C[T, sigma].
template <class F>
struct ConjTwist {
    using Domain = Gauss<F>;
    Domain apply(const Domain& x) const { return conj(x); }
    Domain apply_inv(const Domain& x) const { return conj(x); }
    bool operator==(const ConjTwist&) const { return true; }
};

/// Identity twist: T is central. The configuration of H[T].
template <class F>
struct CentralTwist {
    using Domain = Quaternion<F>;
    Domain apply(const Domain& x) const { return x; }
    Domain apply_inv(const Domain& x) const { return x; }
    bool operator==(const CentralTwist&) const { return true; }
};

/// Inner conjugation x -> b x b^-1 by a nonzero quaternion unit b.
template <class F>
struct InnerTwist {
    using Domain = Quaternion<F>;

    InnerTwist() : b_(1), binv_(1) {}
    explicit InnerTwist(Domain b) : b_(std::move(b)) {
        if (b_.is_zero()) throw precondition_error("inner twist by zero");
        binv_ = b_.inverse();
    }

    const Domain& unit() const { return b_; }
    Domain apply(const Domain& x) const { return b_ * x * binv_; }
    Domain apply_inv(const Domain& x) const { return binv_ * x * b_; }
    bool operator==(const InnerTwist& o) const { return b_ == o.b_; }

   private:
    Domain b_, binv_;
};

/**
 * Skew polynomial a_0 + a_1 T + ... + a_n T^n over the twist's coefficient
 * domain, multiplied by the rule whose k-th product coefficient is
 * sum_l a_l * sigma^l(b_(k-l)). The degree is additive on products, so the
 * ring has no zero divisors.
 */
template <class Twist>
class SkewPoly {
   public:
    using D = typename Twist::Domain;

    SkewPoly() = default;
    explicit SkewPoly(Twist tw) : tw_(std::move(tw)) {}
    SkewPoly(Twist tw, std::vector<D> coeffs) : tw_(std::move(tw)), c_(std::move(coeffs)) {
        trim();
    }
    SkewPoly(Twist tw, std::initializer_list<D> coeffs) : tw_(std::move(tw)), c_(coeffs) {
        trim();
    }

    static SkewPoly t(Twist tw = Twist()) {
        return SkewPoly(std::move(tw), std::vector<D>{D(0), D(1)});
    }
    static SkewPoly constant(D v, Twist tw = Twist()) {
        return SkewPoly(std::move(tw), std::vector<D>{std::move(v)});
    }
    static SkewPoly monomial(D c, std::size_t e, Twist tw = Twist()) {
        if (c.is_zero()) return SkewPoly(std::move(tw));
        std::vector<D> v(e + 1, D(0));
        v[e] = std::move(c);
        return SkewPoly(std::move(tw), std::move(v));
    }

    const Twist& twist() const { return tw_; }
    int degree() const { return static_cast<int>(c_.size()) - 1; }
    bool is_zero() const { return c_.empty(); }
    bool is_constant() const { return c_.size() <= 1; }
    const std::vector<D>& coefficients() const { return c_; }
    D at(std::size_t i) const { return i < c_.size() ? c_[i] : D(0); }
    const D& lc() const {
        if (c_.empty()) throw precondition_error("leading coefficient of zero polynomial");
        return c_.back();
    }
    bool is_monic() const { return !c_.empty() && c_.back().is_one(); }

    SkewPoly operator-() const {
        SkewPoly r = *this;
        for (auto& c : r.c_) c = -c;
        return r;
    }
    SkewPoly operator+(const SkewPoly& o) const {
        require_same(o);
        std::vector<D> r(std::max(c_.size(), o.c_.size()), D(0));
        for (std::size_t i = 0; i < c_.size(); ++i) r[i] = r[i] + c_[i];
        for (std::size_t i = 0; i < o.c_.size(); ++i) r[i] = r[i] + o.c_[i];
        return SkewPoly(tw_, std::move(r));
    }
    SkewPoly operator-(const SkewPoly& o) const { return *this + (-o); }

    SkewPoly operator*(const SkewPoly& o) const {
        require_same(o);
        if (is_zero() || o.is_zero()) return SkewPoly(tw_);
        check_degree(static_cast<long>(degree()) + o.degree());
        // twisted[l][m] = sigma^l(b_m)
        std::vector<std::vector<D>> twisted(c_.size());
        twisted[0] = o.c_;
        for (std::size_t l = 1; l < c_.size(); ++l) {
            twisted[l].reserve(o.c_.size());
            for (const auto& b : twisted[l - 1]) twisted[l].push_back(tw_.apply(b));
        }
        std::vector<D> r(c_.size() + o.c_.size() - 1, D(0));
        for (std::size_t l = 0; l < c_.size(); ++l) {
            if (c_[l].is_zero()) continue;
            for (std::size_t m = 0; m < o.c_.size(); ++m)
                r[l + m] = r[l + m] + c_[l] * twisted[l][m];
        }
        return SkewPoly(tw_, std::move(r));
    }

    /// Left scale c * p (coefficient-wise: the constant sits left of T powers).
    SkewPoly scale_left(const D& s) const {
        if (s.is_zero()) return SkewPoly(tw_);
        std::vector<D> r;
        r.reserve(c_.size());
        for (const auto& c : c_) r.push_back(s * c);
        return SkewPoly(tw_, std::move(r));
    }

    /// Right scale p * s: coefficient i becomes a_i * sigma^i(s).
    SkewPoly scale_right(const D& s) const {
        if (s.is_zero()) return SkewPoly(tw_);
        std::vector<D> r;
        r.reserve(c_.size());
        D cur = s;
        for (std::size_t i = 0; i < c_.size(); ++i) {
            if (i > 0) cur = tw_.apply(cur);
            r.push_back(c_[i] * cur);
        }
        return SkewPoly(tw_, std::move(r));
    }

    SkewPoly& operator+=(const SkewPoly& o) { return *this = *this + o; }
    SkewPoly& operator-=(const SkewPoly& o) { return *this = *this - o; }
    SkewPoly& operator*=(const SkewPoly& o) { return *this = *this * o; }

    bool operator==(const SkewPoly& o) const { return tw_ == o.tw_ && c_ == o.c_; }
    bool operator!=(const SkewPoly& o) const { return !(*this == o); }

    /// Make monic by right-scaling with sigma^(-deg)(lc^-1); value-preserving
    /// for numerator/denominator pairs scaled together.
    SkewPoly monic_right() const {
        if (is_zero() || is_monic()) return *this;
        return scale_right(right_unit_for_monic());
    }

    /// The unit u with (*this * u) monic.
    D right_unit_for_monic() const {
        D u = lc().inverse();
        for (int i = 0; i < degree(); ++i) u = tw_.apply_inv(u);
        return u;
    }

    /// Make monic by left-scaling with lc^-1 (for gcd normalization).
    SkewPoly monic_left() const {
        if (is_zero() || is_monic()) return *this;
        return scale_left(lc().inverse());
    }

    template <class Fn>
    SkewPoly map_coeffs(Fn&& fn) const {
        std::vector<D> r;
        r.reserve(c_.size());
        for (const auto& c : c_) r.push_back(fn(c));
        return SkewPoly(tw_, std::move(r));
    }

    void require_same(const SkewPoly& o) const {
        if (!(tw_ == o.tw_)) throw precondition_error("mixed twist configurations");
    }

   private:
    void trim() {
        while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
    }

    Twist tw_;
    std::vector<D> c_;
};

/// a = q*b + r with deg r < deg b (right division: quotient on the left).
template <class Twist>
std::pair<SkewPoly<Twist>, SkewPoly<Twist>> right_divmod(const SkewPoly<Twist>& a,
                                                         const SkewPoly<Twist>& b) {
    a.require_same(b);
    if (b.is_zero()) throw division_by_zero("skew division by zero");
    using D = typename Twist::Domain;
    const Twist& tw = a.twist();
    SkewPoly<Twist> q(tw), r = a;
    // sigma^e(lc_b) for the current exponent gap e, maintained incrementally.
    while (!r.is_zero() && r.degree() >= b.degree()) {
        std::size_t e = static_cast<std::size_t>(r.degree() - b.degree());
        D lb = b.lc();
        for (std::size_t i = 0; i < e; ++i) lb = tw.apply(lb);
        D c = r.lc() * lb.inverse();
        SkewPoly<Twist> m = SkewPoly<Twist>::monomial(std::move(c), e, tw);
        q += m;
        r -= m * b;
    }
    return {q, r};
}

/// a = b*q + r with deg r < deg b (left division: quotient on the right).
template <class Twist>
std::pair<SkewPoly<Twist>, SkewPoly<Twist>> left_divmod(const SkewPoly<Twist>& a,
                                                        const SkewPoly<Twist>& b) {
    a.require_same(b);
    if (b.is_zero()) throw division_by_zero("skew division by zero");
    using D = typename Twist::Domain;
    const Twist& tw = a.twist();
    SkewPoly<Twist> q(tw), r = a;
    while (!r.is_zero() && r.degree() >= b.degree()) {
        std::size_t e = static_cast<std::size_t>(r.degree() - b.degree());
        // b * (c T^e): leading coefficient lc_b * sigma^(deg b)(c).
        D c = b.lc().inverse() * r.lc();
        for (int i = 0; i < b.degree(); ++i) c = tw.apply_inv(c);
        SkewPoly<Twist> m = SkewPoly<Twist>::monomial(std::move(c), e, tw);
        q += m;
        r -= b * m;
    }
    return {q, r};
}

/// Greatest common right divisor, monic, by iterated right division.
template <class Twist>
SkewPoly<Twist> gcrd(SkewPoly<Twist> a, SkewPoly<Twist> b) {
    a.require_same(b);
    if (a.is_zero() && b.is_zero())
        throw precondition_error("gcrd of two zero polynomials");
    while (!b.is_zero()) {
        SkewPoly<Twist> r = right_divmod(a, b).second;
        a = std::move(b);
        b = r.monic_left();  // unit left factors do not change right divisors
    }
    return a.monic_left();
}

/// Greatest common left divisor, monic, by iterated left division.
template <class Twist>
SkewPoly<Twist> gcld(SkewPoly<Twist> a, SkewPoly<Twist> b) {
    a.require_same(b);
    if (a.is_zero() && b.is_zero())
        throw precondition_error("gcld of two zero polynomials");
    while (!b.is_zero()) {
        SkewPoly<Twist> r = left_divmod(a, b).second;
        a = std::move(b);
        b = r.monic_right();
    }
    return a.monic_right();
}

template <class Twist>
struct Lclm {
    SkewPoly<Twist> m;      ///< the least common left multiple, monic
    SkewPoly<Twist> a_cof;  ///< a * a_cof = m
    SkewPoly<Twist> b_cof;  ///< b * b_cof = m
};

/**
 * Least common left multiple m = a*a' = b*b' (the Ore common right multiple
 * witnessing x*r = y*s), with its cofactors. Computed by the extended left
 * Euclidean algorithm; deg m = deg a + deg b - deg gcld(a, b).
 */
template <class Twist>
Lclm<Twist> lclm(const SkewPoly<Twist>& a, const SkewPoly<Twist>& b) {
    a.require_same(b);
    if (a.is_zero() || b.is_zero())
        throw precondition_error("lclm needs nonzero polynomials");
    const Twist& tw = a.twist();
    SkewPoly<Twist> r0 = a, r1 = b;
    SkewPoly<Twist> one = SkewPoly<Twist>::constant(typename Twist::Domain(1), tw);
    SkewPoly<Twist> u0 = one, v0(tw), u1(tw), v1 = one;
    while (!r1.is_zero()) {
        auto [q, r2] = left_divmod(r0, r1);
        // Cofactors multiply on the right, matching r_i = a*u_i + b*v_i.
        SkewPoly<Twist> u2 = u0 - u1 * q, v2 = v0 - v1 * q;
        if (!r2.is_zero()) {
            auto s = r2.right_unit_for_monic();
            r2 = r2.scale_right(s);
            u2 = u2.scale_right(s);
            v2 = v2.scale_right(s);
        }
        r0 = std::move(r1); r1 = std::move(r2);
        u0 = std::move(u1); u1 = std::move(u2);
        v0 = std::move(v1); v1 = std::move(v2);
    }
    SkewPoly<Twist> m = a * u1;
    if (m.is_zero()) throw internal_error("lclm degenerated to zero");
    auto s = m.right_unit_for_monic();
    return {m.scale_right(s), u1.scale_right(s), (-v1).scale_right(s)};
}

/**
 * Change of variable for an inner twist: with sigma the conjugation by b,
 * T^n = b^n * (b^-1 T)^n and U = b^-1 T is central. Rewrites p in U, so
 * coefficient n becomes a_n * b^n, and returns the result in the central
 * configuration.
 */
template <class F>
SkewPoly<CentralTwist<F>> untwist_inner(const SkewPoly<InnerTwist<F>>& p,
                                        const Quaternion<F>& b) {
    if (b.is_zero()) throw precondition_error("untwist by zero unit");
    if (!(p.twist().unit() == b))
        throw precondition_error("untwist unit does not match the polynomial's twist");
    std::vector<Quaternion<F>> r;
    r.reserve(p.coefficients().size());
    Quaternion<F> bpow(1);
    for (std::size_t n = 0; n < p.coefficients().size(); ++n) {
        if (n > 0) bpow = bpow * b;
        r.push_back(p.coefficients()[n] * bpow);
    }
    return SkewPoly<CentralTwist<F>>(CentralTwist<F>(), std::move(r));
}

}  // namespace skewluroth
