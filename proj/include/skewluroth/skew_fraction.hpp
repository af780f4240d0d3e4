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

#include <utility>

#include "skew_polynomial.hpp"

namespace skewluroth {

/**
 * Right fraction N * D^-1 in the Ore quotient skew field of a skew polynomial
 * ring. Canonical form: gcrd(N, D) = 1 and D monic; left fractions are never
 * materialized (inversion swaps the pair, the Ore exchange handles mixed
 * products). Equality of canonical forms decides equality in the skew field.
 */
template <class Twist>
class SkewFrac {
   public:
    using P = SkewPoly<Twist>;
    using D = typename Twist::Domain;

    SkewFrac() : num_(Twist()), den_(P::constant(D(1))) {}
    explicit SkewFrac(Twist tw)
        : num_(tw), den_(P::constant(D(1), tw)) {}
    explicit SkewFrac(P num) : num_(std::move(num)), den_(P::constant(D(1), num_.twist())) {
        reduce();
    }
    SkewFrac(P num, P den) : num_(std::move(num)), den_(std::move(den)) {
        num_.require_same(den_);
        reduce();
    }

    static SkewFrac t(Twist tw = Twist()) { return SkewFrac(P::t(std::move(tw))); }
    static SkewFrac constant(D v, Twist tw = Twist()) {
        return SkewFrac(P::constant(std::move(v), std::move(tw)));
    }

    const P& num() const { return num_; }
    const P& den() const { return den_; }
    const Twist& twist() const { return num_.twist(); }

    bool is_zero() const { return num_.is_zero(); }
    bool is_one() const { return num_.is_monic() && num_.is_constant() && den_.is_constant(); }
    bool is_polynomial() const { return den_.is_constant(); }
    bool is_constant() const { return num_.is_constant() && den_.is_constant(); }

    D constant_value() const {
        if (!is_constant()) throw precondition_error("skew fraction is not constant");
        return num_.is_zero() ? D(0) : num_.at(0);
    }

    SkewFrac operator-() const { return make(-num_, den_); }

    SkewFrac operator+(const SkewFrac& o) const {
        require_same(o);
        if (is_zero()) return o;
        if (o.is_zero()) return *this;
        // Common right multiple of the denominators via the lclm witnesses.
        auto l = lclm(den_, o.den_);
        return SkewFrac(num_ * l.a_cof + o.num_ * l.b_cof, l.m);
    }
    SkewFrac operator-(const SkewFrac& o) const { return *this + (-o); }

    SkewFrac operator*(const SkewFrac& o) const {
        require_same(o);
        if (is_zero() || o.is_zero()) return SkewFrac(twist());
        // Ore exchange: den^-1 * o.num = c1 * b1^-1 with o.num*b1 = den*c1.
        if (o.num_.is_constant() && den_.is_constant()) {
            return SkewFrac(num_ * o.num_, o.den_);
        }
        auto l = lclm(den_, o.num_);
        // l.m = den*l.a_cof = o.num*l.b_cof, so den^-1*o.num = l.a_cof*l.b_cof^-1.
        return SkewFrac(num_ * l.a_cof, o.den_ * l.b_cof);
    }

    SkewFrac inverse() const {
        if (is_zero()) throw division_by_zero("inversion of zero skew fraction");
        return make_reduced_unnormalized(den_, num_);
    }

    SkewFrac operator/(const SkewFrac& o) const { return *this * o.inverse(); }
    SkewFrac& operator+=(const SkewFrac& o) { return *this = *this + o; }
    SkewFrac& operator-=(const SkewFrac& o) { return *this = *this - o; }
    SkewFrac& operator*=(const SkewFrac& o) { return *this = *this * o; }
    SkewFrac& operator/=(const SkewFrac& o) { return *this = *this / o; }

    bool operator==(const SkewFrac& o) const { return num_ == o.num_ && den_ == o.den_; }
    bool operator!=(const SkewFrac& o) const { return !(*this == o); }

    template <class Fn>
    SkewFrac map_coeffs(Fn&& fn) const {
        return SkewFrac(num_.map_coeffs(fn), den_.map_coeffs(fn));
    }

    void require_same(const SkewFrac& o) const { num_.require_same(o.num_); }

   private:
    static SkewFrac make(P num, P den) {
        SkewFrac r{};
        r.num_ = std::move(num);
        r.den_ = std::move(den);
        return r;  // caller guarantees canonical form
    }

    // For inversion: the pair is already gcrd-reduced, only re-monicize.
    static SkewFrac make_reduced_unnormalized(P num, P den) {
        auto u = den.right_unit_for_monic();
        return make(num.scale_right(u), den.scale_right(u));
    }

    void reduce() {
        if (den_.is_zero()) throw division_by_zero("skew fraction with zero denominator");
        if (num_.is_zero()) {
            den_ = P::constant(D(1), num_.twist());
            return;
        }
        P g = gcrd(num_, den_);
        if (g.degree() > 0) {
            num_ = right_divmod(num_, g).first;
            den_ = right_divmod(den_, g).first;
        }
        if (!den_.is_monic()) {
            auto u = den_.right_unit_for_monic();
            num_ = num_.scale_right(u);
            den_ = den_.scale_right(u);
        }
    }

    P num_, den_;
};

/// Equality in the quotient skew field (canonical forms are unique).
template <class Twist>
bool sfrac_eq(const SkewFrac<Twist>& x, const SkewFrac<Twist>& y) {
    return x == y;
}

/// Coefficient-wise complex conjugation of numerator and denominator: the
/// order-2 automorphism of C(T, sigma) that conjugation on H(X) pulls back to.
template <class F>
SkewFrac<ConjTwist<F>> sigma_hat(const SkewFrac<ConjTwist<F>>& x) {
    return x.map_coeffs([](const Gauss<F>& c) { return conj(c); });
}

}  // namespace skewluroth
