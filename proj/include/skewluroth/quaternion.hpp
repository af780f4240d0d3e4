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

#include <string>
#include <utility>

#include "error.hpp"
#include "traits.hpp"

namespace skewluroth {

/**
 * Quaternion a + b*i + c*j + d*k over a commutative coefficient field F with
 * i^2 = j^2 = k^2 = ijk = -1. F must be formally real so the norm
 * a^2+b^2+c^2+d^2 vanishes only at zero and the algebra is a division ring.
 *
 * Instantiated with F = Rat or QuadRat for scalar quaternions, and with
 * F = RatFunc<.> for the division ring of quaternion rational functions.
 */
template <class F>
class Quaternion {
    static_assert(is_formally_real_v<F>,
                  "quaternion components need a formally real coefficient field");

   public:
    Quaternion() = default;
    Quaternion(long v) : a_(v) {}  // NOLINT: implicit by design
    Quaternion(F a) : a_(std::move(a)) {}  // NOLINT: implicit by design
    Quaternion(F a, F b, F c, F d)
        : a_(std::move(a)), b_(std::move(b)), c_(std::move(c)), d_(std::move(d)) {}

    static Quaternion i() { return Quaternion(F(0), F(1), F(0), F(0)); }
    static Quaternion j() { return Quaternion(F(0), F(0), F(1), F(0)); }
    static Quaternion k() { return Quaternion(F(0), F(0), F(0), F(1)); }

    const F& a() const { return a_; }
    const F& b() const { return b_; }
    const F& c() const { return c_; }
    const F& d() const { return d_; }

    bool is_zero() const {
        return a_.is_zero() && b_.is_zero() && c_.is_zero() && d_.is_zero();
    }
    bool is_one() const {
        return a_.is_one() && b_.is_zero() && c_.is_zero() && d_.is_zero();
    }
    bool is_scalar() const { return b_.is_zero() && c_.is_zero() && d_.is_zero(); }

    Quaternion operator-() const { return Quaternion(-a_, -b_, -c_, -d_); }
    Quaternion operator+(const Quaternion& o) const {
        return Quaternion(a_ + o.a_, b_ + o.b_, c_ + o.c_, d_ + o.d_);
    }
    Quaternion operator-(const Quaternion& o) const {
        return Quaternion(a_ - o.a_, b_ - o.b_, c_ - o.c_, d_ - o.d_);
    }
    Quaternion operator*(const Quaternion& o) const {
        return Quaternion(
            a_ * o.a_ - b_ * o.b_ - c_ * o.c_ - d_ * o.d_,
            a_ * o.b_ + b_ * o.a_ + c_ * o.d_ - d_ * o.c_,
            a_ * o.c_ - b_ * o.d_ + c_ * o.a_ + d_ * o.b_,
            a_ * o.d_ + b_ * o.c_ - c_ * o.b_ + d_ * o.a_);
    }
    Quaternion operator/(const Quaternion& o) const { return *this * o.inverse(); }
    Quaternion& operator+=(const Quaternion& o) { return *this = *this + o; }
    Quaternion& operator-=(const Quaternion& o) { return *this = *this - o; }
    Quaternion& operator*=(const Quaternion& o) { return *this = *this * o; }

    /// Quaternion conjugate a - bi - cj - dk.
    Quaternion conjugate() const { return Quaternion(a_, -b_, -c_, -d_); }

    /// Reduced norm a^2 + b^2 + c^2 + d^2 (zero iff the element is zero).
    F norm() const { return a_ * a_ + b_ * b_ + c_ * c_ + d_ * d_; }

    Quaternion inverse() const {
        if (is_zero()) throw division_by_zero();
        F n = norm();
        return Quaternion(a_ / n, -b_ / n, -c_ / n, -d_ / n);
    }

    bool operator==(const Quaternion& o) const {
        return a_ == o.a_ && b_ == o.b_ && c_ == o.c_ && d_ == o.d_;
    }
    bool operator!=(const Quaternion& o) const { return !(*this == o); }

   private:
    F a_, b_, c_, d_;
};

/// The automorphism a+bi+cj+dk -> a-bi+cj-dk (order 2); conjugation by j.
template <class F>
Quaternion<F> quat_sigma(const Quaternion<F>& q) {
    return Quaternion<F>(q.a(), -q.b(), q.c(), -q.d());
}

/// The automorphism a+bi+cj+dk -> a+bi-cj-dk (order 2); conjugation by i.
template <class F>
Quaternion<F> quat_tau(const Quaternion<F>& q) {
    return Quaternion<F>(q.a(), q.b(), -q.c(), -q.d());
}

}  // namespace skewluroth
