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

#include <boost/multiprecision/cpp_int.hpp>

#include <optional>
#include <string>
#include <utility>

#include "error.hpp"
#include "traits.hpp"

namespace skewluroth {

using Integer = boost::multiprecision::cpp_int;

/**
 * Arbitrary-precision rational number.
 *
 * Always kept in canonical form: gcd(|numerator|, denominator) = 1,
 * denominator > 0, and zero is 0/1. The underlying storage is
 * boost::multiprecision::cpp_rational, which maintains exactly this form.
 */
class Rat {
   public:
    using Backend = boost::multiprecision::cpp_rational;

    Rat() = default;
    Rat(long v) : v_(v) {}  // NOLINT: implicit by design, mirrors int literals
    Rat(const Integer& num, const Integer& den) {
        if (den == 0) throw division_by_zero("rational with zero denominator");
        v_ = den < 0 ? Backend(-num, -den) : Backend(num, den);
    }
    explicit Rat(Backend v) : v_(std::move(v)) {}

    Integer numerator() const { return boost::multiprecision::numerator(v_); }
    Integer denominator() const { return boost::multiprecision::denominator(v_); }

    bool is_zero() const { return v_.is_zero(); }
    bool is_one() const { return v_ == 1; }
    bool is_integer() const { return denominator() == 1; }
    int sign() const { return v_.sign(); }

    Rat operator-() const { return Rat(Backend(-v_)); }
    Rat operator+(const Rat& o) const { return Rat(Backend(v_ + o.v_)); }
    Rat operator-(const Rat& o) const { return Rat(Backend(v_ - o.v_)); }
    Rat operator*(const Rat& o) const { return Rat(Backend(v_ * o.v_)); }
    Rat operator/(const Rat& o) const {
        if (o.is_zero()) throw division_by_zero();
        return Rat(Backend(v_ / o.v_));
    }
    Rat& operator+=(const Rat& o) { v_ += o.v_; return *this; }
    Rat& operator-=(const Rat& o) { v_ -= o.v_; return *this; }
    Rat& operator*=(const Rat& o) { v_ *= o.v_; return *this; }
    Rat& operator/=(const Rat& o) { return *this = *this / o; }

    Rat inverse() const {
        if (is_zero()) throw division_by_zero();
        return Rat(Backend(1 / v_));
    }

    bool operator==(const Rat& o) const { return v_ == o.v_; }
    bool operator!=(const Rat& o) const { return v_ != o.v_; }
    bool operator<(const Rat& o) const { return v_ < o.v_; }
    bool operator<=(const Rat& o) const { return v_ <= o.v_; }
    bool operator>(const Rat& o) const { return v_ > o.v_; }
    bool operator>=(const Rat& o) const { return v_ >= o.v_; }

    Rat abs() const { return sign() < 0 ? -*this : *this; }

    Rat pow(unsigned e) const {
        Rat r = 1, base = *this;
        for (; e; e >>= 1) {
            if (e & 1) r *= base;
            if (e > 1) base *= base;
        }
        return r;
    }

    std::string to_string() const { return v_.str(); }

   private:
    Backend v_;
};

template <>
inline constexpr bool is_formally_real_v<Rat> = true;

inline Rat conj(const Rat& x) { return x; }

/// Exact square root when the argument is a perfect rational square.
inline std::optional<Rat> exact_sqrt(const Rat& x) {
    if (x.sign() < 0) return std::nullopt;
    if (x.is_zero()) return Rat(0);
    Integer n = x.numerator(), d = x.denominator();
    Integer rn = boost::multiprecision::sqrt(n), rd = boost::multiprecision::sqrt(d);
    if (rn * rn != n || rd * rd != d) return std::nullopt;
    return Rat(rn, rd);
}

inline bool is_square(const Rat& x) { return exact_sqrt(x).has_value(); }

}  // namespace skewluroth
