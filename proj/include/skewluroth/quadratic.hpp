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

#include <optional>
#include <string>
#include <utility>

#include "error.hpp"
#include "rational.hpp"
#include "traits.hpp"

namespace skewluroth {

/**
 * Element a + b*sqrt(d) of a real quadratic extension Q(sqrt(d)), with d a
 * squarefree integer > 1. A single quadratic layer only: mixing two different
 * radicands throws extension_mismatch.
 *
 * Purely rational values carry radicand 0, so they interoperate with any
 * extension (Q embeds in every Q(sqrt(d))). Field constants (zero, one)
 * therefore need no radicand up front.
 */
class QuadRat {
   public:
    QuadRat() = default;
    QuadRat(long v) : a_(v) {}  // NOLINT: implicit by design
    QuadRat(Rat v) : a_(std::move(v)) {}  // NOLINT: implicit by design
    QuadRat(Rat a, Rat b, const Integer& d) : a_(std::move(a)), b_(std::move(b)), d_(d) {
        if (b_.is_zero()) {
            d_ = 0;
        } else if (d_ <= 1) {
            throw extension_mismatch("radicand must be a squarefree integer > 1");
        }
    }

    const Rat& rational_part() const { return a_; }
    const Rat& radical_part() const { return b_; }
    const Integer& radicand() const { return d_; }

    bool is_zero() const { return a_.is_zero() && b_.is_zero(); }
    bool is_one() const { return a_.is_one() && b_.is_zero(); }
    bool is_rational() const { return b_.is_zero(); }
    const Rat& rational_value() const {
        if (!is_rational()) throw precondition_error("value is not rational");
        return a_;
    }

    QuadRat operator-() const { return make(-a_, -b_, d_); }

    QuadRat operator+(const QuadRat& o) const {
        Integer d = unify(o);
        return make(a_ + o.a_, b_ + o.b_, d);
    }
    QuadRat operator-(const QuadRat& o) const {
        Integer d = unify(o);
        return make(a_ - o.a_, b_ - o.b_, d);
    }
    QuadRat operator*(const QuadRat& o) const {
        Integer d = unify(o);
        return make(a_ * o.a_ + b_ * o.b_ * Rat(Integer(d), Integer(1)),
                    a_ * o.b_ + b_ * o.a_, d);
    }
    QuadRat operator/(const QuadRat& o) const { return *this * o.inverse(); }
    QuadRat& operator+=(const QuadRat& o) { return *this = *this + o; }
    QuadRat& operator-=(const QuadRat& o) { return *this = *this - o; }
    QuadRat& operator*=(const QuadRat& o) { return *this = *this * o; }
    QuadRat& operator/=(const QuadRat& o) { return *this = *this / o; }

    /// Galois conjugate a - b*sqrt(d).
    QuadRat galois_conj() const { return make(a_, -b_, d_); }

    QuadRat inverse() const {
        if (is_zero()) throw division_by_zero();
        // Norm a^2 - d b^2 vanishes only at zero (d squarefree > 1).
        Rat n = a_ * a_ - b_ * b_ * Rat(Integer(d_), Integer(1));
        if (n.is_zero()) throw internal_error("quadratic norm vanished on nonzero element");
        return make(a_ / n, -b_ / n, d_);
    }

    /// Sign under the real embedding with sqrt(d) > 0.
    int sign() const {
        if (b_.is_zero()) return a_.sign();
        if (a_.is_zero()) return b_.sign();
        if (a_.sign() == b_.sign()) return a_.sign();
        // a and b of opposite sign: compare a^2 against d b^2.
        Rat lhs = a_ * a_, rhs = b_ * b_ * Rat(Integer(d_), Integer(1));
        if (lhs == rhs) return 0;  // unreachable for squarefree d > 1
        return (lhs > rhs) ? a_.sign() : b_.sign();
    }

    QuadRat abs() const { return sign() < 0 ? -*this : *this; }

    bool operator==(const QuadRat& o) const {
        if (a_ != o.a_ || b_ != o.b_) return false;
        return b_.is_zero() || d_ == o.d_;
    }
    bool operator!=(const QuadRat& o) const { return !(*this == o); }

    std::string to_string() const {
        if (b_.is_zero()) return a_.to_string();
        std::string rad = "sqrt(" + d_.str() + ")";
        std::string tail = b_.is_one() ? rad : (b_ == Rat(-1) ? "-" + rad : b_.to_string() + "*" + rad);
        if (a_.is_zero()) return tail;
        if (b_.sign() > 0) return a_.to_string() + "+" + tail;
        return a_.to_string() + tail;  // tail already carries the minus
    }

   private:
    static QuadRat make(Rat a, Rat b, const Integer& d) {
        QuadRat r;
        r.a_ = std::move(a);
        r.b_ = std::move(b);
        r.d_ = r.b_.is_zero() ? Integer(0) : d;
        return r;
    }

    Integer unify(const QuadRat& o) const {
        if (d_ == 0) return o.d_;
        if (o.d_ == 0 || o.d_ == d_) return d_;
        throw extension_mismatch("mixing sqrt(" + d_.str() + ") with sqrt(" + o.d_.str() +
                                 "): nested or mismatched extensions are not supported");
    }

    Rat a_, b_;
    Integer d_ = 0;
};

template <>
inline constexpr bool is_formally_real_v<QuadRat> = true;

inline QuadRat conj(const QuadRat& x) { return x; }

/// Exact square root inside Q(sqrt(d)), staying in the single layer:
/// succeeds when x is a square of a rational or of a rational multiple of
/// sqrt(d). Anything deeper is rejected.
inline std::optional<QuadRat> sqrt_in_field(const QuadRat& x, const Integer& d) {
    if (x.is_zero()) return QuadRat(0);
    if (x.is_rational()) {
        const Rat& r = x.rational_value();
        if (auto s = exact_sqrt(r)) return QuadRat(*s);
        if (d > 1) {
            if (auto s = exact_sqrt(r / Rat(d, Integer(1)))) return QuadRat(Rat(0), *s, d);
        }
        return std::nullopt;
    }
    // (p + q sqrt(d))^2 = p^2 + q^2 d + 2pq sqrt(d); solve for p, q.
    const Rat& a = x.rational_part();
    const Rat& b = x.radical_part();
    Rat dd(x.radicand(), Integer(1));
    // p^2 and q^2 d are roots of t^2 - a t + (d b^2)/4.
    Rat disc = a * a - b * b * dd;
    if (auto sd = exact_sqrt(disc)) {
        Rat half(Integer(1), Integer(2));
        for (const Rat& p2 : {(a + *sd) * half, (a - *sd) * half}) {
            if (auto p = exact_sqrt(p2)) {
                if (p->is_zero()) continue;
                Rat q = b * half / *p;
                QuadRat cand(*p, q, x.radicand());
                if (cand * cand == x) return cand;
                cand = QuadRat(-*p, -q, x.radicand());
                if (cand * cand == x) return cand;
            }
        }
    }
    return std::nullopt;
}

}  // namespace skewluroth
