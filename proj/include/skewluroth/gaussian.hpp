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
#include "rational.hpp"
#include "traits.hpp"

namespace skewluroth {

/**
 * Element re + im*i of F(i), for a formally real base field F.
 * Conjugation flips the sign of the imaginary part and is an involution.
 */
template <class F>
class Gauss {
    static_assert(is_formally_real_v<F>, "F(i) needs a formally real base field");

   public:
    Gauss() = default;
    Gauss(long v) : re_(v) {}  // NOLINT: implicit by design
    Gauss(F re) : re_(std::move(re)) {}  // NOLINT: implicit by design
    Gauss(F re, F im) : re_(std::move(re)), im_(std::move(im)) {}

    static Gauss i() { return Gauss(F(0), F(1)); }

    const F& re() const { return re_; }
    const F& im() const { return im_; }

    bool is_zero() const { return re_.is_zero() && im_.is_zero(); }
    bool is_one() const { return re_.is_one() && im_.is_zero(); }
    bool is_real() const { return im_.is_zero(); }

    Gauss operator-() const { return Gauss(-re_, -im_); }
    Gauss operator+(const Gauss& o) const { return Gauss(re_ + o.re_, im_ + o.im_); }
    Gauss operator-(const Gauss& o) const { return Gauss(re_ - o.re_, im_ - o.im_); }
    Gauss operator*(const Gauss& o) const {
        return Gauss(re_ * o.re_ - im_ * o.im_, re_ * o.im_ + im_ * o.re_);
    }
    Gauss operator/(const Gauss& o) const { return *this * o.inverse(); }
    Gauss& operator+=(const Gauss& o) { return *this = *this + o; }
    Gauss& operator-=(const Gauss& o) { return *this = *this - o; }
    Gauss& operator*=(const Gauss& o) { return *this = *this * o; }
    Gauss& operator/=(const Gauss& o) { return *this = *this / o; }

    Gauss inverse() const {
        if (is_zero()) throw division_by_zero();
        F n = re_ * re_ + im_ * im_;  // anisotropic: F is formally real
        return Gauss(re_ / n, -im_ / n);
    }

    bool operator==(const Gauss& o) const { return re_ == o.re_ && im_ == o.im_; }
    bool operator!=(const Gauss& o) const { return !(*this == o); }

    std::string to_string() const {
        if (im_.is_zero()) return re_.to_string();
        std::string imp = im_.is_one() ? "i" : (im_ == F(-1) ? "-i" : im_.to_string() + "*i");
        if (re_.is_zero()) return imp;
        if (imp[0] == '-') return re_.to_string() + imp;
        return re_.to_string() + "+" + imp;
    }

   private:
    F re_, im_;
};

template <class F>
Gauss<F> conj(const Gauss<F>& x) {
    return Gauss<F>(x.re(), -x.im());
}

using GaussRat = Gauss<Rat>;

}  // namespace skewluroth
