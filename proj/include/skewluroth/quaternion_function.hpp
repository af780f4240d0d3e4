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

#include <array>
#include <optional>
#include <utility>

#include "luroth.hpp"
#include "quaternion.hpp"
#include "rational_function.hpp"
#include "skew_fraction.hpp"

namespace skewluroth {

/**
 * The division ring of quaternions with rational-function components over a
 * formally real base field F (the variable X is central). Componentwise
 * canonical form makes this the equality oracle for the whole skew stack.
 */
template <class F>
using QuatFunc = Quaternion<RatFunc<F>>;

/// The four components (a, b, c, d) of u = a + b i + c j + d k.
template <class F>
std::array<RatFunc<F>, 4> components(const QuatFunc<F>& u) {
    return {u.a(), u.b(), u.c(), u.d()};
}

/// Componentwise conjugation fixing X: a+bi+cj+dk -> a-bi+cj-dk (order 2).
template <class F>
QuatFunc<F> sigma_ext(const QuatFunc<F>& u) {
    return quat_sigma(u);
}

/// Componentwise tau combined with X -> -X (order 2): fixes the image of the
/// skew embedding pointwise.
template <class F>
QuatFunc<F> tau_ext(const QuatFunc<F>& u) {
    return QuatFunc<F>(u.a().substitute_neg(), u.b().substitute_neg(),
                       -u.c().substitute_neg(), -u.d().substitute_neg());
}

/**
 * The embedding of C(T, sigma) into H(X): the monomial a*T^n maps to
 * a * j^n * X^n, extended additively and to fractions by
 * phi(N D^-1) = phi(N) phi(D)^-1. Injective ring homomorphism fixing F(i).
 */
template <class F>
QuatFunc<F> phi(const SkewPoly<ConjTwist<F>>& p) {
    Poly<F> a, b, c, d;
    const auto& cs = p.coefficients();
    for (std::size_t n = 0; n < cs.size(); ++n) {
        const F& re = cs[n].re();
        const F& im = cs[n].im();
        // j^n cycles 1, j, -1, -j.
        switch (n % 4) {
            case 0:
                a += Poly<F>::monomial(re, n);
                b += Poly<F>::monomial(im, n);
                break;
            case 1:
                c += Poly<F>::monomial(re, n);
                d += Poly<F>::monomial(im, n);
                break;
            case 2:
                a -= Poly<F>::monomial(re, n);
                b -= Poly<F>::monomial(im, n);
                break;
            default:
                c -= Poly<F>::monomial(re, n);
                d -= Poly<F>::monomial(im, n);
                break;
        }
    }
    return QuatFunc<F>(RatFunc<F>(std::move(a)), RatFunc<F>(std::move(b)),
                       RatFunc<F>(std::move(c)), RatFunc<F>(std::move(d)));
}

template <class F>
QuatFunc<F> phi(const SkewFrac<ConjTwist<F>>& x) {
    return phi<F>(x.num()) * phi<F>(x.den()).inverse();
}

namespace detail {

/// g(-T^2) as a skew fraction: substituting the central element -T^2 into a
/// rational function with base-field coefficients.
template <class F>
SkewFrac<ConjTwist<F>> central_substitute(const RatFunc<F>& g) {
    using Tw = ConjTwist<F>;
    using SP = SkewPoly<Tw>;
    Tw tw;
    SP neg_t2(tw, {Gauss<F>(F(0)), Gauss<F>(F(0)), Gauss<F>(F(-1))});
    auto subst = [&](const Poly<F>& p) {
        SP acc(tw);
        SP pow = SP::constant(Gauss<F>(F(1)), tw);
        for (std::size_t i = 0; i < p.coefficients().size(); ++i) {
            if (i > 0) pow = pow * neg_t2;
            acc += pow.scale_left(Gauss<F>(p.coefficients()[i]));
        }
        return acc;
    };
    return SkewFrac<Tw>(subst(g.num()), subst(g.den()));
}

}  // namespace detail

/**
 * Preimage under phi. The image of phi is exactly the fixed ring of tau_ext,
 * i.e. the elements whose a, b components are even and whose c, d components
 * are odd. Reconstruction pulls the parts back through the central element
 * -T^2 (phi(T^2) = -X^2) and is re-verified by re-applying phi. Absence is a
 * value.
 */
template <class F>
std::optional<SkewFrac<ConjTwist<F>>> phi_inv(const QuatFunc<F>& u) {
    if (!u.a().is_even() || !u.b().is_even() || !u.c().is_odd() || !u.d().is_odd())
        return std::nullopt;
    using Tw = ConjTwist<F>;
    RatFunc<F> at = unsquare(u.a(), false);
    RatFunc<F> bt = unsquare(u.b(), false);
    RatFunc<F> ct = unsquare(u.c(), true);
    RatFunc<F> dt = unsquare(u.d(), true);
    SkewFrac<Tw> i_const = SkewFrac<Tw>::constant(Gauss<F>::i());
    SkewFrac<Tw> t = SkewFrac<Tw>::t();
    SkewFrac<Tw> x = detail::central_substitute(at) +
                     i_const * detail::central_substitute(bt) +
                     (detail::central_substitute(ct) + i_const * detail::central_substitute(dt)) * t;
    if (!(phi<F>(x) == u)) throw internal_error("phi_inv reconstruction failed verification");
    return x;
}

/**
 * Membership of u in H(f) for nonconstant f in F(X): since the center of
 * H(f) is F(f) and H(f) = H tensor F(f), this reduces to componentwise
 * membership in F(f).
 */
template <class F>
bool in_H_of_f(const QuatFunc<F>& u, const RatFunc<F>& f) {
    if (f.is_constant()) throw precondition_error("in_H_of_f needs a nonconstant f");
    for (const auto& comp : components(u))
        if (!is_member(comp, f)) return false;
    return true;
}

}  // namespace skewluroth
