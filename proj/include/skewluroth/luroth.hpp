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
#include <vector>

#include "rational_function.hpp"

namespace skewluroth {

/// Polynomial in X whose coefficients are rational functions in a second
/// variable; the carrier for the subfield gcd construction.
template <class F>
using BivarPoly = Poly<RatFunc<F>>;

namespace detail {

/// P_f(X)*Q_f(Y) - P_f(Y)*Q_f(X) as a polynomial in X over F(Y).
template <class F>
BivarPoly<F> field_join_poly(const RatFunc<F>& f) {
    RatFunc<F> pY(f.num()), qY(f.den());
    int n = std::max(f.num().degree(), f.den().degree());
    std::vector<RatFunc<F>> coeffs;
    coeffs.reserve(static_cast<std::size_t>(n) + 1);
    for (int i = 0; i <= n; ++i) {
        std::size_t ui = static_cast<std::size_t>(i);
        coeffs.push_back(RatFunc<F>(f.num().at(ui)) * qY - RatFunc<F>(f.den().at(ui)) * pY);
    }
    return BivarPoly<F>(std::move(coeffs));
}

}  // namespace detail

/**
 * The monic (in X) gcd over F(Y) of the join polynomials of f and g. Its
 * degree in X equals [F(X) : F(f, g)], and its nonconstant coefficients each
 * generate F(f, g); this is the constructive core of Lueroth's theorem.
 */
template <class F>
BivarPoly<F> minimal_poly_gcd(const RatFunc<F>& f, const RatFunc<F>& g) {
    if (f.is_constant() || g.is_constant())
        throw precondition_error("minimal_poly_gcd needs nonconstant generators");
    return gcd(detail::field_join_poly(f), detail::field_join_poly(g));
}

/// Scale so the numerator is monic; the denominator stays monic by the
/// RatFunc invariant, so a constant denominator is already 1. Generators are
/// compared via mutual membership, never literally, so any fixed choice in
/// the Moebius orbit works.
template <class F>
RatFunc<F> canonicalize_generator(const RatFunc<F>& t) {
    if (t.is_zero()) return t;
    return t * RatFunc<F>(t.num().lc().inverse());
}

namespace detail {

/// Minimal-degree nonconstant coefficient of the join gcd; ties broken by
/// the smallest X-power index.
template <class F>
RatFunc<F> extract_generator(const BivarPoly<F>& g) {
    std::optional<RatFunc<F>> best;
    for (const auto& c : g.coefficients()) {
        if (c.is_constant()) continue;
        if (!best || c.degree() < best->degree()) best = c;
    }
    if (!best) throw internal_error("join gcd has no nonconstant coefficient");
    return canonicalize_generator(*best);
}

}  // namespace detail

/**
 * Single generator t with F(t) = F(gens), computed by folding generators
 * through minimal_poly_gcd. deg t = [F(X) : F(gens)].
 */
template <class F>
RatFunc<F> luroth_generator(const std::vector<RatFunc<F>>& gens) {
    std::optional<RatFunc<F>> t;
    for (const auto& g : gens) {
        if (g.is_constant()) continue;
        if (!t) {
            t = canonicalize_generator(g);
        } else if (*t != g) {
            t = detail::extract_generator(minimal_poly_gcd(*t, g));
        }
    }
    if (!t) throw precondition_error("trivial subfield");
    return *t;
}

/// Membership lam in F(f), decided by comparing [F(X):F(f, lam)] with
/// [F(X):F(f)]; constants are always members.
template <class F>
bool is_member(const RatFunc<F>& lam, const RatFunc<F>& f) {
    if (f.is_constant()) throw precondition_error("is_member needs a nonconstant generator");
    if (lam.is_constant()) return true;
    return luroth_generator<F>({f, lam}).degree() == f.degree();
}

/**
 * R with lam = R(f), when lam lies in F(f). Solved as a homogeneous linear
 * system in the coefficients of R's numerator and denominator with
 * deg R = deg lam / deg f, then re-verified by composition.
 */
template <class F>
std::optional<RatFunc<F>> decompose_through(const RatFunc<F>& lam, const RatFunc<F>& f) {
    if (f.is_constant())
        throw precondition_error("decompose_through needs a nonconstant generator");
    if (lam.is_constant()) return RatFunc<F>(lam.constant_value());
    int df = f.degree(), dl = lam.degree();
    if (dl % df != 0) return std::nullopt;
    std::size_t r = static_cast<std::size_t>(dl / df);

    // lam = A(f)/B(f): P_lam * sum_i b_i P_f^i Q_f^(r-i) = Q_lam * sum_i a_i P_f^i Q_f^(r-i).
    std::vector<Poly<F>> basis(r + 1);
    {
        std::vector<Poly<F>> np(r + 1), dp(r + 1);
        np[0] = Poly<F>(1);
        dp[0] = Poly<F>(1);
        for (std::size_t i = 1; i <= r; ++i) {
            np[i] = np[i - 1] * f.num();
            dp[i] = dp[i - 1] * f.den();
        }
        for (std::size_t i = 0; i <= r; ++i) basis[i] = np[i] * dp[r - i];
    }
    std::size_t ncols = 2 * (r + 1);
    int maxdeg = -1;
    std::vector<Poly<F>> cols(ncols);
    for (std::size_t i = 0; i <= r; ++i) {
        cols[i] = -(lam.den() * basis[i]);       // a_i
        cols[r + 1 + i] = lam.num() * basis[i];  // b_i
        maxdeg = std::max({maxdeg, cols[i].degree(), cols[r + 1 + i].degree()});
    }
    std::vector<std::vector<F>> m;
    for (int row = 0; row <= maxdeg; ++row) {
        std::vector<F> mr(ncols, F(0));
        for (std::size_t col = 0; col < ncols; ++col)
            mr[col] = cols[col].at(static_cast<std::size_t>(row));
        m.push_back(std::move(mr));
    }
    for (const auto& v : detail::nullspace(m, ncols)) {
        std::vector<F> a(v.begin(), v.begin() + static_cast<long>(r + 1));
        std::vector<F> b(v.begin() + static_cast<long>(r + 1), v.end());
        Poly<F> bp{std::vector<F>(b)};
        if (bp.is_zero()) continue;
        RatFunc<F> R(Poly<F>(std::move(a)), std::move(bp));
        if (compose(R, f) == lam) return R;
    }
    return std::nullopt;
}

}  // namespace skewluroth
