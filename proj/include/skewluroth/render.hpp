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
#include <vector>

#include "gaussian.hpp"
#include "quadratic.hpp"
#include "quaternion_function.hpp"
#include "rational.hpp"
#include "rational_function.hpp"
#include "skew_fraction.hpp"

namespace skewluroth {

/**
 * Canonical ASCII rendering. The output of every ring value re-parses to the
 * same value through the expression parser (parse-then-eval round trip);
 * quadratic irrationalities render as sqrt(d) for display only.
 */

inline std::string render(const Rat& x) { return x.to_string(); }
inline std::string render(const QuadRat& x) { return x.to_string(); }

template <class F>
std::string render(const Gauss<F>& x) {
    return x.to_string();
}

namespace detail {

inline bool simple_product_atom(const std::string& s) {
    for (char ch : s)
        if (ch == '+' || ch == '-' || ch == '(' || ch == ')') return false;
    return true;
}

inline std::string parenthesize_for_product(const std::string& s) {
    return simple_product_atom(s) ? s : "(" + s + ")";
}

/// Joins rendered terms, folding a leading '-' into the separator.
inline std::string join_terms(const std::vector<std::string>& terms) {
    if (terms.empty()) return "0";
    std::string out = terms.front();
    for (std::size_t i = 1; i < terms.size(); ++i) {
        const std::string& t = terms[i];
        if (!t.empty() && t[0] == '-')
            out += " - " + t.substr(1);
        else
            out += " + " + t;
    }
    return out;
}

/// Renders one product term, folding a negative coefficient into a leading
/// '-' so sums join as subtractions.
template <class C, class CoeffRender>
std::string product_term(const C& c, const std::string& unit, CoeffRender&& rc) {
    if (unit.empty()) return rc(c);
    if (c.is_one()) return unit;
    if (c == C(-1)) return "-" + unit;
    std::string s = rc(c);
    if (!s.empty() && s[0] == '-') {
        std::string pos = rc(-c);
        if (!pos.empty() && pos[0] != '-')
            return "-" + parenthesize_for_product(pos) + "*" + unit;
    }
    return parenthesize_for_product(s) + "*" + unit;
}

template <class CoeffRender, class Coeffs>
std::string render_poly_generic(const Coeffs& coeffs, const std::string& var, CoeffRender&& rc) {
    std::vector<std::string> terms;
    for (std::size_t e = 0; e < coeffs.size(); ++e) {
        const auto& c = coeffs[e];
        if (c.is_zero()) continue;
        std::string pow = e == 0 ? "" : (e == 1 ? var : var + "^" + std::to_string(e));
        terms.push_back(product_term(c, pow, rc));
    }
    return join_terms(terms);
}

}  // namespace detail

template <class F>
std::string render(const Poly<F>& p, const std::string& var) {
    return detail::render_poly_generic(p.coefficients(), var,
                                       [](const F& c) { return render(c); });
}

template <class F>
std::string render(const RatFunc<F>& f, const std::string& var) {
    std::string n = render(f.num(), var);
    if (f.is_polynomial()) return n;
    return "(" + n + ")/(" + render(f.den(), var) + ")";
}

template <class F>
std::string render_quatfunc(const QuatFunc<F>& u, const std::string& var) {
    if (u.is_zero()) return "0";
    std::vector<std::string> terms;
    auto rc = [&var](const RatFunc<F>& c) { return render(c, var); };
    auto comp = [&](const RatFunc<F>& c, const char* unit) {
        if (!c.is_zero()) terms.push_back(detail::product_term(c, unit, rc));
    };
    comp(u.a(), "");
    comp(u.b(), "i");
    comp(u.c(), "j");
    comp(u.d(), "k");
    return detail::join_terms(terms);
}

template <class F>
std::string render_quat(const Quaternion<F>& q) {
    if (q.is_zero()) return "0";
    std::vector<std::string> terms;
    auto rc = [](const F& c) { return render(c); };
    auto comp = [&](const F& c, const char* unit) {
        if (!c.is_zero()) terms.push_back(detail::product_term(c, unit, rc));
    };
    comp(q.a(), "");
    comp(q.b(), "i");
    comp(q.c(), "j");
    comp(q.d(), "k");
    return detail::join_terms(terms);
}

template <class F>
std::string render_coeff(const Gauss<F>& c) {
    return render(c);
}

template <class F>
std::string render_coeff(const Quaternion<F>& c) {
    return render_quat(c);
}

template <class Twist>
std::string render(const SkewPoly<Twist>& p, const std::string& var) {
    using D = typename Twist::Domain;
    return detail::render_poly_generic(p.coefficients(), var,
                                       [](const D& c) { return render_coeff(c); });
}

template <class Twist>
std::string render(const SkewFrac<Twist>& x, const std::string& var) {
    std::string n = render(x.num(), var);
    if (x.is_polynomial()) return n;
    return "(" + n + ")/(" + render(x.den(), var) + ")";
}

namespace detail {

inline std::string superscript(std::size_t e) {
    static const char* digits[10] = {"⁰", "¹", "²", "³", "⁴",
                                     "⁵", "⁶", "⁷", "⁸", "⁹"};
    std::string s = std::to_string(e), out;
    for (char ch : s) out += digits[ch - '0'];
    return out;
}

}  // namespace detail

/// Unicode display form: superscript exponents and a middle dot for products.
/// Not meant to be re-parsed.
inline std::string prettify(const std::string& ascii) {
    std::string out;
    for (std::size_t i = 0; i < ascii.size(); ++i) {
        if (ascii[i] == '^') {
            std::size_t j = i + 1, e = 0;
            bool any = false;
            while (j < ascii.size() && ascii[j] >= '0' && ascii[j] <= '9') {
                e = e * 10 + static_cast<std::size_t>(ascii[j] - '0');
                ++j;
                any = true;
            }
            if (any) {
                out += detail::superscript(e);
                i = j - 1;
                continue;
            }
        }
        if (ascii[i] == '*') {
            out += "·";
            continue;
        }
        out += ascii[i];
    }
    return out;
}

}  // namespace skewluroth
