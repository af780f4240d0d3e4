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

#include "parser.hpp"
#include "quaternion_function.hpp"
#include "skew_fraction.hpp"

namespace skewluroth {

/// The rings the surface syntax evaluates into.
enum class RingTag {
    CTSigma,  ///< C(T, sigma): symbols T, i
    HT,       ///< H(T), T central: symbols T, i, j, k
    HX,       ///< H(X): symbols X, i, j, k
};

inline const char* to_string(RingTag r) {
    switch (r) {
        case RingTag::CTSigma: return "ctsigma";
        case RingTag::HT: return "ht";
        default: return "hx";
    }
}

namespace detail {

template <class V, class Leaf>
V eval_with_pow_zero(const ExprPtr& e, const Leaf& leaf, const V& one) {
    if (e->kind == Expr::Kind::Pow && e->exponent == 0) return one;
    if (e->kind == Expr::Kind::Pow) {
        V base = eval_with_pow_zero<V>(e->lhs, leaf, one);
        V r = one;
        for (unsigned n = 0; n < e->exponent; ++n) r = r * base;
        return r;
    }
    switch (e->kind) {
        case Expr::Kind::Number:
        case Expr::Kind::Symbol:
            return leaf(*e);
        case Expr::Kind::Neg:
            return -eval_with_pow_zero<V>(e->lhs, leaf, one);
        case Expr::Kind::Add:
            return eval_with_pow_zero<V>(e->lhs, leaf, one) +
                   eval_with_pow_zero<V>(e->rhs, leaf, one);
        case Expr::Kind::Sub:
            return eval_with_pow_zero<V>(e->lhs, leaf, one) -
                   eval_with_pow_zero<V>(e->rhs, leaf, one);
        case Expr::Kind::Mul:
            return eval_with_pow_zero<V>(e->lhs, leaf, one) *
                   eval_with_pow_zero<V>(e->rhs, leaf, one);
        default: {  // Div
            V den = eval_with_pow_zero<V>(e->rhs, leaf, one);
            return eval_with_pow_zero<V>(e->lhs, leaf, one) * den.inverse();
        }
    }
}

}  // namespace detail

/// Evaluation into C(T, sigma). Legal symbols: T, i.
inline SkewFrac<ConjTwist<Rat>> eval_ctsigma(const ExprPtr& e) {
    using SF = SkewFrac<ConjTwist<Rat>>;
    auto leaf = [](const Expr& x) -> SF {
        if (x.kind == Expr::Kind::Number)
            return SF::constant(GaussRat(Rat(x.number, Integer(1))));
        switch (x.symbol) {
            case 'T': return SF::t();
            case 'i': return SF::constant(GaussRat::i());
            default:
                throw precondition_error(std::string("symbol '") + x.symbol +
                                         "' is not legal in C(T,sigma); use T, i");
        }
    };
    return detail::eval_with_pow_zero<SF>(e, leaf, SF::constant(GaussRat(1)));
}

namespace detail {

inline QuatFunc<Rat> eval_quatfunc(const ExprPtr& e, char var, const char* ring_name) {
    using QF = QuatFunc<Rat>;
    auto leaf = [var, ring_name](const Expr& x) -> QF {
        if (x.kind == Expr::Kind::Number) return QF(RatFunc<Rat>(Rat(x.number, Integer(1))));
        if (x.symbol == var) return QF(RatFunc<Rat>::x());
        switch (x.symbol) {
            case 'i': return QF::i();
            case 'j': return QF::j();
            case 'k': return QF::k();
            default:
                throw precondition_error(std::string("symbol '") + x.symbol +
                                         "' is not legal in " + ring_name);
        }
    };
    return eval_with_pow_zero<QF>(e, leaf, QF(1));
}

}  // namespace detail

/// Evaluation into H(T) with T central. Legal symbols: T, i, j, k.
inline QuatFunc<Rat> eval_ht(const ExprPtr& e) {
    return detail::eval_quatfunc(e, 'T', "H(T); use T, i, j, k");
}

/// Evaluation into H(X). Legal symbols: X, i, j, k.
inline QuatFunc<Rat> eval_hx(const ExprPtr& e) {
    return detail::eval_quatfunc(e, 'X', "H(X); use X, i, j, k");
}

/// Evaluation of a constant quaternion expression (symbols i, j, k only).
inline Quaternion<Rat> eval_quat_const(const ExprPtr& e) {
    using Q = Quaternion<Rat>;
    auto leaf = [](const Expr& x) -> Q {
        if (x.kind == Expr::Kind::Number) return Q(Rat(x.number, Integer(1)));
        switch (x.symbol) {
            case 'i': return Q::i();
            case 'j': return Q::j();
            case 'k': return Q::k();
            default:
                throw precondition_error(std::string("symbol '") + x.symbol +
                                         "' is not a quaternion constant; use i, j, k");
        }
    };
    return detail::eval_with_pow_zero<Q>(e, leaf, Q(1));
}

/// Evaluation into the quotient field of H[T, I(b)] for the inner twist by b.
inline SkewFrac<InnerTwist<Rat>> eval_inner(const ExprPtr& e, const Quaternion<Rat>& b) {
    using SF = SkewFrac<InnerTwist<Rat>>;
    InnerTwist<Rat> tw(b);
    auto leaf = [&tw](const Expr& x) -> SF {
        if (x.kind == Expr::Kind::Number)
            return SF::constant(Quaternion<Rat>(Rat(x.number, Integer(1))), tw);
        switch (x.symbol) {
            case 'T': return SF::t(tw);
            case 'i': return SF::constant(Quaternion<Rat>::i(), tw);
            case 'j': return SF::constant(Quaternion<Rat>::j(), tw);
            case 'k': return SF::constant(Quaternion<Rat>::k(), tw);
            default:
                throw precondition_error(std::string("symbol '") + x.symbol +
                                         "' is not legal in H[T, I(b)]; use T, i, j, k");
        }
    };
    return detail::eval_with_pow_zero<SF>(e, leaf, SF::constant(Quaternion<Rat>(1), tw));
}

}  // namespace skewluroth
