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

#include <catch2/catch_amalgamated.hpp>

#include "skewluroth/checks.hpp"
#include "skewluroth/quaternion_function.hpp"

using namespace skewluroth;
using Tw = ConjTwist<Rat>;
using SP = SkewPoly<Tw>;
using SF = SkewFrac<Tw>;
using QF = QuatFunc<Rat>;
using RF = RatFunc<Rat>;
using G = GaussRat;

namespace {
const Tw tw;
const RF X = RF::x();
const G gi = G::i();
const G one(1);
}  // namespace

TEST_CASE("arithmetic with a central variable") {
    QF jX(RF(0), RF(0), X, RF(0));
    REQUIRE(jX * jX == QF(-(X * X)));
    REQUIRE(QF::j().inverse() == -QF::j());
    // (i + jX)(i - jX) = -1 - 2kX + X^2
    QF u = QF::i() + jX;
    QF v = QF::i() - jX;
    REQUIRE(u * v == QF(X * X - RF(1), RF(0), RF(0), -(X + X)));
    REQUIRE_THROWS_AS(QF(0).inverse(), division_by_zero);
    QF w(X, RF(1), X * X, RF(0));
    REQUIRE((w * w.inverse()).is_one());
}

TEST_CASE("embedding values") {
    REQUIRE(phi<Rat>(SP::t(tw)) == QF(RF(0), RF(0), X, RF(0)));
    REQUIRE(phi<Rat>(SP(tw, {G(0), one, G(0), gi})) ==
            QF(RF(0), RF(0), X, -(X * X * X)));
    REQUIRE(phi<Rat>(SP::constant(one, tw)) == QF(1));
    REQUIRE(phi<Rat>(SP::constant(gi, tw)) == QF::i());
}

TEST_CASE("embedding is a ring homomorphism") {
    checks::Rng rng(53);
    for (int t = 0; t < 150; ++t) {
        SP p = rng.cpoly(6, 8), q = rng.cpoly(6, 8);
        REQUIRE(phi<Rat>(p * q) == phi<Rat>(p) * phi<Rat>(q));
        REQUIRE(phi<Rat>(p + q) == phi<Rat>(p) + phi<Rat>(q));
    }
    for (int t = 0; t < 40; ++t) {
        SF x = rng.cfrac(4, 5), y = rng.cfrac(4, 5);
        REQUIRE(phi<Rat>(x * y) == phi<Rat>(x) * phi<Rat>(y));
        REQUIRE(phi<Rat>(x + y) == phi<Rat>(x) + phi<Rat>(y));
        if (!x.is_zero()) REQUIRE(phi<Rat>(x.inverse()) == phi<Rat>(x).inverse());
    }
}

TEST_CASE("swap identity j phi(x) = sigma(phi(x)) j") {
    checks::Rng rng(59);
    QF J = QF::j();
    for (int t = 0; t < 100; ++t) {
        QF u = phi<Rat>(rng.cfrac(4, 5));
        REQUIRE(J * u == sigma_ext(u) * J);
    }
}

TEST_CASE("extended automorphisms") {
    QF pv(RF(0), RF(0), X, -(X * X * X));  // the image of T + iT^3
    REQUIRE(sigma_ext(pv) == QF(RF(0), RF(0), X, X * X * X));
    REQUIRE(tau_ext(QF(RF(0), RF(0), X, RF(0))) == QF(RF(0), RF(0), X, RF(0)));
    REQUIRE(tau_ext(QF(X)) == QF(-X));
    checks::Rng rng(61);
    for (int t = 0; t < 50; ++t) {
        QF u = phi<Rat>(rng.cfrac(3, 4));
        QF w(rng.ratfunc(3, 4), rng.ratfunc(3, 4), rng.ratfunc(3, 4), rng.ratfunc(3, 4));
        REQUIRE(tau_ext(u) == u);  // tau fixes the embedding image pointwise
        REQUIRE(sigma_ext(sigma_ext(w)) == w);
        REQUIRE(tau_ext(tau_ext(w)) == w);
    }
}

TEST_CASE("fixed ring characterization of the embedding image") {
    SECTION("examples") {
        auto t_back = phi_inv<Rat>(QF(RF(0), RF(0), X, RF(0)));
        REQUIRE(t_back.has_value());
        REQUIRE(*t_back == SF::t(tw));
        REQUIRE(!phi_inv<Rat>(QF::j()).has_value());
        REQUIRE(!phi_inv<Rat>(QF(X)).has_value());
    }
    SECTION("round trip and rejection") {
        checks::Rng rng(67);
        for (int t = 0; t < 60; ++t) {
            SF x = rng.cfrac(3, 4);
            auto back = phi_inv<Rat>(phi<Rat>(x));
            REQUIRE(back.has_value());
            REQUIRE(*back == x);
        }
        for (int t = 0; t < 60; ++t) {
            QF u = rng.tau_fixed_quatfunc(2, 4) + QF(X);  // odd part in the a slot
            REQUIRE(tau_ext(u) != u);
            REQUIRE(!phi_inv<Rat>(u).has_value());
        }
    }
}

TEST_CASE("component extraction matches conjugation averaging") {
    checks::Rng rng(71);
    QF I = QF::i(), J = QF::j();
    Rat quarter(Integer(1), Integer(4));
    for (int t = 0; t < 40; ++t) {
        QF u(rng.ratfunc(2, 4), rng.ratfunc(2, 4), rng.ratfunc(2, 4), rng.ratfunc(2, 4));
        auto [a, b, c, d] = components(u);
        QF ui = I * u * I.inverse();
        QF s = u + ui;
        QF a4 = (s + J * s * J.inverse()) * QF(RF(quarter));
        REQUIRE(a4 == QF(a));
        QF b4 = (s - J * s * J.inverse()) * QF(RF(quarter)) * I.inverse();
        REQUIRE(b4 == QF(b));
        QF r = u - ui;  // 2(cj + dk)
        QF c4 = (r + J * r * J.inverse()) * QF(RF(quarter)) * J.inverse();
        REQUIRE(c4 == QF(c));
        QF d4 = (r - J * r * J.inverse()) * QF(RF(quarter)) * QF::k().inverse();
        REQUIRE(d4 == QF(d));
    }
}

TEST_CASE("membership in H(f)") {
    QF pv(RF(0), RF(0), X, -(X * X * X));
    REQUIRE(in_H_of_f(pv, X));
    REQUIRE(!in_H_of_f(QF(RF(0), RF(0), X, RF(0)), X * X));
    REQUIRE(in_H_of_f(QF(X * X * X * X) + QF::i(), X * X));
    REQUIRE_THROWS_AS(in_H_of_f(pv, RF(2)), precondition_error);
}

TEST_CASE("centralizer behavior") {
    checks::Rng rng(73);
    QF I = QF::i(), J = QF::j();
    for (int t = 0; t < 40; ++t) {
        QF u(rng.ratfunc(2, 4), rng.ratfunc(2, 4), rng.ratfunc(2, 4), rng.ratfunc(2, 4));
        bool pure_scalar = u.b().is_zero() && u.c().is_zero() && u.d().is_zero();
        bool commutes_both = (u * I == I * u) && (u * J == J * u);
        REQUIRE(pure_scalar == commutes_both);
    }
    // elements R(f) with only a scalar component are central; i*f is not
    for (int t = 0; t < 20; ++t) {
        RF f = rng.ratfunc(2, 3);
        if (f.is_constant()) continue;
        QF rf(f);
        REQUIRE(rf * I == I * rf);
        REQUIRE(rf * J == J * rf);
        QF iff = I * rf;
        REQUIRE(iff * J != J * iff);
    }
}
