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
#include "skewluroth/rational_function.hpp"

using namespace skewluroth;
using RF = RatFunc<Rat>;
using P = Poly<Rat>;

namespace {
const RF X = RF::x();
}

TEST_CASE("polynomial division and gcd") {
    checks::Rng rng(7);
    for (int t = 0; t < 100; ++t) {
        P a = rng.poly(8, 8), b = rng.poly_nonzero(8, 8);
        auto [q, r] = divmod(a, b);
        REQUIRE(q * b + r == a);
        REQUIRE((r.is_zero() || r.degree() < b.degree()));

        auto [g, u, v] = extended_gcd(a, b);
        REQUIRE(u * a + v * b == g);
        if (!g.is_zero()) {
            REQUIRE(divmod(a, g).second.is_zero());
            REQUIRE(divmod(b, g).second.is_zero());
        }
    }
}

TEST_CASE("normalization keeps fractions canonical") {
    // common factor
    REQUIRE(RF(P{Rat(-1), Rat(0), Rat(1)}, P{Rat(-1), Rat(1)}) == X + RF(1));
    // monic denominator
    REQUIRE(RF(P{Rat(0), Rat(2)}, P{Rat(2)}) == X);
    // zero numerator collapses to 0/1
    RF z(P(), P{Rat(0), Rat(0), Rat(0), Rat(1)});
    REQUIRE(z.is_zero());
    REQUIRE(z.den() == P(1));
    REQUIRE_THROWS_AS(RF(P(1), P()), division_by_zero);
}

TEST_CASE("degree of a rational function") {
    REQUIRE(((X * X * X + RF(1)) / X).degree() == 3);
    RF x6 = X * X * X * X * X * X;
    REQUIRE((X * X + x6).degree() == 6);
    REQUIRE(RF(5).degree() == 0);
    REQUIRE(RF(0).degree() == 0);
}

TEST_CASE("composition") {
    RF Y = RF::x();
    REQUIRE(compose(Y * Y, X + RF(1)) == X * X + X * RF(2) + RF(1));
    RF f = (X * X + RF(3)) / (X - RF(1));
    REQUIRE(compose(Y, f) == f);
    REQUIRE(compose((Y + RF(1)) / Y, X * X) == (X * X + RF(1)) / (X * X));

    checks::Rng rng(11);
    for (int t = 0; t < 40; ++t) {
        RF R = rng.ratfunc(3, 5), g = rng.ratfunc(3, 5);
        if (R.is_constant() || g.is_constant()) continue;
        REQUIRE(compose(R, g).degree() == R.degree() * g.degree());
    }
}

TEST_CASE("even-odd split") {
    RF Y = RF::x();
    SECTION("examples") {
        auto [g1, h1] = even_odd_split(X * X * X);
        REQUIRE(g1.is_zero());
        REQUIRE(h1 == Y);
        auto [g2, h2] = even_odd_split(X * X);
        REQUIRE(g2 == Y);
        REQUIRE(h2.is_zero());
        auto [g3, h3] = even_odd_split((RF(1) + X) / (RF(1) - X));
        REQUIRE(g3 == (RF(1) + Y) / (RF(1) - Y));
        REQUIRE(h3 == RF(2) / (RF(1) - Y));
    }
    SECTION("round trip on random parts") {
        checks::Rng rng(13);
        for (int t = 0; t < 60; ++t) {
            RF g = rng.ratfunc(3, 5), h = rng.ratfunc(3, 5);
            RF f = RF(g.num().spread_square(), g.den().spread_square()) +
                   RF(h.num().spread_square(), h.den().spread_square()) * X;
            auto [gg, hh] = even_odd_split(f);
            REQUIRE(gg == g);
            REQUIRE(hh == h);
        }
    }
}

TEST_CASE("moebius transforms") {
    SECTION("apply") {
        REQUIRE(mobius_apply(Mobius<Rat>(Rat(0), Rat(1), Rat(1), Rat(0)), X) == X.inverse());
        REQUIRE(mobius_apply(Mobius<Rat>(), X * X + X) == X * X + X);
        REQUIRE(mobius_apply(Mobius<Rat>(Rat(1), Rat(1), Rat(0), Rat(1)), X * X) ==
                X * X + RF(1));
        REQUIRE_THROWS_AS(Mobius<Rat>(Rat(1), Rat(2), Rat(2), Rat(4)), precondition_error);
    }
    SECTION("solve examples") {
        RF f = (RF(1) + X) / (RF(1) - X);
        auto M = mobius_solve(f, (RF(1) - X) / (RF(1) + X));
        REQUIRE(M.has_value());
        REQUIRE(*M == Mobius<Rat>(Rat(0), Rat(1), Rat(1), Rat(0)));
        auto Mid = mobius_solve(f, f);
        REQUIRE(Mid.has_value());
        REQUIRE(Mid->is_identity());
        REQUIRE(!mobius_solve(X * X * X, X * X).has_value());
    }
    SECTION("solve recovers random transforms up to scaling") {
        checks::Rng rng(17);
        for (int t = 0; t < 60; ++t) {
            Rat a = rng.rat(5), b = rng.rat(5), c = rng.rat(5), d = rng.rat(5);
            if ((a * d - b * c).is_zero()) continue;
            Mobius<Rat> M(a, b, c, d);
            RF f = rng.ratfunc(3, 4);
            if (f.is_constant()) continue;
            RF img = mobius_apply(M, f);
            REQUIRE(img.degree() == f.degree());
            auto back = mobius_solve(f, img);
            REQUIRE(back.has_value());
            REQUIRE(*back == M);
        }
    }
}
