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
#include "skewluroth/gaussian.hpp"
#include "skewluroth/quadratic.hpp"
#include "skewluroth/quaternion.hpp"
#include "skewluroth/rational.hpp"

using namespace skewluroth;
using Q = Quaternion<Rat>;

TEST_CASE("rationals are canonical") {
    REQUIRE(Rat(Integer(6), Integer(4)) == Rat(Integer(3), Integer(2)));
    REQUIRE(Rat(Integer(3), Integer(-6)) == Rat(Integer(-1), Integer(2)));
    REQUIRE(Rat(0).denominator() == 1);
    REQUIRE_THROWS_AS(Rat(1).operator/(Rat(0)), division_by_zero);
    REQUIRE_THROWS_AS(Rat(0).inverse(), division_by_zero);
    REQUIRE(exact_sqrt(Rat(Integer(9), Integer(4))) == Rat(Integer(3), Integer(2)));
    REQUIRE(!exact_sqrt(Rat(2)).has_value());
    REQUIRE(!exact_sqrt(Rat(-4)).has_value());
}

TEST_CASE("quaternion basis relations") {
    Q one(1), i = Q::i(), j = Q::j(), k = Q::k();
    REQUIRE(i * i == -one);
    REQUIRE(j * j == -one);
    REQUIRE(k * k == -one);
    REQUIRE(i * j * k == -one);
    REQUIRE(i * j == k);
    REQUIRE(j * k == i);
    REQUIRE(k * i == j);
    REQUIRE(j * i == -k);
    REQUIRE(one * (i + j) == i + j);
}

TEST_CASE("quaternion inverse") {
    Q i = Q::i();
    REQUIRE(i.inverse() == -i);
    Q q(Rat(1), Rat(1), Rat(1), Rat(1));
    Rat quarter(Integer(1), Integer(4));
    REQUIRE(q.norm() == Rat(4));
    REQUIRE(q.inverse() == Q(quarter, -quarter, -quarter, -quarter));
    REQUIRE(q * q.inverse() == Q(1));
    REQUIRE(q.inverse() * q == Q(1));
    REQUIRE_THROWS_AS(Q(0).inverse(), division_by_zero);
}

TEST_CASE("component automorphisms act as displayed") {
    Q i = Q::i(), j = Q::j();
    REQUIRE(quat_sigma(i) == -i);
    REQUIRE(quat_sigma(j) == j);
    REQUIRE(quat_tau(j) == -j);
    REQUIRE(quat_tau(i) == i);
    Q q(Rat(1), Rat(2), Rat(3), Rat(4));
    REQUIRE(quat_sigma(quat_sigma(q)) == q);
    REQUIRE(quat_tau(quat_tau(q)) == q);
}

TEST_CASE("quaternion algebra laws on random samples") {
    checks::Rng rng(42);
    for (int t = 0; t < 200; ++t) {
        Q p = rng.quat(8), q = rng.quat(8), r = rng.quat(8);
        REQUIRE((p * q) * r == p * (q * r));
        REQUIRE(p * (q + r) == p * q + p * r);
        REQUIRE((p + q) * r == p * r + q * r);
        REQUIRE((p * q).norm() == p.norm() * q.norm());
        REQUIRE(quat_sigma(p * q) == quat_sigma(p) * quat_sigma(q));
        REQUIRE(quat_tau(p * q) == quat_tau(p) * quat_tau(q));
        REQUIRE(quat_sigma(p + q) == quat_sigma(p) + quat_sigma(q));
    }
}

TEST_CASE("no zero divisors") {
    checks::Rng rng(43);
    for (int t = 0; t < 200; ++t) {
        Q p = rng.quat_nonzero(8), q = rng.quat_nonzero(8);
        REQUIRE(!(p * q).is_zero());
        REQUIRE(!(p * q).norm().is_zero());
    }
}

TEST_CASE("gaussian rationals") {
    GaussRat i = GaussRat::i();
    REQUIRE(i * i == GaussRat(-1));
    GaussRat z(Rat(3), Rat(-2));
    REQUIRE(conj(conj(z)) == z);
    REQUIRE(z * z.inverse() == GaussRat(1));
    REQUIRE(conj(z * i) == conj(z) * conj(i));
    REQUIRE_THROWS_AS(GaussRat(0).inverse(), division_by_zero);
}

TEST_CASE("quadratic extension arithmetic") {
    QuadRat s2(Rat(0), Rat(1), Integer(2));
    REQUIRE(s2 * s2 == QuadRat(Rat(2)));
    QuadRat x(Rat(1), Rat(3), Integer(2));
    REQUIRE(x * x.inverse() == QuadRat(Rat(1)));
    REQUIRE(x.galois_conj().galois_conj() == x);
    REQUIRE((x + x.galois_conj()).is_rational());

    // rationals embed into every extension
    REQUIRE(QuadRat(Rat(5)) + s2 == QuadRat(Rat(5), Rat(1), Integer(2)));

    SECTION("mismatched radicands are rejected") {
        QuadRat s3(Rat(0), Rat(1), Integer(3));
        REQUIRE_THROWS_AS(s2 + s3, extension_mismatch);
        REQUIRE_THROWS_AS(s2 * s3, extension_mismatch);
    }

    SECTION("sign under the real embedding") {
        REQUIRE(QuadRat(Rat(-1), Rat(1), Integer(2)).sign() == 1);   // sqrt(2) > 1
        REQUIRE(QuadRat(Rat(-2), Rat(1), Integer(2)).sign() == -1);  // sqrt(2) < 2
        REQUIRE(QuadRat(Rat(3), Rat(-2), Integer(2)).sign() == 1);   // 9 > 8
    }
}

TEST_CASE("square roots inside one quadratic layer") {
    REQUIRE(sqrt_in_field(QuadRat(Rat(Integer(9), Integer(4))), Integer(2)) ==
            QuadRat(Rat(Integer(3), Integer(2))));
    REQUIRE(sqrt_in_field(QuadRat(Rat(2)), Integer(2)) == QuadRat(Rat(0), Rat(1), Integer(2)));
    REQUIRE(sqrt_in_field(QuadRat(Rat(8)), Integer(2)) == QuadRat(Rat(0), Rat(2), Integer(2)));
    REQUIRE(!sqrt_in_field(QuadRat(Rat(3)), Integer(2)).has_value());
    // (1 + sqrt(2))^2 = 3 + 2 sqrt(2)
    auto r = sqrt_in_field(QuadRat(Rat(3), Rat(2), Integer(2)), Integer(2));
    REQUIRE(r.has_value());
    REQUIRE(*r * *r == QuadRat(Rat(3), Rat(2), Integer(2)));
}

TEST_CASE("quaternions over a quadratic extension") {
    using QQ = Quaternion<QuadRat>;
    QuadRat s2(Rat(0), Rat(1), Integer(2));
    QQ q(QuadRat(1), s2, QuadRat(0), QuadRat(0));
    REQUIRE(q.norm() == QuadRat(Rat(3)));
    REQUIRE(q * q.inverse() == QQ(1));
}
