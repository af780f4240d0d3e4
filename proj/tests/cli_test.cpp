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
#include <json.hpp>

#include "skewluroth/checks.hpp"
#include "skewluroth/eval.hpp"
#include "skewluroth/output.hpp"
#include "skewluroth/parser.hpp"
#include "skewluroth/render.hpp"

using namespace skewluroth;
using Tw = ConjTwist<Rat>;
using SP = SkewPoly<Tw>;
using SF = SkewFrac<Tw>;
using QF = QuatFunc<Rat>;
using RF = RatFunc<Rat>;
using G = GaussRat;

TEST_CASE("parse shapes") {
    auto e = parse("T^2 + i*T");
    REQUIRE(e->kind == Expr::Kind::Add);
    REQUIRE(e->lhs->kind == Expr::Kind::Pow);
    REQUIRE(e->lhs->lhs->symbol == 'T');
    REQUIRE(e->lhs->exponent == 2);
    REQUIRE(e->rhs->kind == Expr::Kind::Mul);

    SECTION("operand order is preserved") {
        auto ab = parse("i*T");
        auto ba = parse("T*i");
        REQUIRE(ab->lhs->symbol == 'i');
        REQUIRE(ba->lhs->symbol == 'T');
    }
    SECTION("division is a right fraction") {
        auto d = parse("(T+1)/(T-1)");
        REQUIRE(d->kind == Expr::Kind::Div);
        REQUIRE(d->lhs->kind == Expr::Kind::Add);
        REQUIRE(d->rhs->kind == Expr::Kind::Sub);
    }
    SECTION("precedence") {
        // ^ binds tighter than unary minus: -T^2 = -(T^2)
        REQUIRE(eval_ctsigma(parse("-T^2")) == -SF(SP(Tw(), {G(0), G(0), G(1)})));
        // * / are left associative
        REQUIRE(eval_ctsigma(parse("4/2/2")) == SF::constant(G(1)));
        REQUIRE(eval_ctsigma(parse("1 - 2 - 3")) == SF::constant(G(-4)));
        REQUIRE(eval_ctsigma(parse("T^0")) == SF::constant(G(1)));
    }
    SECTION("errors carry positions") {
        REQUIRE_THROWS_AS(parse("T+*2"), parse_error);
        REQUIRE_THROWS_AS(parse("T^-2"), parse_error);
        REQUIRE_THROWS_AS(parse("w+1"), parse_error);
        REQUIRE_THROWS_AS(parse("(T+1"), parse_error);
        REQUIRE_THROWS_AS(parse("Ti"), parse_error);  // juxtaposition is not a product
        try {
            parse("T + $");
        } catch (const parse_error& e) {
            REQUIRE(e.position() == 4);
        }
    }
}

TEST_CASE("evaluation into the three rings") {
    SECTION("twisted commutation") {
        REQUIRE(eval_ctsigma(parse("T*i")) == SF(SP(Tw(), {G(0), -G::i()})));
        REQUIRE(eval_ctsigma(parse("T*i")) != eval_ctsigma(parse("i*T")));
    }
    SECTION("the obstruction element lands on the printed components") {
        QF u = eval_hx(parse("j*X - k*X^3"));
        RF X = RF::x();
        REQUIRE(u == QF(RF(0), RF(0), X, -(X * X * X)));
    }
    SECTION("division by zero") {
        REQUIRE_THROWS_AS(eval_ctsigma(parse("1/0")), division_by_zero);
        REQUIRE_THROWS_AS(eval_hx(parse("1/(X-X)")), division_by_zero);
    }
    SECTION("symbols are ring-checked") {
        REQUIRE_THROWS_AS(eval_ctsigma(parse("j*T")), precondition_error);
        REQUIRE_THROWS_AS(eval_hx(parse("T+1")), precondition_error);
        REQUIRE_THROWS_AS(eval_ht(parse("X+1")), precondition_error);
        REQUIRE_NOTHROW(eval_ht(parse("T*j - k*T^3")));
    }
    SECTION("quaternion constants") {
        REQUIRE(eval_quat_const(parse("i*j")) == Quaternion<Rat>::k());
        REQUIRE_THROWS_AS(eval_quat_const(parse("T")), precondition_error);
    }
    SECTION("inner-twisted ring") {
        using ISF = SkewFrac<InnerTwist<Rat>>;
        auto b = Quaternion<Rat>::j();
        InnerTwist<Rat> itw(b);
        auto x = eval_inner(parse("T*i"), b);
        REQUIRE(x == ISF::t(itw) * ISF::constant(Quaternion<Rat>::i(), itw));
    }
}

TEST_CASE("render-parse round trip on random values") {
    checks::Rng rng(97);
    SECTION("skew fractions") {
        for (int t = 0; t < 60; ++t) {
            SF x = rng.cfrac(4, 6);
            REQUIRE(eval_ctsigma(parse(render(x, "T"))) == x);
        }
    }
    SECTION("quaternion functions") {
        for (int t = 0; t < 60; ++t) {
            QF u(rng.ratfunc(3, 6), rng.ratfunc(3, 6), rng.ratfunc(3, 6), rng.ratfunc(3, 6));
            REQUIRE(eval_hx(parse(render_quatfunc(u, "X"))) == u);
        }
    }
}

TEST_CASE("evaluation commutes with the embedding on well-typed expressions") {
    // parse into C(T,sigma), embed; versus re-reading the same tree with
    // T replaced by its image jX in H(X).
    checks::Rng rng(101);
    for (int t = 0; t < 40; ++t) {
        SF x = rng.cfrac(3, 5);
        std::string src = render(x, "T");
        QF direct = phi<Rat>(eval_ctsigma(parse(src)));
        // textual substitution T -> (j*X) is sound because the renderer never
        // emits T inside another symbol
        std::string subst;
        for (char c : src) {
            if (c == 'T')
                subst += "(j*X)";
            else
                subst += c;
        }
        REQUIRE(eval_hx(parse(subst)) == direct);
    }
}

TEST_CASE("output documents have stable keys") {
    SF t2 = eval_ctsigma(parse("T^2"));
    auto doc = make_doc(skew_luroth<Rat>({t2})).to_json();
    for (const char* key : {"status", "case", "generator", "backbone_f", "certificates",
                            "warnings"})
        REQUIRE(doc.contains(key));
    REQUIRE(doc["status"] == "Generated");
    REQUIRE(doc["case"] == "Symmetric");
    REQUIRE(doc["certificates"].is_array());
    for (const auto& c : doc["certificates"]) {
        REQUIRE(c.contains("name"));
        REQUIRE(c.contains("ok"));
        REQUIRE(c.contains("witness"));
    }
    // the generator re-parses to the expected value
    REQUIRE(eval_ctsigma(parse(doc["generator"].get<std::string>())) ==
            eval_ctsigma(parse("-T^2")));
}

TEST_CASE("pretty form substitutes unicode operators") {
    REQUIRE(prettify("T^2 + 3*T") == "T² + 3·T");
    REQUIRE(prettify("X^12") == "X¹²");
}
