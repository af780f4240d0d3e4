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

#include <chrono>
#include <functional>
#include <random>
#include <string>
#include <vector>

#include "engine.hpp"

namespace skewluroth {

struct CheckResult {
    std::string name;
    bool ok = false;
    std::string detail;
    double seconds = 0.0;
};

namespace checks {

using CTw = ConjTwist<Rat>;
using CPoly = SkewPoly<CTw>;
using CFrac = SkewFrac<CTw>;
using QF = QuatFunc<Rat>;
using RF = RatFunc<Rat>;

/// Deterministic random generators for the verification suites.
class Rng {
   public:
    explicit Rng(std::uint64_t seed) : eng_(seed) {}

    long integer(long lo, long hi) {
        return std::uniform_int_distribution<long>(lo, hi)(eng_);
    }

    Rat rat(long height) { return Rat(integer(-height, height)) / Rat(integer(1, height)); }

    Rat rat_nonzero(long height) {
        for (;;) {
            Rat r = rat(height);
            if (!r.is_zero()) return r;
        }
    }

    GaussRat gauss(long height) { return GaussRat(rat(height), rat(height)); }

    GaussRat gauss_nonzero(long height) {
        for (;;) {
            GaussRat g = gauss(height);
            if (!g.is_zero()) return g;
        }
    }

    Quaternion<Rat> quat(long height) {
        return Quaternion<Rat>(rat(height), rat(height), rat(height), rat(height));
    }

    Quaternion<Rat> quat_nonzero(long height) {
        for (;;) {
            auto q = quat(height);
            if (!q.is_zero()) return q;
        }
    }

    Poly<Rat> poly(int maxdeg, long height) {
        std::vector<Rat> c;
        int d = static_cast<int>(integer(0, maxdeg));
        for (int i = 0; i <= d; ++i) c.push_back(rat(height));
        return Poly<Rat>(std::move(c));
    }

    Poly<Rat> poly_nonzero(int maxdeg, long height) {
        for (;;) {
            auto p = poly(maxdeg, height);
            if (!p.is_zero()) return p;
        }
    }

    RF ratfunc(int maxdeg, long height) {
        return RF(poly(maxdeg, height), poly_nonzero(maxdeg, height));
    }

    CPoly cpoly(int maxdeg, long height) {
        std::vector<GaussRat> c;
        int d = static_cast<int>(integer(0, maxdeg));
        for (int i = 0; i <= d; ++i) c.push_back(gauss(height));
        return CPoly(CTw(), std::move(c));
    }

    CPoly cpoly_nonzero(int maxdeg, long height) {
        for (;;) {
            auto p = cpoly(maxdeg, height);
            if (!p.is_zero()) return p;
        }
    }

    CFrac cfrac(int maxdeg, long height) {
        return CFrac(cpoly(maxdeg, height), cpoly_nonzero(maxdeg, height));
    }

    CFrac cfrac_nonzero(int maxdeg, long height) {
        for (;;) {
            auto f = cfrac(maxdeg, height);
            if (!f.is_zero()) return f;
        }
    }

    /// Random element of the skew field built as a value tree of the given
    /// depth over low-degree polynomial leaves, together with its image under
    /// the quaternion embedding computed leaf-wise. Used as the two-route
    /// arithmetic oracle.
    std::pair<CFrac, QF> oracle_tree(int depth, long height) {
        if (depth == 0) {
            CPoly p = cpoly(1, height);
            return {CFrac(p), phi<Rat>(p)};
        }
        for (;;) {
            auto l = oracle_tree(depth - 1, height);
            switch (integer(0, 2)) {
                case 0: {
                    auto r = oracle_tree(depth - 1, height);
                    return {l.first + r.first, l.second + r.second};
                }
                case 1: {
                    auto r = oracle_tree(depth - 1, height);
                    return {l.first * r.first, l.second * r.second};
                }
                default:
                    if (l.first.is_zero()) continue;
                    return {l.first.inverse(), l.second.inverse()};
            }
        }
    }

    /// Rational function with f(X) = g(X^2) for random g (an even element).
    RF even_ratfunc(int maxdeg, long height) {
        RF g = ratfunc(maxdeg, height);
        return RF(g.num().spread_square(), g.den().spread_square());
    }

    /// Element fixed by the extended tau: a, b even; c, d odd.
    QF tau_fixed_quatfunc(int maxdeg, long height) {
        RF x = RF::x();
        return QF(even_ratfunc(maxdeg, height), even_ratfunc(maxdeg, height),
                  even_ratfunc(maxdeg, height) * x, even_ratfunc(maxdeg, height) * x);
    }

   private:
    std::mt19937_64 eng_;
};

namespace detail {

inline CheckResult timed(const std::string& name, const std::function<std::string()>& body) {
    CheckResult r;
    r.name = name;
    auto t0 = std::chrono::steady_clock::now();
    try {
        r.detail = body();
        r.ok = r.detail.empty();
    } catch (const std::exception& e) {
        r.ok = false;
        r.detail = std::string("exception: ") + e.what();
    }
    r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    return r;
}

}  // namespace detail

/// The exact printed values of the skew embedding: T -> jX and
/// T + i T^3 -> jX - kX^3.
inline CheckResult check_phi_values() {
    return detail::timed("phi_values", []() -> std::string {
        GaussRat i = GaussRat::i(), one(1);
        RF X = RF::x();
        if (phi<Rat>(CPoly(CTw(), {GaussRat(0), one})) != QF(RF(0), RF(0), X, RF(0)))
            return "phi(T) != jX";
        QF img = phi<Rat>(CPoly(CTw(), {GaussRat(0), one, GaussRat(0), i}));
        if (img != QF(RF(0), RF(0), X, -(X * X * X))) return "phi(T+iT^3) != jX - kX^3";
        return "";
    });
}

/// The center obstruction chain for v = T + i T^3: NotInvariant with
/// v^2 = T^2 + T^6 and relative center degree 3.
inline CheckResult check_prop46_center() {
    return detail::timed("prop46_center", []() -> std::string {
        CFrac v(CPoly(CTw(), {GaussRat(0), GaussRat(1), GaussRat(0), GaussRat::i()}));
        RF X = RF::x();
        RF expect = X * X + X * X * X * X * X * X;
        if (center_single(v) != expect) return "v^2 != T^2 + T^6";
        auto verdict = invariance_check<Rat>({v});
        if (verdict.status != InvarianceStatus::NotInvariant) return "verdict is not NotInvariant";
        bool has_v2 = false, has_deg = false;
        for (const auto& c : verdict.certificates) {
            if (c.name == "v_squared" && c.witness == render(expect, "T")) has_v2 = true;
            if (c.name == "center_extension_degree" && c.witness == "3") has_deg = true;
        }
        if (!has_v2) return "missing v_squared certificate";
        if (!has_deg) return "missing degree-3 center certificate";
        return "";
    });
}

/// phi(P*Q) = phi(P)*phi(Q) on random skew polynomial pairs.
inline CheckResult check_phi_homomorphism(int n) {
    return detail::timed("phi_homomorphism", [n]() -> std::string {
        Rng rng(0x5eed0001);
        for (int t = 0; t < n; ++t) {
            CPoly p = rng.cpoly(6, 10), q = rng.cpoly(6, 10);
            if (phi<Rat>(p * q) != phi<Rat>(p) * phi<Rat>(q))
                return "failed at sample " + std::to_string(t);
        }
        return "";
    });
}

/// j * phi(x) = sigma(phi(x)) * j on random skew fractions.
inline CheckResult check_swap_identity(int n) {
    return detail::timed("swap_identity", [n]() -> std::string {
        Rng rng(0x5eed0002);
        QF J = QF::j();
        for (int t = 0; t < n; ++t) {
            QF u = phi<Rat>(rng.cfrac(4, 6));
            if (J * u != sigma_ext(u) * J) return "failed at sample " + std::to_string(t);
        }
        return "";
    });
}

/// Random expression trees evaluated through skew-fraction arithmetic and
/// through quaternion-function arithmetic agree exactly; this is the master
/// cross-check of the Ore canonical forms.
inline CheckResult check_oracle_equivalence(int n) {
    return detail::timed("oracle_equivalence", [n]() -> std::string {
        Rng rng(0x5eed0003);
        int done = 0;
        while (done < n) {
            try {
                auto [x, u] = rng.oracle_tree(static_cast<int>(rng.integer(1, 5)), 3);
                if (phi<Rat>(x) != u) return "mismatch at sample " + std::to_string(done);
                ++done;
            } catch (const degree_cap_exceeded&) {
                // oversized sample: draw another
            }
        }
        return "";
    });
}

/// The three-branch corpus: f = X^2 (Symmetric), f = X^3 (AntiSymmetric),
/// f = (1+X)/(1-X) (General with alpha = 1 and v = -Xj), with witness
/// certificates for each; every case must finish inside one second.
inline CheckResult check_branch_corpus() {
    return detail::timed("branch_corpus", []() -> std::string {
        RF X = RF::x(), Y = RF::x();

        auto run = [&](const RF& f, CaseKind expect) -> std::string {
            auto t0 = std::chrono::steady_clock::now();
            auto c = sigma_case_analysis(f);
            if (c.kind != expect) return "wrong case for " + render(f, "X");
            CFrac w = pullback_case(c);
            if (sigma_hat(w) != w) return "witness not sigma-hat fixed";
            auto wb = central_luroth<Rat>({phi<Rat>(w)});
            if (wb.trivial || wb.f.degree() != f.degree()) return "witness backbone degree mismatch";
            if (!in_H_of_f(QF(f), wb.f)) return "f not a member of H(f_w)";
            double secs =
                std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
            if (secs >= 1.0) return "case for " + render(f, "X") + " took >= 1s";
            return "";
        };

        auto c1 = sigma_case_analysis(X * X);
        if (c1.kind != CaseKind::Symmetric || c1.part != Y) return "f = X^2: expected Symmetric(Y)";
        auto c2 = sigma_case_analysis(X * X * X);
        if (c2.kind != CaseKind::AntiSymmetric || c2.part != Y)
            return "f = X^3: expected AntiSymmetric(Y)";
        auto c3 = sigma_case_analysis((RF(1) + X) / (RF(1) - X));
        if (c3.kind != CaseKind::General || c3.alpha != Rat(1) || c3.sqrt_alpha != Rat(1) ||
            c3.v != QF(RF(0), RF(0), -X, RF(0)))
            return "f = (1+X)/(1-X): expected General(1, 1, -Xj)";
        if (pullback_case(c1) != CFrac(CPoly(CTw(), {GaussRat(0), GaussRat(0), GaussRat(-1)})))
            return "Symmetric pullback != -T^2";
        if (pullback_case(c2) !=
            CFrac(CPoly(CTw(), {GaussRat(0), GaussRat(0), GaussRat(0), GaussRat(-1)})))
            return "AntiSymmetric pullback != -T^3";
        if (pullback_case(c3) != CFrac(CPoly(CTw(), {GaussRat(0), GaussRat(-1)})))
            return "General pullback != -T";

        for (const auto& [f, k] :
             {std::pair<RF, CaseKind>{X * X, CaseKind::Symmetric},
              {X * X * X, CaseKind::AntiSymmetric},
              {(RF(1) + X) / (RF(1) - X), CaseKind::General}}) {
            std::string err = run(f, k);
            if (!err.empty()) return err;
        }
        return "";
    });
}

/// For random single generators of H(T): the backbone f certifies every
/// component with a decomposition witness.
inline CheckResult check_central_luroth_property(int n) {
    return detail::timed("central_luroth_property", [n]() -> std::string {
        Rng rng(0x5eed0004);
        int done = 0;
        while (done < n) {
            QF u(rng.ratfunc(4, 4), rng.ratfunc(4, 4), rng.ratfunc(4, 4), rng.ratfunc(4, 4));
            auto r = central_luroth<Rat>({u});
            if (r.trivial) continue;
            for (const auto& comp : components(u)) {
                if (!is_member(comp, r.f)) return "component not a member at " + std::to_string(done);
                auto R = decompose_through(comp, r.f);
                if (!R || compose(*R, r.f) != comp)
                    return "witness missing at " + std::to_string(done);
            }
            for (const auto& c : r.certificates)
                if (!c.ok) return "certificate failed at " + std::to_string(done);
            ++done;
        }
        return "";
    });
}

/// Euclidean and Ore identities on random pairs: division re-multiplication,
/// lclm witnesses, and the degree formula.
inline CheckResult check_euclid_ore(int n) {
    return detail::timed("euclid_ore", [n]() -> std::string {
        Rng rng(0x5eed0005);
        for (int t = 0; t < n; ++t) {
            CPoly a = rng.cpoly(6, 10), b = rng.cpoly_nonzero(6, 10);
            auto [q, r] = right_divmod(a, b);
            if (q * b + r != a) return "divmod identity failed at " + std::to_string(t);
            if (!r.is_zero() && r.degree() >= b.degree())
                return "remainder degree failed at " + std::to_string(t);
            if (a.is_zero()) continue;
            auto l = lclm(a, b);
            if (a * l.a_cof != l.m || b * l.b_cof != l.m)
                return "lclm witness failed at " + std::to_string(t);
            CPoly g = gcrd(a, b);
            if (l.m.degree() != a.degree() + b.degree() - g.degree())
                return "lclm degree formula failed at " + std::to_string(t);
        }
        return "";
    });
}

/// The fixed-ring characterization of the embedding image: parity-profile
/// elements round-trip through the preimage, parity violations are rejected
/// and moved by the extended tau.
inline CheckResult check_fixed_ring(int n) {
    return detail::timed("fixed_ring", [n]() -> std::string {
        Rng rng(0x5eed0006);
        RF X = RF::x();
        int done = 0;
        while (done < n) {
            QF u = rng.tau_fixed_quatfunc(2, 4);
            if (tau_ext(u) != u) return "tau does not fix a parity-profile element";
            auto x = phi_inv(u);
            if (!x) return "parity-profile element rejected at " + std::to_string(done);
            if (phi<Rat>(*x) != u) return "round trip failed at " + std::to_string(done);
            ++done;
        }
        done = 0;
        while (done < n) {
            QF u = rng.tau_fixed_quatfunc(2, 4);
            // Break the parity of one component.
            QF bad;
            switch (rng.integer(0, 3)) {
                case 0: bad = u + QF(X); break;
                case 1: bad = u + QF(RF(0), X, RF(0), RF(0)); break;
                case 2: bad = u + QF(RF(0), RF(0), RF(1), RF(0)); break;
                default: bad = u + QF(RF(0), RF(0), RF(0), RF(1)); break;
            }
            if (phi_inv(bad)) return "parity violation accepted at " + std::to_string(done);
            if (tau_ext(bad) == bad) return "tau fixes a parity violation at " + std::to_string(done);
            ++done;
        }
        return "";
    });
}

/// The inner-twist change of variable: untwisting is multiplicative and the
/// new variable is central in the original ring.
inline CheckResult check_untwist(int npairs, int nconst) {
    return detail::timed("untwist", [npairs, nconst]() -> std::string {
        Rng rng(0x5eed0007);
        Quaternion<Rat> j = Quaternion<Rat>::j();
        InnerTwist<Rat> tw(j);
        using IPoly = SkewPoly<InnerTwist<Rat>>;
        auto ipoly = [&](int maxdeg, long height) {
            std::vector<Quaternion<Rat>> c;
            int d = static_cast<int>(rng.integer(0, maxdeg));
            for (int i = 0; i <= d; ++i) c.push_back(rng.quat(height));
            return IPoly(tw, std::move(c));
        };
        for (int t = 0; t < npairs; ++t) {
            IPoly p = ipoly(5, 6), q = ipoly(5, 6);
            if (untwist_inner(p * q, j) != untwist_inner(p, j) * untwist_inner(q, j))
                return "untwist not multiplicative at " + std::to_string(t);
        }
        // b^-1 T commutes with constants already inside H[T, I(j)].
        IPoly u(tw, {Quaternion<Rat>(0), j.inverse()});
        for (int t = 0; t < nconst; ++t) {
            IPoly c = IPoly::constant(rng.quat(10), tw);
            if (u * c != c * u) return "central variable fails to commute at " + std::to_string(t);
        }
        if (untwist_inner(u, j) != SkewPoly<CentralTwist<Rat>>::t(CentralTwist<Rat>()))
            return "b^-1 T does not untwist to the central variable";
        return "";
    });
}

/// Named suites at self-test scale; the acceptance harness calls the
/// individual checks with the full counts.
inline std::vector<std::pair<std::string, std::function<CheckResult()>>> selftest_registry() {
    return {
        {"phi", [] { return check_phi_values(); }},
        {"prop46", [] { return check_prop46_center(); }},
        {"homomorphism", [] { return check_phi_homomorphism(100); }},
        {"swap", [] { return check_swap_identity(100); }},
        {"oracle", [] { return check_oracle_equivalence(50); }},
        {"branches", [] { return check_branch_corpus(); }},
        {"central-luroth", [] { return check_central_luroth_property(10); }},
        {"euclid", [] { return check_euclid_ore(100); }},
        {"fixed-ring", [] { return check_fixed_ring(50); }},
        {"untwist", [] { return check_untwist(30, 20); }},
    };
}

}  // namespace checks
}  // namespace skewluroth
