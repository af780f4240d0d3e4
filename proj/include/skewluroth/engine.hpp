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
#include <string>
#include <utility>
#include <vector>

#include "luroth.hpp"
#include "quaternion_function.hpp"
#include "render.hpp"
#include "skew_fraction.hpp"

namespace skewluroth {

/// A named check with its outcome and an optional witness expression.
struct Certificate {
    std::string name;
    bool ok = false;
    std::string witness;
};

enum class CaseKind { Constant, Symmetric, AntiSymmetric, General };

inline const char* to_string(CaseKind k) {
    switch (k) {
        case CaseKind::Constant: return "Constant";
        case CaseKind::Symmetric: return "Symmetric";
        case CaseKind::AntiSymmetric: return "AntiSymmetric";
        default: return "General";
    }
}

/**
 * Branch data of the conjugation-twisted Lueroth analysis of a backbone
 * generator f:
 *  - Symmetric:      tau(f) = f, so f = g(X^2); carries g.
 *  - AntiSymmetric:  tau(f) = -f + const, so f - const = h(X^2) X; carries h.
 *  - General:        tau(f - a) = 1/(alpha (f - a)); carries alpha, an exact
 *                    square root of alpha, and v = ((1 - sqrt(alpha) f') /
 *                    (1 + sqrt(alpha) f')) * j, which is fixed by both
 *                    extended automorphisms.
 */
template <class F>
struct LurothCase {
    CaseKind kind = CaseKind::Constant;
    RatFunc<F> part;  ///< g (Symmetric) or h (AntiSymmetric), in a fresh variable
    F alpha{0};
    F sqrt_alpha{0};
    QuatFunc<F> v;
};

enum class LurothStatus { Trivial, Generated, NotInvariant, Unknown };

inline const char* to_string(LurothStatus s) {
    switch (s) {
        case LurothStatus::Trivial: return "Trivial";
        case LurothStatus::Generated: return "Generated";
        case LurothStatus::NotInvariant: return "NotInvariant";
        default: return "Unknown";
    }
}

enum class InvarianceStatus { Invariant, NotInvariant, Unknown };

inline const char* to_string(InvarianceStatus s) {
    switch (s) {
        case InvarianceStatus::Invariant: return "Invariant";
        case InvarianceStatus::NotInvariant: return "NotInvariant";
        default: return "Unknown";
    }
}

template <class F>
struct CentralLurothResult {
    bool trivial = false;  ///< every generator was a constant quaternion
    RatFunc<F> f;          ///< single generator with H(f) = H(gens)
    std::vector<Certificate> certificates;
};

/**
 * Single-generator computation for the quotient skew field of H[T] with T
 * central: collects the four components of every generator (conjugation
 * averaging shows H(u) contains each component of u), runs the commutative
 * Lueroth construction on them, and certifies each generator's membership in
 * H(f) with decompose_through witnesses for every component.
 */
template <class F>
CentralLurothResult<F> central_luroth(const std::vector<QuatFunc<F>>& gens) {
    if (gens.empty()) throw precondition_error("central_luroth needs at least one generator");
    CentralLurothResult<F> out;
    std::vector<RatFunc<F>> comps;
    for (const auto& g : gens)
        for (const auto& c : components(g))
            if (!c.is_constant()) comps.push_back(c);
    if (comps.empty()) {
        out.trivial = true;
        return out;
    }
    out.f = luroth_generator(comps);
    static const char* names[4] = {"a", "b", "c", "d"};
    for (std::size_t i = 0; i < gens.size(); ++i) {
        bool all_ok = true;
        std::string witness;
        auto cs = components(gens[i]);
        for (std::size_t k = 0; k < 4; ++k) {
            auto R = decompose_through(cs[k], out.f);
            all_ok = all_ok && R.has_value();
            if (!witness.empty()) witness += "; ";
            witness += std::string(names[k]) + " = " + (R ? render(*R, "Y") : "<none>");
        }
        out.certificates.push_back(
            {"generator[" + std::to_string(i) + "] in H(f)", all_ok, witness});
    }
    return out;
}

/**
 * Case analysis of tau on F(f) for nonconstant f: compute tau(f) = f(-X),
 * solve for the Moebius matrix M with tau(f) = M(f), and branch on its shape.
 * M always exists when f generates the component field of skew-embedding
 * images; for other inputs absence is reported as a precondition error.
 */
template <class F>
LurothCase<F> sigma_case_analysis(const RatFunc<F>& f) {
    LurothCase<F> out;
    if (f.is_constant()) {
        out.kind = CaseKind::Constant;
        return out;
    }
    RatFunc<F> tf = f.substitute_neg();
    auto M = mobius_solve(f, tf);
    if (!M)
        throw precondition_error("tau(f) is not a Moebius transform of f");

    if (M->is_identity()) {
        auto [g, h] = even_odd_split(f);
        if (!h.is_zero()) throw internal_error("symmetric branch with a nonzero odd part");
        out.kind = CaseKind::Symmetric;
        out.part = g;
        return out;
    }

    if (M->c().is_zero()) {
        // Canonical scaling set d = 1; an involution with c = 0 forces a = -1,
        // so tau(f) = -f + b and the even part is the constant b/2.
        if (M->a() != F(-1))
            throw internal_error("upper-triangular involution with a != -d");
        auto [g, h] = even_odd_split(f);
        if (g != RatFunc<F>(M->b() / F(2)))
            throw internal_error("even part does not match the Moebius shift");
        out.kind = CaseKind::AntiSymmetric;
        out.part = h;
        return out;
    }

    // Canonical scaling set c = 1; the involution forces d = -a. Shift f by a
    // so that tau(f') = 1/(alpha f') with alpha = 1/(b + a^2).
    if (M->d() != -M->a()) throw internal_error("Moebius involution with nonzero trace");
    F a = M->a();
    RatFunc<F> fs = f - RatFunc<F>(a);
    out.kind = CaseKind::General;
    out.alpha = (M->b() + a * a).inverse();  // nonzero: it is -1/det

    // alpha = Q(0)^2 / P(0)^2 for the reduced parts of the shifted f, so an
    // exact square root exists in the base field.
    F p0 = fs.num().constant_term();
    F q0 = fs.den().constant_term();
    if (p0.is_zero()) throw internal_error("shifted numerator vanishes at the origin");
    F ratio = q0 / p0;
    if (out.alpha != ratio * ratio)
        throw internal_error("alpha does not equal Q(0)^2/P(0)^2");
    out.sqrt_alpha = ratio.abs();

    RatFunc<F> saf = fs * RatFunc<F>(out.sqrt_alpha);
    RatFunc<F> s = (RatFunc<F>(1) - saf) / (RatFunc<F>(1) + saf);
    out.v = QuatFunc<F>(RatFunc<F>(0), RatFunc<F>(0), s, RatFunc<F>(0));
    if (tau_ext(out.v) != out.v) throw internal_error("general-branch v is not tau-fixed");
    if (sigma_ext(out.v) != out.v) throw internal_error("general-branch v is not sigma-fixed");
    return out;
}

/**
 * Pulls a non-constant case back to a generator of the skew field, always
 * fixed by coefficient conjugation:
 *   Symmetric(g)      -> g(-T^2)
 *   AntiSymmetric(h)  -> T * h(-T^2)
 *   General(.., v)    -> the preimage of v under the skew embedding
 */
template <class F>
SkewFrac<ConjTwist<F>> pullback_case(const LurothCase<F>& c) {
    switch (c.kind) {
        case CaseKind::Constant:
            throw precondition_error("pullback of the constant case");
        case CaseKind::Symmetric:
            return detail::central_substitute(c.part);
        case CaseKind::AntiSymmetric:
            return SkewFrac<ConjTwist<F>>::t() * detail::central_substitute(c.part);
        default: {
            auto w = phi_inv(c.v);
            if (!w) throw internal_error("general-branch v has no preimage");
            return *w;
        }
    }
}

/**
 * The center generator of the division ring generated by F(i) and a single
 * element v that anticommutes with i and has central square: the center is
 * F(i)(v)'s maximal commutative core F(v^2), and this returns c(T) with
 * c = v^2 as an even rational function of T.
 */
template <class F>
RatFunc<F> center_single(const SkewFrac<ConjTwist<F>>& v) {
    using SF = SkewFrac<ConjTwist<F>>;
    SF ic = SF::constant(Gauss<F>::i());
    if (v * ic != -(ic * v))
        throw precondition_error("center formula inapplicable: v i != -i v");
    QuatFunc<F> u = phi<F>(v * v);
    if (!u.is_scalar() || !u.a().is_even())
        throw precondition_error("center formula inapplicable: v^2 is not central");
    RatFunc<F> g = unsquare(u.a(), false).substitute_neg();  // v^2 = g(T^2)
    return RatFunc<F>(g.num().spread_square(), g.den().spread_square());
}

template <class F>
struct InvarianceVerdict {
    InvarianceStatus status = InvarianceStatus::Unknown;
    std::optional<SkewFrac<ConjTwist<F>>> witness;  ///< sigma-hat-fixed generator, when Invariant
    std::string obstruction;                        ///< sound disproof summary, when NotInvariant
    std::vector<Certificate> certificates;
};

template <class F>
struct LurothOutcome {
    LurothStatus status = LurothStatus::Unknown;
    std::optional<SkewFrac<ConjTwist<F>>> generator;
    std::optional<LurothCase<F>> branch;
    RatFunc<F> backbone;
    std::vector<Certificate> certificates;
    std::vector<std::string> warnings;
};

namespace detail {

template <class F>
using CFrac = SkewFrac<ConjTwist<F>>;

template <class F>
CFrac<F> conj_by_i(const CFrac<F>& x) {
    CFrac<F> ic = CFrac<F>::constant(Gauss<F>::i());
    return ic * x * ic.inverse();
}

/// Even/odd parts with respect to conjugation by i: x = e + o with e
/// commuting and o anticommuting with i.
template <class F>
std::pair<CFrac<F>, CFrac<F>> i_conj_split(const CFrac<F>& x) {
    CFrac<F> half = CFrac<F>::constant(Gauss<F>(F(1) / F(2)));
    CFrac<F> e = (x + conj_by_i(x)) * half;
    return {e, x - e};
}

/// Field isomorphism from the centralizer of i (the even elements) onto the
/// rational function field F(i)(s): a(-T^2) + b(-T^2) i maps to a(-s)+b(-s)i.
template <class F>
RatFunc<Gauss<F>> rho_even(const CFrac<F>& x) {
    QuatFunc<F> u = phi<F>(x);
    if (!u.c().is_zero() || !u.d().is_zero())
        throw internal_error("rho applied to a non-even element");
    auto lift = [](const RatFunc<F>& r) {
        return r.template map<Gauss<F>>([](const F& c) { return Gauss<F>(c); });
    };
    RatFunc<Gauss<F>> re = lift(unsquare(u.a(), false).substitute_neg());
    RatFunc<Gauss<F>> im = lift(unsquare(u.b(), false).substitute_neg());
    return re + RatFunc<Gauss<F>>(Gauss<F>::i()) * im;
}

/// Coefficient conjugation of F(i)(s): the action induced by conjugating an
/// even element with any odd one.
template <class F>
RatFunc<Gauss<F>> iota(const RatFunc<Gauss<F>>& r) {
    return r.template map<Gauss<F>>([](const Gauss<F>& c) { return conj(c); });
}

/**
 * Structure decomposition of the division ring L generated by F(i) and the
 * given elements: L = L0 + L0*u0, where L0 = L ∩ {even elements} is a
 * commutative subfield of F(i)(s) and u0 is any odd part. Membership in L
 * reduces to two commutative membership tests, which is what makes the
 * invariance decision sound.
 */
template <class F>
class SkewStructure {
   public:
    explicit SkewStructure(const std::vector<CFrac<F>>& gens) {
        std::vector<RatFunc<Gauss<F>>> even_gens;
        std::vector<CFrac<F>> odds;
        for (const auto& g : gens) {
            auto [e, o] = i_conj_split(g);
            if (!e.is_zero()) even_gens.push_back(rho_even(e));
            if (!o.is_zero()) odds.push_back(o);
        }
        if (!odds.empty()) {
            odd_ref_ = odds.front();
            for (const auto& o : odds) even_gens.push_back(rho_even(o * odd_ref_->inverse()));
            even_gens.push_back(rho_even(*odd_ref_ * *odd_ref_));
            // Conjugation by the odd part acts on L0 as coefficient
            // conjugation, so L0 is closed under iota. Without an odd part no
            // element of L realizes iota, and closing would inflate L0.
            std::size_t n = even_gens.size();
            for (std::size_t i = 0; i < n; ++i) even_gens.push_back(iota(even_gens[i]));
        }
        std::vector<RatFunc<Gauss<F>>> nonconst;
        for (const auto& r : even_gens)
            if (!r.is_constant()) nonconst.push_back(r);
        if (!nonconst.empty()) even_generator_ = luroth_generator(nonconst);
    }

    bool even_field_contains(const RatFunc<Gauss<F>>& r) const {
        if (r.is_constant()) return true;
        return even_generator_ && is_member(r, *even_generator_);
    }

    bool contains(const CFrac<F>& z) const {
        auto [e, o] = i_conj_split(z);
        if (!e.is_zero() && !even_field_contains(rho_even(e))) return false;
        if (o.is_zero()) return true;
        if (!odd_ref_) return false;
        return even_field_contains(rho_even(o * odd_ref_->inverse()));
    }

    const std::optional<RatFunc<Gauss<F>>>& even_generator() const { return even_generator_; }

   private:
    std::optional<CFrac<F>> odd_ref_;
    std::optional<RatFunc<Gauss<F>>> even_generator_;
};

template <class F>
struct EnginePipeline {
    std::vector<CFrac<F>> gens;
    std::vector<QuatFunc<F>> images;
    CentralLurothResult<F> backbone;
    std::optional<LurothCase<F>> branch;
    std::optional<CFrac<F>> w;
    RatFunc<F> f_w;
    std::vector<Certificate> certs;
    bool certs_ok = false;
    std::string failure;  ///< nonempty when the case analysis itself failed
};

template <class F>
EnginePipeline<F> compute_pipeline(const std::vector<CFrac<F>>& gens) {
    EnginePipeline<F> pl;
    pl.gens = gens;
    for (const auto& g : gens) pl.images.push_back(phi<F>(g));
    pl.backbone = central_luroth(pl.images);
    if (pl.backbone.trivial) return pl;

    try {
        pl.branch = sigma_case_analysis(pl.backbone.f);
        pl.w = pullback_case(*pl.branch);
    } catch (const error& e) {
        pl.failure = e.what();
        return pl;
    }

    bool fixed = sigma_hat(*pl.w) == *pl.w;
    pl.certs.push_back({"sigma_hat_fixed", fixed, render(*pl.w, "T")});

    auto wb = central_luroth<F>({phi<F>(*pl.w)});
    pl.f_w = wb.f;
    bool deg_ok = !wb.trivial && pl.f_w.degree() == pl.backbone.f.degree();
    pl.certs.push_back({"backbone_degree", deg_ok, render(pl.f_w, "X")});

    bool members_ok = true;
    if (deg_ok) {
        for (std::size_t i = 0; i < pl.images.size(); ++i) {
            bool ok = in_H_of_f(pl.images[i], pl.f_w);
            members_ok = members_ok && ok;
            pl.certs.push_back({"generator[" + std::to_string(i) + "] in H(f_w)", ok,
                                render(pl.f_w, "X")});
        }
    } else {
        members_ok = false;
    }
    pl.certs_ok = fixed && deg_ok && members_ok;
    return pl;
}

/// Single-generator extraction for the center obstruction: subtracts the
/// constant making the generator anticommute with i, if there is one.
template <class F>
std::optional<CFrac<F>> anticommuting_normalization(const CFrac<F>& gen) {
    CFrac<F> ic = CFrac<F>::constant(Gauss<F>::i());
    CFrac<F> two_i_mu = gen * ic + ic * gen;
    if (!two_i_mu.is_constant()) return std::nullopt;
    CFrac<F> mu = two_i_mu * (ic + ic).inverse();
    CFrac<F> v = gen - mu;
    if (v.is_zero()) return std::nullopt;
    if (v * ic != -(ic * v)) throw internal_error("normalized generator fails anticommutation");
    return v;
}

/**
 * The invariance decision ladder. Sound disproofs first, then the structure
 * decomposition, which decides sigma-hat-stability of L = F(i)(gens) exactly:
 *  (1) every generator in R(T) or i*R(T): invariant by the fixed-line argument;
 *  (2a) a conjugated generator leaves H(f): disproof;
 *  (2b) certificate failure: disproof (under invariance they are theorems);
 *  (2c) center obstruction for a single normalized generator;
 *  (3) decomposition test of every conjugated generator's membership in L.
 */
template <class F>
InvarianceVerdict<F> decide_invariance(const EnginePipeline<F>& pl) {
    InvarianceVerdict<F> out;

    if (pl.backbone.trivial) {
        out.status = InvarianceStatus::Invariant;
        out.certificates.push_back({"constant_generators", true, ""});
        return out;
    }

    // (1) sufficient condition: components of each image sit in the real or
    // i-real slots (b = d = 0, or a = c = 0).
    bool all_fixed_line = true;
    for (const auto& u : pl.images) {
        bool real_type = u.b().is_zero() && u.d().is_zero();
        bool ireal_type = u.a().is_zero() && u.c().is_zero();
        if (!real_type && !ireal_type) {
            all_fixed_line = false;
            break;
        }
    }
    if (all_fixed_line) {
        out.status = InvarianceStatus::Invariant;
        out.certificates.push_back({"generators_in_R(T)_or_iR(T)", true, ""});
        if (pl.certs_ok && pl.w) out.witness = pl.w;
        return out;
    }

    std::vector<CFrac<F>> sigma_gens;
    for (const auto& g : pl.gens) sigma_gens.push_back(sigma_hat(g));

    // (2a) a conjugated generator with a component outside Q(f) cannot lie in
    // phi(L), which is contained in H(f).
    for (std::size_t i = 0; i < sigma_gens.size(); ++i) {
        QuatFunc<F> su = phi<F>(sigma_gens[i]);
        if (!in_H_of_f(su, pl.backbone.f)) {
            out.status = InvarianceStatus::NotInvariant;
            out.obstruction = "sigma_hat(generator " + std::to_string(i) +
                              ") has a component outside Q(f)";
            out.certificates.push_back(
                {"sigma_image_in_H(f)", false, render_quatfunc(su, "X")});
            return out;
        }
    }

    // (2b) under invariance the witness construction and its certificates are
    // theorems, so any failure is a sound disproof.
    if (pl.failure.empty() && !pl.certs_ok) {
        out.status = InvarianceStatus::NotInvariant;
        out.obstruction = "witness certificates fail";
        out.certificates.push_back({"witness_certificates", false, ""});
        return out;
    }

    // (2c) center obstruction: for L = F(i)(v) with v anticommuting with i
    // and v^2 central, invariance would force L = F(i)(w), hence equal
    // centers Q(v^2) = Q(w^2); compare them as subfields of Q(T).
    std::size_t nonconst = 0, idx = 0;
    for (std::size_t i = 0; i < pl.gens.size(); ++i)
        if (!pl.gens[i].is_constant()) { ++nonconst; idx = i; }
    if (nonconst == 1 && pl.w && pl.certs_ok) {
        if (auto v = anticommuting_normalization(pl.gens[idx])) {
            bool v2_central = false;
            RatFunc<F> cv;
            try {
                cv = center_single(*v);
                v2_central = true;
            } catch (const precondition_error&) {
            }
            if (v2_central) {
                if (pl.branch->kind == CaseKind::Symmetric) {
                    // The candidate field F(i)(w) is commutative, but L holds a
                    // nonconstant element anticommuting with i.
                    out.status = InvarianceStatus::NotInvariant;
                    out.obstruction = "invariance would force a commutative field, "
                                      "but the generator anticommutes with i";
                    out.certificates.push_back({"v_squared", true, render(cv, "T")});
                    return out;
                }
                RatFunc<F> cw;
                bool w_ok = false;
                try {
                    cw = center_single(*pl.w);
                    w_ok = true;
                } catch (const precondition_error&) {
                }
                if (w_ok) {
                    bool v_in_w = is_member(cv, cw);
                    bool w_in_v = is_member(cw, cv);
                    out.certificates.push_back({"v_squared", true, render(cv, "T")});
                    out.certificates.push_back({"w_center", true, render(cw, "T")});
                    if (v_in_w && !w_in_v) {
                        int ratio = cv.degree() / cw.degree();
                        out.status = InvarianceStatus::NotInvariant;
                        out.obstruction = "center of F(i)(v) is a proper subfield of the "
                                          "center invariance would force";
                        out.certificates.push_back({"center_extension_degree", false,
                                                    std::to_string(ratio)});
                        return out;
                    }
                    if (!v_in_w) {
                        out.status = InvarianceStatus::NotInvariant;
                        out.obstruction = "centers of F(i)(v) and F(i)(w) generate "
                                          "different subfields";
                        out.certificates.push_back({"centers_mutual", false, ""});
                        return out;
                    }
                    out.certificates.push_back({"centers_mutual", true, ""});
                }
            }
        }
    }

    if (!pl.failure.empty()) {
        out.status = InvarianceStatus::Unknown;
        out.obstruction = pl.failure;
        return out;
    }

    // (3) exact decision: sigma-hat is an involution, so L is invariant iff
    // sigma_hat(g) lies in L for every generator g; membership is decided
    // through the even/odd structure decomposition.
    SkewStructure<F> structure(pl.gens);
    if (structure.even_generator())
        out.certificates.push_back(
            {"even_subfield_generator", true, render(*structure.even_generator(), "s")});
    for (std::size_t i = 0; i < sigma_gens.size(); ++i) {
        bool inside = structure.contains(sigma_gens[i]);
        out.certificates.push_back({"sigma_hat(generator " + std::to_string(i) + ") in L",
                                    inside, render(sigma_gens[i], "T")});
        if (!inside) {
            out.status = InvarianceStatus::NotInvariant;
            out.obstruction = "sigma_hat(generator " + std::to_string(i) +
                              ") is not a member of the generated division ring";
            return out;
        }
    }
    out.status = InvarianceStatus::Invariant;
    if (pl.certs_ok && pl.w) out.witness = pl.w;
    return out;
}

}  // namespace detail

/**
 * The conjugation-twisted Lueroth engine: maps generators through the skew
 * embedding, computes the commutative backbone f, runs the case analysis and
 * pullback, and certifies. Generated means the invariance decision succeeded
 * and every certificate holds, so L equals the division ring generated by
 * F(i) and the witness.
 */
template <class F>
LurothOutcome<F> skew_luroth(const std::vector<SkewFrac<ConjTwist<F>>>& gens) {
    if (gens.empty()) throw precondition_error("skew_luroth needs at least one generator");
    auto pl = detail::compute_pipeline(gens);

    LurothOutcome<F> out;
    out.backbone = pl.backbone.f;
    out.certificates = pl.backbone.certificates;

    if (pl.backbone.trivial) {
        out.status = LurothStatus::Trivial;
        out.warnings.push_back("all generators are constants: L = C");
        return out;
    }
    out.branch = pl.branch;
    for (const auto& c : pl.certs) out.certificates.push_back(c);

    auto verdict = detail::decide_invariance(pl);
    for (const auto& c : verdict.certificates) out.certificates.push_back(c);

    switch (verdict.status) {
        case InvarianceStatus::Invariant:
            if (pl.certs_ok && pl.w) {
                out.status = LurothStatus::Generated;
                out.generator = pl.w;
            } else {
                out.status = LurothStatus::Unknown;
                out.warnings.push_back("invariant, but the witness certificates did not close");
            }
            break;
        case InvarianceStatus::NotInvariant:
            out.status = LurothStatus::NotInvariant;
            out.warnings.push_back(verdict.obstruction);
            break;
        default:
            out.status = LurothStatus::Unknown;
            if (!verdict.obstruction.empty()) out.warnings.push_back(verdict.obstruction);
            break;
    }
    return out;
}

/**
 * Decides sigma-hat-invariance of the division ring generated by F(i) and
 * the given elements. Invariant and NotInvariant verdicts carry certificates;
 * Unknown is reserved for internal analysis failures.
 */
template <class F>
InvarianceVerdict<F> invariance_check(const std::vector<SkewFrac<ConjTwist<F>>>& gens) {
    if (gens.empty()) throw precondition_error("invariance_check needs at least one generator");
    auto pl = detail::compute_pipeline(gens);
    return detail::decide_invariance(pl);
}

/// Backbone generator of a single skew fraction: the commutative generator f
/// with H(f) = H(components of the embedding image).
template <class F>
RatFunc<F> skew_backbone(const SkewFrac<ConjTwist<F>>& x) {
    auto r = central_luroth<F>({phi<F>(x)});
    if (r.trivial) throw precondition_error("constant element has no backbone");
    return r.f;
}

/// Certified mutual membership: x and y generate the same division ring over
/// F(i) (each one's embedding image lies in H of the other's backbone; the
/// images are automatically fixed by the extended tau).
template <class F>
bool skew_mutual_membership(const SkewFrac<ConjTwist<F>>& x, const SkewFrac<ConjTwist<F>>& y) {
    return in_H_of_f(phi<F>(x), skew_backbone(y)) && in_H_of_f(phi<F>(y), skew_backbone(x));
}

}  // namespace skewluroth
