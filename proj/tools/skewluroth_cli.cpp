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

#include <CLI11.hpp>

#include <future>
#include <iostream>
#include <string>
#include <vector>

#include "skewluroth/checks.hpp"
#include "skewluroth/output.hpp"
#include "skewluroth/skewluroth.hpp"

namespace sk = skewluroth;

namespace {

struct Options {
    bool pretty = false;
    bool rational_only = false;
    unsigned jobs = 1;
};

void emit(const sk::OutputDoc& doc, const Options& opt) {
    if (opt.pretty)
        std::cout << doc.pretty();
    else
        std::cout << doc.to_json().dump(2) << "\n";
}

sk::OutputDoc value_doc(std::string value) {
    sk::OutputDoc d;
    d.status = "ok";
    d.generator = std::move(value);
    return d;
}

std::string simplify_in_ring(const std::string& expr, const std::string& ring) {
    auto ast = sk::parse(expr);
    if (ring == "ctsigma") return sk::render(sk::eval_ctsigma(ast), "T");
    if (ring == "ht") return sk::render_quatfunc(sk::eval_ht(ast), "T");
    if (ring == "hx") return sk::render_quatfunc(sk::eval_hx(ast), "X");
    throw CLI::ValidationError("--ring must be one of ctsigma|ht|hx");
}

bool eq_in_ring(const std::string& lhs, const std::string& rhs, const std::string& ring) {
    if (ring == "ctsigma") return sk::eval_ctsigma(sk::parse(lhs)) == sk::eval_ctsigma(sk::parse(rhs));
    if (ring == "ht") return sk::eval_ht(sk::parse(lhs)) == sk::eval_ht(sk::parse(rhs));
    if (ring == "hx") return sk::eval_hx(sk::parse(lhs)) == sk::eval_hx(sk::parse(rhs));
    throw CLI::ValidationError("--ring must be one of ctsigma|ht|hx");
}

std::vector<sk::SkewFrac<sk::ConjTwist<sk::Rat>>> parse_ctsigma_list(
    const std::vector<std::string>& exprs) {
    std::vector<sk::SkewFrac<sk::ConjTwist<sk::Rat>>> out;
    out.reserve(exprs.size());
    for (const auto& e : exprs) out.push_back(sk::eval_ctsigma(sk::parse(e)));
    return out;
}

int run_selftest(const std::string& suite, const Options& opt) {
    auto registry = sk::checks::selftest_registry();
    std::vector<std::pair<std::string, std::future<sk::CheckResult>>> running;
    std::vector<sk::CheckResult> results;
    auto policy = opt.jobs > 1 ? std::launch::async : std::launch::deferred;
    for (auto& [name, fn] : registry) {
        if (!suite.empty() && name != suite) continue;
        running.emplace_back(name, std::async(policy, fn));
    }
    if (running.empty()) {
        std::cerr << "no such suite: " << suite << "\n";
        return 1;
    }
    bool all_ok = true;
    for (auto& [name, fut] : running) {
        sk::CheckResult r = fut.get();
        all_ok = all_ok && r.ok;
        std::cout << (r.ok ? "[PASS] " : "[FAIL] ") << name;
        if (!r.ok) std::cout << ": " << r.detail;
        char buf[32];
        std::snprintf(buf, sizeof buf, " (%.2fs)", r.seconds);
        std::cout << buf << "\n";
    }
    return all_ok ? 0 : 2;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact arithmetic in skew rational function fields over the rational "
                 "quaternions, with constructive single-generator computation"};
    app.require_subcommand(1);

    Options opt;
    app.add_flag("--pretty", opt.pretty, "human-readable unicode output instead of JSON");
    app.add_flag("--rational-only", opt.rational_only,
                 "refuse generators needing an irrational sqrt(alpha) (the analysis "
                 "produces an exact rational root for every rational input, so this "
                 "is a guard, not a behavior change)");
    app.add_option("--jobs", opt.jobs, "parallel workers for selftest")->default_val(1);

    std::string ring = "ctsigma", expr, expr2, b_expr, suite;
    std::vector<std::string> exprs;

    auto* c_simplify = app.add_subcommand("simplify", "canonical form of an expression");
    c_simplify->add_option("expr", expr)->required();
    c_simplify->add_option("--ring", ring, "ctsigma|ht|hx")->default_val("ctsigma");

    auto* c_eq = app.add_subcommand("eq", "decide equality of two expressions");
    c_eq->add_option("lhs", expr)->required();
    c_eq->add_option("rhs", expr2)->required();
    c_eq->add_option("--ring", ring, "ctsigma|ht|hx")->default_val("ctsigma");

    auto* c_phi = app.add_subcommand("phi", "embed a C(T,sigma) expression into H(X)");
    c_phi->add_option("expr", expr)->required();

    auto* c_phi_inv =
        app.add_subcommand("phi-inv", "preimage of an H(X) expression under the embedding");
    c_phi_inv->add_option("expr", expr)->required();

    auto* c_central = app.add_subcommand(
        "luroth-central", "single generator of the division ring the H(T) expressions generate");
    c_central->add_option("exprs", exprs)->required()->expected(-1);

    auto* c_sigma = app.add_subcommand(
        "luroth-sigma", "single generator of the division ring the C(T,sigma) expressions "
                        "generate, when its image is conjugation-invariant");
    c_sigma->add_option("exprs", exprs)->required()->expected(-1);

    auto* c_inv = app.add_subcommand("invariance",
                                     "decide conjugation-invariance of the generated ring");
    c_inv->add_option("exprs", exprs)->required()->expected(-1);

    auto* c_center = app.add_subcommand(
        "center", "center generator of C(v) for v anticommuting with i with central square");
    c_center->add_option("expr", expr)->required();

    auto* c_untwist = app.add_subcommand(
        "untwist", "rewrite a polynomial of H[T, I(b)] in the central variable U = b^-1*T");
    c_untwist->add_option("--b", b_expr, "the conjugating unit (quaternion constant)")->required();
    c_untwist->add_option("expr", expr)->required();

    auto* c_selftest = app.add_subcommand("selftest", "run the built-in verification suites");
    c_selftest->add_option("--suite", suite, "run a single named suite");

    for (auto* sub : {c_simplify, c_eq, c_phi, c_phi_inv, c_central, c_sigma, c_inv, c_center,
                      c_untwist, c_selftest})
        sub->fallthrough();

    CLI11_PARSE(app, argc, argv);

    try {
        if (c_simplify->parsed()) {
            emit(value_doc(simplify_in_ring(expr, ring)), opt);
        } else if (c_eq->parsed()) {
            sk::OutputDoc d;
            d.status = eq_in_ring(expr, expr2, ring) ? "equal" : "unequal";
            emit(d, opt);
        } else if (c_phi->parsed()) {
            auto img = sk::phi<sk::Rat>(sk::eval_ctsigma(sk::parse(expr)));
            emit(value_doc(sk::render_quatfunc(img, "X")), opt);
        } else if (c_phi_inv->parsed()) {
            auto pre = sk::phi_inv(sk::eval_hx(sk::parse(expr)));
            sk::OutputDoc d;
            d.status = pre ? "ok" : "none";
            if (pre) d.generator = sk::render(*pre, "T");
            if (!pre)
                d.warnings.push_back("the element is not fixed by the extended tau, so it "
                                     "has no preimage");
            emit(d, opt);
        } else if (c_central->parsed()) {
            std::vector<sk::QuatFunc<sk::Rat>> gens;
            for (const auto& e : exprs) gens.push_back(sk::eval_ht(sk::parse(e)));
            auto r = sk::central_luroth(gens);
            sk::OutputDoc d;
            d.status = r.trivial ? "Trivial" : "Generated";
            if (!r.trivial) {
                d.generator = sk::render(r.f, "T");
                d.backbone_f = sk::render(r.f, "T");
            }
            d.certificates = r.certificates;
            if (r.trivial) d.warnings.push_back("all generators are constants: L = H");
            emit(d, opt);
        } else if (c_sigma->parsed()) {
            auto outcome = sk::skew_luroth(parse_ctsigma_list(exprs));
            emit(sk::make_doc(outcome), opt);
        } else if (c_inv->parsed()) {
            auto verdict = sk::invariance_check(parse_ctsigma_list(exprs));
            emit(sk::make_doc(verdict), opt);
            if (verdict.status == sk::InvarianceStatus::Unknown) return 3;
        } else if (c_center->parsed()) {
            auto c = sk::center_single(sk::eval_ctsigma(sk::parse(expr)));
            emit(value_doc(sk::render(c, "T")), opt);
        } else if (c_untwist->parsed()) {
            auto b = sk::eval_quat_const(sk::parse(b_expr));
            auto frac = sk::eval_inner(sk::parse(expr), b);
            if (!frac.is_polynomial())
                throw sk::precondition_error("untwist expects a polynomial of H[T, I(b)]");
            auto central = sk::untwist_inner(frac.num(), b);
            sk::OutputDoc d;
            d.status = "ok";
            d.generator = sk::render(central, "U");
            d.warnings.push_back("U = b^-1*T is central");
            emit(d, opt);
        } else if (c_selftest->parsed()) {
            return run_selftest(suite, opt);
        }
    } catch (const sk::parse_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const sk::error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 0;
}
