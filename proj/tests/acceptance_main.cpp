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

// Acceptance harness: one pass/fail line per criterion, nonzero exit when any
// fails. Criteria 1 and 2 drive the installed CLI end to end; the rest call
// the verification suites at full strength with their time budgets.

#include <json.hpp>

#include <sys/wait.h>

#include <array>
#include <chrono>
#include <cstdio>
#include <memory>
#include <string>

#include "skewluroth/checks.hpp"
#include "skewluroth/eval.hpp"
#include "skewluroth/parser.hpp"

#ifndef SKEWLUROTH_CLI_PATH
#define SKEWLUROTH_CLI_PATH "skewluroth"
#endif

namespace sk = skewluroth;

namespace {

int failures = 0;

void report(int n, const std::string& what, bool ok, double seconds, const std::string& why) {
    std::printf("[%s] criterion %2d: %s (%.2fs)%s%s\n", ok ? "PASS" : "FAIL", n, what.c_str(),
                seconds, ok || why.empty() ? "" : " -- ", ok ? "" : why.c_str());
    if (!ok) ++failures;
}

struct CliResult {
    int exit_code = -1;
    nlohmann::json doc;
    std::string raw;
};

CliResult run_cli(const std::string& args) {
    CliResult r;
    std::string cmd = std::string(SKEWLUROTH_CLI_PATH) + " " + args + " 2>/dev/null";
    std::unique_ptr<FILE, int (*)(FILE*)> pipe(popen(cmd.c_str(), "r"), pclose);
    if (!pipe) return r;
    std::array<char, 4096> buf{};
    std::size_t got;
    while ((got = fread(buf.data(), 1, buf.size(), pipe.get())) > 0) r.raw.append(buf.data(), got);
    FILE* released = pipe.release();
    int status = pclose(released);
    r.exit_code = (status >= 0 && WIFEXITED(status)) ? WEXITSTATUS(status) : -1;
    try {
        r.doc = nlohmann::json::parse(r.raw);
    } catch (...) {
        r.doc = nlohmann::json();
    }
    return r;
}

double elapsed(const std::chrono::steady_clock::time_point& t0) {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

void criterion_1() {
    auto t0 = std::chrono::steady_clock::now();
    std::string why;
    bool ok = false;
    auto r = run_cli("invariance T+i*T^3");
    double secs = elapsed(t0);
    do {
        if (r.doc.is_discarded() || r.doc.is_null()) { why = "no JSON output"; break; }
        if (r.doc["status"] != "NotInvariant") { why = "status != NotInvariant"; break; }
        bool v2 = false, deg3 = false;
        sk::RatFunc<sk::Rat> X = sk::RatFunc<sk::Rat>::x();
        sk::RatFunc<sk::Rat> expect = X * X + X * X * X * X * X * X;
        for (const auto& c : r.doc["certificates"]) {
            if (c["name"] == "v_squared" && c["witness"].is_string()) {
                // compare as exact values, not as strings
                auto u = sk::eval_ht(sk::parse(c["witness"].get<std::string>()));
                v2 = u == sk::QuatFunc<sk::Rat>(expect);
            }
            if (c["name"] == "center_extension_degree" && c["witness"] == "3") deg3 = true;
        }
        if (!v2) { why = "certificate v^2 = T^2+T^6 missing"; break; }
        if (!deg3) { why = "center degree 3 certificate missing"; break; }
        if (secs >= 1.0) { why = "took >= 1s"; break; }
        ok = true;
    } while (false);
    report(1, "invariance T+i*T^3 is NotInvariant with v^2 = T^2+T^6, degree 3", ok, secs, why);
}

void criterion_2() {
    auto t0 = std::chrono::steady_clock::now();
    std::string why;
    bool ok = false;
    do {
        auto r1 = run_cli("phi T");
        if (r1.doc.is_discarded() || r1.doc.is_null() || !r1.doc["generator"].is_string()) {
            why = "phi T: no output";
            break;
        }
        auto u1 = sk::eval_hx(sk::parse(r1.doc["generator"].get<std::string>()));
        if (u1 != sk::eval_hx(sk::parse("j*X"))) { why = "phi T != jX"; break; }
        auto r2 = run_cli("phi T+i*T^3");
        if (!r2.doc["generator"].is_string()) { why = "phi T+i*T^3: no output"; break; }
        auto u2 = sk::eval_hx(sk::parse(r2.doc["generator"].get<std::string>()));
        if (u2 != sk::eval_hx(sk::parse("j*X - k*X^3"))) { why = "phi(T+iT^3) != jX - kX^3"; break; }
        ok = true;
    } while (false);
    report(2, "phi T = jX and phi T+i*T^3 = jX - kX^3, exactly", ok, elapsed(t0), why);
}

void from_check(int n, const std::string& what, const sk::CheckResult& r, double budget) {
    bool ok = r.ok && r.seconds < budget;
    std::string why = r.detail;
    if (r.ok && !ok) why = "exceeded time budget";
    report(n, what, ok, r.seconds, why);
}

}  // namespace

int main() {
    std::printf("acceptance: exact reproduction of the worked computations\n");
    criterion_1();
    criterion_2();
    from_check(3, "1000 random pairs: phi(PQ) = phi(P)phi(Q) exactly",
               sk::checks::check_phi_homomorphism(1000), 30.0);
    from_check(4, "1000 random x: j phi(x) = sigma(phi(x)) j exactly",
               sk::checks::check_swap_identity(1000), 600.0);
    from_check(5, "500 random expression trees: fraction arithmetic matches the embedding",
               sk::checks::check_oracle_equivalence(500), 60.0);
    from_check(6, "branch corpus: X^2 / X^3 / (1+X)/(1-X) with certified witnesses",
               sk::checks::check_branch_corpus(), 3.0);
    from_check(7, "100 random generators: certified membership and decomposition witnesses",
               sk::checks::check_central_luroth_property(100), 600.0);
    from_check(8, "1000 random pairs: euclidean and ore identities with degree formula",
               sk::checks::check_euclid_ore(1000), 600.0);
    from_check(9, "500 + 500 fixed-ring round trips and parity rejections",
               sk::checks::check_fixed_ring(500), 600.0);
    from_check(10, "200 untwist products and 100 centrality checks for b = j",
               sk::checks::check_untwist(200, 100), 600.0);

    if (failures) {
        std::printf("acceptance: %d criterion(s) FAILED\n", failures);
        return 1;
    }
    std::printf("acceptance: all criteria passed\n");
    return 0;
}
