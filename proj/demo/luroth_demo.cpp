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

// Walks the two headline computations: a single generator for the division
// ring generated by T^2 inside C(T, sigma), and the invariance obstruction
// for v = T + i T^3.

#include <iostream>

#include "skewluroth/skewluroth.hpp"

int main() {
    using namespace skewluroth;
    using SF = SkewFrac<ConjTwist<Rat>>;

    SF t2 = eval_ctsigma(parse("T^2"));
    auto generated = skew_luroth<Rat>({t2});
    std::cout << "generators {T^2}: " << to_string(generated.status);
    if (generated.generator) std::cout << ", w = " << render(*generated.generator, "T");
    std::cout << "\n";

    SF v = eval_ctsigma(parse("T + i*T^3"));
    std::cout << "phi(T + i*T^3) = " << render_quatfunc(phi<Rat>(v), "X") << "\n";
    std::cout << "center of C(v): " << render(center_single(v), "T") << "\n";

    auto verdict = invariance_check<Rat>({v});
    std::cout << "invariance of C(v): " << to_string(verdict.status) << "\n";
    for (const auto& c : verdict.certificates)
        std::cout << "  " << c.name << (c.ok ? " [ok] " : " [obstruction] ") << c.witness << "\n";
    return 0;
}
