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

#include <atomic>
#include <cstdlib>

#include "error.hpp"

namespace skewluroth {

namespace detail {

inline long initial_max_degree() {
    if (const char* env = std::getenv("SKEWLUROTH_MAX_DEGREE")) {
        char* end = nullptr;
        long v = std::strtol(env, &end, 10);
        if (end != env && v > 0) return v;
    }
    return 64;
}

inline std::atomic<long>& max_degree_store() {
    static std::atomic<long> cap{initial_max_degree()};
    return cap;
}

}  // namespace detail

/// Hard cap on intermediate polynomial degrees. Defaults to the
/// SKEWLUROTH_MAX_DEGREE environment variable, or 64.
inline long max_degree() { return detail::max_degree_store().load(std::memory_order_relaxed); }

/// Process-wide override of the degree cap (mainly for embedders and tests).
inline void set_max_degree(long cap) {
    detail::max_degree_store().store(cap > 0 ? cap : 1, std::memory_order_relaxed);
}

/// Throws degree_cap_exceeded if `degree` is above the configured cap.
inline void check_degree(long degree) {
    long cap = max_degree();
    if (degree > cap) throw degree_cap_exceeded(degree, cap);
}

}  // namespace skewluroth
