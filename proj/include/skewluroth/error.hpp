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

#include <cstddef>
#include <stdexcept>
#include <string>

namespace skewluroth {

/// Base class for all errors raised by the library.
class error : public std::runtime_error {
   public:
    using std::runtime_error::runtime_error;
};

/// Inversion or division by a zero element.
class division_by_zero : public error {
   public:
    division_by_zero() : error("division by zero") {}
    explicit division_by_zero(const std::string& what) : error(what) {}
};

/// A mathematical precondition of an operation was violated.
class precondition_error : public error {
   public:
    using error::error;
};

/// Arithmetic between incompatible quadratic extensions (different radicands),
/// or an attempt to build a nested extension tower.
class extension_mismatch : public precondition_error {
   public:
    using precondition_error::precondition_error;
};

/// An intermediate polynomial degree exceeded the configured hard cap.
class degree_cap_exceeded : public precondition_error {
   public:
    explicit degree_cap_exceeded(long degree, long cap)
        : precondition_error("intermediate degree " + std::to_string(degree) +
                             " exceeds cap " + std::to_string(cap) +
                             " (raise SKEWLUROTH_MAX_DEGREE)") {}
};

/// Syntax error in the expression parser; carries the offending position.
class parse_error : public error {
   public:
    parse_error(std::size_t position, const std::string& what)
        : error("parse error at position " + std::to_string(position) + ": " + what),
          position_(position) {}
    std::size_t position() const noexcept { return position_; }

   private:
    std::size_t position_;
};

/// An internal invariant failed; indicates a bug, not a user error.
class internal_error : public error {
   public:
    using error::error;
};

}  // namespace skewluroth
