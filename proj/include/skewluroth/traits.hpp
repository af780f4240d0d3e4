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

namespace skewluroth {

/// True for coefficient fields in which -1 is not a sum of two squares, so
/// that the quaternion norm a^2+b^2+c^2+d^2 is anisotropic. Specialized by
/// each field type; quaternion components are restricted to such fields.
template <class F>
inline constexpr bool is_formally_real_v = false;

}  // namespace skewluroth
