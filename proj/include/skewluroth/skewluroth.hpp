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

#include "engine.hpp"
#include "eval.hpp"
#include "gaussian.hpp"
#include "luroth.hpp"
#include "parser.hpp"
#include "polynomial.hpp"
#include "quadratic.hpp"
#include "quaternion.hpp"
#include "quaternion_function.hpp"
#include "rational.hpp"
#include "rational_function.hpp"
#include "render.hpp"
#include "skew_fraction.hpp"
#include "skew_polynomial.hpp"
