/* Copyright 2026 The varstar Authors. All Rights Reserved.
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *    http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 * ========================================================================= */

#include "varstar/family.hpp"

#include <string>

#include "varstar/error.hpp"

namespace varstar {

WordList family(std::string_view name, std::size_t n) {
    if (name != "gruska")
        throw Error(ErrorCode::invalid_input, "unknown family '" + std::string(name) + "' (known: gruska)");
    if (n == 0)
        throw Error(ErrorCode::invalid_input, "family size must be at least 1");
    WordList out;
    for (std::size_t i = 1; i <= n; ++i)
        out.push_back(U"a" + Word(i, U'b'));
    return out;
}

}  // namespace varstar
