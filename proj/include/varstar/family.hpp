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

#ifndef VARSTAR_FAMILY_HPP
#define VARSTAR_FAMILY_HPP

#include <cstddef>
#include <string_view>

#include "varstar/word.hpp"

namespace varstar {

/// Named word families. "gruska" with size n yields ab, abb, ..., ab^n.
/// Throws Error(invalid_input) for an unknown name or n == 0.
WordList family(std::string_view name, std::size_t n);

}  // namespace varstar

#endif
