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

#include "varstar/error.hpp"

namespace varstar {

const char* to_string(ErrorCode code) noexcept {
    switch (code) {
        case ErrorCode::invalid_word: return "invalid word";
        case ErrorCode::invalid_input: return "invalid input";
        case ErrorCode::precondition: return "construction precondition";
        case ErrorCode::decomposition: return "decomposition";
        case ErrorCode::parse: return "parse";
        case ErrorCode::invariant_violation: return "invariant violation";
        case ErrorCode::bound_exceeded: return "bound exceeded";
    }
    return "unknown";
}

ParseError::ParseError(std::size_t line, std::size_t column, const std::string& message)
    : Error(ErrorCode::parse,
            "line " + std::to_string(line) + ", column " + std::to_string(column) + ": " + message),
      line_(line),
      column_(column) {}

}  // namespace varstar
