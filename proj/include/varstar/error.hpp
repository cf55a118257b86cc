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

#ifndef VARSTAR_ERROR_HPP
#define VARSTAR_ERROR_HPP

#include <cstddef>
#include <stdexcept>
#include <string>

namespace varstar {

enum class ErrorCode {
    invalid_word,        // empty word or malformed UTF-8
    invalid_input,       // empty word set, bad argument
    precondition,        // construction called outside its domain
    decomposition,       // word is not a rotation-power of the representative
    parse,               // grammar text could not be parsed
    invariant_violation, // grammar breaks a structural invariant
    bound_exceeded,      // a resource cap was hit
};

const char* to_string(ErrorCode code) noexcept;

class Error : public std::runtime_error {
public:
    Error(ErrorCode code, const std::string& message)
        : std::runtime_error(message), code_(code) {}

    ErrorCode code() const noexcept { return code_; }

private:
    ErrorCode code_;
};

/// Grammar text error. Line and column are 1-based; column counts code points.
class ParseError : public Error {
public:
    ParseError(std::size_t line, std::size_t column, const std::string& message);

    std::size_t line() const noexcept { return line_; }
    std::size_t column() const noexcept { return column_; }

private:
    std::size_t line_;
    std::size_t column_;
};

}  // namespace varstar

#endif
