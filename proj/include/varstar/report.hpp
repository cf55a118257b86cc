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

#ifndef VARSTAR_REPORT_HPP
#define VARSTAR_REPORT_HPP

#include <span>
#include <string>
#include <vector>

#include "varstar/complexity.hpp"
#include "varstar/verification.hpp"

namespace varstar {

enum class Format { text, json };

// Text renderings end with a newline; JSON renderings are a single line.
// JSON field names match the struct member names.

std::string render(const ComplexityResult& result, Format format);
std::string render(std::span<const ConjugacyClass> classes, Format format);
std::string render(const EquivalenceReport& report, Format format);
std::string render(const AdmissibleProductionReport& report, Format format);

std::string verdict_line(const AdmissibleProductionReport& report);

}  // namespace varstar

#endif
