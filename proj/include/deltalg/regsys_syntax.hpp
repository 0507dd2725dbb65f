/*
 *   Copyright 2026 The deltalg Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#ifndef DELTALG_REGSYS_SYNTAX_HPP
#define DELTALG_REGSYS_SYNTAX_HPP

#include "deltalg/regsys.hpp"

#include <map>
#include <string>
#include <string_view>

namespace deltalg {

/// Reads
///
///     sys <name> over <sig> [profile semiring[(...)]]
///         vars {x, y} gens {a, b} root x { x = term  y = term }
///
/// Equations may be separated by `;`. The signature is looked up by name.
RegSys parse_system(std::string_view text, const std::map<std::string, Signature> &sigs);

/// Canonical rendering; `parse_system(to_string(s))` gives back `s`.
std::string to_string(const RegSys &s);

} // namespace deltalg

#endif
