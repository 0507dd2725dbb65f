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

#ifndef DELTALG_TERM_SYNTAX_HPP
#define DELTALG_TERM_SYNTAX_HPP

#include "deltalg/signature.hpp"
#include "deltalg/term.hpp"

#include <string>
#include <string_view>

namespace deltalg {

/// Reads `sig <name> [profile semiring[(plus=p, times=t, zero=z, one=o)]] { op/arity, ... }`.
Signature parse_signature(std::string_view text);
std::string to_string(const Signature &sig);

/// Reads `f(g(x), bot)`. A bare identifier is a constant when the signature
/// declares it with arity 0 and a variable otherwise; `bot` is the undefined
/// term. Throws UnknownSymbol for an undeclared applied symbol and
/// ArityMismatch for a wrong argument count, both with line and column.
PartialTerm parse_term(const Signature &sig, std::string_view text);

/// Same as parse_term, named after the library operation it implements.
inline PartialTerm build(const Signature &sig, std::string_view text) { return parse_term(sig, text); }

} // namespace deltalg

#endif
