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

// Internal recursive-descent readers shared with the workspace parser.

#ifndef DELTALG_SRC_SYNTAX_HPP
#define DELTALG_SRC_SYNTAX_HPP

#include "deltalg/signature.hpp"
#include "deltalg/term.hpp"
#include "lexer.hpp"

#include <optional>

namespace deltalg::detail {

PartialTerm read_term(TokenStream &ts, const Signature &sig);
Signature read_signature(TokenStream &ts);
/// Reads the tail after the keyword `profile`.
SemiringProfile read_profile(TokenStream &ts);
std::string profile_text(const SemiringProfile &p);

} // namespace deltalg::detail

#endif
