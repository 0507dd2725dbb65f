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

#ifndef DELTALG_SRC_REGSYS_READER_HPP
#define DELTALG_SRC_REGSYS_READER_HPP

#include "deltalg/regsys.hpp"
#include "lexer.hpp"

#include <map>

namespace deltalg::detail {

RegSys read_system(TokenStream &ts, const std::map<std::string, Signature> &sigs);

} // namespace deltalg::detail

#endif
