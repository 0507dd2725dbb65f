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

#include "deltalg/extnat.hpp"

#include "deltalg/error.hpp"

#include <cctype>

namespace deltalg {

std::string to_string(ExtNat x)
{
	return x.is_inf() ? "∞" : std::to_string(x.value());
}

ExtNat parse_extnat(const std::string &s)
{
	if (s == "inf" || s == "∞")
		return ExtNat::infinity();
	if (s.empty() || s.size() > 19)
		throw Error(ErrorKind::Parse, "not an extended natural: '" + s + "'");
	for (char c : s)
		if (!std::isdigit(static_cast<unsigned char>(c)))
			throw Error(ErrorKind::Parse, "not an extended natural: '" + s + "'");
	return ExtNat(std::stoull(s));
}

} // namespace deltalg
