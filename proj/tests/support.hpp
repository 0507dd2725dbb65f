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

#ifndef DELTALG_TESTS_SUPPORT_HPP
#define DELTALG_TESTS_SUPPORT_HPP

#include "deltalg/error.hpp"

#include <fstream>
#include <optional>
#include <sstream>
#include <string>

namespace testsupport {

/// Kind of the deltalg::Error thrown by `f`, or nothing.
template <class F>
std::optional<deltalg::ErrorKind> error_kind(F &&f)
{
	try {
		f();
	} catch (const deltalg::Error &e) {
		return e.kind();
	}
	return std::nullopt;
}

inline std::string fixture_path(const std::string &name)
{
	return std::string(DELTALG_EXAMPLES_DIR) + "/" + name;
}

inline std::string read_fixture(const std::string &name)
{
	std::ifstream in(fixture_path(name));
	std::stringstream ss;
	ss << in.rdbuf();
	return ss.str();
}

} // namespace testsupport

#endif
