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

#ifndef DELTALG_REPORT_HPP
#define DELTALG_REPORT_HPP

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace deltalg {

struct Violation {
	std::string law;
	std::string witness;
	std::string detail;
};

/// Outcome of a law or property check. Violations are data, not errors.
struct Report {
	std::string check;
	std::string instance;
	std::size_t samples = 0;
	std::size_t indeterminate = 0;
	std::optional<std::uint64_t> seed;
	std::vector<Violation> violations;

	bool ok() const noexcept { return violations.empty(); }

	void add(std::string law, std::string witness, std::string detail = {})
	{
		violations.push_back({std::move(law), std::move(witness), std::move(detail)});
	}

	/// Appends the samples, indeterminates and violations of `other`.
	void absorb(const Report &other);
};

/// Human-readable block: a header line, then one line per violation.
std::string to_text(const Report &r);

/// Line-oriented `key=value` records, one record per line.
std::string to_kv(const Report &r);

} // namespace deltalg

#endif
