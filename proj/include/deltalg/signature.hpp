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

#ifndef DELTALG_SIGNATURE_HPP
#define DELTALG_SIGNATURE_HPP

#include <cstddef>
#include <initializer_list>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace deltalg {

struct OpSymbol {
	std::string name;
	std::size_t arity = 0;

	friend bool operator==(const OpSymbol &, const OpSymbol &) = default;
	friend auto operator<=>(const OpSymbol &, const OpSymbol &) = default;
};

/// Names of the four semiring roles inside a signature. Linear
/// classification, the Arden solver and the grammar bridge only make sense
/// when a signature carries one of these.
struct SemiringProfile {
	std::string plus = "plus";
	std::string times = "times";
	std::string zero = "zero";
	std::string one = "one";

	friend bool operator==(const SemiringProfile &, const SemiringProfile &) = default;
};

/// A ranked alphabet. Symbols keep their declaration order for printing.
class Signature {
public:
	Signature() = default;
	explicit Signature(std::string name) : name_(std::move(name)) {}
	Signature(std::string name, std::initializer_list<OpSymbol> ops);

	/// Throws NameClash on a duplicate name.
	void add(OpSymbol op);

	const std::string &name() const noexcept { return name_; }
	const std::vector<OpSymbol> &ops() const noexcept { return ops_; }
	const OpSymbol *find(const std::string &name) const;
	bool contains(const std::string &name) const { return find(name) != nullptr; }
	bool empty() const noexcept { return ops_.empty(); }

	const std::optional<SemiringProfile> &profile() const noexcept { return profile_; }
	/// Checks that the four roles exist with the right arities.
	void set_profile(SemiringProfile profile);

	/// Same symbols with the same arities (names and profile are ignored).
	bool same_symbols(const Signature &other) const;

	friend bool operator==(const Signature &a, const Signature &b) {
		return a.name_ == b.name_ && a.ops_ == b.ops_ && a.profile_ == b.profile_;
	}

private:
	std::string name_;
	std::vector<OpSymbol> ops_;
	std::map<std::string, std::size_t> index_;
	std::optional<SemiringProfile> profile_;
};

/// `plus/2, times/2, zero/0, one/0` with the default profile attached.
Signature semiring_signature(const std::string &name = "sr");

} // namespace deltalg

#endif
