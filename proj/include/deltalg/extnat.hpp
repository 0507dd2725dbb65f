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

#ifndef DELTALG_EXTNAT_HPP
#define DELTALG_EXTNAT_HPP

#include <compare>
#include <cstdint>
#include <limits>
#include <stdexcept>
#include <string>

namespace deltalg {

/// Natural numbers with a point at infinity. Addition and multiplication
/// saturate at infinity, with `0 * inf == 0`. A finite overflow throws rather
/// than silently turning into infinity.
class ExtNat {
public:
	constexpr ExtNat() = default;
	constexpr ExtNat(std::uint64_t v) : v_(v)
	{
		if (v == kInf)
			throw std::overflow_error("ExtNat: value out of range");
	}

	static constexpr ExtNat infinity()
	{
		ExtNat x;
		x.v_ = kInf;
		return x;
	}

	constexpr bool is_inf() const noexcept { return v_ == kInf; }
	constexpr std::uint64_t value() const
	{
		if (is_inf())
			throw std::domain_error("ExtNat: infinity has no finite value");
		return v_;
	}

	friend constexpr bool operator==(ExtNat, ExtNat) = default;
	friend constexpr auto operator<=>(ExtNat, ExtNat) = default;

	friend constexpr ExtNat operator+(ExtNat a, ExtNat b)
	{
		if (a.is_inf() || b.is_inf())
			return infinity();
		if (a.v_ > kInf - 1 - b.v_)
			throw std::overflow_error("ExtNat: addition overflow");
		return ExtNat(a.v_ + b.v_);
	}

	friend constexpr ExtNat operator*(ExtNat a, ExtNat b)
	{
		if (a.v_ == 0 || b.v_ == 0)
			return ExtNat(0);
		if (a.is_inf() || b.is_inf())
			return infinity();
		if (a.v_ > (kInf - 1) / b.v_)
			throw std::overflow_error("ExtNat: multiplication overflow");
		return ExtNat(a.v_ * b.v_);
	}

private:
	static constexpr std::uint64_t kInf = std::numeric_limits<std::uint64_t>::max();
	std::uint64_t v_ = 0;
};

/// `inf` renders as the infinity glyph.
std::string to_string(ExtNat x);

/// Accepts decimal digits, `inf` or the infinity glyph.
ExtNat parse_extnat(const std::string &s);

} // namespace deltalg

#endif
