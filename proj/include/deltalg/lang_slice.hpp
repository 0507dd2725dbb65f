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

/**
 * @file
 *
 * Length-bounded language slices.
 *
 * The slice at bound L keeps the words of length at most L. Sets of such
 * words form a finite lattice under inclusion, closed under union and under
 * concatenation followed by truncation, so every system over it converges.
 * Letters are single characters; the generator name `eps` denotes the empty
 * word.
 */

#ifndef DELTALG_LANG_SLICE_HPP
#define DELTALG_LANG_SLICE_HPP

#include "deltalg/algebra.hpp"
#include "deltalg/regsys.hpp"

#include <cstddef>
#include <map>
#include <set>
#include <string>

namespace deltalg {

/// Length first, then lexicographic.
struct ShortLex {
	bool operator()(const std::string &a, const std::string &b) const
	{
		return a.size() != b.size() ? a.size() < b.size() : a < b;
	}
};

using WordSet = std::set<std::string, ShortLex>;

/// `ε ab aabb`; the empty set prints as `∅`.
std::string to_string(const WordSet &w);

/// All words over `alphabet` of length at most `bound`.
WordSet all_words(const std::string &alphabet, std::size_t bound);

WordSet truncate_words(const WordSet &w, std::size_t bound);
WordSet concat_words(const WordSet &a, const WordSet &b, std::size_t bound);

/// Carriers with at most this many words are enumerated for exhaustive checks.
inline constexpr std::size_t kSliceEnumerableWords = 5;

AlgebraSpec<WordSet> lang_slice_algebra(std::size_t bound, const std::string &alphabet,
					const SemiringProfile &p = {});

/// Word denoted by a generator name: itself when it is a single letter, the
/// empty word for `eps`. Anything else is a Usage error unless `overrides`
/// binds it.
std::string letter_of(const std::string &gen, const std::map<std::string, std::string> &overrides = {});

/// Every generator of `s` bound to the singleton of its letter, truncated.
Env<WordSet> letter_env(const RegSys &s, std::size_t bound,
			const std::map<std::string, std::string> &overrides = {});

/// Letters used by the generators of `s`, sorted.
std::string alphabet_of(const RegSys &s, const std::map<std::string, std::string> &overrides = {});

/// Words of length at most `bound` derivable from the root in the grammar
/// read off the system (plus as alternation, times as concatenation, one as
/// the empty word, zero and bot as failure). Enumerates leftmost derivations
/// breadth first after removing unproductive symbols, empty and unit
/// productions, so it never evaluates the system. Throws LinearUndefined
/// without a semiring profile and SignatureMismatch for other operations.
WordSet cfg_slice_oracle(const RegSys &s, std::size_t bound,
			 const std::map<std::string, std::string> &overrides = {});

} // namespace deltalg

#endif
