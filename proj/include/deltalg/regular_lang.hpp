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
 * Regular languages as finite automata with empty moves, and the Arden
 * elimination solver for linear systems over them.
 */

#ifndef DELTALG_REGULAR_LANG_HPP
#define DELTALG_REGULAR_LANG_HPP

#include "deltalg/lang_slice.hpp"
#include "deltalg/regsys.hpp"

#include <cstddef>
#include <map>
#include <set>
#include <string>
#include <vector>

namespace deltalg {

class Nfa {
public:
	/// Label of an empty move.
	static constexpr int kEpsilon = -1;

	struct Edge {
		int label; ///< a character, or kEpsilon
		std::size_t to;
	};

	/// The empty language.
	Nfa();

	static Nfa empty() { return Nfa(); }
	static Nfa epsilon();
	static Nfa word(const std::string &w);
	static Nfa from_words(const WordSet &words);

	static Nfa unite(const Nfa &a, const Nfa &b);
	static Nfa concat(const Nfa &a, const Nfa &b);
	static Nfa star(const Nfa &a);

	/// Drops states that are unreachable or cannot reach acceptance.
	Nfa trim() const;

	std::size_t states() const noexcept { return edges_.size(); }
	std::size_t start() const noexcept { return start_; }
	const std::set<std::size_t> &accepting() const noexcept { return accept_; }
	const std::vector<Edge> &edges(std::size_t q) const { return edges_.at(q); }

	/// Letters on some transition, sorted.
	std::string alphabet() const;
	bool accepts(const std::string &w) const;
	bool is_empty() const;

	/// Exact inclusion by a breadth-first walk of the two subset automata.
	bool subset_of(const Nfa &other) const;
	bool equivalent(const Nfa &other) const { return subset_of(other) && other.subset_of(*this); }

	/// Deterministic transition listing of the reachable subset automaton:
	/// `start 0`, `accept ...`, then `p a q` lines in order.
	std::string transitions_text() const;

private:
	std::set<std::size_t> closure(std::set<std::size_t> s) const;
	std::set<std::size_t> move(const std::set<std::size_t> &s, char c) const;
	std::size_t add_state();
	/// Copies `other` in; returns the offset of its states.
	std::size_t absorb(const Nfa &other);

	friend WordSet regular_slice(const Nfa &r, std::size_t bound);

	std::vector<std::vector<Edge>> edges_;
	std::size_t start_ = 0;
	std::set<std::size_t> accept_;
};

/// Words of length at most `bound` accepted by `r`, by breadth-first
/// enumeration of prefixes.
WordSet regular_slice(const Nfa &r, std::size_t bound);

/// Exact least solution of a right- or left-linear system: Gauss-Jordan
/// elimination with Arden's rule (`x = A x + B` gives `x = A* B`, and
/// `x = x A + B` gives `x = B A*`). Generators take their languages from
/// `letters`; zero and bot denote the empty language, one the empty word.
/// Throws NotLinear, LinearUndefined, or MissingBinding.
std::map<std::string, Nfa> arden_solve_linear(const RegSys &s, const std::map<std::string, Nfa> &letters);

/// Every generator bound to the automaton for its letter (see letter_of).
std::map<std::string, Nfa> letter_automata(const RegSys &s,
					   const std::map<std::string, std::string> &overrides = {});

} // namespace deltalg

#endif
