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
 * Finite partial terms over a ranked signature: the free ordered algebra on a
 * set of variables. A term is an immutable tree whose nodes are either the
 * undefined term `bot`, a variable leaf, or an operation applied to exactly
 * arity-many children. Subtrees are shared, so copies are cheap and terms can
 * be handed between threads freely.
 */

#ifndef DELTALG_TERM_HPP
#define DELTALG_TERM_HPP

#include "deltalg/signature.hpp"

#include <compare>
#include <cstddef>
#include <map>
#include <memory>
#include <set>
#include <span>
#include <string>
#include <variant>
#include <vector>

namespace deltalg {

/// Root-to-node path of 1-based child indices. The empty path is the root.
using Position = std::vector<std::size_t>;

std::string to_string(const Position &pos);

class PartialTerm {
public:
	enum class Kind { Bottom, Var, App };

	/// The undefined term.
	PartialTerm() = default;

	static PartialTerm bottom() { return PartialTerm(); }
	static PartialTerm var(std::string name);
	/// Throws ArityMismatch unless `kids.size() == op.arity`.
	static PartialTerm app(OpSymbol op, std::vector<PartialTerm> kids = {});

	Kind kind() const noexcept;
	bool is_bottom() const noexcept { return node_ == nullptr; }
	bool is_var() const noexcept { return kind() == Kind::Var; }
	bool is_app() const noexcept { return kind() == Kind::App; }

	/// Variable name or operation name; empty for bottom.
	const std::string &label() const noexcept;
	std::size_t arity() const noexcept;
	OpSymbol op() const;
	const std::vector<PartialTerm> &children() const noexcept;
	const PartialTerm &child(std::size_t i) const { return children().at(i); }

	/// Longest root-to-node path counting variable and operation nodes;
	/// bottom has depth 0, a variable or a constant has depth 1.
	std::size_t depth() const noexcept;
	/// Number of defined (non-bottom) nodes.
	std::size_t size() const noexcept;
	std::size_t hash() const noexcept;

	/// True when both handles share the same node.
	bool same_node(const PartialTerm &other) const noexcept { return node_ == other.node_; }

	friend bool operator==(const PartialTerm &a, const PartialTerm &b);
	friend std::strong_ordering operator<=>(const PartialTerm &a, const PartialTerm &b);

private:
	struct Node;
	explicit PartialTerm(std::shared_ptr<const Node> node) : node_(std::move(node)) {}

	std::shared_ptr<const Node> node_;
};

struct PartialTermHash {
	std::size_t operator()(const PartialTerm &t) const noexcept { return t.hash(); }
};

using Substitution = std::map<std::string, PartialTerm>;

/// `f(g(x), bot)` style rendering, the inverse of the term parser.
std::string to_string(const PartialTerm &t);

/// Checks every node against `sig`: symbol known, arity matching.
void check_signature(const PartialTerm &t, const Signature &sig);

std::set<std::string> variables(const PartialTerm &t);

/// The syntactic order: `s` arises from `t` by replacing subterms with bot.
bool leq_syn(const PartialTerm &s, const PartialTerm &t);

struct Inconsistent {
	Position at;
};

/// Least upper bound of two consistent terms, or the first disagreeing
/// position in preorder.
std::variant<PartialTerm, Inconsistent> merge(const PartialTerm &s, const PartialTerm &t);

bool consistent(std::span<const PartialTerm> terms);

/// Simultaneous replacement of variable leaves; unmapped variables stay.
PartialTerm subst(const PartialTerm &t, const Substitution &sigma);

/// Checks that every image in `sigma` is well formed over `sig` and then
/// substitutes. Throws SignatureMismatch on a foreign symbol.
PartialTerm subst_checked(const PartialTerm &t, const Substitution &sigma, const Signature &sig);

/// Keeps nodes at path length < depth, cutting the rest to bot.
PartialTerm truncate(const PartialTerm &t, std::size_t depth);

/// Subterm at a position, or bot when the path leaves the tree.
PartialTerm subterm(const PartialTerm &t, const Position &pos);

inline constexpr std::size_t kDefaultEnumerationBound = 1'000'000;

/// Number of terms below `t`, saturating at SIZE_MAX.
std::size_t count_below(const PartialTerm &t);

/// Every `s` with `leq_syn(s, t)`, without duplicates. Throws ExplosionGuard
/// when there would be more than `bound` of them.
std::vector<PartialTerm> enumerate_below(const PartialTerm &t,
					 std::size_t bound = kDefaultEnumerationBound);

} // namespace deltalg

#endif
