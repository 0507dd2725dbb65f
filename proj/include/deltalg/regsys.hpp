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
 * Regular coterms as finite equation systems.
 *
 * A system `x = f(x, a)` over generators `a` denotes the infinite tree
 * obtained by unfolding its root variable forever. Every construction here
 * works on the equations directly: unfolding materializes finite prefixes,
 * approximation and bisimulation walk the equation graph, and substitution
 * is a disjoint union of systems with generator leaves rewired.
 *
 * Equations that only chain variables (`x = y, y = x`) never produce a node;
 * they denote bot, the least solution.
 */

#ifndef DELTALG_REGSYS_HPP
#define DELTALG_REGSYS_HPP

#include "deltalg/signature.hpp"
#include "deltalg/term.hpp"

#include <cstddef>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

namespace deltalg {

class RegSys {
public:
	/// Validates every invariant: distinct system variables with exactly one
	/// definition each, generators disjoint from system variables and from
	/// operation names, arity-correct definitions whose leaves are system
	/// variables or generators, root among the system variables. Throws
	/// InvalidSystem (or SignatureMismatch for foreign symbols).
	RegSys(Signature sig, std::vector<std::string> sysvars, std::vector<std::string> gens,
	       std::map<std::string, PartialTerm> defs, std::string root, std::string name = "S");

	const std::string &name() const noexcept { return name_; }
	const Signature &sig() const noexcept { return sig_; }
	const std::vector<std::string> &sysvars() const noexcept { return sysvars_; }
	const std::vector<std::string> &gens() const noexcept { return gens_; }
	const std::map<std::string, PartialTerm> &defs() const noexcept { return defs_; }
	const std::string &root() const noexcept { return root_; }
	const PartialTerm &def(const std::string &sysvar) const;

	bool is_sysvar(const std::string &n) const { return defs_.contains(n); }
	bool is_gen(const std::string &n) const { return gen_set_.contains(n); }

	/// Profile declared on the system, else the signature's.
	std::optional<SemiringProfile> profile() const;
	/// True when the profile was declared on the system itself.
	bool declares_profile() const noexcept { return profile_.has_value(); }
	RegSys with_profile(SemiringProfile p) const;
	RegSys with_name(std::string name) const;
	RegSys with_root(std::string root) const;

	friend bool operator==(const RegSys &a, const RegSys &b);

private:
	Signature sig_;
	std::vector<std::string> sysvars_;
	std::vector<std::string> gens_;
	std::set<std::string> gen_set_;
	std::map<std::string, PartialTerm> defs_;
	std::string root_;
	std::string name_;
	std::optional<SemiringProfile> profile_;
};

/// The equation graph with one node per distinct subterm position of the
/// definitions. Chains of variable-to-variable equations are collapsed; an
/// unproductive chain becomes a bottom node.
struct FlatSystem {
	struct Node {
		enum class Kind { Bottom, Gen, App };
		Kind kind = Kind::Bottom;
		std::string label;
		std::vector<std::size_t> kids;
	};
	std::vector<Node> nodes;
	std::map<std::string, std::size_t> var_node;
	std::size_t root = 0;
};

FlatSystem flatten(const RegSys &s);

/// Single-equation system `x0 = t`. Throws InvalidSystem when a variable of
/// `t` is not among `gens`.
RegSys of_term(const PartialTerm &t, const std::vector<std::string> &gens, const Signature &sig);

/// Depth-`depth` prefix of the denoted tree; nodes at path length `depth` are
/// cut to bot.
PartialTerm unfold(const RegSys &s, std::size_t depth);

/// `s` is a finite approximant of the denoted tree. Decided against the
/// equation graph without unfolding. Throws SignatureMismatch when `s` uses
/// a symbol outside the system's signature.
bool approximates(const PartialTerm &s, const RegSys &sys);

/// `[unfold(s, 0), ..., unfold(s, depth)]`.
std::vector<PartialTerm> approximant_chain(const RegSys &s, std::size_t depth);

struct BisimResult {
	bool equal = false;
	/// Node depth of the shallowest disagreement when not equal.
	std::optional<std::size_t> witness_depth;
	std::size_t pairs_explored = 0;
};

/// Breadth-first exploration of the product of the two equation graphs.
/// Throws SignatureMismatch when the signatures differ.
BisimResult bisim_compare(const RegSys &a, const RegSys &b);
inline bool bisim_equal(const RegSys &a, const RegSys &b) { return bisim_compare(a, b).equal; }

enum class SubstMode { PassThrough, Strict };

/// Generator `g` of `s` is replaced by the root of `tau.at(g)`; the result is
/// the disjoint union of all equations involved. Unmapped generators stay
/// generators unless `mode` is Strict, in which case MissingBinding is thrown.
RegSys subst_sys(const RegSys &s, const std::map<std::string, RegSys> &tau,
		 SubstMode mode = SubstMode::PassThrough);

/// Renames generator leaves. Throws NameClash when the map is not injective
/// or a new name collides with a system variable or an operation.
RegSys rename(const RegSys &s, const std::map<std::string, std::string> &h);

enum class SysClass { Finite, Linear, Algebraic };
enum class LinearSide { Right, Left };

const char *to_string(SysClass c) noexcept;

/// Finite when no system variable depends on itself. Otherwise Linear when
/// every definition is a sum of products holding at most one system
/// variable, placed last (Right) or first (Left), else Algebraic. A cyclic
/// system without a semiring profile throws LinearUndefined.
SysClass classify(const RegSys &s, LinearSide side = LinearSide::Right);

/// One summand of a linear definition: the product of `factors` followed (or
/// preceded, for left-linear systems) by `var` when present. Factors are
/// generator leaves, the zero and one constants, or bot.
struct LinearSummand {
	std::vector<PartialTerm> factors;
	std::optional<std::string> var;
};

using LinearForm = std::map<std::string, std::vector<LinearSummand>>;

/// Sum-of-products decomposition of every definition. Throws NotLinear when a
/// definition does not have that shape, LinearUndefined without a profile.
LinearForm linear_form(const RegSys &s, LinearSide side = LinearSide::Right);

/// System variables reachable from the root, in declaration order.
std::vector<std::string> reachable_sysvars(const RegSys &s);

} // namespace deltalg

#endif
