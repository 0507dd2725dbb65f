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

#ifndef DELTALG_WORKSPACE_HPP
#define DELTALG_WORKSPACE_HPP

#include "deltalg/algebra.hpp"
#include "deltalg/completion.hpp"
#include "deltalg/finite_algebra.hpp"
#include "deltalg/regsys.hpp"
#include "deltalg/semirings.hpp"

#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <vector>

namespace deltalg {

struct MorphismDecl {
	std::string from;
	std::string to;
	std::map<std::string, std::string> map;
};

/// Global knobs shared by every command.
struct Config {
	std::uint64_t seed = 1;
	std::size_t budget = kDefaultBudget;
	double cap = kDefaultCap;
	std::size_t max_depth = kDefaultLawHeight;
};

/// Named declarations read from one or more input files. Each kind has its
/// own namespace; a name may not be declared twice within a kind.
///
///   sig fg { f/1, g/2 }
///   sys loop over fg vars {x} gens {} root x { x = f(x) }
///   poset vee { elements {bot, a, b}  bot < a  bot < b }
///   algebra two over fg { elements {lo, hi}  lo < hi
///                         op f { lo hi }
///                         op g { lo: lo hi  hi: hi hi }
///                         sup lo = hi }
///   graph roads { A B 3  B C 2  node D }
///   ineq idem over fg { g(x, x) <= x }
///   morphism m from two to one { lo -> z  hi -> z }
///
/// An algebra marked `faulty` skips the monotonicity check so that broken
/// fixtures can be loaded and reported on.
class Workspace {
public:
	enum class Kind { Sig, Sys, Poset, Algebra, Graph, Ineq, Morphism };

	Config config;

	void load(std::string_view text);

	const Signature &sig(const std::string &name) const;
	const RegSys &system(const std::string &name) const;
	const FinitePosetWithBot &poset(const std::string &name) const;
	const FiniteAlgebra &algebra(const std::string &name) const;
	const WeightedDigraph &graph(const std::string &name) const;
	const InequalitySet &inequalities(const std::string &name) const;
	const MorphismDecl &morphism(const std::string &name) const;

	bool has(Kind k, const std::string &name) const;
	bool is_faulty(const std::string &algebra) const { return faulty_.contains(algebra); }
	const std::map<std::string, Signature> &sigs() const noexcept { return sigs_; }

	/// Declarations in load order.
	const std::vector<std::pair<Kind, std::string>> &declarations() const noexcept { return order_; }

private:
	void declare(Kind k, const std::string &name);

	std::map<std::string, Signature> sigs_;
	std::map<std::string, RegSys> systems_;
	std::map<std::string, FinitePosetWithBot> posets_;
	std::map<std::string, FiniteAlgebra> algebras_;
	std::map<std::string, WeightedDigraph> graphs_;
	std::map<std::string, InequalitySet> ineqs_;
	std::map<std::string, MorphismDecl> morphisms_;
	std::set<std::string> faulty_;
	std::vector<std::pair<Kind, std::string>> order_;
};

const char *to_string(Workspace::Kind k) noexcept;

Workspace parse_workspace(std::string_view text);

/// Canonical text of every declaration, in load order. Orders are printed as
/// covering relations.
std::string to_string(const Workspace &w);

std::string poset_text(const std::string &name, const FinitePosetWithBot &p);
std::string algebra_text(const FiniteAlgebra &a, bool faulty = false);

/// One `name = value` line of an environment file. The value is either a
/// literal (a number, `inf`, or a `{...}` word set) or a term over the
/// signature whose variables are earlier bindings or literals.
struct EnvLine {
	std::string name;
	std::string literal;
	std::optional<PartialTerm> term;
	std::size_t line = 0;
};

std::vector<EnvLine> parse_env(std::string_view text, const Signature &sig);

/// Evaluates the lines of an environment file in `a`; `literal` turns a
/// literal or a free identifier into a value.
template <class V>
Env<V> resolve_env(const std::vector<EnvLine> &lines, const AlgebraSpec<V> &a,
		   const std::function<V(const std::string &)> &literal)
{
	Env<V> out;
	for (const auto &l : lines) {
		if (!l.term) {
			out.insert_or_assign(l.name, literal(l.literal));
			continue;
		}
		Env<V> scope = out;
		for (const auto &v : variables(*l.term))
			if (!scope.contains(v))
				scope.emplace(v, literal(v));
		out.insert_or_assign(l.name, eval_term(*l.term, a, scope));
	}
	return out;
}

} // namespace deltalg

#endif
