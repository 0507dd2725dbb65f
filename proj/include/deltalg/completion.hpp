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
 * Completion by order ideals, executed on finite posets.
 *
 * On a finite poset every directed set has a maximum, so every ideal is
 * principal and the completion is isomorphic to the poset itself. The
 * diagrams of the ideal monad, of its algebras and of the distributive law
 * over terms are still checked as code, by comparing both composite paths on
 * every input up to the configured bounds. Ideals over terms are kept as
 * full down-closed sets of terms.
 *
 * Term heights in this module count nested operations: bot and leaves have
 * height 0, `f(x)` height 1.
 *
 * The symbolic layer reads a system as the ideal of values of its finite
 * approximants; two such ideals are equal when the systems are bisimilar.
 */

#ifndef DELTALG_COMPLETION_HPP
#define DELTALG_COMPLETION_HPP

#include "deltalg/finite_algebra.hpp"
#include "deltalg/regsys.hpp"
#include "deltalg/report.hpp"
#include "deltalg/term.hpp"

#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

namespace deltalg {

inline constexpr std::size_t kDefaultPosetBound = 6;
inline constexpr std::size_t kMonadPosetSize = 4;
inline constexpr std::size_t kDistribPosetSize = 3;
inline constexpr std::size_t kDefaultLawHeight = 2;
inline constexpr std::size_t kMaxLawHeight = 3;

class FinitePosetWithBot {
public:
	/// `order` holds pairs (a, b) meaning a <= b; the reflexive-transitive
	/// closure is taken. Throws InvalidAlgebra unless it is a partial order
	/// with a least element. At most 64 elements.
	FinitePosetWithBot(std::vector<std::string> names, const std::vector<std::pair<std::size_t, std::size_t>> &order);

	std::size_t size() const noexcept { return names_.size(); }
	const std::vector<std::string> &names() const noexcept { return names_; }
	const std::string &name(std::size_t a) const { return names_.at(a); }
	std::size_t bottom() const noexcept { return bottom_; }
	bool leq(std::size_t a, std::size_t b) const { return leq_[a * size() + b]; }

	/// Members of the principal ideal of `a`, as a bit set.
	std::uint64_t down(std::size_t a) const;
	/// Smallest down-closed superset.
	std::uint64_t down_closure(std::uint64_t members) const;
	bool is_down_closed(std::uint64_t members) const { return down_closure(members) == members; }
	/// Every two members have an upper bound among the members.
	bool is_directed(std::uint64_t members) const;
	/// The member above all others, if any.
	std::optional<std::size_t> maximum(std::uint64_t members) const;

	/// Labels elements from 0 in the order given.
	std::string render(std::uint64_t members) const;

private:
	std::vector<std::string> names_;
	std::vector<bool> leq_;
	std::size_t bottom_ = 0;
};

FinitePosetWithBot poset_of(const FiniteAlgebra &a);

/// Every partial order on `{0..n-1}` with least element 0, for each n up to
/// `max_size`, with elements named `bot, a, b, ...`.
std::vector<FinitePosetWithBot> all_posets(std::size_t max_size);

/// Every monotone table of the given arity on `p`, row-major.
std::vector<FiniteAlgebra::Table> monotone_tables(const FinitePosetWithBot &p, std::size_t arity);

/// Down-closed directed subset, as a bit set over the poset's elements.
struct Ideal {
	std::uint64_t members = 0;

	friend bool operator==(const Ideal &, const Ideal &) = default;
	friend auto operator<=>(const Ideal &, const Ideal &) = default;
};

/// All ideals by brute force over subsets, ordered so that `result[a]` is
/// the principal ideal of `a`. Throws BoundExceeded above `bound` elements
/// and InvalidAlgebra if a non-principal ideal turns up.
std::vector<Ideal> ideals_of(const FinitePosetWithBot &p, std::size_t bound = kDefaultPosetBound);

std::string to_string(const Ideal &i, const FinitePosetWithBot &p);

/// The poset of ideals of `base` under inclusion. Element `i` is the ideal
/// `ideal(i)`; its name is `↓` followed by the name of its maximum.
class IdealCompletion {
public:
	explicit IdealCompletion(const FinitePosetWithBot &base, std::size_t bound = kDefaultPosetBound);

	const FinitePosetWithBot &base() const noexcept { return base_; }
	const FinitePosetWithBot &poset() const noexcept { return poset_; }
	const Ideal &ideal(std::size_t i) const { return ideals_.at(i); }
	std::optional<std::size_t> index_of(const Ideal &i) const;

private:
	FinitePosetWithBot base_;
	std::vector<Ideal> ideals_;
	FinitePosetWithBot poset_;
};

/// Principal ideal of `a`.
Ideal etaD(const FinitePosetWithBot &p, std::size_t a);

/// Down-closure of the union of the ideals in `outer`, an ideal of
/// `inner.poset()`. The result is an ideal of `inner.base()`.
Ideal muD(const IdealCompletion &inner, const Ideal &outer);

/// Term-level ideal: a down-closed set of terms over poset elements (leaf
/// names are element names), in the order generated by the poset on leaves
/// and by cutting subterms to bot.
using TermIdeal = std::set<PartialTerm>;

/// Terms below `t`.
TermIdeal terms_below(const PartialTerm &t, const FinitePosetWithBot &p);

/// `f(A1, ..., An) -> ↓{ f(a1, ..., an) : ai in Ai }`, recursively through
/// the term. Leaf names of `t` are keys of `leaves`. Throws BoundExceeded
/// above kMaxLawHeight and MissingBinding for an unknown leaf.
TermIdeal lambda_map(const PartialTerm &t, const std::map<std::string, Ideal> &leaves,
		     const FinitePosetWithBot &p);

/// Distribute, evaluate elementwise and down-close. The result is a down-set
/// of the carrier; it is an ideal whenever the operations are monotone.
Ideal lifted_structure(const FiniteAlgebra &a, const PartialTerm &t, const std::map<std::string, Ideal> &leaves);

/// Unit triangles and associativity square of the ideal monad, on every
/// element of the iterated completions.
Report check_monad_laws(const FinitePosetWithBot &p, std::size_t bound = kMonadPosetSize);

/// Both algebra squares for the supremum of principal ideals, both algebra
/// squares for term evaluation, and the algebra and morphism squares of the
/// lifted monad, up to term height `height`.
Report check_em_laws(const FiniteAlgebra &a, std::size_t height = kDefaultLawHeight,
		     std::size_t bound = kMonadPosetSize);

/// The four coherence conditions of the distributive law for the operations
/// of `sig`, on terms up to `height` (for nested terms the heights add up).
Report check_distributive_laws(const FinitePosetWithBot &p, const Signature &sig,
			       std::size_t height = kDefaultLawHeight, std::size_t bound = kDistribPosetSize);
Report check_distributive_laws(const FiniteAlgebra &a, std::size_t height = kDefaultLawHeight,
			       std::size_t bound = kDistribPosetSize);

/// Operations commute with the supremum: `alpha . F sup = sup . lifted`.
Report check_continuity(const FiniteAlgebra &a, std::size_t height = kDefaultLawHeight,
			std::size_t bound = kMonadPosetSize);

enum class LawSuite { Monad, Em, Distrib, Continuity, All };

const char *to_string(LawSuite s) noexcept;
std::optional<LawSuite> parse_law_suite(const std::string &s);

struct LawSweep {
	/// Largest poset for the monad and supremum checks.
	std::size_t monad_size = kMonadPosetSize;
	/// Largest poset over which every monotone table is tried.
	std::size_t table_size = kDistribPosetSize;
	std::size_t height = kDefaultLawHeight;
};

/// Runs the chosen suites over every poset up to the sweep bounds; the
/// algebra-dependent suites run for every pair of a monotone unary table `f`
/// and a monotone binary table `g`. The distributive law is checked for the
/// signature `c/0, f/1, g/2`.
Report run_law_sweep(LawSuite suite, const LawSweep &bounds);

/// A system read as the ideal of the values of its finite approximants.
class SymbolicDeltaIdeal {
public:
	explicit SymbolicDeltaIdeal(RegSys s) : sys_(std::move(s)) {}

	const RegSys &system() const noexcept { return sys_; }

	friend bool operator==(const SymbolicDeltaIdeal &a, const SymbolicDeltaIdeal &b)
	{
		return bisim_equal(a.sys_, b.sys_);
	}

private:
	RegSys sys_;
};

/// Principal ideal of a finite term.
SymbolicDeltaIdeal symbolic_eta(const PartialTerm &t, const std::vector<std::string> &gens, const Signature &sig);

/// Flattening of a system whose generators stand for inner systems: copies
/// of the inner equations are added under fresh names and every leaf is
/// replaced by the definition of the corresponding inner root. Generators
/// without an inner system stay generators.
RegSys flatten_nested(const RegSys &outer, const std::map<std::string, RegSys> &inner);

struct IsoCheckOptions {
	std::size_t samples = 100;
	std::uint64_t seed = 5;
	std::size_t depth = 8;
};

/// On seeded samples over `gens`: flattening agrees with `subst_sys` up to
/// bisimulation and up to `depth` unfoldings; flattening trivial inner terms
/// agrees with term substitution; unit and associativity laws of flattening
/// hold up to bisimulation; every sampled system is an ideal of itself.
Report free_completion_iso_check(const std::vector<std::string> &gens, const IsoCheckOptions &opt = {});

} // namespace deltalg

#endif
