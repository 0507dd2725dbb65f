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
 * Ordered algebras and their extension to regular coterms.
 *
 * An AlgebraSpec<V> is a poset with least element over the carrier type V
 * together with monotone interpretations of operation symbols. Finite terms
 * are evaluated homomorphically by eval_term. A regular coterm, given as an
 * equation system, is evaluated as the supremum of the values of its finite
 * approximants; kleene_eval computes that supremum by ascending iteration from
 * the bottom vector and reports honestly when the chain does not settle.
 *
 * The carrier is a template parameter so the same engine runs over small
 * finite tables (V = std::size_t), extended naturals and word sets.
 */

#ifndef DELTALG_ALGEBRA_HPP
#define DELTALG_ALGEBRA_HPP

#include "deltalg/error.hpp"
#include "deltalg/regsys.hpp"
#include "deltalg/report.hpp"
#include "deltalg/term.hpp"

#include <cstddef>
#include <cstdint>
#include <functional>
#include <limits>
#include <map>
#include <optional>
#include <random>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <variant>
#include <vector>

namespace deltalg {

template <class V>
using Env = std::map<std::string, V>;

template <class V>
using OpFn = std::function<V(std::span<const V>)>;

template <class V>
struct OpInterp {
	std::size_t arity = 0;
	OpFn<V> fn;
};

inline constexpr std::size_t kDefaultBudget = 10'000;
inline constexpr double kDefaultCap = 1e6;

/// Iterate until two consecutive vectors agree, at most `budget` steps.
struct StabilizeWithin {
	std::size_t budget = kDefaultBudget;
};

/// Iterate until stable; any component whose magnitude exceeds `cap` is
/// frozen and reported. Needs the algebra's magnitude function.
struct CapAndFlag {
	double cap = kDefaultCap;
	std::size_t budget = std::numeric_limits<std::size_t>::max();
};

/// Iterate within `budget`; if the chain has not settled, ask an
/// instance-supplied rule for the supremum. The answer is only accepted when
/// it is a fixpoint of the system.
template <class V>
struct ExactHook {
	std::size_t budget = kDefaultBudget;
	std::function<std::optional<Env<V>>(const RegSys &, const Env<V> &)> solve;
};

template <class V>
using SupStrategy = std::variant<StabilizeWithin, CapAndFlag, ExactHook<V>>;

template <class V>
struct AlgebraSpec {
	std::string name;
	V bottom{};
	std::function<bool(const V &, const V &)> leq;
	std::map<std::string, OpInterp<V>> ops;
	SupStrategy<V> strategy = StabilizeWithin{};
	/// The whole carrier when it is finite and small enough to enumerate.
	std::optional<std::vector<V>> elements;
	/// Random carrier element, for sampled checks over infinite carriers.
	std::function<V(std::mt19937_64 &)> sample;
	std::function<std::string(const V &)> show;
	/// Numeric size of a value, used by CapAndFlag. Empty means "exact".
	std::function<std::optional<double>(const V &)> magnitude;

	bool equal(const V &a, const V &b) const { return leq(a, b) && leq(b, a); }

	const OpInterp<V> &op(const std::string &symbol, std::size_t arity) const
	{
		auto it = ops.find(symbol);
		if (it == ops.end())
			throw Error(ErrorKind::SignatureMismatch,
				    "algebra '" + name + "' does not interpret '" + symbol + "'");
		if (it->second.arity != arity)
			throw Error(ErrorKind::SignatureMismatch,
				    "algebra '" + name + "' interprets '" + symbol + "' with arity " +
					    std::to_string(it->second.arity) + ", not " + std::to_string(arity));
		return it->second;
	}

	std::string render(const V &v) const { return show ? show(v) : std::string("<value>"); }
};

template <class V>
V eval_term(const PartialTerm &t, const AlgebraSpec<V> &a, const Env<V> &env)
{
	switch (t.kind()) {
	case PartialTerm::Kind::Bottom:
		return a.bottom;
	case PartialTerm::Kind::Var: {
		auto it = env.find(t.label());
		if (it == env.end())
			throw Error(ErrorKind::MissingBinding, "no binding for '" + t.label() + "'");
		return it->second;
	}
	case PartialTerm::Kind::App:
		break;
	}
	const OpInterp<V> &op = a.op(t.label(), t.arity());
	std::vector<V> args;
	args.reserve(t.arity());
	for (const auto &k : t.children())
		args.push_back(eval_term(k, a, env));
	return op.fn(std::span<const V>(args));
}

enum class EvalStatus { Converged, Unresolved };
/// Overflow: an operation left the representable range before the chain
/// settled; the last complete iterate is kept.
enum class EvalFlag { CapExceeded, BudgetExhausted, Overflow };

inline const char *to_string(EvalFlag f) noexcept
{
	switch (f) {
	case EvalFlag::CapExceeded:
		return "cap-exceeded";
	case EvalFlag::BudgetExhausted:
		return "budget-exhausted";
	default:
		return "overflow";
	}
}

template <class V>
struct EvalOutcome {
	EvalStatus status = EvalStatus::Unresolved;
	/// Converged: the least fixpoint. Unresolved: the last iterate.
	Env<V> values;
	std::size_t iterations = 0;
	std::vector<EvalFlag> flags;
	/// System variables frozen by CapAndFlag.
	std::vector<std::string> over_cap;
	/// Converged through an ExactHook rather than by stabilization.
	bool certified = false;
	std::string root;

	bool converged() const noexcept { return status == EvalStatus::Converged; }
	const V &root_value() const { return values.at(root); }
	bool has_flag(EvalFlag f) const
	{
		for (auto g : flags)
			if (g == f)
				return true;
		return false;
	}
};

/// Checks that `env` binds every generator of `s`.
template <class V>
void require_total_env(const RegSys &s, const Env<V> &env)
{
	for (const auto &g : s.gens())
		if (!env.contains(g))
			throw Error(ErrorKind::MissingBinding,
				    "environment has no binding for generator '" + g + "' of '" + s.name() + "'");
}

/// One application of the system's equations: `v'_x = def_x(v, env)`.
template <class V>
Env<V> system_step(const RegSys &s, const AlgebraSpec<V> &a, const Env<V> &env, const Env<V> &values)
{
	Env<V> scope = env;
	for (const auto &[k, v] : values)
		scope.insert_or_assign(k, v);
	Env<V> out;
	for (const auto &x : s.sysvars())
		out.emplace(x, eval_term(s.def(x), a, scope));
	return out;
}

namespace detail {

/// The flattened equation graph with operations resolved against an algebra.
template <class V>
struct CompiledSystem {
	FlatSystem flat;
	std::vector<const OpFn<V> *> fn;
	std::vector<V> init;

	CompiledSystem(const RegSys &s, const AlgebraSpec<V> &a, const Env<V> &env) : flat(flatten(s))
	{
		fn.assign(flat.nodes.size(), nullptr);
		init.assign(flat.nodes.size(), a.bottom);
		for (std::size_t n = 0; n < flat.nodes.size(); ++n) {
			const auto &node = flat.nodes[n];
			using Kind = FlatSystem::Node::Kind;
			if (node.kind == Kind::App)
				fn[n] = &a.op(node.label, node.kids.size()).fn;
			else if (node.kind == Kind::Gen)
				init[n] = env.at(node.label);
		}
	}

	bool is_app(std::size_t n) const { return fn[n] != nullptr; }

	V apply(std::size_t n, const std::vector<V> &cur, std::vector<V> &scratch) const
	{
		const auto &kids = flat.nodes[n].kids;
		scratch.clear();
		for (std::size_t k : kids)
			scratch.push_back(cur[k]);
		return (*fn[n])(std::span<const V>(scratch));
	}
};

} // namespace detail

/// Ascending iteration from the bottom vector over the flattened equation
/// graph, so that iterate k agrees with the depth-k approximant up to one
/// level. Converged values are the least fixpoint; anything else comes back
/// as Unresolved with flags, never as a guessed value. Throws MissingBinding
/// for a partial environment and InvalidAlgebra if an iterate decreases.
template <class V>
EvalOutcome<V> kleene_eval(const RegSys &s, const AlgebraSpec<V> &a, const Env<V> &env,
			   const SupStrategy<V> &strategy)
{
	require_total_env(s, env);
	detail::CompiledSystem<V> sys(s, a, env);
	const std::size_t n = sys.flat.nodes.size();

	std::size_t budget = kDefaultBudget;
	std::optional<double> cap;
	const ExactHook<V> *hook = nullptr;
	if (auto *st = std::get_if<StabilizeWithin>(&strategy)) {
		budget = st->budget;
	} else if (auto *cf = std::get_if<CapAndFlag>(&strategy)) {
		budget = cf->budget;
		cap = cf->cap;
		if (!a.magnitude)
			throw Error(ErrorKind::InvalidAlgebra,
				    "algebra '" + a.name + "' has no magnitude; CapAndFlag does not apply");
	} else {
		hook = &std::get<ExactHook<V>>(strategy);
		budget = hook->budget;
	}
	if (budget == 0)
		throw Error(ErrorKind::Usage, "iteration budget must be at least 1");

	std::vector<V> cur = sys.init;
	std::vector<V> next = cur;
	std::vector<bool> frozen(n, false);
	std::vector<V> scratch;
	bool any_frozen = false;

	EvalOutcome<V> out;
	out.root = s.root();
	bool stable = false;
	bool overflow = false;
	std::size_t k = 0;
	while (k < budget) {
		++k;
		stable = true;
		for (std::size_t i = 0; i < n; ++i) {
			if (!sys.is_app(i) || frozen[i])
				continue;
			try {
				next[i] = sys.apply(i, cur, scratch);
			} catch (const std::overflow_error &) {
				overflow = true;
				stable = false;
				break;
			}
			if (!a.leq(cur[i], next[i]))
				throw Error(ErrorKind::InvalidAlgebra,
					    "iteration is not ascending in algebra '" + a.name +
						    "'; an operation is not monotone");
			if (stable && !a.leq(next[i], cur[i]))
				stable = false;
		}
		if (overflow)
			break;
		if (cap) {
			for (std::size_t i = 0; i < n; ++i) {
				if (!sys.is_app(i) || frozen[i])
					continue;
				auto m = a.magnitude(next[i]);
				if (m && *m > *cap) {
					frozen[i] = true;
					any_frozen = true;
				}
			}
		}
		std::swap(cur, next);
		if (stable)
			break;
	}
	out.iterations = k;
	for (const auto &x : s.sysvars())
		out.values.emplace(x, cur[sys.flat.var_node.at(x)]);

	if (any_frozen) {
		out.status = EvalStatus::Unresolved;
		out.flags.push_back(EvalFlag::CapExceeded);
		if (overflow)
			out.flags.push_back(EvalFlag::Overflow);
		else if (!stable)
			out.flags.push_back(EvalFlag::BudgetExhausted);
		for (const auto &x : s.sysvars())
			if (frozen[sys.flat.var_node.at(x)])
				out.over_cap.push_back(x);
		return out;
	}
	if (stable) {
		out.status = EvalStatus::Converged;
		return out;
	}
	if (hook && hook->solve) {
		if (auto exact = hook->solve(s, env)) {
			bool complete = true;
			for (const auto &x : s.sysvars())
				complete = complete && exact->contains(x);
			if (complete) {
				Env<V> again = system_step(s, a, env, *exact);
				bool fix = true;
				for (const auto &x : s.sysvars())
					fix = fix && a.equal(again.at(x), exact->at(x));
				if (fix) {
					out.status = EvalStatus::Converged;
					out.certified = true;
					out.values.clear();
					for (const auto &x : s.sysvars())
						out.values.emplace(x, exact->at(x));
					return out;
				}
			}
		}
	}
	out.status = EvalStatus::Unresolved;
	out.flags.push_back(overflow ? EvalFlag::Overflow : EvalFlag::BudgetExhausted);
	return out;
}

template <class V>
EvalOutcome<V> kleene_eval(const RegSys &s, const AlgebraSpec<V> &a, const Env<V> &env)
{
	return kleene_eval(s, a, env, a.strategy);
}

/// Value of the depth-`depth` approximant, `eval_term(unfold(s, depth))`.
/// Computed level by level on the equation graph, so the cost is linear in
/// `depth` even when the unfolded term is exponentially large.
template <class V>
V approx_eval(const RegSys &s, const AlgebraSpec<V> &a, const Env<V> &env, std::size_t depth)
{
	require_total_env(s, env);
	detail::CompiledSystem<V> sys(s, a, env);
	const std::size_t n = sys.flat.nodes.size();
	// value of every node with r levels left; r = 0 cuts everything
	std::vector<V> cur(n, a.bottom);
	std::vector<V> next(n, a.bottom);
	std::vector<V> scratch;
	for (std::size_t r = 1; r <= depth; ++r) {
		for (std::size_t i = 0; i < n; ++i)
			next[i] = sys.is_app(i) ? sys.apply(i, cur, scratch) : sys.init[i];
		std::swap(cur, next);
	}
	return cur[sys.flat.root];
}

enum class IdentityResult { Holds, Fails, Indeterminate };

template <class V>
struct EmIdentityCheck {
	IdentityResult result = IdentityResult::Indeterminate;
	std::optional<V> flattened; ///< value of the substituted system
	std::optional<V> stepwise;  ///< value of t over the inner values
};

/// Evaluating `t` with placeholders replaced by whole systems gives the same
/// value as evaluating `t` over the values of those systems. Either side
/// failing to converge makes the check Indeterminate.
template <class V>
EmIdentityCheck<V> check_em_identity(const PartialTerm &t, const std::map<std::string, RegSys> &inner,
				     const AlgebraSpec<V> &a, const Env<V> &env,
				     const Signature &sig)
{
	EmIdentityCheck<V> res;
	const auto leaves = variables(t);
	std::vector<std::string> gens(leaves.begin(), leaves.end());
	RegSys outer = of_term(t, gens, sig);
	RegSys whole = subst_sys(outer, inner);

	auto lhs = kleene_eval(whole, a, env);
	if (!lhs.converged())
		return res;
	Env<V> scope = env;
	for (const auto &p : gens) {
		auto it = inner.find(p);
		if (it == inner.end())
			continue;
		auto v = kleene_eval(it->second, a, env);
		if (!v.converged())
			return res;
		scope.insert_or_assign(p, v.root_value());
	}
	res.flattened = lhs.root_value();
	res.stepwise = eval_term(t, a, scope);
	res.result = a.equal(*res.flattened, *res.stepwise) ? IdentityResult::Holds : IdentityResult::Fails;
	return res;
}

struct InequalitySet {
	Signature sig;
	std::vector<std::pair<PartialTerm, PartialTerm>> pairs;
};

struct CheckMode {
	enum class Kind { Exhaustive, Sampled };
	Kind kind = Kind::Exhaustive;
	std::size_t samples = 100;
	std::uint64_t seed = 1;

	static CheckMode exhaustive() { return {}; }
	static CheckMode sampled(std::size_t n, std::uint64_t seed) { return {Kind::Sampled, n, seed}; }
};

inline constexpr std::size_t kExhaustiveLimit = 1'000'000;

namespace detail {

template <class V>
std::string show_env(const AlgebraSpec<V> &a, const std::vector<std::string> &names, const std::vector<V> &vals)
{
	std::string out;
	for (std::size_t i = 0; i < names.size(); ++i) {
		if (i)
			out += ", ";
		out += names[i] + "=" + a.render(vals[i]);
	}
	return out.empty() ? "(empty environment)" : out;
}

/// Calls `visit(values)` for every assignment of `arity` carrier values, or
/// for `mode.samples` random ones. Returns the number visited.
template <class V, class F>
std::size_t for_each_assignment(const AlgebraSpec<V> &a, std::size_t arity, const CheckMode &mode,
				std::mt19937_64 &rng, F &&visit)
{
	std::vector<V> vals(arity, a.bottom);
	if (mode.kind == CheckMode::Kind::Exhaustive) {
		if (!a.elements)
			throw Error(ErrorKind::Usage, "exhaustive mode needs a finite carrier; algebra '" + a.name +
							      "' has none");
		const auto &el = *a.elements;
		double total = 1;
		for (std::size_t i = 0; i < arity; ++i)
			total *= static_cast<double>(el.size());
		if (total > static_cast<double>(kExhaustiveLimit))
			throw Error(ErrorKind::BoundExceeded, "exhaustive enumeration over algebra '" + a.name +
								      "' is too large");
		if (el.empty())
			return 0;
		std::vector<std::size_t> idx(arity, 0);
		std::size_t count = 0;
		for (;;) {
			for (std::size_t i = 0; i < arity; ++i)
				vals[i] = el[idx[i]];
			visit(vals);
			++count;
			std::size_t i = 0;
			while (i < arity && ++idx[i] == el.size())
				idx[i++] = 0;
			if (i == arity)
				return count;
		}
	}
	auto draw = [&]() -> V {
		if (a.sample)
			return a.sample(rng);
		if (a.elements && !a.elements->empty()) {
			std::uniform_int_distribution<std::size_t> pick(0, a.elements->size() - 1);
			return (*a.elements)[pick(rng)];
		}
		throw Error(ErrorKind::Usage, "algebra '" + a.name + "' cannot be sampled");
	};
	for (std::size_t s = 0; s < mode.samples; ++s) {
		for (auto &v : vals)
			v = draw();
		visit(vals);
	}
	return mode.samples;
}

} // namespace detail

/// Verifies `eval(lhs) <= eval(rhs)` in the pointwise order, over every
/// environment (finite carriers) or over sampled ones. Violations carry the
/// witnessing environment.
template <class V>
Report check_inequalities(const InequalitySet &e, const AlgebraSpec<V> &a, const CheckMode &mode)
{
	Report rep;
	rep.check = "inequalities";
	rep.instance = a.name;
	if (mode.kind == CheckMode::Kind::Sampled)
		rep.seed = mode.seed;
	std::mt19937_64 rng(mode.seed);
	for (const auto &[lhs, rhs] : e.pairs) {
		check_signature(lhs, e.sig);
		check_signature(rhs, e.sig);
		auto vs = variables(lhs);
		for (const auto &v : variables(rhs))
			vs.insert(v);
		std::vector<std::string> names(vs.begin(), vs.end());
		const std::string law = to_string(lhs) + " <= " + to_string(rhs);
		rep.samples += detail::for_each_assignment(a, names.size(), mode, rng, [&](const std::vector<V> &vals) {
			Env<V> env;
			for (std::size_t i = 0; i < names.size(); ++i)
				env.emplace(names[i], vals[i]);
			V l = eval_term(lhs, a, env);
			V r = eval_term(rhs, a, env);
			if (!a.leq(l, r))
				rep.add(law, detail::show_env(a, names, vals),
					a.render(l) + " is not below " + a.render(r));
		});
	}
	return rep;
}

/// Order axioms, least bottom and monotone operations; exhaustive on finite
/// carriers, sampled otherwise.
template <class V>
Report validate(const AlgebraSpec<V> &a, std::size_t samples = 200, std::uint64_t seed = 7)
{
	Report rep;
	rep.check = "validate";
	rep.instance = a.name;
	const bool finite = a.elements.has_value();
	CheckMode mode = finite ? CheckMode::exhaustive() : CheckMode::sampled(samples, seed);
	if (!finite)
		rep.seed = seed;
	std::mt19937_64 rng(seed);

	rep.samples += detail::for_each_assignment(a, 1, mode, rng, [&](const std::vector<V> &v) {
		if (!a.leq(v[0], v[0]))
			rep.add("reflexive", a.render(v[0]));
		if (!a.leq(a.bottom, v[0]))
			rep.add("bottom least", a.render(v[0]));
	});
	rep.samples += detail::for_each_assignment(a, 3, mode, rng, [&](const std::vector<V> &v) {
		if (a.leq(v[0], v[1]) && a.leq(v[1], v[0]) && !(v[0] == v[1]))
			rep.add("antisymmetric", a.render(v[0]) + ", " + a.render(v[1]));
		if (a.leq(v[0], v[1]) && a.leq(v[1], v[2]) && !a.leq(v[0], v[2]))
			rep.add("transitive", a.render(v[0]) + ", " + a.render(v[1]) + ", " + a.render(v[2]));
	});
	for (const auto &[name, op] : a.ops) {
		// Monotone in each argument separately; transitivity does the rest.
		rep.samples += detail::for_each_assignment(a, op.arity + 1, mode, rng, [&](const std::vector<V> &v) {
			std::vector<V> args(v.begin(), v.begin() + static_cast<std::ptrdiff_t>(op.arity));
			const V base = op.fn(std::span<const V>(args));
			for (std::size_t i = 0; i < op.arity; ++i) {
				if (!a.leq(args[i], v[op.arity]))
					continue;
				std::vector<V> up = args;
				up[i] = v[op.arity];
				const V moved = op.fn(std::span<const V>(up));
				if (!a.leq(base, moved)) {
					std::string w = name + "(";
					for (std::size_t j = 0; j < op.arity; ++j)
						w += (j ? ", " : "") + a.render(args[j]);
					w += ") vs argument " + std::to_string(i + 1) + " raised to " +
					     a.render(v[op.arity]);
					rep.add("monotone " + name, w);
				}
			}
		});
	}
	return rep;
}

template <class VA>
struct MorphismSamples {
	std::size_t samples = 200;
	std::uint64_t seed = 11;
	/// Systems evaluated on both sides for supremum preservation.
	std::vector<std::pair<RegSys, Env<VA>>> systems;
};

/// Strictness, monotonicity, commutation with every operation of `a`, and
/// preservation of suprema of evaluated systems:
/// `h(kleene_eval(S, a, env)) == kleene_eval(S, b, h . env)`.
template <class VA, class VB>
Report check_morphism(const std::function<VB(const VA &)> &h, const AlgebraSpec<VA> &a,
		      const AlgebraSpec<VB> &b, const MorphismSamples<VA> &samples)
{
	Report rep;
	rep.check = "morphism";
	rep.instance = a.name + " -> " + b.name;
	const bool finite = a.elements.has_value();
	CheckMode mode = finite ? CheckMode::exhaustive() : CheckMode::sampled(samples.samples, samples.seed);
	if (!finite)
		rep.seed = samples.seed;
	std::mt19937_64 rng(samples.seed);

	++rep.samples;
	if (!b.equal(h(a.bottom), b.bottom))
		rep.add("strict", "h(" + a.render(a.bottom) + ") = " + b.render(h(a.bottom)));

	rep.samples += detail::for_each_assignment(a, 2, mode, rng, [&](const std::vector<VA> &v) {
		if (a.leq(v[0], v[1]) && !b.leq(h(v[0]), h(v[1])))
			rep.add("monotone", a.render(v[0]) + " <= " + a.render(v[1]),
				"images " + b.render(h(v[0])) + ", " + b.render(h(v[1])));
	});

	for (const auto &[name, op] : a.ops) {
		const OpInterp<VB> &opb = b.op(name, op.arity);
		rep.samples += detail::for_each_assignment(a, op.arity, mode, rng, [&](const std::vector<VA> &v) {
			const VB left = h(op.fn(std::span<const VA>(v)));
			std::vector<VB> hv;
			for (const auto &x : v)
				hv.push_back(h(x));
			const VB right = opb.fn(std::span<const VB>(hv));
			if (!b.equal(left, right)) {
				std::string w = name + "(";
				for (std::size_t j = 0; j < v.size(); ++j)
					w += (j ? ", " : "") + a.render(v[j]);
				rep.add("commutes with " + name, w + ")",
					"h of result " + b.render(left) + ", result on images " + b.render(right));
			}
		});
	}

	for (const auto &[sys, env] : samples.systems) {
		++rep.samples;
		auto ra = kleene_eval(sys, a, env);
		Env<VB> henv;
		for (const auto &[k, v] : env)
			henv.emplace(k, h(v));
		auto rb = kleene_eval(sys, b, henv);
		if (!ra.converged() || !rb.converged()) {
			++rep.indeterminate;
			continue;
		}
		for (const auto &x : sys.sysvars())
			if (!b.equal(h(ra.values.at(x)), rb.values.at(x)))
				rep.add("preserves suprema", "system " + sys.name() + ", variable " + x,
					"h(sup) = " + b.render(h(ra.values.at(x))) + ", sup of images = " +
						b.render(rb.values.at(x)));
	}
	return rep;
}

} // namespace deltalg

#endif
