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

#include "deltalg/sampling.hpp"

#include "deltalg/error.hpp"

#include <algorithm>
#include <functional>
#include <set>

namespace deltalg {

namespace {

std::size_t pick(std::mt19937_64 &rng, std::size_t n)
{
	return std::uniform_int_distribution<std::size_t>(0, n - 1)(rng);
}

bool coin(std::mt19937_64 &rng, double p)
{
	return std::bernoulli_distribution(p)(rng);
}

std::vector<std::string> var_names(std::size_t n)
{
	std::vector<std::string> out;
	for (std::size_t i = 0; i < n; ++i)
		out.push_back("x" + std::to_string(i));
	return out;
}

PartialTerm right_product(const OpSymbol &times, const std::vector<PartialTerm> &items)
{
	PartialTerm t = items.back();
	for (std::size_t i = items.size() - 1; i-- > 0;)
		t = PartialTerm::app(times, {items[i], t});
	return t;
}

PartialTerm sum_of(const OpSymbol &plus, const std::vector<PartialTerm> &items)
{
	PartialTerm t = items.back();
	for (std::size_t i = items.size() - 1; i-- > 0;)
		t = PartialTerm::app(plus, {items[i], t});
	return t;
}

struct SemiringOps {
	OpSymbol plus, times, zero, one;
	explicit SemiringOps(const Signature &sig)
	{
		const auto &p = *sig.profile();
		plus = *sig.find(p.plus);
		times = *sig.find(p.times);
		zero = *sig.find(p.zero);
		one = *sig.find(p.one);
	}
};

} // namespace

PartialTerm random_term(const Signature &sig, const std::vector<std::string> &leaves, std::size_t height,
			std::mt19937_64 &rng, double bot_prob)
{
	std::vector<OpSymbol> consts, ops;
	for (const auto &op : sig.ops())
		(op.arity == 0 ? consts : ops).push_back(op);
	auto leaf = [&]() -> PartialTerm {
		if (coin(rng, bot_prob))
			return PartialTerm::bottom();
		const std::size_t n = leaves.size() + consts.size();
		if (n == 0)
			return PartialTerm::bottom();
		std::size_t i = pick(rng, n);
		return i < leaves.size() ? PartialTerm::var(leaves[i]) : PartialTerm::app(consts[i - leaves.size()]);
	};
	if (height == 0 || ops.empty() || coin(rng, 0.3))
		return leaf();
	const OpSymbol &op = ops[pick(rng, ops.size())];
	std::vector<PartialTerm> kids;
	for (std::size_t i = 0; i < op.arity; ++i)
		kids.push_back(random_term(sig, leaves, height - 1, rng, bot_prob));
	return PartialTerm::app(op, std::move(kids));
}

RegSys random_system(const Signature &sig, const std::vector<std::string> &gens, std::size_t nvars,
		     std::mt19937_64 &rng, std::size_t height, const std::string &name)
{
	const auto vars = var_names(nvars);
	std::vector<std::string> leaves = vars;
	leaves.insert(leaves.end(), gens.begin(), gens.end());
	std::map<std::string, PartialTerm> defs;
	for (const auto &v : vars)
		defs.emplace(v, random_term(sig, leaves, height, rng));
	return RegSys(sig, vars, gens, std::move(defs), vars.front(), name);
}

RegSys random_linear_system(const std::vector<std::string> &letters, std::size_t nvars, std::mt19937_64 &rng,
			    LinearSide side)
{
	const Signature sig = semiring_signature();
	const SemiringOps op(sig);
	const auto vars = var_names(nvars);
	auto factor = [&]() -> PartialTerm {
		if (coin(rng, 0.1))
			return PartialTerm::app(coin(rng, 0.5) ? op.one : op.zero);
		return PartialTerm::var(letters[pick(rng, letters.size())]);
	};
	std::map<std::string, PartialTerm> defs;
	for (const auto &v : vars) {
		std::vector<PartialTerm> summands;
		const std::size_t k = 1 + pick(rng, 3);
		for (std::size_t i = 0; i < k; ++i) {
			std::vector<PartialTerm> items;
			const bool with_var = coin(rng, 0.6);
			const std::size_t nf = pick(rng, 3);
			for (std::size_t j = 0; j < nf; ++j)
				items.push_back(factor());
			if (with_var) {
				PartialTerm x = PartialTerm::var(vars[pick(rng, vars.size())]);
				if (side == LinearSide::Right)
					items.push_back(x);
				else
					items.insert(items.begin(), x);
			}
			if (items.empty())
				items.push_back(PartialTerm::app(op.one));
			summands.push_back(right_product(op.times, items));
		}
		defs.emplace(v, sum_of(op.plus, summands));
	}
	return RegSys(sig, vars, letters, std::move(defs), vars.front(), "lin");
}

RegSys random_algebraic_system(const std::vector<std::string> &letters, std::size_t nvars, std::mt19937_64 &rng)
{
	const Signature sig = semiring_signature();
	const SemiringOps op(sig);
	const auto vars = var_names(nvars);
	std::map<std::string, PartialTerm> defs;
	for (const auto &v : vars) {
		std::vector<PartialTerm> summands;
		const std::size_t k = 1 + pick(rng, 3);
		for (std::size_t i = 0; i < k; ++i) {
			std::vector<PartialTerm> items;
			const std::size_t len = pick(rng, 4);
			for (std::size_t j = 0; j < len; ++j) {
				if (coin(rng, 0.4))
					items.push_back(PartialTerm::var(vars[pick(rng, vars.size())]));
				else
					items.push_back(PartialTerm::var(letters[pick(rng, letters.size())]));
			}
			if (items.empty())
				items.push_back(PartialTerm::app(coin(rng, 0.8) ? op.one : op.zero));
			summands.push_back(right_product(op.times, items));
		}
		defs.emplace(v, sum_of(op.plus, summands));
	}
	return RegSys(sig, vars, letters, std::move(defs), vars.front(), "alg");
}

std::pair<RegSys, Env<ExtNat>> random_natinf_linear_system(std::size_t nvars, std::mt19937_64 &rng,
							   std::uint64_t max_coef)
{
	const Signature sig = semiring_signature();
	const SemiringOps op(sig);
	const auto vars = var_names(nvars);
	const std::size_t ncoef = 3;
	std::vector<std::string> gens;
	Env<ExtNat> env;
	for (std::size_t i = 0; i < ncoef; ++i) {
		gens.push_back("c" + std::to_string(i));
		env.emplace(gens.back(), ExtNat(std::uniform_int_distribution<std::uint64_t>(0, max_coef)(rng)));
	}
	std::map<std::string, PartialTerm> defs;
	for (const auto &v : vars) {
		std::vector<PartialTerm> summands;
		const std::size_t k = 1 + pick(rng, 3);
		for (std::size_t i = 0; i < k; ++i) {
			PartialTerm c = PartialTerm::var(gens[pick(rng, gens.size())]);
			if (coin(rng, 0.6))
				summands.push_back(
					PartialTerm::app(op.times, {c, PartialTerm::var(vars[pick(rng, vars.size())])}));
			else
				summands.push_back(c);
		}
		defs.emplace(v, sum_of(op.plus, summands));
	}
	return {RegSys(sig, vars, gens, std::move(defs), vars.front(), "growth"), std::move(env)};
}

WeightedDigraph random_digraph(std::size_t nodes, std::uint64_t max_weight, double edge_prob, std::mt19937_64 &rng)
{
	WeightedDigraph g;
	for (std::size_t i = 0; i < nodes; ++i)
		g.add_node("n" + std::to_string(i));
	for (std::size_t i = 0; i < nodes; ++i)
		for (std::size_t j = 0; j < nodes; ++j)
			if (coin(rng, edge_prob))
				g.add_edge("n" + std::to_string(i), "n" + std::to_string(j),
					   std::uniform_int_distribution<std::uint64_t>(0, max_weight)(rng));
	return g;
}

RegSys unroll(const RegSys &s, std::mt19937_64 &rng)
{
	const auto &vars = s.sysvars();
	Substitution sigma;
	for (const auto &v : vars)
		sigma.emplace(v, s.def(v));
	std::map<std::string, PartialTerm> defs = s.defs();
	if (coin(rng, 0.5)) {
		for (auto &[v, d] : defs)
			d = subst(d, sigma);
	} else {
		const std::string &x = vars[pick(rng, vars.size())];
		defs.at(x) = subst(defs.at(x), sigma);
	}
	RegSys out(s.sig(), vars, s.gens(), std::move(defs), s.root(), s.name());
	return s.declares_profile() ? out.with_profile(*s.profile()) : out;
}

RegSys duplicate_var(const RegSys &s, std::mt19937_64 &rng)
{
	const auto &vars = s.sysvars();
	const std::string y = vars[pick(rng, vars.size())];
	std::string copy = y + "_dup";
	while (s.is_sysvar(copy) || s.is_gen(copy) || s.sig().contains(copy))
		copy += "_";
	std::function<PartialTerm(const PartialTerm &)> redirect = [&](const PartialTerm &t) -> PartialTerm {
		if (t.is_var())
			return t.label() == y && coin(rng, 0.5) ? PartialTerm::var(copy) : t;
		if (!t.is_app() || t.arity() == 0)
			return t;
		std::vector<PartialTerm> kids;
		for (const auto &k : t.children())
			kids.push_back(redirect(k));
		return PartialTerm::app(t.op(), std::move(kids));
	};
	std::map<std::string, PartialTerm> defs;
	for (const auto &v : vars)
		defs.emplace(v, redirect(s.def(v)));
	defs.emplace(copy, s.def(y));
	std::vector<std::string> nv = vars;
	nv.push_back(copy);
	std::string root = s.root() == y && coin(rng, 0.5) ? copy : s.root();
	RegSys out(s.sig(), nv, s.gens(), std::move(defs), root, s.name());
	return s.declares_profile() ? out.with_profile(*s.profile()) : out;
}

std::vector<PartialTerm> random_directed_set(const PartialTerm &t, std::size_t count, std::mt19937_64 &rng)
{
	std::function<PartialTerm(const PartialTerm &)> cut = [&](const PartialTerm &u) -> PartialTerm {
		if (u.is_bottom() || coin(rng, 0.2))
			return PartialTerm::bottom();
		if (!u.is_app() || u.arity() == 0)
			return u;
		std::vector<PartialTerm> kids;
		for (const auto &k : u.children())
			kids.push_back(cut(k));
		return PartialTerm::app(u.op(), std::move(kids));
	};
	std::set<PartialTerm> set;
	for (std::size_t i = 0; i < std::max<std::size_t>(count, 1); ++i)
		set.insert(cut(t));
	for (bool grew = true; grew && set.size() < 256;) {
		grew = false;
		std::vector<PartialTerm> items(set.begin(), set.end());
		for (std::size_t i = 0; i < items.size(); ++i)
			for (std::size_t j = i + 1; j < items.size(); ++j)
			{
				auto m = merge(items[i], items[j]);
				if (auto *joined = std::get_if<PartialTerm>(&m))
					grew = set.insert(*joined).second || grew;
			}
	}
	return {set.begin(), set.end()};
}

} // namespace deltalg
