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

#include "deltalg/semirings.hpp"

#include "deltalg/error.hpp"

#include <algorithm>
#include <functional>
#include <set>
#include <sstream>

namespace deltalg {

namespace {

ExtNat sample_extnat(std::mt19937_64 &rng)
{
	std::uniform_int_distribution<int> d(0, 12);
	int v = d(rng);
	return v == 12 ? ExtNat::infinity() : ExtNat(static_cast<std::uint64_t>(v));
}

} // namespace

AlgebraSpec<ExtNat> tropical_algebra(const SemiringProfile &p)
{
	AlgebraSpec<ExtNat> a;
	a.name = "tropical";
	a.bottom = ExtNat::infinity();
	a.leq = [](const ExtNat &x, const ExtNat &y) { return x >= y; };
	a.ops.emplace(p.plus, OpInterp<ExtNat>{2, [](std::span<const ExtNat> v) { return std::min(v[0], v[1]); }});
	a.ops.emplace(p.times, OpInterp<ExtNat>{2, [](std::span<const ExtNat> v) { return v[0] + v[1]; }});
	a.ops.emplace(p.zero, OpInterp<ExtNat>{0, [](std::span<const ExtNat>) { return ExtNat::infinity(); }});
	a.ops.emplace(p.one, OpInterp<ExtNat>{0, [](std::span<const ExtNat>) { return ExtNat(0); }});
	a.sample = sample_extnat;
	a.show = [](const ExtNat &x) { return to_string(x); };
	return a;
}

AlgebraSpec<ExtNat> natinf_algebra(const SemiringProfile &p)
{
	AlgebraSpec<ExtNat> a;
	a.name = "natinf";
	a.bottom = ExtNat(0);
	a.leq = [](const ExtNat &x, const ExtNat &y) { return x <= y; };
	a.ops.emplace(p.plus, OpInterp<ExtNat>{2, [](std::span<const ExtNat> v) { return v[0] + v[1]; }});
	a.ops.emplace(p.times, OpInterp<ExtNat>{2, [](std::span<const ExtNat> v) { return v[0] * v[1]; }});
	a.ops.emplace(p.zero, OpInterp<ExtNat>{0, [](std::span<const ExtNat>) { return ExtNat(0); }});
	a.ops.emplace(p.one, OpInterp<ExtNat>{0, [](std::span<const ExtNat>) { return ExtNat(1); }});
	a.strategy = CapAndFlag{};
	a.sample = sample_extnat;
	a.show = [](const ExtNat &x) { return to_string(x); };
	a.magnitude = [](const ExtNat &x) -> std::optional<double> {
		if (x.is_inf())
			return std::nullopt;
		return static_cast<double>(x.value());
	};
	return a;
}

std::map<std::string, DivergenceVerdict> divergence_certificate_linear(const RegSys &s, const Env<ExtNat> &env)
{
	LinearForm form;
	try {
		form = linear_form(s, LinearSide::Right);
	} catch (const Error &e) {
		if (e.kind() != ErrorKind::NotLinear)
			throw;
		form = linear_form(s, LinearSide::Left);
	}
	const SemiringProfile p = *s.profile();
	const auto &vars = s.sysvars();
	const std::size_t n = vars.size();
	std::map<std::string, std::size_t> idx;
	for (std::size_t i = 0; i < n; ++i)
		idx.emplace(vars[i], i);

	auto factor_value = [&](const PartialTerm &f) -> ExtNat {
		if (f.is_bottom())
			return ExtNat(0);
		if (f.is_var()) {
			auto it = env.find(f.label());
			if (it == env.end())
				throw Error(ErrorKind::MissingBinding, "no binding for generator '" + f.label() + "'");
			return it->second;
		}
		return f.label() == p.one ? ExtNat(1) : ExtNat(0);
	};

	// x = A x + b
	std::vector<std::vector<ExtNat>> coef(n, std::vector<ExtNat>(n, ExtNat(0)));
	std::vector<ExtNat> base(n, ExtNat(0));
	for (std::size_t i = 0; i < n; ++i) {
		for (const auto &m : form.at(vars[i])) {
			ExtNat c(1);
			for (const auto &f : m.factors)
				c = c * factor_value(f);
			if (m.var)
				coef[i][idx.at(*m.var)] = coef[i][idx.at(*m.var)] + c;
			else
				base[i] = base[i] + c;
		}
	}

	// reach[i][j]: path of nonzero coefficients from i to j (reflexive).
	std::vector<std::vector<bool>> reach(n, std::vector<bool>(n, false));
	for (std::size_t i = 0; i < n; ++i) {
		reach[i][i] = true;
		for (std::size_t j = 0; j < n; ++j)
			if (coef[i][j] != ExtNat(0))
				reach[i][j] = true;
	}
	for (std::size_t k = 0; k < n; ++k)
		for (std::size_t i = 0; i < n; ++i)
			if (reach[i][k])
				for (std::size_t j = 0; j < n; ++j)
					if (reach[k][j])
						reach[i][j] = true;
	auto on_cycle = [&](std::size_t c) {
		for (std::size_t j = 0; j < n; ++j)
			if (coef[c][j] != ExtNat(0) && reach[j][c])
				return true;
		return false;
	};
	auto feeds = [&](std::size_t v) {
		for (std::size_t j = 0; j < n; ++j)
			if (reach[v][j] && base[j] != ExtNat(0))
				return true;
		return false;
	};
	std::vector<bool> pump(n, false);
	for (std::size_t c = 0; c < n; ++c) {
		bool p_c = base[c].is_inf() || (on_cycle(c) && feeds(c));
		for (std::size_t v = 0; v < n && !p_c; ++v)
			if (coef[c][v].is_inf() && feeds(v))
				p_c = true;
		pump[c] = p_c;
	}
	std::vector<bool> infinite(n, false);
	for (std::size_t i = 0; i < n; ++i)
		for (std::size_t c = 0; c < n; ++c)
			if (reach[i][c] && pump[c])
				infinite[i] = true;

	// Finite components: partial sums of A^k b settle within n rounds because
	// no contributing path can revisit a node.
	std::vector<ExtNat> x(n, ExtNat(0));
	for (std::size_t i = 0; i < n; ++i)
		if (infinite[i])
			x[i] = ExtNat::infinity();
	for (std::size_t round = 0; round <= n + 1; ++round) {
		std::vector<ExtNat> y = x;
		for (std::size_t i = 0; i < n; ++i) {
			if (infinite[i])
				continue;
			ExtNat acc = base[i];
			for (std::size_t j = 0; j < n; ++j)
				acc = acc + coef[i][j] * x[j];
			y[i] = acc;
		}
		if (y == x)
			break;
		x = std::move(y);
	}

	std::map<std::string, DivergenceVerdict> out;
	for (std::size_t i = 0; i < n; ++i)
		out.emplace(vars[i], DivergenceVerdict{static_cast<bool>(infinite[i]), x[i]});
	return out;
}

ExactHook<ExtNat> natinf_linear_hook(std::size_t budget)
{
	ExactHook<ExtNat> hook;
	hook.budget = budget;
	hook.solve = [](const RegSys &s, const Env<ExtNat> &env) -> std::optional<Env<ExtNat>> {
		try {
			Env<ExtNat> out;
			for (const auto &[v, verdict] : divergence_certificate_linear(s, env))
				out.emplace(v, verdict.value);
			return out;
		} catch (const Error &e) {
			if (e.kind() == ErrorKind::NotLinear || e.kind() == ErrorKind::LinearUndefined)
				return std::nullopt;
			throw;
		}
	};
	return hook;
}

void WeightedDigraph::add_node(const std::string &n)
{
	if (!has_node(n))
		nodes_.push_back(n);
}

bool WeightedDigraph::has_node(const std::string &n) const
{
	return std::find(nodes_.begin(), nodes_.end(), n) != nodes_.end();
}

void WeightedDigraph::add_edge(const std::string &from, const std::string &to, std::uint64_t weight)
{
	add_node(from);
	add_node(to);
	auto key = std::make_pair(from, to);
	auto it = weight_.find(key);
	if (it == weight_.end())
		weight_.emplace(key, weight);
	else
		it->second = std::min(it->second, weight);
}

std::vector<WeightedDigraph::Edge> WeightedDigraph::edges() const
{
	std::vector<Edge> out;
	for (const auto &u : nodes_)
		for (const auto &v : nodes_)
			if (auto it = weight_.find({u, v}); it != weight_.end())
				out.push_back({u, v, it->second});
	return out;
}

WeightedDigraph parse_edge_list(const std::string &text)
{
	WeightedDigraph g;
	std::istringstream in(text);
	std::string line;
	std::size_t lineno = 0;
	while (std::getline(in, line)) {
		++lineno;
		if (auto hash = line.find('#'); hash != std::string::npos)
			line.erase(hash);
		std::istringstream ls(line);
		std::string u, v, w, extra;
		if (!(ls >> u))
			continue;
		if (!(ls >> v))
			throw Error(ErrorKind::Parse, std::to_string(lineno) + ":1: expected 'u v w' or a lone node");
		if (!(ls >> w) || (ls >> extra))
			throw Error(ErrorKind::Parse, std::to_string(lineno) + ":1: expected 'u v w'");
		ExtNat weight = parse_extnat(w);
		if (weight.is_inf())
			throw Error(ErrorKind::Parse, std::to_string(lineno) + ":1: edge weights must be finite");
		g.add_edge(u, v, weight.value());
	}
	return g;
}

std::pair<RegSys, Env<ExtNat>> graph_to_linear_system(const WeightedDigraph &g, const std::string &source,
						      const std::string &target)
{
	if (!g.has_node(source) || !g.has_node(target))
		throw Error(ErrorKind::Usage, "source and target must be nodes of the graph");
	const Signature sig = semiring_signature("sr");
	const SemiringProfile p = *sig.profile();
	const OpSymbol plus{p.plus, 2}, times{p.times, 2}, zero{p.zero, 0}, one{p.one, 0};

	std::vector<std::string> sysvars;
	std::map<std::string, std::string> var_of;
	for (const auto &n : g.nodes()) {
		var_of.emplace(n, "x_" + n);
		sysvars.push_back("x_" + n);
	}
	std::set<std::uint64_t> weights;
	std::map<std::string, std::vector<PartialTerm>> summands;
	for (const auto &e : g.edges()) {
		weights.insert(e.weight);
		summands[e.from].push_back(PartialTerm::app(
			times, {PartialTerm::var("w" + std::to_string(e.weight)), PartialTerm::var(var_of.at(e.to))}));
	}
	std::map<std::string, PartialTerm> defs;
	for (const auto &n : g.nodes()) {
		auto terms = summands[n];
		if (n == target)
			terms.push_back(PartialTerm::app(one));
		PartialTerm d = terms.empty() ? PartialTerm::app(zero) : terms.back();
		for (std::size_t i = terms.size(); i-- > 1;)
			d = PartialTerm::app(plus, {terms[i - 1], d});
		defs.emplace(var_of.at(n), d);
	}
	std::vector<std::string> gens;
	Env<ExtNat> env;
	for (auto w : weights) {
		gens.push_back("w" + std::to_string(w));
		env.emplace(gens.back(), ExtNat(w));
	}
	RegSys s(sig, sysvars, gens, std::move(defs), var_of.at(source), "paths");
	return {std::move(s), std::move(env)};
}

std::map<std::string, ExtNat> bellman_ford_oracle(const WeightedDigraph &g, const std::string &source)
{
	std::map<std::string, ExtNat> dist;
	for (const auto &n : g.nodes())
		dist[n] = ExtNat::infinity();
	dist[source] = ExtNat(0);
	const auto edges = g.edges();
	for (std::size_t round = 0; round + 1 < std::max<std::size_t>(g.nodes().size(), 1) + 1; ++round) {
		bool changed = false;
		for (const auto &e : edges) {
			if (dist[e.from].is_inf())
				continue;
			ExtNat cand = dist[e.from] + ExtNat(e.weight);
			if (cand < dist[e.to]) {
				dist[e.to] = cand;
				changed = true;
			}
		}
		if (!changed)
			break;
	}
	return dist;
}

} // namespace deltalg
