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

#include "deltalg/regsys.hpp"

#include "deltalg/error.hpp"

#include <algorithm>
#include <cctype>
#include <deque>
#include <functional>
#include <tuple>
#include <utility>

namespace deltalg {

namespace {

bool valid_identifier(const std::string &s)
{
	if (s.empty() || !(std::isalpha(static_cast<unsigned char>(s[0])) || s[0] == '_'))
		return false;
	return std::all_of(s.begin(), s.end(), [](char c) {
		return std::isalnum(static_cast<unsigned char>(c)) || c == '_';
	});
}

std::string fresh_name(const std::string &base, const std::set<std::string> &used)
{
	if (!used.contains(base))
		return base;
	for (std::size_t i = 1;; ++i) {
		std::string cand = base + "_" + std::to_string(i);
		if (!used.contains(cand))
			return cand;
	}
}

} // namespace

RegSys::RegSys(Signature sig, std::vector<std::string> sysvars, std::vector<std::string> gens,
	       std::map<std::string, PartialTerm> defs, std::string root, std::string name)
	: sig_(std::move(sig)), sysvars_(std::move(sysvars)), gens_(std::move(gens)),
	  defs_(std::move(defs)), root_(std::move(root)), name_(std::move(name))
{
	auto bad = [&](const std::string &msg) {
		throw Error(ErrorKind::InvalidSystem, "system '" + name_ + "': " + msg);
	};
	if (sysvars_.empty())
		bad("no system variables");
	std::set<std::string> seen;
	for (const auto &v : sysvars_) {
		if (!valid_identifier(v) || v == "bot")
			bad("invalid variable name '" + v + "'");
		if (!seen.insert(v).second)
			bad("duplicate system variable '" + v + "'");
		if (sig_.contains(v))
			bad("variable '" + v + "' is also an operation symbol");
	}
	for (const auto &g : gens_) {
		if (!valid_identifier(g) || g == "bot")
			bad("invalid generator name '" + g + "'");
		if (seen.contains(g))
			bad("generator '" + g + "' is also a system variable");
		if (sig_.contains(g))
			bad("generator '" + g + "' is also an operation symbol");
		if (!gen_set_.insert(g).second)
			bad("duplicate generator '" + g + "'");
	}
	if (defs_.size() != sysvars_.size())
		bad("every system variable needs exactly one definition");
	for (const auto &v : sysvars_) {
		auto it = defs_.find(v);
		if (it == defs_.end())
			bad("no definition for '" + v + "'");
		check_signature(it->second, sig_);
		for (const auto &leaf : variables(it->second))
			if (!seen.contains(leaf) && !gen_set_.contains(leaf))
				bad("definition of '" + v + "' mentions undeclared '" + leaf + "'");
	}
	if (!seen.contains(root_))
		bad("root '" + root_ + "' is not a system variable");
}

const PartialTerm &RegSys::def(const std::string &sysvar) const
{
	auto it = defs_.find(sysvar);
	if (it == defs_.end())
		throw Error(ErrorKind::InvalidSystem, "'" + sysvar + "' is not a system variable of '" + name_ + "'");
	return it->second;
}

std::optional<SemiringProfile> RegSys::profile() const
{
	return profile_ ? profile_ : sig_.profile();
}

RegSys RegSys::with_profile(SemiringProfile p) const
{
	Signature probe = sig_;
	probe.set_profile(p);
	RegSys out = *this;
	out.profile_ = std::move(p);
	return out;
}

RegSys RegSys::with_name(std::string name) const
{
	RegSys out = *this;
	out.name_ = std::move(name);
	return out;
}

RegSys RegSys::with_root(std::string root) const
{
	return RegSys(sig_, sysvars_, gens_, defs_, std::move(root), name_);
}

bool operator==(const RegSys &a, const RegSys &b)
{
	return a.name_ == b.name_ && a.sig_ == b.sig_ && a.sysvars_ == b.sysvars_ &&
	       a.gens_ == b.gens_ && a.defs_ == b.defs_ && a.root_ == b.root_ &&
	       a.profile_ == b.profile_;
}

FlatSystem flatten(const RegSys &s)
{
	FlatSystem flat;
	using Kind = FlatSystem::Node::Kind;
	std::optional<std::size_t> bottom;
	std::map<std::string, std::size_t> gen_node;

	auto bottom_node = [&]() {
		if (!bottom) {
			bottom = flat.nodes.size();
			flat.nodes.push_back({Kind::Bottom, "", {}});
		}
		return *bottom;
	};
	auto gen = [&](const std::string &g) {
		auto it = gen_node.find(g);
		if (it != gen_node.end())
			return it->second;
		std::size_t id = flat.nodes.size();
		flat.nodes.push_back({Kind::Gen, g, {}});
		gen_node.emplace(g, id);
		return id;
	};

	// Chase variable-to-variable chains to the equation that produces a node.
	std::map<std::string, std::optional<std::string>> chain_end;
	for (const auto &v : s.sysvars()) {
		std::set<std::string> visiting;
		std::string cur = v;
		std::optional<std::string> end;
		for (;;) {
			if (!visiting.insert(cur).second)
				break;
			const PartialTerm &d = s.def(cur);
			if (d.is_var() && s.is_sysvar(d.label())) {
				cur = d.label();
				continue;
			}
			end = cur;
			break;
		}
		chain_end.emplace(v, end);
	}

	// One node per equation whose right-hand side is an application.
	std::map<std::string, std::size_t> app_node;
	for (const auto &v : s.sysvars()) {
		if (chain_end[v] != v || !s.def(v).is_app())
			continue;
		app_node.emplace(v, flat.nodes.size());
		flat.nodes.push_back({Kind::App, s.def(v).label(), {}});
	}

	std::function<std::size_t(const std::string &)> var_target = [&](const std::string &v) -> std::size_t {
		const auto &end = chain_end.at(v);
		if (!end)
			return bottom_node();
		const PartialTerm &d = s.def(*end);
		if (d.is_bottom())
			return bottom_node();
		if (d.is_var())
			return gen(d.label());
		return app_node.at(*end);
	};

	std::function<std::size_t(const PartialTerm &)> build = [&](const PartialTerm &t) -> std::size_t {
		switch (t.kind()) {
		case PartialTerm::Kind::Bottom:
			return bottom_node();
		case PartialTerm::Kind::Var:
			return s.is_sysvar(t.label()) ? var_target(t.label()) : gen(t.label());
		case PartialTerm::Kind::App:
			break;
		}
		std::size_t id = flat.nodes.size();
		flat.nodes.push_back({Kind::App, t.label(), {}});
		std::vector<std::size_t> kids;
		for (const auto &k : t.children())
			kids.push_back(build(k));
		flat.nodes[id].kids = std::move(kids);
		return id;
	};

	for (const auto &[v, id] : app_node) {
		std::vector<std::size_t> kids;
		for (const auto &k : s.def(v).children())
			kids.push_back(build(k));
		flat.nodes[id].kids = std::move(kids);
	}
	for (const auto &v : s.sysvars())
		flat.var_node.emplace(v, var_target(v));
	flat.root = flat.var_node.at(s.root());
	return flat;
}

RegSys of_term(const PartialTerm &t, const std::vector<std::string> &gens, const Signature &sig)
{
	std::set<std::string> gen_set(gens.begin(), gens.end());
	for (const auto &v : variables(t))
		if (!gen_set.contains(v))
			throw Error(ErrorKind::InvalidSystem,
				    "variable '" + v + "' of the term is not a declared generator");
	std::string x = fresh_name("x0", gen_set);
	return RegSys(sig, {x}, gens, {{x, t}}, x, "term");
}

PartialTerm unfold(const RegSys &s, std::size_t depth)
{
	std::map<std::pair<std::string, std::size_t>, PartialTerm> memo;
	std::function<PartialTerm(const PartialTerm &, std::size_t, std::set<std::string> &)> expand;
	expand = [&](const PartialTerm &t, std::size_t d, std::set<std::string> &chain) -> PartialTerm {
		if (d == 0 || t.is_bottom())
			return PartialTerm::bottom();
		if (t.is_var()) {
			if (!s.is_sysvar(t.label()))
				return t;
			const std::string &y = t.label();
			if (auto it = memo.find({y, d}); it != memo.end())
				return it->second;
			if (!chain.insert(y).second)
				return PartialTerm::bottom();
			PartialTerm r = expand(s.def(y), d, chain);
			chain.erase(y);
			memo.emplace(std::make_pair(y, d), r);
			return r;
		}
		std::vector<PartialTerm> kids;
		kids.reserve(t.arity());
		for (const auto &k : t.children()) {
			std::set<std::string> fresh;
			kids.push_back(expand(k, d - 1, fresh));
		}
		return PartialTerm::app(t.op(), std::move(kids));
	};
	std::set<std::string> chain;
	return expand(PartialTerm::var(s.root()), depth, chain);
}

bool approximates(const PartialTerm &t, const RegSys &sys)
{
	check_signature(t, sys.sig());
	const FlatSystem flat = flatten(sys);
	using Kind = FlatSystem::Node::Kind;
	std::function<bool(const PartialTerm &, std::size_t)> go = [&](const PartialTerm &u, std::size_t n) {
		if (u.is_bottom())
			return true;
		const auto &node = flat.nodes[n];
		if (u.is_var())
			return node.kind == Kind::Gen && node.label == u.label();
		if (node.kind != Kind::App || node.label != u.label() || node.kids.size() != u.arity())
			return false;
		for (std::size_t i = 0; i < u.arity(); ++i)
			if (!go(u.child(i), node.kids[i]))
				return false;
		return true;
	};
	return go(t, flat.root);
}

std::vector<PartialTerm> approximant_chain(const RegSys &s, std::size_t depth)
{
	std::vector<PartialTerm> out;
	out.reserve(depth + 1);
	for (std::size_t d = 0; d <= depth; ++d)
		out.push_back(unfold(s, d));
	return out;
}

BisimResult bisim_compare(const RegSys &a, const RegSys &b)
{
	if (!a.sig().same_symbols(b.sig()))
		throw Error(ErrorKind::SignatureMismatch, "systems '" + a.name() + "' and '" + b.name() +
								  "' use different signatures");
	const FlatSystem fa = flatten(a);
	const FlatSystem fb = flatten(b);
	BisimResult res;
	std::set<std::pair<std::size_t, std::size_t>> seen;
	std::deque<std::tuple<std::size_t, std::size_t, std::size_t>> queue;
	queue.emplace_back(fa.root, fb.root, 0);
	seen.emplace(fa.root, fb.root);
	while (!queue.empty()) {
		auto [x, y, depth] = queue.front();
		queue.pop_front();
		++res.pairs_explored;
		const auto &nx = fa.nodes[x];
		const auto &ny = fb.nodes[y];
		if (nx.kind != ny.kind || nx.label != ny.label || nx.kids.size() != ny.kids.size()) {
			res.equal = false;
			res.witness_depth = depth;
			return res;
		}
		for (std::size_t i = 0; i < nx.kids.size(); ++i)
			if (seen.emplace(nx.kids[i], ny.kids[i]).second)
				queue.emplace_back(nx.kids[i], ny.kids[i], depth + 1);
	}
	res.equal = true;
	return res;
}

RegSys subst_sys(const RegSys &s, const std::map<std::string, RegSys> &tau, SubstMode mode)
{
	std::vector<std::string> gens;
	std::set<std::string> gen_set;
	auto add_gen = [&](const std::string &g) {
		if (gen_set.insert(g).second)
			gens.push_back(g);
	};
	std::vector<std::string> mapped;
	for (const auto &g : s.gens()) {
		auto it = tau.find(g);
		if (it == tau.end()) {
			if (mode == SubstMode::Strict)
				throw Error(ErrorKind::MissingBinding,
					    "generator '" + g + "' of '" + s.name() + "' has no image");
			add_gen(g);
			continue;
		}
		if (!it->second.sig().same_symbols(s.sig()))
			throw Error(ErrorKind::SignatureMismatch,
				    "image of '" + g + "' uses a different signature");
		mapped.push_back(g);
		for (const auto &h : it->second.gens())
			add_gen(h);
	}

	std::set<std::string> used = gen_set;
	for (const auto &op : s.sig().ops())
		used.insert(op.name);

	std::vector<std::string> sysvars;
	std::map<std::string, PartialTerm> defs;

	Substitution outer;
	for (const auto &v : s.sysvars()) {
		std::string n = fresh_name(v, used);
		used.insert(n);
		sysvars.push_back(n);
		outer.emplace(v, PartialTerm::var(n));
	}
	for (const auto &g : mapped) {
		const RegSys &img = tau.at(g);
		Substitution inner;
		for (const auto &v : img.sysvars()) {
			std::string n = fresh_name(g + "_" + v, used);
			used.insert(n);
			sysvars.push_back(n);
			inner.emplace(v, PartialTerm::var(n));
		}
		for (const auto &v : img.sysvars())
			defs.emplace(inner.at(v).label(), subst(img.def(v), inner));
		outer.emplace(g, inner.at(img.root()));
	}
	for (const auto &v : s.sysvars())
		defs.emplace(outer.at(v).label(), subst(s.def(v), outer));
	RegSys out(s.sig(), std::move(sysvars), std::move(gens), std::move(defs),
		   outer.at(s.root()).label(), s.name());
	if (s.declares_profile())
		out = out.with_profile(*s.profile());
	return out;
}

RegSys rename(const RegSys &s, const std::map<std::string, std::string> &h)
{
	std::vector<std::string> gens;
	std::set<std::string> taken;
	Substitution sigma;
	for (const auto &g : s.gens()) {
		auto it = h.find(g);
		const std::string &n = it == h.end() ? g : it->second;
		if (!taken.insert(n).second)
			throw Error(ErrorKind::NameClash, "renaming is not injective: two generators map to '" + n + "'");
		if (s.is_sysvar(n) || s.sig().contains(n))
			throw Error(ErrorKind::NameClash, "renaming '" + g + "' to '" + n + "' clashes with an existing name");
		gens.push_back(n);
		if (n != g)
			sigma.emplace(g, PartialTerm::var(n));
	}
	std::map<std::string, PartialTerm> defs;
	for (const auto &[v, d] : s.defs())
		defs.emplace(v, subst(d, sigma));
	RegSys out(s.sig(), s.sysvars(), std::move(gens), std::move(defs), s.root(), s.name());
	if (s.declares_profile())
		out = out.with_profile(*s.profile());
	return out;
}

const char *to_string(SysClass c) noexcept
{
	switch (c) {
	case SysClass::Finite: return "finite";
	case SysClass::Linear: return "linear";
	case SysClass::Algebraic: return "algebraic";
	}
	return "?";
}

namespace {

bool has_cycle(const RegSys &s)
{
	std::map<std::string, int> state; // 0 new, 1 on stack, 2 done
	std::function<bool(const std::string &)> dfs = [&](const std::string &v) {
		state[v] = 1;
		for (const auto &w : variables(s.def(v))) {
			if (!s.is_sysvar(w))
				continue;
			int st = state[w];
			if (st == 1 || (st == 0 && dfs(w)))
				return true;
		}
		state[v] = 2;
		return false;
	};
	for (const auto &v : s.sysvars())
		if (state[v] == 0 && dfs(v))
			return true;
	return false;
}

} // namespace

LinearForm linear_form(const RegSys &s, LinearSide side)
{
	const auto profile = s.profile();
	if (!profile)
		throw Error(ErrorKind::LinearUndefined,
			    "system '" + s.name() + "' has no semiring profile; linearity is undefined");
	const SemiringProfile &p = *profile;
	auto not_linear = [&](const std::string &v, const std::string &why) {
		throw Error(ErrorKind::NotLinear, "definition of '" + v + "' is not linear: " + why);
	};

	LinearForm form;
	for (const auto &v : s.sysvars()) {
		std::vector<LinearSummand> sums;
		std::function<void(const PartialTerm &, std::vector<PartialTerm> &)> product =
			[&](const PartialTerm &t, std::vector<PartialTerm> &leaves) {
				if (t.is_app() && t.label() == p.times) {
					product(t.child(0), leaves);
					product(t.child(1), leaves);
				} else if (t.is_app() && t.label() == p.plus) {
					not_linear(v, "a sum nested inside a product");
				} else if (t.is_app() && t.label() != p.zero && t.label() != p.one) {
					not_linear(v, "operation '" + t.label() + "' outside the semiring profile");
				} else {
					leaves.push_back(t);
				}
			};
		std::function<void(const PartialTerm &)> sum = [&](const PartialTerm &t) {
			if (t.is_app() && t.label() == p.plus) {
				sum(t.child(0));
				sum(t.child(1));
				return;
			}
			std::vector<PartialTerm> leaves;
			product(t, leaves);
			LinearSummand m;
			for (std::size_t i = 0; i < leaves.size(); ++i) {
				const PartialTerm &leaf = leaves[i];
				if (!(leaf.is_var() && s.is_sysvar(leaf.label()))) {
					m.factors.push_back(leaf);
					continue;
				}
				if (m.var)
					not_linear(v, "a product with two system variables");
				bool edge = side == LinearSide::Right ? i + 1 == leaves.size() : i == 0;
				if (!edge)
					not_linear(v, std::string("system variable '") + leaf.label() + "' is not " +
							      (side == LinearSide::Right ? "rightmost" : "leftmost"));
				m.var = leaf.label();
			}
			sums.push_back(std::move(m));
		};
		sum(s.def(v));
		form.emplace(v, std::move(sums));
	}
	return form;
}

SysClass classify(const RegSys &s, LinearSide side)
{
	if (!has_cycle(s))
		return SysClass::Finite;
	try {
		linear_form(s, side);
		return SysClass::Linear;
	} catch (const Error &e) {
		if (e.kind() == ErrorKind::NotLinear)
			return SysClass::Algebraic;
		throw;
	}
}

std::vector<std::string> reachable_sysvars(const RegSys &s)
{
	std::set<std::string> seen{s.root()};
	std::deque<std::string> work{s.root()};
	while (!work.empty()) {
		std::string v = work.front();
		work.pop_front();
		for (const auto &w : variables(s.def(v)))
			if (s.is_sysvar(w) && seen.insert(w).second)
				work.push_back(w);
	}
	std::vector<std::string> out;
	for (const auto &v : s.sysvars())
		if (seen.contains(v))
			out.push_back(v);
	return out;
}

} // namespace deltalg
