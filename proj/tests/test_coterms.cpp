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

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "support.hpp"

#include "deltalg/regsys.hpp"
#include "deltalg/regsys_syntax.hpp"
#include "deltalg/sampling.hpp"
#include "deltalg/term_syntax.hpp"
#include "deltalg/workspace.hpp"

#include <functional>
#include <random>
#include <set>

using namespace deltalg;
using testsupport::error_kind;

namespace {

const Signature kFg("fg", {{"f", 1}, {"g", 2}});

Workspace fixtures()
{
	Workspace w;
	w.load(testsupport::read_fixture("coterms.dl"));
	w.load(testsupport::read_fixture("languages.dl"));
	return w;
}

RegSys sys(const std::string &text)
{
	return parse_system(text, {{"fg", kFg}});
}

// Unfolding by direct recursion on the equations.
PartialTerm expand(const RegSys &s, const PartialTerm &t, std::size_t d, std::set<std::string> chain = {})
{
	if (d == 0 || t.is_bottom())
		return PartialTerm::bottom();
	if (t.is_var()) {
		if (s.is_gen(t.label()))
			return t;
		if (chain.contains(t.label()))
			return PartialTerm::bottom();
		chain.insert(t.label());
		return expand(s, s.def(t.label()), d, chain);
	}
	std::vector<PartialTerm> kids;
	for (const auto &k : t.children())
		kids.push_back(expand(s, k, d - 1));
	return PartialTerm::app(t.op(), kids);
}

PartialTerm oracle_unfold(const RegSys &s, std::size_t d)
{
	return expand(s, PartialTerm::var(s.root()), d);
}

// Moore refinement on the disjoint union of both equation graphs.
bool partition_equal(const RegSys &a, const RegSys &b)
{
	FlatSystem fa = flatten(a), fb = flatten(b);
	std::vector<FlatSystem::Node> nodes = fa.nodes;
	const std::size_t off = nodes.size();
	for (auto n : fb.nodes) {
		for (auto &k : n.kids)
			k += off;
		nodes.push_back(n);
	}
	std::vector<std::size_t> cls(nodes.size());
	std::map<std::pair<int, std::string>, std::size_t> init;
	for (std::size_t i = 0; i < nodes.size(); ++i)
		cls[i] = init.emplace(std::pair{int(nodes[i].kind), nodes[i].label}, init.size()).first->second;
	for (std::size_t count = init.size();;) {
		std::map<std::vector<std::size_t>, std::size_t> sig;
		std::vector<std::size_t> next(nodes.size());
		for (std::size_t i = 0; i < nodes.size(); ++i) {
			std::vector<std::size_t> key{cls[i]};
			for (auto k : nodes[i].kids)
				key.push_back(cls[k]);
			next[i] = sig.emplace(key, sig.size()).first->second;
		}
		cls = std::move(next);
		if (sig.size() == count)
			break;
		count = sig.size();
	}
	return cls[fa.root] == cls[fb.root + off];
}

std::vector<RegSys> random_systems(std::size_t n, std::uint64_t seed)
{
	std::mt19937_64 rng(seed);
	std::vector<RegSys> out;
	for (std::size_t i = 0; i < n; ++i)
		out.push_back(random_system(kFg, {"a", "b"}, 1 + i % 3, rng, 2));
	return out;
}

} // namespace

TEST_CASE("unfold examples")
{
	Workspace w = fixtures();
	const RegSys &loop = w.system("loop");
	CHECK(unfold(loop, 0) == PartialTerm::bottom());
	CHECK(to_string(unfold(loop, 2)) == "f(f(bot))");
	CHECK(to_string(unfold(w.system("tree"), 3)) == "g(f(g(bot, bot)), a)");
	RegSys idle = sys("sys idle over fg vars {x, y} gens {} root x { x = y  y = x }");
	CHECK(unfold(idle, 5) == PartialTerm::bottom());
}

TEST_CASE("unfold agrees with recursive expansion")
{
	for (const auto &s : random_systems(150, 11))
		for (std::size_t d = 0; d <= 5; ++d)
			REQUIRE(unfold(s, d) == oracle_unfold(s, d));
}

TEST_CASE("approximant chains are increasing")
{
	for (const auto &s : random_systems(100, 12)) {
		auto chain = approximant_chain(s, 6);
		REQUIRE(chain.size() == 7);
		CHECK(chain.front() == PartialTerm::bottom());
		for (std::size_t i = 0; i + 1 < chain.size(); ++i) {
			CHECK(leq_syn(chain[i], chain[i + 1]));
			CHECK(truncate(chain[i + 1], i) == chain[i]);
		}
	}
}

TEST_CASE("approximates matches the unfolding order")
{
	Workspace w = fixtures();
	const RegSys &loop = w.system("loop");
	CHECK(approximates(build(kFg, "f(f(bot))"), loop));
	CHECK_FALSE(approximates(build(kFg, "g(bot, bot)"), loop));
	CHECK(error_kind([&] { approximates(build(Signature("o", {{"h", 1}}), "h(bot)"), loop); }) ==
	      ErrorKind::SignatureMismatch);

	std::mt19937_64 rng(13);
	for (const auto &s : random_systems(60, 14)) {
		for (const auto &t : enumerate_below(unfold(s, 3), 20000))
			CHECK(approximates(t, s));
		for (int k = 0; k < 20; ++k) {
			PartialTerm t = random_term(kFg, {"a", "b"}, 3, rng, 0.3);
			CHECK(approximates(t, s) == leq_syn(t, unfold(s, t.depth())));
		}
	}
}

TEST_CASE("of_term denotes the term itself")
{
	PartialTerm t = build(kFg, "g(f(a), bot)");
	RegSys s = of_term(t, {"a"}, kFg);
	CHECK(unfold(s, 10) == t);
	CHECK(classify(s) == SysClass::Finite);
	CHECK(error_kind([&] { of_term(t, {}, kFg); }) == ErrorKind::InvalidSystem);
}

TEST_CASE("bisimulation examples")
{
	Workspace w = fixtures();
	CHECK(bisim_equal(w.system("loop"), w.system("loop2")));
	BisimResult r = bisim_compare(w.system("fa"), w.system("fb"));
	CHECK_FALSE(r.equal);
	REQUIRE(r.witness_depth.has_value());
	CHECK(*r.witness_depth == 1);
	RegSys other = sys("sys o over fg vars {x} gens {} root x { x = f(f(x)) }");
	CHECK(bisim_equal(w.system("loop"), other));
	CHECK(error_kind([&] { bisim_compare(w.system("loop"), w.system("astar_b")); }) ==
	      ErrorKind::SignatureMismatch);
}

TEST_CASE("bisimulation agrees with unfolding")
{
	auto pool = random_systems(80, 15);
	std::size_t equal = 0, distinct = 0;
	for (std::size_t i = 0; i < pool.size(); ++i)
		for (std::size_t j = i; j < pool.size(); j += 7) {
			const RegSys &a = pool[i], &b = pool[j];
			BisimResult r = bisim_compare(a, b);
			CHECK(r.equal == partition_equal(a, b));
			if (r.equal) {
				++equal;
				CHECK(unfold(a, 6) == unfold(b, 6));
			} else {
				++distinct;
				REQUIRE(r.witness_depth.has_value());
				std::size_t k = *r.witness_depth;
				CHECK(unfold(a, k) == unfold(b, k));
				CHECK(unfold(a, k + 1) != unfold(b, k + 1));
			}
		}
	CHECK(equal > 0);
	CHECK(distinct > 0);
}

TEST_CASE("duplicating equations preserves the coterm")
{
	std::mt19937_64 rng(16);
	for (const auto &s : random_systems(100, 17)) {
		// every variable gets a primed copy; the root is rewired to the copy
		std::vector<std::string> vars = s.sysvars();
		std::map<std::string, PartialTerm> defs = s.defs();
		Substitution prime;
		for (const auto &x : s.sysvars())
			prime.emplace(x, PartialTerm::var(x + "_c"));
		for (const auto &x : s.sysvars()) {
			vars.push_back(x + "_c");
			defs.emplace(x + "_c", subst(s.def(x), prime));
		}
		RegSys dup(s.sig(), vars, s.gens(), defs, s.root() + "_c");
		CHECK(bisim_equal(s, dup));
	}
}

TEST_CASE("substitution of systems")
{
	Workspace w = fixtures();
	RegSys fa = w.system("fa");
	std::map<std::string, RegSys> tau{{"a", w.system("loop")}};
	RegSys s = subst_sys(fa, tau);
	CHECK(to_string(unfold(s, 3)) == "f(f(f(bot)))");
	CHECK(std::set<std::string>(s.gens().begin(), s.gens().end()).contains("b"));
	CHECK(error_kind([&] { subst_sys(fa, tau, SubstMode::Strict); }) == ErrorKind::MissingBinding);

	std::mt19937_64 rng(18);
	auto pool = random_systems(120, 19);
	for (std::size_t i = 0; i < pool.size(); ++i) {
		const RegSys &base = pool[i];
		std::map<std::string, RegSys> images{{"a", pool[(i + 1) % pool.size()]},
						     {"b", pool[(i + 5) % pool.size()]}};
		RegSys out = subst_sys(base, images);
		for (std::size_t d = 0; d <= 5; ++d) {
			Substitution sigma{{"a", unfold(images.at("a"), d)}, {"b", unfold(images.at("b"), d)}};
			CHECK(unfold(out, d) == truncate(subst(unfold(base, d), sigma), d));
		}
	}
}

TEST_CASE("renaming generators")
{
	Workspace w = fixtures();
	RegSys r = rename(w.system("fa"), {{"a", "c"}});
	CHECK(to_string(unfold(r, 3)) == "f(c)");
	CHECK(error_kind([&] { rename(w.system("fa"), {{"a", "b"}}); }) == ErrorKind::NameClash);
	CHECK(error_kind([&] { rename(w.system("fa"), {{"a", "x"}}); }) == ErrorKind::NameClash);
	CHECK(error_kind([&] { rename(w.system("fa"), {{"a", "g"}}); }) == ErrorKind::NameClash);

	for (const auto &s : random_systems(50, 20)) {
		RegSys t = rename(s, {{"a", "u"}, {"b", "v"}});
		Substitution back{{"u", PartialTerm::var("a")}, {"v", PartialTerm::var("b")}};
		CHECK(subst(unfold(t, 5), back) == unfold(s, 5));
	}
}

TEST_CASE("classification")
{
	Workspace w = fixtures();
	CHECK(classify(w.system("fa")) == SysClass::Finite);
	CHECK(classify(w.system("astar_b")) == SysClass::Linear);
	CHECK(classify(w.system("ab_star_c")) == SysClass::Linear);
	CHECK(classify(w.system("anbn")) == SysClass::Algebraic);
	CHECK(classify(w.system("balanced")) == SysClass::Algebraic);
	CHECK(classify(w.system("astar_b"), LinearSide::Left) == SysClass::Algebraic);
	CHECK(error_kind([&] { classify(w.system("loop")); }) == ErrorKind::LinearUndefined);
	CHECK(error_kind([&] { linear_form(w.system("anbn")); }) == ErrorKind::NotLinear);

	LinearForm lf = linear_form(w.system("astar_b"));
	REQUIRE(lf.at("x").size() == 2);
	CHECK(lf.at("x")[0].var == std::optional<std::string>("x"));
	CHECK_FALSE(lf.at("x")[1].var.has_value());
}

TEST_CASE("validation of systems")
{
	CHECK(error_kind([] { sys("sys s over fg vars {x} gens {} root x { x = f(y) }"); }) ==
	      ErrorKind::InvalidSystem);
	CHECK(error_kind([] { sys("sys s over fg vars {x} gens {x} root x { x = f(x) }"); }) ==
	      ErrorKind::InvalidSystem);
	CHECK(error_kind([] { sys("sys s over fg vars {x} gens {} root y { x = f(x) }"); }) ==
	      ErrorKind::InvalidSystem);
	CHECK(error_kind([] { sys("sys s over fg vars {x} gens {} root x { x = f(x, x) }"); }) ==
	      ErrorKind::ArityMismatch);
}

TEST_CASE("systems print and parse back")
{
	Workspace w = fixtures();
	for (const char *n : {"loop", "loop2", "fa", "tree", "astar_b", "anbn", "balanced", "ab_star_c"}) {
		const RegSys &s = w.system(n);
		std::map<std::string, Signature> sigs{{s.sig().name(), s.sig()}};
		CHECK(parse_system(to_string(s), sigs) == s);
	}
	for (const auto &s : random_systems(100, 21))
		CHECK(parse_system(to_string(s), {{"fg", kFg}}) == s);
}
