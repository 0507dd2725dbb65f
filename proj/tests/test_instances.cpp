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

#include "deltalg/lang_slice.hpp"
#include "deltalg/regsys_syntax.hpp"
#include "deltalg/regular_lang.hpp"
#include "deltalg/sampling.hpp"
#include "deltalg/semirings.hpp"

#include <random>
#include <stdexcept>

using namespace deltalg;
using testsupport::error_kind;

namespace {

const Signature kSr = semiring_signature();

RegSys sr_sys(const std::string &text) { return parse_system(text, {{"sr", kSr}}); }

WordSet slice_value(const RegSys &s, std::size_t bound)
{
	auto a = lang_slice_algebra(bound, alphabet_of(s));
	auto r = kleene_eval(s, a, letter_env(s, bound));
	REQUIRE(r.converged());
	return r.root_value();
}

// All-pairs distances by Floyd-Warshall.
std::map<std::string, ExtNat> floyd_from(const WeightedDigraph &g, const std::string &source)
{
	const auto &ns = g.nodes();
	std::map<std::pair<std::string, std::string>, ExtNat> d;
	for (const auto &u : ns)
		for (const auto &v : ns)
			d[{u, v}] = u == v ? ExtNat(0) : ExtNat::infinity();
	for (const auto &e : g.edges())
		d[{e.from, e.to}] = std::min(d[{e.from, e.to}], ExtNat(e.weight));
	for (const auto &k : ns)
		for (const auto &i : ns)
			for (const auto &j : ns)
				d[{i, j}] = std::min(d[{i, j}], d[{i, k}] + d[{k, j}]);
	std::map<std::string, ExtNat> out;
	for (const auto &v : ns)
		out[v] = d[{source, v}];
	return out;
}

} // namespace

TEST_CASE("extended naturals")
{
	CHECK(ExtNat(0) * ExtNat::infinity() == ExtNat(0));
	CHECK((ExtNat(3) + ExtNat::infinity()).is_inf());
	CHECK(ExtNat(3) * ExtNat(4) == ExtNat(12));
	CHECK_THROWS_AS(ExtNat(1ULL << 62) * ExtNat(8), std::overflow_error);
	CHECK(parse_extnat("inf").is_inf());
	CHECK(parse_extnat("∞").is_inf());
	CHECK(parse_extnat("42") == ExtNat(42));
	CHECK(to_string(ExtNat::infinity()) == "∞");
	CHECK(error_kind([] { parse_extnat("4x"); }) == ErrorKind::Parse);
}

TEST_CASE("word sets")
{
	CHECK(to_string(WordSet{}) == "∅");
	CHECK(to_string(WordSet{"", "ab", "aabb"}) == "ε ab aabb");
	CHECK(all_words("ab", 2).size() == 7);
	CHECK(concat_words({"a", "ab"}, {"b", ""}, 2) == WordSet{"a", "ab", "ab"});
	CHECK(truncate_words({"a", "abc"}, 2) == WordSet{"a"});
	CHECK(letter_of("eps").empty());
	CHECK(error_kind([] { letter_of("ab"); }) == ErrorKind::Usage);
	CHECK(letter_of("ab", {{"ab", "xy"}}) == "xy");
}

TEST_CASE("automata agree with word sets")
{
	std::mt19937_64 rng(21);
	const std::size_t L = 5;
	for (int n = 0; n < 60; ++n) {
		WordSet a, b;
		for (const auto &w : all_words("ab", 3)) {
			if (rng() % 4 == 0)
				a.insert(w);
			if (rng() % 4 == 0)
				b.insert(w);
		}
		Nfa na = Nfa::from_words(a), nb = Nfa::from_words(b);
		CHECK(regular_slice(na, L) == a);
		WordSet u = a;
		u.insert(b.begin(), b.end());
		CHECK(regular_slice(Nfa::unite(na, nb), L) == u);
		CHECK(regular_slice(Nfa::concat(na, nb), L) == concat_words(a, b, L));
		WordSet st{""}, power{""};
		for (std::size_t k = 0; k < L; ++k) {
			power = concat_words(power, a, L);
			st.insert(power.begin(), power.end());
		}
		CHECK(regular_slice(Nfa::star(na), L) == st);
		for (const auto &w : all_words("ab", L))
			CHECK(Nfa::star(na).accepts(w) == st.contains(w));
		CHECK(na.subset_of(Nfa::unite(na, nb)));
		CHECK(Nfa::star(na).equivalent(Nfa::star(Nfa::star(na))));
		CHECK(na.trim().equivalent(na));
	}
}

TEST_CASE("regular slice examples")
{
	CHECK(regular_slice(Nfa::empty(), 4).empty());
	CHECK(regular_slice(Nfa::epsilon(), 3) == WordSet{""});
	Nfa astar_b = Nfa::concat(Nfa::star(Nfa::word("a")), Nfa::word("b"));
	CHECK(regular_slice(astar_b, 2) == WordSet{"b", "ab"});
	CHECK(Nfa::empty().is_empty());
	CHECK_FALSE(astar_b.is_empty());
}

TEST_CASE("Arden elimination examples")
{
	RegSys s = sr_sys("sys s over sr vars {x} gens {a, b} root x { x = plus(times(a, x), b) }");
	auto sol = arden_solve_linear(s, letter_automata(s));
	CHECK(regular_slice(sol.at("x"), 3) == WordSet{"b", "ab", "aab"});

	RegSys z = sr_sys("sys s over sr vars {x} gens {b} root x { x = plus(times(zero, x), b) }");
	CHECK(regular_slice(arden_solve_linear(z, letter_automata(z)).at("x"), 6) == WordSet{"b"});

	RegSys two = sr_sys("sys s over sr vars {x, y} gens {a, b} root x { x = plus(times(a, y), one)  y = times(b, x) }");
	CHECK(regular_slice(arden_solve_linear(two, letter_automata(two)).at("x"), 4) == WordSet{"", "ab", "abab"});

	RegSys left = sr_sys("sys s over sr vars {x} gens {a, b} root x { x = plus(times(x, a), b) }");
	CHECK(regular_slice(arden_solve_linear(left, letter_automata(left)).at("x"), 3) ==
	      WordSet{"b", "ba", "baa"});

	RegSys anbn = sr_sys("sys s over sr vars {s} gens {a, b} root s { s = plus(times(a, times(s, b)), one) }");
	CHECK(error_kind([&] { arden_solve_linear(anbn, letter_automata(anbn)); }) == ErrorKind::NotLinear);
	CHECK(error_kind([&] { arden_solve_linear(s, {{"a", Nfa::word("a")}}); }) == ErrorKind::MissingBinding);
}

TEST_CASE("Arden solutions agree with slices and the grammar")
{
	std::mt19937_64 rng(22);
	for (int n = 0; n < 60; ++n) {
		LinearSide side = n % 2 ? LinearSide::Left : LinearSide::Right;
		RegSys s = random_linear_system({"a", "b"}, 1 + n % 3, rng, side);
		auto sol = arden_solve_linear(s, letter_automata(s));
		for (std::size_t L = 0; L <= 5; ++L) {
			WordSet arden = regular_slice(sol.at(s.root()), L);
			CHECK(arden == slice_value(s, L));
			CHECK(arden == cfg_slice_oracle(s, L));
		}
	}
}

TEST_CASE("grammar oracle examples")
{
	RegSys anbn = sr_sys("sys s over sr vars {s} gens {a, b} root s { s = plus(times(a, times(s, b)), one) }");
	CHECK(cfg_slice_oracle(anbn, 4) == WordSet{"", "ab", "aabb"});
	RegSys idle = sr_sys("sys s over sr vars {x} gens {} root x { x = x }");
	CHECK(cfg_slice_oracle(idle, 3).empty());
	RegSys a = sr_sys("sys s over sr vars {x} gens {a} root x { x = a }");
	CHECK(cfg_slice_oracle(a, 0).empty());
	CHECK(cfg_slice_oracle(a, 1) == WordSet{"a"});
	RegSys zero = sr_sys("sys s over sr vars {x} gens {a} root x { x = plus(times(zero, a), times(bot, a)) }");
	CHECK(cfg_slice_oracle(zero, 3).empty());

	const Signature fg("fg", {{"f", 1}});
	RegSys loop = parse_system("sys l over fg vars {x} gens {} root x { x = f(x) }", {{"fg", fg}});
	CHECK(error_kind([&] { cfg_slice_oracle(loop, 2); }) == ErrorKind::LinearUndefined);
}

TEST_CASE("grammar oracle agrees with slice evaluation")
{
	std::mt19937_64 rng(23);
	for (int n = 0; n < 60; ++n) {
		RegSys s = random_algebraic_system({"a", "b"}, 1 + n % 3, rng);
		for (std::size_t L = 0; L <= 6; ++L)
			CHECK(cfg_slice_oracle(s, L) == slice_value(s, L));
	}
}

TEST_CASE("concatenation distributes over the star in slices")
{
	// u a* v computed through the system equals the union of u a^n v
	RegSys s = sr_sys("sys s over sr vars {x, y} gens {a, u, v} root y {"
			  " x = plus(times(a, x), one)  y = times(u, times(x, v)) }");
	for (std::size_t L = 0; L <= 6; ++L) {
		WordSet expect;
		std::string mid;
		for (std::size_t n = 0; n + 2 <= L; ++n, mid += 'a')
			expect.insert("u" + mid + "v");
		CHECK(slice_value(s, L) == expect);
	}
}

TEST_CASE("divergence certificate examples")
{
	RegSys two = sr_sys("sys s over sr vars {x} gens {c, d} root x { x = plus(times(c, x), d) }");
	auto v = divergence_certificate_linear(two, {{"c", ExtNat(2)}, {"d", ExtNat(1)}});
	CHECK(v.at("x").infinite);
	CHECK(v.at("x").value.is_inf());
	v = divergence_certificate_linear(two, {{"c", ExtNat(0)}, {"d", ExtNat(5)}});
	CHECK_FALSE(v.at("x").infinite);
	CHECK(v.at("x").value == ExtNat(5));
	v = divergence_certificate_linear(two, {{"c", ExtNat(1)}, {"d", ExtNat(0)}});
	CHECK_FALSE(v.at("x").infinite);
	CHECK(v.at("x").value == ExtNat(0));
	CHECK(error_kind([&] { divergence_certificate_linear(two, {{"c", ExtNat(1)}}); }) == ErrorKind::MissingBinding);

	RegSys anbn = sr_sys("sys s over sr vars {s} gens {a, b} root s { s = plus(times(a, times(s, b)), one) }");
	CHECK(error_kind([&] { divergence_certificate_linear(anbn, {{"a", ExtNat(1)}, {"b", ExtNat(1)}}); }) ==
	      ErrorKind::NotLinear);
}

TEST_CASE("divergence certificate agrees with iteration")
{
	std::mt19937_64 rng(24);
	std::size_t infinite = 0, finite = 0;
	auto nat = natinf_algebra();
	for (int n = 0; n < 150; ++n) {
		auto [s, env] = random_natinf_linear_system(1 + n % 4, rng);
		auto cert = divergence_certificate_linear(s, env);
		auto shorter = kleene_eval(s, nat, env, SupStrategy<ExtNat>{CapAndFlag{1e6, 1000}});
		auto longer = kleene_eval(s, nat, env, SupStrategy<ExtNat>{CapAndFlag{1e6, 2000}});
		for (const auto &x : s.sysvars()) {
			const auto &oc = shorter.over_cap;
			const bool over = std::find(oc.begin(), oc.end(), x) != oc.end();
			if (cert.at(x).infinite) {
				// past the cap, or still climbing
				++infinite;
				CHECK_FALSE(shorter.converged());
				CHECK((over || shorter.values.at(x) < longer.values.at(x)));
			} else {
				++finite;
				CHECK_FALSE(over);
				CHECK(longer.values.at(x) == cert.at(x).value);
			}
		}
		auto hooked = kleene_eval(s, nat, env, SupStrategy<ExtNat>{natinf_linear_hook()});
		REQUIRE(hooked.converged());
		for (const auto &x : s.sysvars())
			CHECK(hooked.values.at(x) == cert.at(x).value);
	}
	CHECK(infinite > 0);
	CHECK(finite > 0);
}

TEST_CASE("shortest path examples")
{
	WeightedDigraph g = parse_edge_list("A B 2\nB C 3\n");
	auto [s, env] = graph_to_linear_system(g, "A", "C");
	CHECK(kleene_eval(s, tropical_algebra(), env).root_value() == ExtNat(5));
	auto [s2, env2] = graph_to_linear_system(g, "C", "A");
	CHECK(kleene_eval(s2, tropical_algebra(), env2).root_value().is_inf());

	WeightedDigraph one;
	one.add_node("A");
	CHECK(bellman_ford_oracle(one, "A") == std::map<std::string, ExtNat>{{"A", ExtNat(0)}});

	WeightedDigraph tri = parse_edge_list("# triangle\nA B 1\nB C 1\nA C 3\n");
	tri.add_node("D");
	auto bf = bellman_ford_oracle(tri, "A");
	CHECK(bf.at("C") == ExtNat(2));
	CHECK(bf.at("D").is_inf());

	WeightedDigraph self = parse_edge_list("A A 0\n");
	auto [s3, env3] = graph_to_linear_system(self, "A", "A");
	CHECK(kleene_eval(s3, tropical_algebra(), env3).root_value() == ExtNat(0));

	WeightedDigraph par = parse_edge_list("A B 4\nA B 1\n");
	CHECK(par.edges().size() == 1);
	CHECK(par.edges()[0].weight == 1);
}

TEST_CASE("shortest paths agree with relaxation oracles")
{
	std::mt19937_64 rng(25);
	for (int n = 0; n < 100; ++n) {
		WeightedDigraph g = random_digraph(2 + n % 6, 9, 0.35, rng);
		const std::string src = g.nodes().front();
		auto bf = bellman_ford_oracle(g, src);
		CHECK(bf == floyd_from(g, src));
		for (const auto &t : g.nodes()) {
			auto [s, env] = graph_to_linear_system(g, src, t);
			auto r = kleene_eval(s, tropical_algebra(), env);
			REQUIRE(r.converged());
			CHECK(r.root_value() == bf.at(t));
		}
	}
}
