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

#include "deltalg/algebra.hpp"
#include "deltalg/finite_algebra.hpp"
#include "deltalg/lang_slice.hpp"
#include "deltalg/regsys_syntax.hpp"
#include "deltalg/sampling.hpp"
#include "deltalg/semirings.hpp"
#include "deltalg/term_syntax.hpp"

#include <random>

using namespace deltalg;
using testsupport::error_kind;

namespace {

const Signature kFg("fg", {{"f", 1}, {"g", 2}});
const Signature kSr = semiring_signature();

FiniteAlgebra chain3()
{
	return chain_algebra(3, kFg, {{"f", {1, 2, 2}}, {"g", {0, 1, 2, 1, 1, 2, 2, 2, 2}}});
}

RegSys fg_sys(const std::string &text) { return parse_system(text, {{"fg", kFg}}); }
RegSys sr_sys(const std::string &text) { return parse_system(text, {{"sr", kSr}}); }

// Least fixpoint by trying every assignment of the system variables.
Env<std::size_t> brute_lfp(const RegSys &s, const FiniteAlgebra &a, const Env<std::size_t> &env)
{
	auto spec = a.spec();
	const auto &vars = s.sysvars();
	std::vector<std::size_t> pick(vars.size(), 0);
	std::vector<Env<std::size_t>> fix;
	for (;;) {
		Env<std::size_t> vals;
		for (std::size_t i = 0; i < vars.size(); ++i)
			vals.emplace(vars[i], pick[i]);
		if (system_step(s, spec, env, vals) == vals)
			fix.push_back(vals);
		std::size_t i = 0;
		while (i < pick.size() && ++pick[i] == a.size())
			pick[i++] = 0;
		if (i == pick.size())
			break;
	}
	for (const auto &c : fix) {
		bool least = true;
		for (const auto &d : fix)
			for (const auto &x : vars)
				least = least && a.leq(c.at(x), d.at(x));
		if (least)
			return c;
	}
	FAIL("no least fixpoint");
	return {};
}

} // namespace

TEST_CASE("kleene_eval examples")
{
	const Signature f1("s", {{"f", 1}});
	FiniteAlgebra two = chain_algebra(2, f1, {{"f", {0, 1}}});
	RegSys loop = parse_system("sys l over s vars {x} gens {} root x { x = f(x) }", {{"s", f1}});
	auto r = kleene_eval(loop, two.spec(), {});
	CHECK(r.converged());
	CHECK(r.root_value() == two.bottom());
	CHECK(r.iterations == 1);

	RegSys ab = sr_sys("sys t over sr vars {x} gens {a, b} root x { x = plus(times(a, x), b) }");
	auto trop = kleene_eval(ab, tropical_algebra(), {{"a", ExtNat(1)}, {"b", ExtNat(0)}});
	CHECK(trop.converged());
	CHECK(trop.root_value() == ExtNat(0));

	RegSys tiny = sr_sys("sys t over sr vars {x} gens {} root x { x = plus(x, one) }");
	auto capped = kleene_eval(tiny, natinf_algebra(), {}, SupStrategy<ExtNat>{CapAndFlag{100}});
	CHECK_FALSE(capped.converged());
	CHECK(capped.has_flag(EvalFlag::CapExceeded));
	CHECK(capped.over_cap == std::vector<std::string>{"x"});
	CHECK(capped.root_value() == ExtNat(100));

	auto exact = kleene_eval(tiny, natinf_algebra(), {}, SupStrategy<ExtNat>{natinf_linear_hook()});
	CHECK(exact.converged());
	CHECK(exact.certified);
	CHECK(exact.root_value().is_inf());

	auto budget = kleene_eval(tiny, natinf_algebra(), {}, SupStrategy<ExtNat>{StabilizeWithin{50}});
	CHECK_FALSE(budget.converged());
	CHECK(budget.has_flag(EvalFlag::BudgetExhausted));

	RegSys growth = sr_sys("sys g over sr vars {x} gens {} root x { x = plus(plus(x, x), one) }");
	auto wide = kleene_eval(growth, natinf_algebra(), {}, SupStrategy<ExtNat>{StabilizeWithin{100000}});
	CHECK_FALSE(wide.converged());
	CHECK(wide.has_flag(EvalFlag::Overflow));
	CHECK(wide.iterations < 200);
	auto hooked = kleene_eval(growth, natinf_algebra(), {}, SupStrategy<ExtNat>{natinf_linear_hook(100000)});
	CHECK(hooked.certified);
	CHECK(hooked.root_value().is_inf());

	CHECK(error_kind([&] { kleene_eval(ab, tropical_algebra(), {{"a", ExtNat(1)}}); }) ==
	      ErrorKind::MissingBinding);
}

TEST_CASE("kleene_eval finds the least fixpoint")
{
	FiniteAlgebra a = chain3();
	auto spec = a.spec();
	std::mt19937_64 rng(5);
	for (int n = 0; n < 300; ++n) {
		RegSys s = random_system(kFg, {"u"}, 1 + n % 3, rng, 2);
		Env<std::size_t> env{{"u", std::size_t(n % 3)}};
		auto r = kleene_eval(s, spec, env);
		REQUIRE(r.converged());
		CHECK(r.values == brute_lfp(s, a, env));
	}
}

TEST_CASE("approximants increase to the least fixpoint")
{
	CHECK(approx_eval(sr_sys("sys t over sr vars {x} gens {} root x { x = plus(x, one) }"), tropical_algebra(),
			  {}, 0)
		      .is_inf());
	RegSys ab = sr_sys("sys t over sr vars {x} gens {a, b} root x { x = plus(times(a, x), b) }");
	Env<ExtNat> env{{"a", ExtNat(1)}, {"b", ExtNat(0)}};
	// plus sits at depth 0 and b at depth 1, so b first counts at d = 2
	CHECK(approx_eval(ab, tropical_algebra(), env, 1).is_inf());
	CHECK(approx_eval(ab, tropical_algebra(), env, 2) == ExtNat(0));

	FiniteAlgebra a = chain3();
	auto spec = a.spec();
	std::mt19937_64 rng(6);
	for (int n = 0; n < 200; ++n) {
		RegSys s = random_system(kFg, {"u"}, 1 + n % 3, rng, 2);
		Env<std::size_t> env{{"u", std::size_t(n % 2)}};
		const std::size_t lfp = kleene_eval(s, spec, env).root_value();
		std::size_t prev = a.bottom();
		for (std::size_t d = 0; d <= 12; ++d) {
			std::size_t v = approx_eval(s, spec, env, d);
			CHECK(a.leq(prev, v));
			CHECK(a.leq(v, lfp));
			prev = v;
		}
		CHECK(prev == lfp);
	}
}

TEST_CASE("approx_eval evaluates the unfolded approximant")
{
	std::mt19937_64 rng(7);
	FiniteAlgebra a = chain3();
	auto trop = tropical_algebra();
	auto slice = lang_slice_algebra(3, "ab");
	for (int n = 0; n < 150; ++n) {
		RegSys s = random_system(kFg, {"u"}, 1 + n % 4, rng, 2);
		RegSys t = random_system(kSr, {"a", "b"}, 1 + n % 4, rng, 2);
		Env<ExtNat> te{{"a", ExtNat(n % 3)}, {"b", ExtNat(1)}};
		Env<WordSet> se{{"a", WordSet{"a"}}, {"b", WordSet{"b"}}};
		for (std::size_t d = 0; d <= 6; ++d) {
			Env<std::size_t> env{{"u", std::size_t(n % 3)}};
			CHECK(approx_eval(s, a.spec(), env, d) == eval_term(unfold(s, d), a.spec(), env));
			CHECK(approx_eval(t, trop, te, d) == eval_term(unfold(t, d), trop, te));
			CHECK(approx_eval(t, slice, se, d) == eval_term(unfold(t, d), slice, se));
		}
	}
}

TEST_CASE("evaluation identity examples")
{
	FiniteAlgebra a = chain3();
	auto spec = a.spec();
	RegSys inner = fg_sys("sys i over fg vars {y} gens {a} root y { y = g(a, a) }");
	auto unit = check_em_identity(PartialTerm::var("p"), {{"p", inner}}, spec, {{"a", 1}}, kFg);
	CHECK(unit.result == IdentityResult::Holds);
	auto fp = check_em_identity(build(kFg, "f(p)"), {{"p", inner}}, spec, {{"a", 1}}, kFg);
	CHECK(fp.result == IdentityResult::Holds);
	CHECK(*fp.flattened == 2);

	RegSys tiny = sr_sys("sys t over sr vars {x} gens {} root x { x = plus(x, one) }");
	auto nat = natinf_algebra();
	nat.strategy = StabilizeWithin{100};
	auto ind = check_em_identity(build(kSr, "plus(p, one)"), {{"p", tiny}}, nat, {}, kSr);
	CHECK(ind.result == IdentityResult::Indeterminate);
}

TEST_CASE("evaluation identity on random samples")
{
	std::mt19937_64 rng(8);
	auto trop = tropical_algebra();
	FiniteAlgebra a = chain3();
	std::size_t holds = 0;
	for (int n = 0; n < 100; ++n) {
		PartialTerm t = random_term(kSr, {"p", "q"}, 2, rng);
		std::map<std::string, RegSys> inner{{"p", random_system(kSr, {"c"}, 2, rng, 2)},
						    {"q", random_system(kSr, {"c"}, 1, rng, 2)}};
		auto r = check_em_identity(t, inner, trop, {{"c", ExtNat(n % 4)}}, kSr);
		CHECK(r.result != IdentityResult::Fails);
		holds += r.result == IdentityResult::Holds;

		PartialTerm u = random_term(kFg, {"p", "q"}, 2, rng);
		std::map<std::string, RegSys> fin{{"p", random_system(kFg, {"c"}, 2, rng, 2)},
						  {"q", random_system(kFg, {"c"}, 1, rng, 2)}};
		CHECK(check_em_identity(u, fin, a.spec(), {{"c", std::size_t(n % 3)}}, kFg).result ==
		      IdentityResult::Holds);
	}
	CHECK(holds == 100);
}

TEST_CASE("inequality checks")
{
	PartialTerm x = PartialTerm::var("x");
	InequalitySet refl{kFg, {{x, x}}};
	CHECK(check_inequalities(refl, chain3().spec(), CheckMode::exhaustive()).ok());
	InequalitySet refl_sr{kSr, {{x, x}}};
	CHECK(check_inequalities(refl_sr, natinf_algebra(), CheckMode::sampled(50, 1)).ok());

	InequalitySet idem{kSr, {{build(kSr, "plus(x, x)"), x}, {x, build(kSr, "plus(x, x)")}}};
	auto slice = lang_slice_algebra(2, "a");
	REQUIRE(slice.elements.has_value());
	CHECK(slice.elements->size() == 8);
	Report r = check_inequalities(idem, slice, CheckMode::exhaustive());
	CHECK(r.ok());
	CHECK(r.samples == 16);

	InequalitySet sq{kSr, {{build(kSr, "times(x, x)"), x}}};
	Report bad = check_inequalities(sq, natinf_algebra(), CheckMode::sampled(200, 3));
	CHECK_FALSE(bad.ok());
	for (const auto &v : bad.violations)
		CHECK(v.witness.find("x=0") == std::string::npos);

	// exhaustive form of the same law on a chain where times is max + 1 capped
	const Signature t1("t", {{"times", 2}});
	FiniteAlgebra c = chain_algebra(3, t1, {{"times", {0, 1, 2, 1, 2, 2, 2, 2, 2}}});
	InequalitySet sq1{t1, {{build(t1, "times(x, x)"), x}}};
	Report ex = check_inequalities(sq1, c.spec(), CheckMode::exhaustive());
	REQUIRE(ex.violations.size() == 1);
	CHECK(ex.violations[0].witness == "x=e1");
}

TEST_CASE("morphism checks")
{
	FiniteAlgebra a = chain3();
	auto spec = a.spec();
	MorphismSamples<std::size_t> samples;
	std::mt19937_64 rng(9);
	for (int i = 0; i < 10; ++i)
		samples.systems.push_back({random_system(kFg, {"u"}, 2, rng, 2), {{"u", std::size_t(i % 3)}}});
	std::function<std::size_t(const std::size_t &)> id = [](const std::size_t &v) { return v; };
	CHECK(check_morphism(id, spec, spec, samples).ok());

	const Signature f1("s", {{"f", 1}});
	FiniteAlgebra top = chain_algebra(2, f1, {{"f", {1, 1}}});
	std::function<std::size_t(const std::size_t &)> to_bot = [](const std::size_t &) { return std::size_t{0}; };
	Report r = check_morphism(to_bot, top.spec(), top.spec(), MorphismSamples<std::size_t>{});
	REQUIRE_FALSE(r.ok());
	bool saw = false;
	for (const auto &v : r.violations)
		saw = saw || v.law == "commutes with f";
	CHECK(saw);

	auto big = lang_slice_algebra(4, "a");
	auto small = lang_slice_algebra(2, "a");
	MorphismSamples<WordSet> ws;
	RegSys astar = sr_sys("sys s over sr vars {x} gens {a} root x { x = plus(times(a, x), one) }");
	ws.systems.push_back({astar, {{"a", WordSet{"a"}}}});
	std::function<WordSet(const WordSet &)> cut = [](const WordSet &w) { return truncate_words(w, 2); };
	Report tr = check_morphism(cut, big, small, ws);
	CHECK(tr.ok());
	CHECK(tr.samples > 1000);
}

TEST_CASE("instances satisfy the ordered algebra axioms")
{
	CHECK(validate(chain3().spec()).ok());
	CHECK(validate(tropical_algebra()).ok());
	CHECK(validate(natinf_algebra()).ok());
	CHECK(validate(lang_slice_algebra(3, "ab")).ok());

	FiniteAlgebra bad = FiniteAlgebra::unchecked("bad", Signature("s", {{"f", 1}}), {"bot", "top"}, {{0, 1}},
						    {{"f", {1, 0}}});
	CHECK_FALSE(validate(bad.spec()).ok());
	CHECK(error_kind([] {
		FiniteAlgebra("bad", Signature("s", {{"f", 1}}), {"bot", "top"}, {{0, 1}}, {{"f", {1, 0}}});
	}) == ErrorKind::InvalidAlgebra);
}
