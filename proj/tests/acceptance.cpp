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

/*
 * Acceptance run: one PASS/FAIL line per criterion. Every comparison is exact
 * equality; sample counts, seeds, bounds and caps are pinned below.
 */

#include "deltalg/completion.hpp"
#include "deltalg/finite_algebra.hpp"
#include "deltalg/lang_slice.hpp"
#include "deltalg/regsys_syntax.hpp"
#include "deltalg/regular_lang.hpp"
#include "deltalg/sampling.hpp"
#include "deltalg/semirings.hpp"
#include "deltalg/workspace.hpp"

#include <algorithm>
#include <chrono>
#include <fstream>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>

using namespace deltalg;

namespace {

constexpr std::uint64_t kSeed = 20261019;

struct Outcome {
	bool pass = true;
	std::string detail;
	std::vector<std::string> notes;
};

const Signature kSr = semiring_signature();
const Signature kFg("fg", {{"f", 1}, {"g", 2}});

// plus join, times meet on bot < a, b < top
FiniteAlgebra diamond_semiring()
{
	return FiniteAlgebra("diamond", kSr, {"bot", "a", "b", "top"}, {{0, 1}, {0, 2}, {1, 3}, {2, 3}},
			     {{"plus", {0, 1, 2, 3, 1, 1, 3, 3, 2, 3, 2, 3, 3, 3, 3, 3}},
			      {"times", {0, 0, 0, 0, 0, 1, 0, 1, 0, 0, 2, 2, 0, 1, 2, 3}},
			      {"zero", {0}},
			      {"one", {3}}});
}

FiniteAlgebra diamond_fg()
{
	return FiniteAlgebra("diamond_fg", kFg, {"bot", "a", "b", "top"}, {{0, 1}, {0, 2}, {1, 3}, {2, 3}},
			     {{"f", {1, 1, 3, 3}}, {"g", {0, 1, 2, 3, 1, 1, 3, 3, 2, 3, 2, 3, 3, 3, 3, 3}}});
}

FiniteAlgebra chain3_fg()
{
	return chain_algebra(3, kFg, {{"f", {1, 2, 2}}, {"g", {0, 1, 2, 1, 1, 2, 2, 2, 2}}});
}

std::string read(const std::string &path)
{
	std::ifstream in(path);
	std::stringstream ss;
	ss << in.rdbuf();
	return ss.str();
}

Workspace fixtures()
{
	Workspace w;
	for (const char *f : {"languages.dl", "laws.dl"})
		w.load(read(std::string(DELTALG_EXAMPLES_DIR) + "/" + f));
	return w;
}

std::string first_witness(const Report &r)
{
	return r.violations.empty() ? "none" : r.violations.front().law + ": " + r.violations.front().witness;
}

// One instance over the semiring signature, packaged for type-erased loops.
template <class V>
struct Inst {
	AlgebraSpec<V> spec;
	std::function<Env<V>(const RegSys &, std::mt19937_64 &)> env;
};

Inst<ExtNat> tropical_inst()
{
	return {tropical_algebra(), [](const RegSys &s, std::mt19937_64 &rng) {
			Env<ExtNat> e;
			for (const auto &g : s.gens())
				e.emplace(g, ExtNat(rng() % 10));
			return e;
		}};
}

Inst<ExtNat> natinf_inst()
{
	return {natinf_algebra(), [](const RegSys &s, std::mt19937_64 &rng) {
			Env<ExtNat> e;
			for (const auto &g : s.gens())
				e.emplace(g, ExtNat(rng() % 4));
			return e;
		}};
}

Inst<std::size_t> lattice_inst()
{
	static const FiniteAlgebra d = diamond_semiring();
	return {d.spec(), [](const RegSys &s, std::mt19937_64 &rng) {
			Env<std::size_t> e;
			for (const auto &g : s.gens())
				e.emplace(g, std::size_t(rng() % 4));
			return e;
		}};
}

Inst<WordSet> slice_inst(std::size_t bound)
{
	return {lang_slice_algebra(bound, "ab"), [bound](const RegSys &s, std::mt19937_64 &) {
			Env<WordSet> e;
			for (const auto &g : s.gens())
				e.emplace(g, truncate_words({g}, bound));
			return e;
		}};
}

// ---------------------------------------------------------------------------

Outcome law_suites()
{
	Outcome o;
	Report sweep = run_law_sweep(LawSuite::All, LawSweep{kMonadPosetSize, kDistribPosetSize, kDefaultLawHeight});
	o.pass = sweep.ok();
	Workspace w = fixtures();
	Report sup = check_em_laws(w.algebra("bad_sup"));
	Report mono = check_em_laws(w.algebra("bad_mono"));
	mono.absorb(check_continuity(w.algebra("bad_mono")));
	o.pass = o.pass && !sup.ok() && !mono.ok();
	o.detail = std::to_string(sweep.samples) + " instances, " + std::to_string(sweep.violations.size()) +
		   " violations; mutations detected: corrupted sup " + (sup.ok() ? "no" : "yes") +
		   ", non-monotone op " + (mono.ok() ? "no" : "yes");
	o.notes.push_back("corrupted sup witness: " + first_witness(sup));
	o.notes.push_back("non-monotone op witness: " + first_witness(mono));
	if (!sweep.ok())
		o.notes.push_back("sweep violation: " + first_witness(sweep));
	return o;
}

template <class V>
void approx_matches(const Inst<V> &inst, std::size_t count, std::mt19937_64 &rng, std::size_t &systems,
		    std::size_t &failures, std::size_t &unresolved)
{
	for (std::size_t n = 0; n < count; ++n) {
		RegSys s = random_system(kSr, {"a", "b"}, 1 + n % 4, rng, 2);
		Env<V> env = inst.env(s, rng);
		auto r = kleene_eval(s, inst.spec, env);
		++systems;
		if (!r.converged()) {
			++unresolved;
			continue;
		}
		const std::size_t k = r.iterations;
		for (std::size_t d = k; d <= 2 * k + 16; ++d)
			if (!inst.spec.equal(approx_eval(s, inst.spec, env, d), r.root_value())) {
				++failures;
				break;
			}
	}
}

Outcome approximant_equivalence()
{
	std::mt19937_64 rng(kSeed + 2);
	std::size_t systems = 0, failures = 0, unresolved = 0;
	approx_matches(tropical_inst(), 100, rng, systems, failures, unresolved);
	approx_matches(lattice_inst(), 100, rng, systems, failures, unresolved);
	approx_matches(slice_inst(4), 100, rng, systems, failures, unresolved);
	Outcome o;
	o.pass = failures == 0 && unresolved == 0;
	o.detail = std::to_string(systems) + " systems (100 each: tropical, diamond lattice, slice L=4), d from the "
		   "iteration count k to 2k+16, " + std::to_string(failures) + " failures, " +
		   std::to_string(unresolved) + " unresolved";
	return o;
}

template <class V>
std::string em_samples(const Inst<V> &inst, const std::string &label, std::mt19937_64 &rng, std::size_t &failures,
		       bool &enough)
{
	std::size_t holds = 0, indeterminate = 0, tried = 0;
	while (holds < 100 && tried < 2000) {
		++tried;
		PartialTerm t = random_term(kSr, {"p", "q"}, 2, rng);
		std::map<std::string, RegSys> inner{{"p", random_system(kSr, {"a", "b"}, 1 + tried % 3, rng, 2)},
						    {"q", random_system(kSr, {"a"}, 1 + tried % 2, rng, 2)}};
		Env<V> env = inst.env(inner.at("p"), rng);
		auto r = check_em_identity(t, inner, inst.spec, env, kSr);
		if (r.result == IdentityResult::Holds)
			++holds;
		else if (r.result == IdentityResult::Fails)
			++failures;
		else
			++indeterminate;
	}
	enough = enough && holds >= 100;
	char rate[32];
	std::snprintf(rate, sizeof rate, "%.1f%%", 100.0 * double(indeterminate) / double(tried));
	return label + " " + std::to_string(holds) + " hold, " + std::to_string(indeterminate) + " indeterminate (" +
	       rate + ")";
}

Outcome em_identity()
{
	std::mt19937_64 rng(kSeed + 3);
	std::size_t failures = 0;
	bool enough = true;
	std::vector<std::string> parts{em_samples(tropical_inst(), "tropical", rng, failures, enough),
				       em_samples(lattice_inst(), "diamond", rng, failures, enough),
				       em_samples(slice_inst(4), "slice4", rng, failures, enough),
				       em_samples(natinf_inst(), "natinf", rng, failures, enough)};
	Outcome o;
	o.pass = failures == 0 && enough;
	o.detail = std::to_string(failures) + " failures";
	o.notes = parts;
	return o;
}

template <class V>
bool same_outcome(const RegSys &a, const RegSys &b, const Inst<V> &inst, std::mt19937_64 &rng,
		  std::size_t &unresolved)
{
	Env<V> env = inst.env(a, rng);
	auto ra = kleene_eval(a, inst.spec, env);
	auto rb = kleene_eval(b, inst.spec, env);
	if (ra.converged() != rb.converged())
		return false;
	unresolved += !ra.converged();
	return !ra.converged() || inst.spec.equal(ra.root_value(), rb.root_value());
}

Outcome bisim_invariance()
{
	std::mt19937_64 rng(kSeed + 4);
	auto trop = tropical_inst(), nat = natinf_inst();
	auto lat = lattice_inst();
	auto sl = slice_inst(4);
	std::size_t pairs = 0, not_bisim = 0, disagree = 0, unresolved = 0;
	for (std::size_t n = 0; n < 120; ++n) {
		RegSys s = random_system(kSr, {"a", "b"}, 1 + n % 4, rng, 2);
		RegSys t = n % 2 ? unroll(s, rng) : duplicate_var(s, rng);
		if (n % 3 == 0)
			t = unroll(duplicate_var(t, rng), rng);
		++pairs;
		if (!bisim_equal(s, t))
			++not_bisim;
		std::uint64_t env_seed = rng();
		auto agree = [&](auto &inst) {
			std::mt19937_64 r1(env_seed);
			return same_outcome(s, t, inst, r1, unresolved);
		};
		if (!agree(trop) || !agree(nat) || !agree(lat) || !agree(sl))
			++disagree;
	}
	Outcome o;
	o.pass = not_bisim == 0 && disagree == 0;
	o.detail = std::to_string(pairs) + " unroll/duplicate pairs, " + std::to_string(not_bisim) +
		   " not bisimilar, " + std::to_string(disagree) +
		   " value disagreements (tropical, natinf, diamond, slice L=4); " + std::to_string(unresolved) +
		   " evaluations unresolved on both sides with the same status";
	return o;
}

Outcome arden_vs_slices()
{
	std::mt19937_64 rng(kSeed + 5);
	std::size_t systems = 0, mismatches = 0;
	for (std::size_t n = 0; n < 60; ++n) {
		RegSys s = random_linear_system({"a", "b", "c"}, 1 + n % 4, rng, LinearSide::Right);
		auto sol = arden_solve_linear(s, letter_automata(s));
		++systems;
		for (std::size_t L = 0; L <= 6; ++L) {
			auto a = lang_slice_algebra(L, alphabet_of(s));
			auto r = kleene_eval(s, a, letter_env(s, L));
			if (!r.converged() || r.root_value() != regular_slice(sol.at(s.root()), L)) {
				++mismatches;
				break;
			}
		}
	}
	Outcome o;
	o.pass = mismatches == 0;
	o.detail = std::to_string(systems) + " right-linear systems, alphabet {a, b, c}, L = 0..6, " +
		   std::to_string(mismatches) + " mismatches";
	return o;
}

Outcome cfg_vs_slices()
{
	std::mt19937_64 rng(kSeed + 6);
	Workspace w = fixtures();
	std::vector<RegSys> pool{w.system("anbn"), w.system("balanced")};
	for (std::size_t n = 0; n < 60; ++n)
		pool.push_back(random_algebraic_system({"a", "b"}, 1 + n % 4, rng));
	std::size_t mismatches = 0;
	std::string anbn8;
	for (const auto &s : pool)
		for (std::size_t L = 0; L <= 8; ++L) {
			auto a = lang_slice_algebra(L, alphabet_of(s));
			auto r = kleene_eval(s, a, letter_env(s, L));
			WordSet oracle = cfg_slice_oracle(s, L);
			if (!r.converged() || r.root_value() != oracle) {
				++mismatches;
				break;
			}
			if (s.name() == "anbn" && L == 8)
				anbn8 = to_string(oracle);
		}
	Outcome o;
	o.pass = mismatches == 0;
	o.detail = std::to_string(pool.size()) + " algebraic systems (anbn, balanced and 60 random), L = 0..8, " +
		   std::to_string(mismatches) + " mismatches";
	o.notes.push_back("anbn at L = 8: " + anbn8);
	return o;
}

Outcome shortest_paths()
{
	std::mt19937_64 rng(kSeed + 7);
	std::size_t graphs = 0, queries = 0, infinite = 0, mismatches = 0;
	for (std::size_t n = 0; n < 120; ++n) {
		WeightedDigraph g = random_digraph(1 + n % 8, 9, 0.3, rng);
		++graphs;
		const std::string src = g.nodes().front();
		auto bf = bellman_ford_oracle(g, src);
		for (const auto &t : g.nodes()) {
			auto [s, env] = graph_to_linear_system(g, src, t);
			auto r = kleene_eval(s, tropical_algebra(), env);
			++queries;
			infinite += bf.at(t).is_inf();
			if (!r.converged() || r.root_value() != bf.at(t))
				++mismatches;
		}
	}
	Outcome o;
	o.pass = mismatches == 0;
	o.detail = std::to_string(graphs) + " digraphs (1..8 nodes, weights 0..9), " + std::to_string(queries) +
		   " source-target queries (" + std::to_string(infinite) + " unreachable), " +
		   std::to_string(mismatches) + " mismatches";
	return o;
}

Outcome divergence()
{
	std::mt19937_64 rng(kSeed + 8);
	auto nat = natinf_algebra();
	std::size_t systems = 0, finite = 0, infinite = 0, mismatches = 0;
	for (std::size_t n = 0; n < 60; ++n) {
		auto [s, env] = random_natinf_linear_system(1 + n % 4, rng);
		auto cert = divergence_certificate_linear(s, env);
		++systems;
		bool ok = true;
		for (double cap : {1e3, 1e6}) {
			auto r = kleene_eval(s, nat, env, SupStrategy<ExtNat>{CapAndFlag{cap}});
			for (const auto &x : s.sysvars()) {
				const bool over = std::find(r.over_cap.begin(), r.over_cap.end(), x) != r.over_cap.end();
				if (cert.at(x).infinite)
					ok = ok && over;
				else
					ok = ok && !over && r.values.at(x) == cert.at(x).value && r.values.at(x) < ExtNat(1000);
			}
		}
		for (const auto &x : s.sysvars())
			(cert.at(x).infinite ? infinite : finite) += 1;
		mismatches += !ok;
	}
	Outcome o;
	o.pass = mismatches == 0;
	o.detail = std::to_string(systems) + " linear systems, caps 1e3 and 1e6, " + std::to_string(finite) +
		   " finite and " + std::to_string(infinite) + " infinite components, " + std::to_string(mismatches) +
		   " disagreements";
	return o;
}

Outcome substitution_closure()
{
	std::mt19937_64 rng(kSeed + 9);
	std::size_t samples = 0, mismatches = 0;
	for (std::size_t n = 0; n < 120; ++n) {
		RegSys base = random_system(kFg, {"a", "b"}, 1 + n % 3, rng, 2);
		std::map<std::string, RegSys> tau{{"a", random_system(kFg, {"c"}, 1 + n % 2, rng, 2)}};
		if (n % 2)
			tau.emplace("b", random_system(kFg, {"c"}, 2, rng, 2));
		RegSys out = subst_sys(base, tau);
		++samples;
		for (std::size_t d = 0; d <= 8; ++d) {
			Substitution sigma;
			for (const auto &[g, s] : tau)
				sigma.emplace(g, unfold(s, d));
			if (unfold(out, d) != truncate(subst(unfold(base, d), sigma), d)) {
				++mismatches;
				break;
			}
		}
	}
	Report iso = free_completion_iso_check({"a", "b"}, {100, kSeed, 8});
	Outcome o;
	o.pass = mismatches == 0 && iso.ok();
	o.detail = std::to_string(samples) + " substitutions up to depth 8, " + std::to_string(mismatches) +
		   " mismatches; isomorphism check " + std::to_string(iso.samples) + " samples, " +
		   std::to_string(iso.violations.size()) + " violations";
	return o;
}

Outcome merge_evaluation()
{
	std::mt19937_64 rng(kSeed + 10);
	const FiniteAlgebra algebras[] = {chain3_fg(), diamond_fg()};
	std::size_t sets = 0, failures = 0;
	for (std::size_t n = 0; n < 120; ++n) {
		PartialTerm t = random_term(kFg, {"x", "y"}, 4, rng, 0.05);
		auto set = random_directed_set(t, 2 + n % 6, rng);
		++sets;
		auto m = merge(set.front(), set.front());
		PartialTerm lub = std::get<PartialTerm>(m);
		for (const auto &s : set) {
			auto next = merge(lub, s);
			if (!std::holds_alternative<PartialTerm>(next)) {
				++failures;
				break;
			}
			lub = std::get<PartialTerm>(next);
		}
		for (const auto &a : algebras) {
			auto spec = a.spec();
			Env<std::size_t> env{{"x", n % a.size()}, {"y", (n / 2) % a.size()}};
			std::vector<std::size_t> vals;
			for (const auto &s : set)
				vals.push_back(eval_term(s, spec, env));
			std::optional<std::size_t> top;
			for (auto v : vals)
				if (std::all_of(vals.begin(), vals.end(), [&](std::size_t u) { return a.leq(u, v); }))
					top = v;
			if (!top || *top != eval_term(lub, spec, env))
				++failures;
		}
	}
	Outcome o;
	o.pass = failures == 0;
	o.detail = std::to_string(sets) + " merge-closed term sets on a 3-chain and the diamond, " +
		   std::to_string(failures) + " failures";
	return o;
}

} // namespace

int main()
{
	const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria{
		{"law suites", law_suites},
		{"approximant evaluation", approximant_equivalence},
		{"evaluation identity", em_identity},
		{"bisimulation invariance", bisim_invariance},
		{"regular languages", arden_vs_slices},
		{"context-free languages", cfg_vs_slices},
		{"shortest paths", shortest_paths},
		{"natinf divergence", divergence},
		{"substitution closure", substitution_closure},
		{"merge evaluation", merge_evaluation},
	};
	std::cout << "seed " << kSeed << ", tolerance: exact equality\n";
	int failed = 0;
	for (std::size_t i = 0; i < criteria.size(); ++i) {
		const auto start = std::chrono::steady_clock::now();
		Outcome o;
		try {
			o = criteria[i].second();
		} catch (const std::exception &e) {
			o.pass = false;
			o.detail = std::string("error: ") + e.what();
		}
		const double secs =
			std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
		char t[32];
		std::snprintf(t, sizeof t, "%.1fs", secs);
		std::cout << (o.pass ? "PASS" : "FAIL") << ' ' << i + 1 << ' ' << criteria[i].first << ": " << o.detail
			  << " [" << t << "]\n";
		for (const auto &n : o.notes)
			std::cout << "     " << n << '\n';
		failed += !o.pass;
	}
	return failed == 0 ? 0 : 1;
}
