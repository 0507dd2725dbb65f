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

#include "cli.hpp"
#include "deltalg/workspace.hpp"

#include <cstdio>
#include <filesystem>
#include <sstream>

using namespace deltalg;
using testsupport::fixture_path;

namespace {

struct Run {
	int code;
	std::string out;
	std::string err;
};

Run run(std::vector<std::string> args)
{
	std::ostringstream out, err;
	int code = cli::run(args, out, err);
	return {code, out.str(), err.str()};
}

std::vector<std::string> with(const std::vector<std::string> &files, std::vector<std::string> rest)
{
	std::vector<std::string> args;
	for (const auto &f : files) {
		args.push_back("-f");
		args.push_back(fixture_path(f));
	}
	args.insert(args.end(), rest.begin(), rest.end());
	return args;
}

const std::vector<std::string> kFixtures{"coterms.dl", "languages.dl", "semirings.dl", "laws.dl"};

} // namespace

TEST_CASE("unfold")
{
	Run r = run(with({"coterms.dl"}, {"unfold", "loop", "--depth", "2"}));
	CHECK(r.code == 0);
	CHECK(r.out == "f(f(bot))\n");
	CHECK(run(with({"coterms.dl"}, {"unfold", "loop", "--depth", "0"})).out == "bot\n");
	Run missing = run(with({"coterms.dl"}, {"unfold", "nosuch", "--depth", "2"}));
	CHECK(missing.code == 2);
	CHECK(missing.err.find("nosuch") != std::string::npos);
}

TEST_CASE("usage errors")
{
	CHECK(run({}).code == 2);
	CHECK(run({"frobnicate"}).code == 2);
	CHECK(run({"-f", "/no/such/file.dl", "unfold", "x", "--depth", "1"}).code == 2);
	CHECK(run(with({"laws.dl"}, {"--max-depth", "5", "laws", "em"})).code == 2);
	CHECK(run(with({"laws.dl"}, {"laws", "em", "--poset-size", "9"})).code == 2);
	CHECK(run(with({"languages.dl"}, {"solve", "anbn", "arden"})).code == 2);
	CHECK(run(with({"coterms.dl"}, {"eq", "fa", "astar_b"})).code == 2);
}

TEST_CASE("eq")
{
	Run same = run(with({"coterms.dl"}, {"eq", "loop", "loop2"}));
	CHECK(same.code == 0);
	CHECK(same.out == "equal\n");
	CHECK(run(with({"coterms.dl"}, {"eq", "tree", "tree"})).code == 0);
	Run diff = run(with({"coterms.dl"}, {"eq", "fa", "fb"}));
	CHECK(diff.code == 1);
	CHECK(diff.out == "distinct at depth 1\n");
}

TEST_CASE("eval")
{
	Run roads = run(with({"semirings.dl"}, {"eval", "roads", "--source", "A", "--target", "D"}));
	CHECK(roads.code == 0);
	CHECK(roads.out.find("x_A = 5\n") != std::string::npos);
	CHECK(roads.out.find("x_E = ∞\n") != std::string::npos);

	Run tiny = run(with({"semirings.dl"}, {"eval", "tiny", "--instance", "tropical"}));
	CHECK(tiny.code == 0);
	CHECK(tiny.out.find("x = 0\n") != std::string::npos);

	Run growth = run(with({"semirings.dl"}, {"eval", "growth", "--instance", "natinf"}));
	CHECK(growth.code == 3);
	CHECK(growth.out.find("(over cap)") != std::string::npos);
	CHECK(growth.out.find("cap-exceeded") != std::string::npos);

	Run cert = run(with({"semirings.dl"}, {"eval", "growth", "--instance", "natinf", "--certify-linear"}));
	CHECK(cert.code == 0);
	CHECK(cert.out.find("x = ∞ (certified)") != std::string::npos);

	Run scaled = run(with({"semirings.dl"},
			      {"eval", "scaled", "--instance", "natinf", "--env", fixture_path("growth.env")}));
	CHECK(scaled.code == 3);
	CHECK(scaled.out.find("y = 3\n") != std::string::npos);

	Run kv = run(with({"semirings.dl"}, {"--format", "kv", "eval", "tiny", "--instance", "tropical"}));
	CHECK(kv.code == 0);
	CHECK(kv.out.find("record=value") != std::string::npos);
	CHECK(kv.out.find("record=outcome") != std::string::npos);

	Run chain = run(with({"laws.dl"}, {"eval", "chain3", "--instance", "chain3"}));
	CHECK(chain.code == 2);
}

TEST_CASE("solve")
{
	Run sl = run(with({"languages.dl"}, {"solve", "astar_b", "slices", "3"}));
	CHECK(sl.code == 0);
	CHECK(sl.out == "b ab aab\n");
	Run cfg = run(with({"languages.dl"}, {"solve", "anbn", "cfg", "4"}));
	CHECK(cfg.code == 0);
	CHECK(cfg.out == "ε ab aabb\n");
	Run arden = run(with({"languages.dl"}, {"solve", "ab_star_c", "arden"}));
	CHECK(arden.code == 0);
	CHECK(arden.out.find("start 0") != std::string::npos);
	CHECK(run(with({"languages.dl"}, {"solve", "balanced", "slices", "4"})).out ==
	      run(with({"languages.dl"}, {"solve", "balanced", "cfg", "4"})).out);
	Run relabel = run(with({"coterms.dl", "languages.dl"}, {"--letter", "a=x", "solve", "astar_b", "slices", "2"}));
	CHECK(relabel.out == "b xb\n");
}

TEST_CASE("laws")
{
	CHECK(run(with({"laws.dl"}, {"laws", "all", "--algebra", "chain3"})).code == 0);
	Run bad = run(with({"laws.dl"}, {"laws", "em", "--algebra", "bad_sup"}));
	CHECK(bad.code == 1);
	CHECK(bad.out.find("sup.etaD = id") != std::string::npos);
	CHECK(bad.out.find("↓mid") != std::string::npos);
	CHECK(run(with({"laws.dl"}, {"laws", "continuity", "--algebra", "bad_mono"})).code == 1);
	CHECK(run(with({"laws.dl"}, {"laws", "monad", "--poset", "diamond"})).code == 0);
	CHECK(run({"laws", "all", "--poset-size", "1"}).code == 0);
}

TEST_CASE("inequalities and morphisms")
{
	CHECK(run(with({"laws.dl"}, {"check-ineq", "join_laws", "--instance", "chain3"})).code == 0);
	Run shrink = run(with({"laws.dl"}, {"check-ineq", "shrink", "--instance", "chain3"}));
	CHECK(shrink.code == 1);
	CHECK(run(with({"laws.dl"}, {"check-morphism", "collapse"})).code == 0);
	Run lift = run(with({"laws.dl"}, {"check-morphism", "lift"}));
	CHECK(lift.code == 1);
	CHECK(lift.out.find("strict") != std::string::npos);
}

TEST_CASE("output file and repeatability")
{
	const auto path = std::filesystem::temp_directory_path() / "deltalg_cli_test.txt";
	Run r = run(with({"laws.dl"}, {"--out", path.string(), "check-ineq", "shrink", "--instance", "chain3"}));
	CHECK(r.code == 1);
	CHECK(r.out.empty());
	std::ifstream in(path);
	std::stringstream ss;
	ss << in.rdbuf();
	CHECK_FALSE(ss.str().empty());
	std::filesystem::remove(path);

	for (const auto &args : std::vector<std::vector<std::string>>{
		     with({"laws.dl"}, {"--seed", "4", "check-ineq", "shrink", "--instance", "natinf"}),
		     with({"laws.dl"}, {"check-morphism", "lift"}),
		     with({"semirings.dl"}, {"eval", "growth", "--instance", "natinf"}),
		     with({"languages.dl"}, {"solve", "ab_star_c", "arden"})}) {
		Run a = run(args), b = run(args);
		CHECK(a.code == b.code);
		CHECK(a.out == b.out);
	}
}

TEST_CASE("workspace text round trip")
{
	for (const auto &f : kFixtures) {
		Workspace w = parse_workspace(testsupport::read_fixture(f));
		const std::string once = to_string(w);
		Workspace again = parse_workspace(once);
		CHECK(to_string(again) == once);
		CHECK(again.declarations() == w.declarations());
		for (const auto &[kind, name] : w.declarations())
			if (kind == Workspace::Kind::Sys)
				CHECK(again.system(name) == w.system(name));
	}
	Workspace w;
	w.load("sig s { f/1 }");
	CHECK_THROWS_AS(w.load("sig s { g/1 }"), Error);
	CHECK_THROWS_AS(parse_workspace("sys x over nosig vars {x} gens {} root x { x = x }"), Error);
}

TEST_CASE("environment files")
{
	const Signature sr = semiring_signature();
	auto lines = parse_env("# comment\nc = 2\nd = plus(c, one)\ne = inf\n", sr);
	REQUIRE(lines.size() == 3);
	CHECK(lines[0].literal == "2");
	CHECK(lines[1].term.has_value());
	std::function<ExtNat(const std::string &)> lit = [](const std::string &s) { return parse_extnat(s); };
	auto env = resolve_env(lines, natinf_algebra(), lit);
	CHECK(env.at("d") == ExtNat(3));
	CHECK(env.at("e").is_inf());
	CHECK_THROWS_AS(parse_env("c 2\n", sr), Error);
}
