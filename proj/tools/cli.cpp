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

#include "cli.hpp"

#include "deltalg/completion.hpp"
#include "deltalg/error.hpp"
#include "deltalg/lang_slice.hpp"
#include "deltalg/regsys_syntax.hpp"
#include "deltalg/regular_lang.hpp"
#include "deltalg/report.hpp"
#include "deltalg/sampling.hpp"
#include "deltalg/semirings.hpp"
#include "deltalg/term_syntax.hpp"
#include "deltalg/workspace.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <fstream>
#include <regex>
#include <sstream>

namespace deltalg::cli {

namespace {

enum class Format { Text, Kv };

struct Options {
	std::vector<std::string> files;
	std::string format = "text";
	std::string out;
	std::vector<std::string> letters;
	Config config;
};

std::string read_file(const std::string &path)
{
	std::ifstream in(path, std::ios::binary);
	if (!in)
		throw Error(ErrorKind::Usage, "cannot read '" + path + "'");
	std::ostringstream ss;
	ss << in.rdbuf();
	return ss.str();
}

Workspace load_workspace(const Options &o)
{
	Workspace w;
	w.config = o.config;
	for (const auto &f : o.files) {
		try {
			w.load(read_file(f));
		} catch (const Error &e) {
			throw Error(e.kind(), f + ":" + e.what());
		}
	}
	return w;
}

std::map<std::string, std::string> letter_overrides(const Options &o)
{
	std::map<std::string, std::string> out;
	for (const auto &l : o.letters) {
		auto eq = l.find('=');
		if (eq == std::string::npos || eq == 0)
			throw Error(ErrorKind::Usage, "--letter expects gen=word, got '" + l + "'");
		std::string w = l.substr(eq + 1);
		out.insert_or_assign(l.substr(0, eq), w == "eps" ? std::string() : w);
	}
	return out;
}

/// Quoted when the value holds a space, a quote or an equals sign.
std::string kv(const std::string &v)
{
	if (!v.empty() && v.find_first_of(" \"=\\") == std::string::npos)
		return v;
	std::string out = "\"";
	for (char c : v) {
		if (c == '"' || c == '\\')
			out += '\\';
		out += c;
	}
	return out + "\"";
}

class Emitter {
public:
	explicit Emitter(Format f) : format_(f) {}

	bool kv_mode() const { return format_ == Format::Kv; }
	std::ostringstream &text() { return buf_; }
	void record(const std::vector<std::pair<std::string, std::string>> &fields)
	{
		bool first = true;
		for (const auto &[k, v] : fields) {
			buf_ << (first ? "" : " ") << k << "=" << kv(v);
			first = false;
		}
		buf_ << "\n";
	}
	void report(const Report &r) { buf_ << (kv_mode() ? to_kv(r) : to_text(r)); }
	std::string str() const { return buf_.str(); }

private:
	Format format_;
	std::ostringstream buf_;
};

// ---------------------------------------------------------------------------
// unfold, eq

int cmd_unfold(const Workspace &w, const std::string &name, std::size_t depth, Emitter &em)
{
	const PartialTerm t = unfold(w.system(name), depth);
	if (em.kv_mode())
		em.record({{"record", "unfold"}, {"system", name}, {"depth", std::to_string(depth)}, {"term", to_string(t)}});
	else
		em.text() << to_string(t) << "\n";
	return kOk;
}

int cmd_eq(const Workspace &w, const std::string &a, const std::string &b, Emitter &em)
{
	const RegSys &s1 = w.system(a), &s2 = w.system(b);
	if (s1.gens() != s2.gens() && std::set(s1.gens().begin(), s1.gens().end()) !=
					      std::set(s2.gens().begin(), s2.gens().end()))
		throw Error(ErrorKind::SignatureMismatch, "'" + a + "' and '" + b + "' have different generators");
	const BisimResult r = bisim_compare(s1, s2);
	const std::string depth = r.witness_depth ? std::to_string(*r.witness_depth) : "";
	if (em.kv_mode()) {
		std::vector<std::pair<std::string, std::string>> f{
			{"record", "eq"}, {"left", a}, {"right", b}, {"result", r.equal ? "equal" : "distinct"}};
		if (!r.equal)
			f.emplace_back("depth", depth);
		em.record(f);
	} else {
		em.text() << (r.equal ? std::string("equal") : "distinct at depth " + depth) << "\n";
	}
	return r.equal ? kOk : kViolation;
}

// ---------------------------------------------------------------------------
// eval

template <class V>
struct Instance {
	AlgebraSpec<V> spec;
	std::function<V(const std::string &)> literal;
	Env<V> defaults;
};

template <class V>
int print_outcome(const RegSys &s, const Instance<V> &inst, const EvalOutcome<V> &o, Emitter &em,
		  const std::map<std::string, DivergenceVerdict> *certificate)
{
	const std::set<std::string> over(o.over_cap.begin(), o.over_cap.end());
	std::string flags;
	for (auto f : o.flags)
		flags += (flags.empty() ? "" : ",") + std::string(to_string(f));
	for (const auto &x : s.sysvars()) {
		std::string value = inst.spec.render(o.values.at(x));
		std::string note;
		if (certificate) {
			const auto &v = certificate->at(x);
			value = to_string(v.value);
			note = "certified";
		} else if (over.contains(x)) {
			note = "over cap";
		}
		if (em.kv_mode()) {
			std::vector<std::pair<std::string, std::string>> f{{"record", "value"}, {"var", x}, {"value", value}};
			if (!note.empty())
				f.emplace_back("note", note == "over cap" ? "over-cap" : note);
			em.record(f);
		} else {
			em.text() << x << " = " << value << (note.empty() ? "" : " (" + note + ")") << "\n";
		}
	}
	std::string status = certificate ? "certified" : o.converged() ? "converged" : "unresolved";
	if (em.kv_mode()) {
		std::vector<std::pair<std::string, std::string>> f{
			{"record", "outcome"}, {"system", s.name()}, {"instance", inst.spec.name},
			{"status", status}, {"iterations", std::to_string(o.iterations)}};
		if (!flags.empty())
			f.emplace_back("flags", flags);
		em.record(f);
	} else if (o.converged()) {
		em.text() << "converged after " << o.iterations << " iteration(s)\n";
	} else {
		em.text() << "unresolved after " << o.iterations << " iteration(s): " << flags << "\n";
		if (certificate)
			em.text() << "refined by the linear divergence certificate\n";
	}
	if (certificate || o.converged())
		return kOk;
	return kUnresolved;
}

template <class V>
int run_eval(const RegSys &s, const Instance<V> &inst, const std::optional<std::string> &env_file,
	     const Env<V> &extra, bool certify, Emitter &em)
{
	Env<V> env = inst.defaults;
	for (const auto &[k, v] : extra)
		env.insert_or_assign(k, v);
	if (env_file) {
		auto lines = parse_env(read_file(*env_file), s.sig());
		for (const auto &[k, v] : resolve_env(lines, inst.spec, inst.literal))
			env.insert_or_assign(k, v);
	}
	require_total_env(s, env);
	const EvalOutcome<V> o = kleene_eval(s, inst.spec, env);
	if constexpr (std::is_same_v<V, ExtNat>) {
		if (certify && !o.converged()) {
			const auto cert = divergence_certificate_linear(s, env);
			return print_outcome(s, inst, o, em, &cert);
		}
	}
	return print_outcome(s, inst, o, em, nullptr);
}

SemiringProfile profile_of(const RegSys &s)
{
	return s.profile().value_or(SemiringProfile{});
}

WordSet parse_word_set(const std::string &lit)
{
	std::string body = lit;
	if (body.size() < 2 || body.front() != '{' || body.back() != '}')
		throw Error(ErrorKind::Parse, "expected a word set like {a, ab}, got '" + lit + "'");
	body = body.substr(1, body.size() - 2);
	std::replace(body.begin(), body.end(), ',', ' ');
	WordSet out;
	std::istringstream in(body);
	std::string w;
	while (in >> w)
		out.insert(w == "eps" || w == "ε" ? std::string() : w);
	return out;
}

std::optional<std::size_t> slice_bound(const std::string &instance)
{
	static const std::regex re(R"(slice<?(\d+)>?)");
	std::smatch m;
	if (!std::regex_match(instance, m, re))
		return std::nullopt;
	return static_cast<std::size_t>(std::stoul(m[1]));
}

struct EvalArgs {
	std::string target;
	std::string instance = "tropical";
	std::optional<std::string> env_file;
	bool certify = false;
	std::string source;
	std::string sink;
};

int cmd_eval(const Workspace &w, const EvalArgs &a, const Options &o, Emitter &em)
{
	const Config &c = w.config;
	const bool is_graph = w.has(Workspace::Kind::Graph, a.target);
	std::optional<RegSys> sys;
	Env<ExtNat> graph_env;
	if (is_graph) {
		if (a.source.empty() || a.sink.empty())
			throw Error(ErrorKind::Usage, "evaluating a graph needs --source and --target");
		auto [s, env] = graph_to_linear_system(w.graph(a.target), a.source, a.sink);
		sys = std::move(s);
		graph_env = std::move(env);
	} else {
		sys = w.system(a.target);
	}
	if (a.certify && a.instance != "natinf")
		throw Error(ErrorKind::Usage, "--certify-linear applies to the natinf instance only");

	if (a.instance == "tropical" || a.instance == "natinf") {
		Instance<ExtNat> inst;
		if (a.instance == "tropical") {
			inst.spec = tropical_algebra(profile_of(*sys));
			inst.spec.strategy = StabilizeWithin{c.budget};
		} else {
			inst.spec = natinf_algebra(profile_of(*sys));
			inst.spec.strategy = CapAndFlag{c.cap, c.budget};
		}
		inst.literal = [](const std::string &l) { return parse_extnat(l); };
		return run_eval(*sys, inst, a.env_file, graph_env, a.certify, em);
	}
	if (is_graph)
		throw Error(ErrorKind::Usage, "graphs are evaluated in the tropical or natinf instance");
	if (auto bound = slice_bound(a.instance)) {
		const auto overrides = letter_overrides(o);
		Instance<WordSet> inst;
		inst.spec = lang_slice_algebra(*bound, alphabet_of(*sys, overrides), profile_of(*sys));
		inst.spec.strategy = StabilizeWithin{c.budget};
		inst.literal = [](const std::string &l) { return parse_word_set(l); };
		inst.defaults = letter_env(*sys, *bound, overrides);
		return run_eval(*sys, inst, a.env_file, {}, false, em);
	}
	if (w.has(Workspace::Kind::Algebra, a.instance)) {
		const FiniteAlgebra &alg = w.algebra(a.instance);
		Instance<std::size_t> inst;
		inst.spec = alg.spec();
		inst.spec.strategy = StabilizeWithin{c.budget};
		inst.literal = [&alg](const std::string &l) { return alg.index_of(l); };
		return run_eval(*sys, inst, a.env_file, {}, false, em);
	}
	throw Error(ErrorKind::UnknownSymbol, "unknown instance '" + a.instance +
						      "' (expected tropical, natinf, slice<L> or an algebra name)");
}

// ---------------------------------------------------------------------------
// solve

int cmd_solve(const Workspace &w, const std::string &name, const std::string &mode,
	      std::optional<std::size_t> bound, const Options &o, Emitter &em)
{
	const RegSys &s = w.system(name);
	const auto overrides = letter_overrides(o);
	if (mode == "arden") {
		if (classify(s) == SysClass::Algebraic)
			throw Error(ErrorKind::NotLinear, "not linear: '" + name + "' is algebraic");
		const auto sol = arden_solve_linear(s, letter_automata(s, overrides));
		const std::string text = sol.at(s.root()).trim().transitions_text();
		if (em.kv_mode()) {
			std::istringstream in(text);
			std::string line;
			while (std::getline(in, line))
				em.record({{"record", "automaton"}, {"system", name}, {"line", line}});
		} else {
			em.text() << text;
		}
		return kOk;
	}
	if (mode != "slices" && mode != "cfg")
		throw Error(ErrorKind::Usage, "unknown solve mode '" + mode + "' (expected arden, slices or cfg)");
	if (!bound)
		throw Error(ErrorKind::Usage, "solve " + mode + " needs a length bound");
	WordSet words;
	if (mode == "cfg") {
		words = cfg_slice_oracle(s, *bound, overrides);
	} else {
		auto spec = lang_slice_algebra(*bound, alphabet_of(s, overrides), profile_of(s));
		spec.strategy = StabilizeWithin{w.config.budget};
		const auto outcome = kleene_eval(s, spec, letter_env(s, *bound, overrides));
		if (!outcome.converged())
			throw Error(ErrorKind::BoundExceeded, "slice iteration did not stabilize within the budget");
		words = outcome.root_value();
	}
	if (em.kv_mode()) {
		std::string list;
		for (const auto &word : words)
			list += (list.empty() ? "" : " ") + (word.empty() ? std::string("ε") : word);
		em.record({{"record", "words"}, {"system", name}, {"mode", mode}, {"bound", std::to_string(*bound)},
			   {"count", std::to_string(words.size())}, {"words", list}});
	} else {
		em.text() << to_string(words) << "\n";
	}
	return kOk;
}

// ---------------------------------------------------------------------------
// laws, check-ineq, check-morphism

struct LawArgs {
	std::string suite;
	std::optional<std::size_t> poset_size;
	std::string algebra;
	std::string poset;
};

int cmd_laws(const Workspace &w, const LawArgs &a, Emitter &em)
{
	auto suite = parse_law_suite(a.suite);
	if (!suite)
		throw Error(ErrorKind::Usage, "unknown law suite '" + a.suite + "' (expected monad, em, distrib, continuity or all)");
	const std::size_t height = w.config.max_depth;
	auto wants = [&](LawSuite s) { return *suite == LawSuite::All || *suite == s; };
	std::vector<Report> reports;
	if (!a.algebra.empty() || !a.poset.empty()) {
		const std::size_t big = a.poset_size.value_or(kMonadPosetSize);
		const std::size_t small = a.poset_size.value_or(kDistribPosetSize);
		const Signature distrib_sig("cfg", {{"c", 0}, {"f", 1}, {"g", 2}});
		if (!a.algebra.empty()) {
			const FiniteAlgebra &alg = w.algebra(a.algebra);
			if (wants(LawSuite::Monad))
				reports.push_back(check_monad_laws(poset_of(alg), big));
			if (wants(LawSuite::Em))
				reports.push_back(check_em_laws(alg, height, big));
			if (wants(LawSuite::Distrib))
				reports.push_back(check_distributive_laws(alg, height, small));
			if (wants(LawSuite::Continuity))
				reports.push_back(check_continuity(alg, height, big));
		} else {
			const FinitePosetWithBot &p = w.poset(a.poset);
			if (wants(LawSuite::Monad))
				reports.push_back(check_monad_laws(p, big));
			if (wants(LawSuite::Em)) {
				std::vector<std::pair<std::size_t, std::size_t>> order;
				for (std::size_t i = 0; i < p.size(); ++i)
					for (std::size_t j = 0; j < p.size(); ++j)
						if (i != j && p.leq(i, j))
							order.emplace_back(i, j);
				reports.push_back(check_em_laws(FiniteAlgebra(a.poset, Signature("bare"), p.names(), order, {}),
								height, big));
			}
			if (wants(LawSuite::Distrib))
				reports.push_back(check_distributive_laws(p, distrib_sig, height, small));
			if (*suite == LawSuite::Continuity)
				throw Error(ErrorKind::Usage, "the continuity suite needs an algebra, not a bare poset");
		}
	} else {
		LawSweep bounds;
		bounds.height = height;
		if (a.poset_size) {
			if (*a.poset_size == 0)
				throw Error(ErrorKind::Usage, "--poset-size must be at least 1");
			bounds.monad_size = *a.poset_size;
			bounds.table_size = std::min(*a.poset_size, kDistribPosetSize);
		}
		reports.push_back(run_law_sweep(*suite, bounds));
	}
	bool ok = true;
	for (const auto &r : reports) {
		em.report(r);
		ok = ok && r.ok();
	}
	return ok ? kOk : kViolation;
}

template <class V>
Report ineq_report(const InequalitySet &e, const AlgebraSpec<V> &a, const Config &c, std::size_t samples)
{
	if (a.elements)
		return check_inequalities(e, a, CheckMode::exhaustive());
	return check_inequalities(e, a, CheckMode::sampled(samples, c.seed));
}

int cmd_check_ineq(const Workspace &w, const std::string &name, const std::string &instance, std::size_t samples,
		   const Options &o, Emitter &em)
{
	const InequalitySet &e = w.inequalities(name);
	Report r;
	if (instance == "tropical" || instance == "natinf") {
		const SemiringProfile p = e.sig.profile().value_or(SemiringProfile{});
		r = ineq_report(e, instance == "tropical" ? tropical_algebra(p) : natinf_algebra(p), w.config, samples);
	} else if (auto bound = slice_bound(instance)) {
		std::string alphabet = "ab";
		for (const auto &[k, v] : letter_overrides(o))
			for (char ch : v)
				if (alphabet.find(ch) == std::string::npos)
					alphabet += ch;
		r = ineq_report(e, lang_slice_algebra(*bound, alphabet, e.sig.profile().value_or(SemiringProfile{})),
				w.config, samples);
	} else {
		r = ineq_report(e, w.algebra(instance).spec(), w.config, samples);
	}
	r.check = "ineq " + name;
	em.report(r);
	return r.ok() ? kOk : kViolation;
}

int cmd_check_morphism(const Workspace &w, const std::string &name, std::size_t samples, Emitter &em)
{
	const MorphismDecl &m = w.morphism(name);
	const FiniteAlgebra &from = w.algebra(m.from);
	const FiniteAlgebra &to = w.algebra(m.to);
	std::vector<std::size_t> table(from.size());
	for (std::size_t x = 0; x < from.size(); ++x) {
		auto it = m.map.find(from.element_names()[x]);
		if (it == m.map.end())
			throw Error(ErrorKind::MissingBinding,
				    "morphism '" + name + "' does not map '" + from.element_names()[x] + "'");
		table[x] = to.index_of(it->second);
	}
	for (const auto &[k, v] : m.map)
		(void)from.index_of(k);

	MorphismSamples<std::size_t> ms;
	ms.samples = samples;
	ms.seed = w.config.seed;
	std::mt19937_64 rng(w.config.seed);
	const std::vector<std::string> gens{"a", "b"};
	const AlgebraSpec<std::size_t> a = from.spec();
	if (!from.sig().empty()) {
		for (std::size_t k = 0; k < 20; ++k) {
			RegSys s = random_system(from.sig(), gens, 1 + k % 3, rng, 2, "probe");
			Env<std::size_t> env;
			for (const auto &g : gens)
				env.emplace(g, std::uniform_int_distribution<std::size_t>(0, from.size() - 1)(rng));
			ms.systems.emplace_back(std::move(s), std::move(env));
		}
	}
	std::function<std::size_t(const std::size_t &)> h = [table](const std::size_t &x) { return table[x]; };
	Report r = check_morphism(h, a, to.spec(), ms);
	r.check = "morphism " + name;
	em.report(r);
	return r.ok() ? kOk : kViolation;
}

} // namespace

int run(const std::vector<std::string> &args, std::ostream &out, std::ostream &err)
{
	CLI::App app{"Regular coterms, ordered algebras and completion law checks", "deltalg"};
	app.require_subcommand(1);
	app.fallthrough();

	Options o;
	app.add_option("-f,--file", o.files, "Workspace file with sig/sys/poset/algebra/graph/ineq/morphism blocks")
		->check(CLI::ExistingFile);
	app.add_option("--seed", o.config.seed, "Seed for sampled checks")->capture_default_str();
	app.add_option("--budget", o.config.budget, "Iteration budget")
		->check(CLI::PositiveNumber)
		->capture_default_str();
	app.add_option("--cap", o.config.cap, "Magnitude cap for natinf iteration")
		->check(CLI::PositiveNumber)
		->capture_default_str();
	app.add_option("--max-depth", o.config.max_depth, "Term depth bound for law suites")->capture_default_str();
	app.add_option("--format", o.format, "Output format")
		->check(CLI::IsMember({"text", "kv"}))
		->capture_default_str();
	app.add_option("--out", o.out, "Write results to this file instead of standard output");
	app.add_option("--letter", o.letters, "Letter for a generator, as gen=word (eps for the empty word)");

	std::string name, name2, mode;
	std::size_t depth = 0;
	auto *unfold_cmd = app.add_subcommand("unfold", "Print the depth-d prefix of a system's coterm");
	unfold_cmd->add_option("system", name)->required();
	unfold_cmd->add_option("--depth", depth)->required();

	EvalArgs ea;
	auto *eval_cmd = app.add_subcommand("eval", "Least solution of a system or graph in an instance");
	eval_cmd->add_option("system", ea.target, "System or graph name")->required();
	eval_cmd->add_option("--instance", ea.instance, "tropical, natinf, slice<L> or an algebra name")
		->capture_default_str();
	eval_cmd->add_option("--env", ea.env_file, "File of 'name = term-or-literal' lines")->check(CLI::ExistingFile);
	eval_cmd->add_flag("--certify-linear", ea.certify, "Refine capped natinf results with the exact linear solution");
	eval_cmd->add_option("--source", ea.source, "Source node when evaluating a graph");
	eval_cmd->add_option("--target", ea.sink, "Target node when evaluating a graph");

	auto *eq_cmd = app.add_subcommand("eq", "Decide whether two systems denote the same coterm");
	eq_cmd->add_option("left", name)->required();
	eq_cmd->add_option("right", name2)->required();

	std::optional<std::size_t> bound;
	auto *solve_cmd = app.add_subcommand("solve", "Languages of a system: arden, slices L or cfg L");
	solve_cmd->add_option("system", name)->required();
	solve_cmd->add_option("mode", mode)->required()->check(CLI::IsMember({"arden", "slices", "cfg"}));
	solve_cmd->add_option("bound", bound, "Length bound for slices and cfg");

	LawArgs la;
	auto *laws_cmd = app.add_subcommand("laws", "Exhaustive monad, algebra, distributive law and continuity checks");
	laws_cmd->add_option("suite", la.suite)->required();
	laws_cmd->add_option("--poset-size", la.poset_size, "Largest poset size");
	laws_cmd->add_option("--algebra", la.algebra, "Check one algebra from the workspace");
	laws_cmd->add_option("--poset", la.poset, "Check one poset from the workspace");

	std::string instance = "tropical";
	std::size_t samples = 200;
	auto *ineq_cmd = app.add_subcommand("check-ineq", "Check an inequality set in an instance");
	ineq_cmd->add_option("set", name)->required();
	ineq_cmd->add_option("--instance", instance)->capture_default_str();
	ineq_cmd->add_option("--samples", samples)->capture_default_str();

	auto *morph_cmd = app.add_subcommand("check-morphism", "Check a map between two algebras");
	morph_cmd->add_option("morphism", name)->required();
	morph_cmd->add_option("--samples", samples)->capture_default_str();

	try {
		std::vector<std::string> rev(args.rbegin(), args.rend());
		app.parse(rev);
	} catch (const CLI::CallForHelp &e) {
		out << app.help();
		return kOk;
	} catch (const CLI::ParseError &e) {
		err << "error: " << e.what() << "\n";
		return kInputError;
	}

	Emitter em(o.format == "kv" ? Format::Kv : Format::Text);
	int code = kOk;
	try {
		if (o.config.max_depth > kMaxLawHeight)
			throw Error(ErrorKind::BoundExceeded, "--max-depth is limited to " + std::to_string(kMaxLawHeight));
		const Workspace w = load_workspace(o);
		if (unfold_cmd->parsed())
			code = cmd_unfold(w, name, depth, em);
		else if (eval_cmd->parsed())
			code = cmd_eval(w, ea, o, em);
		else if (eq_cmd->parsed())
			code = cmd_eq(w, name, name2, em);
		else if (solve_cmd->parsed())
			code = cmd_solve(w, name, mode, bound, o, em);
		else if (laws_cmd->parsed())
			code = cmd_laws(w, la, em);
		else if (ineq_cmd->parsed())
			code = cmd_check_ineq(w, name, instance, samples, o, em);
		else if (morph_cmd->parsed())
			code = cmd_check_morphism(w, name, samples, em);
	} catch (const Error &e) {
		err << "error: " << e.what() << "\n";
		return kInputError;
	} catch (const std::exception &e) {
		err << "error: " << e.what() << "\n";
		return kInputError;
	}

	if (o.out.empty()) {
		out << em.str();
	} else {
		std::ofstream f(o.out, std::ios::binary);
		if (!f) {
			err << "error: cannot write '" << o.out << "'\n";
			return kInputError;
		}
		f << em.str();
	}
	return code;
}

} // namespace deltalg::cli
