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

#include "deltalg/lang_slice.hpp"

#include "deltalg/error.hpp"

#include <algorithm>
#include <deque>
#include <vector>

namespace deltalg {

std::string to_string(const WordSet &w)
{
	if (w.empty())
		return "∅";
	std::string out;
	for (const auto &word : w) {
		if (!out.empty())
			out += ' ';
		out += word.empty() ? std::string("ε") : word;
	}
	return out;
}

WordSet all_words(const std::string &alphabet, std::size_t bound)
{
	WordSet out{""};
	std::vector<std::string> layer{""};
	for (std::size_t len = 1; len <= bound; ++len) {
		std::vector<std::string> next;
		for (const auto &w : layer)
			for (char c : alphabet)
				next.push_back(w + c);
		out.insert(next.begin(), next.end());
		layer = std::move(next);
	}
	return out;
}

WordSet truncate_words(const WordSet &w, std::size_t bound)
{
	WordSet out;
	for (const auto &word : w) {
		if (word.size() > bound)
			break;
		out.insert(word);
	}
	return out;
}

WordSet concat_words(const WordSet &a, const WordSet &b, std::size_t bound)
{
	WordSet out;
	for (const auto &u : a) {
		if (u.size() > bound)
			break;
		for (const auto &v : b) {
			if (u.size() + v.size() > bound)
				break;
			out.insert(u + v);
		}
	}
	return out;
}

AlgebraSpec<WordSet> lang_slice_algebra(std::size_t bound, const std::string &alphabet, const SemiringProfile &p)
{
	std::string letters = alphabet;
	std::sort(letters.begin(), letters.end());
	letters.erase(std::unique(letters.begin(), letters.end()), letters.end());

	AlgebraSpec<WordSet> a;
	a.name = "slice" + std::to_string(bound);
	a.leq = [](const WordSet &x, const WordSet &y) {
		return std::includes(y.begin(), y.end(), x.begin(), x.end(), ShortLex{});
	};
	a.ops.emplace(p.plus, OpInterp<WordSet>{2, [](std::span<const WordSet> v) {
				      WordSet out = v[0];
				      out.insert(v[1].begin(), v[1].end());
				      return out;
			      }});
	a.ops.emplace(p.times, OpInterp<WordSet>{2, [bound](std::span<const WordSet> v) {
				      return concat_words(v[0], v[1], bound);
			      }});
	a.ops.emplace(p.zero, OpInterp<WordSet>{0, [](std::span<const WordSet>) { return WordSet{}; }});
	a.ops.emplace(p.one, OpInterp<WordSet>{0, [](std::span<const WordSet>) { return WordSet{""}; }});

	const WordSet universe = all_words(letters, bound);
	const std::vector<std::string> words(universe.begin(), universe.end());
	if (words.size() <= kSliceEnumerableWords) {
		std::vector<WordSet> el;
		for (std::size_t mask = 0; mask < (std::size_t{1} << words.size()); ++mask) {
			WordSet s;
			for (std::size_t i = 0; i < words.size(); ++i)
				if (mask >> i & 1)
					s.insert(words[i]);
			el.push_back(std::move(s));
		}
		a.elements = std::move(el);
	}
	a.sample = [words](std::mt19937_64 &rng) {
		std::bernoulli_distribution keep(0.3);
		WordSet s;
		for (const auto &w : words)
			if (keep(rng))
				s.insert(w);
		return s;
	};
	a.show = [](const WordSet &w) { return "{" + to_string(w) + "}"; };
	return a;
}

std::string letter_of(const std::string &gen, const std::map<std::string, std::string> &overrides)
{
	if (auto it = overrides.find(gen); it != overrides.end())
		return it->second;
	if (gen == "eps")
		return "";
	if (gen.size() == 1)
		return gen;
	throw Error(ErrorKind::Usage, "generator '" + gen + "' is not a single letter or eps");
}

Env<WordSet> letter_env(const RegSys &s, std::size_t bound, const std::map<std::string, std::string> &overrides)
{
	Env<WordSet> env;
	for (const auto &g : s.gens())
		env.emplace(g, truncate_words(WordSet{letter_of(g, overrides)}, bound));
	return env;
}

std::string alphabet_of(const RegSys &s, const std::map<std::string, std::string> &overrides)
{
	std::string out;
	for (const auto &g : s.gens())
		out += letter_of(g, overrides);
	std::sort(out.begin(), out.end());
	out.erase(std::unique(out.begin(), out.end()), out.end());
	return out;
}

namespace {

/// Symbols >= 0 are nonterminals; terminals are encoded as -1 - char.
using Symbol = int;
using Rhs = std::vector<Symbol>;

Symbol terminal(char c) { return -1 - static_cast<int>(static_cast<unsigned char>(c)); }
char letter(Symbol s) { return static_cast<char>(-1 - s); }

struct Grammar {
	std::vector<std::vector<Rhs>> rules;

	Symbol fresh()
	{
		rules.emplace_back();
		return static_cast<Symbol>(rules.size() - 1);
	}
};

Grammar read_grammar(const RegSys &s, const std::map<std::string, std::string> &overrides,
		     std::map<std::string, Symbol> &var_sym)
{
	const auto profile = s.profile();
	if (!profile)
		throw Error(ErrorKind::LinearUndefined,
			    "system '" + s.name() + "' has no semiring profile; it does not read as a grammar");
	const SemiringProfile &p = *profile;
	Grammar g;
	for (const auto &v : s.sysvars())
		var_sym.emplace(v, g.fresh());

	// Symbols for one subterm; a sequence so that concatenations stay flat.
	std::function<Rhs(const PartialTerm &)> symbols = [&](const PartialTerm &t) -> Rhs {
		if (t.is_bottom()) {
			return {g.fresh()};
		}
		if (t.is_var()) {
			if (s.is_sysvar(t.label()))
				return {var_sym.at(t.label())};
			Rhs out;
			for (char c : letter_of(t.label(), overrides))
				out.push_back(terminal(c));
			return out;
		}
		if (t.label() == p.times) {
			Rhs out = symbols(t.child(0));
			Rhs rest = symbols(t.child(1));
			out.insert(out.end(), rest.begin(), rest.end());
			return out;
		}
		if (t.label() == p.one)
			return {};
		Symbol n = g.fresh();
		if (t.label() == p.plus) {
			Rhs l = symbols(t.child(0));
			Rhs r = symbols(t.child(1));
			g.rules[static_cast<std::size_t>(n)].push_back(std::move(l));
			g.rules[static_cast<std::size_t>(n)].push_back(std::move(r));
		} else if (t.label() != p.zero) {
			throw Error(ErrorKind::SignatureMismatch,
				    "operation '" + t.label() + "' has no reading as a grammar construct");
		}
		return {n};
	};
	for (const auto &v : s.sysvars()) {
		Rhs body = symbols(s.def(v));
		g.rules[static_cast<std::size_t>(var_sym.at(v))].push_back(std::move(body));
	}
	return g;
}

std::vector<bool> productive(const Grammar &g)
{
	std::vector<bool> ok(g.rules.size(), false);
	for (bool changed = true; changed;) {
		changed = false;
		for (std::size_t n = 0; n < g.rules.size(); ++n) {
			if (ok[n])
				continue;
			for (const auto &rhs : g.rules[n]) {
				bool all = std::all_of(rhs.begin(), rhs.end(), [&](Symbol x) {
					return x < 0 || ok[static_cast<std::size_t>(x)];
				});
				if (all) {
					ok[n] = changed = true;
					break;
				}
			}
		}
	}
	return ok;
}

std::vector<bool> nullable(const Grammar &g)
{
	std::vector<bool> ok(g.rules.size(), false);
	for (bool changed = true; changed;) {
		changed = false;
		for (std::size_t n = 0; n < g.rules.size(); ++n) {
			if (ok[n])
				continue;
			for (const auto &rhs : g.rules[n]) {
				bool all = std::all_of(rhs.begin(), rhs.end(), [&](Symbol x) {
					return x >= 0 && ok[static_cast<std::size_t>(x)];
				});
				if (all) {
					ok[n] = changed = true;
					break;
				}
			}
		}
	}
	return ok;
}

/// Drops unproductive symbols, then empty and unit productions. The language
/// is unchanged apart from the empty word, which the caller handles.
Grammar normalize(const Grammar &in)
{
	const auto prod = productive(in);
	Grammar g;
	g.rules.resize(in.rules.size());
	for (std::size_t n = 0; n < in.rules.size(); ++n) {
		if (!prod[n])
			continue;
		for (const auto &rhs : in.rules[n])
			if (std::all_of(rhs.begin(), rhs.end(),
					[&](Symbol x) { return x < 0 || prod[static_cast<std::size_t>(x)]; }))
				g.rules[n].push_back(rhs);
	}

	const auto null = nullable(g);
	Grammar ne;
	ne.rules.resize(g.rules.size());
	for (std::size_t n = 0; n < g.rules.size(); ++n) {
		std::set<Rhs> seen;
		for (const auto &rhs : g.rules[n]) {
			std::vector<std::size_t> opt;
			for (std::size_t i = 0; i < rhs.size(); ++i)
				if (rhs[i] >= 0 && null[static_cast<std::size_t>(rhs[i])])
					opt.push_back(i);
			for (std::size_t mask = 0; mask < (std::size_t{1} << opt.size()); ++mask) {
				Rhs r;
				std::size_t k = 0;
				for (std::size_t i = 0; i < rhs.size(); ++i) {
					if (k < opt.size() && opt[k] == i) {
						bool drop = mask >> k & 1;
						++k;
						if (drop)
							continue;
					}
					r.push_back(rhs[i]);
				}
				if (!r.empty() && seen.insert(r).second)
					ne.rules[n].push_back(std::move(r));
			}
		}
	}

	// unit[n] = symbols reachable from n through unit productions.
	const std::size_t count = ne.rules.size();
	Grammar out;
	out.rules.resize(count);
	for (std::size_t n = 0; n < count; ++n) {
		std::vector<bool> reach(count, false);
		std::deque<std::size_t> work{n};
		reach[n] = true;
		std::set<Rhs> seen;
		while (!work.empty()) {
			std::size_t m = work.front();
			work.pop_front();
			for (const auto &rhs : ne.rules[m]) {
				if (rhs.size() == 1 && rhs[0] >= 0) {
					auto u = static_cast<std::size_t>(rhs[0]);
					if (!reach[u]) {
						reach[u] = true;
						work.push_back(u);
					}
				} else if (seen.insert(rhs).second) {
					out.rules[n].push_back(rhs);
				}
			}
		}
	}
	return out;
}

} // namespace

WordSet cfg_slice_oracle(const RegSys &s, std::size_t bound, const std::map<std::string, std::string> &overrides)
{
	std::map<std::string, Symbol> var_sym;
	const Grammar raw = read_grammar(s, overrides, var_sym);
	const Symbol start = var_sym.at(s.root());

	WordSet out;
	{
		Grammar trimmed = raw;
		const auto prod = productive(raw);
		for (std::size_t n = 0; n < trimmed.rules.size(); ++n) {
			auto &rs = trimmed.rules[n];
			rs.erase(std::remove_if(rs.begin(), rs.end(),
						[&](const Rhs &rhs) {
							return !prod[n] ||
							       std::any_of(rhs.begin(), rhs.end(), [&](Symbol x) {
								       return x >= 0 && !prod[static_cast<std::size_t>(x)];
							       });
						}),
				 rs.end());
		}
		if (nullable(trimmed)[static_cast<std::size_t>(start)])
			out.insert("");
	}

	// Every symbol of a normalized form yields at least one letter, so forms
	// longer than the bound are dead.
	const Grammar g = normalize(raw);
	std::set<Rhs> visited{{start}};
	std::deque<Rhs> work{{start}};
	while (!work.empty()) {
		Rhs form = std::move(work.front());
		work.pop_front();
		auto nt = std::find_if(form.begin(), form.end(), [](Symbol x) { return x >= 0; });
		if (nt == form.end()) {
			std::string w;
			for (Symbol x : form)
				w += letter(x);
			out.insert(std::move(w));
			continue;
		}
		const std::size_t at = static_cast<std::size_t>(nt - form.begin());
		for (const auto &rhs : g.rules[static_cast<std::size_t>(*nt)]) {
			if (form.size() - 1 + rhs.size() > bound)
				continue;
			Rhs next(form.begin(), form.begin() + static_cast<std::ptrdiff_t>(at));
			next.insert(next.end(), rhs.begin(), rhs.end());
			next.insert(next.end(), form.begin() + static_cast<std::ptrdiff_t>(at) + 1, form.end());
			if (visited.insert(next).second)
				work.push_back(std::move(next));
		}
	}
	return out;
}

} // namespace deltalg
