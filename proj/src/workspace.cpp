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

#include "deltalg/workspace.hpp"

#include "deltalg/error.hpp"
#include "deltalg/regsys_syntax.hpp"
#include "deltalg/term_syntax.hpp"

#include "regsys_reader.hpp"
#include "syntax.hpp"

#include <algorithm>
#include <sstream>

namespace deltalg {

using detail::Token;
using detail::TokenStream;

const char *to_string(Workspace::Kind k) noexcept
{
	switch (k) {
	case Workspace::Kind::Sig: return "signature";
	case Workspace::Kind::Sys: return "system";
	case Workspace::Kind::Poset: return "poset";
	case Workspace::Kind::Algebra: return "algebra";
	case Workspace::Kind::Graph: return "graph";
	case Workspace::Kind::Ineq: return "inequality set";
	case Workspace::Kind::Morphism: return "morphism";
	}
	return "?";
}

namespace {

template <class M>
const typename M::mapped_type &lookup(const M &m, Workspace::Kind k, const std::string &name)
{
	auto it = m.find(name);
	if (it == m.end())
		throw Error(ErrorKind::UnknownSymbol, std::string("unknown ") + to_string(k) + " '" + name + "'");
	return it->second;
}

[[noreturn]] void fail_at(const Token &tok, ErrorKind kind, const std::string &msg)
{
	throw Error(kind, std::to_string(tok.line) + ":" + std::to_string(tok.col) + ": " + msg);
}

std::vector<std::string> read_elements(TokenStream &ts)
{
	ts.expect_ident("elements");
	ts.expect_punct("{");
	std::vector<std::string> out;
	do {
		out.push_back(ts.expect_name());
	} while (ts.accept_punct(","));
	ts.expect_punct("}");
	return out;
}

std::size_t element_index(const std::vector<std::string> &names, const Token &tok)
{
	auto it = std::find(names.begin(), names.end(), tok.text);
	if (it == names.end())
		fail_at(tok, ErrorKind::UnknownSymbol, "unknown element '" + tok.text + "'");
	return static_cast<std::size_t>(it - names.begin());
}

std::size_t read_element(TokenStream &ts, const std::vector<std::string> &names)
{
	const Token tok = ts.peek();
	ts.expect_name();
	return element_index(names, tok);
}

/// `a < b` after the element name `a` has been peeked.
std::pair<std::size_t, std::size_t> read_cover(TokenStream &ts, const std::vector<std::string> &names)
{
	std::size_t lo = read_element(ts, names);
	ts.expect_punct("<");
	std::size_t hi = read_element(ts, names);
	ts.accept_punct(";");
	return {lo, hi};
}

FiniteAlgebra::Table read_table(TokenStream &ts, const OpSymbol &op, const std::vector<std::string> &names)
{
	const std::size_t n = names.size();
	ts.expect_punct("{");
	FiniteAlgebra::Table t;
	if (op.arity <= 1) {
		const std::size_t cells = op.arity == 0 ? 1 : n;
		for (std::size_t i = 0; i < cells; ++i)
			t.push_back(read_element(ts, names));
		ts.accept_punct(";");
		ts.expect_punct("}");
		return t;
	}
	std::size_t rows = 1;
	for (std::size_t i = 0; i + 1 < op.arity; ++i)
		rows *= n;
	std::vector<std::optional<std::vector<std::size_t>>> by_row(rows);
	while (!ts.accept_punct("}")) {
		const Token at = ts.peek();
		std::size_t row = 0;
		for (std::size_t i = 0; i + 1 < op.arity; ++i) {
			if (i)
				ts.expect_punct(",");
			row = row * n + read_element(ts, names);
		}
		ts.expect_punct(":");
		std::vector<std::size_t> cells;
		for (std::size_t i = 0; i < n; ++i)
			cells.push_back(read_element(ts, names));
		ts.accept_punct(";");
		if (by_row[row])
			fail_at(at, ErrorKind::InvalidAlgebra, "second row for the same arguments of '" + op.name + "'");
		by_row[row] = std::move(cells);
	}
	for (std::size_t r = 0; r < rows; ++r) {
		if (!by_row[r])
			throw Error(ErrorKind::InvalidAlgebra, "table of '" + op.name + "' is missing a row");
		t.insert(t.end(), by_row[r]->begin(), by_row[r]->end());
	}
	return t;
}

std::vector<std::pair<std::size_t, std::size_t>> covers(const std::function<bool(std::size_t, std::size_t)> &leq,
							std::size_t n)
{
	std::vector<std::pair<std::size_t, std::size_t>> out;
	for (std::size_t a = 0; a < n; ++a)
		for (std::size_t b = 0; b < n; ++b) {
			if (a == b || !leq(a, b))
				continue;
			bool direct = true;
			for (std::size_t c = 0; c < n && direct; ++c)
				direct = c == a || c == b || !(leq(a, c) && leq(c, b));
			if (direct)
				out.emplace_back(a, b);
		}
	return out;
}

std::string elements_text(const std::vector<std::string> &names)
{
	std::string out = "  elements {";
	for (std::size_t i = 0; i < names.size(); ++i)
		out += (i ? ", " : "") + names[i];
	return out + "}\n";
}

std::string covers_text(const std::vector<std::string> &names,
			const std::vector<std::pair<std::size_t, std::size_t>> &cs)
{
	std::string out;
	for (auto [a, b] : cs)
		out += "  " + names[a] + " < " + names[b] + "\n";
	return out;
}

} // namespace

void Workspace::declare(Kind k, const std::string &name)
{
	if (has(k, name))
		throw Error(ErrorKind::NameClash, std::string(to_string(k)) + " '" + name + "' is declared twice");
	order_.emplace_back(k, name);
}

bool Workspace::has(Kind k, const std::string &name) const
{
	switch (k) {
	case Kind::Sig: return sigs_.contains(name);
	case Kind::Sys: return systems_.contains(name);
	case Kind::Poset: return posets_.contains(name);
	case Kind::Algebra: return algebras_.contains(name);
	case Kind::Graph: return graphs_.contains(name);
	case Kind::Ineq: return ineqs_.contains(name);
	case Kind::Morphism: return morphisms_.contains(name);
	}
	return false;
}

const Signature &Workspace::sig(const std::string &name) const { return lookup(sigs_, Kind::Sig, name); }
const RegSys &Workspace::system(const std::string &name) const { return lookup(systems_, Kind::Sys, name); }
const FinitePosetWithBot &Workspace::poset(const std::string &name) const
{
	return lookup(posets_, Kind::Poset, name);
}
const FiniteAlgebra &Workspace::algebra(const std::string &name) const
{
	return lookup(algebras_, Kind::Algebra, name);
}
const WeightedDigraph &Workspace::graph(const std::string &name) const { return lookup(graphs_, Kind::Graph, name); }
const InequalitySet &Workspace::inequalities(const std::string &name) const
{
	return lookup(ineqs_, Kind::Ineq, name);
}
const MorphismDecl &Workspace::morphism(const std::string &name) const
{
	return lookup(morphisms_, Kind::Morphism, name);
}

void Workspace::load(std::string_view text)
{
	TokenStream ts(text);
	while (!ts.at_end()) {
		const Token head = ts.peek();
		if (ts.is_ident("sig")) {
			Signature s = detail::read_signature(ts);
			declare(Kind::Sig, s.name());
			sigs_.emplace(s.name(), std::move(s));
		} else if (ts.is_ident("sys")) {
			RegSys s = detail::read_system(ts, sigs_);
			declare(Kind::Sys, s.name());
			systems_.emplace(s.name(), std::move(s));
		} else if (ts.accept_ident("poset")) {
			std::string name = ts.expect_name();
			ts.expect_punct("{");
			auto names = read_elements(ts);
			std::vector<std::pair<std::size_t, std::size_t>> order;
			while (!ts.accept_punct("}"))
				order.push_back(read_cover(ts, names));
			try {
				FinitePosetWithBot p(names, order);
				declare(Kind::Poset, name);
				posets_.emplace(name, std::move(p));
			} catch (const Error &e) {
				fail_at(head, e.kind(), e.what());
			}
		} else if (ts.accept_ident("algebra")) {
			std::string name = ts.expect_name();
			ts.expect_ident("over");
			const Token sig_tok = ts.peek();
			const Signature &sig = lookup(sigs_, Kind::Sig, ts.expect_name());
			(void)sig_tok;
			const bool faulty = ts.accept_ident("faulty");
			ts.expect_punct("{");
			auto names = read_elements(ts);
			std::vector<std::pair<std::size_t, std::size_t>> order;
			std::map<std::string, FiniteAlgebra::Table> tables;
			std::vector<std::pair<std::size_t, std::size_t>> sups;
			while (!ts.accept_punct("}")) {
				if (ts.accept_ident("op")) {
					const Token op_tok = ts.peek();
					std::string op = ts.expect_name();
					const OpSymbol *sym = sig.find(op);
					if (sym == nullptr)
						fail_at(op_tok, ErrorKind::UnknownSymbol,
							"'" + op + "' is not in signature '" + sig.name() + "'");
					if (tables.contains(op))
						fail_at(op_tok, ErrorKind::InvalidAlgebra, "second table for '" + op + "'");
					tables.emplace(op, read_table(ts, *sym, names));
				} else if (ts.accept_ident("sup")) {
					std::size_t a = read_element(ts, names);
					ts.expect_punct("=");
					std::size_t b = read_element(ts, names);
					ts.accept_punct(";");
					sups.emplace_back(a, b);
				} else {
					order.push_back(read_cover(ts, names));
				}
			}
			try {
				FiniteAlgebra a = faulty ? FiniteAlgebra::unchecked(name, sig, names, order, tables)
							 : FiniteAlgebra(name, sig, names, order, tables);
				for (auto [x, v] : sups)
					a.override_sup(x, v);
				declare(Kind::Algebra, name);
				if (faulty)
					faulty_.insert(name);
				algebras_.emplace(name, std::move(a));
			} catch (const Error &e) {
				fail_at(head, e.kind(), e.what());
			}
		} else if (ts.accept_ident("graph")) {
			std::string name = ts.expect_name();
			ts.expect_punct("{");
			WeightedDigraph g;
			while (!ts.accept_punct("}")) {
				if (ts.accept_ident("node")) {
					g.add_node(ts.expect_name());
				} else {
					std::string u = ts.expect_name();
					std::string v = ts.expect_name();
					g.add_edge(u, v, ts.expect_number());
				}
				ts.accept_punct(";");
			}
			declare(Kind::Graph, name);
			graphs_.emplace(name, std::move(g));
		} else if (ts.accept_ident("ineq")) {
			std::string name = ts.expect_name();
			ts.expect_ident("over");
			InequalitySet e{lookup(sigs_, Kind::Sig, ts.expect_name()), {}};
			ts.expect_punct("{");
			while (!ts.accept_punct("}")) {
				PartialTerm l = detail::read_term(ts, e.sig);
				ts.expect_punct("<=");
				PartialTerm r = detail::read_term(ts, e.sig);
				ts.accept_punct(";");
				e.pairs.emplace_back(std::move(l), std::move(r));
			}
			declare(Kind::Ineq, name);
			ineqs_.emplace(name, std::move(e));
		} else if (ts.accept_ident("morphism")) {
			std::string name = ts.expect_name();
			MorphismDecl m;
			ts.expect_ident("from");
			m.from = ts.expect_name();
			ts.expect_ident("to");
			m.to = ts.expect_name();
			ts.expect_punct("{");
			while (!ts.accept_punct("}")) {
				const Token at = ts.peek();
				std::string a = ts.expect_name();
				ts.expect_punct("->");
				std::string b = ts.expect_name();
				ts.accept_punct(";");
				if (!m.map.emplace(a, b).second)
					fail_at(at, ErrorKind::InvalidAlgebra, "'" + a + "' is mapped twice");
			}
			declare(Kind::Morphism, name);
			morphisms_.emplace(name, std::move(m));
		} else {
			ts.fail("expected a declaration (sig, sys, poset, algebra, graph, ineq or morphism)");
		}
	}
}

Workspace parse_workspace(std::string_view text)
{
	Workspace w;
	w.load(text);
	return w;
}

std::string poset_text(const std::string &name, const FinitePosetWithBot &p)
{
	return "poset " + name + " {\n" + elements_text(p.names()) +
	       covers_text(p.names(), covers([&](std::size_t a, std::size_t b) { return p.leq(a, b); }, p.size())) +
	       "}";
}

std::string algebra_text(const FiniteAlgebra &a, bool faulty)
{
	const auto &names = a.element_names();
	const std::size_t n = names.size();
	std::string out = "algebra " + a.name() + " over " + a.sig().name() + (faulty ? " faulty" : "") + " {\n";
	out += elements_text(names);
	out += covers_text(names, covers([&](std::size_t x, std::size_t y) { return a.leq(x, y); }, n));
	for (const auto &op : a.sig().ops()) {
		auto it = a.tables().find(op.name);
		if (it == a.tables().end())
			continue;
		const auto &t = it->second;
		if (op.arity <= 1) {
			out += "  op " + op.name + " {";
			for (auto v : t)
				out += " " + names[v];
			out += " }\n";
			continue;
		}
		out += "  op " + op.name + " {\n";
		for (std::size_t row = 0; row * n < t.size(); ++row) {
			std::vector<std::string> label;
			std::size_t r = row;
			for (std::size_t i = 0; i + 1 < op.arity; ++i) {
				label.insert(label.begin(), names[r % n]);
				r /= n;
			}
			out += "    ";
			for (std::size_t i = 0; i < label.size(); ++i)
				out += (i ? ", " : "") + label[i];
			out += ":";
			for (std::size_t c = 0; c < n; ++c)
				out += " " + names[t[row * n + c]];
			out += "\n";
		}
		out += "  }\n";
	}
	for (std::size_t x = 0; x < n; ++x)
		if (a.sup_of_principal(x) != x)
			out += "  sup " + names[x] + " = " + names[a.sup_of_principal(x)] + "\n";
	return out + "}";
}

std::string to_string(const Workspace &w)
{
	std::string out;
	for (const auto &[k, name] : w.declarations()) {
		switch (k) {
		case Workspace::Kind::Sig:
			out += to_string(w.sig(name));
			break;
		case Workspace::Kind::Sys:
			out += to_string(w.system(name));
			break;
		case Workspace::Kind::Poset:
			out += poset_text(name, w.poset(name));
			break;
		case Workspace::Kind::Algebra:
			out += algebra_text(w.algebra(name), w.is_faulty(name));
			break;
		case Workspace::Kind::Graph: {
			const auto &g = w.graph(name);
			out += "graph " + name + " {\n";
			std::set<std::string> touched;
			for (const auto &e : g.edges()) {
				out += "  " + e.from + " " + e.to + " " + std::to_string(e.weight) + "\n";
				touched.insert(e.from);
				touched.insert(e.to);
			}
			for (const auto &v : g.nodes())
				if (!touched.contains(v))
					out += "  node " + v + "\n";
			out += "}";
			break;
		}
		case Workspace::Kind::Ineq: {
			const auto &e = w.inequalities(name);
			out += "ineq " + name + " over " + e.sig.name() + " {\n";
			for (const auto &[l, r] : e.pairs)
				out += "  " + to_string(l) + " <= " + to_string(r) + "\n";
			out += "}";
			break;
		}
		case Workspace::Kind::Morphism: {
			const auto &m = w.morphism(name);
			out += "morphism " + name + " from " + m.from + " to " + m.to + " {\n";
			for (const auto &[a, b] : m.map)
				out += "  " + a + " -> " + b + "\n";
			out += "}";
			break;
		}
		}
		out += "\n";
	}
	return out;
}

std::vector<EnvLine> parse_env(std::string_view text, const Signature &sig)
{
	std::vector<EnvLine> out;
	std::istringstream in{std::string(text)};
	std::string raw;
	std::size_t lineno = 0;
	while (std::getline(in, raw)) {
		++lineno;
		if (auto hash = raw.find('#'); hash != std::string::npos)
			raw.erase(hash);
		auto first = raw.find_first_not_of(" \t\r");
		if (first == std::string::npos)
			continue;
		auto eq = raw.find('=');
		auto where = [&](std::size_t col) { return std::to_string(lineno) + ":" + std::to_string(col + 1) + ": "; };
		if (eq == std::string::npos)
			throw Error(ErrorKind::Parse, where(first) + "expected 'name = value'");
		EnvLine l;
		l.line = lineno;
		{
			TokenStream ts(raw.substr(0, eq));
			l.name = ts.expect_name();
			if (!ts.at_end())
				throw Error(ErrorKind::Parse, where(first) + "expected a single name before '='");
		}
		std::string rhs = raw.substr(eq + 1);
		auto b = rhs.find_first_not_of(" \t\r");
		auto e = rhs.find_last_not_of(" \t\r");
		if (b == std::string::npos)
			throw Error(ErrorKind::Parse, where(eq + 1) + "missing value");
		rhs = rhs.substr(b, e - b + 1);
		const bool number = std::all_of(rhs.begin(), rhs.end(), [](char c) { return c >= '0' && c <= '9'; });
		if (number || rhs == "inf" || rhs == "∞" || rhs.front() == '{') {
			l.literal = rhs;
		} else {
			try {
				l.term = parse_term(sig, rhs);
			} catch (const Error &err) {
				throw Error(err.kind(), "line " + std::to_string(lineno) + ": " + err.what());
			}
		}
		out.push_back(std::move(l));
	}
	return out;
}

} // namespace deltalg
