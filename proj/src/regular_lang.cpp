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

#include "deltalg/regular_lang.hpp"

#include "deltalg/error.hpp"

#include <algorithm>
#include <deque>
#include <optional>

namespace deltalg {

Nfa::Nfa()
{
	edges_.emplace_back();
}

std::size_t Nfa::add_state()
{
	edges_.emplace_back();
	return edges_.size() - 1;
}

std::size_t Nfa::absorb(const Nfa &other)
{
	const std::size_t off = edges_.size();
	for (const auto &out : other.edges_) {
		std::vector<Edge> moved;
		for (const auto &e : out)
			moved.push_back({e.label, e.to + off});
		edges_.push_back(std::move(moved));
	}
	return off;
}

Nfa Nfa::epsilon()
{
	Nfa n;
	n.accept_.insert(0);
	return n;
}

Nfa Nfa::word(const std::string &w)
{
	Nfa n;
	std::size_t q = 0;
	for (char c : w) {
		std::size_t r = n.add_state();
		n.edges_[q].push_back({static_cast<unsigned char>(c), r});
		q = r;
	}
	n.accept_.insert(q);
	return n;
}

Nfa Nfa::from_words(const WordSet &words)
{
	Nfa n;
	for (const auto &w : words)
		n = unite(n, word(w));
	return n.trim();
}

Nfa Nfa::unite(const Nfa &a, const Nfa &b)
{
	Nfa n;
	std::size_t oa = n.absorb(a);
	std::size_t ob = n.absorb(b);
	n.edges_[0].push_back({kEpsilon, a.start_ + oa});
	n.edges_[0].push_back({kEpsilon, b.start_ + ob});
	for (auto q : a.accept_)
		n.accept_.insert(q + oa);
	for (auto q : b.accept_)
		n.accept_.insert(q + ob);
	return n;
}

Nfa Nfa::concat(const Nfa &a, const Nfa &b)
{
	Nfa n = a;
	std::size_t ob = n.absorb(b);
	for (auto q : a.accept_)
		n.edges_[q].push_back({kEpsilon, b.start_ + ob});
	n.accept_.clear();
	for (auto q : b.accept_)
		n.accept_.insert(q + ob);
	return n;
}

Nfa Nfa::star(const Nfa &a)
{
	Nfa n;
	std::size_t oa = n.absorb(a);
	n.accept_.insert(0);
	n.edges_[0].push_back({kEpsilon, a.start_ + oa});
	for (auto q : a.accept_)
		n.edges_[q + oa].push_back({kEpsilon, 0});
	return n;
}

Nfa Nfa::trim() const
{
	const std::size_t n = edges_.size();
	std::vector<bool> fwd(n, false), bwd(n, false);
	std::deque<std::size_t> work{start_};
	fwd[start_] = true;
	while (!work.empty()) {
		auto q = work.front();
		work.pop_front();
		for (const auto &e : edges_[q])
			if (!fwd[e.to]) {
				fwd[e.to] = true;
				work.push_back(e.to);
			}
	}
	std::vector<std::vector<std::size_t>> rev(n);
	for (std::size_t q = 0; q < n; ++q)
		for (const auto &e : edges_[q])
			rev[e.to].push_back(q);
	for (auto q : accept_) {
		bwd[q] = true;
		work.push_back(q);
	}
	while (!work.empty()) {
		auto q = work.front();
		work.pop_front();
		for (auto p : rev[q])
			if (!bwd[p]) {
				bwd[p] = true;
				work.push_back(p);
			}
	}
	if (!bwd[start_])
		return Nfa();
	std::vector<std::size_t> id(n, n);
	Nfa out;
	out.edges_.clear();
	// Start keeps index 0 in the result.
	id[start_] = 0;
	out.edges_.emplace_back();
	for (std::size_t q = 0; q < n; ++q)
		if (q != start_ && fwd[q] && bwd[q]) {
			id[q] = out.edges_.size();
			out.edges_.emplace_back();
		}
	for (std::size_t q = 0; q < n; ++q) {
		if (id[q] == n)
			continue;
		for (const auto &e : edges_[q])
			if (id[e.to] != n)
				out.edges_[id[q]].push_back({e.label, id[e.to]});
		if (accept_.contains(q))
			out.accept_.insert(id[q]);
	}
	out.start_ = 0;
	return out;
}

std::string Nfa::alphabet() const
{
	std::string out;
	for (const auto &es : edges_)
		for (const auto &e : es)
			if (e.label != kEpsilon)
				out += static_cast<char>(e.label);
	std::sort(out.begin(), out.end());
	out.erase(std::unique(out.begin(), out.end()), out.end());
	return out;
}

std::set<std::size_t> Nfa::closure(std::set<std::size_t> s) const
{
	std::deque<std::size_t> work(s.begin(), s.end());
	while (!work.empty()) {
		auto q = work.front();
		work.pop_front();
		for (const auto &e : edges_[q])
			if (e.label == kEpsilon && s.insert(e.to).second)
				work.push_back(e.to);
	}
	return s;
}

std::set<std::size_t> Nfa::move(const std::set<std::size_t> &s, char c) const
{
	std::set<std::size_t> out;
	const int label = static_cast<unsigned char>(c);
	for (auto q : s)
		for (const auto &e : edges_[q])
			if (e.label == label)
				out.insert(e.to);
	return closure(std::move(out));
}

bool Nfa::accepts(const std::string &w) const
{
	auto s = closure({start_});
	for (char c : w)
		s = move(s, c);
	return std::any_of(s.begin(), s.end(), [&](std::size_t q) { return accept_.contains(q); });
}

bool Nfa::is_empty() const
{
	return trim().accept_.empty();
}

bool Nfa::subset_of(const Nfa &other) const
{
	std::string letters = alphabet() + other.alphabet();
	std::sort(letters.begin(), letters.end());
	letters.erase(std::unique(letters.begin(), letters.end()), letters.end());
	auto accepting = [](const Nfa &n, const std::set<std::size_t> &s) {
		return std::any_of(s.begin(), s.end(), [&](std::size_t q) { return n.accept_.contains(q); });
	};
	using Pair = std::pair<std::set<std::size_t>, std::set<std::size_t>>;
	Pair init{closure({start_}), other.closure({other.start_})};
	std::set<Pair> seen{init};
	std::deque<Pair> work{init};
	while (!work.empty()) {
		Pair p = std::move(work.front());
		work.pop_front();
		if (accepting(*this, p.first) && !accepting(other, p.second))
			return false;
		for (char c : letters) {
			Pair q{move(p.first, c), other.move(p.second, c)};
			if (q.first.empty())
				continue;
			if (seen.insert(q).second)
				work.push_back(std::move(q));
		}
	}
	return true;
}

std::string Nfa::transitions_text() const
{
	const Nfa t = trim();
	const std::string letters = t.alphabet();
	std::map<std::set<std::size_t>, std::size_t> id;
	std::vector<std::set<std::size_t>> order;
	auto intern = [&](std::set<std::size_t> s) {
		auto [it, fresh] = id.emplace(s, order.size());
		if (fresh)
			order.push_back(std::move(s));
		return it->second;
	};
	intern(t.closure({t.start_}));
	std::string lines;
	for (std::size_t i = 0; i < order.size(); ++i) {
		for (char c : letters) {
			auto next = t.move(order[i], c);
			if (next.empty())
				continue;
			std::size_t j = intern(std::move(next));
			lines += std::to_string(i) + " " + c + " " + std::to_string(j) + "\n";
		}
	}
	std::string acc;
	for (std::size_t i = 0; i < order.size(); ++i)
		if (std::any_of(order[i].begin(), order[i].end(), [&](std::size_t q) { return t.accept_.contains(q); }))
			acc += " " + std::to_string(i);
	return "start 0\naccept" + acc + "\n" + lines;
}

WordSet regular_slice(const Nfa &r, std::size_t bound)
{
	const Nfa t = r.trim();
	const std::string letters = t.alphabet();
	WordSet out;
	std::vector<std::pair<std::string, std::set<std::size_t>>> layer{{"", t.closure({t.start_})}};
	for (std::size_t len = 0;; ++len) {
		std::vector<std::pair<std::string, std::set<std::size_t>>> next;
		for (const auto &[w, s] : layer) {
			if (std::any_of(s.begin(), s.end(), [&](std::size_t q) { return t.accept_.contains(q); }))
				out.insert(w);
			if (len == bound)
				continue;
			for (char c : letters) {
				auto m = t.move(s, c);
				if (!m.empty())
					next.emplace_back(w + c, std::move(m));
			}
		}
		if (len == bound || next.empty())
			break;
		layer = std::move(next);
	}
	return out;
}

std::map<std::string, Nfa> letter_automata(const RegSys &s, const std::map<std::string, std::string> &overrides)
{
	std::map<std::string, Nfa> out;
	for (const auto &g : s.gens())
		out.emplace(g, Nfa::word(letter_of(g, overrides)));
	return out;
}

std::map<std::string, Nfa> arden_solve_linear(const RegSys &s, const std::map<std::string, Nfa> &letters)
{
	LinearSide side = LinearSide::Right;
	LinearForm form;
	try {
		form = linear_form(s, side);
	} catch (const Error &e) {
		if (e.kind() != ErrorKind::NotLinear)
			throw;
		side = LinearSide::Left;
		form = linear_form(s, side);
	}
	const SemiringProfile p = *s.profile();
	const auto &vars = s.sysvars();
	const std::size_t n = vars.size();
	std::map<std::string, std::size_t> idx;
	for (std::size_t i = 0; i < n; ++i)
		idx.emplace(vars[i], i);

	auto factor = [&](const PartialTerm &f) -> Nfa {
		if (f.is_var()) {
			auto it = letters.find(f.label());
			if (it == letters.end())
				throw Error(ErrorKind::MissingBinding, "no language for generator '" + f.label() + "'");
			return it->second;
		}
		if (f.is_app() && f.label() == p.one)
			return Nfa::epsilon();
		return Nfa::empty();
	};
	// Product in reading order for right-linear rows, reversed for left.
	auto cat = [&](const Nfa &outer, const Nfa &inner) {
		return side == LinearSide::Right ? Nfa::concat(outer, inner).trim() : Nfa::concat(inner, outer).trim();
	};
	auto add = [](std::optional<Nfa> &acc, const Nfa &x) {
		if (x.is_empty())
			return;
		acc = acc ? Nfa::unite(*acc, x).trim() : x;
	};

	std::vector<std::vector<std::optional<Nfa>>> coef(n, std::vector<std::optional<Nfa>>(n));
	std::vector<std::optional<Nfa>> base(n);
	for (std::size_t i = 0; i < n; ++i) {
		for (const auto &m : form.at(vars[i])) {
			Nfa prod = Nfa::epsilon();
			for (const auto &f : m.factors)
				prod = Nfa::concat(prod, factor(f)).trim();
			if (m.var)
				add(coef[i][idx.at(*m.var)], prod);
			else
				add(base[i], prod);
		}
	}

	for (std::size_t i = 0; i < n; ++i) {
		if (coef[i][i]) {
			const Nfa loop = Nfa::star(*coef[i][i]).trim();
			coef[i][i].reset();
			for (std::size_t j = 0; j < n; ++j)
				if (coef[i][j])
					coef[i][j] = cat(loop, *coef[i][j]);
			if (base[i])
				base[i] = cat(loop, *base[i]);
		}
		for (std::size_t k = 0; k < n; ++k) {
			if (k == i || !coef[k][i])
				continue;
			const Nfa via = *coef[k][i];
			coef[k][i].reset();
			for (std::size_t j = 0; j < n; ++j)
				if (coef[i][j])
					add(coef[k][j], cat(via, *coef[i][j]));
			if (base[i])
				add(base[k], cat(via, *base[i]));
		}
	}

	std::map<std::string, Nfa> out;
	for (std::size_t i = 0; i < n; ++i)
		out.emplace(vars[i], base[i] ? *base[i] : Nfa::empty());
	return out;
}

} // namespace deltalg
