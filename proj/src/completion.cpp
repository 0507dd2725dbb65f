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

#include "deltalg/completion.hpp"

#include "deltalg/error.hpp"
#include "deltalg/regsys_syntax.hpp"
#include "deltalg/sampling.hpp"

#include <algorithm>
#include <bit>
#include <functional>
#include <random>

namespace deltalg {

// ---------------------------------------------------------------------------
// Finite posets

FinitePosetWithBot::FinitePosetWithBot(std::vector<std::string> names,
				       const std::vector<std::pair<std::size_t, std::size_t>> &order)
	: names_(std::move(names))
{
	const std::size_t n = names_.size();
	if (n == 0 || n > 64)
		throw Error(ErrorKind::InvalidAlgebra, "a poset needs between 1 and 64 elements");
	std::set<std::string> seen(names_.begin(), names_.end());
	if (seen.size() != n)
		throw Error(ErrorKind::InvalidAlgebra, "poset element names must be distinct");
	leq_.assign(n * n, false);
	for (std::size_t i = 0; i < n; ++i)
		leq_[i * n + i] = true;
	for (auto [a, b] : order) {
		if (a >= n || b >= n)
			throw Error(ErrorKind::InvalidAlgebra, "order pair refers to an unknown element");
		leq_[a * n + b] = true;
	}
	for (std::size_t k = 0; k < n; ++k)
		for (std::size_t i = 0; i < n; ++i)
			if (leq_[i * n + k])
				for (std::size_t j = 0; j < n; ++j)
					if (leq_[k * n + j])
						leq_[i * n + j] = true;
	for (std::size_t i = 0; i < n; ++i)
		for (std::size_t j = i + 1; j < n; ++j)
			if (leq_[i * n + j] && leq_[j * n + i])
				throw Error(ErrorKind::InvalidAlgebra,
					    "order is not antisymmetric: " + names_[i] + " and " + names_[j]);
	std::optional<std::size_t> bot;
	for (std::size_t i = 0; i < n && !bot; ++i) {
		bool least = true;
		for (std::size_t j = 0; j < n; ++j)
			least = least && leq_[i * n + j];
		if (least)
			bot = i;
	}
	if (!bot)
		throw Error(ErrorKind::InvalidAlgebra, "poset has no least element");
	bottom_ = *bot;
}

std::uint64_t FinitePosetWithBot::down(std::size_t a) const
{
	std::uint64_t m = 0;
	for (std::size_t b = 0; b < size(); ++b)
		if (leq(b, a))
			m |= std::uint64_t{1} << b;
	return m;
}

std::uint64_t FinitePosetWithBot::down_closure(std::uint64_t members) const
{
	std::uint64_t m = 0;
	for (std::size_t a = 0; a < size(); ++a)
		if (members >> a & 1)
			m |= down(a);
	return m;
}

bool FinitePosetWithBot::is_directed(std::uint64_t members) const
{
	if (members == 0)
		return false;
	for (std::size_t a = 0; a < size(); ++a) {
		if (!(members >> a & 1))
			continue;
		for (std::size_t b = a + 1; b < size(); ++b) {
			if (!(members >> b & 1))
				continue;
			bool bounded = false;
			for (std::size_t c = 0; c < size() && !bounded; ++c)
				bounded = (members >> c & 1) && leq(a, c) && leq(b, c);
			if (!bounded)
				return false;
		}
	}
	return true;
}

std::optional<std::size_t> FinitePosetWithBot::maximum(std::uint64_t members) const
{
	for (std::size_t a = 0; a < size(); ++a) {
		if (!(members >> a & 1))
			continue;
		bool top = true;
		for (std::size_t b = 0; b < size() && top; ++b)
			top = !(members >> b & 1) || leq(b, a);
		if (top)
			return a;
	}
	return std::nullopt;
}

std::string FinitePosetWithBot::render(std::uint64_t members) const
{
	std::string out = "{";
	bool first = true;
	for (std::size_t a = 0; a < size(); ++a)
		if (members >> a & 1) {
			out += (first ? "" : ", ") + names_[a];
			first = false;
		}
	return out + "}";
}

FinitePosetWithBot poset_of(const FiniteAlgebra &a)
{
	std::vector<std::pair<std::size_t, std::size_t>> order;
	for (std::size_t i = 0; i < a.size(); ++i)
		for (std::size_t j = 0; j < a.size(); ++j)
			if (i != j && a.leq(i, j))
				order.emplace_back(i, j);
	return FinitePosetWithBot(a.element_names(), order);
}

namespace {

std::vector<std::string> element_names(std::size_t n)
{
	std::vector<std::string> out{"bot"};
	for (std::size_t i = 1; i < n; ++i)
		out.push_back(std::string(1, static_cast<char>('a' + i - 1)));
	return out;
}

} // namespace

std::vector<FinitePosetWithBot> all_posets(std::size_t max_size)
{
	if (max_size > kDefaultPosetBound)
		throw Error(ErrorKind::BoundExceeded, "poset enumeration is limited to " +
							      std::to_string(kDefaultPosetBound) + " elements");
	std::vector<FinitePosetWithBot> out;
	for (std::size_t n = 1; n <= max_size; ++n) {
		std::vector<std::pair<std::size_t, std::size_t>> pairs;
		for (std::size_t i = 1; i < n; ++i)
			for (std::size_t j = 1; j < n; ++j)
				if (i != j)
					pairs.emplace_back(i, j);
		for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << pairs.size()); ++mask) {
			std::vector<std::vector<bool>> rel(n, std::vector<bool>(n, false));
			for (std::size_t k = 0; k < pairs.size(); ++k)
				if (mask >> k & 1)
					rel[pairs[k].first][pairs[k].second] = true;
			bool ok = true;
			for (std::size_t i = 1; i < n && ok; ++i)
				for (std::size_t j = 1; j < n && ok; ++j) {
					if (!rel[i][j])
						continue;
					if (rel[j][i])
						ok = false;
					for (std::size_t k = 1; k < n && ok; ++k)
						if (rel[j][k] && !rel[i][k])
							ok = false;
				}
			if (!ok)
				continue;
			std::vector<std::pair<std::size_t, std::size_t>> order;
			for (std::size_t i = 1; i < n; ++i)
				order.emplace_back(0, i);
			for (std::size_t k = 0; k < pairs.size(); ++k)
				if (mask >> k & 1)
					order.push_back(pairs[k]);
			out.emplace_back(element_names(n), order);
		}
	}
	return out;
}

std::vector<FiniteAlgebra::Table> monotone_tables(const FinitePosetWithBot &p, std::size_t arity)
{
	const std::size_t n = p.size();
	std::size_t cells = 1;
	for (std::size_t i = 0; i < arity; ++i)
		cells *= n;
	std::vector<std::vector<std::size_t>> tuple(cells, std::vector<std::size_t>(arity));
	for (std::size_t c = 0; c < cells; ++c) {
		std::size_t r = c;
		for (std::size_t i = arity; i-- > 0;) {
			tuple[c][i] = r % n;
			r /= n;
		}
	}
	auto below = [&](std::size_t u, std::size_t v) {
		for (std::size_t i = 0; i < arity; ++i)
			if (!p.leq(tuple[u][i], tuple[v][i]))
				return false;
		return true;
	};
	std::vector<FiniteAlgebra::Table> out;
	FiniteAlgebra::Table t(cells, 0);
	std::function<void(std::size_t)> fill = [&](std::size_t c) {
		if (c == cells) {
			out.push_back(t);
			return;
		}
		for (std::size_t v = 0; v < n; ++v) {
			bool ok = true;
			for (std::size_t u = 0; u < c && ok; ++u) {
				if (below(u, c) && !p.leq(t[u], v))
					ok = false;
				if (below(c, u) && !p.leq(v, t[u]))
					ok = false;
			}
			if (ok) {
				t[c] = v;
				fill(c + 1);
			}
		}
	};
	fill(0);
	return out;
}

// ---------------------------------------------------------------------------
// Ideals of finite posets

std::vector<Ideal> ideals_of(const FinitePosetWithBot &p, std::size_t bound)
{
	const std::size_t n = p.size();
	if (n > bound)
		throw Error(ErrorKind::BoundExceeded, "poset has " + std::to_string(n) + " elements; the bound is " +
							      std::to_string(bound));
	std::vector<std::optional<Ideal>> by_max(n);
	for (std::uint64_t m = 1; m < (std::uint64_t{1} << n); ++m) {
		if (!p.is_down_closed(m) || !p.is_directed(m))
			continue;
		auto top = p.maximum(m);
		if (!top)
			throw Error(ErrorKind::InvalidAlgebra, "non-principal ideal " + p.render(m));
		by_max[*top] = Ideal{m};
	}
	std::vector<Ideal> out;
	for (std::size_t a = 0; a < n; ++a) {
		if (!by_max[a] || by_max[a]->members != p.down(a))
			throw Error(ErrorKind::InvalidAlgebra, "principal ideal of " + p.name(a) + " is missing");
		out.push_back(*by_max[a]);
	}
	return out;
}

std::string to_string(const Ideal &i, const FinitePosetWithBot &p)
{
	auto top = p.maximum(i.members);
	if (top && p.down(*top) == i.members)
		return "↓" + p.name(*top);
	return p.render(i.members);
}

IdealCompletion::IdealCompletion(const FinitePosetWithBot &base, std::size_t bound)
	: base_(base), ideals_(ideals_of(base, bound)), poset_([&] {
		  std::vector<std::string> names;
		  std::vector<std::pair<std::size_t, std::size_t>> order;
		  for (std::size_t i = 0; i < ideals_.size(); ++i) {
			  names.push_back(to_string(ideals_[i], base));
			  for (std::size_t j = 0; j < ideals_.size(); ++j)
				  if (i != j && (ideals_[i].members & ~ideals_[j].members) == 0)
					  order.emplace_back(i, j);
		  }
		  return FinitePosetWithBot(names, order);
	  }())
{
}

std::optional<std::size_t> IdealCompletion::index_of(const Ideal &i) const
{
	for (std::size_t k = 0; k < ideals_.size(); ++k)
		if (ideals_[k] == i)
			return k;
	return std::nullopt;
}

Ideal etaD(const FinitePosetWithBot &p, std::size_t a)
{
	return Ideal{p.down(a)};
}

Ideal muD(const IdealCompletion &inner, const Ideal &outer)
{
	std::uint64_t u = 0;
	for (std::size_t i = 0; i < inner.poset().size(); ++i)
		if (outer.members >> i & 1)
			u |= inner.ideal(i).members;
	return Ideal{inner.base().down_closure(u)};
}

namespace {

/// `D h` on element `i` of `from.poset()`: the down-closure of the image,
/// located among the ideals of `to`.
std::optional<std::size_t> d_map(const IdealCompletion &from, const IdealCompletion &to,
				 const std::vector<std::size_t> &h, std::size_t i)
{
	std::uint64_t img = 0;
	for (std::size_t x = 0; x < from.base().size(); ++x)
		if (from.ideal(i).members >> x & 1)
			img |= std::uint64_t{1} << h[x];
	return to.index_of(Ideal{to.base().down_closure(img)});
}

// ---------------------------------------------------------------------------
// Terms over arbitrary leaves, for the functor F of partial terms

template <class L>
struct Tm {
	enum class K { Bot, Leaf, App };
	K k = K::Bot;
	L leaf{};
	std::string op;
	std::vector<Tm> kids;

	static Tm bot() { return Tm(); }
	static Tm of(L x)
	{
		Tm t;
		t.k = K::Leaf;
		t.leaf = std::move(x);
		return t;
	}
	static Tm app(std::string op, std::vector<Tm> kids)
	{
		Tm t;
		t.k = K::App;
		t.op = std::move(op);
		t.kids = std::move(kids);
		return t;
	}
};

template <class L>
bool operator==(const Tm<L> &a, const Tm<L> &b)
{
	return a.k == b.k && a.op == b.op && a.leaf == b.leaf && a.kids == b.kids;
}

template <class L>
bool operator<(const Tm<L> &a, const Tm<L> &b)
{
	if (a.k != b.k)
		return a.k < b.k;
	if (a.op != b.op)
		return a.op < b.op;
	if (a.leaf < b.leaf)
		return true;
	if (b.leaf < a.leaf)
		return false;
	return std::lexicographical_compare(a.kids.begin(), a.kids.end(), b.kids.begin(), b.kids.end());
}

template <class L, class F>
auto fmap(const Tm<L> &t, const F &f) -> Tm<std::decay_t<decltype(f(t.leaf))>>
{
	using R = Tm<std::decay_t<decltype(f(t.leaf))>>;
	switch (t.k) {
	case Tm<L>::K::Bot:
		return R::bot();
	case Tm<L>::K::Leaf:
		return R::of(f(t.leaf));
	case Tm<L>::K::App:
		break;
	}
	std::vector<R> kids;
	for (const auto &k : t.kids)
		kids.push_back(fmap(k, f));
	return R::app(t.op, std::move(kids));
}

template <class L>
Tm<L> muF(const Tm<Tm<L>> &t)
{
	switch (t.k) {
	case Tm<Tm<L>>::K::Bot:
		return Tm<L>::bot();
	case Tm<Tm<L>>::K::Leaf:
		return t.leaf;
	case Tm<Tm<L>>::K::App:
		break;
	}
	std::vector<Tm<L>> kids;
	for (const auto &k : t.kids)
		kids.push_back(muF(k));
	return Tm<L>::app(t.op, std::move(kids));
}

template <class L>
std::size_t height(const Tm<L> &t)
{
	std::size_t h = 0;
	if (t.k == Tm<L>::K::App) {
		h = 1;
		for (const auto &k : t.kids)
			h = std::max(h, 1 + height(k));
	}
	return h;
}

/// Calls `visit` with every choice of one element from each set.
template <class T, class V>
void for_each_choice(const std::vector<std::vector<T>> &sets, const V &visit)
{
	std::vector<T> pick;
	std::function<void(std::size_t)> go = [&](std::size_t i) {
		if (i == sets.size()) {
			visit(pick);
			return;
		}
		for (const auto &x : sets[i]) {
			pick.push_back(x);
			go(i + 1);
			pick.pop_back();
		}
	};
	go(0);
}

// Levels bundle a carrier type with its order and principal down-sets.

struct BaseLv {
	const FinitePosetWithBot *p;
	using T = std::size_t;

	bool leq(T a, T b) const { return p->leq(a, b); }
	std::set<T> below(T a) const
	{
		std::set<T> out;
		for (std::size_t b = 0; b < p->size(); ++b)
			if (p->leq(b, a))
				out.insert(b);
		return out;
	}
	std::string show(T a) const { return p->name(a); }
	std::vector<T> elements() const
	{
		std::vector<T> out;
		for (std::size_t a = 0; a < p->size(); ++a)
			out.push_back(a);
		return out;
	}
};

template <class Lv>
struct TermLv {
	Lv in;
	using T = Tm<typename Lv::T>;

	bool leq(const T &s, const T &t) const
	{
		if (s.k == T::K::Bot)
			return true;
		if (s.k != t.k)
			return false;
		if (s.k == T::K::Leaf)
			return in.leq(s.leaf, t.leaf);
		if (s.op != t.op || s.kids.size() != t.kids.size())
			return false;
		for (std::size_t i = 0; i < s.kids.size(); ++i)
			if (!leq(s.kids[i], t.kids[i]))
				return false;
		return true;
	}
	std::set<T> below(const T &t) const
	{
		std::set<T> out{T::bot()};
		if (t.k == T::K::Leaf) {
			for (const auto &y : in.below(t.leaf))
				out.insert(T::of(y));
		} else if (t.k == T::K::App) {
			std::vector<std::vector<T>> sets;
			for (const auto &k : t.kids) {
				auto b = below(k);
				sets.emplace_back(b.begin(), b.end());
			}
			for_each_choice(sets, [&](const std::vector<T> &kids) { out.insert(T::app(t.op, kids)); });
		}
		return out;
	}
	std::string show(const T &t) const
	{
		switch (t.k) {
		case T::K::Bot:
			return "bot";
		case T::K::Leaf:
			return in.show(t.leaf);
		case T::K::App:
			break;
		}
		std::string s = t.op;
		if (t.kids.empty())
			return s;
		s += "(";
		for (std::size_t i = 0; i < t.kids.size(); ++i)
			s += (i ? ", " : "") + show(t.kids[i]);
		return s + ")";
	}
};

template <class Lv>
struct IdealLv {
	Lv in;
	using T = std::set<typename Lv::T>;

	bool leq(const T &a, const T &b) const { return std::includes(b.begin(), b.end(), a.begin(), a.end()); }
	std::set<T> below(const T &a) const
	{
		std::set<T> out;
		for (const auto &x : a)
			out.insert(in.below(x));
		return out;
	}
	std::string show(const T &a) const
	{
		for (const auto &x : a)
			if (in.below(x) == a)
				return "↓" + in.show(x);
		std::string s = "{";
		bool first = true;
		for (const auto &x : a) {
			s += (first ? "" : ", ") + in.show(x);
			first = false;
		}
		return s + "}";
	}
	std::vector<T> elements() const
	{
		std::vector<T> out;
		for (const auto &x : in.elements())
			out.push_back(in.below(x));
		return out;
	}
};

/// `f(A1..An) -> ↓{f(a1..an)}`, recursively; with down-closed leaves the
/// result is down-closed by construction.
template <class L>
std::set<Tm<L>> lambda(const Tm<std::set<L>> &t)
{
	using R = Tm<L>;
	std::set<R> out{R::bot()};
	switch (t.k) {
	case Tm<std::set<L>>::K::Bot:
		return out;
	case Tm<std::set<L>>::K::Leaf:
		for (const auto &x : t.leaf)
			out.insert(R::of(x));
		return out;
	case Tm<std::set<L>>::K::App:
		break;
	}
	std::vector<std::vector<R>> sets;
	for (const auto &k : t.kids) {
		auto s = lambda(k);
		sets.emplace_back(s.begin(), s.end());
	}
	for_each_choice(sets, [&](const std::vector<R> &kids) { out.insert(R::app(t.op, kids)); });
	return out;
}

/// `mu(↓A) = ↓(union A)` for a generating family of down-closed sets.
template <class T>
std::set<T> mu_generated(const std::vector<std::set<T>> &family)
{
	std::set<T> out;
	for (const auto &s : family)
		out.insert(s.begin(), s.end());
	return out;
}

/// `D h (I) = ↓{h(x) : x in I}` in the target level.
template <class Lv, class T, class H>
std::set<typename Lv::T> d_apply(const Lv &target, const std::set<T> &ideal, const H &h)
{
	std::set<typename Lv::T> out;
	for (const auto &x : ideal) {
		auto b = target.below(h(x));
		out.insert(b.begin(), b.end());
	}
	return out;
}

template <class L>
std::vector<Tm<L>> terms_upto(const Signature &sig, const std::vector<L> &leaves, std::size_t h)
{
	std::vector<Tm<L>> base{Tm<L>::bot()};
	for (const auto &x : leaves)
		base.push_back(Tm<L>::of(x));
	std::vector<Tm<L>> level = base;
	for (std::size_t k = 1; k <= h; ++k) {
		std::vector<Tm<L>> next = base;
		for (const auto &op : sig.ops()) {
			std::vector<std::vector<Tm<L>>> sets(op.arity, level);
			for_each_choice(sets, [&](const std::vector<Tm<L>> &kids) { next.push_back(Tm<L>::app(op.name, kids)); });
		}
		level = std::move(next);
	}
	return level;
}

/// Terms over terms whose outer and inner heights add up to at most `h`.
template <class L>
std::vector<Tm<Tm<L>>> nested_terms(const Signature &sig, const std::vector<L> &leaves, std::size_t h)
{
	std::set<Tm<Tm<L>>> out;
	for (std::size_t outer = 0; outer <= h; ++outer) {
		auto inner = terms_upto(sig, leaves, h - outer);
		for (auto &t : terms_upto(sig, inner, outer))
			out.insert(std::move(t));
	}
	return {out.begin(), out.end()};
}

/// Evaluates `t` in `a` with leaves mapped through `leaf`.
template <class L, class F>
std::size_t eval_with(const FiniteAlgebra &a, const Tm<L> &t, const F &leaf)
{
	switch (t.k) {
	case Tm<L>::K::Bot:
		return a.bottom();
	case Tm<L>::K::Leaf:
		return leaf(t.leaf);
	case Tm<L>::K::App:
		break;
	}
	std::size_t args[8];
	std::vector<std::size_t> many;
	std::span<const std::size_t> view;
	if (t.kids.size() <= 8) {
		for (std::size_t i = 0; i < t.kids.size(); ++i)
			args[i] = eval_with(a, t.kids[i], leaf);
		view = std::span<const std::size_t>(args, t.kids.size());
	} else {
		for (const auto &k : t.kids)
			many.push_back(eval_with(a, k, leaf));
		view = std::span<const std::size_t>(many);
	}
	return a.apply(t.op, view);
}

std::size_t eval_tm(const FiniteAlgebra &a, const Tm<std::size_t> &t)
{
	return eval_with(a, t, [](std::size_t e) { return e; });
}

std::uint64_t mask_of(const std::set<std::size_t> &s)
{
	std::uint64_t m = 0;
	for (auto x : s)
		m |= std::uint64_t{1} << x;
	return m;
}

std::set<std::size_t> set_of(std::uint64_t m)
{
	std::set<std::size_t> s;
	for (std::size_t x = 0; x < 64; ++x)
		if (m >> x & 1)
			s.insert(x);
	return s;
}

/// Term over ideals, with leaves written as principal ideals.
std::string show_ideal_term(const Tm<std::uint64_t> &t, const FinitePosetWithBot &p)
{
	switch (t.k) {
	case Tm<std::uint64_t>::K::Bot:
		return "bot";
	case Tm<std::uint64_t>::K::Leaf:
		return to_string(Ideal{t.leaf}, p);
	case Tm<std::uint64_t>::K::App:
		break;
	}
	std::string out = t.op;
	if (t.kids.empty())
		return out;
	out += "(";
	for (std::size_t i = 0; i < t.kids.size(); ++i)
		out += (i ? ", " : "") + show_ideal_term(t.kids[i], p);
	return out + ")";
}

/// The lifted structure map on ideals held as bit sets. The image of a term
/// before down-closure is bot together with every evaluation of a same-shape
/// term whose leaves are drawn from the leaf ideals. Operation images of up
/// to two arguments are tabulated over masks.
class MaskAlgebra {
public:
	MaskAlgebra(const FiniteAlgebra &a, const FinitePosetWithBot &p)
		: a_(&a), n_(p.size()), bot_(std::uint64_t{1} << a.bottom())
	{
		const std::size_t masks = std::size_t{1} << n_;
		for (std::size_t m = 0; m < masks; ++m)
			down_.push_back(p.down_closure(m));
		for (const auto &op : a.sig().ops()) {
			if (op.arity > 2 || n_ * op.arity > 12)
				continue;
			std::vector<std::uint64_t> &tab = tables_[op.name];
			tab.assign(std::size_t{1} << (n_ * op.arity), 0);
			for (std::size_t idx = 0; idx < tab.size(); ++idx) {
				std::vector<std::vector<std::size_t>> sets;
				for (std::size_t i = 0; i < op.arity; ++i) {
					auto s = set_of((idx >> (n_ * i)) & (masks - 1));
					sets.emplace_back(s.begin(), s.end());
				}
				std::uint64_t out = 0;
				for_each_choice(sets, [&](const std::vector<std::size_t> &args) {
					out |= std::uint64_t{1} << a.apply(op.name, std::span<const std::size_t>(args));
				});
				tab[idx] = out;
			}
		}
	}

	std::uint64_t image(const Tm<std::uint64_t> &t) const
	{
		return image_with(t, [](std::uint64_t m) { return m; });
	}

	/// Image with leaf ideals computed by `leaf`.
	template <class L, class F>
	std::uint64_t image_with(const Tm<L> &t, const F &leaf) const
	{
		switch (t.k) {
		case Tm<L>::K::Bot:
			return bot_;
		case Tm<L>::K::Leaf:
			return leaf(t.leaf) | bot_;
		case Tm<L>::K::App:
			break;
		}
		if (auto it = tables_.find(t.op); it != tables_.end()) {
			std::size_t idx = 0;
			for (std::size_t i = 0; i < t.kids.size(); ++i)
				idx |= static_cast<std::size_t>(image_with(t.kids[i], leaf)) << (n_ * i);
			return it->second[idx] | bot_;
		}
		std::vector<std::vector<std::size_t>> sets;
		for (const auto &k : t.kids) {
			auto s = set_of(image_with(k, leaf));
			sets.emplace_back(s.begin(), s.end());
		}
		std::uint64_t out = bot_;
		for_each_choice(sets, [&](const std::vector<std::size_t> &args) {
			out |= std::uint64_t{1} << a_->apply(t.op, std::span<const std::size_t>(args));
		});
		return out;
	}

	std::uint64_t lifted(const Tm<std::uint64_t> &t) const { return down_[image(t)]; }

	template <class L, class F>
	std::uint64_t lifted_with(const Tm<L> &t, const F &leaf) const
	{
		return down_[image_with(t, leaf)];
	}

private:
	const FiniteAlgebra *a_;
	std::size_t n_;
	std::uint64_t bot_;
	std::vector<std::uint64_t> down_;
	std::map<std::string, std::vector<std::uint64_t>> tables_;
};

Tm<std::size_t> tm_of(const PartialTerm &t, const std::function<std::size_t(const std::string &)> &leaf)
{
	switch (t.kind()) {
	case PartialTerm::Kind::Bottom:
		return Tm<std::size_t>::bot();
	case PartialTerm::Kind::Var:
		return Tm<std::size_t>::of(leaf(t.label()));
	case PartialTerm::Kind::App:
		break;
	}
	std::vector<Tm<std::size_t>> kids;
	for (const auto &k : t.children())
		kids.push_back(tm_of(k, leaf));
	return Tm<std::size_t>::app(t.label(), std::move(kids));
}

PartialTerm term_of(const Tm<std::size_t> &t, const FinitePosetWithBot &p)
{
	switch (t.k) {
	case Tm<std::size_t>::K::Bot:
		return PartialTerm::bottom();
	case Tm<std::size_t>::K::Leaf:
		return PartialTerm::var(p.name(t.leaf));
	case Tm<std::size_t>::K::App:
		break;
	}
	std::vector<PartialTerm> kids;
	for (const auto &k : t.kids)
		kids.push_back(term_of(k, p));
	const OpSymbol op{t.op, kids.size()};
	return PartialTerm::app(op, std::move(kids));
}

void require_size(const FinitePosetWithBot &p, std::size_t bound, const std::string &what)
{
	if (p.size() > bound)
		throw Error(ErrorKind::BoundExceeded, what + " is limited to posets of " + std::to_string(bound) +
							      " elements; got " + std::to_string(p.size()));
}

void require_height(std::size_t h)
{
	if (h > kMaxLawHeight)
		throw Error(ErrorKind::BoundExceeded,
			    "term height is limited to " + std::to_string(kMaxLawHeight) + "; got " + std::to_string(h));
}

std::string one_line(std::string s)
{
	std::replace(s.begin(), s.end(), '\n', ' ');
	return s;
}

} // namespace

TermIdeal terms_below(const PartialTerm &t, const FinitePosetWithBot &p)
{
	auto leaf = [&](const std::string &n) -> std::size_t {
		const auto &names = p.names();
		auto it = std::find(names.begin(), names.end(), n);
		if (it == names.end())
			throw Error(ErrorKind::MissingBinding, "'" + n + "' is not an element of the poset");
		return static_cast<std::size_t>(it - names.begin());
	};
	TermLv<BaseLv> lv{BaseLv{&p}};
	TermIdeal out;
	for (const auto &s : lv.below(tm_of(t, leaf)))
		out.insert(term_of(s, p));
	return out;
}

namespace {

Tm<std::set<std::size_t>> ideal_term(const PartialTerm &t, const std::map<std::string, Ideal> &leaves)
{
	using R = Tm<std::set<std::size_t>>;
	switch (t.kind()) {
	case PartialTerm::Kind::Bottom:
		return R::bot();
	case PartialTerm::Kind::Var: {
		auto it = leaves.find(t.label());
		if (it == leaves.end())
			throw Error(ErrorKind::MissingBinding, "no ideal bound to '" + t.label() + "'");
		return R::of(set_of(it->second.members));
	}
	case PartialTerm::Kind::App:
		break;
	}
	std::vector<R> kids;
	for (const auto &k : t.children())
		kids.push_back(ideal_term(k, leaves));
	return R::app(t.label(), std::move(kids));
}

} // namespace

TermIdeal lambda_map(const PartialTerm &t, const std::map<std::string, Ideal> &leaves, const FinitePosetWithBot &p)
{
	auto it = ideal_term(t, leaves);
	require_height(height(it));
	TermIdeal out;
	for (const auto &s : lambda(it))
		out.insert(term_of(s, p));
	return out;
}

Ideal lifted_structure(const FiniteAlgebra &a, const PartialTerm &t, const std::map<std::string, Ideal> &leaves)
{
	const FinitePosetWithBot p = poset_of(a);
	auto it = ideal_term(t, leaves);
	require_height(height(it));
	std::uint64_t img = 0;
	for (const auto &s : lambda(it))
		img |= std::uint64_t{1} << eval_tm(a, s);
	return Ideal{p.down_closure(img)};
}

// ---------------------------------------------------------------------------
// Law suites

Report check_monad_laws(const FinitePosetWithBot &p, std::size_t bound)
{
	require_size(p, bound, "the monad suite");
	Report rep;
	rep.check = "monad";
	rep.instance = "poset" + p.render((std::uint64_t{1} << p.size()) - 1);

	const IdealCompletion d1(p, bound);
	const IdealCompletion d2(d1.poset(), bound);
	const IdealCompletion d3(d2.poset(), bound);

	std::vector<std::size_t> eta_p, eta_dp;
	for (std::size_t a = 0; a < p.size(); ++a)
		eta_p.push_back(*d1.index_of(etaD(p, a)));
	for (std::size_t i = 0; i < d1.poset().size(); ++i)
		eta_dp.push_back(*d2.index_of(etaD(d1.poset(), i)));

	std::vector<std::optional<std::size_t>> mu_p, mu_dp;
	for (std::size_t phi = 0; phi < d2.poset().size(); ++phi)
		mu_p.push_back(d1.index_of(muD(d1, d2.ideal(phi))));
	for (std::size_t psi = 0; psi < d3.poset().size(); ++psi)
		mu_dp.push_back(d2.index_of(muD(d2, d3.ideal(psi))));
	for (std::size_t phi = 0; phi < mu_p.size(); ++phi)
		if (!mu_p[phi])
			rep.add("muD lands in ideals", d2.poset().name(phi));
	if (!rep.ok())
		return rep;
	std::vector<std::size_t> mu_p_table;
	for (auto v : mu_p)
		mu_p_table.push_back(*v);

	for (std::size_t psi = 0; psi < d3.poset().size(); ++psi) {
		++rep.samples;
		auto via_outer = mu_dp[psi];
		auto via_inner = d_map(d3, d2, mu_p_table, psi);
		if (!via_outer || !via_inner) {
			rep.add("muD.DmuD = muD.muDD", d3.poset().name(psi), "an intermediate set is not an ideal");
			continue;
		}
		std::size_t l = mu_p_table[*via_outer], r = mu_p_table[*via_inner];
		if (l != r)
			rep.add("muD.DmuD = muD.muDD", d3.poset().name(psi),
				d1.poset().name(l) + " vs " + d1.poset().name(r));
	}
	for (std::size_t i = 0; i < d1.poset().size(); ++i) {
		rep.samples += 2;
		std::size_t l = mu_p_table[eta_dp[i]];
		if (l != i)
			rep.add("muD.etaDD = id", d1.poset().name(i), "gives " + d1.poset().name(l));
		auto up = d_map(d1, d2, eta_p, i);
		if (!up || mu_p_table[*up] != i)
			rep.add("muD.DetaD = id", d1.poset().name(i),
				up ? "gives " + d1.poset().name(mu_p_table[*up]) : "image is not an ideal");
	}
	return rep;
}

namespace {

/// Term shapes used by the algebra suite. They depend on the poset, the
/// signature and the height only, so a sweep over tables shares them.
struct EmShapes {
	struct MuCase {
		Tm<std::set<std::set<std::size_t>>> term;
		Tm<std::uint64_t> flat;
		std::vector<Tm<std::uint64_t>> members;
	};
	std::vector<Tm<Tm<std::size_t>>> nested_x;
	std::vector<Tm<std::size_t>> flat_x;
	std::vector<Tm<Tm<std::uint64_t>>> nested_dx;
	std::vector<Tm<std::uint64_t>> flat_dx;
	std::vector<MuCase> mu_cases;
	std::vector<Tm<std::size_t>> terms_x;
};

EmShapes em_shapes(const FinitePosetWithBot &p, const Signature &sig, std::size_t height_bound)
{
	EmShapes out;
	const BaseLv x{&p};
	out.nested_x = nested_terms(sig, x.elements(), height_bound);
	std::vector<std::uint64_t> dx;
	for (std::size_t e = 0; e < p.size(); ++e)
		dx.push_back(p.down(e));
	out.nested_dx = nested_terms(sig, dx, height_bound);
	for (const auto &tt : out.nested_x)
		out.flat_x.push_back(muF(tt));
	for (const auto &tt : out.nested_dx)
		out.flat_dx.push_back(muF(tt));
	const IdealLv<BaseLv> dlv{x};
	for (auto &t : terms_upto(sig, IdealLv<IdealLv<BaseLv>>{dlv}.elements(), height_bound)) {
		EmShapes::MuCase c;
		c.flat = fmap(t, [](const std::set<std::set<std::size_t>> &phi) {
			return mask_of(mu_generated(std::vector<std::set<std::size_t>>(phi.begin(), phi.end())));
		});
		for (const auto &s : lambda(t))
			c.members.push_back(fmap(s, [](const std::set<std::size_t> &i) { return mask_of(i); }));
		c.term = std::move(t);
		out.mu_cases.push_back(std::move(c));
	}
	out.terms_x = terms_upto(sig, x.elements(), height_bound);
	return out;
}

Report em_laws_with(const FiniteAlgebra &a, const FinitePosetWithBot &p, const EmShapes &shapes,
		    std::size_t bound)
{
	Report rep;
	rep.check = "em";
	rep.instance = a.name();

	const IdealCompletion d1(p, bound);
	const IdealCompletion d2(d1.poset(), bound);

	// Supremum of principal ideals, as a map from the completion to p.
	std::vector<std::size_t> sup(d1.poset().size());
	for (std::size_t i = 0; i < sup.size(); ++i)
		sup[i] = a.sup_of_principal(*p.maximum(d1.ideal(i).members));

	for (std::size_t x = 0; x < p.size(); ++x) {
		++rep.samples;
		std::size_t i = *d1.index_of(etaD(p, x));
		if (sup[i] != x)
			rep.add("sup.etaD = id", d1.poset().name(i), "sup gives " + p.name(sup[i]));
	}
	for (std::size_t phi = 0; phi < d2.poset().size(); ++phi) {
		++rep.samples;
		auto flat = d1.index_of(muD(d1, d2.ideal(phi)));
		auto mapped = d_map(d2, d1, sup, phi);
		if (!flat || !mapped) {
			rep.add("sup.muD = sup.Dsup", d2.poset().name(phi), "image of sup is not an ideal");
			continue;
		}
		if (sup[*flat] != sup[*mapped])
			rep.add("sup.muD = sup.Dsup", d2.poset().name(phi),
				p.name(sup[*flat]) + " vs " + p.name(sup[*mapped]));
	}

	const BaseLv x{&p};
	const TermLv<BaseLv> fx{x};
	const MaskAlgebra ml(a, p);
	for (std::size_t e = 0; e < p.size(); ++e) {
		++rep.samples;
		if (eval_tm(a, Tm<std::size_t>::of(e)) != e)
			rep.add("alpha.etaF = id", p.name(e));
	}
	for (std::size_t k = 0; k < shapes.nested_x.size(); ++k) {
		++rep.samples;
		std::size_t l = eval_tm(a, shapes.flat_x[k]);
		std::size_t r = eval_with(a, shapes.nested_x[k], [&](const Tm<std::size_t> &u) { return eval_tm(a, u); });
		if (l != r)
			rep.add("alpha.muF = alpha.Falpha", fx.show(shapes.flat_x[k]), p.name(l) + " vs " + p.name(r));
	}

	// The lifted algebra on ideals, with ideals as bit sets.
	const auto show_mask = [&](std::uint64_t m) { return to_string(Ideal{m}, p); };
	const auto show_dterm = [&](const Tm<std::uint64_t> &t) { return show_ideal_term(t, p); };
	for (std::size_t e = 0; e < p.size(); ++e) {
		++rep.samples;
		const std::uint64_t m = p.down(e);
		std::uint64_t got = ml.lifted(Tm<std::uint64_t>::of(m));
		if (got != m)
			rep.add("lifted alpha.etaF = id", show_mask(m), "gives " + show_mask(got));
	}
	for (std::size_t k = 0; k < shapes.nested_dx.size(); ++k) {
		++rep.samples;
		std::uint64_t l = ml.lifted(shapes.flat_dx[k]);
		std::uint64_t r = ml.lifted_with(shapes.nested_dx[k], [&](const Tm<std::uint64_t> &u) { return ml.lifted(u); });
		if (l != r)
			rep.add("lifted alpha.muF = lifted alpha.F(lifted alpha)", show_dterm(shapes.flat_dx[k]),
				p.render(l) + " vs " + p.render(r));
	}
	// muD is a morphism of the lifted algebras: leaves are ideals of ideals.
	const IdealLv<BaseLv> dlv{x};
	for (const auto &c : shapes.mu_cases) {
		++rep.samples;
		std::uint64_t l = ml.lifted(c.flat);
		std::uint64_t r = 0;
		for (const auto &s : c.members)
			r |= ml.lifted(s);
		if (l != r)
			rep.add("muD is an F-algebra morphism", TermLv<IdealLv<IdealLv<BaseLv>>>{{dlv}}.show(c.term),
				p.render(l) + " vs " + p.render(r));
	}
	for (const auto &t : shapes.terms_x) {
		++rep.samples;
		std::uint64_t l = ml.lifted_with(t, [&](std::size_t e) { return p.down(e); });
		std::uint64_t r = p.down(eval_tm(a, t));
		if (l != r)
			rep.add("etaD is an F-algebra morphism", fx.show(t), p.render(l) + " vs " + p.render(r));
	}
	return rep;
}

} // namespace

Report check_em_laws(const FiniteAlgebra &a, std::size_t height_bound, std::size_t bound)
{
	require_height(height_bound);
	const FinitePosetWithBot p = poset_of(a);
	require_size(p, bound, "the algebra suite");
	return em_laws_with(a, p, em_shapes(p, a.sig(), height_bound), bound);
}

Report check_distributive_laws(const FinitePosetWithBot &p, const Signature &sig, std::size_t height_bound,
			       std::size_t bound)
{
	require_height(height_bound);
	require_size(p, bound, "the distributive law suite");
	Report rep;
	rep.check = "distrib";
	rep.instance = "poset" + p.render((std::uint64_t{1} << p.size()) - 1);

	using S = std::size_t;
	using I = std::set<S>;
	const BaseLv x{&p};
	const TermLv<BaseLv> fx{x};
	const IdealLv<BaseLv> dx{x};
	const IdealLv<IdealLv<BaseLv>> d2x{dx};
	const TermLv<IdealLv<IdealLv<BaseLv>>> fd2x{d2x};
	const TermLv<IdealLv<BaseLv>> fdx{dx};
	const TermLv<TermLv<IdealLv<BaseLv>>> f2dx{fdx};
	auto show_dfx = [&](const std::set<Tm<S>> &s) { return IdealLv<TermLv<BaseLv>>{fx}.show(s); };

	// lambda . F muD = muD F . D lambda . lambda D
	for (const auto &t : terms_upto(sig, d2x.elements(), height_bound)) {
		++rep.samples;
		auto l = lambda(fmap(t, [](const std::set<I> &phi) { return mu_generated(std::vector<I>(phi.begin(), phi.end())); }));
		std::vector<std::set<Tm<S>>> family;
		for (const auto &s : lambda(t))
			family.push_back(lambda(s));
		auto r = mu_generated(family);
		if (l != r)
			rep.add("lambda.FmuD = muDF.Dlambda.lambdaD", fd2x.show(t), show_dfx(l) + " vs " + show_dfx(r));
	}
	// lambda . muF D = D muF . lambda F . F lambda
	for (const auto &tt : nested_terms(sig, dx.elements(), height_bound)) {
		++rep.samples;
		auto l = lambda(muF(tt));
		auto inner = fmap(tt, [](const Tm<I> &u) { return lambda(u); });
		auto r = d_apply(fx, lambda(inner), [](const Tm<Tm<S>> &s) { return muF(s); });
		if (l != r)
			rep.add("lambda.muFD = DmuF.lambdaF.Flambda", f2dx.show(tt), show_dfx(l) + " vs " + show_dfx(r));
	}
	// lambda . F etaD = etaD F
	for (const auto &t : terms_upto(sig, x.elements(), height_bound)) {
		++rep.samples;
		auto l = lambda(fmap(t, [&](S e) { return x.below(e); }));
		auto r = fx.below(t);
		if (l != r)
			rep.add("lambda.FetaD = etaDF", fx.show(t), show_dfx(l) + " vs " + show_dfx(r));
	}
	// lambda . etaF D = D etaF
	for (const auto &i : dx.elements()) {
		++rep.samples;
		auto l = lambda(Tm<I>::of(i));
		auto r = d_apply(fx, i, [](S e) { return Tm<S>::of(e); });
		if (l != r)
			rep.add("lambda.etaFD = DetaF", dx.show(i), show_dfx(l) + " vs " + show_dfx(r));
	}
	return rep;
}

Report check_distributive_laws(const FiniteAlgebra &a, std::size_t height_bound, std::size_t bound)
{
	Report rep = check_distributive_laws(poset_of(a), a.sig(), height_bound, bound);
	rep.instance = a.name();
	return rep;
}

Report check_continuity(const FiniteAlgebra &a, std::size_t height_bound, std::size_t bound)
{
	require_height(height_bound);
	const FinitePosetWithBot p = poset_of(a);
	require_size(p, bound, "the continuity suite");
	Report rep;
	rep.check = "continuity";
	rep.instance = a.name();
	const MaskAlgebra ml(a, p);
	std::vector<std::uint64_t> dx;
	for (std::size_t e = 0; e < p.size(); ++e)
		dx.push_back(p.down(e));
	auto sup = [&](std::uint64_t m) -> std::optional<std::size_t> {
		auto top = p.maximum(m);
		if (!top)
			return std::nullopt;
		return a.sup_of_principal(*top);
	};
	for (const auto &t : terms_upto(a.sig(), dx, height_bound)) {
		++rep.samples;
		const std::string w = show_ideal_term(t, p);
		const std::size_t l = eval_tm(a, fmap(t, [&](std::uint64_t m) { return *sup(m); }));
		const std::uint64_t img = ml.lifted(t);
		auto r = sup(img);
		if (!r) {
			rep.add("alpha.Fsup = sup.lifted alpha", w,
				"lifted value " + p.render(img) + " is not directed");
			continue;
		}
		if (l != *r)
			rep.add("alpha.Fsup = sup.lifted alpha", w, p.name(l) + " vs " + p.name(*r));
	}
	return rep;
}

const char *to_string(LawSuite s) noexcept
{
	switch (s) {
	case LawSuite::Monad: return "monad";
	case LawSuite::Em: return "em";
	case LawSuite::Distrib: return "distrib";
	case LawSuite::Continuity: return "continuity";
	case LawSuite::All: return "all";
	}
	return "?";
}

std::optional<LawSuite> parse_law_suite(const std::string &s)
{
	for (auto v : {LawSuite::Monad, LawSuite::Em, LawSuite::Distrib, LawSuite::Continuity, LawSuite::All})
		if (s == to_string(v))
			return v;
	return std::nullopt;
}

Report run_law_sweep(LawSuite suite, const LawSweep &bounds)
{
	require_height(bounds.height);
	auto wants = [&](LawSuite s) { return suite == LawSuite::All || suite == s; };
	Report total;
	total.check = std::string("laws ") + to_string(suite);
	total.instance = "posets up to " + std::to_string(std::max(bounds.monad_size, bounds.table_size));

	const std::size_t upper = std::max(bounds.monad_size, bounds.table_size);
	const auto posets = all_posets(upper);
	const Signature bare("bare");
	const Signature distrib_sig("cfg", {{"c", 0}, {"f", 1}, {"g", 2}});
	const Signature table_sig("fg", {{"f", 1}, {"g", 2}});

	for (const auto &p : posets) {
		std::vector<std::pair<std::size_t, std::size_t>> order;
		for (std::size_t i = 0; i < p.size(); ++i)
			for (std::size_t j = 0; j < p.size(); ++j)
				if (i != j && p.leq(i, j))
					order.emplace_back(i, j);
		if (p.size() <= bounds.monad_size) {
			if (wants(LawSuite::Monad))
				total.absorb(check_monad_laws(p, bounds.monad_size));
			if (wants(LawSuite::Em))
				total.absorb(check_em_laws(FiniteAlgebra("poset", bare, p.names(), order, {}),
							   bounds.height, bounds.monad_size));
		}
		if (p.size() > bounds.table_size)
			continue;
		if (wants(LawSuite::Distrib))
			total.absorb(check_distributive_laws(p, distrib_sig, bounds.height, bounds.table_size));
		if (!wants(LawSuite::Em) && !wants(LawSuite::Continuity))
			continue;
		const EmShapes shapes = wants(LawSuite::Em) ? em_shapes(p, table_sig, bounds.height) : EmShapes{};
		const auto unary = monotone_tables(p, 1);
		const auto binary = monotone_tables(p, 2);
		for (const auto &f : unary)
			for (const auto &g : binary) {
				FiniteAlgebra a("tables", table_sig, p.names(), order, {{"f", f}, {"g", g}});
				if (wants(LawSuite::Em))
					total.absorb(em_laws_with(a, p, shapes, bounds.table_size));
				if (wants(LawSuite::Continuity))
					total.absorb(check_continuity(a, bounds.height, bounds.table_size));
			}
	}
	return total;
}

// ---------------------------------------------------------------------------
// Symbolic ideals

SymbolicDeltaIdeal symbolic_eta(const PartialTerm &t, const std::vector<std::string> &gens, const Signature &sig)
{
	return SymbolicDeltaIdeal(of_term(t, gens, sig));
}

RegSys flatten_nested(const RegSys &outer, const std::map<std::string, RegSys> &inner)
{
	std::set<std::string> used(outer.sysvars().begin(), outer.sysvars().end());
	for (const auto &op : outer.sig().ops())
		used.insert(op.name);
	std::vector<std::string> gens;
	std::set<std::string> gen_set;
	auto add_gen = [&](const std::string &g) {
		if (gen_set.insert(g).second)
			gens.push_back(g);
	};
	for (const auto &g : outer.gens())
		if (!inner.contains(g))
			add_gen(g);
	for (const auto &g : outer.gens())
		if (auto it = inner.find(g); it != inner.end()) {
			if (!it->second.sig().same_symbols(outer.sig()))
				throw Error(ErrorKind::SignatureMismatch, "inner system for '" + g + "' uses another signature");
			for (const auto &h : it->second.gens())
				add_gen(h);
		}
	for (const auto &g : gens)
		if (outer.is_sysvar(g))
			throw Error(ErrorKind::NameClash, "generator '" + g + "' clashes with a system variable");
	used.insert(gen_set.begin(), gen_set.end());

	std::vector<std::string> sysvars = outer.sysvars();
	std::map<std::string, PartialTerm> defs;
	Substitution leaf_images;
	for (const auto &g : outer.gens()) {
		auto it = inner.find(g);
		if (it == inner.end())
			continue;
		const RegSys &s = it->second;
		Substitution rn;
		for (const auto &v : s.sysvars()) {
			std::string n = v + "_in_" + g;
			while (used.contains(n))
				n += "_";
			used.insert(n);
			rn.emplace(v, PartialTerm::var(n));
			sysvars.push_back(n);
		}
		for (const auto &v : s.sysvars())
			defs.emplace(rn.at(v).label(), subst(s.def(v), rn));
		leaf_images.emplace(g, subst(s.def(s.root()), rn));
	}
	for (const auto &v : outer.sysvars())
		defs.emplace(v, subst(outer.def(v), leaf_images));
	RegSys out(outer.sig(), std::move(sysvars), std::move(gens), std::move(defs), outer.root(), outer.name());
	return outer.declares_profile() ? out.with_profile(*outer.profile()) : out;
}

Report free_completion_iso_check(const std::vector<std::string> &gens, const IsoCheckOptions &opt)
{
	Report rep;
	rep.check = "free-completion";
	rep.instance = "regular systems";
	rep.seed = opt.seed;
	std::mt19937_64 rng(opt.seed);
	const Signature sig("free", {{"c", 0}, {"f", 1}, {"g", 2}});
	const std::vector<std::string> holes{"p", "q"};
	auto pick_vars = [&] { return std::uniform_int_distribution<std::size_t>(1, 3)(rng); };
	auto show = [](const RegSys &s) { return one_line(to_string(s)); };
	auto fresh_inner = [&] {
		std::map<std::string, RegSys> tau;
		for (const auto &h : holes)
			tau.emplace(h, random_system(sig, gens, pick_vars(), rng, 2, "inner_" + h));
		return tau;
	};

	for (std::size_t n = 0; n < opt.samples; ++n) {
		// Flattening against rewiring, on finite and on cyclic outer systems.
		const PartialTerm t = random_term(sig, holes, 3, rng);
		RegSys outer = std::bernoulli_distribution(0.5)(rng) ? of_term(t, holes, sig)
								     : random_system(sig, holes, pick_vars(), rng, 2, "outer");
		const auto tau = fresh_inner();
		const RegSys flat = flatten_nested(outer, tau);
		const RegSys wired = subst_sys(outer, tau);
		++rep.samples;
		if (!bisim_equal(flat, wired))
			rep.add("flatten = subst_sys", show(outer));
		Substitution unfolded;
		for (const auto &[h, s] : tau)
			unfolded.emplace(h, unfold(s, opt.depth));
		for (std::size_t d = 0; d <= opt.depth; ++d) {
			++rep.samples;
			const PartialTerm direct = unfold(wired, d);
			const PartialTerm termwise = truncate(subst(unfold(outer, d), unfolded), d);
			if (!(direct == termwise)) {
				rep.add("unfold.subst_sys = truncated term substitution", show(outer) + " at depth " + std::to_string(d),
					to_string(direct) + " vs " + to_string(termwise));
				break;
			}
		}

		// Finite fragment: inner systems that are plain terms.
		Substitution sigma;
		std::map<std::string, RegSys> trivial;
		for (const auto &h : holes) {
			PartialTerm s = random_term(sig, gens, 2, rng);
			sigma.emplace(h, s);
			trivial.emplace(h, of_term(s, gens, sig));
		}
		++rep.samples;
		std::vector<std::string> all = gens;
		if (!bisim_equal(flatten_nested(of_term(t, holes, sig), trivial), of_term(subst(t, sigma), all, sig)))
			rep.add("flatten of terms = term substitution", to_string(t));

		// Unit laws.
		const RegSys &s = tau.begin()->second;
		++rep.samples;
		if (!bisim_equal(flatten_nested(of_term(PartialTerm::var("p"), {"p"}, sig), {{"p", s}}), s))
			rep.add("flatten.eta = id", show(s));
		std::map<std::string, RegSys> units;
		for (const auto &g : gens)
			units.emplace(g, of_term(PartialTerm::var(g), gens, sig));
		++rep.samples;
		if (!bisim_equal(flatten_nested(s, units), s))
			rep.add("flatten.D eta = id", show(s));

		// Associativity: outer over p, middle over q, inner over gens.
		RegSys mid = random_system(sig, {"q"}, pick_vars(), rng, 2, "mid");
		RegSys in = random_system(sig, gens, pick_vars(), rng, 2, "in");
		RegSys top = random_system(sig, {"p"}, pick_vars(), rng, 2, "top");
		++rep.samples;
		RegSys left = flatten_nested(flatten_nested(top, {{"p", mid}}), {{"q", in}});
		RegSys right = flatten_nested(top, {{"p", flatten_nested(mid, {{"q", in}})}});
		if (!bisim_equal(left, right))
			rep.add("flatten associative", show(top) + " | " + show(mid) + " | " + show(in));

		// Every system denotes an ideal, and equal ideals are bisimilar systems.
		++rep.samples;
		SymbolicDeltaIdeal ideal(wired);
		if (!(ideal.system() == wired) || !(ideal == SymbolicDeltaIdeal(flat)))
			rep.add("systems are ideals", show(wired));
	}
	return rep;
}

} // namespace deltalg
