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

#include "deltalg/term.hpp"

#include "deltalg/error.hpp"

#include <algorithm>
#include <functional>
#include <limits>

namespace deltalg {

struct PartialTerm::Node {
	Kind kind;
	std::string label;
	std::size_t arity = 0;
	std::vector<PartialTerm> kids;
	std::size_t depth = 0;
	std::size_t size = 0;
	std::size_t hash = 0;
};

namespace {

const std::string kEmpty;
const std::vector<PartialTerm> kNoKids;

std::size_t mix(std::size_t seed, std::size_t v)
{
	return seed ^ (v + 0x9e3779b97f4a7c15ULL + (seed << 6) + (seed >> 2));
}

} // namespace

std::string to_string(const Position &pos)
{
	if (pos.empty())
		return "root";
	std::string out;
	for (std::size_t i = 0; i < pos.size(); ++i) {
		if (i)
			out += '.';
		out += std::to_string(pos[i]);
	}
	return out;
}

PartialTerm PartialTerm::var(std::string name)
{
	auto n = std::make_shared<Node>();
	n->kind = Kind::Var;
	n->hash = mix(0x51ed27, std::hash<std::string>{}(name));
	n->label = std::move(name);
	n->depth = 1;
	n->size = 1;
	return PartialTerm(std::move(n));
}

PartialTerm PartialTerm::app(OpSymbol op, std::vector<PartialTerm> kids)
{
	if (kids.size() != op.arity)
		throw Error(ErrorKind::ArityMismatch, "'" + op.name + "' expects " +
							      std::to_string(op.arity) + " argument(s), got " +
							      std::to_string(kids.size()));
	auto n = std::make_shared<Node>();
	n->kind = Kind::App;
	n->arity = op.arity;
	std::size_t h = mix(0xa11ce, std::hash<std::string>{}(op.name));
	h = mix(h, op.arity);
	std::size_t depth = 0;
	std::size_t size = 1;
	for (const auto &k : kids) {
		h = mix(h, k.hash());
		depth = std::max(depth, k.depth());
		size += k.size();
	}
	n->label = std::move(op.name);
	n->kids = std::move(kids);
	n->depth = depth + 1;
	n->size = size;
	n->hash = h;
	return PartialTerm(std::move(n));
}

PartialTerm::Kind PartialTerm::kind() const noexcept
{
	return node_ ? node_->kind : Kind::Bottom;
}

const std::string &PartialTerm::label() const noexcept
{
	return node_ ? node_->label : kEmpty;
}

std::size_t PartialTerm::arity() const noexcept
{
	return node_ ? node_->arity : 0;
}

OpSymbol PartialTerm::op() const
{
	if (!is_app())
		throw Error(ErrorKind::SignatureMismatch, "op() on a non-application node");
	return OpSymbol{node_->label, node_->arity};
}

const std::vector<PartialTerm> &PartialTerm::children() const noexcept
{
	return node_ ? node_->kids : kNoKids;
}

std::size_t PartialTerm::depth() const noexcept
{
	return node_ ? node_->depth : 0;
}

std::size_t PartialTerm::size() const noexcept
{
	return node_ ? node_->size : 0;
}

std::size_t PartialTerm::hash() const noexcept
{
	return node_ ? node_->hash : 0x0b07;
}

bool operator==(const PartialTerm &a, const PartialTerm &b)
{
	if (a.node_ == b.node_)
		return true;
	if (!a.node_ || !b.node_)
		return false;
	const auto &x = *a.node_;
	const auto &y = *b.node_;
	if (x.hash != y.hash || x.kind != y.kind || x.size != y.size || x.arity != y.arity ||
	    x.label != y.label)
		return false;
	return x.kids == y.kids;
}

std::strong_ordering operator<=>(const PartialTerm &a, const PartialTerm &b)
{
	if (a.node_ == b.node_)
		return std::strong_ordering::equal;
	if (auto c = a.kind() <=> b.kind(); c != 0)
		return c;
	if (a.is_bottom())
		return std::strong_ordering::equal;
	if (auto c = a.label() <=> b.label(); c != 0)
		return c;
	if (auto c = a.arity() <=> b.arity(); c != 0)
		return c;
	const auto &ka = a.children();
	const auto &kb = b.children();
	for (std::size_t i = 0; i < ka.size(); ++i)
		if (auto c = ka[i] <=> kb[i]; c != 0)
			return c;
	return std::strong_ordering::equal;
}

std::string to_string(const PartialTerm &t)
{
	std::string out;
	std::function<void(const PartialTerm &)> go = [&](const PartialTerm &u) {
		switch (u.kind()) {
		case PartialTerm::Kind::Bottom:
			out += "bot";
			return;
		case PartialTerm::Kind::Var:
			out += u.label();
			return;
		case PartialTerm::Kind::App:
			out += u.label();
			if (u.arity() == 0)
				return;
			out += '(';
			for (std::size_t i = 0; i < u.arity(); ++i) {
				if (i)
					out += ", ";
				go(u.child(i));
			}
			out += ')';
			return;
		}
	};
	go(t);
	return out;
}

void check_signature(const PartialTerm &t, const Signature &sig)
{
	if (!t.is_app())
		return;
	const OpSymbol *op = sig.find(t.label());
	if (op == nullptr)
		throw Error(ErrorKind::SignatureMismatch,
			    "symbol '" + t.label() + "' is not in signature '" + sig.name() + "'");
	if (op->arity != t.arity())
		throw Error(ErrorKind::SignatureMismatch,
			    "symbol '" + t.label() + "' used with arity " + std::to_string(t.arity()) +
				    ", signature says " + std::to_string(op->arity));
	for (const auto &k : t.children())
		check_signature(k, sig);
}

std::set<std::string> variables(const PartialTerm &t)
{
	std::set<std::string> out;
	std::function<void(const PartialTerm &)> go = [&](const PartialTerm &u) {
		if (u.is_var())
			out.insert(u.label());
		for (const auto &k : u.children())
			go(k);
	};
	go(t);
	return out;
}

bool leq_syn(const PartialTerm &s, const PartialTerm &t)
{
	if (s.is_bottom() || s.same_node(t))
		return true;
	if (s.kind() != t.kind() || s.label() != t.label() || s.arity() != t.arity())
		return false;
	for (std::size_t i = 0; i < s.arity(); ++i)
		if (!leq_syn(s.child(i), t.child(i)))
			return false;
	return true;
}

namespace {

std::variant<PartialTerm, Inconsistent> merge_at(const PartialTerm &s, const PartialTerm &t,
						 Position &pos)
{
	if (s.is_bottom())
		return t;
	if (t.is_bottom() || s.same_node(t))
		return s;
	if (s.kind() != t.kind() || s.label() != t.label() || s.arity() != t.arity())
		return Inconsistent{pos};
	if (s.is_var())
		return s;
	std::vector<PartialTerm> kids;
	kids.reserve(s.arity());
	for (std::size_t i = 0; i < s.arity(); ++i) {
		pos.push_back(i + 1);
		auto r = merge_at(s.child(i), t.child(i), pos);
		pos.pop_back();
		if (auto *bad = std::get_if<Inconsistent>(&r))
			return *bad;
		kids.push_back(std::get<PartialTerm>(std::move(r)));
	}
	return PartialTerm::app(s.op(), std::move(kids));
}

} // namespace

std::variant<PartialTerm, Inconsistent> merge(const PartialTerm &s, const PartialTerm &t)
{
	Position pos;
	return merge_at(s, t, pos);
}

bool consistent(std::span<const PartialTerm> terms)
{
	PartialTerm acc;
	for (const auto &t : terms) {
		auto r = merge(acc, t);
		if (std::holds_alternative<Inconsistent>(r))
			return false;
		acc = std::get<PartialTerm>(std::move(r));
	}
	return true;
}

PartialTerm subst(const PartialTerm &t, const Substitution &sigma)
{
	switch (t.kind()) {
	case PartialTerm::Kind::Bottom:
		return t;
	case PartialTerm::Kind::Var: {
		auto it = sigma.find(t.label());
		return it == sigma.end() ? t : it->second;
	}
	case PartialTerm::Kind::App:
		break;
	}
	std::vector<PartialTerm> kids;
	kids.reserve(t.arity());
	bool changed = false;
	for (const auto &k : t.children()) {
		kids.push_back(subst(k, sigma));
		changed = changed || !kids.back().same_node(k);
	}
	return changed ? PartialTerm::app(t.op(), std::move(kids)) : t;
}

PartialTerm subst_checked(const PartialTerm &t, const Substitution &sigma, const Signature &sig)
{
	check_signature(t, sig);
	for (const auto &[name, image] : sigma)
		check_signature(image, sig);
	return subst(t, sigma);
}

PartialTerm truncate(const PartialTerm &t, std::size_t depth)
{
	if (depth == 0)
		return PartialTerm::bottom();
	if (t.depth() <= depth)
		return t;
	std::vector<PartialTerm> kids;
	kids.reserve(t.arity());
	for (const auto &k : t.children())
		kids.push_back(truncate(k, depth - 1));
	return PartialTerm::app(t.op(), std::move(kids));
}

PartialTerm subterm(const PartialTerm &t, const Position &pos)
{
	const PartialTerm *cur = &t;
	for (std::size_t i : pos) {
		if (i == 0 || i > cur->arity())
			return PartialTerm::bottom();
		cur = &cur->child(i - 1);
	}
	return *cur;
}

std::size_t count_below(const PartialTerm &t)
{
	constexpr std::size_t kMax = std::numeric_limits<std::size_t>::max();
	switch (t.kind()) {
	case PartialTerm::Kind::Bottom:
		return 1;
	case PartialTerm::Kind::Var:
		return 2;
	case PartialTerm::Kind::App:
		break;
	}
	std::size_t prod = 1;
	for (const auto &k : t.children()) {
		std::size_t c = count_below(k);
		if (c != 0 && prod > (kMax - 1) / c)
			return kMax;
		prod *= c;
	}
	return prod + 1;
}

std::vector<PartialTerm> enumerate_below(const PartialTerm &t, std::size_t bound)
{
	std::size_t n = count_below(t);
	if (n > bound)
		throw Error(ErrorKind::ExplosionGuard,
			    "enumerate_below would produce more than " + std::to_string(bound) + " terms");
	std::vector<PartialTerm> out;
	out.reserve(n);
	out.push_back(PartialTerm::bottom());
	if (t.is_bottom())
		return out;
	if (t.is_var()) {
		out.push_back(t);
		return out;
	}
	std::vector<std::vector<PartialTerm>> per_child;
	for (const auto &k : t.children())
		per_child.push_back(enumerate_below(k, bound));
	std::vector<std::size_t> idx(per_child.size(), 0);
	for (;;) {
		std::vector<PartialTerm> kids;
		kids.reserve(idx.size());
		for (std::size_t i = 0; i < idx.size(); ++i)
			kids.push_back(per_child[i][idx[i]]);
		out.push_back(PartialTerm::app(t.op(), std::move(kids)));
		std::size_t i = 0;
		while (i < idx.size() && ++idx[i] == per_child[i].size())
			idx[i++] = 0;
		if (i == idx.size())
			break;
	}
	return out;
}

} // namespace deltalg
