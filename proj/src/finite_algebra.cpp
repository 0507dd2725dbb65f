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

#include "deltalg/finite_algebra.hpp"

#include "deltalg/error.hpp"

#include <memory>

namespace deltalg {

namespace {

std::size_t power(std::size_t base, std::size_t exp)
{
	std::size_t r = 1;
	for (std::size_t i = 0; i < exp; ++i)
		r *= base;
	return r;
}

} // namespace

FiniteAlgebra::FiniteAlgebra(std::string name, Signature sig, std::vector<std::string> elements,
			     const std::vector<std::pair<std::size_t, std::size_t>> &order,
			     std::map<std::string, Table> tables)
{
	build(std::move(name), std::move(sig), std::move(elements), order, std::move(tables));
	auto bad = monotonicity_violations();
	if (!bad.empty())
		throw Error(ErrorKind::InvalidAlgebra, "algebra '" + name_ + "': operation not monotone at " + bad.front());
}

FiniteAlgebra FiniteAlgebra::unchecked(std::string name, Signature sig, std::vector<std::string> elements,
				       const std::vector<std::pair<std::size_t, std::size_t>> &order,
				       std::map<std::string, Table> tables)
{
	FiniteAlgebra a;
	a.build(std::move(name), std::move(sig), std::move(elements), order, std::move(tables));
	return a;
}

void FiniteAlgebra::build(std::string name, Signature sig, std::vector<std::string> elements,
			  const std::vector<std::pair<std::size_t, std::size_t>> &order,
			  std::map<std::string, Table> tables)
{
	name_ = std::move(name);
	sig_ = std::move(sig);
	names_ = std::move(elements);
	tables_ = std::move(tables);
	auto bad = [&](const std::string &msg) {
		throw Error(ErrorKind::InvalidAlgebra, "algebra '" + name_ + "': " + msg);
	};
	const std::size_t n = names_.size();
	if (n == 0)
		bad("empty carrier");
	for (std::size_t i = 0; i < n; ++i)
		for (std::size_t j = i + 1; j < n; ++j)
			if (names_[i] == names_[j])
				bad("duplicate element '" + names_[i] + "'");

	leq_.assign(n * n, false);
	for (std::size_t i = 0; i < n; ++i)
		leq_[i * n + i] = true;
	for (auto [a, b] : order) {
		if (a >= n || b >= n)
			bad("order pair out of range");
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
				bad("order is not antisymmetric: '" + names_[i] + "' and '" + names_[j] + "'");
	bool found = false;
	for (std::size_t i = 0; i < n && !found; ++i) {
		bool least = true;
		for (std::size_t j = 0; j < n; ++j)
			least = least && leq_[i * n + j];
		if (least) {
			bottom_ = i;
			found = true;
		}
	}
	if (!found)
		bad("no least element");

	for (const auto &op : sig_.ops()) {
		auto it = tables_.find(op.name);
		if (it == tables_.end())
			bad("no table for '" + op.name + "'");
		if (it->second.size() != power(n, op.arity))
			bad("table for '" + op.name + "' needs " + std::to_string(power(n, op.arity)) + " entries");
		for (std::size_t v : it->second)
			if (v >= n)
				bad("table for '" + op.name + "' has an entry out of range");
	}
	for (const auto &[op, table] : tables_)
		if (!sig_.contains(op))
			bad("table for '" + op + "' which is not in the signature");
}

std::size_t FiniteAlgebra::index_of(const std::string &element) const
{
	for (std::size_t i = 0; i < names_.size(); ++i)
		if (names_[i] == element)
			return i;
	throw Error(ErrorKind::UnknownSymbol, "algebra '" + name_ + "' has no element '" + element + "'");
}

std::size_t FiniteAlgebra::apply(const std::string &op, std::span<const std::size_t> args) const
{
	const Table &t = tables_.at(op);
	std::size_t idx = 0;
	for (std::size_t a : args)
		idx = idx * size() + a;
	return t[idx];
}

std::size_t FiniteAlgebra::sup_of_principal(std::size_t a) const
{
	auto it = sup_override_.find(a);
	return it == sup_override_.end() ? a : it->second;
}

void FiniteAlgebra::override_sup(std::size_t a, std::size_t value)
{
	if (a >= size() || value >= size())
		throw Error(ErrorKind::InvalidAlgebra, "sup override out of range");
	sup_override_[a] = value;
}

std::vector<std::string> FiniteAlgebra::monotonicity_violations() const
{
	std::vector<std::string> out;
	const std::size_t n = size();
	for (const auto &op : sig_.ops()) {
		std::vector<std::size_t> args(op.arity, 0);
		const std::size_t total = power(n, op.arity);
		for (std::size_t code = 0; code < total; ++code) {
			std::size_t c = code;
			for (std::size_t i = op.arity; i-- > 0;) {
				args[i] = c % n;
				c /= n;
			}
			const std::size_t base = apply(op.name, args);
			for (std::size_t i = 0; i < op.arity; ++i) {
				for (std::size_t up = 0; up < n; ++up) {
					if (up == args[i] || !leq(args[i], up))
						continue;
					auto moved = args;
					moved[i] = up;
					if (!leq(base, apply(op.name, moved))) {
						std::string w = op.name + "(";
						for (std::size_t j = 0; j < args.size(); ++j)
							w += (j ? ", " : "") + names_[args[j]];
						out.push_back(w + ") with argument " + std::to_string(i + 1) +
							      " raised to " + names_[up]);
					}
				}
			}
		}
	}
	return out;
}

AlgebraSpec<std::size_t> FiniteAlgebra::spec() const
{
	auto self = std::make_shared<const FiniteAlgebra>(*this);
	AlgebraSpec<std::size_t> a;
	a.name = name_;
	a.bottom = bottom_;
	a.leq = [self](const std::size_t &x, const std::size_t &y) { return self->leq(x, y); };
	for (const auto &op : sig_.ops()) {
		std::string opname = op.name;
		a.ops.emplace(op.name, OpInterp<std::size_t>{op.arity, [self, opname](std::span<const std::size_t> args) {
								     return self->apply(opname, args);
							     }});
	}
	std::vector<std::size_t> el(size());
	for (std::size_t i = 0; i < size(); ++i)
		el[i] = i;
	a.elements = std::move(el);
	a.show = [self](const std::size_t &x) {
		return x < self->size() ? self->names_[x] : "#" + std::to_string(x);
	};
	return a;
}

FiniteAlgebra chain_algebra(std::size_t n, const Signature &sig, std::map<std::string, FiniteAlgebra::Table> tables)
{
	std::vector<std::string> names;
	std::vector<std::pair<std::size_t, std::size_t>> order;
	for (std::size_t i = 0; i < n; ++i) {
		names.push_back("e" + std::to_string(i));
		if (i)
			order.emplace_back(i - 1, i);
	}
	return FiniteAlgebra("chain" + std::to_string(n), sig, std::move(names), order, std::move(tables));
}

} // namespace deltalg
