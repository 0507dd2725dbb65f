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

#include "deltalg/signature.hpp"

#include "deltalg/error.hpp"

namespace deltalg {

Signature::Signature(std::string name, std::initializer_list<OpSymbol> ops)
	: name_(std::move(name))
{
	for (const auto &op : ops)
		add(op);
}

void Signature::add(OpSymbol op)
{
	if (index_.contains(op.name))
		throw Error(ErrorKind::NameClash, "duplicate operation symbol '" + op.name + "'");
	index_.emplace(op.name, ops_.size());
	ops_.push_back(std::move(op));
}

const OpSymbol *Signature::find(const std::string &name) const
{
	auto it = index_.find(name);
	return it == index_.end() ? nullptr : &ops_[it->second];
}

void Signature::set_profile(SemiringProfile profile)
{
	auto require = [&](const std::string &role, const std::string &op, std::size_t arity) {
		const OpSymbol *sym = find(op);
		if (sym == nullptr)
			throw Error(ErrorKind::UnknownSymbol,
				    "semiring role " + role + " names unknown symbol '" + op + "'");
		if (sym->arity != arity)
			throw Error(ErrorKind::ArityMismatch, "semiring role " + role + " needs arity " +
								      std::to_string(arity) + ", '" + op +
								      "' has " + std::to_string(sym->arity));
	};
	require("plus", profile.plus, 2);
	require("times", profile.times, 2);
	require("zero", profile.zero, 0);
	require("one", profile.one, 0);
	profile_ = std::move(profile);
}

bool Signature::same_symbols(const Signature &other) const
{
	if (ops_.size() != other.ops_.size())
		return false;
	for (const auto &op : ops_) {
		const OpSymbol *o = other.find(op.name);
		if (o == nullptr || o->arity != op.arity)
			return false;
	}
	return true;
}

Signature semiring_signature(const std::string &name)
{
	Signature sig(name, {{"plus", 2}, {"times", 2}, {"zero", 0}, {"one", 0}});
	sig.set_profile(SemiringProfile{});
	return sig;
}

} // namespace deltalg
