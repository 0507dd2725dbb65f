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

#include "deltalg/term_syntax.hpp"

#include "syntax.hpp"

namespace deltalg {
namespace detail {

namespace {

[[noreturn]] void fail_kind(ErrorKind kind, const Token &tok, const std::string &msg)
{
	throw Error(kind, std::to_string(tok.line) + ":" + std::to_string(tok.col) + ": " + msg);
}

} // namespace

PartialTerm read_term(TokenStream &ts, const Signature &sig)
{
	const Token head = ts.peek();
	std::string name = ts.expect_name();
	if (name == "bot") {
		if (ts.is_punct("("))
			fail_kind(ErrorKind::ArityMismatch, head, "'bot' takes no arguments");
		return PartialTerm::bottom();
	}
	const OpSymbol *op = sig.find(name);
	if (!ts.accept_punct("(")) {
		if (op == nullptr)
			return PartialTerm::var(name);
		if (op->arity != 0)
			fail_kind(ErrorKind::ArityMismatch, head,
				  "'" + name + "' expects " + std::to_string(op->arity) + " argument(s), got 0");
		return PartialTerm::app(*op);
	}
	if (op == nullptr)
		fail_kind(ErrorKind::UnknownSymbol, head,
			  "unknown symbol '" + name + "' in signature '" + sig.name() + "'");
	std::vector<PartialTerm> kids;
	if (!ts.accept_punct(")")) {
		do {
			kids.push_back(read_term(ts, sig));
		} while (ts.accept_punct(","));
		ts.expect_punct(")");
	}
	if (kids.size() != op->arity)
		fail_kind(ErrorKind::ArityMismatch, head,
			  "'" + name + "' expects " + std::to_string(op->arity) + " argument(s), got " +
				  std::to_string(kids.size()));
	return PartialTerm::app(*op, std::move(kids));
}

SemiringProfile read_profile(TokenStream &ts)
{
	ts.expect_ident("semiring");
	SemiringProfile p;
	if (ts.accept_punct("(")) {
		do {
			const Token role = ts.peek();
			std::string r = ts.expect_name();
			ts.expect_punct("=");
			std::string op = ts.expect_name();
			if (r == "plus")
				p.plus = op;
			else if (r == "times")
				p.times = op;
			else if (r == "zero")
				p.zero = op;
			else if (r == "one")
				p.one = op;
			else
				ts.fail_at(role, "unknown semiring role");
		} while (ts.accept_punct(","));
		ts.expect_punct(")");
	}
	return p;
}

std::string profile_text(const SemiringProfile &p)
{
	if (p == SemiringProfile{})
		return "profile semiring";
	return "profile semiring(plus=" + p.plus + ", times=" + p.times + ", zero=" + p.zero +
	       ", one=" + p.one + ")";
}

Signature read_signature(TokenStream &ts)
{
	ts.expect_ident("sig");
	Signature sig(ts.expect_name());
	std::optional<SemiringProfile> profile;
	if (ts.accept_ident("profile"))
		profile = read_profile(ts);
	ts.expect_punct("{");
	if (!ts.accept_punct("}")) {
		do {
			const Token at = ts.peek();
			std::string name = ts.expect_name();
			if (name == "bot")
				ts.fail_at(at, "'bot' is reserved");
			ts.expect_punct("/");
			std::size_t arity = ts.expect_number();
			try {
				sig.add(OpSymbol{name, arity});
			} catch (const Error &e) {
				fail_kind(e.kind(), at, e.what());
			}
		} while (ts.accept_punct(","));
		ts.expect_punct("}");
	}
	if (profile)
		sig.set_profile(*profile);
	return sig;
}

} // namespace detail

Signature parse_signature(std::string_view text)
{
	detail::TokenStream ts(text);
	Signature sig = detail::read_signature(ts);
	if (!ts.at_end())
		ts.fail("trailing input after signature");
	return sig;
}

std::string to_string(const Signature &sig)
{
	std::string out = "sig " + sig.name() + " ";
	if (sig.profile())
		out += detail::profile_text(*sig.profile()) + " ";
	out += "{ ";
	for (std::size_t i = 0; i < sig.ops().size(); ++i) {
		if (i)
			out += ", ";
		out += sig.ops()[i].name + "/" + std::to_string(sig.ops()[i].arity);
	}
	out += " }";
	return out;
}

PartialTerm parse_term(const Signature &sig, std::string_view text)
{
	detail::TokenStream ts(text);
	PartialTerm t = detail::read_term(ts, sig);
	if (!ts.at_end())
		ts.fail("trailing input after term");
	return t;
}

} // namespace deltalg
