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

#include "deltalg/regsys_syntax.hpp"

#include "regsys_reader.hpp"
#include "syntax.hpp"

namespace deltalg {
namespace detail {

namespace {

std::vector<std::string> read_name_set(TokenStream &ts)
{
	std::vector<std::string> out;
	ts.expect_punct("{");
	if (ts.accept_punct("}"))
		return out;
	do {
		out.push_back(ts.expect_name());
	} while (ts.accept_punct(","));
	ts.expect_punct("}");
	return out;
}

} // namespace

RegSys read_system(TokenStream &ts, const std::map<std::string, Signature> &sigs)
{
	const Token start = ts.peek();
	ts.expect_ident("sys");
	std::string name = ts.expect_name();
	ts.expect_ident("over");
	const Token sig_tok = ts.peek();
	std::string sig_name = ts.expect_name();
	auto it = sigs.find(sig_name);
	if (it == sigs.end())
		ts.fail_at(sig_tok, "unknown signature '" + sig_name + "'");
	const Signature &sig = it->second;
	std::optional<SemiringProfile> profile;
	if (ts.accept_ident("profile"))
		profile = read_profile(ts);
	ts.expect_ident("vars");
	auto vars = read_name_set(ts);
	ts.expect_ident("gens");
	auto gens = read_name_set(ts);
	ts.expect_ident("root");
	std::string root = ts.expect_name();
	ts.expect_punct("{");
	std::map<std::string, PartialTerm> defs;
	while (!ts.accept_punct("}")) {
		const Token lhs = ts.peek();
		std::string v = ts.expect_name();
		ts.expect_punct("=");
		PartialTerm t = read_term(ts, sig);
		if (!defs.emplace(v, std::move(t)).second)
			ts.fail_at(lhs, "second definition of '" + v + "'");
		ts.accept_punct(";");
	}
	try {
		RegSys s(sig, std::move(vars), std::move(gens), std::move(defs), std::move(root), std::move(name));
		if (profile)
			s = s.with_profile(*profile);
		return s;
	} catch (const Error &e) {
		throw Error(e.kind(), std::to_string(start.line) + ":" + std::to_string(start.col) + ": " + e.what());
	}
}

} // namespace detail

RegSys parse_system(std::string_view text, const std::map<std::string, Signature> &sigs)
{
	detail::TokenStream ts(text);
	RegSys s = detail::read_system(ts, sigs);
	if (!ts.at_end())
		ts.fail("trailing input after system");
	return s;
}

std::string to_string(const RegSys &s)
{
	auto set = [](const std::vector<std::string> &names) {
		std::string out = "{";
		for (std::size_t i = 0; i < names.size(); ++i) {
			if (i)
				out += ", ";
			out += names[i];
		}
		return out + "}";
	};
	std::string out = "sys " + s.name() + " over " + s.sig().name();
	if (s.declares_profile())
		out += " " + detail::profile_text(*s.profile());
	out += " vars " + set(s.sysvars()) + " gens " + set(s.gens()) + " root " + s.root() + " {\n";
	for (const auto &v : s.sysvars())
		out += "  " + v + " = " + to_string(s.def(v)) + "\n";
	out += "}";
	return out;
}

} // namespace deltalg
