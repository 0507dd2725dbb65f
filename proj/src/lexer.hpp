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

// Internal tokenizer shared by the term, system and workspace readers.

#ifndef DELTALG_SRC_LEXER_HPP
#define DELTALG_SRC_LEXER_HPP

#include "deltalg/error.hpp"

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

namespace deltalg::detail {

struct Token {
	enum class Kind { Ident, Number, Punct, End };
	Kind kind = Kind::End;
	std::string text;
	std::size_t line = 1;
	std::size_t col = 1;
};

/// Identifiers are `[a-zA-Z_][a-zA-Z0-9_]*`; numbers are decimal digit runs.
/// Punctuation is one of `(){}[],;=/<:` plus the digraphs `<=` and `->`.
/// The UTF-8 glyphs for bottom, infinity and epsilon read as the identifiers
/// `bot`, `inf` and `eps`. `#` starts a comment running to end of line.
std::vector<Token> tokenize(std::string_view src);

class TokenStream {
public:
	explicit TokenStream(std::string_view src) : toks_(tokenize(src)) {}

	const Token &peek(std::size_t ahead = 0) const;
	Token next();
	bool at_end() const { return peek().kind == Token::Kind::End; }

	bool is_punct(std::string_view p, std::size_t ahead = 0) const;
	bool is_ident(std::string_view word, std::size_t ahead = 0) const;
	bool accept_punct(std::string_view p);
	bool accept_ident(std::string_view word);

	void expect_punct(std::string_view p);
	void expect_ident(std::string_view word);
	std::string expect_name();
	std::size_t expect_number();

	[[noreturn]] void fail(const std::string &msg) const;
	[[noreturn]] void fail_at(const Token &tok, const std::string &msg) const;

private:
	std::vector<Token> toks_;
	std::size_t pos_ = 0;
};

} // namespace deltalg::detail

#endif
