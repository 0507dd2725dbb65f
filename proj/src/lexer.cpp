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

#include "lexer.hpp"

#include <cctype>

namespace deltalg::detail {

std::vector<Token> tokenize(std::string_view src)
{
	std::vector<Token> out;
	std::size_t line = 1, col = 1;
	std::size_t i = 0;
	auto advance = [&](std::size_t n) {
		for (std::size_t k = 0; k < n; ++k) {
			if (src[i] == '\n') {
				++line;
				col = 1;
			} else if ((static_cast<unsigned char>(src[i]) & 0xC0) != 0x80) {
				++col;
			}
			++i;
		}
	};
	auto glyph = [&](std::string_view g) { return src.substr(i, g.size()) == g; };

	while (i < src.size()) {
		unsigned char c = static_cast<unsigned char>(src[i]);
		if (std::isspace(c)) {
			advance(1);
			continue;
		}
		if (c == '#') {
			while (i < src.size() && src[i] != '\n')
				advance(1);
			continue;
		}
		Token tok;
		tok.line = line;
		tok.col = col;
		if (std::isalpha(c) || c == '_') {
			std::size_t j = i;
			while (j < src.size() && (std::isalnum(static_cast<unsigned char>(src[j])) || src[j] == '_'))
				++j;
			tok.kind = Token::Kind::Ident;
			tok.text = std::string(src.substr(i, j - i));
			advance(j - i);
		} else if (std::isdigit(c)) {
			std::size_t j = i;
			while (j < src.size() && std::isdigit(static_cast<unsigned char>(src[j])))
				++j;
			tok.kind = Token::Kind::Number;
			tok.text = std::string(src.substr(i, j - i));
			advance(j - i);
		} else if (glyph("⊥") || glyph("∞") || glyph("ε")) {
			tok.kind = Token::Kind::Ident;
			tok.text = glyph("⊥") ? "bot" : glyph("∞") ? "inf" : "eps";
			advance(glyph("ε") ? 2 : 3);
		} else if (glyph("⊑")) {
			tok.kind = Token::Kind::Punct;
			tok.text = "<=";
			advance(3);
		} else if (glyph("<=") || glyph("->")) {
			tok.kind = Token::Kind::Punct;
			tok.text = std::string(src.substr(i, 2));
			advance(2);
		} else if (std::string_view("(){}[],;=/<:").find(static_cast<char>(c)) != std::string_view::npos) {
			tok.kind = Token::Kind::Punct;
			tok.text = std::string(1, static_cast<char>(c));
			advance(1);
		} else {
			throw Error(ErrorKind::Parse, std::to_string(line) + ":" + std::to_string(col) +
							      ": unexpected character '" +
							      std::string(1, static_cast<char>(c)) + "'");
		}
		out.push_back(std::move(tok));
	}
	Token end;
	end.line = line;
	end.col = col;
	out.push_back(end);
	return out;
}

const Token &TokenStream::peek(std::size_t ahead) const
{
	std::size_t k = pos_ + ahead;
	return k < toks_.size() ? toks_[k] : toks_.back();
}

Token TokenStream::next()
{
	Token t = peek();
	if (pos_ < toks_.size() - 1)
		++pos_;
	return t;
}

bool TokenStream::is_punct(std::string_view p, std::size_t ahead) const
{
	const Token &t = peek(ahead);
	return t.kind == Token::Kind::Punct && t.text == p;
}

bool TokenStream::is_ident(std::string_view word, std::size_t ahead) const
{
	const Token &t = peek(ahead);
	return t.kind == Token::Kind::Ident && t.text == word;
}

bool TokenStream::accept_punct(std::string_view p)
{
	if (!is_punct(p))
		return false;
	next();
	return true;
}

bool TokenStream::accept_ident(std::string_view word)
{
	if (!is_ident(word))
		return false;
	next();
	return true;
}

void TokenStream::expect_punct(std::string_view p)
{
	if (!accept_punct(p))
		fail("expected '" + std::string(p) + "'");
}

void TokenStream::expect_ident(std::string_view word)
{
	if (!accept_ident(word))
		fail("expected '" + std::string(word) + "'");
}

std::string TokenStream::expect_name()
{
	if (peek().kind != Token::Kind::Ident)
		fail("expected an identifier");
	return next().text;
}

std::size_t TokenStream::expect_number()
{
	if (peek().kind != Token::Kind::Number)
		fail("expected a number");
	return static_cast<std::size_t>(std::stoull(next().text));
}

void TokenStream::fail(const std::string &msg) const
{
	fail_at(peek(), msg);
}

void TokenStream::fail_at(const Token &tok, const std::string &msg) const
{
	std::string found = tok.kind == Token::Kind::End ? "end of input" : "'" + tok.text + "'";
	throw Error(ErrorKind::Parse, std::to_string(tok.line) + ":" + std::to_string(tok.col) +
					      ": " + msg + ", found " + found);
}

} // namespace deltalg::detail
