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

#include "deltalg/report.hpp"

namespace deltalg {

namespace {

std::string quote(const std::string &s)
{
	bool plain = !s.empty();
	for (char c : s)
		if (c == ' ' || c == '"' || c == '=' || c == '\n' || c == '\t')
			plain = false;
	if (plain)
		return s;
	std::string out = "\"";
	for (char c : s) {
		if (c == '"' || c == '\\')
			out += '\\';
		if (c == '\n') {
			out += "\\n";
			continue;
		}
		out += c;
	}
	return out + "\"";
}

} // namespace

void Report::absorb(const Report &other)
{
	samples += other.samples;
	indeterminate += other.indeterminate;
	violations.insert(violations.end(), other.violations.begin(), other.violations.end());
}

std::string to_text(const Report &r)
{
	std::string out = r.check + " [" + r.instance + "]: " + (r.ok() ? "pass" : "FAIL") + ", " +
			  std::to_string(r.samples) + " sample(s), " + std::to_string(r.violations.size()) +
			  " violation(s)";
	if (r.indeterminate)
		out += ", " + std::to_string(r.indeterminate) + " indeterminate";
	if (r.seed)
		out += ", seed " + std::to_string(*r.seed);
	out += "\n";
	for (const auto &v : r.violations) {
		out += "  violation " + v.law + ": " + v.witness;
		if (!v.detail.empty())
			out += " (" + v.detail + ")";
		out += "\n";
	}
	return out;
}

std::string to_kv(const Report &r)
{
	std::string out = "record=report check=" + quote(r.check) + " instance=" + quote(r.instance) +
			  " status=" + (r.ok() ? "pass" : "fail") + " samples=" + std::to_string(r.samples) +
			  " violations=" + std::to_string(r.violations.size()) +
			  " indeterminate=" + std::to_string(r.indeterminate);
	if (r.seed)
		out += " seed=" + std::to_string(*r.seed);
	out += "\n";
	for (const auto &v : r.violations)
		out += "record=violation check=" + quote(r.check) + " law=" + quote(v.law) +
		       " witness=" + quote(v.witness) + " detail=" + quote(v.detail) + "\n";
	return out;
}

} // namespace deltalg
