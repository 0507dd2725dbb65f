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

#include "deltalg/error.hpp"

namespace deltalg {

const char *to_string(ErrorKind kind) noexcept
{
	switch (kind) {
	case ErrorKind::UnknownSymbol: return "unknown symbol";
	case ErrorKind::ArityMismatch: return "arity mismatch";
	case ErrorKind::SignatureMismatch: return "signature mismatch";
	case ErrorKind::MissingBinding: return "missing binding";
	case ErrorKind::ExplosionGuard: return "explosion guard";
	case ErrorKind::Parse: return "parse error";
	case ErrorKind::InvalidSystem: return "invalid system";
	case ErrorKind::InvalidAlgebra: return "invalid algebra";
	case ErrorKind::NameClash: return "name clash";
	case ErrorKind::NotLinear: return "not linear";
	case ErrorKind::LinearUndefined: return "linear undefined";
	case ErrorKind::BoundExceeded: return "bound exceeded";
	case ErrorKind::Usage: return "usage error";
	}
	return "error";
}

} // namespace deltalg
