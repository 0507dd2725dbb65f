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

/**
 * @file
 *
 * Finite ordered algebras given by tables: an element list, a partial order
 * with a least element and one result table per operation. Tables are
 * validated when the algebra is built.
 */

#ifndef DELTALG_FINITE_ALGEBRA_HPP
#define DELTALG_FINITE_ALGEBRA_HPP

#include "deltalg/algebra.hpp"
#include "deltalg/signature.hpp"

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace deltalg {

/// Elements are identified by index. Operation tables list the result for
/// every argument tuple in row-major order (first argument slowest).
class FiniteAlgebra {
public:
	using Table = std::vector<std::size_t>;

	/// `order` holds pairs (a, b) meaning a <= b; the reflexive-transitive
	/// closure is taken. Throws InvalidAlgebra unless the closure is a partial
	/// order with a least element, every table has the right size and every
	/// operation is monotone.
	FiniteAlgebra(std::string name, Signature sig, std::vector<std::string> elements,
		      const std::vector<std::pair<std::size_t, std::size_t>> &order,
		      std::map<std::string, Table> tables);

	/// Skips the monotonicity check so that faulty fixtures can be loaded and
	/// reported on. Order axioms are still enforced.
	static FiniteAlgebra unchecked(std::string name, Signature sig, std::vector<std::string> elements,
				       const std::vector<std::pair<std::size_t, std::size_t>> &order,
				       std::map<std::string, Table> tables);

	const std::string &name() const noexcept { return name_; }
	const Signature &sig() const noexcept { return sig_; }
	std::size_t size() const noexcept { return names_.size(); }
	const std::vector<std::string> &element_names() const noexcept { return names_; }
	std::size_t bottom() const noexcept { return bottom_; }
	bool leq(std::size_t a, std::size_t b) const { return leq_[a * size() + b]; }
	std::size_t index_of(const std::string &element) const;
	const std::map<std::string, Table> &tables() const noexcept { return tables_; }

	std::size_t apply(const std::string &op, std::span<const std::size_t> args) const;

	/// Supremum of the principal ideal of `a`; `a` itself unless overridden.
	std::size_t sup_of_principal(std::size_t a) const;
	/// Replaces the supremum table entry for `a` (mutation fixtures).
	void override_sup(std::size_t a, std::size_t value);
	bool has_sup_override() const noexcept { return !sup_override_.empty(); }

	/// Non-monotone operations, as witnesses; empty for a valid algebra.
	std::vector<std::string> monotonicity_violations() const;

	AlgebraSpec<std::size_t> spec() const;

private:
	FiniteAlgebra() = default;
	void build(std::string name, Signature sig, std::vector<std::string> elements,
		   const std::vector<std::pair<std::size_t, std::size_t>> &order, std::map<std::string, Table> tables);

	std::string name_;
	Signature sig_;
	std::vector<std::string> names_;
	std::vector<bool> leq_;
	std::size_t bottom_ = 0;
	std::map<std::string, Table> tables_;
	std::map<std::size_t, std::size_t> sup_override_;
};

/// Chain `e0 < e1 < ... < e{n-1}` with no operations attached.
FiniteAlgebra chain_algebra(std::size_t n, const Signature &sig = Signature("empty"),
			    std::map<std::string, FiniteAlgebra::Table> tables = {});

} // namespace deltalg

#endif
