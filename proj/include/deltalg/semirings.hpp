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
 * Numeric semirings over the extended naturals.
 *
 * The tropical (min, +) semiring is read with the reversed order, so its
 * bottom is infinity and iteration descends numerically towards shortest
 * distances. The ordinary (+, *) semiring on the extended naturals can
 * diverge; the linear divergence certificate decides exactly which
 * components of a linear system are infinite.
 */

#ifndef DELTALG_SEMIRINGS_HPP
#define DELTALG_SEMIRINGS_HPP

#include "deltalg/algebra.hpp"
#include "deltalg/extnat.hpp"
#include "deltalg/regsys.hpp"

#include <map>
#include <string>
#include <utility>
#include <vector>

namespace deltalg {

/// x <= y iff x >= y numerically; bottom = inf; plus = min; times = + with
/// inf absorbing; zero = inf; one = 0.
AlgebraSpec<ExtNat> tropical_algebra(const SemiringProfile &p = {});

/// Numeric order; bottom = 0; saturating + and *; zero = 0; one = 1. The
/// default strategy is CapAndFlag with the default cap.
AlgebraSpec<ExtNat> natinf_algebra(const SemiringProfile &p = {});

struct DivergenceVerdict {
	bool infinite = false;
	ExtNat value; ///< the exact least solution (inf when infinite)
};

/// Exact least solution of a linear system over the extended naturals with
/// finite coefficients. A component is infinite iff it reaches, through
/// nonzero coefficients, a cycle of nonzero coefficients (or an infinite
/// coefficient or base term) that itself reaches a nonzero base term.
/// Throws NotLinear, or MissingBinding for an unbound generator.
std::map<std::string, DivergenceVerdict> divergence_certificate_linear(const RegSys &s, const Env<ExtNat> &env);

/// ExactHook strategy backed by the divergence certificate.
ExactHook<ExtNat> natinf_linear_hook(std::size_t budget = kDefaultBudget);

class WeightedDigraph {
public:
	struct Edge {
		std::string from;
		std::string to;
		std::uint64_t weight;
	};

	WeightedDigraph() = default;

	void add_node(const std::string &n);
	/// Parallel edges keep the minimum weight.
	void add_edge(const std::string &from, const std::string &to, std::uint64_t weight);

	const std::vector<std::string> &nodes() const noexcept { return nodes_; }
	std::vector<Edge> edges() const;
	bool has_node(const std::string &n) const;

private:
	std::vector<std::string> nodes_;
	std::map<std::pair<std::string, std::string>, std::uint64_t> weight_;
};

/// Reads `u v w` lines; blank lines and `#` comments are skipped.
WeightedDigraph parse_edge_list(const std::string &text);

/// One system variable `x_u` per node with `x_u = sum over edges (u, v, w) of
/// times(w, x_v)`, plus `one` at the target. Weights become generators
/// `w<k>` bound in the returned environment. Root is `x_source`; its
/// tropical value is the source-to-target distance.
std::pair<RegSys, Env<ExtNat>> graph_to_linear_system(const WeightedDigraph &g, const std::string &source,
						      const std::string &target);

/// Textbook relaxation from `source`; unreachable nodes map to inf.
std::map<std::string, ExtNat> bellman_ford_oracle(const WeightedDigraph &g, const std::string &source);

} // namespace deltalg

#endif
