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
 * Seeded generators for terms, systems and graphs, and transformations that
 * change a system without changing the tree it denotes. Every function draws
 * only from the engine it is given.
 */

#ifndef DELTALG_SAMPLING_HPP
#define DELTALG_SAMPLING_HPP

#include "deltalg/algebra.hpp"
#include "deltalg/extnat.hpp"
#include "deltalg/regsys.hpp"
#include "deltalg/semirings.hpp"

#include <cstddef>
#include <random>
#include <string>
#include <utility>
#include <vector>

namespace deltalg {

/// Random term with at most `height` nested operations; leaves are drawn
/// from `leaves`, constants and bot.
PartialTerm random_term(const Signature &sig, const std::vector<std::string> &leaves, std::size_t height,
			std::mt19937_64 &rng, double bot_prob = 0.1);

/// Systems `x0..x{n-1}` whose definitions are random terms over the system
/// variables and `gens`.
RegSys random_system(const Signature &sig, const std::vector<std::string> &gens, std::size_t nvars,
		     std::mt19937_64 &rng, std::size_t height = 2, const std::string &name = "S");

/// Linear system over the semiring signature: sums of letter products with
/// at most one system variable at the chosen end.
RegSys random_linear_system(const std::vector<std::string> &letters, std::size_t nvars, std::mt19937_64 &rng,
			    LinearSide side = LinearSide::Right);

/// Sums of products of letters and system variables, typically with several
/// system variables per product.
RegSys random_algebraic_system(const std::vector<std::string> &letters, std::size_t nvars, std::mt19937_64 &rng);

/// Right-linear system over coefficient generators `c0..c{k-1}` with values
/// in `0..max_coef`, and the environment binding them.
std::pair<RegSys, Env<ExtNat>> random_natinf_linear_system(std::size_t nvars, std::mt19937_64 &rng,
							   std::uint64_t max_coef = 3);

/// Nodes `n0..n{k-1}`, each ordered pair an edge with probability
/// `edge_prob`, weights uniform in `0..max_weight`.
WeightedDigraph random_digraph(std::size_t nodes, std::uint64_t max_weight, double edge_prob, std::mt19937_64 &rng);

/// Replaces system variable leaves by their definitions, in one definition
/// or in all of them. The denoted tree is unchanged.
RegSys unroll(const RegSys &s, std::mt19937_64 &rng);

/// Adds a copy of one system variable and redirects a random subset of its
/// occurrences to the copy. The denoted tree is unchanged.
RegSys duplicate_var(const RegSys &s, std::mt19937_64 &rng);

/// `count` random deletions of subterms of `t`, closed under pairwise merge.
std::vector<PartialTerm> random_directed_set(const PartialTerm &t, std::size_t count, std::mt19937_64 &rng);

} // namespace deltalg

#endif
