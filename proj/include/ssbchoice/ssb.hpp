#pragma once

// Operations on skew-symmetric bilinear (SSB) utility matrices.

#include <optional>
#include <tuple>

#include "ssbchoice/core_model.hpp"

namespace ssbchoice {

enum class Comparison { Preferred, Indifferent, Dispreferred };

const char* to_string(Comparison c);

/// The bilinear form p^T phi q.
Rational evaluate(const SSBMatrix& phi, const Lottery& p, const Lottery& q);

/// Sign of evaluate(phi, p, q).
Comparison compare(const SSBMatrix& phi, const Lottery& p, const Lottery& q);

/// Pairwise-comparison extension: +1 where a beats b, -1 where b beats a.
SSBMatrix pc_extension(const BaseRelation& relation);

/// phi(a, b) = u(a) - u(b).
SSBMatrix separable_matrix(const UtilityVector& u);

/// Matrix representation of any agent (PC agents via pc_extension, vNM agents
/// via separable_matrix). Not normalized.
SSBMatrix to_matrix(const Agent& agent);

/// Scales so the largest entry is exactly one; the zero matrix is returned
/// unchanged.
SSBMatrix normalize(const SSBMatrix& phi);

/// Sub-matrix over `alts` in universe order. Entries keep their absolute
/// values. Throws std::invalid_argument on an empty set.
SSBMatrix restrict(const SSBMatrix& phi, const AltSet& alts);

/// Relabels alternatives: entry (perm[a], perm[b]) of the result is entry
/// (a, b) of `phi`. The universe is kept.
SSBMatrix permute(const SSBMatrix& phi, const std::vector<std::size_t>& perm);

/// True iff lhs = alpha * rhs for some alpha > 0, or both are zero, i.e. both
/// matrices represent the same relation over lotteries.
bool positively_proportional(const SSBMatrix& lhs, const SSBMatrix& rhs);

bool is_pc(const SSBMatrix& phi);

/// Two-tier weak order, or the empty relation.
bool is_dichotomous(const BaseRelation& relation);

/// Returns u with u(first) = 0 and phi(a, b) = u(a) - u(b) when phi is
/// separable, otherwise nullopt.
std::optional<UtilityVector> is_vnm_separable(const SSBMatrix& phi);

using LotteryCycle = std::tuple<Lottery, Lottery, Lottery>;

/// Candidate lotteries searched by cycle_witness: every pure outcome, then for
/// each pair a < b every two-support lottery k/d a + (d-k)/d b with d <= 5.
std::vector<Lottery> cycle_search_grid(const Universe& universe);

/// First (p, q, r) on the search grid, in enumeration order, with
/// p > q > r > p strictly. Every returned cycle verifies exactly.
std::optional<LotteryCycle> cycle_witness(const SSBMatrix& phi, unsigned jobs = 1);

}  // namespace ssbchoice
