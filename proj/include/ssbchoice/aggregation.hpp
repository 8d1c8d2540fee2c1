#pragma once

// Social welfare functions mapping profiles to collective SSB matrices.

#include <utility>
#include <vector>

#include "ssbchoice/core_model.hpp"
#include "ssbchoice/ssb.hpp"

namespace ssbchoice {

/// One weight per agent.
struct WeightVector {
  std::vector<Rational> weights;

  static WeightVector uniform(std::size_t n) { return {std::vector<Rational>(n, Rational(1))}; }
  bool all_positive() const;
};

/// entries[a][b] = |N_ab| - |N_ba|. Every agent must be a BaseRelation.
SSBMatrix majority_margins(const Profile& profile);

/// Sum of w_i * normalize(phi_i).
SSBMatrix affine_utilitarian(const Profile& profile, const WeightVector& weights);

/// affine_utilitarian with unit weights.
SSBMatrix pairwise_utilitarian(const Profile& profile);

/// Rescales each agent's utilities to [0, 1] and sums them. Constant agents
/// contribute nothing. Every agent must be a UtilityVector.
SSBMatrix relative_utilitarian_vnm(const Profile& profile);

struct ApprovalResult {
  UtilityVector scores;
  SSBMatrix matrix;
};

/// Approval voting: scores count the agents placing each alternative in their
/// top tier. Every agent must be a dichotomous BaseRelation.
ApprovalResult approval_aggregate(const Profile& profile);

/// The approved set of a dichotomous relation (empty for complete
/// indifference).
AltSet approved_set(const BaseRelation& relation);

enum class ParetoRelation { StrictDominance, WeakOnly, None };

const char* to_string(ParetoRelation r);

/// StrictDominance: every agent weakly prefers p and some agent strictly.
/// WeakOnly: every agent is indifferent.
ParetoRelation pareto_relation(const Profile& profile, const Lottery& p, const Lottery& q);

/// Agents strictly preferring p to q (the set N_pq).
std::vector<std::size_t> agents_preferring(const Profile& profile, const Lottery& p, const Lottery& q);

}  // namespace ssbchoice
