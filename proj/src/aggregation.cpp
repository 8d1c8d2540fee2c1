#include "ssbchoice/aggregation.hpp"

#include <algorithm>
#include <stdexcept>

namespace ssbchoice {

bool WeightVector::all_positive() const {
  return std::all_of(weights.begin(), weights.end(), [](const Rational& w) { return w > 0; });
}

SSBMatrix majority_margins(const Profile& profile) {
  const auto m = profile.universe().size();
  std::vector<Rational> entries(m * m, Rational(0));
  for (std::size_t i = 0; i < profile.size(); ++i) {
    const auto* relation = std::get_if<BaseRelation>(&profile[i]);
    if (!relation)
      throw std::invalid_argument("agent " + std::to_string(i + 1) +
                                  " is not given as a relation over pure outcomes");
    for (std::size_t a = 0; a < m; ++a)
      for (std::size_t b = 0; b < m; ++b)
        if (relation->prefers(a, b)) {
          entries[a * m + b] += 1;
          entries[b * m + a] -= 1;
        }
  }
  return SSBMatrix(profile.universe(), std::move(entries));
}

SSBMatrix affine_utilitarian(const Profile& profile, const WeightVector& weights) {
  if (weights.weights.size() != profile.size())
    throw std::invalid_argument("weight vector has " + std::to_string(weights.weights.size()) +
                                " entries for " + std::to_string(profile.size()) + " agents");
  auto total = SSBMatrix::zero(profile.universe());
  for (std::size_t i = 0; i < profile.size(); ++i) {
    if (weights.weights[i] == 0) continue;
    total = total + weights.weights[i] * normalize(to_matrix(profile[i]));
  }
  return total;
}

SSBMatrix pairwise_utilitarian(const Profile& profile) {
  return affine_utilitarian(profile, WeightVector::uniform(profile.size()));
}

SSBMatrix relative_utilitarian_vnm(const Profile& profile) {
  const auto m = profile.universe().size();
  std::vector<Rational> total(m, Rational(0));
  for (std::size_t i = 0; i < profile.size(); ++i) {
    const auto* u = std::get_if<UtilityVector>(&profile[i]);
    if (!u) throw std::invalid_argument("agent " + std::to_string(i + 1) + " is not a vNM agent");
    const auto [lo, hi] = std::minmax_element(u->values().begin(), u->values().end());
    if (*lo == *hi) continue;
    const Rational range = *hi - *lo;
    for (std::size_t a = 0; a < m; ++a) total[a] += ((*u)[a] - *lo) / range;
  }
  return separable_matrix(UtilityVector(profile.universe(), std::move(total)));
}

AltSet approved_set(const BaseRelation& relation) {
  if (relation.empty()) return {};
  auto tiers = relation.as_weak_order();
  if (!tiers || tiers->size() != 2) throw std::invalid_argument("relation is not dichotomous");
  return tiers->front();
}

ApprovalResult approval_aggregate(const Profile& profile) {
  const auto m = profile.universe().size();
  std::vector<Rational> scores(m, Rational(0));
  for (std::size_t i = 0; i < profile.size(); ++i) {
    const auto* relation = std::get_if<BaseRelation>(&profile[i]);
    if (!relation || !is_dichotomous(*relation))
      throw std::invalid_argument("agent " + std::to_string(i + 1) + " is not dichotomous");
    for (auto a : approved_set(*relation)) scores[a] += 1;
  }
  UtilityVector u(profile.universe(), std::move(scores));
  auto matrix = separable_matrix(u);
  return {std::move(u), std::move(matrix)};
}

const char* to_string(ParetoRelation r) {
  switch (r) {
    case ParetoRelation::StrictDominance:
      return "STRICT_DOMINANCE";
    case ParetoRelation::WeakOnly:
      return "WEAK_ONLY";
    case ParetoRelation::None:
      return "NONE";
  }
  return "?";
}

ParetoRelation pareto_relation(const Profile& profile, const Lottery& p, const Lottery& q) {
  bool some_strict = false;
  for (const auto& agent : profile.agents()) {
    switch (compare(to_matrix(agent), p, q)) {
      case Comparison::Dispreferred:
        return ParetoRelation::None;
      case Comparison::Preferred:
        some_strict = true;
        break;
      case Comparison::Indifferent:
        break;
    }
  }
  return some_strict ? ParetoRelation::StrictDominance : ParetoRelation::WeakOnly;
}

std::vector<std::size_t> agents_preferring(const Profile& profile, const Lottery& p, const Lottery& q) {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < profile.size(); ++i)
    if (compare(to_matrix(profile[i]), p, q) == Comparison::Preferred) out.push_back(i);
  return out;
}

}  // namespace ssbchoice
