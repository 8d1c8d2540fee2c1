#pragma once

// Brute-force checkers for Arrovian axioms and domain richness on enumerable
// instances. Each checker reports the first counterexample it meets in
// enumeration order.

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <unordered_map>
#include <unordered_set>
#include <utility>
#include <vector>

#include "ssbchoice/aggregation.hpp"
#include "ssbchoice/core_model.hpp"
#include "ssbchoice/random.hpp"

namespace ssbchoice {

/// A named social welfare function. Must be deterministic.
struct SWFHandle {
  std::string name;
  std::function<SSBMatrix(const Profile&)> map;

  SSBMatrix operator()(const Profile& profile) const { return map(profile); }
};

namespace swf {
SWFHandle pairwise_utilitarian();
SWFHandle majority_margins();
SWFHandle affine(WeightVector weights);
SWFHandle approval();
SWFHandle relative_utilitarian();
/// Collective preference equals agent `agent`'s (0-based).
SWFHandle dictatorial(std::size_t agent);
/// Always complete indifference.
SWFHandle constant_zero();
}  // namespace swf

struct Verdict {
  bool pass = true;
  /// The checked implication had a false antecedent everywhere.
  bool vacuous = false;
  std::string detail;

  explicit operator bool() const { return pass; }
};

/// How agent restrictions are compared when testing the IIA hypothesis.
enum class IIAConvention {
  /// Restricted matrices positively proportional, or both zero.
  UpToScale,
  /// Restricted matrices entrywise equal (exact for PC agents).
  Absolute,
};

const char* to_string(IIAConvention c);

/// If every agent's preferences on Delta_X agree between the two profiles,
/// the collective preferences on Delta_X must agree too.
Verdict check_iia(const SWFHandle& f, const Profile& lhs, const Profile& rhs, const AltSet& alts,
                  IIAConvention convention = IIAConvention::UpToScale);

struct IIASuiteReport {
  std::size_t profiles = 0;
  std::size_t subsets = 0;
  std::size_t pairs_checked = 0;
  /// Pairs (R, R', X) where the hypothesis held.
  std::size_t hypothesis_held = 0;
  std::size_t violations = 0;
  std::optional<std::string> first_counterexample;

  bool pass() const { return violations == 0; }
};

/// check_iia over every ordered pair of `profiles` and every set in `subsets`.
/// Collective matrices are computed once per profile. Work is split over
/// `jobs` threads; the reported counterexample is the first in (lhs, rhs, X)
/// order regardless of `jobs`.
IIASuiteReport exhaustive_iia(const SWFHandle& f, const std::vector<Profile>& profiles,
                              const std::vector<AltSet>& subsets,
                              IIAConvention convention = IIAConvention::UpToScale, unsigned jobs = 1);

/// f(R) == f(R o pi) entrywise. All permutations are tried when the profile
/// has at most `enumeration_bound` agents; otherwise `samples` seeded ones.
Verdict check_anonymity(const SWFHandle& f, const Profile& profile, std::size_t enumeration_bound = 6,
                        std::uint64_t seed = 1, std::size_t samples = 720);

using LotteryPair = std::pair<Lottery, Lottery>;

/// Every ordered pair of pure outcomes, followed by `count` seeded random
/// pairs.
std::vector<LotteryPair> sample_lottery_pairs(const Universe& universe, std::size_t count,
                                              std::uint64_t seed);

/// Unanimous weak preference with some strict preference must give strict
/// collective preference; unanimous indifference must give indifference.
Verdict check_pareto(const SWFHandle& f, const Profile& profile, const std::vector<LotteryPair>& pairs);

enum class Richness { R1, R2, R3, R4, R5 };

const char* to_string(Richness r);

/// A finite stand-in for a preference domain. Members are stored normalized
/// and deduplicated; membership is equality up to positive scaling.
class DomainDescription {
 public:
  DomainDescription(Universe universe, const std::vector<SSBMatrix>& matrices);

  const Universe& universe() const { return universe_; }
  const std::vector<SSBMatrix>& members() const { return members_; }
  std::size_t size() const { return members_.size(); }

  bool contains(const SSBMatrix& phi) const;

 private:
  Universe universe_;
  std::vector<SSBMatrix> members_;
  std::unordered_set<std::string> keys_;
};

/// Canonical text key of normalize(phi); equal keys iff positively
/// proportional or both zero.
std::string scale_free_key(const SSBMatrix& phi);

DomainDescription full_pc_domain(const Universe& universe);
DomainDescription transitive_pc_domain(const Universe& universe);
DomainDescription dichotomous_domain(const Universe& universe);

struct RichnessReport {
  Richness condition;
  bool pass = true;
  std::string witness;
};

/// R1 closure under relabeling alternatives; R2 complete indifference present;
/// R3 closure under inversion; R4 for every member and X with
/// |X| <= min(4, m-1) some member agrees on X and puts all of X strictly above
/// an outside alternative; R5 for every X with |X| <= min(4, m) every two-tier
/// pattern on X is the restriction of some member.
std::vector<RichnessReport> audit_richness(const DomainDescription& domain,
                                           const std::vector<Richness>& conditions);

/// Whether every member is a PC matrix. A rich domain that fails this admits
/// no anonymous Arrovian SWF.
Verdict pc_inclusion_check(const DomainDescription& domain);

}  // namespace ssbchoice
