#include "ssbchoice/axiom_lab.hpp"

#include <algorithm>
#include <limits>
#include <sstream>
#include <thread>
#include <tuple>

#include "ssbchoice/ssb.hpp"

namespace ssbchoice {

namespace swf {

SWFHandle pairwise_utilitarian() {
  return {"pairwise-utilitarian", [](const Profile& r) { return ssbchoice::pairwise_utilitarian(r); }};
}

SWFHandle majority_margins() {
  return {"majority-margins", [](const Profile& r) { return ssbchoice::majority_margins(r); }};
}

SWFHandle affine(WeightVector weights) {
  std::string name = "affine(";
  for (std::size_t i = 0; i < weights.weights.size(); ++i)
    name += (i ? "," : "") + to_string(weights.weights[i]);
  name += ")";
  return {name, [w = std::move(weights)](const Profile& r) { return affine_utilitarian(r, w); }};
}

SWFHandle approval() {
  return {"approval", [](const Profile& r) { return approval_aggregate(r).matrix; }};
}

SWFHandle relative_utilitarian() {
  return {"relative-utilitarian", [](const Profile& r) { return relative_utilitarian_vnm(r); }};
}

SWFHandle dictatorial(std::size_t agent) {
  return {"dictator(" + std::to_string(agent + 1) + ")",
          [agent](const Profile& r) { return normalize(to_matrix(r[agent])); }};
}

SWFHandle constant_zero() {
  return {"constant", [](const Profile& r) { return SSBMatrix::zero(r.universe()); }};
}

}  // namespace swf

namespace {

// Key of normalize(phi|alts): upper triangle in index order, so equal keys
// mean positively proportional restrictions (or both zero).
std::string restricted_key(const SSBMatrix& phi, const AltSet& alts) {
  Rational top = 0;
  for (auto a : alts)
    for (auto b : alts)
      if (phi(a, b) > top) top = phi(a, b);
  std::string key = std::to_string(alts.size()) + "|";
  for (std::size_t i = 0; i < alts.size(); ++i)
    for (std::size_t j = i + 1; j < alts.size(); ++j) {
      const auto& e = phi(alts[i], alts[j]);
      key += (top == 0 || top == 1) ? e.get_str() : Rational(e / top).get_str();
      key += ',';
    }
  return key;
}

// Key of phi|alts with absolute entries.
std::string absolute_key(const SSBMatrix& phi, const AltSet& alts) {
  std::string key = std::to_string(alts.size()) + "|";
  for (std::size_t i = 0; i < alts.size(); ++i)
    for (std::size_t j = i + 1; j < alts.size(); ++j) key += phi(alts[i], alts[j]).get_str() + ',';
  return key;
}

std::string agent_key(const SSBMatrix& phi, const AltSet& alts, IIAConvention convention) {
  return convention == IIAConvention::UpToScale ? restricted_key(phi, alts) : absolute_key(phi, alts);
}

std::string describe_profile(const Profile& profile) {
  std::string out = "(";
  for (std::size_t i = 0; i < profile.size(); ++i)
    out += (i ? "; " : "") + to_string(to_matrix(profile[i]));
  return out + ")";
}

std::string describe_perm(const std::vector<std::size_t>& perm) {
  std::string out = "[";
  for (std::size_t i = 0; i < perm.size(); ++i) out += (i ? " " : "") + std::to_string(perm[i] + 1);
  return out + "]";
}

}  // namespace

std::string scale_free_key(const SSBMatrix& phi) { return restricted_key(phi, phi.universe().all()); }

const char* to_string(IIAConvention c) {
  return c == IIAConvention::UpToScale ? "up-to-scale" : "absolute";
}

// --------------------------------------------------------------------- IIA

Verdict check_iia(const SWFHandle& f, const Profile& lhs, const Profile& rhs, const AltSet& alts,
                  IIAConvention convention) {
  if (!(lhs.universe() == rhs.universe())) throw UniverseMismatch();
  if (lhs.size() != rhs.size())
    throw std::invalid_argument("IIA check needs profiles with the same number of agents");
  const auto set = make_alt_set(alts, lhs.universe().size());
  if (set.empty()) throw std::invalid_argument("IIA check needs a nonempty set of alternatives");

  for (std::size_t i = 0; i < lhs.size(); ++i) {
    if (agent_key(to_matrix(lhs[i]), set, convention) != agent_key(to_matrix(rhs[i]), set, convention))
      return {true, true,
              "hypothesis fails: agent " + std::to_string(i + 1) + " differs on " +
                  to_string(set, lhs.universe())};
  }
  const auto left = restrict(f(lhs), set);
  const auto right = restrict(f(rhs), set);
  if (positively_proportional(left, right))
    return {true, false, "collective preferences agree on " + to_string(set, lhs.universe())};
  return {false, false,
          f.name + " violates IIA on " + to_string(set, lhs.universe()) + ": " + to_string(left) +
              " vs " + to_string(right) + " (agents compared " + to_string(convention) + ")"};
}

IIASuiteReport exhaustive_iia(const SWFHandle& f, const std::vector<Profile>& profiles,
                              const std::vector<AltSet>& subsets, IIAConvention convention,
                              unsigned jobs) {
  IIASuiteReport report;
  report.profiles = profiles.size();
  report.subsets = subsets.size();
  if (profiles.empty() || subsets.empty()) return report;
  const auto n = profiles.front().size();
  for (const auto& p : profiles)
    if (p.size() != n || !(p.universe() == profiles.front().universe()))
      throw std::invalid_argument("IIA suite needs profiles of one shape");

  // keys[s][i]: agent keys then the collective key for profile i on subset s.
  std::vector<std::vector<std::vector<std::string>>> agent_keys(subsets.size());
  std::vector<std::vector<std::string>> collective_keys(subsets.size());
  std::vector<SSBMatrix> collective;
  std::vector<std::vector<SSBMatrix>> agent_matrices;
  for (const auto& p : profiles) {
    collective.push_back(f(p));
    std::vector<SSBMatrix> ms;
    for (const auto& a : p.agents()) ms.push_back(to_matrix(a));
    agent_matrices.push_back(std::move(ms));
  }
  for (std::size_t s = 0; s < subsets.size(); ++s) {
    for (std::size_t i = 0; i < profiles.size(); ++i) {
      std::vector<std::string> keys;
      for (const auto& m : agent_matrices[i]) keys.push_back(agent_key(m, subsets[s], convention));
      agent_keys[s].push_back(std::move(keys));
      collective_keys[s].push_back(restricted_key(collective[i], subsets[s]));
    }
  }

  struct Partial {
    std::size_t checked = 0, held = 0, violations = 0;
    std::tuple<std::size_t, std::size_t, std::size_t> first{std::numeric_limits<std::size_t>::max(), 0, 0};
  };
  const unsigned workers = std::max(1u, jobs);
  std::vector<Partial> partial(workers);
  auto work = [&](unsigned t) {
    auto& out = partial[t];
    for (std::size_t i = t; i < profiles.size(); i += workers)
      for (std::size_t j = 0; j < profiles.size(); ++j)
        for (std::size_t s = 0; s < subsets.size(); ++s) {
          ++out.checked;
          if (agent_keys[s][i] != agent_keys[s][j]) continue;
          ++out.held;
          if (collective_keys[s][i] == collective_keys[s][j]) continue;
          ++out.violations;
          out.first = std::min(out.first, std::make_tuple(i, j, s));
        }
  };
  if (workers == 1) {
    work(0);
  } else {
    std::vector<std::jthread> pool;
    for (unsigned t = 0; t < workers; ++t) pool.emplace_back(work, t);
  }

  auto first = std::make_tuple(std::numeric_limits<std::size_t>::max(), std::size_t{0}, std::size_t{0});
  for (const auto& p : partial) {
    report.pairs_checked += p.checked;
    report.hypothesis_held += p.held;
    report.violations += p.violations;
    first = std::min(first, p.first);
  }
  if (report.violations > 0) {
    const auto [i, j, s] = first;
    report.first_counterexample = check_iia(f, profiles[i], profiles[j], subsets[s], convention).detail +
                                  "; profiles " + describe_profile(profiles[i]) + " and " +
                                  describe_profile(profiles[j]);
  }
  return report;
}

// --------------------------------------------------------------- anonymity

Verdict check_anonymity(const SWFHandle& f, const Profile& profile, std::size_t enumeration_bound,
                        std::uint64_t seed, std::size_t samples) {
  const auto n = profile.size();
  if (n <= 1) return {true, true, "a single agent has no relabelings"};
  std::vector<std::vector<std::size_t>> perms;
  if (n <= enumeration_bound) {
    perms = all_permutations(n);
  } else {
    Rng rng(seed);
    std::vector<std::size_t> perm(n);
    for (std::size_t k = 0; k < n; ++k) perm[k] = k;
    for (std::size_t s = 0; s < samples; ++s) {
      std::shuffle(perm.begin(), perm.end(), rng);
      perms.push_back(perm);
    }
  }
  const auto base = f(profile);
  for (const auto& perm : perms) {
    const auto other = f(profile.permuted(perm));
    if (!(other == base))
      return {false, false,
              f.name + " changes under agent permutation " + describe_perm(perm) + ": " + to_string(base) +
                  " vs " + to_string(other)};
  }
  return {true, false,
          std::to_string(perms.size()) + (n <= enumeration_bound ? " permutations (all)" : " sampled permutations, seed " + std::to_string(seed))};
}

// ------------------------------------------------------------------ Pareto

std::vector<LotteryPair> sample_lottery_pairs(const Universe& universe, std::size_t count,
                                              std::uint64_t seed) {
  std::vector<LotteryPair> pairs;
  for (std::size_t a = 0; a < universe.size(); ++a)
    for (std::size_t b = 0; b < universe.size(); ++b)
      pairs.emplace_back(Lottery::pure(universe, a), Lottery::pure(universe, b));
  Rng rng(seed);
  for (std::size_t k = 0; k < count; ++k) {
    auto p = random_lottery(universe, rng);
    auto q = random_lottery(universe, rng);
    pairs.emplace_back(std::move(p), std::move(q));
  }
  return pairs;
}

Verdict check_pareto(const SWFHandle& f, const Profile& profile, const std::vector<LotteryPair>& pairs) {
  const auto collective = f(profile);
  std::size_t applicable = 0;
  for (const auto& [p, q] : pairs) {
    const auto relation = pareto_relation(profile, p, q);
    if (relation == ParetoRelation::None) continue;
    ++applicable;
    const auto outcome = compare(collective, p, q);
    const auto expected =
        relation == ParetoRelation::StrictDominance ? Comparison::Preferred : Comparison::Indifferent;
    if (outcome != expected)
      return {false, false,
              f.name + " violates Pareto optimality: " + to_string(p) + " vs " + to_string(q) + " is " +
                  ssbchoice::to_string(relation) + " but collectively " + ssbchoice::to_string(outcome)};
  }
  if (applicable == 0) return {true, true, "no Pareto-comparable pair among the samples"};
  return {true, false, std::to_string(applicable) + " Pareto-comparable pairs respected"};
}

// ---------------------------------------------------------------- richness

const char* to_string(Richness r) {
  switch (r) {
    case Richness::R1:
      return "R1";
    case Richness::R2:
      return "R2";
    case Richness::R3:
      return "R3";
    case Richness::R4:
      return "R4";
    case Richness::R5:
      return "R5";
  }
  return "?";
}

DomainDescription::DomainDescription(Universe universe, const std::vector<SSBMatrix>& matrices)
    : universe_(std::move(universe)) {
  for (const auto& phi : matrices) {
    if (!(phi.universe() == universe_)) throw UniverseMismatch();
    auto normalized = normalize(phi);
    if (keys_.insert(scale_free_key(normalized)).second) members_.push_back(std::move(normalized));
  }
}

bool DomainDescription::contains(const SSBMatrix& phi) const {
  return keys_.count(scale_free_key(phi)) > 0;
}

DomainDescription full_pc_domain(const Universe& universe) {
  return DomainDescription(universe, all_pc_matrices(universe));
}

DomainDescription transitive_pc_domain(const Universe& universe) {
  std::vector<SSBMatrix> ms;
  for (const auto& r : all_weak_orders(universe)) ms.push_back(pc_extension(r));
  return DomainDescription(universe, ms);
}

DomainDescription dichotomous_domain(const Universe& universe) {
  std::vector<SSBMatrix> ms;
  for (const auto& r : all_dichotomous(universe)) ms.push_back(pc_extension(r));
  return DomainDescription(universe, ms);
}

namespace {

std::vector<AltSet> subsets_up_to(std::size_t m, std::size_t max_size) {
  std::vector<AltSet> out;
  for (auto& s : nonempty_subsets(m))
    if (s.size() <= max_size) out.push_back(std::move(s));
  return out;
}

RichnessReport audit_r1(const DomainDescription& d) {
  const auto m = d.universe().size();
  RichnessReport report{Richness::R1, true, {}};
  if (m < 2) return report;
  // A transposition and a full cycle generate every permutation.
  std::vector<std::size_t> swap01(m), cycle(m);
  for (std::size_t a = 0; a < m; ++a) {
    swap01[a] = a;
    cycle[a] = (a + 1) % m;
  }
  std::swap(swap01[0], swap01[1]);
  for (const auto& phi : d.members())
    for (const auto* perm : {&swap01, &cycle}) {
      auto image = permute(phi, *perm);
      if (!d.contains(image)) {
        report.pass = false;
        report.witness = "member " + to_string(phi) + " relabeled by " + describe_perm(*perm) +
                         " gives " + to_string(image) + ", which is missing";
        return report;
      }
    }
  return report;
}

RichnessReport audit_r2(const DomainDescription& d) {
  RichnessReport report{Richness::R2, true, {}};
  if (!d.contains(SSBMatrix::zero(d.universe()))) {
    report.pass = false;
    report.witness = "complete indifference (zero matrix) is missing";
  }
  return report;
}

RichnessReport audit_r3(const DomainDescription& d) {
  RichnessReport report{Richness::R3, true, {}};
  for (const auto& phi : d.members())
    if (!d.contains(-phi)) {
      report.pass = false;
      report.witness = "inverse of member " + to_string(phi) + " is missing";
      return report;
    }
  return report;
}

RichnessReport audit_r4(const DomainDescription& d) {
  const auto m = d.universe().size();
  RichnessReport report{Richness::R4, true, {}};
  if (m < 2) return report;
  const auto subsets = subsets_up_to(m, std::min<std::size_t>(4, m - 1));
  // bottomable[s]: keys of X-restrictions of members that put all of X
  // strictly above some outside alternative.
  std::vector<std::unordered_set<std::string>> bottomable(subsets.size());
  for (const auto& psi : d.members())
    for (std::size_t s = 0; s < subsets.size(); ++s) {
      const auto& x = subsets[s];
      bool found = false;
      for (std::size_t a = 0; a < m && !found; ++a) {
        if (std::binary_search(x.begin(), x.end(), a)) continue;
        found = std::all_of(x.begin(), x.end(), [&](std::size_t y) { return psi(y, a) > 0; });
      }
      if (found) bottomable[s].insert(restricted_key(psi, x));
    }
  for (const auto& phi : d.members())
    for (std::size_t s = 0; s < subsets.size(); ++s)
      if (!bottomable[s].count(restricted_key(phi, subsets[s]))) {
        report.pass = false;
        report.witness = "no member agrees with " + to_string(phi) + " on " +
                         to_string(subsets[s], d.universe()) +
                         " while ranking all of it above an outside alternative";
        return report;
      }
  return report;
}

RichnessReport audit_r5(const DomainDescription& d) {
  const auto m = d.universe().size();
  RichnessReport report{Richness::R5, true, {}};
  const auto subsets = subsets_up_to(m, std::min<std::size_t>(4, m));
  for (const auto& x : subsets) {
    std::unordered_set<std::string> present;
    for (const auto& psi : d.members()) present.insert(restricted_key(psi, x));
    const auto k = x.size();
    for (std::size_t mask = 0; mask < (std::size_t{1} << k); ++mask) {
      std::string key = std::to_string(k) + "|";
      for (std::size_t i = 0; i < k; ++i)
        for (std::size_t j = i + 1; j < k; ++j) {
          const int top_i = (mask >> i) & 1, top_j = (mask >> j) & 1;
          key += std::to_string(top_i - top_j) + ',';
        }
      if (!present.count(key)) {
        AltSet approved;
        for (std::size_t i = 0; i < k; ++i)
          if ((mask >> i) & 1) approved.push_back(x[i]);
        report.pass = false;
        report.witness = "no member restricts to the two-tier pattern " +
                         to_string(approved, d.universe()) + " over the rest of " +
                         to_string(x, d.universe());
        return report;
      }
    }
  }
  return report;
}

}  // namespace

std::vector<RichnessReport> audit_richness(const DomainDescription& domain,
                                           const std::vector<Richness>& conditions) {
  std::vector<RichnessReport> out;
  for (auto c : conditions) {
    switch (c) {
      case Richness::R1:
        out.push_back(audit_r1(domain));
        break;
      case Richness::R2:
        out.push_back(audit_r2(domain));
        break;
      case Richness::R3:
        out.push_back(audit_r3(domain));
        break;
      case Richness::R4:
        out.push_back(audit_r4(domain));
        break;
      case Richness::R5:
        out.push_back(audit_r5(domain));
        break;
    }
  }
  return out;
}

Verdict pc_inclusion_check(const DomainDescription& domain) {
  for (const auto& phi : domain.members())
    if (!is_pc(phi))
      return {false, false,
              "member " + to_string(phi) +
                  " is not a pairwise-comparison matrix; a rich domain containing it admits no "
                  "anonymous Arrovian SWF"};
  return {true, false, "all " + std::to_string(domain.size()) + " members are pairwise-comparison matrices"};
}

}  // namespace ssbchoice
