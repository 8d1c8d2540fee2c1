// Acceptance gate: one PASS/FAIL line per criterion, with its runtime limit.
#define DOCTEST_CONFIG_IMPLEMENT
#include <doctest.h>

#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <sstream>
#include <thread>

#include "ssbchoice/aggregation.hpp"
#include "ssbchoice/axiom_lab.hpp"
#include "ssbchoice/lottery_solver.hpp"
#include "ssbchoice/random.hpp"
#include "support.hpp"

using namespace ssbchoice;

namespace {

struct Outcome {
  bool pass = true;
  std::string detail;

  void require(bool condition, const std::string& what) {
    if (!condition && pass) {
      pass = false;
      detail = what;
    }
  }
};

bool run_criterion(int id, const std::string& name, double limit_seconds, const std::function<Outcome()>& body) {
  const auto start = std::chrono::steady_clock::now();
  Outcome outcome;
  try {
    outcome = body();
  } catch (const std::exception& e) {
    outcome = {false, std::string("exception: ") + e.what()};
  }
  const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  if (limit_seconds > 0 && seconds >= limit_seconds)
    outcome.require(false, "runtime limit exceeded");
  char timing[64];
  if (limit_seconds > 0) std::snprintf(timing, sizeof timing, "%.3fs < %.0fs", seconds, limit_seconds);
  else std::snprintf(timing, sizeof timing, "%.3fs", seconds);
  std::cout << (outcome.pass ? "PASS" : "FAIL") << " [" << id << "] " << name << " (" << timing << ")";
  if (!outcome.detail.empty()) std::cout << ": " << outcome.detail;
  std::cout << std::endl;
  return outcome.pass;
}

Outcome public_finance() {
  Outcome o;
  const auto profile = testing::load_ballots("table1.ballots");
  const auto margins = majority_margins(profile);
  const auto& u = profile.universe();
  const std::vector<std::tuple<const char*, const char*, int>> expected{
      {"A", "B", 40}, {"A", "C", -10}, {"A", "D", 80}, {"B", "C", 10}, {"B", "D", -10}, {"C", "D", 80}};
  for (const auto& [a, b, v] : expected)
    o.require(margins(u.index(a), u.index(b)) == v, std::string("margin ") + a + b);
  o.require(pairwise_utilitarian(profile) == margins, "pairwise utilitarian differs from margins");
  const auto cert = maximal_lottery(margins, u.all());
  o.require(cert.lottery == testing::lottery(u, {"1/6", "1/6", "2/3", "0"}), "lottery " + to_string(cert.lottery));
  const auto proposals = parse_proposals(read_text_file(testing::fixture("table1.proposals")));
  const auto shares = budget_allocation(proposals, cert.lottery);
  o.require(shares == testing::q({"1/4", "4/15", "3/10", "11/60"}), "allocation");
  std::string percents;
  for (const auto& s : shares) percents += (percents.empty() ? "" : "/") + to_percent(s);
  o.require(percents == "25.0/26.7/30.0/18.3", "percentages " + percents);
  if (o.pass) o.detail = "lottery " + to_string(cert.lottery) + ", budget " + percents + "%";
  return o;
}

Outcome condorcet() {
  Outcome o;
  const auto profile = testing::load_ballots("condorcet.ballots");
  const auto phi = pairwise_utilitarian(profile);
  const auto& u = phi.universe();
  o.require(phi == testing::matrix(u, {"0", "1", "-1", "-1", "0", "1", "1", "-1", "0"}), "matrix " + to_string(phi));
  const auto cert = maximal_lottery(phi, u.all());
  o.require(cert.lottery == testing::lottery(u, {"1/3", "1/3", "1/3"}), "lottery " + to_string(cert.lottery));
  const auto face = maximal_set(phi, u.all());
  o.require(face.unique, "maximal set not unique");
  return o;
}

Outcome steinhaus_trybula() {
  Outcome o;
  const auto phi = testing::load_matrix("fig3.matrix");
  const auto& u = phi.universe();
  const auto p = testing::lottery(u, {"0", "0", "1", "0"});
  const auto q = testing::lottery(u, {"2/5", "0", "0", "3/5"});
  const auto r = testing::lottery(u, {"0", "3/5", "0", "2/5"});
  o.require(evaluate(phi, p, q) == Rational(1, 5), "phi(p,q)");
  o.require(evaluate(phi, q, r) == Rational(1, 25), "phi(q,r)");
  o.require(evaluate(phi, r, p) == Rational(1, 5), "phi(r,p)");
  const auto cycle = cycle_witness(phi);
  o.require(cycle.has_value(), "no cycle on grid");
  if (cycle) {
    const auto& [x, y, z] = *cycle;
    o.require(testing::bilinear(phi, x, y) > 0 && testing::bilinear(phi, y, z) > 0 && testing::bilinear(phi, z, x) > 0,
              "witness does not verify");
  }
  return o;
}

Outcome iia_negative_and_retraction() {
  Outcome o;
  const auto before = testing::load_ballots("vnm-before.ballots");
  const auto after = testing::load_ballots("vnm-after.ballots");
  const auto v = check_iia(swf::relative_utilitarian(), before, after, make_alt_set(before.universe(), {"x", "y"}));
  o.require(!v.pass && !v.vacuous, "relative utilitarianism not caught: " + v.detail);

  const auto phi = pairwise_utilitarian(testing::load_ballots("table1.ballots"));
  const auto& u = phi.universe();
  const AltSet abc_set = make_alt_set(u, {"A", "B", "C"});
  const auto full = maximal_lottery(phi, u.all()).lottery;
  const auto chosen = choose(phi, FeasiblePolytope::simplex_face(u, abc_set));
  o.require(full[u.index("D")] == 0, "D in the support of the full solution");
  o.require(restrict_lottery(chosen, abc_set) == restrict_lottery(full, abc_set),
            "choose on {A,B,C} gives " + to_string(chosen));
  return o;
}

Outcome exhaustive_pairwise_iia() {
  Outcome o;
  const auto u = testing::abc(3);
  const auto profiles = all_profiles(u, all_weak_orders(u), 2);
  o.require(profiles.size() == 169, "profile count");
  const auto report = exhaustive_iia(swf::pairwise_utilitarian(), profiles, nonempty_subsets(3),
                                     IIAConvention::UpToScale, std::max(1u, std::thread::hardware_concurrency()));
  o.require(report.pairs_checked == 169 * 169 * 7, "pair count");
  o.require(report.pass(), report.first_counterexample.value_or(""));
  if (o.pass)
    o.detail = std::to_string(report.pairs_checked) + " (R, R', X) triples, " + std::to_string(report.hypothesis_held) +
               " with equal restrictions, 0 violations";
  return o;
}

Outcome property_suites() {
  Outcome o;
  doctest::Context context;
  std::ostringstream sink;
  context.setCout(&sink);
  context.setOption("no-version", true);
  const int failures = context.run();
  o.require(failures == 0, "property failures:\n" + sink.str());
  if (o.pass) o.detail = "every suite at >= 1000 seeded instances";
  return o;
}

Outcome approval_characterization() {
  Outcome o;
  const auto u = testing::abc(4);
  const auto relations = all_dichotomous(u);
  const auto profiles = all_profiles(u, relations, 2);
  o.require(profiles.size() == 225, "profile count");
  const auto f = swf::approval();
  const auto report = exhaustive_iia(f, profiles, nonempty_subsets(4), IIAConvention::UpToScale,
                                     std::max(1u, std::thread::hardware_concurrency()));
  o.require(report.pass(), report.first_counterexample.value_or(""));
  const auto pairs = sample_lottery_pairs(u, 200, 1);
  for (const auto& profile : profiles) {
    const auto v = check_pareto(f, profile, pairs);
    o.require(v.pass, v.detail);
    const auto result = approval_aggregate(profile);
    for (std::size_t a = 0; a < 4; ++a)
      for (std::size_t b = 0; b < 4; ++b)
        o.require(compare(result.matrix, Lottery::pure(u, a), Lottery::pure(u, b)) ==
                      (result.scores[a] > result.scores[b]   ? Comparison::Preferred
                       : result.scores[a] < result.scores[b] ? Comparison::Dispreferred
                                                             : Comparison::Indifferent),
                  "pure ranking differs from approval scores");
  }
  if (o.pass)
    o.detail = std::to_string(report.pairs_checked) + " IIA triples, Pareto on " + std::to_string(profiles.size()) +
               " profiles x " + std::to_string(pairs.size()) + " pairs";
  return o;
}

}  // namespace

int main() {
  bool all = true;
  all &= run_criterion(1, "public finance example reproduced exactly", 1, public_finance);
  all &= run_criterion(2, "Condorcet profile has unique uniform maximal lottery", 1, condorcet);
  all &= run_criterion(3, "lottery cycle values 1/5, 1/25, 1/5 and grid witness", 5, steinhaus_trybula);
  all &= run_criterion(4, "relative utilitarianism violates IIA; retracting D changes nothing", 0,
                       iia_negative_and_retraction);
  all &= run_criterion(5, "pairwise utilitarianism passes exhaustive IIA (n=2, m=3)", 60, exhaustive_pairwise_iia);
  all &= run_criterion(6, "property suites", 120, property_suites);
  all &= run_criterion(7, "approval voting passes IIA and Pareto on all dichotomous pairs (m=4)", 60,
                       approval_characterization);
  return all ? 0 : 1;
}
