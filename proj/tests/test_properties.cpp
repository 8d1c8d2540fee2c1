// Seeded randomized properties; every comparison is exact.
#include <doctest.h>

#include <algorithm>
#include <numeric>

#include "ssbchoice/aggregation.hpp"
#include "ssbchoice/axiom_lab.hpp"
#include "ssbchoice/lottery_solver.hpp"
#include "ssbchoice/random.hpp"
#include "support.hpp"

using namespace ssbchoice;
using testing::abc;

namespace {

constexpr int kTrials = 1000;

Rational random_lambda(Rng& rng) {
  std::uniform_int_distribution<int> num(0, 12);
  return testing::ratio(num(rng), 12);
}

}  // namespace

TEST_CASE("evaluate is skew-symmetric and bilinear") {
  Rng rng(101);
  for (int t = 0; t < kTrials; ++t) {
    const auto u = abc(2 + t % 4);
    const auto phi = random_ssb(u, rng);
    const auto p = random_lottery(u, rng), q = random_lottery(u, rng), r = random_lottery(u, rng);
    const auto lambda = random_lambda(rng);
    CHECK(evaluate(phi, p, q) == -evaluate(phi, q, p));
    CHECK(evaluate(phi, p, q) == testing::bilinear(phi, p, q));
    CHECK(evaluate(phi, mix(p, r, lambda), q) == lambda * evaluate(phi, p, q) + (1 - lambda) * evaluate(phi, r, q));
    CHECK(evaluate(phi, q, mix(p, r, lambda)) == lambda * evaluate(phi, q, p) + (1 - lambda) * evaluate(phi, q, r));
  }
}

TEST_CASE("PC semantics match the pairwise-draw double sum") {
  Rng rng(102);
  for (int t = 0; t < kTrials; ++t) {
    const auto u = abc(2 + t % 4);
    const auto relation = random_base_relation(u, rng);
    const auto p = random_lottery(u, rng), q = random_lottery(u, rng);
    Rational direct = 0;
    for (std::size_t a = 0; a < u.size(); ++a)
      for (std::size_t b = 0; b < u.size(); ++b)
        if (relation.prefers(a, b)) direct += p[a] * q[b] - q[a] * p[b];
    CHECK(evaluate(pc_extension(relation), p, q) == direct);
  }
}

TEST_CASE("comparisons survive normalization") {
  Rng rng(103);
  for (int t = 0; t < kTrials; ++t) {
    const auto u = abc(2 + t % 4);
    const auto phi = random_ssb(u, rng);
    const auto n = normalize(phi);
    CHECK((n.is_zero() || n.max_entry() == 1));
    const auto p = random_lottery(u, rng), q = random_lottery(u, rng);
    CHECK(compare(n, p, q) == compare(phi, p, q));
  }
}

TEST_CASE("separable matrices evaluate as utility differences") {
  Rng rng(104);
  for (int t = 0; t < kTrials; ++t) {
    const auto u = abc(2 + t % 4);
    const auto phi = separable_matrix(random_utility(u, rng));
    const auto found = is_vnm_separable(phi);
    REQUIRE(found.has_value());
    CHECK((*found)[0] == 0);
    const auto p = random_lottery(u, rng), q = random_lottery(u, rng);
    CHECK(evaluate(phi, p, q) == found->expected(p) - found->expected(q));
  }
}

TEST_CASE("symmetry axiom spot check") {
  // Antecedents are solved for exactly: q is placed on the indifference line
  // through 1/2 p + 1/2 r, then lambda is solved from the second indifference.
  Rng rng(105);
  const Rational half(1, 2);
  int applicable = 0;
  for (int t = 0; applicable < kTrials && t < 50 * kTrials; ++t) {
    const auto u = abc(3 + t % 3);
    const auto phi = random_ssb(u, rng);
    const auto p = random_lottery(u, rng), r = random_lottery(u, rng);
    const auto s = random_lottery(u, rng), w = random_lottery(u, rng);
    const auto centre = mix(p, r, half);
    const auto fs = evaluate(phi, s, centre), fw = evaluate(phi, w, centre);
    if (fs == fw || sign(fs) == sign(fw)) continue;
    const auto q = mix(s, w, fw / (fw - fs));
    REQUIRE(evaluate(phi, q, centre) == 0);
    const auto m = mix(p, q, half);
    const auto fp = evaluate(phi, p, m), fr = evaluate(phi, r, m);
    if (fp == fr) continue;
    const Rational lambda = fr / (fr - fp);
    if (lambda <= 0 || lambda >= 1) continue;
    REQUIRE(evaluate(phi, mix(p, r, lambda), m) == 0);
    ++applicable;
    CHECK(evaluate(phi, mix(r, p, lambda), mix(r, q, half)) == 0);
  }
  CHECK(applicable == kTrials);
}

TEST_CASE("margins are the sum of the agents' PC matrices") {
  Rng rng(106);
  for (int t = 0; t < kTrials; ++t) {
    const auto u = abc(2 + t % 4);
    const auto profile = random_pc_profile(u, 1 + t % 7, rng);
    auto total = SSBMatrix::zero(u);
    for (const auto& agent : profile.agents()) total = total + pc_extension(std::get<BaseRelation>(agent));
    CHECK(majority_margins(profile) == total);
    CHECK(pairwise_utilitarian(profile) == total);
  }
}

TEST_CASE("pairwise utilitarianism is Pareto optimal") {
  Rng rng(107);
  int strict = 0, weak = 0;
  for (int t = 0; t < 10 * kTrials; ++t) {
    const auto u = abc(2 + t % 4);
    const auto profile = random_pc_profile(u, 1 + t % 3, rng, t % 2 == 0);
    const auto p = random_lottery(u, rng, 3), q = random_lottery(u, rng, 3);
    const auto relation = pareto_relation(profile, p, q);
    const auto collective = compare(pairwise_utilitarian(profile), p, q);
    if (relation == ParetoRelation::StrictDominance) {
      ++strict;
      CHECK(collective == Comparison::Preferred);
    } else if (relation == ParetoRelation::WeakOnly) {
      ++weak;
      CHECK(collective == Comparison::Indifferent);
    }
  }
  CHECK(strict >= kTrials);
  CHECK(weak > 0);
}

TEST_CASE("majority margins and uniform affine utilitarianism are anonymous") {
  Rng rng(108);
  for (int t = 0; t < kTrials; ++t) {
    const auto u = abc(2 + t % 4);
    const std::size_t n = 1 + t % 5;
    const auto profile = random_pc_profile(u, n, rng);
    std::vector<std::size_t> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    std::shuffle(perm.begin(), perm.end(), rng);
    const auto permuted = profile.permuted(perm);
    CHECK(majority_margins(permuted) == majority_margins(profile));
    CHECK(affine_utilitarian(permuted, WeightVector::uniform(n)) ==
          affine_utilitarian(profile, WeightVector::uniform(n)));
  }
}

TEST_CASE("relabeling alternatives permutes the margins") {
  Rng rng(109);
  for (int t = 0; t < kTrials; ++t) {
    const auto u = abc(2 + t % 4);
    const auto profile = random_pc_profile(u, 1 + t % 4, rng);
    std::vector<std::size_t> pi(u.size());
    std::iota(pi.begin(), pi.end(), 0);
    std::shuffle(pi.begin(), pi.end(), rng);
    std::vector<Agent> relabeled;
    for (const auto& agent : profile.agents()) {
      std::vector<std::pair<std::size_t, std::size_t>> pairs;
      for (auto [a, b] : std::get<BaseRelation>(agent).pairs()) pairs.emplace_back(pi[a], pi[b]);
      relabeled.emplace_back(BaseRelation(u, pairs));
    }
    CHECK(majority_margins(Profile(u, relabeled)) == permute(majority_margins(profile), pi));
  }
}

TEST_CASE("approval matrices are separable and follow the majority on pure outcomes") {
  Rng rng(110);
  std::uniform_int_distribution<int> coin(0, 1);
  for (int t = 0; t < kTrials; ++t) {
    const auto u = abc(2 + t % 4);
    std::vector<Agent> agents;
    for (int i = 0; i < 1 + t % 5; ++i) {
      AltSet top;
      for (std::size_t a = 0; a < u.size(); ++a)
        if (coin(rng)) top.push_back(a);
      agents.emplace_back(top.empty() || top.size() == u.size() ? BaseRelation::indifferent(u) : weak_order(u, {top}));
    }
    const Profile profile(u, agents);
    const auto result = approval_aggregate(profile);
    CHECK(is_vnm_separable(result.matrix).has_value());
    const auto margins = majority_margins(profile);
    for (std::size_t a = 0; a < u.size(); ++a)
      for (std::size_t b = 0; b < u.size(); ++b) {
        CHECK(sign(result.matrix(a, b)) == sign(margins(a, b)));
        CHECK(sign(result.scores[a] - result.scores[b]) == sign(margins(a, b)));
      }
  }
}

TEST_CASE("symmetric games have value zero and certificates are nonnegative") {
  Rng rng(111);
  std::uniform_int_distribution<int> coin(0, 1);
  for (int t = 0; t < kTrials; ++t) {
    const auto u = abc(2 + t % 5);
    const auto phi = random_ssb(u, rng);
    AltSet x;
    for (std::size_t a = 0; a < u.size(); ++a)
      if (coin(rng)) x.push_back(a);
    if (x.empty()) x.push_back(t % u.size());
    const auto cert = maximal_lottery(phi, x);
    for (auto a : cert.lottery.support()) CHECK(std::binary_search(x.begin(), x.end(), a));
    Rational value;
    bool first = true;
    for (std::size_t i = 0; i < x.size(); ++i) {
      const auto oracle = testing::bilinear(phi, cert.lottery, Lottery::pure(u, x[i]));
      CHECK(cert.slack[i] == oracle);
      CHECK(oracle >= 0);
      if (first || oracle < value) value = oracle;
      first = false;
    }
    CHECK(value == 0);
    const auto chosen = choose(phi, FeasiblePolytope::simplex_face(u, x));
    CHECK(is_maximal(phi, chosen, x));
  }
}

TEST_CASE("contraction on simplex faces") {
  Rng rng(112);
  std::uniform_int_distribution<int> coin(0, 1);
  int nontrivial = 0;
  for (int t = 0; t < kTrials; ++t) {
    const auto u = abc(3 + t % 3);
    // Small ranges make ties and non-unique maximal sets common.
    const auto phi = random_ssb(u, rng, 1);
    AltSet b, a;
    for (std::size_t i = 0; i < u.size(); ++i)
      if (coin(rng)) {
        b.push_back(i);
        if (coin(rng)) a.push_back(i);
      }
    if (a.empty()) continue;
    for (const auto& v : maximal_set(phi, b).vertices) {
      const auto support = v.support();
      if (!std::includes(a.begin(), a.end(), support.begin(), support.end())) continue;
      ++nontrivial;
      CHECK(is_maximal(phi, v, a));
    }
  }
  CHECK(nontrivial > 100);
}

TEST_CASE("expansion to the hull of a union") {
  Rng rng(113);
  for (int t = 0; t < kTrials; ++t) {
    const auto u = abc(3 + t % 3);
    const auto phi = random_ssb(u, rng);
    std::vector<Lottery> xs, ys;
    for (int k = 0; k < 1 + t % 3; ++k) xs.push_back(random_lottery(u, rng));
    const auto p = choose(phi, FeasiblePolytope(u, xs));
    ys.push_back(p);
    for (int k = 0; k < 6; ++k) {
      const auto cand = random_lottery(u, rng);
      if (evaluate(phi, p, cand) >= 0) ys.push_back(cand);
    }
    const FeasiblePolytope x_set(u, xs), y_set(u, ys);
    for (auto s : polytope_slacks(phi, p, x_set)) REQUIRE(s >= 0);
    for (auto s : polytope_slacks(phi, p, y_set)) REQUIRE(s >= 0);
    auto both = xs;
    both.insert(both.end(), ys.begin(), ys.end());
    for (const auto& v : both) CHECK(testing::bilinear(phi, p, v) >= 0);
    // And against random points of the hull of the union.
    for (int k = 0; k < 3; ++k) {
      const auto w = mix(both[rng() % both.size()], both[rng() % both.size()], random_lambda(rng));
      CHECK(evaluate(phi, p, w) >= 0);
    }
  }
}

TEST_CASE("choose and maximal_lottery are both certified on random faces") {
  Rng rng(114);
  for (int t = 0; t < kTrials; ++t) {
    const auto u = abc(2 + t % 4);
    const auto phi = random_ssb(u, rng, 1);
    const auto x = u.all();
    CHECK(is_maximal(phi, choose(phi, FeasiblePolytope::simplex_face(u, x)), x));
    CHECK(is_maximal(phi, maximal_lottery(phi, x).lottery, x));
    const auto face = maximal_set(phi, x);
    for (const auto& v : face.vertices) CHECK(is_maximal(phi, v, x));
    if (face.unique) CHECK(face.vertices.front() == maximal_lottery(phi, x).lottery);
  }
}
