#include <doctest.h>

#include "ssbchoice/io.hpp"
#include "ssbchoice/random.hpp"
#include "ssbchoice/ssb.hpp"
#include "support.hpp"

using namespace ssbchoice;
using testing::abc;

namespace {

std::size_t error_line(const std::string& text) {
  try {
    parse_ballots(text);
  } catch (const ParseError& e) {
    return e.line();
  }
  return 0;
}

}  // namespace

TEST_CASE("ballot bodies of every kind") {
  const auto profile = parse_ballots(
      "# header comment\n"
      "alternatives: a, b, c\n"
      "\n"
      "2: a > b = c   # trailing comment\n"
      "1: approve {b}\n"
      "1: util a=1, b=1/3\n"
      "1: edges a>b, b>c, c>a\n"
      "1: matrix 0 2 0; -2 0 1; 0 -1 0\n");
  REQUIRE(profile.size() == 6);
  const auto& u = profile.universe();
  CHECK(profile[0] == Agent(weak_order(u, {{0}, {1, 2}})));
  CHECK(profile[1] == profile[0]);
  CHECK(profile[2] == Agent(weak_order(u, {{1}, {0, 2}})));
  CHECK(profile[3] == Agent(UtilityVector(u, testing::q({"1", "1/3", "0"}))));
  CHECK(profile[4] == Agent(BaseRelation(u, {{0, 1}, {1, 2}, {2, 0}})));
  CHECK(profile[5] == Agent(SSBMatrix::from_upper(u, testing::q({"2", "0", "1"}))));
}

TEST_CASE("ballot errors carry line and column") {
  CHECK(error_line("") == 1);
  CHECK(error_line("alternatives: a, b\n1: a > z\n") == 2);
  CHECK(error_line("alternatives: a, b\n1: a > b\n0: b > a\n") == 3);
  CHECK(error_line("alternatives: a, b\n1: a > a\n") == 2);
  CHECK(error_line("alternatives: a, a\n1: a\n") == 1);
  CHECK(error_line("alternatives: a, b\n") == 2);
  CHECK(error_line("alternatives: a, b\n1: edges a>b, b>a\n") == 2);
  CHECK(error_line("alternatives: a, b\n1: matrix 0 1; 1 0\n") == 2);
  CHECK(error_line("alternatives: a, b\n1: util a=x\n") == 2);
  CHECK(error_line("alternatives: a, util\n1: a\n") == 1);
  CHECK(error_line("a > b\n") == 1);
  try {
    parse_ballots("alternatives: a, b\n1: a > zz\n");
    FAIL("expected a parse error");
  } catch (const ParseError& e) {
    CHECK(e.column() == 8);
    CHECK(std::string(e.what()) == "line 2, column 8: unknown alternative 'zz'");
  }
}

TEST_CASE("render then parse round-trips random profiles") {
  Rng rng(17);
  std::uniform_int_distribution<int> kind(0, 3);
  for (int trial = 0; trial < 1000; ++trial) {
    const auto u = abc(2 + trial % 4);
    std::vector<Agent> agents;
    const int n = 1 + trial % 6;
    for (int i = 0; i < n; ++i) {
      switch (kind(rng)) {
        case 0:
          agents.emplace_back(random_weak_order(u, rng));
          break;
        case 1:
          agents.emplace_back(random_base_relation(u, rng));
          break;
        case 2:
          agents.emplace_back(random_utility(u, rng));
          break;
        default:
          agents.emplace_back(random_ssb(u, rng));
      }
      if (i > 0 && trial % 3 == 0) agents.push_back(agents.back());
    }
    const Profile profile(u, agents);
    const auto text = render_ballots(profile);
    const auto again = parse_ballots(text);
    REQUIRE_MESSAGE(again == profile, text);
    CHECK(render_ballots(again) == text);
  }
}

TEST_CASE("render merges identical consecutive agents") {
  const auto text = render_ballots(testing::load_ballots("table1.ballots"));
  CHECK(text ==
        "alternatives: A, B, C, D\n"
        "25: A > B > C > D\n"
        "20: B > A > C > D\n"
        "45: C > A > D > B\n"
        "10: D > B > C > A\n");
}

TEST_CASE("matrix files") {
  const auto phi = testing::load_matrix("table1-margins.matrix");
  CHECK(phi(0, 1) == 40);
  CHECK(phi(2, 3) == 80);
  CHECK(parse_matrix(render_matrix(phi)) == phi);
  CHECK(parse_matrix("alternatives: p, q\n0 1/2\n-1/2 0\n")(0, 1) == Rational(1, 2));
  CHECK_THROWS_AS(parse_matrix("alternatives: p, q\n0 1\n1 0\n"), ParseError);
  CHECK_THROWS_AS(parse_matrix("alternatives: p, q\n0 1\n"), ParseError);
  CHECK_THROWS_AS(parse_matrix("alternatives: p, q\nq: 0 1\np: -1 0\n"), ParseError);
}

TEST_CASE("proposal files and budget allocation") {
  const auto proposals = parse_proposals(read_text_file(testing::fixture("table1.proposals")));
  CHECK(proposals.items() == std::vector<std::string>{"Education", "Transportation", "Health", "Military"});
  CHECK(proposals.shares()[0][0] == Rational(2, 5));
  const auto& u = proposals.universe();
  const auto p = testing::lottery(u, {"1/6", "1/6", "2/3", "0"});
  const auto allocation = budget_allocation(proposals, p);
  CHECK(allocation == testing::q({"1/4", "4/15", "3/10", "11/60"}));
  CHECK(sum(allocation) == 1);

  // Columns matched by name, not position.
  const Universe reordered({"D", "C", "B", "A"});
  CHECK(budget_allocation(proposals, testing::lottery(reordered, {"0", "2/3", "1/6", "1/6"})) == allocation);
  CHECK_THROWS(budget_allocation(proposals, Lottery::pure(abc(4), 0)));

  CHECK_THROWS_AS(parse_proposals("alternatives: A, B\nX: 50% 50%\nY: 40% 50%\n"), ParseError);
  CHECK_THROWS_AS(parse_proposals("alternatives: A, B\nX: 1 1\nY: 0\n"), ParseError);
}

TEST_CASE("budget allocation of random lotteries sums to one") {
  const auto proposals = parse_proposals(read_text_file(testing::fixture("table1.proposals")));
  Rng rng(29);
  for (int trial = 0; trial < 1000; ++trial)
    CHECK(sum(budget_allocation(proposals, random_lottery(proposals.universe(), rng))) == 1);
}

TEST_CASE("rational strings are in lowest terms") {
  Rng rng(31);
  for (int trial = 0; trial < 1000; ++trial) {
    const auto phi = random_ssb(abc(3), rng);
    for (const auto& e : phi.entries()) {
      const auto text = to_string(e);
      CHECK(parse_rational(text) == e);
      CHECK(e.get_den() > 0);
      CHECK(gcd(e.get_num(), e.get_den()) == 1);
    }
  }
}

TEST_CASE("unreadable files") { CHECK_THROWS_AS(read_text_file("/nonexistent/file"), std::runtime_error); }
