#pragma once

// Maximal lotteries: optimal strategies of the symmetric zero-sum game whose
// payoff matrix is an SSB matrix, computed and certified exactly.

#include <stdexcept>
#include <vector>

#include "ssbchoice/core_model.hpp"
#include "ssbchoice/ssb.hpp"

namespace ssbchoice {

/// A lottery together with phi(lottery, b) for every b it is checked against.
/// Every slack is >= 0 for a maximal lottery.
struct MaximalityCertificate {
  Lottery lottery;
  AltSet against;
  std::vector<Rational> slack;
};

/// Optimal mixed strategy for a skew-symmetric k*k payoff matrix (row-major)
/// solved with the exact simplex. The game value of a symmetric game is zero;
/// any other value is reported as std::logic_error.
std::vector<Rational> solve_symmetric_game(const std::vector<Rational>& payoff, std::size_t k);

/// A lottery on Delta_X that no lottery on Delta_X beats. Among several maximal
/// lotteries the first optimal basic solution of the simplex is returned.
MaximalityCertificate maximal_lottery(const SSBMatrix& phi, const AltSet& alts);

/// phi(p, b) for each b in `alts`. Throws std::invalid_argument if the support
/// of p leaves `alts`.
std::vector<Rational> maximality_slacks(const SSBMatrix& phi, const Lottery& p, const AltSet& alts);

bool is_maximal(const SSBMatrix& phi, const Lottery& p, const AltSet& alts);

class EnumerationBoundExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Extreme points of the set of maximal lotteries on Delta_X, sorted.
struct MaximalSet {
  std::vector<Lottery> vertices;
  bool unique = false;
};

/// Enumerates supports S of X and tight columns T outside S, solving
/// sum_S p = 1, (p^T phi)_b = 0 for b in S and T. Cost grows as 3^|X|, hence
/// the bound.
MaximalSet maximal_set(const SSBMatrix& phi, const AltSet& alts, std::size_t bound = 8);

/// A most-preferred lottery in the convex hull of F's vertices.
Lottery choose(const SSBMatrix& phi, const FeasiblePolytope& feasible);

/// phi(p, v) for every vertex v of F; all >= 0 iff p is maximal in F.
std::vector<Rational> polytope_slacks(const SSBMatrix& phi, const Lottery& p,
                                      const FeasiblePolytope& feasible);

}  // namespace ssbchoice
