#pragma once

// Dense two-phase primal simplex over exact rationals with Bland's rule.

#include <stdexcept>
#include <vector>

#include "ssbchoice/rational.hpp"

namespace ssbchoice::lp {

/// maximize c^T x  subject to  A x = b,  x >= 0.
struct StandardForm {
  std::vector<std::vector<Rational>> a;
  std::vector<Rational> b;
  std::vector<Rational> c;
};

enum class Status { Optimal, Infeasible, Unbounded };

struct Solution {
  Status status = Status::Infeasible;
  std::vector<Rational> x;
  Rational objective = 0;
  std::vector<std::size_t> basis;
  std::size_t pivots = 0;
};

/// Bland's rule (lowest-index entering column, lowest-index leaving basic
/// variable on ratio ties) guarantees termination on degenerate problems.
Solution solve(const StandardForm& problem);

}  // namespace ssbchoice::lp
