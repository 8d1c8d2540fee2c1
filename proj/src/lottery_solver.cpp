#include "ssbchoice/lottery_solver.hpp"

#include <algorithm>
#include <optional>

#include "ssbchoice/simplex.hpp"

namespace ssbchoice {

namespace {

// Unique solution of rows * x = rhs, or nullopt when the system is
// inconsistent or underdetermined.
std::optional<std::vector<Rational>> solve_unique(std::vector<std::vector<Rational>> rows,
                                                  std::vector<Rational> rhs, std::size_t unknowns) {
  std::size_t rank = 0;
  for (std::size_t col = 0; col < unknowns; ++col) {
    std::optional<std::size_t> pivot;
    for (std::size_t r = rank; r < rows.size(); ++r)
      if (rows[r][col] != 0) {
        pivot = r;
        break;
      }
    if (!pivot) return std::nullopt;
    std::swap(rows[rank], rows[*pivot]);
    std::swap(rhs[rank], rhs[*pivot]);
    const Rational inv = 1 / rows[rank][col];
    for (auto& e : rows[rank]) e *= inv;
    rhs[rank] *= inv;
    for (std::size_t r = 0; r < rows.size(); ++r) {
      if (r == rank || rows[r][col] == 0) continue;
      const Rational factor = rows[r][col];
      for (std::size_t j = col; j < unknowns; ++j) rows[r][j] -= factor * rows[rank][j];
      rhs[r] -= factor * rhs[rank];
    }
    ++rank;
  }
  for (std::size_t r = rank; r < rows.size(); ++r)
    if (rhs[r] != 0) return std::nullopt;
  rhs.resize(unknowns);
  return rhs;
}

AltSet checked_alts(const SSBMatrix& phi, const AltSet& alts) {
  if (alts.empty()) throw std::invalid_argument("feasible alternative set is empty");
  return make_alt_set(alts, phi.size());
}

}  // namespace

std::vector<Rational> solve_symmetric_game(const std::vector<Rational>& payoff, std::size_t k) {
  if (k == 0 || payoff.size() != k * k) throw std::invalid_argument("payoff matrix has wrong shape");
  // Columns: p_0..p_{k-1}, v+, v-, s_0..s_{k-1}.
  const std::size_t width = 2 * k + 2;
  lp::StandardForm problem;
  for (std::size_t b = 0; b < k; ++b) {
    std::vector<Rational> row(width, Rational(0));
    for (std::size_t a = 0; a < k; ++a) row[a] = payoff[a * k + b];
    row[k] = -1;
    row[k + 1] = 1;
    row[k + 2 + b] = -1;
    problem.a.push_back(std::move(row));
    problem.b.emplace_back(0);
  }
  std::vector<Rational> simplex_row(width, Rational(0));
  for (std::size_t a = 0; a < k; ++a) simplex_row[a] = 1;
  problem.a.push_back(std::move(simplex_row));
  problem.b.emplace_back(1);
  problem.c.assign(width, Rational(0));
  problem.c[k] = 1;
  problem.c[k + 1] = -1;

  const auto solution = lp::solve(problem);
  if (solution.status != lp::Status::Optimal)
    throw std::logic_error("zero-sum game LP did not reach an optimum");
  if (solution.objective != 0)
    throw std::logic_error("symmetric game value is " + to_string(solution.objective) + ", expected 0");
  return {solution.x.begin(), solution.x.begin() + static_cast<std::ptrdiff_t>(k)};
}

std::vector<Rational> maximality_slacks(const SSBMatrix& phi, const Lottery& p, const AltSet& alts) {
  if (!(phi.universe() == p.universe())) throw UniverseMismatch();
  const auto set = checked_alts(phi, alts);
  for (auto a : p.support())
    if (!std::binary_search(set.begin(), set.end(), a))
      throw std::invalid_argument("lottery puts weight on '" + phi.universe().name(a) +
                                  "' outside the feasible set");
  std::vector<Rational> slack;
  slack.reserve(set.size());
  for (auto b : set) {
    Rational v = 0;
    for (std::size_t a = 0; a < p.size(); ++a)
      if (p[a] != 0) v += p[a] * phi(a, b);
    slack.push_back(std::move(v));
  }
  return slack;
}

bool is_maximal(const SSBMatrix& phi, const Lottery& p, const AltSet& alts) {
  const auto slack = maximality_slacks(phi, p, alts);
  return std::all_of(slack.begin(), slack.end(), [](const Rational& s) { return s >= 0; });
}

MaximalityCertificate maximal_lottery(const SSBMatrix& phi, const AltSet& alts) {
  const auto set = checked_alts(phi, alts);
  const auto sub = restrict(phi, set);
  const auto weights = solve_symmetric_game(sub.entries(), set.size());
  std::vector<Rational> probs(phi.size(), Rational(0));
  for (std::size_t i = 0; i < set.size(); ++i) probs[set[i]] = weights[i];
  Lottery lottery(phi.universe(), std::move(probs));
  auto slack = maximality_slacks(phi, lottery, set);
  for (const auto& s : slack)
    if (s < 0) throw std::logic_error("solver returned a lottery that is not maximal");
  return {std::move(lottery), set, std::move(slack)};
}

MaximalSet maximal_set(const SSBMatrix& phi, const AltSet& alts, std::size_t bound) {
  const auto set = checked_alts(phi, alts);
  const std::size_t k = set.size();
  if (k > bound)
    throw EnumerationBoundExceeded("maximal-set enumeration limited to " + std::to_string(bound) +
                                   " alternatives, got " + std::to_string(k));
  const auto sub = restrict(phi, set);

  std::vector<std::vector<Rational>> found;
  auto try_system = [&](const std::vector<std::size_t>& support,
                        const std::vector<std::size_t>& tight) -> bool {
    const std::size_t s = support.size();
    std::vector<std::vector<Rational>> rows;
    std::vector<Rational> rhs;
    rows.emplace_back(s, Rational(1));
    rhs.emplace_back(1);
    for (auto b : tight) {
      std::vector<Rational> row(s);
      for (std::size_t i = 0; i < s; ++i) row[i] = sub(support[i], b);
      rows.push_back(std::move(row));
      rhs.emplace_back(0);
    }
    auto x = solve_unique(std::move(rows), std::move(rhs), s);
    if (!x) return false;
    std::vector<Rational> probs(k, Rational(0));
    for (std::size_t i = 0; i < s; ++i) {
      if ((*x)[i] <= 0) return true;
      probs[support[i]] = (*x)[i];
    }
    for (std::size_t b = 0; b < k; ++b) {
      Rational v = 0;
      for (auto a : support) v += probs[a] * sub(a, b);
      if (v < 0) return true;
    }
    if (std::find(found.begin(), found.end(), probs) == found.end()) found.push_back(std::move(probs));
    return true;
  };

  for (std::size_t mask = 1; mask < (std::size_t{1} << k); ++mask) {
    std::vector<std::size_t> support, outside;
    for (std::size_t i = 0; i < k; ++i) ((mask >> i) & 1 ? support : outside).push_back(i);
    // Columns in the support of a maximal lottery are always tight.
    if (try_system(support, support)) continue;
    for (std::size_t extra = 1; extra < (std::size_t{1} << outside.size()); ++extra) {
      auto tight = support;
      for (std::size_t j = 0; j < outside.size(); ++j)
        if ((extra >> j) & 1) tight.push_back(outside[j]);
      try_system(support, tight);
    }
  }

  std::sort(found.begin(), found.end(), [](const auto& x, const auto& y) {
    return std::lexicographical_compare(x.begin(), x.end(), y.begin(), y.end(), std::greater<>());
  });
  MaximalSet result;
  for (const auto& probs : found) {
    std::vector<Rational> full(phi.size(), Rational(0));
    for (std::size_t i = 0; i < k; ++i) full[set[i]] = probs[i];
    result.vertices.emplace_back(phi.universe(), std::move(full));
  }
  if (result.vertices.empty()) throw std::logic_error("no maximal lottery found by enumeration");
  result.unique = result.vertices.size() == 1;
  return result;
}

std::vector<Rational> polytope_slacks(const SSBMatrix& phi, const Lottery& p,
                                      const FeasiblePolytope& feasible) {
  std::vector<Rational> slack;
  for (const auto& v : feasible.vertices()) slack.push_back(evaluate(phi, p, v));
  return slack;
}

Lottery choose(const SSBMatrix& phi, const FeasiblePolytope& feasible) {
  if (!(phi.universe() == feasible.universe())) throw UniverseMismatch();
  const auto canon = feasible.canonical();
  const auto& vertices = canon.vertices();
  const std::size_t k = vertices.size();
  std::vector<Rational> game(k * k);
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = 0; j < k; ++j) game[i * k + j] = evaluate(phi, vertices[i], vertices[j]);
  const auto weights = solve_symmetric_game(game, k);

  std::vector<Rational> probs(phi.size(), Rational(0));
  for (std::size_t i = 0; i < k; ++i) {
    if (weights[i] == 0) continue;
    for (std::size_t a = 0; a < phi.size(); ++a) probs[a] += weights[i] * vertices[i][a];
  }
  Lottery chosen(phi.universe(), std::move(probs));
  for (const auto& s : polytope_slacks(phi, chosen, canon))
    if (s < 0) throw std::logic_error("chosen lottery is beaten by a feasible vertex");
  return chosen;
}

}  // namespace ssbchoice
