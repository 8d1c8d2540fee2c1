#include "ssbchoice/ssb.hpp"

#include <algorithm>
#include <array>
#include <atomic>
#include <limits>
#include <thread>

namespace ssbchoice {

namespace {

void require_same(const Universe& lhs, const Universe& rhs) {
  if (!(lhs == rhs)) throw UniverseMismatch();
}

// Row vector p^T phi.
std::vector<Rational> left_product(const SSBMatrix& phi, const Lottery& p) {
  const auto m = phi.size();
  std::vector<Rational> row(m, Rational(0));
  for (std::size_t a = 0; a < m; ++a) {
    if (p[a] == 0) continue;
    for (std::size_t b = 0; b < m; ++b) row[b] += p[a] * phi(a, b);
  }
  return row;
}

}  // namespace

const char* to_string(Comparison c) {
  switch (c) {
    case Comparison::Preferred:
      return "PREFERRED";
    case Comparison::Indifferent:
      return "INDIFFERENT";
    case Comparison::Dispreferred:
      return "DISPREFERRED";
  }
  return "?";
}

Rational evaluate(const SSBMatrix& phi, const Lottery& p, const Lottery& q) {
  require_same(phi.universe(), p.universe());
  require_same(phi.universe(), q.universe());
  const auto m = phi.size();
  Rational total = 0;
  for (std::size_t a = 0; a < m; ++a) {
    if (p[a] == 0) continue;
    for (std::size_t b = 0; b < m; ++b) {
      if (q[b] == 0) continue;
      total += p[a] * q[b] * phi(a, b);
    }
  }
  return total;
}

Comparison compare(const SSBMatrix& phi, const Lottery& p, const Lottery& q) {
  const int s = sign(evaluate(phi, p, q));
  return s > 0 ? Comparison::Preferred : s < 0 ? Comparison::Dispreferred : Comparison::Indifferent;
}

SSBMatrix pc_extension(const BaseRelation& relation) {
  const auto m = relation.size();
  std::vector<Rational> entries(m * m, Rational(0));
  for (std::size_t a = 0; a < m; ++a)
    for (std::size_t b = 0; b < m; ++b) {
      if (relation.prefers(a, b)) entries[a * m + b] = 1;
      else if (relation.prefers(b, a)) entries[a * m + b] = -1;
    }
  return SSBMatrix(relation.universe(), std::move(entries));
}

SSBMatrix separable_matrix(const UtilityVector& u) {
  const auto m = u.size();
  std::vector<Rational> entries(m * m);
  for (std::size_t a = 0; a < m; ++a)
    for (std::size_t b = 0; b < m; ++b) entries[a * m + b] = u[a] - u[b];
  return SSBMatrix(u.universe(), std::move(entries));
}

SSBMatrix to_matrix(const Agent& agent) {
  struct Visitor {
    SSBMatrix operator()(const BaseRelation& r) const { return pc_extension(r); }
    SSBMatrix operator()(const SSBMatrix& phi) const { return phi; }
    SSBMatrix operator()(const UtilityVector& u) const { return separable_matrix(u); }
  };
  return std::visit(Visitor{}, agent);
}

SSBMatrix normalize(const SSBMatrix& phi) {
  if (phi.is_zero()) return phi;
  const Rational top = phi.max_entry();
  if (top == 1) return phi;
  return Rational(1 / top) * phi;
}

SSBMatrix restrict(const SSBMatrix& phi, const AltSet& alts) {
  if (alts.empty()) throw std::invalid_argument("cannot restrict to an empty set");
  for (auto a : alts)
    if (a >= phi.size()) throw std::out_of_range("alternative index out of range");
  const auto k = alts.size();
  std::vector<Rational> entries(k * k);
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = 0; j < k; ++j) entries[i * k + j] = phi(alts[i], alts[j]);
  return SSBMatrix(phi.universe().subset(alts), std::move(entries));
}

SSBMatrix permute(const SSBMatrix& phi, const std::vector<std::size_t>& perm) {
  const auto m = phi.size();
  if (perm.size() != m) throw std::invalid_argument("permutation has wrong length");
  std::vector<bool> seen(m, false);
  for (auto i : perm) {
    if (i >= m || seen[i]) throw std::invalid_argument("not a permutation of the alternatives");
    seen[i] = true;
  }
  std::vector<Rational> entries(m * m);
  for (std::size_t a = 0; a < m; ++a)
    for (std::size_t b = 0; b < m; ++b) entries[perm[a] * m + perm[b]] = phi(a, b);
  return SSBMatrix(phi.universe(), std::move(entries));
}

bool positively_proportional(const SSBMatrix& lhs, const SSBMatrix& rhs) {
  if (lhs.size() != rhs.size()) return false;
  std::optional<Rational> ratio;
  for (std::size_t k = 0; k < lhs.entries().size(); ++k) {
    const auto& x = lhs.entries()[k];
    const auto& y = rhs.entries()[k];
    if ((x == 0) != (y == 0)) return false;
    if (x == 0) continue;
    Rational r = x / y;
    if (r <= 0) return false;
    if (!ratio) ratio = r;
    else if (*ratio != r) return false;
  }
  return true;
}

bool is_pc(const SSBMatrix& phi) {
  return std::all_of(phi.entries().begin(), phi.entries().end(),
                     [](const Rational& e) { return e == 0 || e == 1 || e == -1; });
}

bool is_dichotomous(const BaseRelation& relation) {
  if (relation.empty()) return true;
  auto tiers = relation.as_weak_order();
  return tiers && tiers->size() == 2;
}

std::optional<UtilityVector> is_vnm_separable(const SSBMatrix& phi) {
  const auto m = phi.size();
  std::vector<Rational> u(m);
  for (std::size_t a = 0; a < m; ++a) u[a] = phi(a, 0);
  for (std::size_t a = 0; a < m; ++a)
    for (std::size_t b = 0; b < m; ++b)
      if (phi(a, b) != u[a] - u[b]) return std::nullopt;
  return UtilityVector(phi.universe(), std::move(u));
}

std::vector<Lottery> cycle_search_grid(const Universe& universe) {
  const auto m = universe.size();
  std::vector<Lottery> grid;
  for (std::size_t a = 0; a < m; ++a) grid.push_back(Lottery::pure(universe, a));
  std::vector<Rational> weights;
  for (unsigned long d = 2; d <= 5; ++d)
    for (unsigned long k = 1; k < d; ++k) {
      Rational w(k, d);
      w.canonicalize();
      if (std::find(weights.begin(), weights.end(), w) == weights.end()) weights.push_back(w);
    }
  std::sort(weights.begin(), weights.end());
  for (std::size_t a = 0; a < m; ++a)
    for (std::size_t b = a + 1; b < m; ++b)
      for (const auto& w : weights) {
        std::vector<Rational> probs(m, Rational(0));
        probs[a] = w;
        probs[b] = 1 - w;
        grid.emplace_back(universe, std::move(probs));
      }
  return grid;
}

std::optional<LotteryCycle> cycle_witness(const SSBMatrix& phi, unsigned jobs) {
  const auto grid = cycle_search_grid(phi.universe());
  const auto g = grid.size();
  const auto m = phi.size();

  // beats[i * g + j]: grid[i] strictly preferred to grid[j].
  std::vector<char> beats(g * g, 0);
  for (std::size_t i = 0; i < g; ++i) {
    const auto row = left_product(phi, grid[i]);
    for (std::size_t j = 0; j < g; ++j) {
      Rational v = 0;
      for (std::size_t b = 0; b < m; ++b)
        if (grid[j][b] != 0) v += row[b] * grid[j][b];
      beats[i * g + j] = v > 0 ? 1 : 0;
    }
  }

  constexpr auto none = std::numeric_limits<std::size_t>::max();
  std::atomic<std::size_t> best_first{none};
  std::vector<std::array<std::size_t, 3>> found(std::max(1u, jobs), {none, none, none});

  auto worker = [&](unsigned t, unsigned stride) {
    for (std::size_t i = t; i < g && i < best_first.load(); i += stride) {
      for (std::size_t j = 0; j < g; ++j) {
        if (!beats[i * g + j]) continue;
        for (std::size_t k = 0; k < g; ++k) {
          if (beats[j * g + k] && beats[k * g + i]) {
            found[t] = {i, j, k};
            auto cur = best_first.load();
            while (i < cur && !best_first.compare_exchange_weak(cur, i)) {
            }
            return;
          }
        }
      }
    }
  };

  const unsigned workers = std::max(1u, jobs);
  if (workers == 1) {
    worker(0, 1);
  } else {
    std::vector<std::jthread> pool;
    for (unsigned t = 0; t < workers; ++t) pool.emplace_back(worker, t, workers);
  }

  const auto first = best_first.load();
  if (first == none) return std::nullopt;
  for (const auto& f : found) {
    if (f[0] != first) continue;
    LotteryCycle cycle{grid[f[0]], grid[f[1]], grid[f[2]]};
    const auto& [p, q, r] = cycle;
    if (evaluate(phi, p, q) <= 0 || evaluate(phi, q, r) <= 0 || evaluate(phi, r, p) <= 0)
      throw std::logic_error("cycle witness failed exact verification");
    return cycle;
  }
  return std::nullopt;
}

}  // namespace ssbchoice
