#include "ssbchoice/random.hpp"

#include <algorithm>
#include <numeric>

#include "ssbchoice/ssb.hpp"

namespace ssbchoice {

Lottery random_lottery(const Universe& universe, Rng& rng, unsigned max_weight) {
  const auto m = universe.size();
  std::uniform_int_distribution<unsigned> weight(0, max_weight);
  std::vector<unsigned long> raw(m);
  unsigned long total = 0;
  while (total == 0) {
    // Bias toward small supports so pure and two-point lotteries show up.
    std::uniform_int_distribution<std::size_t> support_size(1, m);
    const auto s = support_size(rng);
    std::vector<std::size_t> order(m);
    std::iota(order.begin(), order.end(), std::size_t{0});
    std::shuffle(order.begin(), order.end(), rng);
    std::fill(raw.begin(), raw.end(), 0UL);
    for (std::size_t i = 0; i < s; ++i) raw[order[i]] = weight(rng);
    total = std::accumulate(raw.begin(), raw.end(), 0UL);
  }
  std::vector<Rational> probs(m);
  for (std::size_t a = 0; a < m; ++a) {
    probs[a] = Rational(raw[a], total);
    probs[a].canonicalize();
  }
  return Lottery(universe, std::move(probs));
}

BaseRelation random_base_relation(const Universe& universe, Rng& rng) {
  std::uniform_int_distribution<int> choice(0, 2);
  std::vector<std::pair<std::size_t, std::size_t>> strict;
  for (std::size_t a = 0; a < universe.size(); ++a)
    for (std::size_t b = a + 1; b < universe.size(); ++b) {
      const int c = choice(rng);
      if (c == 1) strict.emplace_back(a, b);
      else if (c == 2) strict.emplace_back(b, a);
    }
  return BaseRelation(universe, strict);
}

BaseRelation random_weak_order(const Universe& universe, Rng& rng) {
  const auto m = universe.size();
  std::uniform_int_distribution<std::size_t> tier(0, m - 1);
  std::vector<AltSet> tiers(m);
  for (std::size_t a = 0; a < m; ++a) tiers[tier(rng)].push_back(a);
  std::erase_if(tiers, [](const AltSet& t) { return t.empty(); });
  return weak_order(universe, tiers);
}

SSBMatrix random_ssb(const Universe& universe, Rng& rng, int range) {
  const auto m = universe.size();
  std::uniform_int_distribution<int> num(-range, range);
  std::uniform_int_distribution<int> den(1, 3);
  std::vector<Rational> upper;
  for (std::size_t k = 0; k < m * (m - 1) / 2; ++k) {
    Rational v(num(rng), den(rng));
    v.canonicalize();
    upper.push_back(v);
  }
  return SSBMatrix::from_upper(universe, upper);
}

UtilityVector random_utility(const Universe& universe, Rng& rng, int range) {
  std::uniform_int_distribution<int> value(0, range);
  std::vector<Rational> values;
  for (std::size_t a = 0; a < universe.size(); ++a) values.emplace_back(value(rng));
  return UtilityVector(universe, std::move(values));
}

Profile random_pc_profile(const Universe& universe, std::size_t agents, Rng& rng, bool transitive) {
  std::vector<Agent> list;
  for (std::size_t i = 0; i < agents; ++i)
    list.emplace_back(transitive ? random_weak_order(universe, rng) : random_base_relation(universe, rng));
  return Profile(universe, std::move(list));
}

std::vector<BaseRelation> all_weak_orders(const Universe& universe) {
  const auto m = universe.size();
  std::vector<BaseRelation> out;
  std::vector<std::size_t> rank(m, 0);
  for (;;) {
    std::vector<AltSet> tiers(m);
    for (std::size_t a = 0; a < m; ++a) tiers[rank[a]].push_back(a);
    std::erase_if(tiers, [](const AltSet& t) { return t.empty(); });
    auto relation = weak_order(universe, tiers);
    if (std::find(out.begin(), out.end(), relation) == out.end()) out.push_back(std::move(relation));
    std::size_t pos = 0;
    while (pos < m && ++rank[pos] == m) rank[pos++] = 0;
    if (pos == m) break;
  }
  return out;
}

std::vector<BaseRelation> all_dichotomous(const Universe& universe) {
  const auto m = universe.size();
  std::vector<BaseRelation> out;
  out.push_back(BaseRelation::indifferent(universe));
  for (std::size_t mask = 1; mask + 1 < (std::size_t{1} << m); ++mask) {
    AltSet top;
    for (std::size_t a = 0; a < m; ++a)
      if ((mask >> a) & 1) top.push_back(a);
    out.push_back(weak_order(universe, std::vector<AltSet>{top}));
  }
  return out;
}

std::vector<SSBMatrix> all_pc_matrices(const Universe& universe) {
  const auto m = universe.size();
  const std::size_t pairs = m * (m - 1) / 2;
  std::vector<SSBMatrix> out;
  std::vector<int> digits(pairs, -1);
  for (;;) {
    std::vector<Rational> upper(digits.begin(), digits.end());
    out.push_back(SSBMatrix::from_upper(universe, upper));
    std::size_t pos = 0;
    while (pos < pairs && ++digits[pos] == 2) digits[pos++] = -1;
    if (pos == pairs) break;
  }
  return out;
}

std::vector<Profile> all_profiles(const Universe& universe, const std::vector<BaseRelation>& relations,
                                  std::size_t agents) {
  std::vector<Profile> out;
  if (relations.empty() || agents == 0) return out;
  std::vector<std::size_t> idx(agents, 0);
  for (;;) {
    std::vector<Agent> list;
    for (auto i : idx) list.emplace_back(relations[i]);
    out.emplace_back(universe, std::move(list));
    std::size_t pos = agents;
    while (pos > 0 && ++idx[pos - 1] == relations.size()) idx[--pos] = 0;
    if (pos == 0) break;
  }
  return out;
}

std::vector<std::vector<std::size_t>> all_permutations(std::size_t n) {
  std::vector<std::size_t> perm(n);
  std::iota(perm.begin(), perm.end(), std::size_t{0});
  std::vector<std::vector<std::size_t>> out;
  do {
    out.push_back(perm);
  } while (std::next_permutation(perm.begin(), perm.end()));
  return out;
}

}  // namespace ssbchoice
