#include "ssbchoice/core_model.hpp"

#include <algorithm>
#include <numeric>
#include <set>

namespace ssbchoice {

namespace {

void require_same(const Universe& lhs, const Universe& rhs) {
  if (!(lhs == rhs)) throw UniverseMismatch();
}

}  // namespace

// ---------------------------------------------------------------- Universe

Universe::Universe(std::vector<std::string> names) {
  if (names.empty()) throw std::invalid_argument("universe must contain at least one alternative");
  auto data = std::make_shared<Data>();
  for (std::size_t i = 0; i < names.size(); ++i) {
    if (names[i].empty()) throw std::invalid_argument("alternative names must be non-empty");
    if (!data->index.emplace(names[i], i).second)
      throw std::invalid_argument("duplicate alternative '" + names[i] + "'");
  }
  data->names = std::move(names);
  data_ = std::move(data);
}

std::optional<std::size_t> Universe::find(std::string_view name) const {
  auto it = data_->index.find(std::string(name));
  if (it == data_->index.end()) return std::nullopt;
  return it->second;
}

std::size_t Universe::index(std::string_view name) const {
  if (auto i = find(name)) return *i;
  throw std::out_of_range("unknown alternative '" + std::string(name) + "'");
}

Universe Universe::subset(const AltSet& alts) const {
  if (alts.empty()) throw std::invalid_argument("empty set of alternatives");
  std::vector<std::string> names;
  names.reserve(alts.size());
  for (auto a : alts) names.push_back(name(a));
  return Universe(std::move(names));
}

AltSet Universe::all() const {
  AltSet alts(size());
  std::iota(alts.begin(), alts.end(), std::size_t{0});
  return alts;
}

bool operator==(const Universe& lhs, const Universe& rhs) {
  return lhs.data_ == rhs.data_ || lhs.data_->names == rhs.data_->names;
}

AltSet make_alt_set(std::vector<std::size_t> alts, std::size_t m) {
  std::sort(alts.begin(), alts.end());
  alts.erase(std::unique(alts.begin(), alts.end()), alts.end());
  if (!alts.empty() && alts.back() >= m) throw std::out_of_range("alternative index out of range");
  return alts;
}

AltSet make_alt_set(const Universe& universe, const std::vector<std::string>& names) {
  std::vector<std::size_t> alts;
  alts.reserve(names.size());
  for (const auto& n : names) alts.push_back(universe.index(n));
  return make_alt_set(std::move(alts), universe.size());
}

std::vector<AltSet> nonempty_subsets(std::size_t m) {
  std::vector<AltSet> out;
  for (std::size_t mask = 1; mask < (std::size_t{1} << m); ++mask) {
    AltSet s;
    for (std::size_t a = 0; a < m; ++a)
      if (mask & (std::size_t{1} << a)) s.push_back(a);
    out.push_back(std::move(s));
  }
  std::stable_sort(out.begin(), out.end(), [](const AltSet& x, const AltSet& y) {
    return x.size() != y.size() ? x.size() < y.size() : x < y;
  });
  return out;
}

// ----------------------------------------------------------------- Lottery

Lottery::Lottery(Universe universe, std::vector<Rational> probs)
    : universe_(std::move(universe)), probs_(std::move(probs)) {
  if (probs_.size() != universe_.size())
    throw std::invalid_argument("lottery length does not match universe size");
  Rational total = 0;
  for (auto& p : probs_) {
    p.canonicalize();
    if (p < 0) throw std::invalid_argument("negative probability");
    total += p;
  }
  if (total != 1) throw std::invalid_argument("probabilities sum to " + to_string(total) + ", not 1");
}

Lottery Lottery::pure(Universe universe, std::size_t alt) {
  std::vector<Rational> probs(universe.size(), Rational(0));
  probs.at(alt) = 1;
  return Lottery(std::move(universe), std::move(probs));
}

Lottery Lottery::uniform(Universe universe, const AltSet& on) {
  if (on.empty()) throw std::invalid_argument("uniform lottery over empty set");
  std::vector<Rational> probs(universe.size(), Rational(0));
  for (auto a : on) probs.at(a) = Rational(1, static_cast<unsigned long>(on.size()));
  return Lottery(std::move(universe), std::move(probs));
}

AltSet Lottery::support() const {
  AltSet s;
  for (std::size_t a = 0; a < probs_.size(); ++a)
    if (probs_[a] > 0) s.push_back(a);
  return s;
}

bool operator==(const Lottery& lhs, const Lottery& rhs) {
  return lhs.universe_ == rhs.universe_ && lhs.probs_ == rhs.probs_;
}

Lottery mix(const Lottery& p, const Lottery& q, const Rational& lambda) {
  require_same(p.universe(), q.universe());
  if (lambda < 0 || lambda > 1) throw std::invalid_argument("mixing weight outside [0,1]");
  std::vector<Rational> probs(p.size());
  const Rational rest = 1 - lambda;
  for (std::size_t a = 0; a < p.size(); ++a) probs[a] = lambda * p[a] + rest * q[a];
  return Lottery(p.universe(), std::move(probs));
}

Lottery restrict_lottery(const Lottery& p, const AltSet& alts) {
  std::vector<Rational> probs;
  probs.reserve(alts.size());
  Rational kept = 0;
  for (auto a : alts) {
    probs.push_back(p[a]);
    kept += p[a];
  }
  if (kept != 1) throw std::invalid_argument("lottery support is not inside the restriction set");
  return Lottery(p.universe().subset(alts), std::move(probs));
}

Lottery embed_lottery(const Lottery& sub, const Universe& parent, const AltSet& alts) {
  if (sub.size() != alts.size()) throw UniverseMismatch();
  std::vector<Rational> probs(parent.size(), Rational(0));
  for (std::size_t i = 0; i < alts.size(); ++i) probs.at(alts[i]) = sub[i];
  return Lottery(parent, std::move(probs));
}

// ------------------------------------------------------------ BaseRelation

BaseRelation::BaseRelation(Universe universe,
                           const std::vector<std::pair<std::size_t, std::size_t>>& strict)
    : universe_(std::move(universe)), strict_(universe_.size() * universe_.size(), 0) {
  const auto m = size();
  for (auto [a, b] : strict) {
    if (a >= m || b >= m) throw std::out_of_range("relation pair out of range");
    if (a == b) throw std::invalid_argument("strict preference must be irreflexive");
    strict_[a * m + b] = 1;
  }
  for (std::size_t a = 0; a < m; ++a)
    for (std::size_t b = a + 1; b < m; ++b)
      if (prefers(a, b) && prefers(b, a))
        throw std::invalid_argument("strict preference must be asymmetric (" + universe_.name(a) +
                                    ", " + universe_.name(b) + ")");
}

BaseRelation BaseRelation::indifferent(Universe universe) {
  return BaseRelation(std::move(universe), {});
}

bool BaseRelation::empty() const {
  return std::none_of(strict_.begin(), strict_.end(), [](char c) { return c != 0; });
}

std::vector<std::pair<std::size_t, std::size_t>> BaseRelation::pairs() const {
  std::vector<std::pair<std::size_t, std::size_t>> out;
  for (std::size_t a = 0; a < size(); ++a)
    for (std::size_t b = 0; b < size(); ++b)
      if (prefers(a, b)) out.emplace_back(a, b);
  return out;
}

std::optional<std::vector<AltSet>> BaseRelation::as_weak_order() const {
  const auto m = size();
  // In a weak order, a is strictly above b iff a beats more alternatives.
  std::vector<std::size_t> beaten(m, 0);
  for (std::size_t a = 0; a < m; ++a)
    for (std::size_t b = 0; b < m; ++b) beaten[a] += prefers(a, b) ? 1 : 0;
  std::set<std::size_t, std::greater<>> levels(beaten.begin(), beaten.end());
  std::vector<AltSet> tiers;
  for (auto level : levels) {
    AltSet tier;
    for (std::size_t a = 0; a < m; ++a)
      if (beaten[a] == level) tier.push_back(a);
    tiers.push_back(std::move(tier));
  }
  if (weak_order(universe_, tiers) == *this) return tiers;
  return std::nullopt;
}

bool operator==(const BaseRelation& lhs, const BaseRelation& rhs) {
  return lhs.universe_ == rhs.universe_ && lhs.strict_ == rhs.strict_;
}

BaseRelation weak_order(const Universe& universe, const std::vector<AltSet>& tiers) {
  const auto m = universe.size();
  std::vector<std::size_t> rank(m, tiers.size());
  for (std::size_t t = 0; t < tiers.size(); ++t) {
    for (auto a : tiers[t]) {
      if (a >= m) throw std::out_of_range("alternative index out of range");
      if (rank[a] != tiers.size())
        throw std::invalid_argument("alternative '" + universe.name(a) + "' listed twice");
      rank[a] = t;
    }
  }
  std::vector<std::pair<std::size_t, std::size_t>> strict;
  for (std::size_t a = 0; a < m; ++a)
    for (std::size_t b = 0; b < m; ++b)
      if (rank[a] < rank[b]) strict.emplace_back(a, b);
  return BaseRelation(universe, strict);
}

BaseRelation weak_order_by_name(const Universe& universe,
                                const std::vector<std::vector<std::string>>& tiers) {
  std::vector<AltSet> indexed;
  for (const auto& tier : tiers) {
    AltSet t;
    for (const auto& n : tier) t.push_back(universe.index(n));
    indexed.push_back(std::move(t));
  }
  return weak_order(universe, indexed);
}

// ----------------------------------------------------------- UtilityVector

UtilityVector::UtilityVector(Universe universe, std::vector<Rational> values)
    : universe_(std::move(universe)), values_(std::move(values)) {
  if (values_.size() != universe_.size())
    throw std::invalid_argument("utility vector length does not match universe size");
  for (auto& v : values_) v.canonicalize();
}

Rational UtilityVector::expected(const Lottery& p) const {
  require_same(universe_, p.universe());
  Rational total = 0;
  for (std::size_t a = 0; a < size(); ++a) total += values_[a] * p[a];
  return total;
}

bool UtilityVector::is_dichotomous() const {
  std::vector<Rational> distinct;
  for (const auto& v : values_) {
    if (std::find(distinct.begin(), distinct.end(), v) == distinct.end()) distinct.push_back(v);
    if (distinct.size() > 2) return false;
  }
  return true;
}

bool operator==(const UtilityVector& lhs, const UtilityVector& rhs) {
  return lhs.universe_ == rhs.universe_ && lhs.values_ == rhs.values_;
}

// --------------------------------------------------------------- SSBMatrix

SSBMatrix::SSBMatrix(Universe universe, std::vector<Rational> entries)
    : universe_(std::move(universe)), entries_(std::move(entries)) {
  const auto m = size();
  if (entries_.size() != m * m) throw std::invalid_argument("matrix shape does not match universe");
  for (auto& e : entries_) e.canonicalize();
  for (std::size_t a = 0; a < m; ++a)
    for (std::size_t b = a; b < m; ++b)
      if ((*this)(a, b) != -(*this)(b, a))
        throw std::invalid_argument("matrix is not skew-symmetric at (" + universe_.name(a) + ", " +
                                    universe_.name(b) + ")");
}

SSBMatrix SSBMatrix::zero(Universe universe) {
  const auto m = universe.size();
  return SSBMatrix(std::move(universe), std::vector<Rational>(m * m, Rational(0)));
}

SSBMatrix SSBMatrix::from_upper(Universe universe, const std::vector<Rational>& upper) {
  const auto m = universe.size();
  if (upper.size() != m * (m - 1) / 2) throw std::invalid_argument("upper triangle has wrong length");
  std::vector<Rational> entries(m * m, Rational(0));
  std::size_t k = 0;
  for (std::size_t a = 0; a < m; ++a)
    for (std::size_t b = a + 1; b < m; ++b, ++k) {
      entries[a * m + b] = upper[k];
      entries[b * m + a] = -upper[k];
    }
  return SSBMatrix(std::move(universe), std::move(entries));
}

bool SSBMatrix::is_zero() const {
  return std::all_of(entries_.begin(), entries_.end(), [](const Rational& e) { return e == 0; });
}

Rational SSBMatrix::max_entry() const {
  Rational best = 0;
  for (const auto& e : entries_)
    if (e > best) best = e;
  return best;
}

bool SSBMatrix::is_normalized() const { return is_zero() || max_entry() == 1; }

bool operator==(const SSBMatrix& lhs, const SSBMatrix& rhs) {
  return lhs.universe_ == rhs.universe_ && lhs.entries_ == rhs.entries_;
}

SSBMatrix operator+(const SSBMatrix& lhs, const SSBMatrix& rhs) {
  require_same(lhs.universe(), rhs.universe());
  std::vector<Rational> entries(lhs.entries());
  for (std::size_t k = 0; k < entries.size(); ++k) entries[k] += rhs.entries()[k];
  return SSBMatrix(lhs.universe(), std::move(entries));
}

SSBMatrix operator*(const Rational& scale, const SSBMatrix& phi) {
  std::vector<Rational> entries(phi.entries());
  for (auto& e : entries) e *= scale;
  return SSBMatrix(phi.universe(), std::move(entries));
}

SSBMatrix operator-(const SSBMatrix& phi) { return Rational(-1) * phi; }

// ----------------------------------------------------------------- Profile

const Universe& universe_of(const Agent& agent) {
  return std::visit([](const auto& a) -> const Universe& { return a.universe(); }, agent);
}

Profile::Profile(Universe universe, std::vector<Agent> agents)
    : universe_(std::move(universe)), agents_(std::move(agents)) {
  if (agents_.empty()) throw std::invalid_argument("profile needs at least one agent");
  for (const auto& agent : agents_) require_same(universe_, universe_of(agent));
}

Profile Profile::permuted(const std::vector<std::size_t>& perm) const {
  if (perm.size() != agents_.size()) throw std::invalid_argument("permutation has wrong length");
  std::vector<bool> seen(perm.size(), false);
  for (auto i : perm) {
    if (i >= perm.size() || seen[i]) throw std::invalid_argument("not a permutation of the agents");
    seen[i] = true;
  }
  std::vector<Agent> agents;
  agents.reserve(perm.size());
  for (auto i : perm) agents.push_back(agents_.at(i));
  return Profile(universe_, std::move(agents));
}

bool operator==(const Profile& lhs, const Profile& rhs) {
  return lhs.universe_ == rhs.universe_ && lhs.agents_ == rhs.agents_;
}

// -------------------------------------------------------- FeasiblePolytope

FeasiblePolytope::FeasiblePolytope(Universe universe, std::vector<Lottery> vertices)
    : universe_(std::move(universe)), vertices_(std::move(vertices)) {
  if (vertices_.empty()) throw std::invalid_argument("feasible set needs at least one vertex");
  for (const auto& v : vertices_) require_same(universe_, v.universe());
}

FeasiblePolytope FeasiblePolytope::simplex_face(const Universe& universe, const AltSet& alts) {
  std::vector<Lottery> vertices;
  for (auto a : alts) vertices.push_back(Lottery::pure(universe, a));
  return FeasiblePolytope(universe, std::move(vertices));
}

FeasiblePolytope FeasiblePolytope::canonical() const {
  std::vector<Lottery> unique;
  for (const auto& v : vertices_)
    if (std::find(unique.begin(), unique.end(), v) == unique.end()) unique.push_back(v);
  return FeasiblePolytope(universe_, std::move(unique));
}

// --------------------------------------------------------------- rendering

std::string to_string(const Lottery& p) {
  std::string out = "(";
  for (std::size_t a = 0; a < p.size(); ++a) out += (a ? ", " : "") + to_string(p[a]);
  return out + ")";
}

std::string to_string(const SSBMatrix& phi) {
  std::string out = "[";
  for (std::size_t a = 0; a < phi.size(); ++a) {
    out += a ? ", [" : "[";
    for (std::size_t b = 0; b < phi.size(); ++b) out += (b ? ", " : "") + to_string(phi(a, b));
    out += "]";
  }
  return out + "]";
}

std::string to_string(const AltSet& alts, const Universe& universe) {
  std::string out = "{";
  for (std::size_t i = 0; i < alts.size(); ++i) out += (i ? ", " : "") + universe.name(alts[i]);
  return out + "}";
}

}  // namespace ssbchoice
