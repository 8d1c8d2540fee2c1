#pragma once

// Exact-rational domain types: alternatives, lotteries, relations over pure
// outcomes, preference profiles and convex feasible sets.
//
// All types are immutable after construction. A Universe is shared by
// reference count so copies of large collections of matrices stay cheap.

#include <cstddef>
#include <memory>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <unordered_map>
#include <utility>
#include <variant>
#include <vector>

#include "ssbchoice/rational.hpp"

namespace ssbchoice {

/// Raised when two values built over different universes are combined.
class UniverseMismatch : public std::invalid_argument {
 public:
  UniverseMismatch() : std::invalid_argument("universe mismatch") {}
};

/// Sorted, duplicate-free list of alternative indices.
using AltSet = std::vector<std::size_t>;

/// Ordered finite set of named alternatives.
class Universe {
 public:
  explicit Universe(std::vector<std::string> names);

  std::size_t size() const { return data_->names.size(); }
  const std::string& name(std::size_t index) const { return data_->names.at(index); }
  const std::vector<std::string>& names() const { return data_->names; }

  std::optional<std::size_t> find(std::string_view name) const;
  /// Throws std::out_of_range for undeclared names.
  std::size_t index(std::string_view name) const;

  /// The sub-universe over `alts`, keeping the parent order.
  Universe subset(const AltSet& alts) const;

  AltSet all() const;

  friend bool operator==(const Universe& lhs, const Universe& rhs);

 private:
  struct Data {
    std::vector<std::string> names;
    std::unordered_map<std::string, std::size_t> index;
  };
  std::shared_ptr<const Data> data_;
};

/// Sorts and deduplicates; throws std::out_of_range if an index is >= m.
AltSet make_alt_set(std::vector<std::size_t> alts, std::size_t m);
AltSet make_alt_set(const Universe& universe, const std::vector<std::string>& names);

/// Every nonempty subset of {0..m-1}, ordered by size then lexicographically.
std::vector<AltSet> nonempty_subsets(std::size_t m);

/// Probability vector over a universe. Entries are nonnegative and sum to
/// exactly one.
class Lottery {
 public:
  Lottery(Universe universe, std::vector<Rational> probs);

  static Lottery pure(Universe universe, std::size_t alt);
  static Lottery uniform(Universe universe, const AltSet& on);

  const Universe& universe() const { return universe_; }
  std::size_t size() const { return probs_.size(); }
  const Rational& operator[](std::size_t alt) const { return probs_[alt]; }
  const std::vector<Rational>& probs() const { return probs_; }

  AltSet support() const;

  friend bool operator==(const Lottery& lhs, const Lottery& rhs);

 private:
  Universe universe_;
  std::vector<Rational> probs_;
};

/// lambda * p + (1 - lambda) * q.
Lottery mix(const Lottery& p, const Lottery& q, const Rational& lambda);

/// Re-expresses `p` over universe.subset(alts). Throws if support(p) is not
/// inside `alts`.
Lottery restrict_lottery(const Lottery& p, const AltSet& alts);

/// Inverse of restrict_lottery: lifts a lottery over a sub-universe back to
/// `parent`, where `alts` names the parent indices of the sub-universe.
Lottery embed_lottery(const Lottery& sub, const Universe& parent, const AltSet& alts);

/// Strict preference over pure outcomes. Indifference is the complement of
/// the strict part in both directions; transitivity is not required.
class BaseRelation {
 public:
  BaseRelation(Universe universe, const std::vector<std::pair<std::size_t, std::size_t>>& strict);

  static BaseRelation indifferent(Universe universe);

  const Universe& universe() const { return universe_; }
  std::size_t size() const { return universe_.size(); }

  bool prefers(std::size_t a, std::size_t b) const { return strict_[a * size() + b] != 0; }
  bool indifferent(std::size_t a, std::size_t b) const {
    return !prefers(a, b) && !prefers(b, a);
  }
  bool empty() const;

  std::vector<std::pair<std::size_t, std::size_t>> pairs() const;

  /// Tiers from best to worst if the relation is a weak order.
  std::optional<std::vector<AltSet>> as_weak_order() const;

  friend bool operator==(const BaseRelation& lhs, const BaseRelation& rhs);

 private:
  Universe universe_;
  std::vector<char> strict_;
};

/// Builds the weak order with the given tiers (best first). Alternatives not
/// listed form one shared bottom tier. Throws std::invalid_argument if an
/// alternative appears twice.
BaseRelation weak_order(const Universe& universe, const std::vector<AltSet>& tiers);
BaseRelation weak_order_by_name(const Universe& universe,
                                const std::vector<std::vector<std::string>>& tiers);

/// vNM utility over pure outcomes.
class UtilityVector {
 public:
  UtilityVector(Universe universe, std::vector<Rational> values);

  const Universe& universe() const { return universe_; }
  std::size_t size() const { return values_.size(); }
  const Rational& operator[](std::size_t alt) const { return values_[alt]; }
  const std::vector<Rational>& values() const { return values_; }

  /// Expected utility of `p`.
  Rational expected(const Lottery& p) const;
  bool is_dichotomous() const;

  friend bool operator==(const UtilityVector& lhs, const UtilityVector& rhs);

 private:
  Universe universe_;
  std::vector<Rational> values_;
};

/// Skew-symmetric matrix of an SSB utility function restricted to pure
/// outcomes, indexed in universe order.
class SSBMatrix {
 public:
  /// `entries` is row-major m*m; throws std::invalid_argument unless
  /// entries[a][b] == -entries[b][a] for all a, b.
  SSBMatrix(Universe universe, std::vector<Rational> entries);

  static SSBMatrix zero(Universe universe);
  /// Builds from the strict upper triangle, row by row.
  static SSBMatrix from_upper(Universe universe, const std::vector<Rational>& upper);

  const Universe& universe() const { return universe_; }
  std::size_t size() const { return universe_.size(); }
  const Rational& operator()(std::size_t a, std::size_t b) const {
    return entries_[a * size() + b];
  }
  const std::vector<Rational>& entries() const { return entries_; }

  bool is_zero() const;
  /// Largest entry equals one, or the matrix is zero.
  bool is_normalized() const;
  Rational max_entry() const;

  friend bool operator==(const SSBMatrix& lhs, const SSBMatrix& rhs);

 private:
  Universe universe_;
  std::vector<Rational> entries_;
};

SSBMatrix operator+(const SSBMatrix& lhs, const SSBMatrix& rhs);
SSBMatrix operator*(const Rational& scale, const SSBMatrix& phi);
SSBMatrix operator-(const SSBMatrix& phi);

/// One agent's preferences: PC agent, general SSB agent, or vNM agent.
using Agent = std::variant<BaseRelation, SSBMatrix, UtilityVector>;

const Universe& universe_of(const Agent& agent);

class Profile {
 public:
  Profile(Universe universe, std::vector<Agent> agents);

  const Universe& universe() const { return universe_; }
  std::size_t size() const { return agents_.size(); }
  const Agent& operator[](std::size_t i) const { return agents_[i]; }
  const std::vector<Agent>& agents() const { return agents_; }

  /// Agent i of the result is agent perm[i] of this profile.
  Profile permuted(const std::vector<std::size_t>& perm) const;

  friend bool operator==(const Profile& lhs, const Profile& rhs);

 private:
  Universe universe_;
  std::vector<Agent> agents_;
};

/// Convex hull of finitely many vertex lotteries.
class FeasiblePolytope {
 public:
  FeasiblePolytope(Universe universe, std::vector<Lottery> vertices);

  /// Delta_X: the hull of the pure outcomes in `alts`.
  static FeasiblePolytope simplex_face(const Universe& universe, const AltSet& alts);

  const Universe& universe() const { return universe_; }
  const std::vector<Lottery>& vertices() const { return vertices_; }

  /// Same hull with duplicate vertices removed (first occurrence kept).
  FeasiblePolytope canonical() const;

 private:
  Universe universe_;
  std::vector<Lottery> vertices_;
};

/// "(1/6, 1/6, 2/3, 0)".
std::string to_string(const Lottery& p);
/// "[[0, 1], [-1, 0]]".
std::string to_string(const SSBMatrix& phi);
/// "{a, c}".
std::string to_string(const AltSet& alts, const Universe& universe);

}  // namespace ssbchoice
