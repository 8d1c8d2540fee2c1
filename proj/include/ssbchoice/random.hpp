#pragma once

// Seeded generators and exhaustive enumerators for preferences and lotteries.

#include <random>
#include <vector>

#include "ssbchoice/core_model.hpp"

namespace ssbchoice {

using Rng = std::mt19937_64;

/// Random lottery with a random nonempty support and small integer weights.
Lottery random_lottery(const Universe& universe, Rng& rng, unsigned max_weight = 6);

/// Independent uniform choice of a > b, b > a or indifference for each pair.
BaseRelation random_base_relation(const Universe& universe, Rng& rng);

BaseRelation random_weak_order(const Universe& universe, Rng& rng);

/// Upper-triangle entries p/q with |p| <= range and q in 1..3.
SSBMatrix random_ssb(const Universe& universe, Rng& rng, int range = 4);

UtilityVector random_utility(const Universe& universe, Rng& rng, int range = 6);

Profile random_pc_profile(const Universe& universe, std::size_t agents, Rng& rng,
                          bool transitive = false);

/// All weak orders (13 for three alternatives, 75 for four).
std::vector<BaseRelation> all_weak_orders(const Universe& universe);

/// All distinct dichotomous relations, complete indifference included
/// (2^m - 1 of them).
std::vector<BaseRelation> all_dichotomous(const Universe& universe);

/// Every matrix with entries in {-1, 0, 1}: 3^(m(m-1)/2) of them.
std::vector<SSBMatrix> all_pc_matrices(const Universe& universe);

/// All profiles of `agents` agents drawn from `relations`, in odometer order
/// with the last agent varying fastest.
std::vector<Profile> all_profiles(const Universe& universe, const std::vector<BaseRelation>& relations,
                                  std::size_t agents);

std::vector<std::vector<std::size_t>> all_permutations(std::size_t n);

}  // namespace ssbchoice
