#pragma once

#include "klstab/regions.hpp"

#include <map>

namespace klstab {

// Brute-force recomputation of the region and dimension statements by
// exhaustive enumeration. Used by the test suites and the CLI `verify`
// subcommand as ground truth; deliberately small and dumb.

struct SweepSpec {
  BundleType bundle;
  i64 genus = 2;
  i64 k_min = 0;
  i64 k_max = 0;
  i64 l_min = 0;
  i64 l_max = 0;
  i64 max_points = 10000;
};

/// Throws std::invalid_argument on empty or oversized windows.
void validate_sweep(const SweepSpec& spec);

/// All profiles with s_m == m*d (mod n) and -n*g <= s_m <= generic bound,
/// each coordinate independently. Rank is capped at 5.
std::vector<SegreProfile> enumerate_profiles(const BundleType& b, i64 g);

using KLKey = std::pair<i64, i64>;

/// For each lattice point, whether some enumerated profile is (k,l)-stable.
/// Must agree with nonempty() everywhere.
std::map<KLKey, bool> sweep_nonempty(const SweepSpec& spec);

/// For each lattice point of R1, the max of stratum_dimension over every
/// violating stratum (some m with 0 < s <= k(n-m)+m*l); absent when no
/// stratum violates. Must agree with complement_dims everywhere.
std::map<KLKey, std::optional<i64>> sweep_complement_dim(const SweepSpec& spec);

}  // namespace klstab
