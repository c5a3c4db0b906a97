#pragma once

// Hand-rolled generators for the property suites. Everything is seeded, so
// failures replay deterministically.

#include "klstab/segre.hpp"

#include <random>

namespace proptest {

using klstab::i64;

struct Gen {
  std::mt19937_64 rng{0x5eed5eedULL};

  i64 uniform(i64 lo, i64 hi) {
    return std::uniform_int_distribution<i64>(lo, hi)(rng);
  }

  /// A value congruent to rem mod n inside [lo, hi]; the window is assumed
  /// to contain at least one such value.
  i64 congruent(i64 lo, i64 hi, i64 rem, i64 n) {
    const i64 first = rem + n * klstab::ceil_div(lo - rem, n);
    const i64 count = (hi - first) / n + 1;
    return first + n * uniform(0, count - 1);
  }

  /// A valid profile with entries between -n*g and the generic bound.
  klstab::SegreProfile profile_for(i64 n, i64 d, i64 g) {
    klstab::SegreProfile p{klstab::BundleType{n, d}, {}};
    for (i64 m = 1; m < n; ++m) {
      const i64 hi = klstab::generic_segre_bound(n, d, g, m);
      p.segre.push_back(congruent(-n * g, hi, klstab::floor_mod(m * d, n), n));
    }
    return p;
  }

  /// A valid stable profile (all entries positive).
  klstab::SegreProfile stable_profile_for(i64 n, i64 d, i64 g) {
    klstab::SegreProfile p{klstab::BundleType{n, d}, {}};
    for (i64 m = 1; m < n; ++m) {
      const i64 hi = klstab::generic_segre_bound(n, d, g, m);
      p.segre.push_back(congruent(1, hi, klstab::floor_mod(m * d, n), n));
    }
    return p;
  }

  klstab::KL kl(i64 bound) { return klstab::KL{uniform(-bound, bound), uniform(-bound, bound)}; }
};

}  // namespace proptest
