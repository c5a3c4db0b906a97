#include "doctest.h"

#include "klstab/segre.hpp"

using namespace klstab;

TEST_CASE("hirschowitz_bound") {
  CHECK(hirschowitz_bound(2, 2, 1) == 2);
  CHECK(hirschowitz_bound(3, 2, 1) == 4);
  CHECK(hirschowitz_bound(2, 3, 1) == 3);
  CHECK_THROWS_AS(hirschowitz_bound(2, 2, 2), std::invalid_argument);
  CHECK_THROWS_AS(hirschowitz_bound(2, 1, 1), std::invalid_argument);
}

TEST_CASE("delta_m worked values") {
  CHECK(delta_m(3, 0, 2, 1) == 1);
  CHECK(delta_m(3, 3, 2, 1) == 1);
  CHECK(delta_m(3, 1, 2, 1) == 2);
  CHECK(delta_m(3, 1, 2, 2) == 0);
  CHECK(delta_m(2, 1, 2, 1) == 0);
  CHECK(delta_m(2, 3, 2, 1) == 0);
  CHECK_THROWS_AS(delta_m(3, 0, 2, 3), std::invalid_argument);
}

TEST_CASE("delta_m is invariant under degree shifts by n") {
  for (i64 n = 2; n <= 6; ++n)
    for (i64 g = 2; g <= 5; ++g)
      for (i64 d = -6; d <= 6; ++d)
        for (i64 m = 1; m < n; ++m) {
          CHECK(delta_m(n, d, g, m) == delta_m(n, d + n, g, m));
          const i64 delta = delta_m(n, d, g, m);
          CHECK(delta >= 0);
          CHECK(delta <= n - 1);
          CHECK(floor_mod(m * (n - m) * (g - 1) + delta - m * d, n) == 0);
        }
}

TEST_CASE("generic_segre_bound") {
  CHECK(generic_segre_bound(2, 0, 2, 1) == 2);
  CHECK(generic_segre_bound(3, 0, 2, 2) == 3);
  CHECK(generic_segre_bound(2, 1, 2, 1) == 1);
}

TEST_CASE("generic bound stays within the universal bound") {
  for (i64 n = 2; n <= 6; ++n)
    for (i64 g = 2; g <= 6; ++g)
      for (i64 d = 0; d < n; ++d)
        for (i64 m = 1; m < n; ++m) {
          const i64 generic = generic_segre_bound(n, d, g, m);
          const i64 universal = hirschowitz_bound(n, g, m);
          CHECK(generic <= universal);
          CHECK(universal - generic <= n - 1);
        }
}

TEST_CASE("generic_profile") {
  CHECK(generic_profile(BundleType{2, 1}, 2).segre == std::vector<i64>{1});
  CHECK(generic_profile(BundleType{3, 1}, 2).segre == std::vector<i64>{4, 2});
  CHECK(generic_profile(BundleType{2, 0}, 5).segre == std::vector<i64>{4});
  CHECK_THROWS_AS(generic_profile(BundleType{1, 0}, 2), std::invalid_argument);
}

TEST_CASE("generic_profile passes validation with the genus attached") {
  for (i64 n = 2; n <= 5; ++n)
    for (i64 g = 2; g <= 5; ++g)
      for (i64 d = 0; d < n; ++d) {
        const SegreProfile p = generic_profile(BundleType{n, d}, g);
        CHECK(profile_valid(p, CurveParams(g)));
      }
}

TEST_CASE("stratum_dimension worked values") {
  CHECK(stratum_dimension(StratumSpec{BundleType{2, 0}, 5, 1, 2}) == 15);
  // at the top of its range the stratum fills the moduli space
  CHECK(stratum_dimension(StratumSpec{BundleType{2, 1}, 2, 1, 1}) == moduli_dimension(2, 2));
  CHECK(stratum_dimension(StratumSpec{BundleType{2, 0}, 5, 1, 4}) == moduli_dimension(2, 5));
}

TEST_CASE("stratum_dimension rejects out-of-range s") {
  CHECK_THROWS_AS(stratum_dimension(StratumSpec{BundleType{3, 0}, 2, 1, 3}),
                  std::domain_error);  // 3 > m(n-m)(g-1) = 2
  CHECK_THROWS_AS(stratum_dimension(StratumSpec{BundleType{2, 0}, 2, 1, 0}), std::domain_error);
  CHECK_THROWS_AS(stratum_dimension(StratumSpec{BundleType{2, 0}, 2, 1, -2}), std::domain_error);
  CHECK_THROWS_AS(stratum_dimension(StratumSpec{BundleType{2, 0}, 2, 1, 1}),
                  std::invalid_argument);  // congruence violated
}

TEST_CASE("stratum_dimension grows by one per unit of s") {
  for (i64 n = 2; n <= 4; ++n)
    for (i64 g = 2; g <= 4; ++g)
      for (i64 d = 0; d < n; ++d)
        for (i64 m = 1; m < n; ++m) {
          const i64 rem = floor_mod(m * d, n);
          const i64 cap = m * (n - m) * (g - 1);
          i64 prev = 0;
          bool have_prev = false;
          for (i64 s = rem == 0 ? n : rem; s <= cap; s += n) {
            const i64 dim = stratum_dimension(StratumSpec{BundleType{n, d}, g, m, s});
            if (have_prev) CHECK(dim - prev == n);
            prev = dim;
            have_prev = true;
          }
        }
}
