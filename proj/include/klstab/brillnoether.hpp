#pragma once

#include "klstab/regions.hpp"

namespace klstab {

/// A bundle type together with a required count r of independent sections,
/// placed on the (mu, lambda) = (d/n, r/n) parameter plane.
struct BNPoint {
  BundleType bundle;
  i64 sections = 0;
  i64 genus = 2;
};

Rational bn_mu(const BNPoint& p);
Rational bn_lambda(const BNPoint& p);

/// Parameter regions with a known nonemptiness criterion for loci of
/// bundles with at least r sections.
///   BGN: 0 < mu <= 1, mu + (1-lambda)g >= 1, (mu, lambda) != (1, 1)
///   M:   1 < mu < 2,  mu + (1-lambda)g >= 1
///   BMNOApplicable: d = n d' + d'' with d' >= 0, 0 < d'' < 2n,
///                   (d'', r) != (n, n)
/// BGN and M take priority over the BMNO decomposition; all comparisons
/// clear denominators to integers.
enum class BNRegion { BGN, M, BMNOApplicable, None };

const char* to_string(BNRegion r);

BNRegion bn_region(const BNPoint& p);

/// The BMNO decomposition test alone, independent of the mu ranges.
bool bmno_applicable(const BNPoint& p);

/// One-sided exclusion: true when the region rules force the bundle out of
/// the (k,l)-stable locus, namely BGN with k >= 1, l >= 0, or M with
/// k >= 2, l >= 0 and d != 2n-1. False never asserts membership.
bool bn_kl_excluded(const BNPoint& p, const KL& kl);

/// Twisting by a line bundle of degree twist_degree with twist_sections
/// independent sections: (n, d + n*twist_degree, r*twist_sections).
BNPoint bn_tensor(const BNPoint& p, i64 twist_degree, i64 twist_sections);

struct StratumConstraint {
  enum class Relation { Eq, Ge };
  i64 m = 1;
  Relation relation = Relation::Eq;
  i64 s = 0;
};

/// Segre strata forced on a section-carrying stable bundle by
/// (k,l)-stability, in the treated low-rank cases:
///   (n,d,r) = (2,3,1) with k+l = 1       ->  s_1 = 3
///   (n,d,r) = (3,d,1), d in {3,4,5}, (k,l) = (1,0)  ->  s_1 = d, s_2 >= 2
/// Absent outside these cases.
std::optional<std::vector<StratumConstraint>> bn_forced_stratum(const BNPoint& p, const KL& kl);

}  // namespace klstab
