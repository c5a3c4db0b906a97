#pragma once

#include "klstab/segre.hpp"

#include <optional>
#include <utility>

namespace klstab {

// The (k,l) plane splits into regions cut out by the two linear forms
//   a1 = k(n-1) + l   and   a2 = k + (n-1)l:
//
//   R0:  a1 >= (n-1)g or a2 >= (n-1)g             no (k,l)-stable bundles
//   R1:  0 <= a1 <= (n-1)(g-1) and same for a2    (k,l)-stable implies stable
//   R2:  a1 <= 0 and a2 <= 0                      stable implies (k,l)-stable
//   R3k: 0 < a1 < (n-1)(g-1) and a2 < 0
//   R3l: 0 < a2 < (n-1)(g-1) and a1 < 0
//
// Flags may overlap on shared boundaries, and all can be false in the band
// between (n-1)(g-1) and (n-1)g where only the sharp degree-aware
// nonemptiness test decides.
struct RegionFlags {
  bool in_R0 = false;
  bool in_R1 = false;
  bool in_R2 = false;
  bool in_R3k = false;
  bool in_R3l = false;
};

struct RegionReport {
  KL kl;
  BundleType bundle;
  i64 genus = 2;
  RegionFlags flags;
  bool nonempty = false;
};

struct ComplementReport {
  KL kl;
  BundleType bundle;
  i64 genus = 2;
  std::vector<std::optional<i64>> s_tilde;  // index m-1, absent when no positive stratum
  std::optional<i64> s_delta;
  std::optional<i64> dim_complement;
  std::optional<i64> codim;
};

/// True iff s_m > k(n-m) + m*l for every m; vacuously true for rank 1.
/// The caller guarantees a valid profile.
bool is_kl_stable(const SegreProfile& p, const KL& kl);

/// Whether any (k,l)-stable bundle of this type exists: for every m the
/// strict inequality k(n-m) + m*l < m(n-m)(g-1) + delta_m must hold.
/// Equivalent to is_kl_stable(generic_profile(b, g), kl).
bool nonempty(const BundleType& b, i64 g, const KL& kl);

RegionFlags classify_region(i64 n, i64 g, const KL& kl);

RegionReport region_report(const BundleType& b, i64 g, const KL& kl);

/// Largest s <= k(n-m) + m*l with s == m*d (mod n), reported only when
/// positive; a non-positive maximum means no stable stratum violates at m.
std::optional<i64> s_tilde(const BundleType& b, const KL& kl, i64 m);

/// min over the two endpoint forms of (n-1)(g-1) - a_i; a floor for the
/// codimension of the non-(k,l)-stable locus on R1.
i64 codim_lower_bound(i64 n, i64 g, const KL& kl);

/// Dimension and codimension of the locus of stable-but-not-(k,l)-stable
/// bundles, for (k,l) in R1. All fields absent when that locus is empty.
/// Throws std::domain_error outside R1.
ComplementReport complement_dims(const BundleType& b, i64 g, const KL& kl);

/// Parameters of the dual bundle: ((n, -d), (l, k)).
std::pair<BundleType, KL> dual_kl(const BundleType& b, const KL& kl);

/// Profile of the dual bundle: degree negated, entries reversed
/// (rank-m subbundles of the dual correspond to rank n-m quotient kernels).
SegreProfile dual_profile(const SegreProfile& p);

/// Twisting by a line bundle of degree twist_degree: (n, d + n*twist_degree).
BundleType tensor_shift(const BundleType& b, i64 twist_degree);

/// Twisting at profile level; the Segre entries are unchanged.
SegreProfile tensor_shift(const SegreProfile& p, i64 twist_degree);

/// Worst-case profile of an elementary transform of a bundle with this
/// profile: degree drops by 1 and s_m by m. A (k,l)-stable input always
/// yields a (k,l-1)-stable output.
SegreProfile elementary_transform_bound(const SegreProfile& p);

}  // namespace klstab
