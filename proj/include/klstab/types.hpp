#pragma once

#include "klstab/rational.hpp"

#include <stdexcept>
#include <vector>

namespace klstab {

/// Representative of a mod n in {0, ..., n-1}; n must be positive.
inline i64 floor_mod(i64 a, i64 n) {
  const i64 r = a % n;
  return r < 0 ? r + n : r;
}

/// Floor division for a positive divisor.
inline i64 floor_div(i64 a, i64 b) {
  const i64 q = a / b;
  return (a % b != 0 && (a < 0) != (b < 0)) ? q - 1 : q;
}

inline i64 ceil_div(i64 a, i64 b) { return -floor_div(-a, b); }

/// Genus of the base curve, the only geometric input anywhere in the
/// library. Everything downstream is integer arithmetic on top of it.
struct CurveParams {
  i64 genus;
  explicit CurveParams(i64 g) : genus(g) {
    if (g < 2) throw std::invalid_argument("CurveParams: genus must be at least 2");
  }
};

/// Discrete type (rank, degree) of a bundle.
struct BundleType {
  i64 rank = 1;
  i64 degree = 0;
};

inline bool operator==(const BundleType& a, const BundleType& b) {
  return a.rank == b.rank && a.degree == b.degree;
}
inline bool operator!=(const BundleType& a, const BundleType& b) { return !(a == b); }

/// Integer stability parameter (k, l).
struct KL {
  i64 k = 0;
  i64 l = 0;
};

inline bool operator==(const KL& a, const KL& b) { return a.k == b.k && a.l == b.l; }
inline bool operator!=(const KL& a, const KL& b) { return !(a == b); }

/// Slope with the numerator shifted by k: (degree + k) / rank.
Rational k_slope(const BundleType& b, i64 k);

/// m-th Segre invariant m*d - n*deg(F) of a bundle of rank n and degree d,
/// where deg(F) is the degree of a maximal subbundle of rank m.
i64 segre_invariant(i64 d, i64 n, i64 m, i64 deg_f);

/// The vector (s_1, ..., s_{n-1}) of Segre invariants, indexed by the rank
/// of the subbundle. In this library a bundle is modelled entirely by its
/// type and this vector; entries may be negative (unstable bundles).
struct SegreProfile {
  BundleType bundle;
  std::vector<i64> segre;
};

inline bool operator==(const SegreProfile& a, const SegreProfile& b) {
  return a.bundle == b.bundle && a.segre == b.segre;
}

/// Throws std::invalid_argument unless the profile has exactly n-1 entries
/// with s_m congruent to m*d mod n.
void validate_profile(const SegreProfile& p);

/// Additionally enforces the genus-dependent upper bound
/// s_m <= m(n-m)(g-1) + (n-1).
void validate_profile(const SegreProfile& p, CurveParams curve);

bool profile_valid(const SegreProfile& p);
bool profile_valid(const SegreProfile& p, CurveParams curve);

/// Validated construction; same checks as the one-argument validate_profile.
SegreProfile make_profile(BundleType b, std::vector<i64> segre);

// The stability class is derived from the profile, never stored.
bool is_stable(const SegreProfile& p);               // all entries > 0
bool is_semistable(const SegreProfile& p);           // all entries >= 0
bool is_strictly_semistable(const SegreProfile& p);  // semistable with a vanishing entry

}  // namespace klstab
