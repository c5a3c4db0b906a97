#include "klstab/types.hpp"

#include <string>

namespace klstab {

Rational k_slope(const BundleType& b, i64 k) {
  if (b.rank < 1) throw std::invalid_argument("k_slope: rank must be positive");
  return Rational(b.degree + k, b.rank);
}

i64 segre_invariant(i64 d, i64 n, i64 m, i64 deg_f) {
  if (m < 1 || m > n - 1)
    throw std::invalid_argument("segre_invariant: subbundle rank out of range");
  return m * d - n * deg_f;
}

void validate_profile(const SegreProfile& p) {
  const i64 n = p.bundle.rank;
  if (n < 1) throw std::invalid_argument("SegreProfile: rank must be positive");
  if (static_cast<i64>(p.segre.size()) != n - 1)
    throw std::invalid_argument("SegreProfile: expected " + std::to_string(n - 1) +
                                " entries, got " + std::to_string(p.segre.size()));
  for (i64 m = 1; m < n; ++m) {
    if (floor_mod(p.segre[m - 1] - m * p.bundle.degree, n) != 0)
      throw std::invalid_argument("SegreProfile: s_" + std::to_string(m) +
                                  " violates the congruence s_m = m*d (mod n)");
  }
}

void validate_profile(const SegreProfile& p, CurveParams curve) {
  validate_profile(p);
  const i64 n = p.bundle.rank;
  const i64 g = curve.genus;
  for (i64 m = 1; m < n; ++m) {
    const i64 bound = m * (n - m) * (g - 1) + (n - 1);
    if (p.segre[m - 1] > bound)
      throw std::invalid_argument("SegreProfile: s_" + std::to_string(m) +
                                  " exceeds the genus-" + std::to_string(g) + " bound " +
                                  std::to_string(bound));
  }
}

bool profile_valid(const SegreProfile& p) {
  try {
    validate_profile(p);
    return true;
  } catch (const std::invalid_argument&) {
    return false;
  }
}

bool profile_valid(const SegreProfile& p, CurveParams curve) {
  try {
    validate_profile(p, curve);
    return true;
  } catch (const std::invalid_argument&) {
    return false;
  }
}

SegreProfile make_profile(BundleType b, std::vector<i64> segre) {
  SegreProfile p{b, std::move(segre)};
  validate_profile(p);
  return p;
}

bool is_stable(const SegreProfile& p) {
  for (i64 s : p.segre)
    if (s <= 0) return false;
  return true;
}

bool is_semistable(const SegreProfile& p) {
  for (i64 s : p.segre)
    if (s < 0) return false;
  return true;
}

bool is_strictly_semistable(const SegreProfile& p) {
  if (!is_semistable(p)) return false;
  for (i64 s : p.segre)
    if (s == 0) return true;
  return false;
}

}  // namespace klstab
