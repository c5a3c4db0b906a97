#include "klstab/regions.hpp"

#include <algorithm>

namespace klstab {

bool is_kl_stable(const SegreProfile& p, const KL& kl) {
  const i64 n = p.bundle.rank;
  for (i64 m = 1; m < n; ++m) {
    if (p.segre[m - 1] <= kl.k * (n - m) + m * kl.l) return false;
  }
  return true;
}

bool nonempty(const BundleType& b, i64 g, const KL& kl) {
  const i64 n = b.rank;
  if (n < 2) throw std::invalid_argument("nonempty: rank must be at least 2");
  if (g < 2) throw std::invalid_argument("nonempty: genus must be at least 2");
  for (i64 m = 1; m < n; ++m) {
    if (kl.k * (n - m) + m * kl.l >= m * (n - m) * (g - 1) + delta_m(n, b.degree, g, m))
      return false;
  }
  return true;
}

RegionFlags classify_region(i64 n, i64 g, const KL& kl) {
  if (n < 2) throw std::invalid_argument("classify_region: rank must be at least 2");
  if (g < 2) throw std::invalid_argument("classify_region: genus must be at least 2");
  const i64 a1 = kl.k * (n - 1) + kl.l;
  const i64 a2 = kl.k + kl.l * (n - 1);
  const i64 hi = (n - 1) * g;
  const i64 mid = (n - 1) * (g - 1);
  RegionFlags f;
  f.in_R0 = a1 >= hi || a2 >= hi;
  f.in_R1 = 0 <= a1 && a1 <= mid && 0 <= a2 && a2 <= mid;
  f.in_R2 = a1 <= 0 && a2 <= 0;
  f.in_R3k = 0 < a1 && a1 < mid && a2 < 0;
  f.in_R3l = 0 < a2 && a2 < mid && a1 < 0;
  return f;
}

RegionReport region_report(const BundleType& b, i64 g, const KL& kl) {
  RegionReport r;
  r.kl = kl;
  r.bundle = b;
  r.genus = g;
  r.flags = classify_region(b.rank, g, kl);
  r.nonempty = nonempty(b, g, kl);
  return r;
}

std::optional<i64> s_tilde(const BundleType& b, const KL& kl, i64 m) {
  const i64 n = b.rank;
  if (m < 1 || m > n - 1) throw std::invalid_argument("s_tilde: subbundle rank out of range");
  const i64 cap = kl.k * (n - m) + m * kl.l;
  const i64 rem = floor_mod(m * b.degree, n);
  const i64 s = rem + n * floor_div(cap - rem, n);
  if (s <= 0) return std::nullopt;
  return s;
}

i64 codim_lower_bound(i64 n, i64 g, const KL& kl) {
  const i64 mid = (n - 1) * (g - 1);
  return std::min(mid - (kl.k * (n - 1) + kl.l), mid - (kl.k + kl.l * (n - 1)));
}

ComplementReport complement_dims(const BundleType& b, i64 g, const KL& kl) {
  const i64 n = b.rank;
  const RegionFlags flags = classify_region(n, g, kl);
  if (!flags.in_R1) throw std::domain_error("complement_dims: (k,l) is not in R1");

  ComplementReport r;
  r.kl = kl;
  r.bundle = b;
  r.genus = g;
  std::optional<i64> s_delta;
  for (i64 m = 1; m < n; ++m) {
    const auto tilde = s_tilde(b, kl, m);
    r.s_tilde.push_back(tilde);
    if (tilde) {
      const i64 term = m * (n - m) * (g - 1) - *tilde;
      if (!s_delta || term < *s_delta) s_delta = term;
    }
  }
  if (s_delta) {
    r.s_delta = s_delta;
    r.dim_complement = moduli_dimension(n, g) - *s_delta;
    r.codim = s_delta;
    if (*r.codim < codim_lower_bound(n, g, kl))
      throw std::logic_error("complement_dims: codimension fell below its floor");
  }
  return r;
}

std::pair<BundleType, KL> dual_kl(const BundleType& b, const KL& kl) {
  return {BundleType{b.rank, -b.degree}, KL{kl.l, kl.k}};
}

SegreProfile dual_profile(const SegreProfile& p) {
  SegreProfile dual{BundleType{p.bundle.rank, -p.bundle.degree},
                    std::vector<i64>(p.segre.rbegin(), p.segre.rend())};
  return dual;
}

BundleType tensor_shift(const BundleType& b, i64 twist_degree) {
  return BundleType{b.rank, b.degree + b.rank * twist_degree};
}

SegreProfile tensor_shift(const SegreProfile& p, i64 twist_degree) {
  return SegreProfile{tensor_shift(p.bundle, twist_degree), p.segre};
}

SegreProfile elementary_transform_bound(const SegreProfile& p) {
  SegreProfile out{BundleType{p.bundle.rank, p.bundle.degree - 1}, p.segre};
  for (i64 m = 1; m <= static_cast<i64>(out.segre.size()); ++m) out.segre[m - 1] -= m;
  return out;
}

}  // namespace klstab
