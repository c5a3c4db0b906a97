#include "klstab/oracle.hpp"

#include <algorithm>

namespace klstab {

void validate_sweep(const SweepSpec& spec) {
  if (spec.bundle.rank < 2 || spec.bundle.rank > 5)
    throw std::invalid_argument("sweep: rank must be between 2 and 5");
  if (spec.genus < 2) throw std::invalid_argument("sweep: genus must be at least 2");
  if (spec.k_min > spec.k_max || spec.l_min > spec.l_max)
    throw std::invalid_argument("sweep: empty (k,l) window");
  const i64 points = (spec.k_max - spec.k_min + 1) * (spec.l_max - spec.l_min + 1);
  if (points > spec.max_points)
    throw std::invalid_argument("sweep: window of " + std::to_string(points) +
                                " points exceeds the guard of " +
                                std::to_string(spec.max_points));
}

std::vector<SegreProfile> enumerate_profiles(const BundleType& b, i64 g) {
  const i64 n = b.rank;
  if (n < 1 || n > 5) throw std::invalid_argument("enumerate_profiles: rank capped at 5");
  if (g < 2) throw std::invalid_argument("enumerate_profiles: genus must be at least 2");

  // Independent windows per coordinate: congruence class of m*d mod n,
  // from -n*g up to the generic bound.
  std::vector<std::vector<i64>> axis(n - 1);
  for (i64 m = 1; m < n; ++m) {
    const i64 lo = -n * g;
    const i64 hi = generic_segre_bound(n, b.degree, g, m);
    const i64 rem = floor_mod(m * b.degree, n);
    for (i64 s = rem + n * ceil_div(lo - rem, n); s <= hi; s += n) axis[m - 1].push_back(s);
  }

  std::vector<SegreProfile> out;
  SegreProfile current{b, std::vector<i64>(n - 1, 0)};
  std::vector<size_t> idx(n - 1, 0);
  while (true) {
    for (i64 m = 1; m < n; ++m) current.segre[m - 1] = axis[m - 1][idx[m - 1]];
    out.push_back(current);
    i64 pos = n - 2;
    while (pos >= 0 && ++idx[pos] == axis[pos].size()) {
      idx[pos] = 0;
      --pos;
    }
    if (pos < 0) break;
  }
  return out;
}

std::map<KLKey, bool> sweep_nonempty(const SweepSpec& spec) {
  validate_sweep(spec);
  const std::vector<SegreProfile> profiles = enumerate_profiles(spec.bundle, spec.genus);
  std::map<KLKey, bool> out;
  for (i64 k = spec.k_min; k <= spec.k_max; ++k) {
    for (i64 l = spec.l_min; l <= spec.l_max; ++l) {
      const KL kl{k, l};
      out[{k, l}] = std::any_of(profiles.begin(), profiles.end(),
                                [&](const SegreProfile& p) { return is_kl_stable(p, kl); });
    }
  }
  return out;
}

std::map<KLKey, std::optional<i64>> sweep_complement_dim(const SweepSpec& spec) {
  validate_sweep(spec);
  const i64 n = spec.bundle.rank;
  const i64 d = spec.bundle.degree;
  const i64 g = spec.genus;
  std::map<KLKey, std::optional<i64>> out;
  for (i64 k = spec.k_min; k <= spec.k_max; ++k) {
    for (i64 l = spec.l_min; l <= spec.l_max; ++l) {
      const KL kl{k, l};
      if (!classify_region(n, g, kl).in_R1) continue;
      std::optional<i64> best;
      for (i64 m = 1; m < n; ++m) {
        const i64 cap = std::min(k * (n - m) + m * l, m * (n - m) * (g - 1));
        const i64 rem = floor_mod(m * d, n);
        for (i64 s = rem == 0 ? n : rem; s <= cap; s += n) {
          const i64 dim = stratum_dimension(StratumSpec{spec.bundle, g, m, s});
          if (!best || dim > *best) best = dim;
        }
      }
      out[{k, l}] = best;
    }
  }
  return out;
}

}  // namespace klstab
