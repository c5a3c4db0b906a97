#include "klstab/segre.hpp"

namespace klstab {

namespace {

void require_m(i64 n, i64 m, const char* who) {
  if (m < 1 || m > n - 1)
    throw std::invalid_argument(std::string(who) + ": subbundle rank out of range");
}

void require_g(i64 g, const char* who) {
  if (g < 2) throw std::invalid_argument(std::string(who) + ": genus must be at least 2");
}

}  // namespace

i64 moduli_dimension(i64 n, i64 g) { return n * n * (g - 1) + 1; }

i64 hirschowitz_bound(i64 n, i64 g, i64 m) {
  require_m(n, m, "hirschowitz_bound");
  require_g(g, "hirschowitz_bound");
  return m * (n - m) * (g - 1) + (n - 1);
}

i64 delta_m(i64 n, i64 d, i64 g, i64 m) {
  require_m(n, m, "delta_m");
  require_g(g, "delta_m");
  return floor_mod(m * d - m * (n - m) * (g - 1), n);
}

i64 generic_segre_bound(i64 n, i64 d, i64 g, i64 m) {
  return m * (n - m) * (g - 1) + delta_m(n, d, g, m);
}

SegreProfile generic_profile(const BundleType& b, i64 g) {
  if (b.rank < 2) throw std::invalid_argument("generic_profile: rank must be at least 2");
  require_g(g, "generic_profile");
  SegreProfile p{b, {}};
  p.segre.reserve(b.rank - 1);
  for (i64 m = 1; m < b.rank; ++m) p.segre.push_back(generic_segre_bound(b.rank, b.degree, g, m));
  return p;
}

i64 stratum_dimension(const StratumSpec& spec) {
  const i64 n = spec.bundle.rank;
  const i64 d = spec.bundle.degree;
  const i64 g = spec.genus;
  const i64 m = spec.m;
  const i64 s = spec.s;
  require_m(n, m, "stratum_dimension");
  require_g(g, "stratum_dimension");
  if (floor_mod(s - m * d, n) != 0)
    throw std::invalid_argument("stratum_dimension: s violates the congruence s = m*d (mod n)");
  if (s <= 0 || s > m * (n - m) * (g - 1))
    throw std::domain_error("stratum_dimension: outside stratum theorem hypotheses");
  return moduli_dimension(n, g) + s - m * (n - m) * (g - 1);
}

}  // namespace klstab
