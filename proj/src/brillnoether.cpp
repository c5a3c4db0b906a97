#include "klstab/brillnoether.hpp"

namespace klstab {

namespace {

void require_point(const BNPoint& p, const char* who) {
  if (p.bundle.rank < 1)
    throw std::invalid_argument(std::string(who) + ": rank must be positive");
  if (p.sections < 0)
    throw std::invalid_argument(std::string(who) + ": section count must be non-negative");
  if (p.genus < 2) throw std::invalid_argument(std::string(who) + ": genus must be at least 2");
}

}  // namespace

Rational bn_mu(const BNPoint& p) { return Rational(p.bundle.degree, p.bundle.rank); }

Rational bn_lambda(const BNPoint& p) { return Rational(p.sections, p.bundle.rank); }

const char* to_string(BNRegion r) {
  switch (r) {
    case BNRegion::BGN: return "BGN";
    case BNRegion::M: return "M";
    case BNRegion::BMNOApplicable: return "BMNO_applicable";
    case BNRegion::None: return "none";
  }
  return "?";
}

bool bmno_applicable(const BNPoint& p) {
  require_point(p, "bmno_applicable");
  const i64 n = p.bundle.rank;
  const i64 d = p.bundle.degree;
  for (i64 dpp = 1; dpp < 2 * n; ++dpp) {
    if (floor_mod(d - dpp, n) != 0) continue;
    if ((d - dpp) / n < 0) continue;
    if (dpp == n && p.sections == n) continue;
    return true;
  }
  return false;
}

BNRegion bn_region(const BNPoint& p) {
  require_point(p, "bn_region");
  const i64 n = p.bundle.rank;
  const i64 d = p.bundle.degree;
  const i64 r = p.sections;
  const i64 g = p.genus;
  // mu + (1 - lambda) g >= 1, cleared of denominators.
  const bool chi_ok = d + (n - r) * g >= n;
  if (d > 0 && d <= n && chi_ok && !(d == n && r == n)) return BNRegion::BGN;
  if (d > n && d < 2 * n && chi_ok) return BNRegion::M;
  if (bmno_applicable(p)) return BNRegion::BMNOApplicable;
  return BNRegion::None;
}

bool bn_kl_excluded(const BNPoint& p, const KL& kl) {
  const BNRegion region = bn_region(p);
  const i64 n = p.bundle.rank;
  const i64 d = p.bundle.degree;
  if (region == BNRegion::BGN) return kl.k >= 1 && kl.l >= 0;
  if (region == BNRegion::M) return kl.k >= 2 && kl.l >= 0 && d != 2 * n - 1;
  return false;
}

BNPoint bn_tensor(const BNPoint& p, i64 twist_degree, i64 twist_sections) {
  require_point(p, "bn_tensor");
  if (twist_sections < 1)
    throw std::invalid_argument("bn_tensor: the twisting bundle needs at least one section");
  return BNPoint{tensor_shift(p.bundle, twist_degree), p.sections * twist_sections, p.genus};
}

std::optional<std::vector<StratumConstraint>> bn_forced_stratum(const BNPoint& p, const KL& kl) {
  require_point(p, "bn_forced_stratum");
  const i64 n = p.bundle.rank;
  const i64 d = p.bundle.degree;
  if (n == 2 && d == 3 && p.sections == 1 && kl.k + kl.l == 1) {
    return std::vector<StratumConstraint>{{1, StratumConstraint::Relation::Eq, 3}};
  }
  if (n == 3 && d >= 3 && d <= 5 && p.sections == 1 && kl == KL{1, 0}) {
    return std::vector<StratumConstraint>{{1, StratumConstraint::Relation::Eq, d},
                                          {2, StratumConstraint::Relation::Ge, 2}};
  }
  return std::nullopt;
}

}  // namespace klstab
