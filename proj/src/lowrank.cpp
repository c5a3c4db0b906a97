#include "klstab/lowrank.hpp"

namespace klstab {

bool t_stable(const SegreProfile& p, i64 t) {
  if (p.bundle.rank != 2) throw std::invalid_argument("t_stable: rank must be 2");
  return p.segre[0] > t;
}

bool rank2_nonempty(i64 d, i64 g, i64 t) {
  if (g < 2) throw std::invalid_argument("rank2_nonempty: genus must be at least 2");
  if (floor_mod(g - d, 2) == 0) return t <= g - 1;
  return t < g - 1;
}

i64 rank2_indecomposable_floor(i64 g) {
  if (g < 2)
    throw std::invalid_argument("rank2_indecomposable_floor: genus must be at least 2");
  return 1 - 2 * g;
}

Rank2Dims rank2_complement_dims(i64 d, i64 g, i64 t) {
  if (g < 2) throw std::invalid_argument("rank2_complement_dims: genus must be at least 2");
  if (t < 0 || t > g - 1) throw std::domain_error("rank2_complement_dims: t is not in R1");
  const i64 dim = (floor_mod(t - d, 2) == 0) ? 3 * g + t - 2 : 3 * g + t - 3;
  return Rank2Dims{dim, (4 * g - 3) - dim};
}

Rank2Chain rank2_chain(i64 d, i64 g) {
  if (g < 2) throw std::invalid_argument("rank2_chain: genus must be at least 2");
  Rank2Chain chain;
  chain.d = d;
  chain.g = g;
  chain.empty_from = (floor_mod(g - d, 2) == 0) ? g : g - 1;
  chain.full_moduli_t = 0;
  chain.indecomposable_floor = 1 - 2 * g;
  for (i64 t = g; t >= 1 - 2 * g; --t) {
    ChainRelation rel;
    if (t >= chain.empty_from)
      rel = ChainRelation::BothEmpty;
    else if (floor_mod(t - d, 2) == 0)
      rel = ChainRelation::EqualParity;
    else
      rel = ChainRelation::Strict;
    chain.links.push_back(Rank2ChainLink{t, rel});
  }
  return chain;
}

const char* to_string(ChainRelation r) {
  switch (r) {
    case ChainRelation::EqualParity: return "equal_parity";
    case ChainRelation::Strict: return "strict";
    case ChainRelation::BothEmpty: return "both_empty";
  }
  return "?";
}

Rank3Table rank3_table(i64 g) {
  if (g < 2) throw std::invalid_argument("rank3_table: genus must be at least 2");
  Rank3Table t;
  t.g = g;
  for (i64 d = 0; d < 3; ++d) {
    t.rows[d].d_mod_3 = d;
    t.rows[d].bound_2k_l = 2 * (g - 1) + delta_m(3, d, g, 1);
    t.rows[d].bound_k_2l = 2 * (g - 1) + delta_m(3, d, g, 2);
  }
  return t;
}

const char* to_string(JHType t) {
  switch (t) {
    case JHType::LineFirst: return "LineFirst";
    case JHType::PlaneFirst: return "PlaneFirst";
    case JHType::FullFlag: return "FullFlag";
  }
  return "?";
}

JHType jh_classify(const SegreProfile& p) {
  validate_profile(p);
  if (p.bundle.rank != 3) throw std::invalid_argument("jh_classify: rank must be 3");
  if (floor_mod(p.bundle.degree, 3) != 0)
    throw std::invalid_argument("jh_classify: degree must be divisible by 3");
  if (!is_strictly_semistable(p))
    throw std::invalid_argument("jh_classify: profile is not strictly semistable");
  const i64 s1 = p.segre[0];
  const i64 s2 = p.segre[1];
  if (s1 == 0 && s2 == 0) return JHType::FullFlag;
  if (s1 == 0) return JHType::LineFirst;
  return JHType::PlaneFirst;
}

std::optional<KL> jh_region_witness(const SegreProfile& p, i64 g) {
  return jh_region_witness(p, g, 3 * g);
}

std::optional<KL> jh_region_witness(const SegreProfile& p, i64 g, i64 window) {
  const JHType type = jh_classify(p);
  if (type == JHType::FullFlag) return std::nullopt;
  if (g < 2) throw std::invalid_argument("jh_region_witness: genus must be at least 2");
  if (window < 1) throw std::invalid_argument("jh_region_witness: window must be positive");
  // Shells of constant |k|+|l|, then k ascending, then l ascending, so the
  // returned witness is reproducible.
  for (i64 radius = 0; radius <= 2 * window; ++radius) {
    for (i64 k = std::max(-window, -radius); k <= std::min(window, radius); ++k) {
      const i64 rest = radius - (k < 0 ? -k : k);
      if (rest > window) continue;
      const i64 ls[2] = {-rest, rest};
      const int nls = rest == 0 ? 1 : 2;
      for (int i = 0; i < nls; ++i) {
        const KL kl{k, ls[i]};
        const RegionFlags f = classify_region(3, g, kl);
        const bool in_target = (type == JHType::PlaneFirst) ? f.in_R3k : f.in_R3l;
        if (in_target && is_kl_stable(p, kl)) return kl;
      }
    }
  }
  return std::nullopt;
}

std::pair<bool, bool> s_equivalence_split(const SegreProfile& p, const SegreProfile& q,
                                          const KL& kl) {
  if (p.bundle != q.bundle)
    throw std::invalid_argument("s_equivalence_split: profiles have different (rank, degree)");
  return {is_kl_stable(p, kl), is_kl_stable(q, kl)};
}

}  // namespace klstab
