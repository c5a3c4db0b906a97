#include "klstab/verify.hpp"

#include "klstab/brillnoether.hpp"
#include "klstab/lowrank.hpp"
#include "klstab/oracle.hpp"

namespace klstab {

const i64 kRank3BoundOffsets[3][3][2] = {
    // indexed [d mod 3][g mod 3]
    {{0, 0}, {-2, -2}, {-1, -1}},
    {{-2, -1}, {-1, 0}, {0, -2}},
    {{-1, -2}, {0, -1}, {-2, 0}},
};

std::optional<VerifyScope> parse_scope(const std::string& name) {
  if (name == "nonempty") return VerifyScope::Nonempty;
  if (name == "dims") return VerifyScope::Dims;
  if (name == "table") return VerifyScope::Table;
  if (name == "rank2") return VerifyScope::Rank2;
  if (name == "jh") return VerifyScope::JH;
  if (name == "bn") return VerifyScope::BN;
  if (name == "all") return VerifyScope::All;
  return std::nullopt;
}

namespace {

void record(VerifyReport& r, bool ok, const std::string& what) {
  ++r.checked;
  if (!ok) {
    r.passed = false;
    r.mismatches.push_back(what);
  }
}

std::string opt_str(const std::optional<i64>& v) {
  return v ? std::to_string(*v) : std::string("absent");
}

std::string point_str(i64 n, i64 d, i64 g, i64 k, i64 l) {
  return "n=" + std::to_string(n) + " d=" + std::to_string(d) + " g=" + std::to_string(g) +
         " k=" + std::to_string(k) + " l=" + std::to_string(l);
}

VerifyReport verify_nonempty(i64 max_points) {
  VerifyReport r;
  r.scope = "nonempty";
  for (i64 n = 2; n <= 4; ++n) {
    for (i64 g = 2; g <= 4; ++g) {
      for (i64 d = 0; d < n; ++d) {
        const i64 w = n * g;
        const BundleType b{n, d};
        const auto oracle = sweep_nonempty(SweepSpec{b, g, -w, w, -w, w, max_points});
        for (const auto& [key, by_oracle] : oracle) {
          const bool by_rule = nonempty(b, g, KL{key.first, key.second});
          record(r, by_rule == by_oracle,
                 point_str(n, d, g, key.first, key.second) + ": rule=" +
                     (by_rule ? "nonempty" : "empty") + " oracle=" +
                     (by_oracle ? "nonempty" : "empty"));
        }
      }
    }
  }
  return r;
}

VerifyReport verify_dims(i64 max_points) {
  VerifyReport r;
  r.scope = "dims";
  // Formula against the stratum-enumeration oracle, plus the rank-2 closed
  // forms on the same points.
  for (i64 n = 2; n <= 3; ++n) {
    for (i64 g = 2; g <= 5; ++g) {
      for (i64 d = 0; d < n; ++d) {
        const i64 w = n * g;
        const BundleType b{n, d};
        const auto oracle = sweep_complement_dim(SweepSpec{b, g, -w, w, -w, w, max_points});
        for (const auto& [key, dim_oracle] : oracle) {
          const KL kl{key.first, key.second};
          const ComplementReport rep = complement_dims(b, g, kl);
          record(r, rep.dim_complement == dim_oracle,
                 point_str(n, d, g, kl.k, kl.l) + ": formula dim=" +
                     opt_str(rep.dim_complement) + " oracle dim=" + opt_str(dim_oracle));
          if (rep.dim_complement)
            record(r, *rep.dim_complement + *rep.codim == moduli_dimension(n, g),
                   point_str(n, d, g, kl.k, kl.l) + ": dim+codim mismatch");
          if (n == 2 && rep.dim_complement) {
            const Rank2Dims closed = rank2_complement_dims(d, g, kl.k + kl.l);
            record(r, closed.dim == *rep.dim_complement && closed.codim == *rep.codim,
                   point_str(n, d, g, kl.k, kl.l) + ": rank-2 closed form dim=" +
                       std::to_string(closed.dim) + " vs " + opt_str(rep.dim_complement));
          }
        }
      }
    }
  }
  // The codimension floor over a wider window.
  for (i64 n = 2; n <= 4; ++n) {
    for (i64 g = 2; g <= 6; ++g) {
      for (i64 d = 0; d < n; ++d) {
        const i64 w = n * g;
        const BundleType b{n, d};
        for (i64 k = -w; k <= w; ++k) {
          for (i64 l = -w; l <= w; ++l) {
            const KL kl{k, l};
            if (!classify_region(n, g, kl).in_R1) continue;
            const ComplementReport rep = complement_dims(b, g, kl);
            if (!rep.codim) continue;
            record(r, *rep.codim >= codim_lower_bound(n, g, kl),
                   point_str(n, d, g, k, l) + ": codim " + opt_str(rep.codim) +
                       " below floor " + std::to_string(codim_lower_bound(n, g, kl)));
          }
        }
      }
    }
  }
  return r;
}

VerifyReport verify_table(i64 /*max_points*/) {
  VerifyReport r;
  r.scope = "table";
  for (i64 g = 2; g <= 20; ++g) {
    const Rank3Table t = rank3_table(g);
    for (i64 d = 0; d < 3; ++d) {
      const i64 want1 = 2 * g + kRank3BoundOffsets[d][g % 3][0];
      const i64 want2 = 2 * g + kRank3BoundOffsets[d][g % 3][1];
      record(r, t.rows[d].bound_2k_l == want1 && t.rows[d].bound_k_2l == want2,
             "g=" + std::to_string(g) + " d=" + std::to_string(d) + ": computed (" +
                 std::to_string(t.rows[d].bound_2k_l) + "," + std::to_string(t.rows[d].bound_k_2l) +
                 ") reference (" + std::to_string(want1) + "," + std::to_string(want2) + ")");
    }
  }
  return r;
}

VerifyReport verify_rank2(i64 /*max_points*/) {
  VerifyReport r;
  r.scope = "rank2";
  for (i64 d = 0; d <= 1; ++d) {
    for (i64 g = 2; g <= 8; ++g) {
      for (i64 t = -2 * g; t <= 2 * g; ++t) {
        record(r, rank2_nonempty(d, g, t) == nonempty(BundleType{2, d}, g, KL{t, 0}),
               "d=" + std::to_string(d) + " g=" + std::to_string(g) + " t=" + std::to_string(t) +
                   ": rank-2 rule disagrees with the general rule");
      }
      // Parity equalities of the chain, as predicate identities.
      for (const SegreProfile& p : enumerate_profiles(BundleType{2, d}, g)) {
        for (i64 t = -2 * g; t <= 2 * g; ++t) {
          if (floor_mod(t - d, 2) != 0) continue;
          record(r, t_stable(p, t) == t_stable(p, t + 1),
                 "d=" + std::to_string(d) + " g=" + std::to_string(g) +
                     " s1=" + std::to_string(p.segre[0]) + " t=" + std::to_string(t) +
                     ": parity equality fails");
        }
      }
    }
  }
  return r;
}

VerifyReport verify_jh(i64 /*max_points*/) {
  VerifyReport r;
  r.scope = "jh";
  for (i64 g = 2; g <= 4; ++g) {
    for (i64 d : {i64{0}, i64{3}}) {
      const BundleType b{3, d};
      const i64 b1 = generic_segre_bound(3, d, g, 1);
      const i64 b2 = generic_segre_bound(3, d, g, 2);
      const i64 w = 3 * g;
      for (i64 s1 = 0; s1 <= b1; s1 += 3) {
        for (i64 s2 = 0; s2 <= b2; s2 += 3) {
          if (s1 != 0 && s2 != 0) continue;  // strictly semistable only
          const SegreProfile p = make_profile(b, {s1, s2});
          const JHType type = jh_classify(p);
          bool has_r3k = false, has_r3l = false;
          for (i64 k = -w; k <= w; ++k) {
            for (i64 l = -w; l <= w; ++l) {
              const KL kl{k, l};
              const RegionFlags f = classify_region(3, g, kl);
              if (f.in_R3k && is_kl_stable(p, kl)) has_r3k = true;
              if (f.in_R3l && is_kl_stable(p, kl)) has_r3l = true;
            }
          }
          const std::string tag = "g=" + std::to_string(g) + " d=" + std::to_string(d) +
                                  " profile (" + std::to_string(s1) + "," + std::to_string(s2) +
                                  ")";
          switch (type) {
            case JHType::LineFirst:
              record(r, has_r3l && !has_r3k, tag + ": LineFirst witness pattern wrong");
              break;
            case JHType::PlaneFirst:
              record(r, has_r3k && !has_r3l, tag + ": PlaneFirst witness pattern wrong");
              break;
            case JHType::FullFlag:
              record(r, !has_r3k && !has_r3l, tag + ": FullFlag has an R3 witness");
              break;
          }
          const auto witness = jh_region_witness(p, g);
          if (type == JHType::FullFlag) {
            record(r, !witness, tag + ": unexpected witness");
            for (i64 k = -w; k <= w; ++k) {
              for (i64 l = -w; l <= w; ++l) {
                const i64 a1 = 2 * k + l;
                const i64 a2 = k + 2 * l;
                if (a1 < 0 && a2 < 0)
                  record(r, is_kl_stable(p, KL{k, l}),
                         tag + ": not stable at interior R2 point (" + std::to_string(k) + "," +
                             std::to_string(l) + ")");
              }
            }
          } else {
            const RegionFlags f = witness ? classify_region(3, g, *witness) : RegionFlags{};
            const bool in_target = type == JHType::PlaneFirst ? f.in_R3k : f.in_R3l;
            record(r, witness && in_target && is_kl_stable(p, *witness),
                   tag + ": witness missing or invalid");
          }
        }
      }
    }
  }
  return r;
}

VerifyReport verify_bn(i64 /*max_points*/) {
  VerifyReport r;
  r.scope = "bn";

  // Rank-2 exclusion for a section-carrying point with small slope.
  const BNPoint low_slope{BundleType{2, 1}, 1, 2};
  record(r, bn_region(low_slope) == BNRegion::BGN, "(2,1,1) g=2: expected BGN");
  for (i64 t = 1; t <= 4; ++t)
    record(r, bn_kl_excluded(low_slope, KL{t, 0}),
           "(2,1,1) g=2: not excluded at t=" + std::to_string(t));
  for (i64 k = 1; k <= 4; ++k)
    for (i64 l = 0; l <= 4; ++l)
      record(r, bn_kl_excluded(low_slope, KL{k, l}),
             "(2,1,1) g=2: not excluded at k=" + std::to_string(k) + " l=" + std::to_string(l));

  // Forced stratum for (2,3,1) at t = 1, and its uniqueness at genus 3.
  for (i64 g = 2; g <= 4; ++g) {
    const auto forced = bn_forced_stratum(BNPoint{BundleType{2, 3}, 1, g}, KL{1, 0});
    const bool shape = forced && forced->size() == 1 && (*forced)[0].m == 1 &&
                       (*forced)[0].relation == StratumConstraint::Relation::Eq &&
                       (*forced)[0].s == 3;
    record(r, shape, "(2,3,1) g=" + std::to_string(g) + ": forced stratum is not s_1 = 3");
  }
  record(r, t_stable(make_profile(BundleType{2, 3}, {3}), 1), "(2,3) profile s_1=3 not 1-stable");
  {
    i64 count = 0, value = 0;
    for (i64 s = 1; s <= hirschowitz_bound(2, 3, 1); s += 2)
      if (s > 1) {
        ++count;
        value = s;
      }
    record(r, count == 1 && value == 3, "genus 3: the 1-stable rank-2 stratum is not unique");
  }
  record(r, !bn_forced_stratum(BNPoint{BundleType{2, 4}, 1, 2}, KL{1, 0}).has_value(),
         "(2,4,1): unexpectedly treated");
  record(r, !bn_forced_stratum(BNPoint{BundleType{2, 3}, 1, 2}, KL{2, 0}).has_value(),
         "(2,3,1) t=2: unexpectedly treated");

  // Rank-3 forced strata and their stability consistency.
  for (i64 d = 3; d <= 5; ++d) {
    const auto forced = bn_forced_stratum(BNPoint{BundleType{3, d}, 1, 2}, KL{1, 0});
    const bool shape = forced && forced->size() == 2 && (*forced)[0].m == 1 &&
                       (*forced)[0].relation == StratumConstraint::Relation::Eq &&
                       (*forced)[0].s == d && (*forced)[1].m == 2 &&
                       (*forced)[1].relation == StratumConstraint::Relation::Ge &&
                       (*forced)[1].s == 2;
    record(r, shape, "(3," + std::to_string(d) + ",1): forced strata wrong");
    for (i64 g = 2; g <= 4; ++g) {
      const i64 rem = floor_mod(2 * d, 3);
      for (i64 s2 = rem + 3 * ceil_div(2 - rem, 3); s2 <= generic_segre_bound(3, d, g, 2);
           s2 += 3) {
        record(r, is_kl_stable(SegreProfile{BundleType{3, d}, {d, s2}}, KL{1, 0}),
               "(3," + std::to_string(d) + ") profile (" + std::to_string(d) + "," +
                   std::to_string(s2) + "): not (1,0)-stable");
      }
    }
  }

  // The d = 2n-1 exemption for middle slopes.
  record(r, !bn_kl_excluded(BNPoint{BundleType{2, 3}, 1, 2}, KL{2, 0}),
         "(2,3,1): exemption ignored");
  record(r, !bn_kl_excluded(BNPoint{BundleType{3, 5}, 1, 2}, KL{2, 0}),
         "(3,5,1): exemption ignored");
  record(r, bn_kl_excluded(BNPoint{BundleType{3, 4}, 1, 2}, KL{2, 0}),
         "(3,4,1): exclusion missing");
  return r;
}

}  // namespace

std::vector<VerifyReport> run_verification(VerifyScope scope, i64 max_sweep_points) {
  std::vector<VerifyReport> out;
  const bool all = scope == VerifyScope::All;
  if (all || scope == VerifyScope::Nonempty) out.push_back(verify_nonempty(max_sweep_points));
  if (all || scope == VerifyScope::Dims) out.push_back(verify_dims(max_sweep_points));
  if (all || scope == VerifyScope::Table) out.push_back(verify_table(max_sweep_points));
  if (all || scope == VerifyScope::Rank2) out.push_back(verify_rank2(max_sweep_points));
  if (all || scope == VerifyScope::JH) out.push_back(verify_jh(max_sweep_points));
  if (all || scope == VerifyScope::BN) out.push_back(verify_bn(max_sweep_points));
  return out;
}

}  // namespace klstab
