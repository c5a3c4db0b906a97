#include "doctest.h"

#include "klstab/lowrank.hpp"
#include "klstab/verify.hpp"

using namespace klstab;

TEST_CASE("t_stable") {
  CHECK(t_stable(make_profile(BundleType{2, 0}, {2}), 1));
  CHECK_FALSE(t_stable(make_profile(BundleType{2, 0}, {0}), 0));
  CHECK(t_stable(make_profile(BundleType{2, 1}, {1}), 0));
  CHECK_THROWS_AS(t_stable(make_profile(BundleType{3, 0}, {0, 0}), 0), std::invalid_argument);
}

TEST_CASE("t_stable agrees with is_kl_stable across splits of t") {
  for (i64 d = 0; d <= 1; ++d)
    for (i64 s = d - 6; s <= 6; s += 2)
      for (i64 t = -5; t <= 5; ++t) {
        const SegreProfile p = make_profile(BundleType{2, d}, {s});
        for (i64 k = -5; k <= 5; ++k)
          CHECK(t_stable(p, t) == is_kl_stable(p, KL{k, t - k}));
      }
}

TEST_CASE("rank2_nonempty") {
  CHECK(rank2_nonempty(1, 2, 0));
  CHECK_FALSE(rank2_nonempty(1, 2, 1));
  CHECK(rank2_nonempty(0, 2, 1));
  CHECK_FALSE(rank2_nonempty(0, 2, 2));
}

TEST_CASE("rank2_nonempty equals the general rule") {
  for (i64 d = 0; d <= 1; ++d)
    for (i64 g = 2; g <= 8; ++g)
      for (i64 t = -2 * g; t <= 2 * g; ++t)
        CHECK(rank2_nonempty(d, g, t) == nonempty(BundleType{2, d}, g, KL{t, 0}));
}

TEST_CASE("rank2_indecomposable_floor") {
  CHECK(rank2_indecomposable_floor(2) == -3);
  CHECK(rank2_indecomposable_floor(3) == -5);
  // the flattest indecomposable profile clears the floor
  for (i64 g = 2; g <= 6; ++g) {
    const SegreProfile p = make_profile(BundleType{2, 0}, {2 - 2 * g});
    CHECK(t_stable(p, rank2_indecomposable_floor(g)));
  }
}

TEST_CASE("rank2_complement_dims closed form") {
  CHECK(rank2_complement_dims(0, 5, 2).dim == 15);
  CHECK(rank2_complement_dims(0, 5, 2).codim == 2);
  CHECK(rank2_complement_dims(0, 5, 1).dim == 13);  // 3g+t-3 row
  CHECK(rank2_complement_dims(0, 5, 1).codim == 4);
  CHECK(rank2_complement_dims(1, 5, 1).dim == 14);  // 3g+t-2 row
  CHECK_THROWS_AS(rank2_complement_dims(0, 5, -1), std::domain_error);
  CHECK_THROWS_AS(rank2_complement_dims(0, 5, 5), std::domain_error);
}

TEST_CASE("rank2 chain structure") {
  const Rank2Chain even = rank2_chain(0, 2);
  CHECK(even.empty_from == 2);
  CHECK(even.indecomposable_floor == -3);
  CHECK(even.links.size() == 6);  // t = 2 down to -3
  CHECK(even.links.front().t == 2);
  CHECK(even.links.front().relation == ChainRelation::BothEmpty);
  CHECK(even.links[1].t == 1);
  CHECK(even.links[1].relation == ChainRelation::Strict);
  CHECK(even.links[2].t == 0);
  CHECK(even.links[2].relation == ChainRelation::EqualParity);
  CHECK(even.links[3].relation == ChainRelation::Strict);
  CHECK(even.links[4].relation == ChainRelation::EqualParity);
  CHECK(even.links.back().t == -3);

  const Rank2Chain odd = rank2_chain(1, 2);
  CHECK(odd.empty_from == 1);  // parity mismatch lowers the threshold
  CHECK(odd.links.front().relation == ChainRelation::BothEmpty);
  CHECK(odd.links[1].t == 1);
  CHECK(odd.links[1].relation == ChainRelation::BothEmpty);
  CHECK(odd.links[2].t == 0);
  CHECK(odd.links[2].relation == ChainRelation::Strict);
  CHECK(odd.links[3].t == -1);
  CHECK(odd.links[3].relation == ChainRelation::EqualParity);
}

TEST_CASE("chain relations hold at profile level") {
  for (i64 d = 0; d <= 1; ++d)
    for (i64 g = 2; g <= 6; ++g) {
      const Rank2Chain chain = rank2_chain(d, g);
      for (const auto& link : chain.links) {
        // equality: no profile separates A_t from A_{t+1}
        if (link.relation == ChainRelation::EqualParity) {
          for (i64 s = d - 10; s <= generic_segre_bound(2, d, g, 1); s += 2) {
            const SegreProfile p = make_profile(BundleType{2, d}, {s});
            CHECK(t_stable(p, link.t) == t_stable(p, link.t + 1));
          }
        }
        // strictness: some profile is t-stable but not (t+1)-stable
        if (link.relation == ChainRelation::Strict) {
          const SegreProfile witness = make_profile(BundleType{2, d}, {link.t + 1});
          CHECK(profile_valid(witness, CurveParams(g)));
          CHECK(t_stable(witness, link.t));
          CHECK_FALSE(t_stable(witness, link.t + 1));
        }
        // emptiness marker matches the nonemptiness rule
        if (link.relation == ChainRelation::BothEmpty) {
          CHECK_FALSE(rank2_nonempty(d, g, link.t));
          CHECK_FALSE(rank2_nonempty(d, g, link.t + 1));
        }
      }
    }
}

TEST_CASE("rank3 table worked rows") {
  const Rank3Table g2 = rank3_table(2);
  CHECK(g2.rows[0].bound_2k_l == 3);
  CHECK(g2.rows[0].bound_k_2l == 3);
  CHECK(g2.rows[1].bound_2k_l == 4);
  CHECK(g2.rows[1].bound_k_2l == 2);
  CHECK(g2.rows[2].bound_2k_l == 2);
  CHECK(g2.rows[2].bound_k_2l == 4);

  const Rank3Table g3 = rank3_table(3);  // g = 0 mod 3
  CHECK(g3.rows[0].bound_2k_l == 6);
  CHECK(g3.rows[0].bound_k_2l == 6);
}

TEST_CASE("rank3 table equals the frozen reference for g up to 20") {
  for (i64 g = 2; g <= 20; ++g) {
    const Rank3Table t = rank3_table(g);
    for (i64 d = 0; d < 3; ++d) {
      CHECK(t.rows[d].bound_2k_l == 2 * g + kRank3BoundOffsets[d][g % 3][0]);
      CHECK(t.rows[d].bound_k_2l == 2 * g + kRank3BoundOffsets[d][g % 3][1]);
    }
  }
}

TEST_CASE("rank3 table bounds reproduce nonempty") {
  for (i64 g = 2; g <= 6; ++g) {
    const Rank3Table t = rank3_table(g);
    for (i64 d = 0; d < 3; ++d)
      for (i64 k = -8; k <= 8; ++k)
        for (i64 l = -8; l <= 8; ++l) {
          const bool by_table =
              2 * k + l < t.rows[d].bound_2k_l && k + 2 * l < t.rows[d].bound_k_2l;
          CHECK(by_table == nonempty(BundleType{3, d}, g, KL{k, l}));
        }
  }
}

TEST_CASE("jh_classify") {
  CHECK(jh_classify(make_profile(BundleType{3, 0}, {0, 3})) == JHType::LineFirst);
  CHECK(jh_classify(make_profile(BundleType{3, 0}, {3, 0})) == JHType::PlaneFirst);
  CHECK(jh_classify(make_profile(BundleType{3, 0}, {0, 0})) == JHType::FullFlag);
  CHECK(jh_classify(make_profile(BundleType{3, 6}, {0, 3})) == JHType::LineFirst);

  CHECK_THROWS_AS(jh_classify(make_profile(BundleType{2, 0}, {0})), std::invalid_argument);
  // stable, not strictly semistable
  CHECK_THROWS_AS(jh_classify(make_profile(BundleType{3, 0}, {3, 3})), std::invalid_argument);
  // unstable
  CHECK_THROWS_AS(jh_classify(make_profile(BundleType{3, 0}, {-3, 0})), std::invalid_argument);
  // degree not divisible by 3
  CHECK_THROWS_AS(jh_classify(make_profile(BundleType{3, 1}, {1, 2})), std::invalid_argument);
}

TEST_CASE("jh_region_witness worked values") {
  CHECK(jh_region_witness(make_profile(BundleType{3, 0}, {3, 0}), 2) == KL{1, -1});
  CHECK(jh_region_witness(make_profile(BundleType{3, 0}, {0, 3}), 2) == KL{-1, 1});
  CHECK_FALSE(jh_region_witness(make_profile(BundleType{3, 0}, {0, 0}), 2).has_value());
}

TEST_CASE("jh_region_witness lands in the right region and is reproducible") {
  for (i64 g = 2; g <= 4; ++g)
    for (i64 d : {i64{0}, i64{3}})
      for (i64 s1 = 0; s1 <= generic_segre_bound(3, d, g, 1); s1 += 3)
        for (i64 s2 = 0; s2 <= generic_segre_bound(3, d, g, 2); s2 += 3) {
          if (s1 != 0 && s2 != 0) continue;
          const SegreProfile p = make_profile(BundleType{3, d}, {s1, s2});
          const auto w1 = jh_region_witness(p, g);
          const auto w2 = jh_region_witness(p, g);
          CHECK(w1 == w2);
          if (jh_classify(p) == JHType::FullFlag) {
            CHECK_FALSE(w1.has_value());
          } else {
            REQUIRE(w1.has_value());
            const RegionFlags f = classify_region(3, g, *w1);
            CHECK((jh_classify(p) == JHType::PlaneFirst ? f.in_R3k : f.in_R3l));
            CHECK(is_kl_stable(p, *w1));
          }
        }
}

TEST_CASE("s_equivalence_split") {
  const SegreProfile plane = make_profile(BundleType{3, 0}, {3, 0});
  const SegreProfile line = make_profile(BundleType{3, 0}, {0, 3});
  CHECK(s_equivalence_split(plane, line, KL{1, -1}) == std::pair<bool, bool>{true, false});
  CHECK(s_equivalence_split(plane, plane, KL{1, -1}) == std::pair<bool, bool>{true, true});
  CHECK(s_equivalence_split(plane, line, KL{0, 0}) == std::pair<bool, bool>{false, false});
  CHECK_THROWS_AS(s_equivalence_split(plane, make_profile(BundleType{3, 3}, {3, 3}), KL{0, 0}),
                  std::invalid_argument);
}

TEST_CASE("R3 is empty for rank 2") {
  for (i64 g = 2; g <= 6; ++g)
    for (i64 k = -3 * g; k <= 3 * g; ++k)
      for (i64 l = -3 * g; l <= 3 * g; ++l) {
        const RegionFlags f = classify_region(2, g, KL{k, l});
        CHECK_FALSE(f.in_R3k);
        CHECK_FALSE(f.in_R3l);
      }
}
