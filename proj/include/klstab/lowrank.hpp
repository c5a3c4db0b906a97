#pragma once

#include "klstab/regions.hpp"

#include <array>

namespace klstab {

// ---------------------------------------------------------------------------
// Rank 2. Stability only sees t = k + l, so the whole (k,l) plane collapses
// to a single integer parameter.
// ---------------------------------------------------------------------------

/// s_1 > t; agrees with is_kl_stable(p, (k,l)) for every split k + l = t.
bool t_stable(const SegreProfile& p, i64 t);

/// Some rank-2 degree-d bundle is t-stable: t <= g-1 when g == d (mod 2),
/// t < g-1 otherwise.
bool rank2_nonempty(i64 d, i64 g, i64 t);

/// 1 - 2g; every indecomposable rank-2 bundle is t-stable for t at or
/// below this value.
i64 rank2_indecomposable_floor(i64 g);

struct Rank2Dims {
  i64 dim = 0;
  i64 codim = 0;
};

/// Closed-form dimension of the non-t-stable locus inside the rank-2
/// moduli space: 3g+t-2 when t == d (mod 2), else 3g+t-3. The codimension
/// is always reported as dim M(2,d) - dim = (4g-3) - dim. Requires
/// 0 <= t <= g-1.
Rank2Dims rank2_complement_dims(i64 d, i64 g, i64 t);

/// Relation between consecutive sets A_t and A_{t+1} in the chain
/// A_t \subseteq A_{t-1} \subseteq ...
enum class ChainRelation {
  EqualParity,  // no Segre value of the right parity separates them
  Strict,       // A_t strictly contains A_{t+1}
  BothEmpty,    // at or above the emptiness threshold
};

struct Rank2ChainLink {
  i64 t = 0;
  ChainRelation relation = ChainRelation::Strict;
};

struct Rank2Chain {
  i64 d = 0;
  i64 g = 2;
  i64 empty_from = 0;            // A_t is empty exactly for t >= empty_from
  i64 full_moduli_t = 0;         // A_0 is the whole moduli space
  i64 indecomposable_floor = 0;  // every indecomposable is t-stable for t <= this
  std::vector<Rank2ChainLink> links;  // t from g down to 1-2g
};

Rank2Chain rank2_chain(i64 d, i64 g);

const char* to_string(ChainRelation r);

// ---------------------------------------------------------------------------
// Rank 3.
// ---------------------------------------------------------------------------

/// Strict bounds B1, B2 such that a (k,l)-stable bundle of rank 3 and
/// degree d exists iff 2k+l < B1 and k+2l < B2.
struct Rank3Row {
  i64 d_mod_3 = 0;
  i64 bound_2k_l = 0;
  i64 bound_k_2l = 0;
};

struct Rank3Table {
  i64 g = 2;
  std::array<Rank3Row, 3> rows;
};

Rank3Table rank3_table(i64 g);

/// Shape of the maximal filtration of a strictly semistable rank-3 bundle,
/// read off from which profile entries vanish:
///   LineFirst  (s1 = 0 < s2): 0 c L c E
///   PlaneFirst (s2 = 0 < s1): 0 c F c E
///   FullFlag   (s1 = s2 = 0): 0 c L c F c E
enum class JHType { LineFirst, PlaneFirst, FullFlag };

const char* to_string(JHType t);

/// Requires a valid strictly semistable rank-3 profile with 3 | d.
JHType jh_classify(const SegreProfile& p);

/// Deterministic search for a point of R3k (PlaneFirst) or R3l (LineFirst)
/// where the profile is (k,l)-stable; absent for FullFlag, which is stable
/// nowhere on R3. Lattice points are scanned by increasing |k|+|l|, then k,
/// then l, over |k|,|l| <= window (default 3g).
std::optional<KL> jh_region_witness(const SegreProfile& p, i64 g);
std::optional<KL> jh_region_witness(const SegreProfile& p, i64 g, i64 window);

/// Evaluates (k,l)-stability on two profiles of the same type; used to
/// exhibit S-equivalent strictly semistable pairs that a single (k,l)
/// separates. Throws if the types differ.
std::pair<bool, bool> s_equivalence_split(const SegreProfile& p, const SegreProfile& q,
                                          const KL& kl);

}  // namespace klstab
