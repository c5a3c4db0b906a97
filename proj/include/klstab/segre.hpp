#pragma once

#include "klstab/types.hpp"

namespace klstab {

/// dim M(n,d) = n^2(g-1) + 1.
i64 moduli_dimension(i64 n, i64 g);

/// Universal upper bound m(n-m)(g-1) + (n-1) on the m-th Segre invariant.
i64 hirschowitz_bound(i64 n, i64 g, i64 m);

/// The unique delta in {0, ..., n-1} with m(n-m)(g-1) + delta == m*d (mod n).
i64 delta_m(i64 n, i64 d, i64 g, i64 m);

/// m(n-m)(g-1) + delta_m: the sharp, congruence-aware bound on s_m.
/// It is attained by the general bundle of that rank and degree.
i64 generic_segre_bound(i64 n, i64 d, i64 g, i64 m);

/// Profile of the general bundle: every entry at its generic bound.
SegreProfile generic_profile(const BundleType& b, i64 g);

/// Locus of stable bundles with prescribed m-th Segre invariant s.
struct StratumSpec {
  BundleType bundle;
  i64 genus = 2;
  i64 m = 1;
  i64 s = 0;
};

/// n^2(g-1) + 1 + s - m(n-m)(g-1).
///
/// Valid for 0 < s <= m(n-m)(g-1) with s == m*d (mod n); throws
/// std::domain_error when s falls outside that range (in particular in the
/// band between m(n-m)(g-1) and the generic bound, which callers must
/// handle themselves).
i64 stratum_dimension(const StratumSpec& spec);

}  // namespace klstab
