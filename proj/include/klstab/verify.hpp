#pragma once

#include "klstab/types.hpp"

#include <optional>
#include <string>
#include <vector>

namespace klstab {

enum class VerifyScope { Nonempty, Dims, Table, Rank2, JH, BN, All };

std::optional<VerifyScope> parse_scope(const std::string& name);

struct VerifyReport {
  std::string scope;
  bool passed = true;
  i64 checked = 0;
  std::vector<std::string> mismatches;
};

/// Runs the oracle equivalences for one scope (or all of them):
///   nonempty  sweep_nonempty == nonempty, n <= 4, g <= 4, |k|,|l| <= n*g
///   dims      sweep_complement_dim == complement_dims on n <= 3, g <= 5,
///             rank-2 closed forms, and the codimension floor up to n=4, g=6
///   table     rank3_table against the frozen reference cells, g in 2..20
///   rank2     rank2_nonempty against the general rule, plus the parity
///             equalities of the t-chain over all enumerated profiles
///   jh        filtration-type trichotomy against exhaustive witness search
///   bn        the worked section-count exclusions and forced strata
std::vector<VerifyReport> run_verification(VerifyScope scope, i64 max_sweep_points = 10000);

/// Frozen strict-bound offsets relative to 2g for the rank-3 nonemptiness
/// table, indexed [d mod 3][g mod 3][0: 2k+l bound, 1: k+2l bound].
extern const i64 kRank3BoundOffsets[3][3][2];

}  // namespace klstab
