#pragma once

#include "flop/reps.hpp"
#include "flop/stability.hpp"

#include <map>
#include <vector>

namespace flop {

inline constexpr int kScanMaxDim = 4;
inline constexpr int kScanMaxBound = 5;

// Realized sub-dimension vectors over F_p with the number of subrepresentations of each.
// Arrows are first rescaled to primitive integer matrices, which keeps the lattice of
// rational subrepresentations. Throws if a dimension exceeds kScanMaxDim or p is not 2, 3 or 5.
std::map<DimVec, long> subrep_scan_Fp(const Representation& r, int p);

// Exhaustive scan of all F_2 representations with d0 + d1 <= bound that satisfy the
// relations and are nilpotent. Returns each dimension vector admitting a stable one,
// with the number found. Only geometrically stable ones count: stable over F_2 and
// End = F_2. Throws on the wall or bound > 5.
std::map<DimVec, long> stable_dimvector_scan(const StabilityParams& p, int bound);

}  // namespace flop
