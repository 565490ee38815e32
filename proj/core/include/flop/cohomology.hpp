#pragma once

#include "flop/complex.hpp"
#include "flop/reps.hpp"

#include <cstdint>
#include <map>

namespace flop {

// Cohomology modules of C tensored with the truncated algebra, keyed by degree after the
// [3] shift (generator degree minus 3). Only internal-degree pieces whose path lengths stay
// at most N - 3 are kept; degrees below C.complete_from are skipped.
std::map<int, Representation> complex_cohomology_at(const FreeComplex& c, int N);

// As above, and requires the answer at N + 1 to agree up to isomorphism.
// Throws std::runtime_error on a stabilization failure.
std::map<int, Representation> free_complex_cohomology(const FreeComplex& c, int N, std::uint64_t seed = 0);

// Internal-degree shift per generator, normalized to minimum 0 on each connected piece.
std::vector<int> internal_shifts(const FreeComplex& c);

}  // namespace flop
