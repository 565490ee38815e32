#pragma once

#include "flop/rational.hpp"
#include "flop/reps.hpp"

#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace flop {

using DimVec = std::pair<int, int>;

// Central charges of the two vertex simples.
struct StabilityParams {
  CQ z0;
  CQ z1;
};

enum class Chamber { Zeta0Greater, Zeta1Greater, Wall };

// Phase in (0, pi]: Im > 0, or Im = 0 and Re < 0.
bool admissible(const CQ& z);
// Throws std::invalid_argument on a non-admissible z0 or z1.
void validate(const StabilityParams& p);
bool on_wall(const StabilityParams& p);
Chamber chamber(const StabilityParams& p);
std::string chamber_name(Chamber c);

// arg u < arg v, exactly. Throws on zero or non-admissible input.
bool phase_lt(const CQ& u, const CQ& v);
CQ central_charge(const DimVec& d, const StabilityParams& p);
CQ central_charge(const Representation& r, const StabilityParams& p);

// Subrepresentation as a pair of subspaces given by bases.
struct SubRep {
  std::vector<Vec> v0;
  std::vector<Vec> v1;
  DimVec dims() const { return {static_cast<int>(v0.size()), static_cast<int>(v1.size())}; }
};

bool is_subrep(const Representation& r, const SubRep& s);
// Smallest subrepresentation containing the given vectors.
SubRep generated_subrep(const Representation& r, std::vector<Vec> g0, std::vector<Vec> g1);
// Exact candidates: generated by basis vectors, images and kernels of paths up to length 4,
// radical and socle layers. Proper and nonzero, deduplicated.
std::vector<SubRep> candidate_subreps(const Representation& r);

enum class VerdictKind { Stable, SemistableOnly, Unstable, Undetermined };

struct StabilityVerdict {
  VerdictKind kind = VerdictKind::Undetermined;
  std::vector<int> primes;     // Stable: primes whose scans certify it
  std::optional<SubRep> witness;  // Unstable / SemistableOnly
  std::vector<DimVec> flagged;    // Undetermined
  std::string describe() const;
};

std::string verdict_name(VerdictKind k);

StabilityVerdict is_stable(const Representation& r, const StabilityParams& p);

}  // namespace flop
