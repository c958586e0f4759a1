#pragma once

#include "fixloc/cover_profile.hpp"
#include "fixloc/equivariant.hpp"

#include <random>

namespace fixloc {

using Rng = std::mt19937_64;

inline constexpr unsigned long long kDefaultSeed = 20240917ULL;

// Random valid profile with 1 < n <= max_n and at most max_orbits special
// orbits. With even_n the order is forced even.
CoverProfile random_profile(Rng& rng, long max_n, int max_orbits, bool even_n = false);

// Random determinant lift whose degree makes every element of Lambda integral.
DeterminantLift random_det(Rng& rng, const CoverProfile& profile);

// Random element of some Lambda_Delta together with its determinant.
Rank2EqData random_rank2_data(Rng& rng, const CoverProfile& profile);

} // namespace fixloc
