#include "fixloc/sampling.hpp"

#include <string>
#include <vector>

namespace fixloc {

namespace {

long uniform(Rng& rng, long lo, long hi) { return std::uniform_int_distribution<long>(lo, hi)(rng); }

} // namespace

CoverProfile random_profile(Rng& rng, long max_n, int max_orbits, bool even_n) {
  long n;
  do {
    n = uniform(rng, 2, max_n);
  } while (even_n && n % 2);
  std::vector<long> proper;
  for (long k = 1; k < n; ++k) {
    if (n % k == 0) proper.push_back(k);
  }
  const int count = static_cast<int>(uniform(rng, 0, max_orbits));
  std::vector<std::pair<std::string, long>> orbits;
  for (int i = 0; i < count; ++i) {
    orbits.emplace_back("y" + std::to_string(i + 1), proper[uniform(rng, 0, proper.size() - 1)]);
  }
  return CoverProfile::make(n, uniform(rng, 0, 3), orbits);
}

DeterminantLift random_det(Rng& rng, const CoverProfile& profile) {
  DeterminantLift det;
  long degree = profile.n * uniform(rng, -4, 4);
  for (const auto& o : profile.orbits) {
    const long r = uniform(rng, 0, o.nprime - 1);
    det.residues[o.id] = r;
    degree += r * o.k;
  }
  det.degree = degree;
  if (profile.n % 2 == 0 && uniform(rng, 0, 1)) det.sign = LiftSign::Minus;
  return det;
}

Rank2EqData random_rank2_data(Rng& rng, const CoverProfile& profile) {
  Rank2EqData data;
  data.det = random_det(rng, profile);
  for (const auto& o : profile.orbits) {
    std::vector<NumericPair> choices;
    for (long d1 = 0; d1 < o.nprime; ++d1) {
      for (long d2 = d1; d2 < o.nprime; ++d2) {
        if (mod_floor(d1 + d2 - data.det.residues.at(o.id), o.nprime) == 0) choices.emplace_back(d1, d2);
      }
    }
    data.numeric[o.id] = choices[uniform(rng, 0, choices.size() - 1)];
  }
  return data;
}

} // namespace fixloc
