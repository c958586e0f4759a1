#include "fixloc/cover_profile.hpp"

#include "fixloc/errors.hpp"

#include <cstdio>
#include <numeric>
#include <set>

namespace fixloc {

CoverProfile CoverProfile::make(long n, long genus_base,
                                const std::vector<std::pair<std::string, long>>& orbits) {
  CoverProfile p;
  p.n = n;
  p.genus_base = genus_base;
  for (const auto& [id, k] : orbits) {
    p.orbits.push_back({id, k, (k > 0 && n % k == 0) ? n / k : 0});
  }
  validate(p);
  return p;
}

const SpecialOrbit& CoverProfile::orbit(const std::string& id) const {
  for (const auto& o : orbits) {
    if (o.id == id) return o;
  }
  throw UnknownOrbit("no orbit labelled '" + id + "'");
}

bool CoverProfile::has_orbit(const std::string& id) const {
  for (const auto& o : orbits) {
    if (o.id == id) return true;
  }
  return false;
}

void validate(const CoverProfile& profile) {
  if (profile.n < 1) throw InvalidProfile("n must be positive");
  if (profile.genus_base < 0) throw InvalidProfile("genus_base must be non-negative");
  std::set<std::string> seen;
  for (const auto& o : profile.orbits) {
    if (!seen.insert(o.id).second) throw InvalidProfile("duplicate orbit label '" + o.id + "'");
    if (o.k < 1) throw InvalidProfile("orbit '" + o.id + "' has non-positive length");
    if (profile.n % o.k != 0)
      throw InvalidProfile("orbit '" + o.id + "': k=" + std::to_string(o.k) +
                           " does not divide n=" + std::to_string(profile.n));
    if (o.k == profile.n) throw InvalidProfile("orbit '" + o.id + "' has generic length n");
    if (o.nprime != profile.n / o.k)
      throw InvalidProfile("orbit '" + o.id + "': nprime inconsistent with n/k");
  }
}

long gcd_orbit_lengths(const CoverProfile& profile) {
  long r = profile.n;
  for (const auto& o : profile.orbits) r = std::gcd(r, o.k);
  return r;
}

long orbit_length_under_power(long k, long d) { return k / std::gcd(d, k); }

long kernel_order(const CoverProfile& profile) {
  // X/<tau^d> -> Y has fibre length gcd(d, k) over an orbit of length k; it
  // is unramified iff that equals d everywhere.
  long best = 1;
  for (long d = 1; d <= profile.n; ++d) {
    if (profile.n % d != 0) continue;
    bool unramified = true;
    for (const auto& o : profile.orbits) {
      if (o.k / orbit_length_under_power(o.k, d) != d) {
        unramified = false;
        break;
      }
    }
    if (unramified) best = d;
  }
  return best;
}

CoverFactorization factor_cover(const CoverProfile& profile) {
  const long r = gcd_orbit_lengths(profile);
  CoverFactorization f;
  f.unramified_degree = r;
  f.ramified.n = profile.n / r;
  f.ramified.genus_base = profile.genus_base;
  for (const auto& o : profile.orbits) {
    f.ramified.orbits.push_back({o.id, o.k / r, o.nprime});
  }
  return f;
}

CoverProfile hyperelliptic_profile(long g) {
  if (g < 0) throw InvalidGenus("genus must be non-negative");
  std::vector<std::pair<std::string, long>> orbits;
  for (long i = 1; i <= 2 * g + 2; ++i) {
    char buf[24];
    std::snprintf(buf, sizeof buf, "z%02ld", i);
    orbits.emplace_back(buf, 1);
  }
  return CoverProfile::make(2, 0, orbits);
}

} // namespace fixloc
