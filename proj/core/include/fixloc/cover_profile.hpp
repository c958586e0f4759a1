#pragma once

#include <string>
#include <utility>
#include <vector>

namespace fixloc {

struct SpecialOrbit {
  std::string id;
  long k = 1;       // orbit length
  long nprime = 1;  // ramification number n / k

  bool operator==(const SpecialOrbit&) const = default;
};

// Combinatorial data of a cyclic cover X -> Y of order n. Generic orbits
// (length n) are implicit; only special orbits are listed.
struct CoverProfile {
  long n = 1;
  long genus_base = 0;
  std::vector<SpecialOrbit> orbits;

  bool operator==(const CoverProfile&) const = default;

  // Builds a profile from (id, k) pairs, filling in nprime; validates.
  static CoverProfile make(long n, long genus_base,
                           const std::vector<std::pair<std::string, long>>& orbits);

  const SpecialOrbit& orbit(const std::string& id) const;
  bool has_orbit(const std::string& id) const;
};

void validate(const CoverProfile& profile);

long gcd_orbit_lengths(const CoverProfile& profile);

// Order of ker(pi^*: Pic Y -> Pic X). Computed as the largest d | n for which
// X/<tau^d> -> Y is unramified, which is an independent route to the gcd.
long kernel_order(const CoverProfile& profile);

struct CoverFactorization {
  CoverProfile ramified;
  long unramified_degree = 1;
};

CoverFactorization factor_cover(const CoverProfile& profile);

long orbit_length_under_power(long k, long d);

// Hyperelliptic double cover of P^1 with 2g+2 fixed points z01, z02, ...
CoverProfile hyperelliptic_profile(long g);

} // namespace fixloc
