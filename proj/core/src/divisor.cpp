#include "fixloc/divisor.hpp"

#include "fixloc/errors.hpp"
#include "fixloc/rational.hpp"

namespace fixloc {

RootExponent::RootExponent(long a_, long modulus_) : a(0), modulus(modulus_) {
  if (modulus_ < 1) throw InvalidDatum("root of unity modulus must be positive");
  a = mod_floor(a_, modulus_);
}

RootExponent RootExponent::operator*(const RootExponent& other) const {
  if (other.modulus != modulus) throw InvalidDatum("root exponents with different moduli");
  return {a + other.a, modulus};
}

RootExponent RootExponent::inverse() const { return {-a, modulus}; }

static void check_keys(const InvariantDivisor& divisor, const CoverProfile& profile) {
  for (const auto& [id, _] : divisor.residues) {
    if (!profile.has_orbit(id)) throw UnknownOrbit("divisor references unknown orbit '" + id + "'");
  }
}

long degree_on_X(const InvariantDivisor& divisor, const CoverProfile& profile) {
  check_keys(divisor, profile);
  long deg = profile.n * divisor.base_degree;
  for (const auto& [id, res] : divisor.residues) deg += res * profile.orbit(id).k;
  return deg;
}

LineNumericData numeric_data(const InvariantDivisor& divisor, const CoverProfile& profile) {
  check_keys(divisor, profile);
  LineNumericData out;
  for (const auto& o : profile.orbits) {
    auto it = divisor.residues.find(o.id);
    out[o.id] = it == divisor.residues.end() ? 0 : mod_floor(it->second, o.nprime);
  }
  return out;
}

bool is_pullback(const InvariantDivisor& divisor, const CoverProfile& profile) {
  for (const auto& [_, v] : numeric_data(divisor, profile)) {
    if (v != 0) return false;
  }
  return true;
}

long norm_degree_check(long divisor_on_Y_degree, const CoverProfile& profile) {
  return profile.n * divisor_on_Y_degree;
}

long d_mu(const RootExponent& mu, const SpecialOrbit& orbit) {
  if (mu.modulus != orbit.k * orbit.nprime)
    throw InvalidDatum("root of unity must have modulus n");
  // mu^k = exp(2 pi i a k / n) = exp(2 pi i a / n').
  return mod_floor(mu.a, orbit.nprime);
}

} // namespace fixloc
