#pragma once

#include "fixloc/cover_profile.hpp"

#include <map>
#include <string>

namespace fixloc {

// exp(2 pi i a / modulus), normalised so that 0 <= a < modulus.
struct RootExponent {
  long a = 0;
  long modulus = 1;

  RootExponent() = default;
  RootExponent(long a_, long modulus_);

  RootExponent operator*(const RootExponent& other) const;
  RootExponent inverse() const;
  bool operator==(const RootExponent&) const = default;
};

// A tau-invariant divisor: sum of residues(y) * pi^{-1}(y) plus the pullback
// of a divisor of degree base_degree on Y.
struct InvariantDivisor {
  std::map<std::string, long> residues;
  long base_degree = 0;

  static InvariantDivisor pullback(long base_degree) { return {{}, base_degree}; }
};

using LineNumericData = std::map<std::string, long>;

long degree_on_X(const InvariantDivisor& divisor, const CoverProfile& profile);
LineNumericData numeric_data(const InvariantDivisor& divisor, const CoverProfile& profile);
bool is_pullback(const InvariantDivisor& divisor, const CoverProfile& profile);
long norm_degree_check(long divisor_on_Y_degree, const CoverProfile& profile);

// Exponent d in [0, n') with xi^d = mu^k, where xi = exp(2 pi i / n').
long d_mu(const RootExponent& mu, const SpecialOrbit& orbit);

} // namespace fixloc
