#include "fixloc/equivariant.hpp"

#include "fixloc/errors.hpp"

#include <algorithm>

namespace fixloc {

namespace {

void check_keys(const std::vector<std::string>& keys, const CoverProfile& profile, const char* what) {
  if (keys.size() != profile.orbits.size())
    throw InvalidDatum(std::string(what) + " must cover exactly the special orbits");
  for (const auto& k : keys) {
    if (!profile.has_orbit(k)) throw UnknownOrbit(std::string(what) + " references '" + k + "'");
  }
}

template <class Map>
std::vector<std::string> keys_of(const Map& m) {
  std::vector<std::string> out;
  for (const auto& [k, _] : m) out.push_back(k);
  return out;
}

// n' * w as an integer; throws if the denominator does not divide n'.
long scaled_weight(const Rational& w, long nprime, const std::string& id) {
  Rational s = w * nprime;
  if (s.get_den() != 1)
    throw InvalidDatum("weight at '" + id + "' has denominator not dividing n'");
  return s.get_num().get_si();
}

} // namespace

void validate(const DeterminantLift& det, const CoverProfile& profile) {
  check_keys(keys_of(det.residues), profile, "determinant residues");
  for (const auto& o : profile.orbits) {
    long r = det.residues.at(o.id);
    if (r < 0 || r >= o.nprime) throw InvalidDatum("determinant residue out of range at '" + o.id + "'");
  }
  if (profile.n % 2 == 1 && det.sign != LiftSign::Plus)
    throw InvalidDatum("lift sign must be + when n is odd");
}

void validate(const Rank2EqData& data, const CoverProfile& profile) {
  validate(data.det, profile);
  check_keys(keys_of(data.numeric), profile, "numeric data");
  for (const auto& o : profile.orbits) {
    auto [d1, d2] = data.numeric.at(o.id);
    if (!(0 <= d1 && d1 <= d2 && d2 < o.nprime))
      throw InvalidDatum("numeric pair at '" + o.id + "' is not in T_n'");
    if (mod_floor(d1 + d2 - data.det.residues.at(o.id), o.nprime) != 0)
      throw InvalidDatum("d1 + d2 is not congruent to the determinant residue at '" + o.id + "'");
  }
}

void validate(const AdmissibleParabolicDatum& pdat, const CoverProfile& profile) {
  check_keys(keys_of(pdat.weights), profile, "weights");
  check_keys(keys_of(pdat.d2), profile, "d2");
  for (const auto& o : profile.orbits) {
    const Rational& w = pdat.weights.at(o.id);
    if (w < 0 || w >= 1) throw InvalidDatum("weight outside [0,1) at '" + o.id + "'");
    long nw = scaled_weight(w, o.nprime, o.id);
    long d2 = pdat.d2.at(o.id);
    if (d2 < 0 || d2 >= o.nprime) throw InvalidDatum("d2 out of range at '" + o.id + "'");
    if (d2 - nw < 0) throw InvalidDatum("derived d1 is negative at '" + o.id + "'");
  }
  if (profile.n % 2 == 1 && pdat.det_lift_sign != LiftSign::Plus)
    throw InvalidDatum("lift sign must be + when n is odd");
}

std::vector<NumericData> enumerate_lambda(const DeterminantLift& det, const CoverProfile& profile) {
  validate(det, profile);
  std::vector<NumericData> out{NumericData{}};
  for (const auto& o : profile.orbits) {
    std::vector<NumericPair> choices;
    for (long d1 = 0; d1 < o.nprime; ++d1) {
      for (long d2 = d1; d2 < o.nprime; ++d2) {
        if (mod_floor(d1 + d2 - det.residues.at(o.id), o.nprime) == 0) choices.emplace_back(d1, d2);
      }
    }
    std::vector<NumericData> next;
    next.reserve(out.size() * choices.size());
    for (const auto& partial : out) {
      for (const auto& c : choices) {
        NumericData extended = partial;
        extended[o.id] = c;
        next.push_back(std::move(extended));
      }
    }
    out = std::move(next);
  }
  return out;
}

WeightMap weight_system(const NumericData& numeric, const CoverProfile& profile) {
  WeightMap w;
  for (const auto& [id, pair] : numeric) {
    const auto& o = profile.orbit(id);
    w[id] = make_rational(pair.second - pair.first, o.nprime);
  }
  return w;
}

long bar_delta_degree(const DeterminantLift& det, const NumericData& numeric, const CoverProfile& profile) {
  long num = det.degree;
  for (const auto& [id, pair] : numeric) num -= (pair.first + pair.second) * profile.orbit(id).k;
  if (num % profile.n != 0)
    throw NonIntegralDegree("deg Delta - sum (d1+d2)k = " + std::to_string(num) +
                            " is not divisible by n = " + std::to_string(profile.n));
  return num / profile.n;
}

namespace {

// Keeps the tracked exponent, shifts the other by -m, re-sorts. Returns the
// sorted position of the tracked exponent afterwards.
FlagChoice shift_pair(NumericPair& pair, long nprime, FlagChoice choice, long m) {
  long tracked = choice == FlagChoice::First ? pair.first : pair.second;
  long other = choice == FlagChoice::First ? pair.second : pair.first;
  other = mod_floor(other - m, nprime);
  pair = {std::min(tracked, other), std::max(tracked, other)};
  return tracked <= other ? FlagChoice::First : FlagChoice::Second;
}

} // namespace

Rank2EqData elementary_modification(const Rank2EqData& data, const CoverProfile& profile,
                                    const std::string& orbit, FlagChoice direction, bool inverse) {
  const auto& o = profile.orbit(orbit);
  const long m = inverse ? -1 : 1;
  Rank2EqData out = data;
  shift_pair(out.numeric.at(orbit), o.nprime, direction, m);
  out.det.residues.at(orbit) = mod_floor(out.det.residues.at(orbit) - m, o.nprime);
  out.det.degree -= m * o.k;
  return out;
}

GammaResult gamma_apply_tracked(const Rank2EqData& data, const CoverProfile& profile,
                                const std::map<std::string, long>& m, const FlagSelector& flags) {
  GammaResult res{data, flags};
  for (const auto& [id, mult] : m) {
    const auto& o = profile.orbit(id);
    if (mult == 0) continue;
    auto f = flags.find(id);
    if (f == flags.end()) throw InvalidDatum("flag selector missing at '" + id + "' where m != 0");
    res.induced[id] = shift_pair(res.data.numeric.at(id), o.nprime, f->second, mult);
    res.data.det.residues.at(id) = mod_floor(res.data.det.residues.at(id) - mult, o.nprime);
    res.data.det.degree -= mult * o.k;
  }
  return res;
}

Rank2EqData gamma_apply(const Rank2EqData& data, const CoverProfile& profile,
                        const std::map<std::string, long>& m, const FlagSelector& flags) {
  return gamma_apply_tracked(data, profile, m, flags).data;
}

AdmissibleParabolicDatum to_parabolic(const Rank2EqData& data, const CoverProfile& profile) {
  validate(data, profile);
  AdmissibleParabolicDatum p;
  p.det_bar_degree = bar_delta_degree(data.det, data.numeric, profile);
  p.weights = weight_system(data.numeric, profile);
  for (const auto& [id, pair] : data.numeric) p.d2[id] = pair.second;
  p.det_lift_sign = data.det.sign;
  return p;
}

Rank2EqData from_parabolic(const AdmissibleParabolicDatum& pdat, const CoverProfile& profile) {
  validate(pdat, profile);
  Rank2EqData out;
  out.det.sign = pdat.det_lift_sign;
  long degree = profile.n * pdat.det_bar_degree;
  for (const auto& o : profile.orbits) {
    long nw = scaled_weight(pdat.weights.at(o.id), o.nprime, o.id);
    long d2 = pdat.d2.at(o.id);
    long d1 = d2 - nw;
    out.numeric[o.id] = {d1, d2};
    out.det.residues[o.id] = mod_floor(d1 + d2, o.nprime);
    degree += -nw * o.k + 2 * d2 * o.k;
  }
  out.det.degree = degree;
  return out;
}

std::vector<std::map<std::string, long>> solve_d2(const DeterminantLift& det, const WeightMap& weights,
                                                  const CoverProfile& profile) {
  validate(det, profile);
  check_keys(keys_of(weights), profile, "weights");
  std::vector<std::map<std::string, long>> out{{}};
  for (const auto& o : profile.orbits) {
    long nw = scaled_weight(weights.at(o.id), o.nprime, o.id);
    std::vector<long> sols;
    for (long d2 = 0; d2 < o.nprime; ++d2) {
      if (mod_floor(det.residues.at(o.id) + nw - 2 * d2, o.nprime) == 0 && d2 - nw >= 0) sols.push_back(d2);
    }
    if (sols.empty()) throw NoSolution("no d2 solves the congruence at '" + o.id + "'");
    std::vector<std::map<std::string, long>> next;
    for (const auto& partial : out) {
      for (long s : sols) {
        auto extended = partial;
        extended[o.id] = s;
        next.push_back(std::move(extended));
      }
    }
    out = std::move(next);
  }
  return out;
}

} // namespace fixloc
