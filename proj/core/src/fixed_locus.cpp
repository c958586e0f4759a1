#include "fixloc/fixed_locus.hpp"

#include "fixloc/errors.hpp"

#include <algorithm>
#include <deque>
#include <tuple>

namespace fixloc {

GradedPoint GradedPoint::make(GradedLine a, GradedLine b, DeterminantLift det, NumericData numeric) {
  if (b < a) std::swap(a, b);
  return {{std::move(a), std::move(b)}, std::move(det), std::move(numeric)};
}

bool GradedPoint::operator<(const GradedPoint& o) const {
  return std::tie(summands, det.residues, det.degree, det.sign, numeric) <
         std::tie(o.summands, o.det.residues, o.det.degree, o.det.sign, o.numeric);
}

void validate(const GradedPoint& pt, const CoverProfile& profile) {
  validate(Rank2EqData{pt.numeric, pt.det}, profile);
  const auto weights = weight_system(pt.numeric, profile);
  for (const auto& o : profile.orbits) {
    const bool s0 = pt.summands[0].support.count(o.id) > 0;
    const bool s1 = pt.summands[1].support.count(o.id) > 0;
    if (s0 && s1) throw InvalidDatum("supports overlap at '" + o.id + "'");
    if ((weights.at(o.id) != 0) != (s0 || s1))
      throw InvalidDatum("supports do not partition the weighted orbits at '" + o.id + "'");
  }
  for (const auto& s : pt.summands) {
    for (const auto& id : s.support) profile.orbit(id);
  }
  const long bar = bar_delta_degree(pt.det, pt.numeric, profile);
  if (pt.summands[0].bar_degree + pt.summands[1].bar_degree != bar)
    throw InvalidDatum("summand degrees do not add up to deg of the descended determinant");
  Rational pa[2];
  for (int nu = 0; nu < 2; ++nu) {
    pa[nu] = pt.summands[nu].bar_degree;
    for (const auto& id : pt.summands[nu].support) pa[nu] += weights.at(id);
  }
  if (pa[0] != pa[1]) throw InvalidDatum("summands have different parabolic degrees");
}

namespace {

struct Exponents {
  std::array<std::map<std::string, long>, 2> e;
  std::array<long, 2> upstairs{};  // degrees of the summands on X
};

// Upstairs exponents: the summand carrying the flag at y has exponent d2(y),
// the other d1(y).
Exponents exponents_of(const GradedPoint& pt, const CoverProfile& profile) {
  Exponents ex;
  for (int nu = 0; nu < 2; ++nu) {
    long up = profile.n * pt.summands[nu].bar_degree;
    for (const auto& o : profile.orbits) {
      const auto [d1, d2] = pt.numeric.at(o.id);
      const long v = pt.summands[nu].support.count(o.id) ? d2 : d1;
      ex.e[nu][o.id] = v;
      up += o.k * v;
    }
    ex.upstairs[nu] = up;
  }
  return ex;
}

GradedPoint rebuild(const Exponents& ex, DeterminantLift det, const CoverProfile& profile) {
  NumericData numeric;
  std::array<GradedLine, 2> lines;
  for (int nu = 0; nu < 2; ++nu) {
    long num = ex.upstairs[nu];
    for (const auto& o : profile.orbits) num -= o.k * ex.e[nu].at(o.id);
    if (num % profile.n != 0)
      throw NonIntegralDegree("translated summand has non-integral degree on Y; the branch data do not "
                              "admit the twisting root with these residues");
    lines[nu].bar_degree = num / profile.n;
  }
  for (const auto& o : profile.orbits) {
    const long a = ex.e[0].at(o.id), b = ex.e[1].at(o.id);
    numeric[o.id] = {std::min(a, b), std::max(a, b)};
    if (a > b) lines[0].support.insert(o.id);
    if (b > a) lines[1].support.insert(o.id);
  }
  return GradedPoint::make(std::move(lines[0]), std::move(lines[1]), std::move(det), std::move(numeric));
}

void require_even(const CoverProfile& profile) {
  if (profile.n % 2 != 0) throw OddOrder("operation requires n even, got n = " + std::to_string(profile.n));
}

} // namespace

Rank2EqData zeta2_apply(const Rank2EqData& data, const CoverProfile& profile) {
  require_even(profile);
  validate(data, profile);
  Rank2EqData out = data;
  for (const auto& o : profile.orbits) {
    if (o.k % 2 == 0) continue;
    const long h = o.nprime / 2;
    auto& [d1, d2] = out.numeric.at(o.id);
    if (d2 < h) {
      d1 += h;
      d2 += h;
    } else if (d1 >= h) {
      d1 -= h;
      d2 -= h;
    } else {
      const long old1 = d1;
      d1 = d2 - h;
      d2 = old1 + h;
    }
  }
  return out;
}

AdmissibleParabolicDatum zeta2_parabolic(const AdmissibleParabolicDatum& pdat, const CoverProfile& profile) {
  require_even(profile);
  validate(pdat, profile);
  AdmissibleParabolicDatum out = pdat;
  long swaps = 0;
  Rational twist = 0;  // n * deg of the twisting line bundle
  for (const auto& o : profile.orbits) {
    if (o.k % 2 == 0) continue;
    const long h = o.nprime / 2;
    const Rational& w = pdat.weights.at(o.id);
    const long nw = Rational(w * o.nprime).get_num().get_si();
    const long d2 = pdat.d2.at(o.id);
    const long d1 = d2 - nw;
    long d2_new;
    if (d2 < h) {
      d2_new = d2 + h;
    } else if (d1 >= h) {
      d2_new = d2 - h;
    } else {
      d2_new = d1 + h;
      out.weights[o.id] = 1 - w;
      ++swaps;
      twist -= o.k * nw;
    }
    twist += o.k * (d2 - d2_new);
    out.d2[o.id] = d2_new;
  }
  Rational shift = Rational(swaps) + 2 * twist / profile.n;
  if (shift.get_den() != 1) throw NonIntegralDegree("twist by the zeta_2 line bundle is not integral");
  out.det_bar_degree += shift.get_num().get_si();
  return out;
}

GradedPoint zeta2_graded(const GradedPoint& pt, const CoverProfile& profile) {
  require_even(profile);
  const RootExponent minus_one(profile.n / 2, profile.n);
  Exponents ex = exponents_of(pt, profile);
  for (const auto& o : profile.orbits) {
    const long s = d_mu(minus_one, o);
    for (int nu = 0; nu < 2; ++nu) ex.e[nu][o.id] = mod_floor(ex.e[nu][o.id] + s, o.nprime);
  }
  return rebuild(ex, pt.det, profile);
}

GradedPoint sim_o_step(const GradedPoint& pt, const RootExponent& mu, const CoverProfile& profile) {
  Exponents ex = exponents_of(pt, profile);
  for (const auto& o : profile.orbits) {
    const long s = d_mu(mu, o);
    ex.e[0][o.id] = mod_floor(ex.e[0][o.id] + s, o.nprime);
    ex.e[1][o.id] = mod_floor(ex.e[1][o.id] - s, o.nprime);
  }
  return rebuild(ex, pt.det, profile);
}

GradedPoint sim_e_step(const GradedPoint& pt, const CoverProfile& profile, int which) {
  require_even(profile);
  const RootExponent mu = pt.det.sign == LiftSign::Plus ? RootExponent(1, profile.n)
                                                        : RootExponent(profile.n - 1, profile.n);
  Exponents ex = exponents_of(pt, profile);
  DeterminantLift det = pt.det;
  det.sign = flip(det.sign);
  for (const auto& o : profile.orbits) {
    const long s = d_mu(mu, o);
    ex.e[which][o.id] = mod_floor(ex.e[which][o.id] + s, o.nprime);
    det.residues[o.id] = mod_floor(det.residues[o.id] + s, o.nprime);
  }
  return rebuild(ex, std::move(det), profile);
}

std::vector<std::vector<GradedPoint>> equivalence_classes(const std::vector<GradedPoint>& points,
                                                          const CoverProfile& profile) {
  const bool even = profile.n % 2 == 0;
  auto neighbours = [&](const GradedPoint& p) {
    std::vector<GradedPoint> out;
    for (long a = 1; a < profile.n; ++a) out.push_back(sim_o_step(p, RootExponent(a, profile.n), profile));
    if (even) {
      out.push_back(sim_e_step(p, profile, 0));
      out.push_back(sim_e_step(p, profile, 1));
      out.push_back(zeta2_graded(p, profile));
    }
    return out;
  };
  std::set<GradedPoint> seen;
  std::vector<std::vector<GradedPoint>> classes;
  for (const auto& start : points) {
    if (seen.count(start)) continue;
    std::set<GradedPoint> cls{start};
    std::deque<GradedPoint> work{start};
    seen.insert(start);
    while (!work.empty()) {
      GradedPoint cur = std::move(work.front());
      work.pop_front();
      for (auto& nb : neighbours(cur)) {
        if (seen.insert(nb).second) {
          cls.insert(nb);
          work.push_back(std::move(nb));
        }
      }
    }
    classes.emplace_back(cls.begin(), cls.end());
  }
  std::sort(classes.begin(), classes.end());
  return classes;
}

bool s_i_possible(const CoverProfile& profile) { return gcd_orbit_lengths(profile) % 2 == 0; }

const char* case_name(DecompositionCase c) {
  switch (c) {
    case DecompositionCase::Odd: return "n odd";
    case DecompositionCase::EvenROdd: return "n even, r odd";
    case DecompositionCase::EvenREven: return "n even, r even";
  }
  return "?";
}

DecompositionReport decomposition_report(const CoverProfile& profile) {
  validate(profile);
  DecompositionReport rep;
  rep.n = profile.n;
  rep.r = gcd_orbit_lengths(profile);
  rep.n_parity = profile.n % 2 ? "odd" : "even";
  rep.r_parity = rep.r % 2 ? "odd" : "even";
  rep.statements.push_back("F: P_a -> |M| is surjective with finite fibres");
  if (profile.n % 2) {
    rep.tag = DecompositionCase::Odd;
    rep.statements.push_back("P_a^s -> |M^s| is a bijection");
    rep.statements.push_back("P_a^ss / ~o -> |M^ss| is a bijection");
  } else {
    rep.statements.push_back("F factors through the zeta_2 quotient Pbar_a = P_a / zeta_2");
    rep.statements.push_back("Pbar_a^{s,g} -> |M^s| is a bijection");
    if (rep.r % 2) {
      rep.tag = DecompositionCase::EvenROdd;
      rep.statements.push_back("Pbar_a^{s,i} is empty");
      rep.statements.push_back("Pbar_a^ss / ~e -> |M^ss| is a bijection");
    } else {
      rep.tag = DecompositionCase::EvenREven;
      rep.statements.push_back("Pbar_a^{s,i} disjoint union (Pbar_a^ss / ~e) -> |M^ss| is a bijection");
    }
  }
  return rep;
}

CensusRecord unramified_census(long n, long deg_delta, long genus_Y) {
  if (n < 1) throw InconsistentDegrees("n must be positive");
  if (genus_Y < 0) throw InconsistentDegrees("genus of Y must be non-negative");
  if (deg_delta % n != 0)
    throw InconsistentDegrees("deg Delta = " + std::to_string(deg_delta) + " is not divisible by n = " +
                              std::to_string(n) + "; an unramified cover has deg Delta = n deg Delta_bar");
  CensusRecord rec{n, deg_delta, genus_Y, {}, {}, {}};
  const std::string g = std::to_string(genus_Y);
  const std::string moduli_dim = genus_Y >= 2 ? std::to_string(3 * genus_Y - 3) : "3g_Y-3";
  const std::string group = "G = <L_pi> x| zeta_2, L_pi of order " + std::to_string(n);
  if (n % 2) {
    if (deg_delta % 2) {
      rec.case_name = "n odd, deg Delta odd";
      rec.components.push_back({"moduli", "Mbar(Delta_bar): a single component, all points stable", moduli_dim});
    } else {
      rec.case_name = "n odd, deg Delta even";
      rec.components.push_back({"moduli", "Mbar(Delta_bar)", moduli_dim});
      rec.components.push_back({"Pic0/G", "strictly semistable locus Pic0(Y)/G, bijective onto |M^ss|", g});
      rec.notes.push_back(group);
    }
  } else {
    if ((deg_delta / n) % 2) {
      rec.case_name = "n even, deg Delta/n odd";
      rec.components.push_back({"Prym", "Prym variety of the cover, first copy", "dim Prym"});
      rec.components.push_back({"Prym", "Prym variety of the cover, second copy", "dim Prym"});
      rec.notes.push_back("disjoint union of two Prym copies");
    } else {
      rec.case_name = "n even, deg Delta/n even";
      for (int i = 1; i <= 4; ++i) {
        rec.components.push_back(
            {"Kummer", "Kummer variety Pcheck/{+-1}, copy " + std::to_string(i), "dim Prym"});
      }
      rec.components.push_back({"Pic0/G", "Pic0(Y)/G, meeting each Kummer component in finitely many points", g});
      rec.notes.push_back(group);
    }
  }
  rec.notes.push_back("line bundles on Y are tracked by degree and kernel power only");
  return rec;
}

bool component_normality(const ComponentRecord&, const std::vector<std::vector<GradedPoint>>& relation_restricted) {
  for (const auto& cls : relation_restricted) {
    if (cls.size() > 1) return false;
  }
  return true;
}

} // namespace fixloc
