#include "fixloc/errors.hpp"
#include "fixloc/fixed_locus.hpp"

#include <algorithm>

namespace fixloc {

long hyperelliptic_component_dimension(long g, long c) {
  const long d = -(g + 1);
  if (2 * c == d) return 2 * g - 1;
  return g - 2 * c - 1;
}

SubsetLabel canonical_class(const CoverProfile& profile, const std::set<std::string>& q) {
  const std::size_t n = profile.orbits.size();
  std::set<std::string> rep = q;
  const bool complement = 2 * q.size() > n ||
                          (2 * q.size() == n && !q.count(profile.orbits.front().id));
  if (complement) {
    rep.clear();
    for (const auto& o : profile.orbits) {
      if (!q.count(o.id)) rep.insert(o.id);
    }
  }
  return {rep.begin(), rep.end()};
}

bool in_component(long c, const SubsetLabel& canonical) {
  return static_cast<long>(canonical.size()) <= -2 * c;
}

DeterminantLift hyperelliptic_delta0(const CoverProfile& profile) {
  DeterminantLift det;
  for (const auto& o : profile.orbits) det.residues[o.id] = 0;
  return det;
}

DeterminantLift hyperelliptic_delta1(const CoverProfile& profile) {
  DeterminantLift det;
  for (const auto& o : profile.orbits) det.residues[o.id] = 1;
  det.sign = LiftSign::Minus;
  return det;
}

GradedPoint bracket_point(const CoverProfile& profile, const std::set<std::string>& q) {
  if (q.size() % 2) throw InvalidDatum("Q must have even cardinality");
  const long k = static_cast<long>(q.size()) / 2;
  const long d = -static_cast<long>(profile.orbits.size()) / 2;
  GradedLine a{-k, q}, b{d + k, {}};
  NumericData numeric;
  for (const auto& o : profile.orbits) {
    numeric[o.id] = {0, 1};
    if (!q.count(o.id)) b.support.insert(o.id);
  }
  return GradedPoint::make(std::move(a), std::move(b), hyperelliptic_delta1(profile), std::move(numeric));
}

GradedPoint double_bracket_point(const CoverProfile& profile, const std::set<std::string>& q) {
  if (q.size() % 2) throw InvalidDatum("M(O(-d_Q)) is empty for odd d_Q");
  const long k = static_cast<long>(q.size()) / 2;
  NumericData numeric;
  for (const auto& o : profile.orbits) numeric[o.id] = q.count(o.id) ? NumericPair{1, 1} : NumericPair{0, 0};
  return GradedPoint::make({-k, {}}, {-k, {}}, hyperelliptic_delta0(profile), std::move(numeric));
}

HyperellipticReport hyperelliptic_report(long g) {
  if (g < 1) throw InvalidGenus("hyperelliptic report needs g >= 1, got " + std::to_string(g));
  const CoverProfile profile = hyperelliptic_profile(g);
  const std::size_t npts = profile.orbits.size();
  HyperellipticReport rep;
  rep.g = g;
  rep.d = -(g + 1);

  std::vector<std::set<std::string>> even_subsets;
  for (std::size_t mask = 0; mask < (std::size_t{1} << npts); ++mask) {
    if (__builtin_popcountll(mask) % 2) continue;
    std::set<std::string> q;
    for (std::size_t i = 0; i < npts; ++i) {
      if (mask >> i & 1) q.insert(profile.orbits[i].id);
    }
    even_subsets.push_back(std::move(q));
  }
  std::set<SubsetLabel> classes;
  for (const auto& q : even_subsets) classes.insert(canonical_class(profile, q));
  rep.all_classes.assign(classes.begin(), classes.end());

  // Identifications among semistable points on both determinant sides.
  std::vector<GradedPoint> points;
  for (const auto& q : even_subsets) {
    points.push_back(double_bracket_point(profile, q));
    points.push_back(bracket_point(profile, q));
  }
  const auto relation = equivalence_classes(points, profile);
  rep.semistable_class_count = static_cast<long>(relation.size());

  const long c_lo = -((g + 1) / 2);  // ceil(d/2)
  for (long c = c_lo; c < 0; ++c) {
    ComponentRecord comp;
    comp.label = "c=" + std::to_string(c);
    comp.c = c;
    comp.dimension = hyperelliptic_component_dimension(g, c);
    for (const auto& cls : rep.all_classes) {
      if (in_component(c, cls)) comp.boundary_classes.push_back(cls);
    }
    std::vector<std::vector<GradedPoint>> restricted;
    for (const auto& cls : relation) {
      std::vector<GradedPoint> inside;
      for (const auto& p : cls) {
        if (p.det.sign != LiftSign::Minus) continue;
        const auto& s = p.summands[0].support;
        if (in_component(c, canonical_class(profile, s))) inside.push_back(p);
      }
      if (!inside.empty()) restricted.push_back(std::move(inside));
    }
    comp.normal = component_normality(comp, restricted);
    rep.components.push_back(std::move(comp));
  }

  for (std::size_t i = 0; i < rep.components.size(); ++i) {
    for (std::size_t j = i + 1; j < rep.components.size(); ++j) {
      std::vector<SubsetLabel> both;
      const auto& a = rep.components[i].boundary_classes;
      const auto& b = rep.components[j].boundary_classes;
      std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(both));
      rep.pairwise_intersections[{*rep.components[i].c, *rep.components[j].c}] = std::move(both);
    }
  }
  // The intersection runs over d/2 <= c <= 0; c = 0 contributes only <empty>.
  for (const auto& cls : rep.all_classes) {
    bool everywhere = in_component(0, cls);
    for (const auto& comp : rep.components) everywhere = everywhere && in_component(*comp.c, cls);
    if (everywhere) rep.global_intersection.push_back(cls);
  }
  return rep;
}

} // namespace fixloc
