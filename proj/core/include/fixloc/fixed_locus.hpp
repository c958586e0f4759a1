#pragma once

#include "fixloc/cover_profile.hpp"
#include "fixloc/divisor.hpp"
#include "fixloc/equivariant.hpp"

#include <array>
#include <compare>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

namespace fixloc {

// A graded line summand on Y: its degree and the orbits where it carries the
// parabolic weight (where it equals the flag).
struct GradedLine {
  long bar_degree = 0;
  std::set<std::string> support;

  auto operator<=>(const GradedLine&) const = default;
};

struct GradedPoint {
  std::array<GradedLine, 2> summands;  // kept sorted; the pair is unordered
  DeterminantLift det;
  NumericData numeric;

  static GradedPoint make(GradedLine a, GradedLine b, DeterminantLift det, NumericData numeric);

  bool operator==(const GradedPoint&) const = default;
  bool operator<(const GradedPoint& other) const;
};

void validate(const GradedPoint& pt, const CoverProfile& profile);

// Replaces the lift tau by -tau (n even).
Rank2EqData zeta2_apply(const Rank2EqData& data, const CoverProfile& profile);
// The same involution through the parabolic description: inverse elementary
// modification at the swap orbits followed by a twist.
AdmissibleParabolicDatum zeta2_parabolic(const AdmissibleParabolicDatum& pdat, const CoverProfile& profile);
GradedPoint zeta2_graded(const GradedPoint& pt, const CoverProfile& profile);

// Twist summand 0 by mu and summand 1 by mu^{-1}.
GradedPoint sim_o_step(const GradedPoint& pt, const RootExponent& mu, const CoverProfile& profile);
// Twist one summand by the root carrying one determinant lift to the other.
GradedPoint sim_e_step(const GradedPoint& pt, const CoverProfile& profile, int which = 0);

std::vector<std::vector<GradedPoint>> equivalence_classes(const std::vector<GradedPoint>& points,
                                                          const CoverProfile& profile);

bool s_i_possible(const CoverProfile& profile);

enum class DecompositionCase { Odd, EvenROdd, EvenREven };

const char* case_name(DecompositionCase c);

struct DecompositionReport {
  long n = 1;
  long r = 1;
  std::string n_parity;
  std::string r_parity;
  DecompositionCase tag = DecompositionCase::Odd;
  std::vector<std::string> statements;
};

DecompositionReport decomposition_report(const CoverProfile& profile);

// Subset of branch points, as sorted orbit ids.
using SubsetLabel = std::vector<std::string>;

struct ComponentRecord {
  std::string label;
  std::optional<long> c;
  long dimension = 0;
  std::vector<SubsetLabel> boundary_classes;
  bool normal = true;
};

struct HyperellipticReport {
  long g = 0;
  long d = 0;
  std::vector<ComponentRecord> components;
  std::map<std::pair<long, long>, std::vector<SubsetLabel>> pairwise_intersections;
  std::vector<SubsetLabel> global_intersection;
  long semistable_class_count = 0;
  std::vector<SubsetLabel> all_classes;
};

HyperellipticReport hyperelliptic_report(long g);

long hyperelliptic_component_dimension(long g, long c);
// Canonical label of the class of <Q>: <Q> and <P \ Q> coincide.
SubsetLabel canonical_class(const CoverProfile& profile, const std::set<std::string>& q);
bool in_component(long c, const SubsetLabel& canonical);

DeterminantLift hyperelliptic_delta0(const CoverProfile& profile);
DeterminantLift hyperelliptic_delta1(const CoverProfile& profile);
GradedPoint bracket_point(const CoverProfile& profile, const std::set<std::string>& q);         // <Q>
GradedPoint double_bracket_point(const CoverProfile& profile, const std::set<std::string>& q);  // <<Q>>

struct CensusComponent {
  std::string kind;
  std::string description;
  std::string dimension;
};

struct CensusRecord {
  long n = 1;
  long deg_delta = 0;
  long genus_Y = 0;
  std::string case_name;
  std::vector<CensusComponent> components;
  std::vector<std::string> notes;
};

CensusRecord unramified_census(long n, long deg_delta, long genus_Y);

bool component_normality(const ComponentRecord& component,
                         const std::vector<std::vector<GradedPoint>>& relation_restricted);

} // namespace fixloc
