#pragma once

#include "fixloc/cover_profile.hpp"
#include "fixloc/equivariant.hpp"
#include "fixloc/exact_linalg.hpp"
#include "fixloc/rational.hpp"

#include <array>
#include <compare>
#include <cstddef>
#include <optional>
#include <set>
#include <string>
#include <vector>

namespace fixloc {

// Flag line {(s,t) : b*s = a*t} in the fibre of O(c) + O(d-c), i.e. the
// line spanned by (a, b). Stored with leading non-zero entry equal to 1.
struct ProjectiveFlag {
  Rational a = 1;
  Rational b = 0;

  bool operator==(const ProjectiveFlag&) const = default;
};

ProjectiveFlag normalized(ProjectiveFlag f);

// Parabolic structure on O(c) + O(d-c) over P^1, marked points in C.
struct ParabolicP1 {
  long c = 0;
  long d = 0;
  std::vector<Rational> points;
  std::vector<ProjectiveFlag> flags;
  std::vector<Rational> weights;
};

void validate(const ParabolicP1& bundle);

// Inclusion O(e) -> O(c) + O(d-c) given by (p, q), deg p <= c-e,
// deg q <= d-c-e, with its set of agreeing points.
struct SubbundleWitness {
  long e = 0;
  Poly p;
  Poly q;
  std::vector<std::size_t> agreement;
};

enum class StabilityClass { Stable, StrictlySemistable, Unstable };

const char* to_string(StabilityClass c);

struct StabilityVerdict {
  StabilityClass cls = StabilityClass::Stable;
  std::optional<SubbundleWitness> witness;
};

// Agreement set of (p, q): points where (p, q) is non-zero and lies on the flag.
std::vector<std::size_t> agreement_set(const ParabolicP1& bundle, const Poly& p, const Poly& q);

bool is_saturated(const ParabolicP1& bundle, long e, const Poly& p, const Poly& q);

Rational parabolic_slope_difference(const ParabolicP1& bundle, const SubbundleWitness& sub);

struct SlopeTransfer {
  Rational lhs;
  Rational rhs;
};

SlopeTransfer slope_transfer_check(const CoverProfile& cover, const AdmissibleParabolicDatum& pdat,
                                   long sub_bar_degree, const std::set<std::string>& agreement);

struct MaxAgreement {
  std::optional<long> count;  // empty: no saturated subbundle of that degree
  std::optional<SubbundleWitness> witness;
};

MaxAgreement max_agreement(const ParabolicP1& bundle, long e);

StabilityVerdict stability_classify(const ParabolicP1& bundle);
// Hyperelliptic form: requires 2g+2 points and d = -(g+1).
StabilityVerdict stability_classify(const ParabolicP1& bundle, long g);

struct SplitType {
  bool empty = true;
  long first = 0;
  long second = 0;
};

SplitType split_moduli_P1(long det_degree);

struct GradedSummand {
  long degree = 0;
  std::vector<std::size_t> support;

  auto operator<=>(const GradedSummand&) const = default;
};

// Unordered pair, stored sorted.
struct ParabolicGraded {
  std::array<GradedSummand, 2> summands;

  bool operator==(const ParabolicGraded&) const = default;
};

ParabolicGraded graded_of(const ParabolicP1& bundle, const StabilityVerdict& verdict);

// The split configuration <Q>: O(-|Q|/2) flagged on Q plus O(d+|Q|/2)
// flagged off Q, weights 1/2, d = -(g+1).
ParabolicP1 bracket_bundle(long g, const std::vector<bool>& in_q, const std::vector<Rational>& points);

} // namespace fixloc
