#pragma once

#include "fixloc/cover_profile.hpp"
#include "fixloc/divisor.hpp"
#include "fixloc/equivariant.hpp"
#include "fixloc/fixed_locus.hpp"
#include "fixloc/parabolic.hpp"

#include <nlohmann/json.hpp>

namespace fixloc::io {

using nlohmann::json;

// All readers are strict: missing or unknown fields raise SchemaError.

json to_json(const Rational& q);
Rational rational_from_json(const json& j);

json to_json(const CoverProfile& p);
CoverProfile profile_from_json(const json& j);

json to_json(const InvariantDivisor& d);
InvariantDivisor divisor_from_json(const json& j);

json to_json(const DeterminantLift& d);
DeterminantLift det_from_json(const json& j);

json to_json(const NumericData& n);
NumericData numeric_from_json(const json& j);

json to_json(const Rank2EqData& d);
Rank2EqData rank2_from_json(const json& j);

json to_json(const AdmissibleParabolicDatum& p);
AdmissibleParabolicDatum parabolic_datum_from_json(const json& j);

struct FlagConfiguration {
  long g = 0;
  ParabolicP1 bundle;
};
json to_json(const FlagConfiguration& f);
FlagConfiguration flags_from_json(const json& j);

json to_json(const SubbundleWitness& w);
json to_json(const StabilityVerdict& v);
json to_json(const ParabolicGraded& g);

json to_json(const GradedPoint& p);
GradedPoint graded_point_from_json(const json& j);

json to_json(const DecompositionReport& r);
json to_json(const ComponentRecord& c);
json to_json(const HyperellipticReport& r);
json to_json(const CensusRecord& c);

} // namespace fixloc::io
