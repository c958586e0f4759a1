#pragma once

#include "fixloc/cover_profile.hpp"
#include "fixloc/rational.hpp"

#include <map>
#include <string>
#include <utility>
#include <vector>

namespace fixloc {

enum class LiftSign { Plus, Minus };

inline LiftSign flip(LiftSign s) { return s == LiftSign::Plus ? LiftSign::Minus : LiftSign::Plus; }

// Equivariant determinant line bundle: residues Delta(y) in [0, n') and its
// degree on X. The sign names one of the two fixed lifts when n is even.
struct DeterminantLift {
  std::map<std::string, long> residues;
  long degree = 0;
  LiftSign sign = LiftSign::Plus;

  bool operator==(const DeterminantLift&) const = default;
};

using NumericPair = std::pair<long, long>;  // (d1, d2), d1 <= d2
using NumericData = std::map<std::string, NumericPair>;
using WeightMap = std::map<std::string, Rational>;

struct Rank2EqData {
  NumericData numeric;
  DeterminantLift det;

  bool operator==(const Rank2EqData&) const = default;
};

// Which eigenvalue (by sorted position) a flag tracks at each orbit.
enum class FlagChoice { First, Second };
using FlagSelector = std::map<std::string, FlagChoice>;

struct AdmissibleParabolicDatum {
  long det_bar_degree = 0;
  WeightMap weights;
  std::map<std::string, long> d2;
  LiftSign det_lift_sign = LiftSign::Plus;

  bool operator==(const AdmissibleParabolicDatum&) const = default;
};

void validate(const DeterminantLift& det, const CoverProfile& profile);
void validate(const Rank2EqData& data, const CoverProfile& profile);
void validate(const AdmissibleParabolicDatum& pdat, const CoverProfile& profile);

std::vector<NumericData> enumerate_lambda(const DeterminantLift& det, const CoverProfile& profile);

WeightMap weight_system(const NumericData& numeric, const CoverProfile& profile);

long bar_delta_degree(const DeterminantLift& det, const NumericData& numeric,
                      const CoverProfile& profile);

Rank2EqData elementary_modification(const Rank2EqData& data, const CoverProfile& profile,
                                    const std::string& orbit, FlagChoice direction, bool inverse);

struct GammaResult {
  Rank2EqData data;
  FlagSelector induced;  // selector tracking the same eigenvalues afterwards
};

GammaResult gamma_apply_tracked(const Rank2EqData& data, const CoverProfile& profile,
                                const std::map<std::string, long>& m, const FlagSelector& flags);

Rank2EqData gamma_apply(const Rank2EqData& data, const CoverProfile& profile,
                        const std::map<std::string, long>& m, const FlagSelector& flags);

AdmissibleParabolicDatum to_parabolic(const Rank2EqData& data, const CoverProfile& profile);
Rank2EqData from_parabolic(const AdmissibleParabolicDatum& pdat, const CoverProfile& profile);

std::vector<std::map<std::string, long>> solve_d2(const DeterminantLift& det, const WeightMap& weights,
                                                  const CoverProfile& profile);

} // namespace fixloc
