#include "fixloc/parabolic.hpp"

#include "fixloc/errors.hpp"

#include <algorithm>
#include <numeric>
#include <random>
#include <stdexcept>

namespace fixloc {

ProjectiveFlag normalized(ProjectiveFlag f) {
  if (f.a != 0) {
    f.b /= f.a;
    f.a = 1;
  } else if (f.b != 0) {
    f.b = 1;
  } else {
    throw InvalidBundle("flag (0:0) is not a projective point");
  }
  return f;
}

const char* to_string(StabilityClass c) {
  switch (c) {
    case StabilityClass::Stable: return "Stable";
    case StabilityClass::StrictlySemistable: return "StrictlySemistable";
    case StabilityClass::Unstable: return "Unstable";
  }
  return "?";
}

void validate(const ParabolicP1& bundle) {
  if (bundle.d - bundle.c > bundle.c) throw InvalidBundle("split type must satisfy d - c <= c");
  const std::size_t n = bundle.points.size();
  if (bundle.flags.size() != n || bundle.weights.size() != n)
    throw InvalidBundle("points, flags and weights must have equal length");
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      if (bundle.points[i] == bundle.points[j]) throw InvalidBundle("marked points must be distinct");
    }
    if (!(bundle.flags[i] == normalized(bundle.flags[i]))) throw InvalidBundle("flag not normalised");
    if (bundle.weights[i] < 0 || bundle.weights[i] >= 1) throw InvalidBundle("weight outside [0,1)");
  }
}

std::vector<std::size_t> agreement_set(const ParabolicP1& bundle, const Poly& p, const Poly& q) {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < bundle.points.size(); ++i) {
    Rational pv = evaluate(p, bundle.points[i]);
    Rational qv = evaluate(q, bundle.points[i]);
    if (pv == 0 && qv == 0) continue;
    if (bundle.flags[i].b * pv == bundle.flags[i].a * qv) out.push_back(i);
  }
  return out;
}

bool is_saturated(const ParabolicP1& bundle, long e, const Poly& p, const Poly& q) {
  const long alpha = bundle.c - e;
  const long beta = bundle.d - bundle.c - e;
  const long dp = degree(p), dq = degree(q);
  if (dp < 0 && dq < 0) return false;
  if ((dp >= 0 && dp > alpha) || (dq >= 0 && dq > beta)) return false;
  const bool full_p = alpha >= 0 && dp == alpha;
  const bool full_q = beta >= 0 && dq == beta;
  if (!full_p && !full_q) return false;  // common zero at infinity
  return degree(poly_gcd(p, q)) == 0;
}

Rational parabolic_slope_difference(const ParabolicP1& bundle, const SubbundleWitness& sub) {
  Rational diff = make_rational(bundle.d, 2) - sub.e;
  std::vector<bool> agrees(bundle.points.size(), false);
  for (auto i : sub.agreement) agrees[i] = true;
  for (std::size_t i = 0; i < bundle.points.size(); ++i) {
    if (agrees[i]) diff -= bundle.weights[i] / 2;
    else diff += bundle.weights[i] / 2;
  }
  return diff;
}

SlopeTransfer slope_transfer_check(const CoverProfile& cover, const AdmissibleParabolicDatum& pdat,
                                   long sub_bar_degree, const std::set<std::string>& agreement) {
  validate(pdat, cover);
  SlopeTransfer out;
  out.lhs = make_rational(pdat.det_bar_degree, 2) - sub_bar_degree;
  Rational deg_E = cover.n * pdat.det_bar_degree;
  Rational deg_L = cover.n * sub_bar_degree;
  for (const auto& o : cover.orbits) {
    const Rational& w = pdat.weights.at(o.id);
    const long d2 = pdat.d2.at(o.id);
    const bool agrees = agreement.count(o.id) > 0;
    out.lhs += agrees ? Rational(-w / 2) : Rational(w / 2);
    deg_E += -Rational(o.nprime) * w * o.k + 2 * d2 * o.k;
    deg_L += d2 * o.k;
    if (!agrees) deg_L -= Rational(o.k * o.nprime) * w;
  }
  out.rhs = (deg_E / 2 - deg_L) / cover.n;
  return out;
}

namespace {

struct Candidate {
  Rational score;
  std::vector<std::size_t> indices;
};

// All subsets of `participants`, ordered by score descending and then
// lexicographically by index list.
std::vector<Candidate> ordered_subsets(const std::vector<std::size_t>& participants,
                                       const std::vector<Rational>& score) {
  const std::size_t m = participants.size();
  if (m > 20) throw InvalidBundle("too many weighted points for exhaustive search");
  std::vector<Candidate> out;
  out.reserve(std::size_t{1} << m);
  for (std::size_t mask = 0; mask < (std::size_t{1} << m); ++mask) {
    Candidate c;
    c.score = 0;
    for (std::size_t j = 0; j < m; ++j) {
      if (mask >> j & 1) {
        c.indices.push_back(participants[j]);
        c.score += score[participants[j]];
      }
    }
    out.push_back(std::move(c));
  }
  std::sort(out.begin(), out.end(), [](const Candidate& x, const Candidate& y) {
    if (x.score != y.score) return x.score > y.score;
    return x.indices < y.indices;
  });
  return out;
}

struct PolyPair {
  Poly p;
  Poly q;
};

PolyPair split(const std::vector<Rational>& v, long alpha) {
  PolyPair out;
  out.p.assign(v.begin(), v.begin() + alpha + 1);
  out.q.assign(v.begin() + alpha + 1, v.end());
  out.p = trimmed(std::move(out.p));
  out.q = trimmed(std::move(out.q));
  return out;
}

// A saturated element of span(basis), if one exists. Exact: the span has no
// saturated element iff it has a base point (finite or at infinity) or all
// its elements are pointwise proportional and it is more than a line.
std::optional<PolyPair> saturated_member(const ParabolicP1& bundle, long e,
                                         const std::vector<std::vector<Rational>>& basis) {
  const long alpha = bundle.c - e;
  const long beta = bundle.d - bundle.c - e;
  std::vector<PolyPair> pairs;
  for (const auto& v : basis) pairs.push_back(split(v, alpha));

  Poly base;
  bool infinity_base = true;
  for (const auto& pq : pairs) {
    base = poly_gcd(poly_gcd(base, pq.p), pq.q);
    if (degree(pq.p) == alpha || degree(pq.q) == beta) infinity_base = false;
  }
  if (degree(base) > 0 || infinity_base) return std::nullopt;

  for (const auto& pq : pairs) {
    if (is_saturated(bundle, e, pq.p, pq.q)) return pq;
  }
  if (pairs.size() == 1) return std::nullopt;

  bool rank_two = false;
  for (std::size_t i = 0; i < pairs.size() && !rank_two; ++i) {
    for (std::size_t j = i + 1; j < pairs.size() && !rank_two; ++j) {
      rank_two = !(pairs[i].p * pairs[j].q - pairs[j].p * pairs[i].q).empty();
    }
  }
  if (!rank_two) return std::nullopt;

  // The non-saturated members form a proper subvariety; a pseudo-random
  // combination avoids it almost surely.
  std::mt19937_64 rng(0x5eed);
  std::uniform_int_distribution<long> coef(-97, 97);
  for (int attempt = 0; attempt < 4096; ++attempt) {
    std::vector<Rational> v(basis.front().size(), Rational(0));
    for (const auto& b : basis) {
      Rational c = coef(rng);
      for (std::size_t j = 0; j < v.size(); ++j) v[j] += c * b[j];
    }
    PolyPair pq = split(v, alpha);
    if (is_saturated(bundle, e, pq.p, pq.q)) return pq;
  }
  throw std::logic_error("saturated member search did not terminate");
}

struct Best {
  Rational score;
  SubbundleWitness witness;
};

std::optional<Best> best_saturated(const ParabolicP1& bundle, long e, const std::vector<Rational>& score,
                                   const std::vector<Candidate>& order) {
  const long c = bundle.c;
  const long d = bundle.d;
  if (e > c) return std::nullopt;
  const long alpha = c - e;
  const long beta = d - c - e;
  auto finish = [&](Poly p, Poly q) {
    Best b;
    b.witness.e = e;
    b.witness.p = std::move(p);
    b.witness.q = std::move(q);
    b.witness.agreement = agreement_set(bundle, b.witness.p, b.witness.q);
    b.score = 0;
    for (auto i : b.witness.agreement) b.score += score[i];
    return b;
  };
  if (beta < 0) {
    // Only q = 0 is possible; saturated only for the first summand itself.
    if (alpha != 0) return std::nullopt;
    return finish(Poly{Rational(1)}, Poly{});
  }
  const std::size_t cols = static_cast<std::size_t>(alpha + 1 + beta + 1);
  for (const auto& cand : order) {
    Matrix rows;
    for (auto i : cand.indices) {
      std::vector<Rational> row(cols);
      Rational zp = 1;
      for (long j = 0; j <= std::max(alpha, beta); ++j) {
        if (j <= alpha) row[j] = bundle.flags[i].b * zp;
        if (j <= beta) row[alpha + 1 + j] = -bundle.flags[i].a * zp;
        zp *= bundle.points[i];
      }
      rows.push_back(std::move(row));
    }
    auto basis = kernel_basis(rows, cols);
    if (basis.empty()) continue;
    auto member = saturated_member(bundle, e, basis);
    if (member) return finish(std::move(member->p), std::move(member->q));
  }
  return std::nullopt;
}

std::vector<std::size_t> all_indices(std::size_t n) {
  std::vector<std::size_t> v(n);
  std::iota(v.begin(), v.end(), 0);
  return v;
}

} // namespace

MaxAgreement max_agreement(const ParabolicP1& bundle, long e) {
  validate(bundle);
  std::vector<Rational> unit(bundle.points.size(), Rational(1));
  auto order = ordered_subsets(all_indices(bundle.points.size()), unit);
  auto best = best_saturated(bundle, e, unit, order);
  MaxAgreement out;
  if (best) {
    out.count = static_cast<long>(best->witness.agreement.size());
    out.witness = std::move(best->witness);
  }
  return out;
}

StabilityVerdict stability_classify(const ParabolicP1& bundle) {
  validate(bundle);
  std::vector<std::size_t> participants;
  Rational total = 0;
  for (std::size_t i = 0; i < bundle.points.size(); ++i) {
    total += bundle.weights[i];
    if (bundle.weights[i] > 0) participants.push_back(i);
  }
  auto order = ordered_subsets(participants, bundle.weights);
  // Subbundles of degree below (d - W)/2 cannot violate stability.
  Rational lower = (Rational(bundle.d) - total) / 2;
  mpz_class e_min;
  mpz_cdiv_q(e_min.get_mpz_t(), lower.get_num_mpz_t(), lower.get_den_mpz_t());

  StabilityVerdict verdict;
  for (long e = bundle.c; e >= e_min.get_si(); --e) {
    auto best = best_saturated(bundle, e, bundle.weights, order);
    if (!best) continue;
    Rational margin = parabolic_slope_difference(bundle, best->witness);
    if (margin < 0) {
      verdict.cls = StabilityClass::Unstable;
      verdict.witness = std::move(best->witness);
      return verdict;
    }
    if (margin == 0 && verdict.cls == StabilityClass::Stable) {
      verdict.cls = StabilityClass::StrictlySemistable;
      verdict.witness = std::move(best->witness);
    }
  }
  return verdict;
}

StabilityVerdict stability_classify(const ParabolicP1& bundle, long g) {
  if (g < 0) throw InvalidGenus("genus must be non-negative");
  if (bundle.points.size() != static_cast<std::size_t>(2 * g + 2))
    throw InvalidBundle("expected 2g+2 marked points");
  if (bundle.d != -(g + 1)) throw InvalidBundle("expected d = -(g+1)");
  return stability_classify(bundle);
}

SplitType split_moduli_P1(long det_degree) {
  SplitType s;
  if (det_degree % 2 != 0) return s;
  s.empty = false;
  s.first = s.second = det_degree / 2;
  return s;
}

ParabolicGraded graded_of(const ParabolicP1& bundle, const StabilityVerdict& verdict) {
  if (verdict.cls != StabilityClass::StrictlySemistable || !verdict.witness)
    throw NotSemistableNotStrict(std::string("verdict is ") + to_string(verdict.cls));
  const auto& w = *verdict.witness;
  std::vector<bool> agrees(bundle.points.size(), false);
  for (auto i : w.agreement) agrees[i] = true;
  GradedSummand sub{w.e, {}}, quot{bundle.d - w.e, {}};
  for (std::size_t i = 0; i < bundle.points.size(); ++i) {
    if (bundle.weights[i] == 0) continue;
    (agrees[i] ? sub : quot).support.push_back(i);
  }
  ParabolicGraded g{{sub, quot}};
  if (g.summands[1] < g.summands[0]) std::swap(g.summands[0], g.summands[1]);
  return g;
}

ParabolicP1 bracket_bundle(long g, const std::vector<bool>& in_q, const std::vector<Rational>& points) {
  const std::size_t n = static_cast<std::size_t>(2 * g + 2);
  if (in_q.size() != n || points.size() != n) throw InvalidBundle("expected 2g+2 points");
  const long size_q = std::count(in_q.begin(), in_q.end(), true);
  if (size_q % 2 != 0) throw InvalidBundle("Q must have even cardinality");
  const long d = -(g + 1);
  const long k = size_q / 2;
  ParabolicP1 b;
  b.d = d;
  const bool q_first = -k >= d + k;
  b.c = q_first ? -k : d + k;
  b.points = points;
  for (std::size_t i = 0; i < n; ++i) {
    const bool first = in_q[i] == q_first;
    b.flags.push_back(first ? ProjectiveFlag{1, 0} : ProjectiveFlag{0, 1});
    b.weights.push_back(make_rational(1, 2));
  }
  return b;
}

} // namespace fixloc
