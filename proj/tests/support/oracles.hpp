#pragma once

// Independent reference computations and generators shared by the tests.
// Nothing here calls into the stability or fixed-locus search code.

#include "fixloc/cover_profile.hpp"
#include "fixloc/parabolic.hpp"
#include "fixloc/rational.hpp"
#include "fixloc/sampling.hpp"

#include <algorithm>
#include <cstddef>
#include <numeric>
#include <optional>
#include <random>
#include <string>
#include <vector>

namespace fixloc::oracle {

inline long uniform(Rng& rng, long lo, long hi) { return std::uniform_int_distribution<long>(lo, hi)(rng); }

// Plain Gauss-Jordan rank over Q.
inline std::size_t gauss_rank(std::vector<std::vector<Rational>> m) {
  std::size_t r = 0;
  const std::size_t cols = m.empty() ? 0 : m[0].size();
  for (std::size_t c = 0; c < cols && r < m.size(); ++c) {
    std::size_t piv = r;
    while (piv < m.size() && m[piv][c] == 0) ++piv;
    if (piv == m.size()) continue;
    std::swap(m[piv], m[r]);
    for (std::size_t i = 0; i < m.size(); ++i) {
      if (i == r || m[i][c] == 0) continue;
      const Rational f = m[i][c] / m[r][c];
      for (std::size_t j = c; j < cols; ++j) m[i][j] -= f * m[r][j];
    }
    ++r;
  }
  return r;
}

inline Rational power(const Rational& z, long k) {
  Rational out = 1;
  for (long i = 0; i < k; ++i) out *= z;
  return out;
}

// Is there a non-zero map O(e) -> O(c) + O(d-c) whose value at every point in
// `subset` lies on the flag there?
inline bool subset_feasible(const ParabolicP1& b, long e, const std::vector<std::size_t>& subset) {
  const long np = b.c - e + 1;
  const long nq = b.d - b.c - e + 1;
  const std::size_t unknowns = static_cast<std::size_t>(std::max(0L, np) + std::max(0L, nq));
  if (unknowns == 0) return false;
  if (subset.size() < unknowns) return true;
  std::vector<std::vector<Rational>> rows;
  for (std::size_t i : subset) {
    std::vector<Rational> row(unknowns);
    const auto& f = b.flags[i];
    std::size_t col = 0;
    for (long j = 0; j < np; ++j) row[col++] = f.b * power(b.points[i], j);
    for (long j = 0; j < nq; ++j) row[col++] = -f.a * power(b.points[i], j);
    rows.push_back(std::move(row));
  }
  return gauss_rank(rows) < unknowns;
}

// Minimum of 1/2 d - e + 1/2 sum(w) - sum_{S} w over all non-zero maps.
// Non-saturated maps never beat their saturation when weights are below 1,
// so no saturation test is needed.
inline Rational min_slope_gap(const ParabolicP1& b) {
  Rational total = 0;
  for (const auto& w : b.weights) total += w;
  const std::size_t n = b.points.size();
  std::optional<Rational> best;
  // Below (d - sum w) / 2 every gap is positive.
  Rational floor_q = (Rational(b.d) - total) / 2;
  const long lo = static_cast<long>(mpz_class(floor_q.get_num() / floor_q.get_den()).get_si()) - 1;
  for (long e = b.c; e >= lo; --e) {
    for (std::size_t mask = 0; mask < (std::size_t{1} << n); ++mask) {
      std::vector<std::size_t> s;
      Rational sw = 0;
      for (std::size_t i = 0; i < n; ++i) {
        if (mask >> i & 1) {
          s.push_back(i);
          sw += b.weights[i];
        }
      }
      const Rational gap = make_rational(b.d, 2) - e + total / 2 - sw;
      if (best && gap >= *best) continue;
      if (subset_feasible(b, e, s)) best = gap;
    }
  }
  return *best;
}

inline StabilityClass oracle_class(const ParabolicP1& b) {
  const Rational gap = min_slope_gap(b);
  if (gap < 0) return StabilityClass::Unstable;
  if (gap == 0) return StabilityClass::StrictlySemistable;
  return StabilityClass::Stable;
}

// Random hyperelliptic flag configuration. Flags are drawn from the two
// summand directions and a few small slopes so that all three verdicts occur.
inline ParabolicP1 random_flags(Rng& rng, long g, long c) {
  ParabolicP1 b;
  b.c = c;
  b.d = -(g + 1);
  const long npts = 2 * g + 2;
  std::vector<long> pool(25);
  std::iota(pool.begin(), pool.end(), -12);
  std::shuffle(pool.begin(), pool.end(), rng);
  for (long i = 0; i < npts; ++i) {
    b.points.push_back(Rational(pool[i]));
    const long kind = uniform(rng, 0, 5);
    ProjectiveFlag f;
    if (kind == 0) {
      f = {1, 0};
    } else if (kind == 1) {
      f = {0, 1};
    } else if (kind == 2) {
      f = {1, 1};
    } else {
      f = {1, make_rational(uniform(rng, -5, 5), uniform(rng, 1, 3))};
    }
    b.flags.push_back(normalized(f));
    b.weights.push_back(make_rational(1, 2));
  }
  return b;
}

// Does O(c) + O(d-c) contain a saturated line subbundle of degree e?
// Either (x^{c-e}, 1) works, which needs e <= d-c, or e = c.
inline bool saturated_sub_exists(long c, long d, long e) { return e == c || e <= d - c; }

// O(c) + O(d-c) with a random saturated O(-|S|/2) -> E whose values give the
// flags on S, and random flags off S.
inline std::optional<ParabolicP1> realize_bracket(Rng& rng, long g, long c, const std::vector<bool>& side) {
  const long d = -(g + 1);
  long e = 0;
  for (bool b : side) e -= b;
  e /= 2;
  if (!saturated_sub_exists(c, d, e)) return std::nullopt;
  auto random_poly = [&](long deg) {
    Poly p;
    for (long i = 0; i <= deg; ++i) p.push_back(Rational(uniform(rng, -9, 9)));
    if (!p.empty() && p.back() == 0) p.back() = 1;
    return p;
  };
  Poly p{Rational(1)}, q;
  if (e <= d - c) {
    p = random_poly(c - e);
    q = random_poly(d - c - e);
    if (degree(poly_gcd(p, q)) > 0) return std::nullopt;
  }
  ParabolicP1 b;
  b.c = c;
  b.d = d;
  for (std::size_t i = 0; i < side.size(); ++i) {
    const Rational z(static_cast<long>(3 * i) - 7);
    ProjectiveFlag f{1, make_rational(uniform(rng, -50, 50), uniform(rng, 1, 9))};
    if (side[i]) {
      f = {evaluate(p, z), evaluate(q, z)};
      if (f.a == 0 && f.b == 0) return std::nullopt;
    }
    b.points.push_back(z);
    b.flags.push_back(normalized(f));
    b.weights.push_back(make_rational(1, 2));
  }
  return b;
}

// Profile whose orbit lengths are all even, so r is even.
inline CoverProfile random_even_r_profile(Rng& rng) {
  const long half = uniform(rng, 1, 6);
  const long n = 2 * half;
  std::vector<long> ks;
  for (long k = 2; k < n; k += 2) {
    if (n % k == 0) ks.push_back(k);
  }
  std::vector<std::pair<std::string, long>> orbits;
  const long count = ks.empty() ? 0 : uniform(rng, 0, 4);
  for (long i = 0; i < count; ++i) {
    orbits.emplace_back("y" + std::to_string(i + 1), ks[uniform(rng, 0, ks.size() - 1)]);
  }
  return CoverProfile::make(n, uniform(rng, 0, 3), orbits);
}

// Flag parameters on split type c, d = -(g+1), minus dim Aut(O(c)+O(d-c))/C*.
// Aut is PGL2 when balanced; otherwise torus times Hom(O(d-c), O(c)).
inline long expected_component_dimension(long g, long c) {
  const long d = -(g + 1);
  const long paut = (2 * c == d) ? 3 : (2 * c - d + 1) + 2 - 1;
  return 2 * g + 2 - paut;
}

} // namespace fixloc::oracle
