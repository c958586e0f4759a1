// Acceptance run: one PASS/FAIL line per criterion, exit status 1 if any fail.

#include "fixloc/errors.hpp"
#include "fixloc/fixed_locus.hpp"
#include "fixloc/parabolic.hpp"
#include "fixloc/sampling.hpp"

#include "support/oracles.hpp"

#include <chrono>
#include <cstdio>
#include <functional>
#include <numeric>
#include <sstream>
#include <string>

using namespace fixloc;
using fixloc::oracle::uniform;

namespace {

struct Outcome {
  bool ok = true;
  std::string detail;
};

Outcome fail(const std::string& why) { return {false, why}; }

std::vector<NumericData> all_numeric_for(const std::vector<DeterminantLift>& dets, const CoverProfile& p,
                                         std::vector<DeterminantLift>& det_of) {
  std::vector<NumericData> out;
  for (const auto& d : dets) {
    for (auto& nd : enumerate_lambda(d, p)) {
      out.push_back(std::move(nd));
      det_of.push_back(d);
    }
  }
  return out;
}

// Every residue vector when there are few, otherwise a seeded sample.
std::vector<DeterminantLift> dets_for(Rng& rng, const CoverProfile& p) {
  long combos = 1;
  for (const auto& o : p.orbits) combos *= o.nprime;
  std::vector<DeterminantLift> out;
  const std::vector<LiftSign> signs =
      p.n % 2 ? std::vector<LiftSign>{LiftSign::Plus} : std::vector<LiftSign>{LiftSign::Plus, LiftSign::Minus};
  if (combos <= 2000) {
    for (long idx = 0; idx < combos; ++idx) {
      DeterminantLift d;
      long rest = idx;
      d.degree = p.n * uniform(rng, -3, 3);
      for (const auto& o : p.orbits) {
        d.residues[o.id] = rest % o.nprime;
        rest /= o.nprime;
        d.degree += d.residues[o.id] * o.k;
      }
      for (auto s : signs) {
        d.sign = s;
        out.push_back(d);
      }
    }
  } else {
    for (int i = 0; i < 300; ++i) out.push_back(random_det(rng, p));
  }
  return out;
}

Outcome kernel_order_check() {
  Rng rng(kDefaultSeed + 1);
  for (int i = 0; i < 50; ++i) {
    const auto p = random_profile(rng, 36, 5);
    long g = p.n;
    for (const auto& o : p.orbits) g = std::gcd(g, o.k);
    if (kernel_order(p) != g) return fail("profile n=" + std::to_string(p.n));
  }
  for (long n = 2; n <= 12; ++n) {
    if (kernel_order(CoverProfile::make(n, 2, {})) != n) return fail("unramified n=" + std::to_string(n));
  }
  if (kernel_order(CoverProfile::make(6, 0, {{"a", 2}, {"b", 3}})) != 1) return fail("coprime 2,3 in 6");
  if (kernel_order(CoverProfile::make(30, 0, {{"a", 6}, {"b", 10}, {"c", 15}})) != 1) return fail("coprime 6,10,15");
  return {true, "50 generated profiles plus unramified and coprime cases"};
}

Outcome lambda_counts() {
  for (long g = 1; g <= 5; ++g) {
    const auto h = hyperelliptic_profile(g);
    const auto l0 = enumerate_lambda(hyperelliptic_delta0(h), h);
    const auto l1 = enumerate_lambda(hyperelliptic_delta1(h), h);
    if (l0.size() != (std::size_t{1} << (2 * g + 2))) return fail("|Lambda_0| at g=" + std::to_string(g));
    if (l1.size() != 1) return fail("|Lambda_1| at g=" + std::to_string(g));
    for (const auto& nd : l0) {
      for (const auto& [id, pr] : nd) {
        if (pr != NumericPair{0, 0} && pr != NumericPair{1, 1}) return fail("Lambda_0 pair at " + id);
      }
    }
    for (const auto& [id, pr] : l1[0]) {
      if (pr != NumericPair{0, 1}) return fail("Lambda_1 pair at " + id);
    }
  }
  return {true, "g = 1..5"};
}

Outcome bijection() {
  Rng rng(kDefaultSeed + 3);
  long checked = 0;
  for (int i = 0; i < 20; ++i) {
    const auto p = random_profile(rng, 12, 4);
    std::vector<DeterminantLift> det_of;
    const auto nds = all_numeric_for(dets_for(rng, p), p, det_of);
    for (std::size_t j = 0; j < nds.size(); ++j) {
      const Rank2EqData x{nds[j], det_of[j]};
      if (from_parabolic(to_parabolic(x, p), p) != x) return fail("round trip broke on profile " + std::to_string(i));
      ++checked;
    }
  }
  return {true, std::to_string(checked) + " data on 20 profiles"};
}

Outcome gamma_round_trip() {
  Rng rng(kDefaultSeed + 4);
  for (int i = 0; i < 1000; ++i) {
    CoverProfile p;
    do {
      p = random_profile(rng, 12, 4);
    } while (p.orbits.empty());
    const auto x = random_rank2_data(rng, p);
    std::map<std::string, long> m, minus;
    FlagSelector f;
    for (const auto& o : p.orbits) {
      m[o.id] = uniform(rng, -2 * p.n, 2 * p.n);
      minus[o.id] = -m[o.id];
      f[o.id] = uniform(rng, 0, 1) ? FlagChoice::First : FlagChoice::Second;
    }
    const auto fwd = gamma_apply_tracked(x, p, m, f);
    if (gamma_apply(fwd.data, p, minus, fwd.induced) != x) return fail("sample " + std::to_string(i));
  }
  return {true, "1000 samples"};
}

Outcome slope_transfer() {
  Rng rng(kDefaultSeed + 5);
  for (int i = 0; i < 1000; ++i) {
    const auto p = random_profile(rng, 12, 4);
    const auto x = random_rank2_data(rng, p);
    const auto pd = to_parabolic(x, p);
    const long sub = uniform(rng, -6, 6);
    std::set<std::string> a;
    for (const auto& o : p.orbits) {
      if (uniform(rng, 0, 1)) a.insert(o.id);
    }
    const auto st = slope_transfer_check(p, pd, sub, a);
    // Independent: parabolic slopes downstairs, degrees upstairs from the data.
    Rational total_w = 0, sub_w = 0;
    long deg_l = p.n * sub;
    for (const auto& o : p.orbits) {
      const auto [d1, d2] = x.numeric.at(o.id);
      const Rational w = make_rational(d2 - d1, o.nprime);
      total_w += w;
      if (a.count(o.id)) sub_w += w;
      deg_l += o.k * (a.count(o.id) ? d2 : d1);
    }
    const Rational lhs = (Rational(pd.det_bar_degree) + total_w) / 2 - (sub + sub_w);
    const Rational rhs = (Rational(x.det.degree) / 2 - deg_l) / p.n;
    if (st.lhs != st.rhs || st.lhs != lhs || st.rhs != rhs) return fail("sample " + std::to_string(i));
  }
  return {true, "1000 samples"};
}

Outcome zeta2_action() {
  Rng rng(kDefaultSeed + 6);
  for (int i = 0; i < 1000; ++i) {
    const auto p = random_profile(rng, 12, 4, true);
    const auto x = random_rank2_data(rng, p);
    const auto y = zeta2_apply(x, p);
    if (zeta2_apply(y, p) != x) return fail("not an involution, sample " + std::to_string(i));
    if (to_parabolic(y, p) != zeta2_parabolic(to_parabolic(x, p), p)) return fail("parabolic form, sample " + std::to_string(i));
  }
  for (int i = 0; i < 300; ++i) {
    const auto p = oracle::random_even_r_profile(rng);
    const auto x = random_rank2_data(rng, p);
    const auto px = to_parabolic(x, p);
    if (zeta2_apply(x, p).numeric != x.numeric || zeta2_parabolic(px, p).weights != px.weights)
      return fail("swap set non-empty with r even");
  }
  const auto h = hyperelliptic_profile(2);
  long seen = 0;
  for (const auto& det : {hyperelliptic_delta0(h), hyperelliptic_delta1(h)}) {
    for (const auto& nd : enumerate_lambda(det, h)) {
      const Rank2EqData x{nd, det};
      if (to_parabolic(zeta2_apply(x, h), h) != zeta2_parabolic(to_parabolic(x, h), h))
        return fail("hyperelliptic commutation");
      ++seen;
    }
  }
  return {true, "1000 even-n samples, 300 r-even samples, " + std::to_string(seen) + " hyperelliptic g=2 data"};
}

Outcome hyperelliptic() {
  const auto r2 = hyperelliptic_report(2);
  if (r2.components.size() != 1 || r2.components[0].c != -1 || r2.components[0].dimension != 3 ||
      r2.components[0].boundary_classes.size() != 16)
    return fail("g=2 table");
  const auto r3 = hyperelliptic_report(3);
  if (r3.components.size() != 2 || r3.components[0].c != -2 || r3.components[0].dimension != 5 ||
      r3.components[1].c != -1 || r3.components[1].dimension != 4)
    return fail("g=3 table");
  if (r3.pairwise_intersections.at({-2, -1}).size() != 29) return fail("g=3 pairwise intersection");
  for (const auto* r : {&r2, &r3}) {
    if (r->global_intersection != std::vector<SubsetLabel>{SubsetLabel{}}) return fail("global intersection");
  }
  Rng rng(kDefaultSeed + 7);
  long realized = 0;
  for (long g = 1; g <= 3; ++g) {
    const auto h = hyperelliptic_profile(g);
    const long npts = 2 * g + 2, d = -(g + 1);
    for (long mask = 0; mask < (1L << npts); ++mask) {
      if (__builtin_popcountl(mask) % 2) continue;
      std::set<std::string> q;
      std::vector<bool> in_q(npts);
      for (long i = 0; i < npts; ++i) {
        if ((in_q[i] = (mask >> i) & 1)) q.insert(h.orbits[i].id);
      }
      const long k = static_cast<long>(q.size()) / 2;
      for (long c = -((g + 1) / 2); c < 0; ++c) {
        const bool predicate = in_component(c, canonical_class(h, q));
        const bool oracle = oracle::saturated_sub_exists(c, d, -k) || oracle::saturated_sub_exists(c, d, d + k);
        if (predicate != oracle) return fail("membership g=" + std::to_string(g) + " mask=" + std::to_string(mask));
        if (!predicate) continue;
        // Realise <Q> on split type c through whichever side embeds.
        std::vector<bool> side = in_q;
        if (!oracle::saturated_sub_exists(c, d, -k)) side.flip();
        std::vector<std::size_t> qi, rest;
        for (long i = 0; i < npts; ++i) (in_q[i] ? qi : rest).push_back(i);
        ParabolicGraded want{{GradedSummand{-k, qi}, GradedSummand{d + k, rest}}};
        std::sort(want.summands.begin(), want.summands.end());
        bool ok = false;
        for (int attempt = 0; attempt < 20 && !ok; ++attempt) {
          const auto b = oracle::realize_bracket(rng, g, c, side);
          if (!b) continue;
          const auto v = stability_classify(*b, g);
          ok = v.cls == StabilityClass::StrictlySemistable && graded_of(*b, v) == want;
        }
        if (!ok) return fail("could not realise <Q>, g=" + std::to_string(g) + " mask=" + std::to_string(mask));
        ++realized;
      }
    }
  }
  return {true, "tables for g=2,3; membership exhaustive for g<=3 with " + std::to_string(realized) + " realisations"};
}

Outcome stability_oracle() {
  Rng rng(kDefaultSeed + 8);
  const std::pair<long, long> types[] = {{2, -1}, {3, -1}, {3, -2}};
  std::map<StabilityClass, int> tally;
  for (int i = 0; i < 200; ++i) {
    const auto [g, c] = types[i % 3];
    const auto b = oracle::random_flags(rng, g, c);
    const auto got = stability_classify(b, g).cls;
    const auto want = oracle::oracle_class(b);
    if (got != want)
      return fail(std::string("sample ") + std::to_string(i) + ": " + to_string(got) + " vs oracle " + to_string(want));
    ++tally[got];
  }
  ParabolicP1 first{-1, -3, {}, {}, {}};
  for (long i = 0; i < 6; ++i) {
    first.points.push_back(Rational(i));
    first.flags.push_back({1, 0});
    first.weights.push_back(make_rational(1, 2));
  }
  const auto v = stability_classify(first, 2);
  if (v.cls != StabilityClass::Unstable || !v.witness || v.witness->e != -1 || v.witness->agreement.size() != 6)
    return fail("all-first witness");
  for (long g = 2; g <= 3; ++g) {
    std::vector<Rational> pts;
    for (long i = 0; i < 2 * g + 2; ++i) pts.push_back(Rational(i));
    for (long mask = 0; mask < (1L << (2 * g + 2)); mask += 3) {
      if (__builtin_popcountl(mask) % 2) continue;
      std::vector<bool> in_q;
      for (long i = 0; i < 2 * g + 2; ++i) in_q.push_back((mask >> i) & 1);
      if (stability_classify(bracket_bundle(g, in_q, pts), g).cls != StabilityClass::StrictlySemistable)
        return fail("<Q> configuration");
    }
  }
  std::ostringstream d;
  d << "200 samples (stable " << tally[StabilityClass::Stable] << ", strictly semistable "
    << tally[StabilityClass::StrictlySemistable] << ", unstable " << tally[StabilityClass::Unstable]
    << ") plus deterministic witnesses";
  return {true, d.str()};
}

Outcome census() {
  const auto a = unramified_census(3, 3, 2);
  const auto b = unramified_census(5, 10, 2);
  const auto c = unramified_census(2, 2, 2);
  const auto d = unramified_census(4, 8, 3);
  auto kinds = [](const CensusRecord& r) {
    std::vector<std::string> k;
    for (const auto& x : r.components) k.push_back(x.kind);
    return k;
  };
  using V = std::vector<std::string>;
  if (a.case_name != "n odd, deg Delta odd" || kinds(a) != V{"moduli"}) return fail("n odd, deg odd");
  if (b.case_name != "n odd, deg Delta even" || kinds(b) != V{"moduli", "Pic0/G"}) return fail("n odd, deg even");
  if (c.case_name != "n even, deg Delta/n odd" || kinds(c) != V{"Prym", "Prym"}) return fail("two Pryms");
  if (d.case_name != "n even, deg Delta/n even" || kinds(d) != V{"Kummer", "Kummer", "Kummer", "Kummer", "Pic0/G"})
    return fail("four Kummers");
  return {true, "four cases"};
}

Outcome integrality_guard() {
  Rng rng(kDefaultSeed + 10);
  long raised = 0;
  for (int i = 0; i < 200; ++i) {
    const auto p = random_profile(rng, 12, 4);
    const auto x = random_rank2_data(rng, p);
    try {
      bar_delta_degree(x.det, x.numeric, p);
    } catch (const NonIntegralDegree&) {
      return fail("raised on generated data");
    }
    auto bad = x.det;
    bad.degree += uniform(rng, 1, p.n - 1);
    try {
      bar_delta_degree(bad, x.numeric, p);
      return fail("corrupted degree accepted");
    } catch (const NonIntegralDegree&) {
      ++raised;
    }
  }
  return {true, std::to_string(raised) + " corrupted inputs rejected"};
}

} // namespace

int main() {
  struct Criterion {
    int id;
    const char* name;
    std::function<Outcome()> check;
    double budget_s;
  };
  const Criterion criteria[] = {
      {1, "kernel order", kernel_order_check, 1},
      {2, "lambda counts", lambda_counts, 1},
      {3, "bijection", bijection, 10},
      {4, "modification round trip", gamma_round_trip, 5},
      {5, "slope transfer", slope_transfer, 5},
      {6, "zeta2 action", zeta2_action, 5},
      {7, "hyperelliptic report", hyperelliptic, 5},
      {8, "stability oracle", stability_oracle, 60},
      {9, "census", census, 1},
      {10, "integrality guard", integrality_guard, 1},
  };
  int failures = 0;
  for (const auto& c : criteria) {
    const auto t0 = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = c.check();
    } catch (const std::exception& e) {
      o = fail(std::string("exception: ") + e.what());
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    if (o.ok && secs > c.budget_s) o = fail("over time budget: " + o.detail);
    failures += !o.ok;
    std::printf("criterion %2d %-24s %s  (%.3f s) %s\n", c.id, c.name, o.ok ? "PASS" : "FAIL", secs, o.detail.c_str());
  }
  return failures ? 1 : 0;
}
