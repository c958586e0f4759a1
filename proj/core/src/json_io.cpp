#include "fixloc/json_io.hpp"

#include "fixloc/errors.hpp"

#include <initializer_list>
#include <string>

namespace fixloc::io {

namespace {

void expect_object(const json& j, const char* what, std::initializer_list<const char*> required,
                   std::initializer_list<const char*> optional = {}) {
  if (!j.is_object()) throw SchemaError(std::string(what) + ": expected an object");
  for (const char* key : required) {
    if (!j.contains(key)) throw SchemaError(std::string(what) + ": missing field '" + key + "'");
  }
  for (const auto& [key, _] : j.items()) {
    bool known = false;
    for (const char* k : required) known = known || key == k;
    for (const char* k : optional) known = known || key == k;
    if (!known) throw SchemaError(std::string(what) + ": unknown field '" + key + "'");
  }
}

long get_int(const json& j, const char* what) {
  if (!j.is_number_integer()) throw SchemaError(std::string(what) + ": expected an integer");
  return j.get<long>();
}

std::string get_string(const json& j, const char* what) {
  if (!j.is_string()) throw SchemaError(std::string(what) + ": expected a string");
  return j.get<std::string>();
}

LiftSign sign_from_json(const json& j) {
  const std::string s = get_string(j, "lift_sign");
  if (s == "+") return LiftSign::Plus;
  if (s == "-") return LiftSign::Minus;
  throw SchemaError("lift_sign must be \"+\" or \"-\"");
}

const char* sign_str(LiftSign s) { return s == LiftSign::Plus ? "+" : "-"; }

std::map<std::string, long> int_map(const json& j, const char* what) {
  if (!j.is_object()) throw SchemaError(std::string(what) + ": expected an object");
  std::map<std::string, long> out;
  for (const auto& [k, v] : j.items()) out[k] = get_int(v, what);
  return out;
}

json index_list(const std::vector<std::size_t>& v) {
  json a = json::array();
  for (auto i : v) a.push_back(i);
  return a;
}

json poly_json(const Poly& p) {
  json a = json::array();
  for (const auto& c : p) a.push_back(to_json(c));
  return a;
}

} // namespace

namespace {

// Integers outside the range of long are written as decimal strings.
json integer_json(const Integer& z) {
  if (z.fits_slong_p()) return z.get_si();
  return z.get_str();
}

Integer integer_from_json(const json& j, const char* what) {
  if (j.is_number_integer()) return Integer(j.get<long>());
  if (j.is_string()) {
    Integer z;
    if (z.set_str(j.get<std::string>(), 10) == 0) return z;
  }
  throw SchemaError(std::string(what) + ": expected an integer");
}

} // namespace

json to_json(const Rational& q) { return {{"num", integer_json(q.get_num())}, {"den", integer_json(q.get_den())}}; }

// A bare integer is accepted as a rational with denominator 1.
Rational rational_from_json(const json& j) {
  if (j.is_number_integer()) return Rational(j.get<long>());
  expect_object(j, "rational", {"num", "den"});
  const Integer num = integer_from_json(j["num"], "rational.num");
  const Integer den = integer_from_json(j["den"], "rational.den");
  if (den == 0) throw SchemaError("rational: zero denominator");
  Rational q(num, den);
  q.canonicalize();
  return q;
}

json to_json(const CoverProfile& p) {
  json orbits = json::array();
  for (const auto& o : p.orbits) orbits.push_back({{"id", o.id}, {"k", o.k}});
  return {{"n", p.n}, {"genus_base", p.genus_base}, {"orbits", orbits}};
}

CoverProfile profile_from_json(const json& j) {
  expect_object(j, "profile", {"n", "genus_base", "orbits"});
  if (!j["orbits"].is_array()) throw SchemaError("profile.orbits: expected an array");
  std::vector<std::pair<std::string, long>> orbits;
  for (const auto& o : j["orbits"]) {
    expect_object(o, "orbit", {"id", "k"});
    orbits.emplace_back(get_string(o["id"], "orbit.id"), get_int(o["k"], "orbit.k"));
  }
  return CoverProfile::make(get_int(j["n"], "profile.n"), get_int(j["genus_base"], "profile.genus_base"), orbits);
}

json to_json(const InvariantDivisor& d) { return {{"residues", d.residues}, {"base_degree", d.base_degree}}; }

InvariantDivisor divisor_from_json(const json& j) {
  expect_object(j, "divisor", {"residues", "base_degree"});
  return {int_map(j["residues"], "divisor.residues"), get_int(j["base_degree"], "divisor.base_degree")};
}

json to_json(const DeterminantLift& d) {
  return {{"residues", d.residues}, {"degree", d.degree}, {"lift_sign", sign_str(d.sign)}};
}

DeterminantLift det_from_json(const json& j) {
  expect_object(j, "det", {"residues", "degree"}, {"lift_sign"});
  DeterminantLift d;
  d.residues = int_map(j["residues"], "det.residues");
  d.degree = get_int(j["degree"], "det.degree");
  if (j.contains("lift_sign")) d.sign = sign_from_json(j["lift_sign"]);
  return d;
}

json to_json(const NumericData& n) {
  json o = json::object();
  for (const auto& [id, p] : n) o[id] = {p.first, p.second};
  return o;
}

NumericData numeric_from_json(const json& j) {
  if (!j.is_object()) throw SchemaError("numeric: expected an object");
  NumericData out;
  for (const auto& [id, v] : j.items()) {
    if (!v.is_array() || v.size() != 2) throw SchemaError("numeric: expected [d1, d2] pairs");
    out[id] = {get_int(v[0], "numeric.d1"), get_int(v[1], "numeric.d2")};
  }
  return out;
}

json to_json(const Rank2EqData& d) { return {{"numeric", to_json(d.numeric)}, {"det", to_json(d.det)}}; }

Rank2EqData rank2_from_json(const json& j) {
  expect_object(j, "data", {"numeric", "det"});
  return {numeric_from_json(j["numeric"]), det_from_json(j["det"])};
}

json to_json(const AdmissibleParabolicDatum& p) {
  json w = json::object();
  for (const auto& [id, q] : p.weights) w[id] = to_json(q);
  return {{"det_bar_degree", p.det_bar_degree},
          {"weights", w},
          {"d2", p.d2},
          {"det_lift_sign", sign_str(p.det_lift_sign)}};
}

AdmissibleParabolicDatum parabolic_datum_from_json(const json& j) {
  expect_object(j, "parabolic datum", {"det_bar_degree", "weights", "d2"}, {"det_lift_sign"});
  AdmissibleParabolicDatum p;
  p.det_bar_degree = get_int(j["det_bar_degree"], "det_bar_degree");
  if (!j["weights"].is_object()) throw SchemaError("weights: expected an object");
  for (const auto& [id, v] : j["weights"].items()) p.weights[id] = rational_from_json(v);
  p.d2 = int_map(j["d2"], "d2");
  if (j.contains("det_lift_sign")) p.det_lift_sign = sign_from_json(j["det_lift_sign"]);
  return p;
}

json to_json(const FlagConfiguration& f) {
  json pts = json::array(), flags = json::array(), weights = json::array();
  for (const auto& z : f.bundle.points) pts.push_back(to_json(z));
  for (const auto& fl : f.bundle.flags) flags.push_back({to_json(fl.a), to_json(fl.b)});
  for (const auto& w : f.bundle.weights) weights.push_back(to_json(w));
  return {{"g", f.g}, {"c", f.bundle.c}, {"points", pts}, {"flags", flags}, {"weights", weights}};
}

FlagConfiguration flags_from_json(const json& j) {
  expect_object(j, "flag configuration", {"g", "c", "points", "flags", "weights"});
  FlagConfiguration f;
  f.g = get_int(j["g"], "g");
  if (f.g < 0) throw SchemaError("g must be non-negative");
  f.bundle.c = get_int(j["c"], "c");
  f.bundle.d = -(f.g + 1);
  for (const char* key : {"points", "flags", "weights"}) {
    if (!j[key].is_array()) throw SchemaError(std::string(key) + ": expected an array");
  }
  for (const auto& z : j["points"]) f.bundle.points.push_back(rational_from_json(z));
  for (const auto& fl : j["flags"]) {
    if (!fl.is_array() || fl.size() != 2) throw SchemaError("flags: expected [a, b] pairs");
    ProjectiveFlag pf{rational_from_json(fl[0]), rational_from_json(fl[1])};
    if (pf.a == 0 && pf.b == 0) throw SchemaError("flags: (0:0) is not a projective point");
    f.bundle.flags.push_back(normalized(pf));
  }
  for (const auto& w : j["weights"]) f.bundle.weights.push_back(rational_from_json(w));
  return f;
}

json to_json(const SubbundleWitness& w) {
  return {{"e", w.e}, {"p", poly_json(w.p)}, {"q", poly_json(w.q)}, {"agreement", index_list(w.agreement)},
          {"agreement_count", w.agreement.size()}};
}

json to_json(const StabilityVerdict& v) {
  json j = {{"class", to_string(v.cls)}};
  if (v.witness) j["witness"] = to_json(*v.witness);
  return j;
}

json to_json(const ParabolicGraded& g) {
  json a = json::array();
  for (const auto& s : g.summands) a.push_back({{"degree", s.degree}, {"support", index_list(s.support)}});
  return a;
}

json to_json(const GradedPoint& p) {
  json s = json::array();
  for (const auto& l : p.summands) s.push_back({{"bar_degree", l.bar_degree}, {"support", l.support}});
  return {{"summands", s}, {"det", to_json(p.det)}, {"numeric", to_json(p.numeric)}};
}

GradedPoint graded_point_from_json(const json& j) {
  expect_object(j, "graded point", {"summands", "det", "numeric"});
  if (!j["summands"].is_array() || j["summands"].size() != 2)
    throw SchemaError("graded point: expected two summands");
  GradedLine lines[2];
  for (int i = 0; i < 2; ++i) {
    const auto& s = j["summands"][i];
    expect_object(s, "summand", {"bar_degree", "support"});
    lines[i].bar_degree = get_int(s["bar_degree"], "bar_degree");
    if (!s["support"].is_array()) throw SchemaError("support: expected an array");
    for (const auto& id : s["support"]) lines[i].support.insert(get_string(id, "support id"));
  }
  return GradedPoint::make(lines[0], lines[1], det_from_json(j["det"]), numeric_from_json(j["numeric"]));
}

json to_json(const DecompositionReport& r) {
  return {{"n", r.n},
          {"r", r.r},
          {"n_parity", r.n_parity},
          {"r_parity", r.r_parity},
          {"case", case_name(r.tag)},
          {"statements", r.statements}};
}

json to_json(const ComponentRecord& c) {
  json j = {{"label", c.label}, {"dimension", c.dimension}, {"boundary_class_count", c.boundary_classes.size()},
            {"boundary_classes", c.boundary_classes}, {"normal", c.normal}};
  if (c.c) j["c"] = *c.c;
  return j;
}

json to_json(const HyperellipticReport& r) {
  json comps = json::array();
  for (const auto& c : r.components) comps.push_back(to_json(c));
  json pairs = json::array();
  for (const auto& [key, classes] : r.pairwise_intersections) {
    pairs.push_back({{"c1", key.first}, {"c2", key.second}, {"count", classes.size()}, {"classes", classes}});
  }
  return {{"g", r.g},
          {"d", r.d},
          {"components", comps},
          {"pairwise_intersections", pairs},
          {"global_intersection", r.global_intersection},
          {"semistable_class_count", r.semistable_class_count}};
}

json to_json(const CensusRecord& c) {
  json comps = json::array();
  for (const auto& x : c.components) {
    comps.push_back({{"kind", x.kind}, {"description", x.description}, {"dimension", x.dimension}});
  }
  return {{"n", c.n}, {"deg_delta", c.deg_delta}, {"genus_Y", c.genus_Y},
          {"case", c.case_name}, {"components", comps}, {"notes", c.notes}};
}

} // namespace fixloc::io
