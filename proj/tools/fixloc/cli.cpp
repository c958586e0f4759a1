#include "cli.hpp"

#include "fixloc/errors.hpp"
#include "fixloc/json_io.hpp"
#include "fixloc/sampling.hpp"

#include <fstream>
#include <functional>
#include <map>
#include <ostream>
#include <sstream>

namespace fixloc::cli {

namespace {

using io::json;

struct Report {
  json data;
  std::string text;
  std::optional<std::string> dot;
  int status = kExitOk;
};

json read_input(const CommandConfig& cfg) {
  if (!cfg.input_path) throw SchemaError("--file is required for '" + cfg.subcommand + "'");
  std::ifstream in(*cfg.input_path);
  if (!in) throw SchemaError("cannot open '" + *cfg.input_path + "'");
  try {
    return json::parse(in);
  } catch (const json::parse_error& e) {
    throw SchemaError(std::string("malformed JSON: ") + e.what());
  }
}

long require(const std::optional<long>& v, const char* flag, const CommandConfig& cfg) {
  if (!v) throw SchemaError(std::string(flag) + " is required for '" + cfg.subcommand + "'");
  return *v;
}

// A bare profile document, or {"profile": ...} with extra payload.
CoverProfile profile_input(const CommandConfig& cfg) {
  if (!cfg.input_path && cfg.g) return hyperelliptic_profile(*cfg.g);
  json j = read_input(cfg);
  return io::profile_from_json(j.contains("profile") ? j["profile"] : j);
}

void expect_keys(const json& j, std::initializer_list<const char*> keys) {
  if (!j.is_object()) throw SchemaError("expected a JSON object");
  for (const char* k : keys) {
    if (!j.contains(k)) throw SchemaError(std::string("missing field '") + k + "'");
  }
  for (const auto& [k, _] : j.items()) {
    bool known = false;
    for (const char* key : keys) known = known || k == key;
    if (!known) throw SchemaError("unknown field '" + k + "'");
  }
}

std::string q_label(const SubsetLabel& q) {
  if (q.empty()) return "<>";
  std::string s = "<";
  for (std::size_t i = 0; i < q.size(); ++i) s += (i ? "," : "") + q[i];
  return s + ">";
}

Report cmd_kernel(const CommandConfig& cfg) {
  const auto p = profile_input(cfg);
  const long r = kernel_order(p);
  return {{{"kernel_order", r}}, "kernel order: " + std::to_string(r) + "\n", {}, kExitOk};
}

Report cmd_factor(const CommandConfig& cfg) {
  const auto p = profile_input(cfg);
  const auto f = factor_cover(p);
  std::ostringstream t;
  t << "ramified part: order " << f.ramified.n << ", lengths";
  for (const auto& o : f.ramified.orbits) t << ' ' << o.id << ':' << o.k;
  t << "\nunramified degree: " << f.unramified_degree << '\n';
  return {{{"ramified", io::to_json(f.ramified)}, {"unramified_degree", f.unramified_degree}}, t.str(), {}, kExitOk};
}

Report cmd_lambda(const CommandConfig& cfg) {
  json j = read_input(cfg);
  expect_keys(j, {"profile", "det"});
  const auto p = io::profile_from_json(j["profile"]);
  const auto det = io::det_from_json(j["det"]);
  const auto lambda = enumerate_lambda(det, p);
  json arr = json::array();
  std::ostringstream t;
  t << "|Lambda| = " << lambda.size() << '\n';
  for (const auto& nd : lambda) {
    const long bar = bar_delta_degree(det, nd, p);
    arr.push_back({{"numeric", io::to_json(nd)}, {"det_bar_degree", bar}});
    for (const auto& [id, pr] : nd) t << id << "=(" << pr.first << ',' << pr.second << ") ";
    t << "| deg Delta_bar = " << bar << '\n';
  }
  return {{{"count", lambda.size()}, {"lambda", arr}}, t.str(), {}, kExitOk};
}

Report cmd_weights(const CommandConfig& cfg) {
  json j = read_input(cfg);
  expect_keys(j, {"profile", "numeric"});
  const auto p = io::profile_from_json(j["profile"]);
  const auto nd = io::numeric_from_json(j["numeric"]);
  for (const auto& [id, pr] : nd) {
    const auto& o = p.orbit(id);
    if (!(0 <= pr.first && pr.first <= pr.second && pr.second < o.nprime))
      throw InvalidDatum("numeric pair at '" + id + "' is not in T_n'");
  }
  const auto w = weight_system(nd, p);
  json out = json::object();
  std::ostringstream t;
  for (const auto& [id, q] : w) {
    out[id] = io::to_json(q);
    t << id << ": " << q.get_str() << '\n';
  }
  return {{{"weights", out}}, t.str(), {}, kExitOk};
}

Report cmd_bijection_check(const CommandConfig& cfg) {
  Rng rng(cfg.seed.value_or(kDefaultSeed));
  std::vector<CoverProfile> profiles;
  if (cfg.input_path || cfg.g) {
    profiles.push_back(profile_input(cfg));
  } else {
    for (int i = 0; i < 20; ++i) profiles.push_back(random_profile(rng, 12, 4));
  }
  long checked = 0;
  for (const auto& p : profiles) {
    for (int trial = 0; trial < 4; ++trial) {
      const auto det = random_det(rng, p);
      for (const auto& nd : enumerate_lambda(det, p)) {
        const Rank2EqData data{nd, det};
        const auto pdat = to_parabolic(data, p);
        const auto back = from_parabolic(pdat, p);
        ++checked;
        if (!(back == data) || !(to_parabolic(back, p) == pdat)) {
          json ce = {{"profile", io::to_json(p)}, {"data", io::to_json(data)},
                     {"parabolic", io::to_json(pdat)}, {"round_trip", io::to_json(back)}};
          return {{{"ok", false}, {"counterexample", ce}}, "round trip failed:\n" + ce.dump(2) + "\n", {},
                  kExitPropertyFailure};
        }
      }
    }
  }
  std::string text = "round trip holds on " + std::to_string(checked) + " data over " +
                     std::to_string(profiles.size()) + " profiles\n";
  return {{{"ok", true}, {"profiles", profiles.size()}, {"data_checked", checked}}, text, {}, kExitOk};
}

Report cmd_zeta2(const CommandConfig& cfg) {
  json j = read_input(cfg);
  expect_keys(j, {"profile", "data"});
  const auto p = io::profile_from_json(j["profile"]);
  const auto data = io::rank2_from_json(j["data"]);
  const auto image = zeta2_apply(data, p);
  json out = {{"data", io::to_json(image)}, {"parabolic", io::to_json(to_parabolic(image, p))}};
  return {out, out.dump(2) + "\n", {}, kExitOk};
}

Report cmd_orbits(const CommandConfig& cfg) {
  CoverProfile p;
  std::vector<GradedPoint> points;
  if (cfg.input_path) {
    json j = read_input(cfg);
    expect_keys(j, {"profile", "points"});
    p = io::profile_from_json(j["profile"]);
    if (!j["points"].is_array()) throw SchemaError("points: expected an array");
    for (const auto& pt : j["points"]) {
      points.push_back(io::graded_point_from_json(pt));
      validate(points.back(), p);
    }
  } else {
    const long g = require(cfg.g, "--g or --file", cfg);
    if (g < 1) throw InvalidGenus("g must be at least 1");
    p = hyperelliptic_profile(g);
    const std::size_t npts = p.orbits.size();
    for (std::size_t mask = 0; mask < (std::size_t{1} << npts); ++mask) {
      if (__builtin_popcountll(mask) % 2) continue;
      std::set<std::string> q;
      for (std::size_t i = 0; i < npts; ++i) {
        if (mask >> i & 1) q.insert(p.orbits[i].id);
      }
      points.push_back(double_bracket_point(p, q));
      points.push_back(bracket_point(p, q));
    }
  }
  const auto classes = equivalence_classes(points, p);
  json arr = json::array();
  std::ostringstream t, dot;
  t << classes.size() << " classes\n";
  dot << "graph classes {\n";
  for (std::size_t i = 0; i < classes.size(); ++i) {
    json members = json::array();
    for (const auto& m : classes[i]) members.push_back(io::to_json(m));
    arr.push_back(members);
    t << "class " << i << ": " << classes[i].size() << " points\n";
    for (std::size_t a = 0; a + 1 < classes[i].size(); ++a) {
      dot << "  \"" << i << "." << a << "\" -- \"" << i << "." << a + 1 << "\";\n";
    }
    if (classes[i].size() == 1) dot << "  \"" << i << ".0\";\n";
  }
  dot << "}\n";
  return {{{"class_count", classes.size()}, {"classes", arr}}, t.str(), dot.str(), kExitOk};
}

Report cmd_decompose(const CommandConfig& cfg) {
  const auto rep = decomposition_report(profile_input(cfg));
  std::ostringstream t;
  t << "case: \"" << case_name(rep.tag) << "\" (n = " << rep.n << ", r = " << rep.r << ")\n";
  for (const auto& s : rep.statements) t << "  - " << s << '\n';
  return {io::to_json(rep), t.str(), {}, kExitOk};
}

Report cmd_hyperelliptic(const CommandConfig& cfg) {
  const auto rep = hyperelliptic_report(require(cfg.g, "--g", cfg));
  std::ostringstream t, dot;
  t << "hyperelliptic g = " << rep.g << ", d = " << rep.d << '\n';
  t << "component  dim  boundary classes  normal\n";
  for (const auto& c : rep.components) {
    t << c.label << "  " << c.dimension << "  " << c.boundary_classes.size() << "  "
      << (c.normal ? "yes" : "no") << '\n';
  }
  for (const auto& [key, cls] : rep.pairwise_intersections) {
    t << "c=" << key.first << " meets c=" << key.second << " in " << cls.size() << " classes\n";
  }
  t << "global intersection:";
  for (const auto& q : rep.global_intersection) t << ' ' << q_label(q);
  t << "\nsemistable classes: " << rep.semistable_class_count << '\n';

  dot << "digraph lattice {\n";
  for (const auto& c : rep.components) {
    dot << "  \"" << c.label << "\" [shape=box, label=\"" << c.label << " dim " << c.dimension << "\"];\n";
    for (const auto& q : c.boundary_classes) dot << "  \"" << c.label << "\" -> \"" << q_label(q) << "\";\n";
  }
  dot << "}\n";
  return {io::to_json(rep), t.str(), dot.str(), kExitOk};
}

Report cmd_census(const CommandConfig& cfg) {
  const auto rec = unramified_census(require(cfg.n, "--n", cfg), require(cfg.deg_delta, "--deg-delta", cfg),
                                     cfg.genus_y.value_or(2));
  std::ostringstream t;
  t << "case: \"" << rec.case_name << "\"\n";
  for (const auto& c : rec.components) t << "  [" << c.kind << "] " << c.description << " (dim " << c.dimension << ")\n";
  for (const auto& n : rec.notes) t << "  note: " << n << '\n';
  return {io::to_json(rec), t.str(), {}, kExitOk};
}

Report cmd_stability(const CommandConfig& cfg) {
  const auto cfgflags = io::flags_from_json(read_input(cfg));
  const auto verdict = stability_classify(cfgflags.bundle, cfgflags.g);
  json out = io::to_json(verdict);
  std::ostringstream t;
  t << to_string(verdict.cls) << '\n';
  if (verdict.witness) {
    t << "witness: e = " << verdict.witness->e << ", agreements = " << verdict.witness->agreement.size() << '\n';
  }
  if (verdict.cls == StabilityClass::StrictlySemistable) {
    const auto gr = graded_of(cfgflags.bundle, verdict);
    out["graded"] = io::to_json(gr);
    t << "graded degrees: " << gr.summands[0].degree << ", " << gr.summands[1].degree << '\n';
  }
  return {out, t.str(), {}, kExitOk};
}

} // namespace

int run(const CommandConfig& config, std::ostream& out, std::ostream& err) {
  static const std::map<std::string, std::function<Report(const CommandConfig&)>> handlers{
      {"kernel", cmd_kernel},         {"factor", cmd_factor},
      {"lambda", cmd_lambda},         {"weights", cmd_weights},
      {"bijection-check", cmd_bijection_check},
      {"zeta2", cmd_zeta2},           {"orbits", cmd_orbits},
      {"decompose", cmd_decompose},   {"hyperelliptic", cmd_hyperelliptic},
      {"census", cmd_census},         {"stability", cmd_stability},
  };
  try {
    auto it = handlers.find(config.subcommand);
    if (it == handlers.end()) throw SchemaError("unknown subcommand '" + config.subcommand + "'");
    Report r = it->second(config);
    switch (config.format) {
      case OutputFormat::Json: out << r.data.dump(2) << '\n'; break;
      case OutputFormat::Text: out << r.text; break;
      case OutputFormat::Dot:
        if (!r.dot) throw SchemaError("--format dot is not available for '" + config.subcommand + "'");
        out << *r.dot;
        break;
    }
    return r.status;
  } catch (const SchemaError& e) {
    err << "schema error: " << e.what() << '\n';
    return kExitSchema;
  } catch (const json::exception& e) {
    err << "schema error: " << e.what() << '\n';
    return kExitSchema;
  } catch (const Error& e) {
    err << "domain error: " << e.what() << '\n';
    return kExitDomain;
  }
}

} // namespace fixloc::cli
