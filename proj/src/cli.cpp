#include "eulcat/cli.hpp"

#include <cstdlib>
#include <functional>
#include <map>
#include <ostream>
#include <set>
#include <sstream>

#include "CLI11.hpp"

#include "eulcat/constructions.hpp"
#include "eulcat/error.hpp"
#include "eulcat/eulerchar.hpp"
#include "eulcat/groupact.hpp"
#include "eulcat/hocolim.hpp"
#include "eulcat/io.hpp"
#include "eulcat/ratlin.hpp"

namespace eulcat::cli {

namespace {

struct Options {
  bool json = false;
  std::string file;
  bool co = false;
  bool emit = false;
  std::string invariant = "chil";
  std::string spectrum;
  std::vector<std::string> candidates;
  std::vector<std::string> vals;
  std::string demo;
};

std::string yes_no(bool b) { return b ? "true" : "false"; }

std::optional<std::size_t> max_dim() {
  const char* v = std::getenv("EULCAT_MAX_DIM");
  if (!v || !*v) return std::nullopt;
  try {
    return static_cast<std::size_t>(std::stoul(v));
  } catch (const std::exception&) {
    throw Error(ErrorKind::ParseError, "EULCAT_MAX_DIM must be a non-negative integer");
  }
}

Manifest load(const std::string& path, std::initializer_list<const char*> kinds) {
  Manifest m = read_manifest(path);
  for (const char* k : kinds)
    if (m.kind == k) return m;
  std::string want;
  for (const char* k : kinds) want += (want.empty() ? "" : " or ") + std::string(k);
  throw Error(ErrorKind::ParseError, path + " holds a " + m.kind + ", expected " + want);
}

FinCat load_category(const std::string& path) { return category_from_json(load(path, {"category"}).payload); }
ScwolAction load_action(const std::string& path) { return action_from_json(load(path, {"action"}).payload); }

PseudoDiagram load_diagram(const std::string& path) {
  Manifest m = load(path, {"diagram", "pseudo_diagram"});
  if (m.kind == "diagram") return PseudoDiagram::from_strict(diagram_from_json(m.payload));
  return pseudo_diagram_from_json(m.payload);
}

std::string join_values(const FinCat& c, const std::vector<Rational>& v) {
  std::string s;
  for (ObjId x = 0; x < c.num_objects(); ++x) s += (x ? ", " : "") + c.object_name(x) + ": " + to_string(v[x]);
  return s;
}

std::string category_summary(const FinCat& c) {
  return std::to_string(c.num_objects()) + " objects, " + std::to_string(c.num_morphisms()) + " morphisms";
}

Json category_report(const FinCat& c) {
  std::optional<Rational> chil = try_chi_L(c);
  Json j{{"objects", c.num_objects()}, {"morphisms", c.num_morphisms()}};
  j["chi_L"] = chil ? rational_json(*chil) : Json(nullptr);
  return j;
}

void print_category_report(std::ostream& out, const FinCat& c) {
  out << category_summary(c) << "\n";
  std::optional<Rational> chil = try_chi_L(c);
  out << "chi_L: " << (chil ? to_string(*chil) : "undefined") << "\n";
}

Invariant parse_invariant(const std::string& s) {
  if (s == "chil") return Invariant::ChiL;
  if (s == "chi2") return Invariant::Chi2;
  if (s == "chi") return Invariant::ChiScwol;
  throw Error(ErrorKind::UnknownKind, "unknown invariant " + s + " (chil, chi2, chi)");
}

// "name=p/q"
std::map<std::string, Rational> parse_vals(const std::vector<std::string>& raw) {
  std::map<std::string, Rational> out;
  for (const auto& item : raw) {
    std::stringstream ss(item);
    std::string part;
    while (std::getline(ss, part, ',')) {
      auto eq = part.find('=');
      if (eq == std::string::npos) throw Error(ErrorKind::ParseError, "value \"" + part + "\" must look like obj=p/q");
      out[part.substr(0, eq)] = parse_rational(part.substr(eq + 1));
    }
  }
  return out;
}

DevelopabilityCandidate parse_candidate(const std::string& s) {
  auto c = s.find(':');
  if (c == std::string::npos) throw Error(ErrorKind::ParseError, "candidate \"" + s + "\" must look like chi:order");
  Rational chi = parse_rational(s.substr(0, c)), order = parse_rational(s.substr(c + 1));
  if (!is_integer(chi) || !is_integer(order) || order <= 0)
    throw Error(ErrorKind::ParseError, "candidate \"" + s + "\" needs an integer chi and a positive order");
  return {chi.get_num(), order.get_num()};
}

// ---------------------------------------------------------------- commands

int cmd_validate(const Options& o, std::ostream& out) {
  Manifest m = read_manifest(o.file);
  std::string summary;
  if (m.kind == "category") {
    summary = category_summary(category_from_json(m.payload));
  } else if (m.kind == "group") {
    summary = "order " + std::to_string(group_from_json(m.payload).order());
  } else if (m.kind == "diagram") {
    summary = "index " + category_summary(diagram_from_json(m.payload).index);
  } else if (m.kind == "pseudo_diagram") {
    summary = "index " + category_summary(pseudo_diagram_from_json(m.payload).index);
  } else if (m.kind == "action") {
    auto a = action_from_json(m.payload);
    summary = "group of order " + std::to_string(a.group.order()) + " on " + category_summary(a.space);
  } else if (m.kind == "complex") {
    summary = "base " + category_summary(complex_from_json(m.payload).base);
  } else {
    summary = "index " + category_summary(spectrum_from_json(m.payload).index);
  }
  if (o.json)
    out << Json{{"kind", m.kind}, {"valid", true}, {"summary", summary}}.dump(2) << "\n";
  else
    out << "valid " << m.kind << ": " << summary << "\n";
  return kOk;
}

int cmd_classify(const Options& o, std::ostream& out) {
  const PredicateReport r = classify(load_category(o.file));
  const std::pair<const char*, bool> rows[] = {{"is_scwol", r.is_scwol},       {"is_EI", r.is_EI},
                                               {"is_directly_finite", r.is_directly_finite},
                                               {"is_groupoid", r.is_groupoid}, {"is_skeletal", r.is_skeletal},
                                               {"is_connected", r.is_connected}};
  if (o.json) {
    Json j = Json::object();
    for (auto& [k, v] : rows) j[k] = v;
    out << j.dump(2) << "\n";
  } else {
    for (auto& [k, v] : rows) out << k << ": " << yes_no(v) << "\n";
  }
  return kOk;
}

int cmd_skeleton(const Options& o, std::ostream& out) {
  const FinCat c = load_category(o.file);
  const Skeleton sk = skeleton(c);
  const auto classes = iso_classes(c);
  if (o.emit) {
    out << dump(Manifest{"category", to_json(sk.gamma)}) << "\n";
    return kOk;
  }
  if (o.json) {
    Json cls = Json::array();
    for (const auto& k : classes) {
      Json members = Json::array();
      for (ObjId m : k.members) members.push_back(c.object_name(m));
      cls.push_back({{"representative", c.object_name(k.representative)}, {"members", members},
                     {"aut_order", k.aut.order()}});
    }
    out << Json{{"classes", cls}, {"skeleton", to_json(sk.gamma)}}.dump(2) << "\n";
    return kOk;
  }
  out << "skeleton: " << category_summary(sk.gamma) << "\n";
  for (const auto& k : classes) {
    out << c.object_name(k.representative) << ": |aut| = " << k.aut.order() << ", members";
    for (ObjId m : k.members) out << " " << c.object_name(m);
    out << "\n";
  }
  return kOk;
}

int print_value(const Options& o, std::ostream& out, const char* key, const std::string& v) {
  if (o.json)
    out << Json{{key, v}}.dump(2) << "\n";
  else
    out << v << "\n";
  return kOk;
}

int cmd_chi(const Options& o, std::ostream& out) {
  const FinCat c = load_category(o.file);
  const PathCounts pc = path_counts(c, max_dim());
  if (pc.truncated) throw Error(ErrorKind::DimensionMismatch, "path counts exceed EULCAT_MAX_DIM");
  return print_value(o, out, "chi", to_string(pc.alternating_sum()));
}

int cmd_chi2(const Options& o, std::ostream& out) {
  return print_value(o, out, "chi2", to_string(chi2(load_category(o.file))));
}

int cmd_chil(const Options& o, std::ostream& out) {
  return print_value(o, out, "chi_L", to_string(chi_L(load_category(o.file))));
}

int cmd_weighting(const Options& o, std::ostream& out) {
  const FinCat c = load_category(o.file);
  const Weighting w = o.co ? coweighting(c) : weighting(c);
  if (o.json) {
    Json v = Json::object();
    for (ObjId x = 0; x < c.num_objects(); ++x) v[c.object_name(x)] = rational_json(w.values[x]);
    out << Json{{o.co ? "coweighting" : "weighting", v}, {"sum", rational_json(w.sum())}, {"unique", w.unique}}.dump(2)
        << "\n";
  } else {
    out << join_values(c, w.values) << "\n";
  }
  return kOk;
}

int cmd_paths(const Options& o, std::ostream& out) {
  const PathCounts pc = path_counts(load_category(o.file), max_dim());
  if (o.json) {
    Json c = Json::array();
    for (const auto& n : pc.c) c.push_back(to_string(n));
    Json j{{"counts", c}, {"truncated", pc.truncated}};
    j["alternating_sum"] = pc.truncated ? Json(nullptr) : Json(to_string(pc.alternating_sum()));
    out << j.dump(2) << "\n";
    return kOk;
  }
  for (std::size_t n = 0; n < pc.c.size(); ++n) out << "c_" << n << ": " << to_string(pc.c[n]) << "\n";
  if (pc.truncated)
    out << "truncated by EULCAT_MAX_DIM\n";
  else
    out << "alternating sum: " << to_string(pc.alternating_sum()) << "\n";
  return kOk;
}

int cmd_hocolim(const Options& o, std::ostream& out) {
  const PseudoDiagram d = load_diagram(o.file);
  const FinCat h = grothendieck_pseudo(d);
  if (o.emit) {
    out << dump(Manifest{"category", to_json(h)}) << "\n";
  } else if (o.json) {
    Json j = category_report(h);
    j["category"] = to_json(h);
    out << j.dump(2) << "\n";
  } else {
    print_category_report(out, h);
  }
  return kOk;
}

int cmd_check_formula(const Options& o, std::ostream& out) {
  const PseudoDiagram d = load_diagram(o.file);
  const Invariant inv = parse_invariant(o.invariant);
  FormulaReport r = o.spectrum.empty()
                        ? check_hocolim_formula(d, inv)
                        : check_hocolim_formula(d, inv, spectrum_from_json(load(o.spectrum, {"spectrum"}).payload));
  if (o.json) {
    Json v = Json::object();
    for (const auto& [k, q] : r.vertex_values) v[k] = rational_json(q);
    out << Json{{"lhs", rational_json(r.lhs)}, {"rhs", rational_json(r.rhs)}, {"equal", r.equal}, {"vertex_values", v}}
               .dump(2)
        << "\n";
  } else {
    for (const auto& [k, q] : r.vertex_values) out << "vertex " << k << ": " << to_string(q) << "\n";
    out << "lhs: " << to_string(r.lhs) << "\nrhs: " << to_string(r.rhs) << "\n" << (r.equal ? "PASS" : "FAIL") << "\n";
  }
  return r.equal ? kOk : kFail;
}

int cmd_quotient(const Options& o, std::ostream& out) {
  const QuotientResult q = quotient(load_action(o.file));
  if (o.emit) {
    out << dump(Manifest{"category", to_json(q.quotient)}) << "\n";
  } else if (o.json) {
    out << Json{{"quotient", to_json(q.quotient)}}.dump(2) << "\n";
  } else {
    out << "quotient: " << category_summary(q.quotient) << "\n";
    for (ObjId x = 0; x < q.quotient.num_objects(); ++x) out << "object " << q.quotient.object_name(x) << "\n";
    for (MorId f = 0; f < q.quotient.num_morphisms(); ++f)
      if (!q.quotient.is_identity(f))
        out << "morphism " << q.quotient.morphism_name(f) << ": " << q.quotient.object_name(q.quotient.source(f))
            << " -> " << q.quotient.object_name(q.quotient.target(f)) << "\n";
  }
  return kOk;
}

int cmd_complex(const Options& o, std::ostream& out) {
  const ScwolAction a = load_action(o.file);
  const ComplexResult r = complex_of_groups(a);
  const ComplexOfGroups& f = r.complex;
  const FinCat& y = f.base;
  if (o.emit) {
    out << dump(Manifest{"complex", to_json(f)}) << "\n";
    return kOk;
  }
  if (o.json) {
    Json reps = Json::object(), hs = Json::object();
    for (ObjId s = 0; s < y.num_objects(); ++s) reps[y.object_name(s)] = a.space.object_name(r.representative[s]);
    for (MorId m = 0; m < y.num_morphisms(); ++m) hs[y.morphism_name(m)] = a.group.label(r.h[m]);
    out << Json{{"complex", to_json(f)}, {"representatives", reps}, {"h", hs}}.dump(2) << "\n";
    return kOk;
  }
  for (ObjId s = 0; s < y.num_objects(); ++s)
    out << "local " << y.object_name(s) << ": order " << f.local[s].order() << ", representative "
        << a.space.object_name(r.representative[s]) << "\n";
  for (MorId m = 0; m < y.num_morphisms(); ++m) {
    if (y.is_identity(m)) continue;
    out << "hom " << y.morphism_name(m) << " (h = " << a.group.label(r.h[m]) << "):";
    const GroupHom& h = f.homs[m];
    for (Elem g = 0; g < h.source.order(); ++g) out << " " << h.source.label(g) << "->" << h.target.label(h(g));
    out << "\n";
  }
  for (const auto& [key, g] : f.twists)
    out << "twist " << y.morphism_name(key.first) << "∘" << y.morphism_name(key.second) << ": "
        << f.local[y.target(key.first)].label(g) << "\n";
  return kOk;
}

ComplexOfGroups load_complex(const std::string& path) {
  Manifest m = load(path, {"complex", "action"});
  if (m.kind == "complex") return complex_from_json(m.payload);
  return complex_of_groups(action_from_json(m.payload)).complex;
}

int cmd_hocolim_groups(const Options& o, std::ostream& out) {
  const FinCat h = hocolim_groups(load_complex(o.file));
  if (o.emit) {
    out << dump(Manifest{"category", to_json(h)}) << "\n";
  } else if (o.json) {
    Json j = category_report(h);
    j["category"] = to_json(h);
    out << j.dump(2) << "\n";
  } else {
    print_category_report(out, h);
  }
  return kOk;
}

int cmd_transport(const Options& o, std::ostream& out) {
  const ScwolAction a = load_action(o.file);
  const FinCat t = transport_groupoid(a);
  const Rational c2 = groupoid_chi2(t);
  const std::size_t orbits = quotient(a).quotient.num_objects();
  if (o.json) {
    Json j = category_report(t);
    j["chi2"] = rational_json(c2);
    j["orbits"] = orbits;
    out << j.dump(2) << "\n";
  } else {
    print_category_report(out, t);
    out << "chi2: " << to_string(c2) << "\norbits: " << orbits << "\n";
  }
  return kOk;
}

int cmd_chi_theorems(const Options& o, std::ostream& out) {
  const ChiReport r = chi_theorems(load_action(o.file));
  if (o.json) {
    Json j{{"chi_space", to_string(r.chi_space)},
           {"chi_quotient", to_string(r.chi_quotient)},
           {"group_order", r.group_order},
           {"free_on_objects", r.free_on_objects},
           {"chi2_formula", rational_json(r.chi2_formula)},
           {"chi2_hocolim", rational_json(r.chi2_hocolim)},
           {"chi_space_over_order", rational_json(r.chi_space_over_order)},
           {"chi2_agrees", r.chi2_agrees},
           {"chi_hocolim", rational_json(r.chi_hocolim)},
           {"chi_agrees", r.chi_agrees},
           {"pass", r.all()}};
    j["free_quotient_law"] = r.free_quotient_law ? Json(*r.free_quotient_law) : Json(nullptr);
    out << j.dump(2) << "\n";
  } else {
    out << "chi(X): " << to_string(r.chi_space) << "\nchi(X/G): " << to_string(r.chi_quotient)
        << "\n|G|: " << r.group_order << "\n";
    if (r.free_quotient_law) out << "free quotient law: " << (*r.free_quotient_law ? "PASS" : "FAIL") << "\n";
    out << "chi2(hocolim) by formula: " << to_string(r.chi2_formula) << "\nchi2(hocolim) by chi_L: "
        << to_string(r.chi2_hocolim) << "\nchi(X)/|G|: " << to_string(r.chi_space_over_order)
        << "\nchi(hocolim): " << to_string(r.chi_hocolim) << "\n"
        << (r.all() ? "PASS" : "FAIL") << "\n";
  }
  return r.all() ? kOk : kFail;
}

int cmd_developability(const Options& o, std::ostream& out) {
  std::vector<DevelopabilityCandidate> cands;
  for (const auto& c : o.candidates) cands.push_back(parse_candidate(c));
  const DevelopabilityReport r = developability_check(load_complex(o.file), cands);
  bool all = true;
  for (const auto& v : r.verdicts) all = all && v.pass;
  if (o.json) {
    Json vs = Json::array();
    for (const auto& v : r.verdicts)
      vs.push_back({{"chi_space", to_string(v.candidate.chi_space)},
                    {"group_order", to_string(v.candidate.group_order)},
                    {"required_chi", rational_json(v.required_chi)},
                    {"integral", v.integral},
                    {"sign_ok", v.sign_ok},
                    {"pass", v.pass}});
    out << Json{{"r", rational_json(r.r)}, {"verdicts", vs}}.dump(2) << "\n";
  } else {
    out << "chi2(hocolim): " << to_string(r.r) << "\n";
    for (const auto& v : r.verdicts)
      out << "chi " << to_string(v.candidate.chi_space) << ", |G| " << to_string(v.candidate.group_order)
          << ": required " << to_string(v.required_chi) << (v.integral ? "" : " (not an integer)")
          << (v.sign_ok ? "" : " (wrong sign)") << ", " << (v.pass ? "PASS" : "FAIL") << "\n";
  }
  return all ? kOk : kFail;
}

int cmd_haefliger(const Options& o, std::ostream& out) {
  const FinCat c = load_category(o.file);
  std::map<std::string, Rational> vals = parse_vals(o.vals);
  if (o.vals.empty())
    for (ObjId x = 0; x < c.num_objects(); ++x) vals[c.object_name(x)] = 1;
  return print_value(o, out, "chi", to_string(haefliger_chi(c, vals)));
}

// ---------------------------------------------------------------- demos

int demo_intro_pushout(const Options& o, std::ostream& out) {
  const StrictDiagram d = intro_pushout_diagram();
  const GrothendieckResult g = grothendieck(d);
  const Rational direct = chi_L(g.category);
  const FormulaReport r = check_hocolim_formula(d, Invariant::ChiL);
  const Rational a = r.vertex_values.at("k"), b = r.vertex_values.at("l"), c = r.vertex_values.at("j");
  const bool pass = r.equal && direct == r.rhs && direct == 0;
  if (o.json) {
    out << Json{{"hocolim", category_report(g.category)}, {"chi_direct", rational_json(direct)},
                {"chi_formula", rational_json(r.rhs)}, {"pass", pass}}
               .dump(2)
        << "\n";
  } else {
    out << "hocolim of {*} <- {y,z} -> {*'}: " << category_summary(g.category) << "\n"
        << "chi(hocolim) = " << to_string(direct) << "\n"
        << "chi({*}) + chi({*'}) - chi({y,z}) = " << to_string(a) << " + " << to_string(b) << " - " << to_string(c)
        << " = " << to_string(r.rhs) << "\n"
        << (pass ? "PASS" : "FAIL") << "\n";
  }
  return pass ? kOk : kFail;
}

int demo_z2_circle(const Options& o, std::ostream& out) {
  const ScwolAction a = circle_action();
  const ComplexResult cr = complex_of_groups(a);
  const FinCat& q = cr.quotient.quotient;
  const bool iso = find_isomorphism(q, pushout_scwol()).has_value();
  const ChiReport r = chi_theorems(a);
  const bool pass = iso && r.all() && r.chi2_hocolim == 0 && r.chi_hocolim == 1;
  if (o.json) {
    Json local = Json::object();
    for (ObjId s = 0; s < q.num_objects(); ++s) local[q.object_name(s)] = cr.complex.local[s].order();
    out << Json{{"quotient_is_pushout", iso},
                {"local_orders", local},
                {"chi_space", to_string(r.chi_space)},
                {"chi_quotient", to_string(r.chi_quotient)},
                {"chi2_hocolim", rational_json(r.chi2_hocolim)},
                {"chi_hocolim", rational_json(r.chi_hocolim)},
                {"pass", pass}}
               .dump(2)
        << "\n";
    return pass ? kOk : kFail;
  }
  out << "quotient: " << category_summary(q) << (iso ? ", isomorphic to the pushout scwol" : "") << "\n";
  for (ObjId s = 0; s < q.num_objects(); ++s)
    out << "local group at " << q.object_name(s) << ": order " << cr.complex.local[s].order() << "\n";
  out << "chi(X) = " << to_string(r.chi_space) << ", chi(X/G) = " << to_string(r.chi_quotient) << "\n"
      << "chi2(hocolim F) = " << to_string(r.chi2_hocolim) << " = chi(X)/|G| = " << to_string(r.chi_space_over_order)
      << "\n"
      << "chi(hocolim F) = " << to_string(r.chi_hocolim) << " = chi(X/G)\n"
      << (pass ? "PASS" : "FAIL") << "\n";
  return pass ? kOk : kFail;
}

int demo_inclusion_exclusion(const Options& o, std::ostream& out) {
  const std::vector<std::set<std::size_t>> sets = {{1, 2, 3, 4}, {3, 4, 5}, {1, 4, 6, 7}};
  std::set<std::size_t> all;
  for (const auto& s : sets) all.insert(s.begin(), s.end());
  const StrictDiagram d = inclusion_exclusion_diagram(sets);
  const FormulaReport r = check_hocolim_formula(d, Invariant::ChiL);
  const bool pass = r.equal && r.lhs == Rational(static_cast<unsigned long>(all.size()));
  if (o.json) {
    out << Json{{"union_size", all.size()}, {"chi_hocolim", rational_json(r.lhs)}, {"formula", rational_json(r.rhs)},
                {"pass", pass}}
               .dump(2)
        << "\n";
  } else {
    out << "sets: {1,2,3,4} {3,4,5} {1,4,6,7}\n"
        << "sum over nonempty J of (-1)^(|J|-1) |S_J| = " << to_string(r.rhs) << "\n"
        << "chi(hocolim) = " << to_string(r.lhs) << "\n|union| = " << all.size() << "\n"
        << (pass ? "PASS" : "FAIL") << "\n";
  }
  return pass ? kOk : kFail;
}

int demo_transport_s3(const Options& o, std::ostream& out) {
  const ScwolAction a = permutation_gset(permutation_group(3, {{1, 0, 2}, {1, 2, 0}}));
  const FinCat t = transport_groupoid(a);
  const ChiReport r = chi_theorems(a);
  const Rational c2 = groupoid_chi2(t);
  const bool pass = c2 == Rational(1, 2) && r.chi_hocolim == 1 && r.all();
  if (o.json) {
    out << Json{{"groupoid", category_report(t)}, {"chi2", rational_json(c2)},
                {"chi", rational_json(r.chi_hocolim)}, {"pass", pass}}
               .dump(2)
        << "\n";
  } else {
    out << "transport groupoid of S3 on {1,2,3}: " << category_summary(t) << "\n"
        << "chi2 = " << to_string(c2) << " = |S|/|G| = 3/6\n"
        << "chi = " << to_string(r.chi_hocolim) << " = |S/G|\n"
        << (pass ? "PASS" : "FAIL") << "\n";
  }
  return pass ? kOk : kFail;
}

int demo_weightings(const Options& o, std::ostream& out) {
  std::vector<std::pair<std::string, FinCat>> cats = {{"parallel pair", parallel_pair()}, {"pushout", pushout_scwol()}};
  for (std::size_t q = 1; q <= 3; ++q) cats.emplace_back("subsets poset q=" + std::to_string(q), subsets_poset(q));
  Json j = Json::object();
  for (const auto& [name, c] : cats) {
    const Weighting w = weighting(c);
    if (o.json) {
      Json v = Json::object();
      for (ObjId x = 0; x < c.num_objects(); ++x) v[c.object_name(x)] = rational_json(w.values[x]);
      j[name] = v;
    } else {
      out << name << ": " << join_values(c, w.values) << "\n";
    }
  }
  if (o.json) out << j.dump(2) << "\n";
  return kOk;
}

const std::map<std::string, std::function<int(const Options&, std::ostream&)>>& demos() {
  static const std::map<std::string, std::function<int(const Options&, std::ostream&)>> d = {
      {"intro-pushout", demo_intro_pushout},
      {"z2-circle", demo_z2_circle},
      {"inclusion-exclusion", demo_inclusion_exclusion},
      {"transport-s3", demo_transport_s3},
      {"weightings", demo_weightings},
  };
  return d;
}

}  // namespace

std::vector<std::string> demo_names() {
  std::vector<std::string> out;
  for (const auto& [k, v] : demos()) out.push_back(k);
  return out;
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Euler characteristics of finite categories", "eulcat"};
  app.require_subcommand(1);
  Options o;
  app.add_flag("--json", o.json, "Machine-readable output");

  using Handler = std::function<int(const Options&, std::ostream&)>;
  std::vector<std::pair<CLI::App*, Handler>> handlers;
  auto file_cmd = [&](const std::string& name, const std::string& help, Handler h) {
    CLI::App* sub = app.add_subcommand(name, help);
    sub->add_option("file", o.file, "Manifest file")->required()->check(CLI::ExistingFile);
    sub->add_flag("--json", o.json, "Machine-readable output");
    handlers.emplace_back(sub, std::move(h));
    return sub;
  };
  file_cmd("validate", "Validate a manifest of any kind", cmd_validate);
  file_cmd("classify", "Structural predicates of a category", cmd_classify);
  file_cmd("skeleton", "Skeleton and isomorphism classes", cmd_skeleton)->add_flag("--emit", o.emit, "Print the skeleton as a manifest");
  file_cmd("chi", "Euler characteristic of a scwol", cmd_chi);
  file_cmd("chi2", "L2-Euler characteristic", cmd_chi2);
  file_cmd("chil", "Leinster Euler characteristic", cmd_chil);
  file_cmd("weighting", "Weighting or coweighting", cmd_weighting)->add_flag("--co", o.co, "Coweighting");
  file_cmd("paths", "Counts of paths of non-identity morphisms", cmd_paths);
  file_cmd("hocolim", "Grothendieck construction of a diagram", cmd_hocolim)->add_flag("--emit", o.emit, "Print the result as a manifest");
  auto* cf = file_cmd("check-formula", "Homotopy colimit formula check", cmd_check_formula);
  cf->add_option("--invariant", o.invariant, "chil, chi2 or chi")->capture_default_str();
  cf->add_option("--spectrum", o.spectrum, "Cell spectrum manifest")->check(CLI::ExistingFile);
  file_cmd("quotient", "Quotient of an action", cmd_quotient)->add_flag("--emit", o.emit, "Print the quotient as a manifest");
  file_cmd("complex-of-groups", "Complex of groups of an action", cmd_complex)->add_flag("--emit", o.emit, "Print the complex as a manifest");
  file_cmd("hocolim-groups", "Homotopy colimit of a complex of groups", cmd_hocolim_groups)->add_flag("--emit", o.emit, "Print the result as a manifest");
  file_cmd("transport", "Transport groupoid of a G-set", cmd_transport);
  file_cmd("chi-theorems", "Euler characteristic identities of an action", cmd_chi_theorems);
  file_cmd("developability", "Necessary conditions for developability", cmd_developability)
      ->add_option("--candidate", o.candidates, "chi:order, repeatable");
  file_cmd("haefliger", "Lower-link formula", cmd_haefliger)
      ->add_option("--vals", o.vals, "obj=p/q, repeatable or comma separated; default 1 everywhere");

  CLI::App* demo = app.add_subcommand("demo", "Run a worked example");
  demo->add_option("name", o.demo, "Demo name")->required()->check(CLI::IsMember(demo_names()));
  demo->add_flag("--json", o.json, "Machine-readable output");

  std::vector<std::string> rev(args.rbegin(), args.rend());
  try {
    app.parse(rev);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kInputError;
  }
  try {
    if (demo->parsed()) return demos().at(o.demo)(o, out);
    for (auto& [sub, h] : handlers)
      if (sub->parsed()) return h(o, out);
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return kInputError;
  }
  return kInputError;
}

}  // namespace eulcat::cli
