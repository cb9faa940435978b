#include "eulcat/io.hpp"

#include <fstream>
#include <sstream>

#include "eulcat/error.hpp"

namespace eulcat {

namespace {

const char* const kKinds[] = {"category", "group", "diagram", "pseudo_diagram", "action", "complex", "spectrum"};

[[noreturn]] void bad(const std::string& msg) { throw Error(ErrorKind::ParseError, msg); }

const Json& field(const Json& j, const char* key) {
  if (!j.is_object()) bad(std::string("expected an object holding \"") + key + "\"");
  auto it = j.find(key);
  if (it == j.end()) bad(std::string("missing field \"") + key + "\"");
  return *it;
}

const Json* optional_field(const Json& j, const char* key) {
  auto it = j.find(key);
  return it == j.end() ? nullptr : &*it;
}

std::string str(const Json& j, const std::string& what) {
  if (!j.is_string()) bad(what + " must be a string");
  return j.get<std::string>();
}

const Json& obj(const Json& j, const std::string& what) {
  if (!j.is_object()) bad(what + " must be an object");
  return j;
}

const Json& arr(const Json& j, const std::string& what) {
  if (!j.is_array()) bad(what + " must be an array");
  return j;
}

// Splits "b∘a".
std::pair<std::string, std::string> split_pair(const std::string& key) {
  static const std::string sep = "∘";
  auto p = key.find(sep);
  if (p == std::string::npos) bad("pair key \"" + key + "\" must look like \"b∘a\"");
  return {key.substr(0, p), key.substr(p + sep.size())};
}

std::string pair_key(const FinCat& c, MorId b, MorId a) { return c.morphism_name(b) + "∘" + c.morphism_name(a); }

Json functor_json(const CatFunctor& f) {
  Json o = Json::object(), m = Json::object();
  for (ObjId x = 0; x < f.source.num_objects(); ++x) o[f.source.object_name(x)] = f.target.object_name(f(x));
  for (MorId g = 0; g < f.source.num_morphisms(); ++g)
    if (!f.source.is_identity(g)) m[f.source.morphism_name(g)] = f.target.morphism_name(f.map(g));
  return Json{{"objects", o}, {"morphisms", m}};
}

// Identities may be left out of the morphism map.
CatFunctor functor_from_json(const Json& j, const FinCat& s, const FinCat& t, const std::string& what) {
  CatFunctor f{s, t, std::vector<ObjId>(s.num_objects()), std::vector<MorId>(s.num_morphisms())};
  const Json& o = obj(field(j, "objects"), what + ".objects");
  for (ObjId x = 0; x < s.num_objects(); ++x) {
    auto it = o.find(s.object_name(x));
    if (it == o.end()) bad(what + " does not map object " + s.object_name(x));
    f.on_objects[x] = t.object(str(*it, what + " object image"));
  }
  const Json* m = optional_field(j, "morphisms");
  if (m) obj(*m, what + ".morphisms");
  for (MorId g = 0; g < s.num_morphisms(); ++g) {
    if (m) {
      auto it = m->find(s.morphism_name(g));
      if (it != m->end()) {
        f.on_morphisms[g] = t.morphism(str(*it, what + " morphism image"));
        continue;
      }
    }
    if (!s.is_identity(g)) bad(what + " does not map morphism " + s.morphism_name(g));
    f.on_morphisms[g] = t.identity(f.on_objects[s.source(g)]);
  }
  return f;
}

std::vector<FinCat> vertices_from_json(const Json& j, const FinCat& index) {
  const Json& v = obj(field(j, "vertex"), "vertex");
  std::vector<FinCat> out;
  for (ObjId i = 0; i < index.num_objects(); ++i) {
    auto it = v.find(index.object_name(i));
    if (it == v.end()) bad("no vertex category for " + index.object_name(i));
    out.push_back(category_from_json(*it));
  }
  return out;
}

std::vector<CatFunctor> edges_from_json(const Json& j, const FinCat& index, const std::vector<FinCat>& vertex) {
  const Json* e = optional_field(j, "edge");
  if (e) obj(*e, "edge");
  std::vector<CatFunctor> out;
  for (MorId u = 0; u < index.num_morphisms(); ++u) {
    const FinCat& s = vertex[index.source(u)];
    const FinCat& t = vertex[index.target(u)];
    if (e) {
      auto it = e->find(index.morphism_name(u));
      if (it != e->end()) {
        out.push_back(functor_from_json(*it, s, t, "edge " + index.morphism_name(u)));
        continue;
      }
    }
    if (!index.is_identity(u)) bad("no functor for edge " + index.morphism_name(u));
    out.push_back(CatFunctor::identity(s));
  }
  return out;
}

Json edges_json(const FinCat& index, const std::vector<CatFunctor>& edge) {
  Json e = Json::object();
  for (MorId u = 0; u < index.num_morphisms(); ++u)
    if (!index.is_identity(u)) e[index.morphism_name(u)] = functor_json(edge[u]);
  return e;
}

Json vertices_json(const FinCat& index, const std::vector<FinCat>& vertex) {
  Json v = Json::object();
  for (ObjId i = 0; i < index.num_objects(); ++i) v[index.object_name(i)] = to_json(vertex[i]);
  return v;
}

// components as {object: morphism} over the source category of the vertex.
Json components_json(const FinCat& src, const FinCat& tgt, const std::vector<MorId>& comps) {
  Json o = Json::object();
  for (ObjId c = 0; c < src.num_objects(); ++c) o[src.object_name(c)] = tgt.morphism_name(comps[c]);
  return o;
}

std::vector<MorId> components_from_json(const Json& j, const FinCat& src, const FinCat& tgt, const std::string& what) {
  obj(j, what);
  std::vector<MorId> out;
  for (ObjId c = 0; c < src.num_objects(); ++c) {
    auto it = j.find(src.object_name(c));
    if (it == j.end()) bad(what + " has no component at " + src.object_name(c));
    out.push_back(tgt.morphism(str(*it, what + " component")));
  }
  return out;
}

}  // namespace

// ---------------------------------------------------------------- envelope

Manifest parse_manifest(const std::string& text) {
  Json j;
  try {
    j = Json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    bad(std::string("malformed JSON: ") + e.what());
  }
  const Json& v = field(j, "version");
  if (!v.is_number_integer() || v.get<int>() != kManifestVersion) bad("unsupported manifest version");
  Manifest m{str(field(j, "kind"), "kind"), field(j, "payload")};
  if (std::find(std::begin(kKinds), std::end(kKinds), m.kind) == std::end(kKinds)) bad("unknown manifest kind " + m.kind);
  return m;
}

Manifest read_manifest(const std::string& path) {
  std::ifstream in(path);
  if (!in) bad("cannot open " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  return parse_manifest(ss.str());
}

Json to_json(const Manifest& m) { return Json{{"version", kManifestVersion}, {"kind", m.kind}, {"payload", m.payload}}; }

std::string dump(const Manifest& m) { return to_json(m).dump(2); }

Json rational_json(const Rational& q) { return to_string(q); }

Rational rational_from_json(const Json& j) {
  if (j.is_number_integer()) return Rational(j.get<long>());
  return parse_rational(str(j, "rational"));
}

BigInt integer_from_json(const Json& j) {
  Rational q = rational_from_json(j);
  if (!is_integer(q)) bad("expected an integer, got " + to_string(q));
  return q.get_num();
}

// ---------------------------------------------------------------- category

Json to_json(const FinCat& c) {
  const CategoryDescription d = c.describe();
  Json mor = Json::array();
  for (const auto& m : d.morphisms) mor.push_back({{"id", m.id}, {"source", m.source}, {"target", m.target}});
  Json ident = Json::object();
  for (ObjId x = 0; x < c.num_objects(); ++x) ident[c.object_name(x)] = c.morphism_name(c.identity(x));
  Json comp = Json::array();
  for (const auto& t : d.compose) comp.push_back({t[0], t[1], t[2]});
  return Json{{"objects", d.objects}, {"morphisms", mor}, {"identity", ident}, {"compose", comp}};
}

FinCat category_from_json(const Json& j) {
  CategoryDescription d;
  for (const auto& o : arr(field(j, "objects"), "objects")) d.objects.push_back(str(o, "object id"));
  if (const Json* m = optional_field(j, "morphisms"))
    for (const auto& r : arr(*m, "morphisms"))
      d.morphisms.push_back({str(field(r, "id"), "morphism id"), str(field(r, "source"), "morphism source"),
                             str(field(r, "target"), "morphism target")});
  if (const Json* id = optional_field(j, "identity"))
    for (const auto& [k, v] : obj(*id, "identity").items()) d.identity[k] = str(v, "identity");
  if (const Json* c = optional_field(j, "compose"))
    for (const auto& t : arr(*c, "compose")) {
      if (!t.is_array() || t.size() != 3) bad("compose entries are [g, f, g∘f]");
      d.compose.push_back({str(t[0], "compose entry"), str(t[1], "compose entry"), str(t[2], "compose entry")});
    }
  return validate(d);
}

// ---------------------------------------------------------------- group

Json to_json(const FinGroup& g) {
  Json table = Json::array();
  for (Elem a = 0; a < g.order(); ++a) {
    Json row = Json::array();
    for (Elem b = 0; b < g.order(); ++b) row.push_back(g.label(g.mul(a, b)));
    table.push_back(row);
  }
  return Json{{"elements", g.labels()}, {"table", table}, {"identity", g.label(g.identity())}};
}

FinGroup group_from_json(const Json& j) {
  if (const Json* b = optional_field(j, "builtin")) {
    const std::string name = str(*b, "builtin");
    const Json& nj = field(j, "n");
    if (!nj.is_number_unsigned() || nj.get<std::size_t>() == 0) bad("builtin group needs a positive n");
    const std::size_t n = nj.get<std::size_t>();
    if (name == "cyclic") return FinGroup::cyclic(n);
    if (name == "symmetric") return FinGroup::symmetric(n);
    if (name == "dihedral") return FinGroup::dihedral(n);
    bad("unknown builtin group " + name);
  }
  std::vector<std::string> labels;
  for (const auto& e : arr(field(j, "elements"), "elements")) labels.push_back(str(e, "element"));
  std::unordered_map<std::string, Elem> index;
  for (Elem k = 0; k < labels.size(); ++k) index.emplace(labels[k], k);
  auto lookup = [&](const Json& e) {
    auto it = index.find(str(e, "group element"));
    if (it == index.end()) throw Error(ErrorKind::NotAGroup, "unknown element " + e.get<std::string>());
    return it->second;
  };
  const Json& t = arr(field(j, "table"), "table");
  if (t.size() != labels.size()) throw Error(ErrorKind::NotAGroup, "table needs one row per element");
  std::vector<std::vector<Elem>> table;
  for (const auto& row : t) {
    if (!row.is_array() || row.size() != labels.size())
      throw Error(ErrorKind::NotAGroup, "table rows need one entry per element");
    std::vector<Elem> r;
    for (const auto& e : row) r.push_back(lookup(e));
    table.push_back(std::move(r));
  }
  if (labels.empty()) throw Error(ErrorKind::NotAGroup, "a group has at least one element");
  return FinGroup(labels, table, lookup(field(j, "identity")));
}

// ---------------------------------------------------------------- diagrams

Json to_json(const StrictDiagram& d) {
  return Json{{"index", to_json(d.index)}, {"vertex", vertices_json(d.index, d.vertex)}, {"edge", edges_json(d.index, d.edge)}};
}

StrictDiagram diagram_from_json(const Json& j) {
  StrictDiagram d;
  d.index = category_from_json(field(j, "index"));
  d.vertex = vertices_from_json(j, d.index);
  d.edge = edges_from_json(j, d.index, d.vertex);
  d.validate();
  return d;
}

Json to_json(const PseudoDiagram& d) {
  Json j = Json{{"index", to_json(d.index)}, {"vertex", vertices_json(d.index, d.vertex)}, {"edge", edges_json(d.index, d.edge)}};
  Json comp = Json::object(), unit = Json::object();
  for (const auto& [key, comps] : d.comp) {
    auto [v, u] = key;
    comp[pair_key(d.index, v, u)] = components_json(d.vertex[d.index.source(u)], d.vertex[d.index.target(v)], comps);
  }
  for (const auto& [i, comps] : d.unit) unit[d.index.object_name(i)] = components_json(d.vertex[i], d.vertex[i], comps);
  j["comp"] = comp;
  j["unit"] = unit;
  return j;
}

PseudoDiagram pseudo_diagram_from_json(const Json& j) {
  PseudoDiagram d;
  d.index = category_from_json(field(j, "index"));
  d.vertex = vertices_from_json(j, d.index);
  d.edge = edges_from_json(j, d.index, d.vertex);
  const FinCat& I = d.index;
  if (const Json* c = optional_field(j, "comp"))
    for (const auto& [k, v] : obj(*c, "comp").items()) {
      auto [bn, an] = split_pair(k);
      const MorId b = I.morphism(bn), a = I.morphism(an);
      if (!I.composable(b, a)) bad("comp key " + k + " is not a composable pair");
      d.comp[{b, a}] = components_from_json(v, d.vertex[I.source(a)], d.vertex[I.target(b)], "comp " + k);
    }
  if (const Json* u = optional_field(j, "unit"))
    for (const auto& [k, v] : obj(*u, "unit").items()) {
      const ObjId i = I.object(k);
      d.unit[i] = components_from_json(v, d.vertex[i], d.vertex[i], "unit " + k);
    }
  d.validate();
  return d;
}

// ---------------------------------------------------------------- actions

Json to_json(const ScwolAction& a) {
  const FinCat& x = a.space;
  Json oa = Json::object(), ma = Json::object();
  for (Elem g = 0; g < a.group.order(); ++g) {
    Json o = Json::object(), m = Json::object();
    for (ObjId p = 0; p < x.num_objects(); ++p)
      if (a.act(g, p) != p) o[x.object_name(p)] = x.object_name(a.act(g, p));
    for (MorId f = 0; f < x.num_morphisms(); ++f)
      if (!x.is_identity(f) && a.act_mor(g, f) != f) m[x.morphism_name(f)] = x.morphism_name(a.act_mor(g, f));
    if (!o.empty()) oa[a.group.label(g)] = o;
    if (!m.empty()) ma[a.group.label(g)] = m;
  }
  return Json{{"group", to_json(a.group)}, {"scwol", to_json(x)}, {"object_action", oa}, {"morphism_action", ma}};
}

ScwolAction action_from_json(const Json& j) {
  ScwolAction a;
  a.group = group_from_json(field(j, "group"));
  a.space = category_from_json(field(j, "scwol"));
  const FinCat& x = a.space;
  a.on_objects.assign(a.group.order(), {});
  a.on_morphisms.assign(a.group.order(), {});
  for (Elem g = 0; g < a.group.order(); ++g) {
    auto& o = a.on_objects[g];
    auto& m = a.on_morphisms[g];
    o.resize(x.num_objects());
    m.assign(x.num_morphisms(), static_cast<MorId>(-1));
    for (ObjId p = 0; p < x.num_objects(); ++p) o[p] = p;
    for (MorId f = 0; f < x.num_morphisms(); ++f)
      if (!x.is_identity(f)) m[f] = f;
  }
  auto element = [&](const std::string& label) {
    auto e = a.group.find(label);
    if (!e) bad("unknown group element " + label);
    return *e;
  };
  if (const Json* oa = optional_field(j, "object_action"))
    for (const auto& [g, map] : obj(*oa, "object_action").items())
      for (const auto& [p, q] : obj(map, "object_action." + g).items())
        a.on_objects[element(g)][x.object(p)] = x.object(str(q, "object image"));
  if (const Json* ma = optional_field(j, "morphism_action"))
    for (const auto& [g, map] : obj(*ma, "morphism_action").items())
      for (const auto& [f, h] : obj(map, "morphism_action." + g).items())
        a.on_morphisms[element(g)][x.morphism(f)] = x.morphism(str(h, "morphism image"));
  for (Elem g = 0; g < a.group.order(); ++g)
    for (ObjId p = 0; p < x.num_objects(); ++p) {
      MorId& slot = a.on_morphisms[g][x.identity(p)];
      if (slot == static_cast<MorId>(-1)) slot = x.identity(a.on_objects[g][p]);
    }
  validate_action(a);
  return a;
}

// ---------------------------------------------------------------- complexes

Json to_json(const ComplexOfGroups& f) {
  const FinCat& y = f.base;
  Json local = Json::object(), homs = Json::object(), twists = Json::object();
  for (ObjId s = 0; s < y.num_objects(); ++s) local[y.object_name(s)] = to_json(f.local[s]);
  for (MorId a = 0; a < y.num_morphisms(); ++a) {
    if (y.is_identity(a)) continue;
    Json m = Json::object();
    const GroupHom& h = f.homs[a];
    for (Elem g = 0; g < h.source.order(); ++g) m[h.source.label(g)] = h.target.label(h(g));
    homs[y.morphism_name(a)] = m;
  }
  for (const auto& [key, g] : f.twists) {
    auto [b, a] = key;
    if (g != f.local[y.target(b)].identity()) twists[pair_key(y, b, a)] = f.local[y.target(b)].label(g);
  }
  return Json{{"base", to_json(y)}, {"local", local}, {"homs", homs}, {"twists", twists}};
}

ComplexOfGroups complex_from_json(const Json& j) {
  ComplexOfGroups f;
  f.base = category_from_json(field(j, "base"));
  const FinCat& y = f.base;
  const Json& local = obj(field(j, "local"), "local");
  for (ObjId s = 0; s < y.num_objects(); ++s) {
    auto it = local.find(y.object_name(s));
    f.local.push_back(it == local.end() ? FinGroup::trivial() : group_from_json(*it));
  }
  const Json* homs = optional_field(j, "homs");
  if (homs) obj(*homs, "homs");
  for (MorId a = 0; a < y.num_morphisms(); ++a) {
    const FinGroup& s = f.local[y.source(a)];
    const FinGroup& t = f.local[y.target(a)];
    if (y.is_identity(a)) {
      f.homs.push_back(GroupHom::identity(s));
      continue;
    }
    GroupHom h{s, t, std::vector<Elem>(s.order(), t.identity())};
    auto it = homs ? homs->find(y.morphism_name(a)) : Json::const_iterator();
    if (homs && it != homs->end()) {
      const Json& m = obj(*it, "homs." + y.morphism_name(a));
      for (Elem g = 0; g < s.order(); ++g) {
        auto e = m.find(s.label(g));
        if (e == m.end()) bad("hom of " + y.morphism_name(a) + " does not map " + s.label(g));
        auto img = t.find(str(*e, "hom image"));
        if (!img) bad("hom of " + y.morphism_name(a) + " maps into an unknown element");
        h.map[g] = *img;
      }
    } else if (s.order() != 1) {
      bad("no hom given for " + y.morphism_name(a));
    }
    f.homs.push_back(std::move(h));
  }
  if (const Json* tw = optional_field(j, "twists"))
    for (const auto& [k, v] : obj(*tw, "twists").items()) {
      auto [bn, an] = split_pair(k);
      const MorId b = y.morphism(bn), a = y.morphism(an);
      if (!y.composable(b, a)) bad("twist key " + k + " is not a composable pair");
      auto g = f.local[y.target(b)].find(str(v, "twist"));
      if (!g) bad("twist " + k + " is not an element of the local group");
      if (*g != f.local[y.target(b)].identity()) f.twists[{b, a}] = *g;
    }
  f.validate();
  return f;
}

// ---------------------------------------------------------------- spectra

Json to_json(const CellSpectrum& s) {
  Json cells = Json::object();
  for (ObjId i = 0; i < s.index.num_objects(); ++i) {
    Json row = Json::array();
    for (const auto& n : s.cells[i]) row.push_back(to_string(n));
    cells[s.index.object_name(i)] = row;
  }
  return Json{{"index", to_json(s.index)}, {"cells", cells}};
}

CellSpectrum spectrum_from_json(const Json& j) {
  CellSpectrum s;
  s.index = category_from_json(field(j, "index"));
  const Json& cells = obj(field(j, "cells"), "cells");
  s.cells.assign(s.index.num_objects(), {});
  for (const auto& [k, v] : cells.items()) {
    const ObjId i = s.index.object(k);
    for (const auto& n : arr(v, "cells." + k)) {
      BigInt c = integer_from_json(n);
      if (c < 0) bad("cell counts are non-negative");
      s.cells[i].push_back(c);
    }
  }
  s.verify();
  return s;
}

}  // namespace eulcat
