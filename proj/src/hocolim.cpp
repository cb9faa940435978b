#include "eulcat/hocolim.hpp"

#include <algorithm>
#include <iterator>

#include "eulcat/constructions.hpp"
#include "eulcat/error.hpp"
#include "eulcat/eulerchar.hpp"
#include "eulcat/ratlin.hpp"

namespace eulcat {

namespace {

void check_shape(const FinCat& index, const std::vector<FinCat>& vertex, const std::vector<CatFunctor>& edge) {
  if (vertex.size() != index.num_objects())
    throw Error(ErrorKind::NotAFunctor, "diagram needs one vertex category per index object");
  if (edge.size() != index.num_morphisms())
    throw Error(ErrorKind::NotAFunctor, "diagram needs one functor per index morphism");
  for (MorId u = 0; u < index.num_morphisms(); ++u) {
    const CatFunctor& f = edge[u];
    if (f.source != vertex[index.source(u)] || f.target != vertex[index.target(u)])
      throw Error(ErrorKind::NotAFunctor, "functor on " + index.morphism_name(u) + " has the wrong endpoints");
    try {
      f.verify();
    } catch (const Error& e) {
      throw Error(ErrorKind::NotAFunctor, "edge " + index.morphism_name(u) + ": " + e.what());
    }
  }
}

bool same_maps(const CatFunctor& a, const CatFunctor& b) {
  return a.on_objects == b.on_objects && a.on_morphisms == b.on_morphisms;
}

// (i, c) objects and (u, f) morphisms are laid out by offset tables.
struct Layout {
  std::vector<std::size_t> obj_base;  // per index object
  // per index morphism u, per object c of C(s u): first morphism id
  std::vector<std::vector<std::size_t>> mor_base;
  // per vertex, position of each morphism in out(source)
  std::vector<std::vector<std::size_t>> out_pos;
};

}  // namespace

void StrictDiagram::validate() const {
  check_shape(index, vertex, edge);
  for (ObjId i = 0; i < index.num_objects(); ++i)
    if (!same_maps(edge[index.identity(i)], CatFunctor::identity(vertex[i])))
      throw Error(ErrorKind::NotAFunctor, "identity of " + index.object_name(i) + " is not sent to an identity functor");
  for (MorId u = 0; u < index.num_morphisms(); ++u)
    for (MorId v : index.out(index.target(u)))
      if (!same_maps(compose(edge[v], edge[u]), edge[index.compose(v, u)]))
        throw Error(ErrorKind::NotAFunctor, "composite " + index.morphism_name(v) + "∘" + index.morphism_name(u) +
                                                " is not sent to the composite functor");
}

MorId PseudoDiagram::comp_at(MorId v, MorId u, ObjId c) const {
  auto it = comp.find({v, u});
  if (it != comp.end()) return it->second[c];
  const FinCat& k = vertex[index.target(v)];
  return k.identity(edge[v](edge[u](c)));
}

MorId PseudoDiagram::unit_at(ObjId i, ObjId c) const {
  auto it = unit.find(i);
  if (it != unit.end()) return it->second[c];
  return vertex[i].identity(c);
}

void PseudoDiagram::validate() const {
  check_shape(index, vertex, edge);
  auto fail = [](const std::string& msg) { throw Error(ErrorKind::CoherenceFailure, msg); };
  auto name2 = [&](MorId v, MorId u) { return "(" + index.morphism_name(v) + ", " + index.morphism_name(u) + ")"; };

  for (const auto& [key, comps] : comp) {
    const auto [v, u] = key;
    if (v >= index.num_morphisms() || u >= index.num_morphisms() || !index.composable(v, u))
      fail("comp given for a pair that is not composable");
    const FinCat& ci = vertex[index.source(u)];
    const FinCat& ck = vertex[index.target(v)];
    if (comps.size() != ci.num_objects()) fail("comp " + name2(v, u) + " has the wrong number of components");
    const CatFunctor& vu = edge[index.compose(v, u)];
    for (ObjId c = 0; c < ci.num_objects(); ++c) {
      const MorId m = comps[c];
      if (m >= ck.num_morphisms() || ck.source(m) != edge[v](edge[u](c)) || ck.target(m) != vu(c))
        fail("comp " + name2(v, u) + " at " + ci.object_name(c) + " has the wrong endpoints");
      if (!ck.is_iso(m)) fail("comp " + name2(v, u) + " at " + ci.object_name(c) + " is not invertible");
    }
  }
  for (const auto& [i, comps] : unit) {
    if (i >= index.num_objects()) fail("unit given for an unknown object");
    const FinCat& ci = vertex[i];
    if (comps.size() != ci.num_objects()) fail("unit at " + index.object_name(i) + " has the wrong number of components");
    for (ObjId c = 0; c < ci.num_objects(); ++c) {
      const MorId m = comps[c];
      if (m >= ci.num_morphisms() || ci.source(m) != c || ci.target(m) != edge[index.identity(i)](c))
        fail("unit at " + index.object_name(i) + " has the wrong endpoints at " + ci.object_name(c));
      if (!ci.is_iso(m)) fail("unit at " + index.object_name(i) + " is not invertible");
    }
  }
  // omitted entries must hold strictly
  for (MorId u = 0; u < index.num_morphisms(); ++u)
    for (MorId v : index.out(index.target(u)))
      if (!comp.count({v, u}) && !same_maps(compose(edge[v], edge[u]), edge[index.compose(v, u)]))
        fail("no comp given for " + name2(v, u) + " and the functors do not compose strictly");
  for (ObjId i = 0; i < index.num_objects(); ++i)
    if (!unit.count(i) && !same_maps(edge[index.identity(i)], CatFunctor::identity(vertex[i])))
      fail("no unit given at " + index.object_name(i) + " and its identity is not sent to an identity functor");

  // naturality
  for (MorId u = 0; u < index.num_morphisms(); ++u) {
    const FinCat& ci = vertex[index.source(u)];
    for (MorId v : index.out(index.target(u))) {
      const FinCat& ck = vertex[index.target(v)];
      const CatFunctor& vu = edge[index.compose(v, u)];
      for (MorId f = 0; f < ci.num_morphisms(); ++f) {
        const ObjId c = ci.source(f), c2 = ci.target(f);
        if (ck.compose(vu.map(f), comp_at(v, u, c)) != ck.compose(comp_at(v, u, c2), edge[v].map(edge[u].map(f))))
          fail("comp " + name2(v, u) + " is not natural at " + ci.morphism_name(f));
      }
    }
  }
  for (ObjId i = 0; i < index.num_objects(); ++i) {
    const FinCat& ci = vertex[i];
    const CatFunctor& e = edge[index.identity(i)];
    for (MorId f = 0; f < ci.num_morphisms(); ++f)
      if (ci.compose(e.map(f), unit_at(i, ci.source(f))) != ci.compose(unit_at(i, ci.target(f)), f))
        fail("unit at " + index.object_name(i) + " is not natural at " + ci.morphism_name(f));
  }
  // associativity: C_{w,vu}(c) ∘ C(w)(C_{v,u}(c)) = C_{wv,u}(c) ∘ C_{w,v}(C(u)c)
  for (MorId u = 0; u < index.num_morphisms(); ++u) {
    const FinCat& ci = vertex[index.source(u)];
    for (MorId v : index.out(index.target(u))) {
      const MorId vu = index.compose(v, u);
      for (MorId w : index.out(index.target(v))) {
        const FinCat& cl = vertex[index.target(w)];
        const MorId wv = index.compose(w, v);
        for (ObjId c = 0; c < ci.num_objects(); ++c) {
          const MorId lhs = cl.compose(comp_at(w, vu, c), edge[w].map(comp_at(v, u, c)));
          const MorId rhs = cl.compose(comp_at(wv, u, c), comp_at(w, v, edge[u](c)));
          if (lhs != rhs)
            fail("associativity coherence fails for (" + index.morphism_name(w) + ", " + index.morphism_name(v) + ", " +
                 index.morphism_name(u) + ") at " + ci.object_name(c));
        }
      }
    }
  }
  // units: C_{u,id}(c) ∘ C(u)(C_i(c)) = id and C_{id,u}(c) ∘ C_j(C(u)c) = id
  for (MorId u = 0; u < index.num_morphisms(); ++u) {
    const ObjId i = index.source(u), j = index.target(u);
    const FinCat& ci = vertex[i];
    const FinCat& cj = vertex[j];
    for (ObjId c = 0; c < ci.num_objects(); ++c) {
      const ObjId uc = edge[u](c);
      if (cj.compose(comp_at(u, index.identity(i), c), edge[u].map(unit_at(i, c))) != cj.identity(uc))
        fail("right unit coherence fails for " + index.morphism_name(u) + " at " + ci.object_name(c));
      if (cj.compose(comp_at(index.identity(j), u, c), unit_at(j, uc)) != cj.identity(uc))
        fail("left unit coherence fails for " + index.morphism_name(u) + " at " + ci.object_name(c));
    }
  }
}

PseudoDiagram PseudoDiagram::from_strict(const StrictDiagram& d) {
  PseudoDiagram p;
  p.index = d.index;
  p.vertex = d.vertex;
  p.edge = d.edge;
  return p;
}

namespace {

struct Built {
  FinCat category;
  Layout layout;
};

Built build_grothendieck(const PseudoDiagram& d) {
  d.validate();
  const FinCat& I = d.index;
  Layout L;
  FinCat::Builder b;
  std::vector<std::string> obj_names;
  for (ObjId i = 0; i < I.num_objects(); ++i) {
    L.obj_base.push_back(b.num_objects());
    for (ObjId c = 0; c < d.vertex[i].num_objects(); ++c) {
      obj_names.push_back("(" + I.object_name(i) + "," + d.vertex[i].object_name(c) + ")");
      b.add_object(obj_names.back());
    }
  }
  for (const FinCat& v : d.vertex) {
    std::vector<std::size_t> pos(v.num_morphisms());
    for (ObjId x = 0; x < v.num_objects(); ++x)
      for (std::size_t k = 0; k < v.out(x).size(); ++k) pos[v.out(x)[k]] = k;
    L.out_pos.push_back(std::move(pos));
  }
  struct Key {
    MorId u;
    ObjId c;
    MorId f;
  };
  std::vector<Key> keys;
  std::vector<std::string> names;
  L.mor_base.resize(I.num_morphisms());
  for (MorId u = 0; u < I.num_morphisms(); ++u) {
    const ObjId i = I.source(u), j = I.target(u);
    const FinCat& cj = d.vertex[j];
    for (ObjId c = 0; c < d.vertex[i].num_objects(); ++c) {
      L.mor_base[u].push_back(keys.size());
      for (MorId f : cj.out(d.edge[u](c))) {
        keys.push_back({u, c, f});
        names.push_back("(" + I.morphism_name(u) + "," + cj.morphism_name(f) + ")");
      }
    }
  }
  // "(u,f)" alone is ambiguous when C(u) identifies objects; such names get
  // the source object appended
  std::map<std::string, std::size_t> count;
  for (const auto& n : names) ++count[n];
  for (std::size_t m = 0; m < keys.size(); ++m) {
    const Key& k = keys[m];
    const ObjId i = I.source(k.u), j = I.target(k.u);
    std::string name = names[m];
    if (count[name] > 1) name += "@" + obj_names[L.obj_base[i] + k.c];
    b.add_morphism(name, static_cast<ObjId>(L.obj_base[i] + k.c),
                   static_cast<ObjId>(L.obj_base[j] + d.vertex[j].target(k.f)));
  }
  auto lookup = [&](MorId u, ObjId c, MorId f) {
    return static_cast<MorId>(L.mor_base[u][c] + L.out_pos[I.target(u)][f]);
  };
  // inverse of an isomorphism in a vertex category
  auto inv = [&](ObjId k, MorId m) { return *d.vertex[k].inverse(m); };
  for (ObjId i = 0; i < I.num_objects(); ++i)
    for (ObjId c = 0; c < d.vertex[i].num_objects(); ++c)
      b.set_identity(static_cast<ObjId>(L.obj_base[i] + c), lookup(I.identity(i), c, inv(i, d.unit_at(i, c))));
  b.fill_composites([&](MorId second, MorId first) {
    const Key& a = keys[first];
    const Key& g = keys[second];
    const MorId u = a.u, v = g.u;
    const ObjId k = I.target(v);
    const FinCat& ck = d.vertex[k];
    // g ∘ C(v)(f) ∘ C_{v,u}(c)^{-1}
    const MorId h = ck.compose(g.f, ck.compose(d.edge[v].map(a.f), inv(k, d.comp_at(v, u, a.c))));
    return lookup(I.compose(v, u), a.c, h);
  });
  return Built{b.build(), std::move(L)};
}

}  // namespace

FinCat grothendieck_pseudo(const PseudoDiagram& d) { return build_grothendieck(d).category; }

GrothendieckResult grothendieck(const StrictDiagram& d) {
  d.validate();
  Built built = build_grothendieck(PseudoDiagram::from_strict(d));
  GrothendieckResult r{built.category, {}};
  const FinCat& I = d.index;
  for (ObjId i = 0; i < I.num_objects(); ++i) {
    const FinCat& ci = d.vertex[i];
    CatFunctor a{ci, r.category, {}, {}};
    for (ObjId c = 0; c < ci.num_objects(); ++c) a.on_objects.push_back(static_cast<ObjId>(built.layout.obj_base[i] + c));
    const MorId u = I.identity(i);
    for (MorId f = 0; f < ci.num_morphisms(); ++f)
      a.on_morphisms.push_back(
          static_cast<MorId>(built.layout.mor_base[u][ci.source(f)] + built.layout.out_pos[i][f]));
    a.verify();
    r.alphas.push_back(std::move(a));
  }
  return r;
}

// ---------------------------------------------------------------- spectra

std::vector<Rational> CellSpectrum::derived_weighting() const {
  std::vector<Rational> q;
  for (const auto& row : cells) {
    BigInt s = 0;
    for (std::size_t n = 0; n < row.size(); ++n) {
      if (n % 2 == 0)
        s += row[n];
      else
        s -= row[n];
    }
    q.emplace_back(s);
  }
  return q;
}

void CellSpectrum::verify() const {
  if (cells.size() != index.num_objects())
    throw Error(ErrorKind::InvalidSpectrum, "spectrum needs one cell list per index object");
  for (const auto& row : cells)
    for (const auto& v : row)
      if (v < 0) throw Error(ErrorKind::InvalidSpectrum, "negative cell count");
  if (!is_weighting(index, derived_weighting()))
    throw Error(ErrorKind::InvalidSpectrum, "alternating cell sums do not form a weighting on the index");
}

CellSpectrum bar_spectrum(const FinCat& i) {
  const PathCounts pc = path_counts(i);
  CellSpectrum s{i, std::vector<std::vector<BigInt>>(i.num_objects())};
  for (ObjId a = 0; a < pc.skeleton.num_objects(); ++a) s.cells[i.object(pc.skeleton.object_name(a))] = pc.starts[a];
  return s;
}

BuiltinKind parse_builtin_kind(const std::string& name) {
  if (name == "terminal") return BuiltinKind::Terminal;
  if (name == "parallel_pair") return BuiltinKind::ParallelPair;
  if (name == "pushout") return BuiltinKind::Pushout;
  if (name == "subsets_poset") return BuiltinKind::SubsetsPoset;
  throw Error(ErrorKind::UnknownKind, "unknown spectrum kind " + name);
}

CellSpectrum builtin_spectrum(BuiltinKind kind, const FinCat& index, std::size_t arg) {
  CellSpectrum s;
  auto at = [&](const std::string& o) -> std::vector<BigInt>& { return s.cells[s.index.object(o)]; };
  switch (kind) {
    case BuiltinKind::Terminal:
      if (arg >= index.num_objects()) throw Error(ErrorKind::UnknownObject, "terminal object out of range");
      s.index = index;
      s.cells.assign(index.num_objects(), {});
      s.cells[arg] = {1};
      break;
    case BuiltinKind::ParallelPair:
      s.index = parallel_pair();
      s.cells.assign(2, {});
      at("k") = {1};
      at("j") = {0, 1};
      break;
    case BuiltinKind::Pushout:
      s.index = pushout_scwol();
      s.cells.assign(3, {});
      at("k") = {1};
      at("l") = {1};
      at("j") = {0, 1};
      break;
    case BuiltinKind::SubsetsPoset: {
      s.index = subsets_poset(arg);
      s.cells.assign(s.index.num_objects(), {});
      for (ObjId x = 0; x < s.index.num_objects(); ++x) {
        const std::string& name = s.index.object_name(x);
        const std::size_t size = static_cast<std::size_t>(std::count(name.begin(), name.end(), ',')) + 1;
        s.cells[x].assign(size, 0);
        s.cells[x][size - 1] = 1;
      }
      break;
    }
  }
  s.verify();
  return s;
}

Rational formula_value(const CellSpectrum& s, const std::map<std::string, Rational>& vals) {
  const auto q = s.derived_weighting();
  Rational total = 0;
  for (ObjId i = 0; i < s.index.num_objects(); ++i) {
    bool carries = false;
    for (const auto& v : s.cells[i]) carries = carries || v != 0;
    if (!carries) continue;
    auto it = vals.find(s.index.object_name(i));
    if (it == vals.end()) throw Error(ErrorKind::MissingValue, "no value for object " + s.index.object_name(i));
    total += q[i] * it->second;
  }
  return total;
}

Rational invariant_value(const FinCat& c, Invariant inv) {
  switch (inv) {
    case Invariant::ChiL: return chi_L(c);
    case Invariant::Chi2: return chi2(c);
    case Invariant::ChiScwol: return Rational(chi_scwol(c));
  }
  throw Error(ErrorKind::UnknownKind, "unknown invariant");
}

FormulaReport check_hocolim_formula(const PseudoDiagram& d, Invariant inv, const CellSpectrum& s) {
  if (s.index != d.index) throw Error(ErrorKind::InvalidSpectrum, "spectrum is over a different index category");
  s.verify();
  FormulaReport r;
  for (ObjId i = 0; i < d.index.num_objects(); ++i) {
    bool carries = false;
    for (const auto& v : s.cells[i]) carries = carries || v != 0;
    if (carries) r.vertex_values[d.index.object_name(i)] = invariant_value(d.vertex[i], inv);
  }
  r.rhs = formula_value(s, r.vertex_values);
  r.lhs = invariant_value(grothendieck_pseudo(d), inv);
  r.equal = r.lhs == r.rhs;
  return r;
}

FormulaReport check_hocolim_formula(const PseudoDiagram& d, Invariant inv) {
  if (!is_scwol(d.index))
    throw Error(ErrorKind::NotScwol, "the formula check needs a scwol index; supply a spectrum otherwise");
  return check_hocolim_formula(d, inv, bar_spectrum(d.index));
}

FormulaReport check_hocolim_formula(const StrictDiagram& d, Invariant inv) {
  d.validate();
  return check_hocolim_formula(PseudoDiagram::from_strict(d), inv);
}

Rational homotopy_orbit_chi(const Rational& chi_BG, const Rational& chi_C) { return chi_BG * chi_C; }

StrictDiagram constant_diagram(const FinCat& i, const FinCat& c) {
  StrictDiagram d{i, std::vector<FinCat>(i.num_objects(), c), {}};
  for (MorId u = 0; u < i.num_morphisms(); ++u) d.edge.push_back(CatFunctor::identity(c));
  return d;
}

StrictDiagram trivial_diagram(const FinCat& i) { return constant_diagram(i, terminal_category()); }

StrictDiagram intro_pushout_diagram() {
  const FinCat p = pushout_scwol();
  const FinCat yz = discrete({"y", "z"});
  const FinCat pt = discrete({"*"});
  const FinCat pt2 = discrete({"*'"});
  StrictDiagram d;
  d.index = p;
  d.vertex = {yz, pt, pt2};
  const CatFunctor to_pt{yz, pt, {0, 0}, {0, 0}};
  const CatFunctor to_pt2{yz, pt2, {0, 0}, {0, 0}};
  for (MorId u = 0; u < p.num_morphisms(); ++u) {
    const std::string& n = p.morphism_name(u);
    if (n == "g")
      d.edge.push_back(to_pt);
    else if (n == "h")
      d.edge.push_back(to_pt2);
    else
      d.edge.push_back(CatFunctor::identity(d.vertex[p.source(u)]));
  }
  d.validate();
  return d;
}

StrictDiagram set_diagram(const FinCat& i, const std::vector<std::vector<std::string>>& sets,
                          const std::vector<std::vector<std::size_t>>& maps) {
  StrictDiagram d;
  d.index = i;
  for (const auto& s : sets) d.vertex.push_back(discrete(s));
  if (d.vertex.size() != i.num_objects() || maps.size() != i.num_morphisms())
    throw Error(ErrorKind::DimensionMismatch, "set diagram sizes do not match the index");
  for (MorId u = 0; u < i.num_morphisms(); ++u) {
    const FinCat& a = d.vertex[i.source(u)];
    const FinCat& b = d.vertex[i.target(u)];
    CatFunctor f{a, b, {}, {}};
    for (std::size_t k : maps[u]) f.on_objects.push_back(static_cast<ObjId>(k));
    // discrete: morphism id of identity equals object id
    for (std::size_t k : maps[u]) f.on_morphisms.push_back(b.identity(static_cast<ObjId>(k)));
    d.edge.push_back(std::move(f));
  }
  d.validate();
  return d;
}

StrictDiagram inclusion_exclusion_diagram(const std::vector<std::set<std::size_t>>& sets) {
  if (sets.empty()) throw Error(ErrorKind::DimensionMismatch, "need at least one set");
  const FinCat i = subsets_poset(sets.size() - 1);
  std::vector<std::vector<std::size_t>> members(i.num_objects());
  std::vector<std::vector<std::string>> names(i.num_objects());
  for (ObjId o = 0; o < i.num_objects(); ++o) {
    // object names are "{a,b,...}"
    std::vector<std::size_t> idx;
    std::string n = i.object_name(o);
    for (std::size_t p = 1; p + 1 < n.size();) {
      std::size_t q = n.find_first_of(",}", p);
      idx.push_back(std::stoul(n.substr(p, q - p)));
      p = q + 1;
    }
    std::set<std::size_t> common = sets[idx[0]];
    for (std::size_t k = 1; k < idx.size(); ++k) {
      std::set<std::size_t> next;
      std::set_intersection(common.begin(), common.end(), sets[idx[k]].begin(), sets[idx[k]].end(),
                            std::inserter(next, next.begin()));
      common = std::move(next);
    }
    members[o].assign(common.begin(), common.end());
    for (auto e : common) names[o].push_back(std::to_string(e));
  }
  std::vector<std::vector<std::size_t>> maps(i.num_morphisms());
  for (MorId u = 0; u < i.num_morphisms(); ++u) {
    const auto& src = members[i.source(u)];
    const auto& tgt = members[i.target(u)];
    for (auto e : src) maps[u].push_back(std::lower_bound(tgt.begin(), tgt.end(), e) - tgt.begin());
  }
  return set_diagram(i, names, maps);
}

}  // namespace eulcat
