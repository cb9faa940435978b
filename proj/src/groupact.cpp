#include "eulcat/groupact.hpp"

#include <algorithm>
#include <numeric>
#include <set>

#include "eulcat/constructions.hpp"
#include "eulcat/error.hpp"
#include "eulcat/eulerchar.hpp"
#include "eulcat/hocolim.hpp"
#include "eulcat/ratlin.hpp"

namespace eulcat {

namespace {

bool is_permutation(const std::vector<std::uint32_t>& p, std::size_t n) {
  if (p.size() != n) return false;
  std::vector<char> seen(n, 0);
  for (auto v : p) {
    if (v >= n || seen[v]) return false;
    seen[v] = 1;
  }
  return true;
}

std::string at(const ScwolAction& a, MorId f, Elem g) {
  return "morphism " + a.space.morphism_name(f) + ", element " + a.group.label(g);
}

// Morphism ids of hocolim_groups: base morphism a, then the element.
std::vector<MorId> hocolim_offsets(const ComplexOfGroups& f) {
  std::vector<MorId> off(f.base.num_morphisms() + 1, 0);
  for (MorId a = 0; a < f.base.num_morphisms(); ++a)
    off[a + 1] = off[a] + static_cast<MorId>(f.local[f.base.target(a)].order());
  return off;
}

// Least-index h with h·y = want.
std::optional<Elem> least_mover(const ScwolAction& a, ObjId y, ObjId want) {
  for (Elem g = 0; g < a.group.order(); ++g)
    if (a.act(g, y) == want) return g;
  return std::nullopt;
}

}  // namespace

CatFunctor ScwolAction::functor(Elem g) const { return CatFunctor{space, space, on_objects[g], on_morphisms[g]}; }

bool ScwolAction::free_on_objects() const {
  for (Elem g = 0; g < group.order(); ++g) {
    if (g == group.identity()) continue;
    for (ObjId x = 0; x < space.num_objects(); ++x)
      if (act(g, x) == x) return false;
  }
  return true;
}

void validate_action(const ScwolAction& a) {
  const FinCat& x = a.space;
  const FinGroup& G = a.group;
  if (!is_scwol(x)) throw Error(ErrorKind::NotScwol, "acted-on category is not a scwol");
  if (a.on_objects.size() != G.order() || a.on_morphisms.size() != G.order())
    throw Error(ErrorKind::NotAFunctorAction, "action tables do not cover every group element");
  for (Elem g = 0; g < G.order(); ++g) {
    if (!is_permutation(a.on_objects[g], x.num_objects()))
      throw Error(ErrorKind::NotAFunctorAction, "element " + G.label(g) + " does not permute the objects");
    if (!is_permutation(a.on_morphisms[g], x.num_morphisms()))
      throw Error(ErrorKind::NotAFunctorAction, "element " + G.label(g) + " does not permute the morphisms");
  }
  for (MorId f = 0; f < x.num_morphisms(); ++f) {
    if (x.is_identity(f)) continue;
    for (Elem g = 0; g < G.order(); ++g)
      if (a.act(g, x.source(f)) == x.target(f))
        throw Error(ErrorKind::AxiomIViolation, at(a, f, g) + ": g·s(a) = t(a)");
  }
  for (Elem g = 0; g < G.order(); ++g) {
    try {
      a.functor(g).verify();
    } catch (const Error& e) {
      throw Error(ErrorKind::NotAFunctorAction, "element " + G.label(g) + ": " + e.what());
    }
  }
  for (ObjId o = 0; o < x.num_objects(); ++o)
    if (a.act(G.identity(), o) != o)
      throw Error(ErrorKind::NotAHomomorphism, "identity element moves " + x.object_name(o));
  for (MorId f = 0; f < x.num_morphisms(); ++f)
    if (a.act_mor(G.identity(), f) != f)
      throw Error(ErrorKind::NotAHomomorphism, "identity element moves " + x.morphism_name(f));
  for (Elem g = 0; g < G.order(); ++g) {
    for (Elem h = 0; h < G.order(); ++h) {
      const Elem gh = G.mul(g, h);
      for (ObjId o = 0; o < x.num_objects(); ++o)
        if (a.act(gh, o) != a.act(g, a.act(h, o)))
          throw Error(ErrorKind::NotAHomomorphism,
                      "(" + G.label(g) + G.label(h) + ")·" + x.object_name(o) + " differs from g·(h·x)");
      for (MorId f = 0; f < x.num_morphisms(); ++f)
        if (a.act_mor(gh, f) != a.act_mor(g, a.act_mor(h, f)))
          throw Error(ErrorKind::NotAHomomorphism,
                      "(" + G.label(g) + G.label(h) + ")·" + x.morphism_name(f) + " differs from g·(h·f)");
    }
  }
  for (MorId f = 0; f < x.num_morphisms(); ++f) {
    if (x.is_identity(f)) continue;
    for (Elem g = 0; g < G.order(); ++g)
      if (a.act(g, x.source(f)) == x.source(f) && a.act_mor(g, f) != f)
        throw Error(ErrorKind::AxiomIIViolation, at(a, f, g) + ": g fixes s(a) but moves a");
  }
}

ScwolAction trivial_action(const FinGroup& g, const FinCat& x) {
  std::vector<ObjId> objs(x.num_objects());
  std::iota(objs.begin(), objs.end(), 0);
  std::vector<MorId> mors(x.num_morphisms());
  std::iota(mors.begin(), mors.end(), 0);
  return ScwolAction{g, x, std::vector<std::vector<ObjId>>(g.order(), objs),
                     std::vector<std::vector<MorId>>(g.order(), mors)};
}

ScwolAction gset_action(const FinGroup& g, const std::vector<std::string>& points,
                        const std::vector<std::vector<std::size_t>>& perms) {
  FinCat s;
  try {
    s = discrete(points);
  } catch (const Error& e) {
    throw Error(ErrorKind::NotAnAction, e.what());
  }
  if (perms.size() != g.order()) throw Error(ErrorKind::NotAnAction, "need one permutation per group element");
  ScwolAction a{g, s, {}, {}};
  for (Elem e = 0; e < g.order(); ++e) {
    if (perms[e].size() != points.size())
      throw Error(ErrorKind::NotAnAction, "permutation of " + g.label(e) + " has the wrong length");
    std::vector<ObjId> o(points.size());
    std::vector<MorId> m(s.num_morphisms());
    for (std::size_t k = 0; k < points.size(); ++k) {
      if (perms[e][k] >= points.size())
        throw Error(ErrorKind::NotAnAction, "element " + g.label(e) + " sends a point out of range");
      o[k] = static_cast<ObjId>(perms[e][k]);
    }
    for (MorId f = 0; f < s.num_morphisms(); ++f) m[f] = s.identity(o[s.source(f)]);
    a.on_objects.push_back(std::move(o));
    a.on_morphisms.push_back(std::move(m));
  }
  try {
    validate_action(a);
  } catch (const Error& e) {
    throw Error(ErrorKind::NotAnAction, e.what());
  }
  return a;
}

ScwolAction permutation_gset(const PermutationGroup& g) {
  const std::size_t n = g.perms.empty() ? 0 : g.perms.front().size();
  std::vector<std::string> points;
  for (std::size_t k = 0; k < n; ++k) points.push_back(std::to_string(k + 1));
  std::vector<std::vector<std::size_t>> perms;
  for (const auto& p : g.perms) perms.emplace_back(p.begin(), p.end());
  return gset_action(g.group, points, perms);
}

ScwolAction circle_action() {
  FinCat c = circle_scwol();
  ScwolAction a = trivial_action(FinGroup::cyclic(2), c);
  auto swap = [&](const std::string& u, const std::string& v) {
    if (auto o = c.find_object(u)) {
      ObjId p = *o, q = c.object(v);
      a.on_objects[1][p] = q;
      a.on_objects[1][q] = p;
      a.on_morphisms[1][c.identity(p)] = c.identity(q);
      a.on_morphisms[1][c.identity(q)] = c.identity(p);
      return;
    }
    MorId p = c.morphism(u), q = c.morphism(v);
    a.on_morphisms[1][p] = q;
    a.on_morphisms[1][q] = p;
  };
  swap("x", "x'");
  swap("g", "g'");
  swap("h", "h'");
  validate_action(a);
  return a;
}

// ---------------------------------------------------------------- quotient

QuotientResult quotient(const ScwolAction& a) {
  const FinCat& x = a.space;
  const FinGroup& G = a.group;
  auto orbits = [&](std::size_t n, auto act, auto name) {
    std::vector<std::size_t> orbit(n, static_cast<std::size_t>(-1));
    std::vector<std::pair<std::string, std::size_t>> reps;  // (least name, first member)
    for (std::size_t i = 0; i < n; ++i) {
      if (orbit[i] != static_cast<std::size_t>(-1)) continue;
      std::string least = name(i);
      for (Elem g = 0; g < G.order(); ++g) {
        orbit[act(g, i)] = reps.size();
        least = std::min(least, name(act(g, i)));
      }
      reps.emplace_back(least, i);
    }
    std::vector<std::size_t> order(reps.size());
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(), [&](auto l, auto r) { return reps[l].first < reps[r].first; });
    std::vector<std::size_t> rank(reps.size());
    for (std::size_t k = 0; k < order.size(); ++k) rank[order[k]] = k;
    std::vector<std::string> names;
    for (auto k : order) names.push_back(reps[k].first);
    for (auto& o : orbit) o = rank[o];
    return std::make_pair(orbit, names);
  };
  auto [obj_orbit, obj_names] = orbits(
      x.num_objects(), [&](Elem g, std::size_t i) { return a.act(g, static_cast<ObjId>(i)); },
      [&](std::size_t i) { return x.object_name(static_cast<ObjId>(i)); });
  auto [mor_orbit, mor_names] = orbits(
      x.num_morphisms(), [&](Elem g, std::size_t i) { return a.act_mor(g, static_cast<MorId>(i)); },
      [&](std::size_t i) { return x.morphism_name(static_cast<MorId>(i)); });

  FinCat q;
  try {
    FinCat::Builder b;
    for (const auto& n : obj_names) b.add_object(n);
    std::vector<char> placed(mor_names.size(), 0);
    std::vector<std::pair<ObjId, ObjId>> ends(mor_names.size());
    for (MorId f = 0; f < x.num_morphisms(); ++f) {
      const auto o = mor_orbit[f];
      std::pair<ObjId, ObjId> e{static_cast<ObjId>(obj_orbit[x.source(f)]), static_cast<ObjId>(obj_orbit[x.target(f)])};
      if (placed[o] && ends[o] != e)
        throw Error(ErrorKind::InvalidQuotient, "orbit of " + x.morphism_name(f) + " has inconsistent endpoints");
      placed[o] = 1;
      ends[o] = e;
    }
    for (std::size_t o = 0; o < mor_names.size(); ++o) b.add_morphism(mor_names[o], ends[o].first, ends[o].second);
    for (ObjId o = 0; o < x.num_objects(); ++o) {
      const MorId id = static_cast<MorId>(mor_orbit[x.identity(o)]);
      b.set_identity(static_cast<ObjId>(obj_orbit[o]), id);
    }
    for (MorId f = 0; f < x.num_morphisms(); ++f)
      for (MorId g : x.out(x.target(f)))
        b.set_composite(static_cast<MorId>(mor_orbit[g]), static_cast<MorId>(mor_orbit[f]),
                        static_cast<MorId>(mor_orbit[x.compose(g, f)]));
    q = b.build();
  } catch (const Error& e) {
    if (e.kind() == ErrorKind::InvalidQuotient) throw;
    throw Error(ErrorKind::InvalidQuotient, e.what());
  }
  CatFunctor p{x, q, {}, {}};
  for (auto o : obj_orbit) p.on_objects.push_back(static_cast<ObjId>(o));
  for (auto o : mor_orbit) p.on_morphisms.push_back(static_cast<MorId>(o));
  try {
    p.verify();
  } catch (const Error& e) {
    throw Error(ErrorKind::InvalidQuotient, e.what());
  }
  for (ObjId o = 0; o < x.num_objects(); ++o) {
    std::set<MorId> image;
    for (MorId f : x.out(o)) image.insert(p.map(f));
    if (image.size() != x.out(o).size() || image.size() != q.out(p(o)).size())
      throw Error(ErrorKind::InvalidQuotient, "morphisms out of " + x.object_name(o) +
                                                  " do not biject with those out of its orbit");
  }
  return QuotientResult{q, p};
}

std::vector<Elem> stabilizer_elements(const ScwolAction& a, ObjId x) {
  if (x >= a.space.num_objects()) throw Error(ErrorKind::UnknownObject, "object index out of range");
  std::vector<Elem> out;
  for (Elem g = 0; g < a.group.order(); ++g)
    if (a.act(g, x) == x) out.push_back(g);
  return out;
}

FinGroup stabilizer(const ScwolAction& a, ObjId x, std::vector<Elem>* embedding) {
  return a.group.subgroup(stabilizer_elements(a, x), embedding);
}

// ---------------------------------------------------------------- complexes

Elem ComplexOfGroups::twist(MorId b, MorId a) const {
  const Elem e = local[base.target(b)].identity();
  if (base.is_identity(a) || base.is_identity(b)) return e;
  auto it = twists.find({b, a});
  return it == twists.end() ? e : it->second;
}

void ComplexOfGroups::validate() const {
  const FinCat& y = base;
  auto fail = [](const std::string& m) { throw Error(ErrorKind::InvalidComplex, m); };
  if (!is_scwol(y)) fail("base is not a scwol");
  if (local.size() != y.num_objects()) fail("need one local group per object");
  if (homs.size() != y.num_morphisms()) fail("need one homomorphism per morphism");
  for (MorId a = 0; a < y.num_morphisms(); ++a) {
    const GroupHom& h = homs[a];
    if (!(h.source == local[y.source(a)]) || !(h.target == local[y.target(a)]))
      fail("homomorphism of " + y.morphism_name(a) + " has the wrong source or target");
    if (h.map.size() != h.source.order()) fail("homomorphism of " + y.morphism_name(a) + " is incomplete");
    try {
      h.verify();
    } catch (const Error& e) {
      fail(y.morphism_name(a) + ": " + e.what());
    }
    if (!h.injective()) fail("homomorphism of " + y.morphism_name(a) + " is not injective");
    if (y.is_identity(a))
      for (Elem g = 0; g < h.source.order(); ++g)
        if (h(g) != g) fail("identity " + y.morphism_name(a) + " must carry the identity homomorphism");
  }
  for (const auto& [key, g] : twists) {
    auto [b, a] = key;
    if (a >= y.num_morphisms() || b >= y.num_morphisms() || !y.composable(b, a))
      fail("twist given for a pair that is not composable");
    if (g >= local[y.target(b)].order()) fail("twist element out of range");
    if ((y.is_identity(a) || y.is_identity(b)) && g != local[y.target(b)].identity())
      fail("twists on pairs with an identity must be trivial");
  }
  for (MorId a = 0; a < y.num_morphisms(); ++a) {
    if (y.is_identity(a)) continue;
    for (MorId b : y.out(y.target(a))) {
      if (y.is_identity(b)) continue;
      const MorId ba = y.compose(b, a);
      const FinGroup& t = local[y.target(b)];
      const Elem tw = twist(b, a);
      for (Elem x = 0; x < local[y.source(a)].order(); ++x)
        if (t.conj(tw, homs[b](homs[a](x))) != homs[ba](x))
          fail("conjugation identity fails for (" + y.morphism_name(b) + ", " + y.morphism_name(a) + ")");
      for (MorId c : y.out(y.target(b))) {
        if (y.is_identity(c)) continue;
        const FinGroup& u = local[y.target(c)];
        const Elem lhs = u.mul(twist(c, ba), homs[c](tw));
        const Elem rhs = u.mul(twist(y.compose(c, b), a), twist(c, b));
        if (lhs != rhs)
          fail("cocycle identity fails for (" + y.morphism_name(c) + ", " + y.morphism_name(b) + ", " +
               y.morphism_name(a) + ")");
      }
    }
  }
}

ComplexResult complex_of_groups(const ScwolAction& a, const ComplexChoices& choices) {
  const FinCat& x = a.space;
  const FinGroup& G = a.group;
  ComplexResult res{{}, quotient(a), {}, {}, {}};
  const FinCat& q = res.quotient.quotient;
  const CatFunctor& p = res.quotient.projection;

  for (ObjId s = 0; s < q.num_objects(); ++s) {
    ObjId rep = x.object(q.object_name(s));
    if (auto it = choices.representative.find(s); it != choices.representative.end()) {
      if (it->second >= x.num_objects() || p(it->second) != s)
        throw Error(ErrorKind::InvalidChoice, "representative for " + q.object_name(s) + " is not in its orbit");
      rep = it->second;
    }
    res.representative.push_back(rep);
  }
  for (const auto& [m, h] : choices.h)
    if (m >= q.num_morphisms() || h >= G.order()) throw Error(ErrorKind::InvalidChoice, "h choice out of range");

  std::vector<MorId> lift(q.num_morphisms());
  for (MorId m = 0; m < q.num_morphisms(); ++m) {
    const ObjId s = res.representative[q.source(m)];
    const ObjId want = res.representative[q.target(m)];
    auto it = std::find_if(x.out(s).begin(), x.out(s).end(), [&](MorId f) { return p.map(f) == m; });
    if (it == x.out(s).end()) throw Error(ErrorKind::InternalError, "no lift of " + q.morphism_name(m));
    lift[m] = *it;
    const ObjId t = x.target(*it);
    Elem h;
    if (auto c = choices.h.find(m); c != choices.h.end()) {
      h = c->second;
      if (a.act(h, t) != want)
        throw Error(ErrorKind::InvalidChoice,
                    "h for " + q.morphism_name(m) + " does not move the lift's target to the representative");
      if (q.is_identity(m) && h != G.identity())
        throw Error(ErrorKind::InvalidChoice, "h for identity " + q.morphism_name(m) + " must be the identity");
    } else if (q.is_identity(m)) {
      h = G.identity();
    } else {
      auto found = least_mover(a, t, want);
      if (!found) throw Error(ErrorKind::InternalError, "no h element for " + q.morphism_name(m));
      h = *found;
    }
    res.h.push_back(h);
  }

  ComplexOfGroups& f = res.complex;
  f.base = q;
  std::vector<std::vector<Elem>> emb(q.num_objects());
  std::vector<std::vector<Elem>> pos(q.num_objects(), std::vector<Elem>(G.order(), static_cast<Elem>(-1)));
  for (ObjId s = 0; s < q.num_objects(); ++s) {
    f.local.push_back(stabilizer(a, res.representative[s], &emb[s]));
    for (Elem k = 0; k < emb[s].size(); ++k) pos[s][emb[s][k]] = k;
    res.to_group.push_back(GroupHom{f.local[s], G, emb[s]});
  }
  auto local_elem = [&](ObjId s, Elem g, const std::string& what) {
    if (pos[s][g] == static_cast<Elem>(-1))
      throw Error(ErrorKind::InvalidComplex, what + " leaves the local group of " + q.object_name(s));
    return pos[s][g];
  };
  for (MorId m = 0; m < q.num_morphisms(); ++m) {
    const ObjId s = q.source(m), t = q.target(m);
    GroupHom hom{f.local[s], f.local[t], {}};
    for (Elem k = 0; k < emb[s].size(); ++k)
      hom.map.push_back(local_elem(t, G.conj(res.h[m], emb[s][k]), "conjugate along " + q.morphism_name(m)));
    f.homs.push_back(std::move(hom));
  }
  for (MorId m = 0; m < q.num_morphisms(); ++m) {
    if (q.is_identity(m)) continue;
    for (MorId n : q.out(q.target(m))) {
      if (q.is_identity(n)) continue;
      const Elem tw = G.mul(G.mul(res.h[q.compose(n, m)], G.inv(res.h[m])), G.inv(res.h[n]));
      const Elem k = local_elem(q.target(n), tw, "twist of (" + q.morphism_name(n) + ", " + q.morphism_name(m) + ")");
      if (k != f.local[q.target(n)].identity()) f.twists[{n, m}] = k;
    }
  }
  f.validate();
  return res;
}

FinCat hocolim_groups(const ComplexOfGroups& f) {
  const FinCat& y = f.base;
  const auto off = hocolim_offsets(f);
  try {
    FinCat::Builder b;
    for (ObjId s = 0; s < y.num_objects(); ++s) b.add_object(y.object_name(s));
    for (MorId a = 0; a < y.num_morphisms(); ++a) {
      const FinGroup& t = f.local[y.target(a)];
      for (Elem g = 0; g < t.order(); ++g)
        b.add_morphism("(" + y.morphism_name(a) + "," + t.label(g) + ")", y.source(a), y.target(a));
    }
    for (ObjId s = 0; s < y.num_objects(); ++s) b.set_identity(s, off[y.identity(s)] + f.local[s].identity());
    for (MorId a = 0; a < y.num_morphisms(); ++a) {
      const FinGroup& ta = f.local[y.target(a)];
      for (MorId bb : y.out(y.target(a))) {
        const FinGroup& tb = f.local[y.target(bb)];
        const MorId ba = y.compose(bb, a);
        const Elem tw_inv = tb.inv(f.twist(bb, a));
        for (Elem g1 = 0; g1 < ta.order(); ++g1)
          for (Elem g2 = 0; g2 < tb.order(); ++g2)
            b.set_composite(off[bb] + g2, off[a] + g1, off[ba] + tb.mul(tb.mul(g2, f.homs[bb](g1)), tw_inv));
      }
    }
    return b.build();
  } catch (const Error& e) {
    throw Error(ErrorKind::CoherenceFailure, e.what());
  }
}

// ---------------------------------------------------------------- skeletal reduction

namespace {

ScwolAction conjugated_action(const ScwolAction& a, const Skeleton& sk) {
  const FinCat& gamma = sk.gamma;
  ScwolAction out{a.group, gamma, {}, {}};
  for (Elem g = 0; g < a.group.order(); ++g) {
    std::vector<ObjId> o(gamma.num_objects());
    std::vector<MorId> m(gamma.num_morphisms());
    for (ObjId c = 0; c < gamma.num_objects(); ++c) o[c] = sk.retraction(a.act(g, sk.inclusion(c)));
    for (MorId f = 0; f < gamma.num_morphisms(); ++f) m[f] = sk.retraction.map(a.act_mor(g, sk.inclusion.map(f)));
    out.on_objects.push_back(std::move(o));
    out.on_morphisms.push_back(std::move(m));
  }
  return out;
}

// A functor between quotients induced by r, if well defined.
std::optional<CatFunctor> induced_on_quotients(const QuotientResult& qx, const QuotientResult& qg, const CatFunctor& r) {
  const std::size_t no = qx.quotient.num_objects(), nm = qx.quotient.num_morphisms();
  std::vector<ObjId> obj(no, static_cast<ObjId>(-1));
  std::vector<MorId> mor(nm, static_cast<MorId>(-1));
  for (ObjId x = 0; x < r.source.num_objects(); ++x) {
    const ObjId v = qg.projection(r(x));
    ObjId& slot = obj[qx.projection(x)];
    if (slot != static_cast<ObjId>(-1) && slot != v) return std::nullopt;
    slot = v;
  }
  for (MorId f = 0; f < r.source.num_morphisms(); ++f) {
    const MorId v = qg.projection.map(r.map(f));
    MorId& slot = mor[qx.projection.map(f)];
    if (slot != static_cast<MorId>(-1) && slot != v) return std::nullopt;
    slot = v;
  }
  return CatFunctor{qx.quotient, qg.quotient, obj, mor};
}

bool same_hom(const GroupHom& a, const GroupHom& b) {
  return a.source == b.source && a.target == b.target && a.map == b.map;
}

}  // namespace

ReductionReport skeletal_reduction(const ScwolAction& a) {
  validate_action(a);
  const FinCat& x = a.space;
  const FinGroup& G = a.group;
  const Skeleton sk = skeleton(x);
  const CatFunctor& r = sk.retraction;
  ReductionReport rep;
  rep.reduced = conjugated_action(a, sk);
  rep.retraction = r;
  const ScwolAction& ag = rep.reduced;
  try {
    validate_action(ag);
    rep.reduced_action_valid = true;
  } catch (const Error&) {
    return rep;
  }

  rep.r_equivariant = true;
  for (Elem g = 0; g < G.order() && rep.r_equivariant; ++g) {
    for (ObjId o = 0; o < x.num_objects(); ++o)
      if (r(a.act(g, o)) != ag.act(g, r(o))) rep.r_equivariant = false;
    for (MorId f = 0; f < x.num_morphisms(); ++f)
      if (r.map(a.act_mor(g, f)) != ag.act_mor(g, r.map(f))) rep.r_equivariant = false;
  }

  rep.stabilizers_preserved = true;
  for (ObjId c = 0; c < sk.gamma.num_objects(); ++c)
    if (stabilizer_elements(a, sk.inclusion(c)) != stabilizer_elements(ag, c)) rep.stabilizers_preserved = false;

  rep.freeness_preserved = !a.free_on_objects() || ag.free_on_objects();

  const QuotientResult qx = quotient(a), qg = quotient(ag);
  const auto rbar_opt = induced_on_quotients(qx, qg, r);
  if (!rbar_opt) return rep;
  const CatFunctor& rbar = *rbar_opt;
  try {
    rbar.verify();
    rep.quotient_square_commutes = true;
  } catch (const Error&) {
    return rep;
  }
  rep.quotient_functor_equivalence = is_equivalence(rbar);
  if (!rep.quotient_functor_equivalence) return rep;

  // Coordinated choices: representatives and h elements on X/G are pulled from
  // its skeleton Q; those on Γ/G come from Q through r̄.
  const FinCat& qX = qx.quotient;
  const FinCat& qG = qg.quotient;
  const Skeleton skq = skeleton(qX);
  ComplexChoices cx, cg;
  std::vector<Elem> h_base(skq.gamma.num_morphisms(), G.identity());
  std::vector<ObjId> lift_rep(skq.gamma.num_objects());
  for (ObjId c = 0; c < skq.gamma.num_objects(); ++c) lift_rep[c] = x.object(qX.object_name(skq.inclusion(c)));
  auto lift_from = [&](ObjId from, MorId m) {
    for (MorId f : x.out(from))
      if (qx.projection.map(f) == m) return f;
    throw Error(ErrorKind::InternalError, "no lift of " + qX.morphism_name(m));
  };
  for (MorId m = 0; m < skq.gamma.num_morphisms(); ++m) {
    const MorId mq = skq.inclusion.map(m);
    if (qX.is_identity(mq)) continue;
    const MorId l = lift_from(lift_rep[skq.gamma.source(m)], mq);
    auto h = least_mover(a, x.target(l), lift_rep[skq.gamma.target(m)]);
    if (!h) return rep;
    h_base[m] = *h;
  }
  for (ObjId s = 0; s < qX.num_objects(); ++s) {
    const ObjId c = skq.retraction(s);
    const MorId eta = skq.eta.components[s];
    cx.representative[s] = x.target(lift_from(lift_rep[c], eta));
  }
  for (MorId m = 0; m < qX.num_morphisms(); ++m) cx.h[m] = h_base[skq.retraction.map(m)];

  std::map<ObjId, ObjId> q_of_gobj;
  for (ObjId c = 0; c < skq.gamma.num_objects(); ++c) {
    const ObjId v = rbar(skq.inclusion(c));
    if (!q_of_gobj.emplace(v, c).second) return rep;
    cg.representative[v] = r(lift_rep[c]);
  }
  if (q_of_gobj.size() != qG.num_objects()) return rep;
  for (MorId m = 0; m < skq.gamma.num_morphisms(); ++m) {
    const MorId v = rbar.map(skq.inclusion.map(m));
    if (cg.h.count(v) && cg.h[v] != h_base[m]) return rep;
    cg.h[v] = h_base[m];
  }
  if (cg.h.size() != qG.num_morphisms()) return rep;

  ComplexResult fx, fg;
  try {
    fx = complex_of_groups(a, cx);
    fg = complex_of_groups(ag, cg);
  } catch (const Error&) {
    return rep;
  }
  bool agree = true;
  for (ObjId s = 0; s < qX.num_objects(); ++s) {
    const ObjId v = rbar(s);
    if (!(fx.complex.local[s] == fg.complex.local[v]) || !same_hom(fx.to_group[s], fg.to_group[v])) agree = false;
  }
  for (MorId m = 0; m < qX.num_morphisms() && agree; ++m) {
    if (!same_hom(fx.complex.homs[m], fg.complex.homs[rbar.map(m)])) agree = false;
    for (MorId n : qX.out(qX.target(m)))
      if (fx.complex.twist(n, m) != fg.complex.twist(rbar.map(n), rbar.map(m))) agree = false;
  }
  rep.complexes_agree = agree;
  if (!agree) return rep;

  const FinCat hx = hocolim_groups(fx.complex), hg = hocolim_groups(fg.complex);
  const auto offx = hocolim_offsets(fx.complex), offg = hocolim_offsets(fg.complex);
  CatFunctor hr{hx, hg, rbar.on_objects, std::vector<MorId>(hx.num_morphisms())};
  for (MorId m = 0; m < qX.num_morphisms(); ++m)
    for (MorId k = offx[m]; k < offx[m + 1]; ++k) hr.on_morphisms[k] = offg[rbar.map(m)] + (k - offx[m]);
  try {
    hr.verify();
    rep.hocolim_functor_equivalence = is_equivalence(hr);
  } catch (const Error&) {
    rep.hocolim_functor_equivalence = false;
  }
  rep.chi_hocolim_space = chi_L(hx);
  rep.chi_hocolim_skeleton = chi_L(hg);
  rep.hocolim_chi_equal = rep.chi_hocolim_space == rep.chi_hocolim_skeleton;
  return rep;
}

EquivariantSkeleton equivariant_skeleton(const ScwolAction& a) {
  validate_action(a);
  const FinCat& x = a.space;
  const FinGroup& G = a.group;
  const auto classes = iso_classes(x);
  const auto cls = iso_class_index(x, classes);
  std::vector<ObjId> section(classes.size(), static_cast<ObjId>(-1));
  for (std::size_t c = 0; c < classes.size(); ++c) {
    if (section[c] != static_cast<ObjId>(-1)) continue;
    const ObjId xt = classes[c].representative;
    for (Elem g = 0; g < G.order(); ++g) {
      const ObjId gx = a.act(g, xt);
      ObjId& s = section[cls[gx]];
      if (s != static_cast<ObjId>(-1) && s != gx)
        throw Error(ErrorKind::InternalError, "translates of " + x.object_name(xt) + " are isomorphic but distinct");
      s = gx;
    }
  }
  std::vector<ObjId> objs(section);
  std::sort(objs.begin(), objs.end());
  CatFunctor inc;
  FinCat gamma = full_subcategory(x, objs, &inc);
  std::vector<ObjId> pos(x.num_objects(), static_cast<ObjId>(-1));
  for (ObjId k = 0; k < objs.size(); ++k) pos[objs[k]] = k;

  std::vector<MorId> eta(x.num_objects()), eta_inv(x.num_objects());
  std::vector<ObjId> r_obj(x.num_objects());
  for (ObjId o = 0; o < x.num_objects(); ++o) {
    const ObjId s = section[cls[o]];
    r_obj[o] = pos[s];
    bool found = false;
    for (MorId e : x.hom(s, o)) {
      if (auto inv = x.inverse(e)) {
        eta[o] = e;
        eta_inv[o] = *inv;
        found = true;
        break;
      }
    }
    if (!found) throw Error(ErrorKind::InternalError, "no isomorphism onto " + x.object_name(o));
  }
  std::map<MorId, MorId> in_gamma;
  for (MorId g = 0; g < gamma.num_morphisms(); ++g) in_gamma[inc.map(g)] = g;
  std::vector<MorId> r_mor(x.num_morphisms());
  for (MorId f = 0; f < x.num_morphisms(); ++f)
    r_mor[f] = in_gamma.at(x.compose(eta_inv[x.target(f)], x.compose(f, eta[x.source(f)])));
  CatFunctor r{x, gamma, r_obj, r_mor};
  NatIso n{compose(inc, r), CatFunctor::identity(x), eta};
  n.verify();
  Skeleton sk{gamma, inc, r, n};
  ScwolAction restricted{G, gamma, {}, {}};
  for (Elem g = 0; g < G.order(); ++g) {
    std::vector<ObjId> o(gamma.num_objects());
    std::vector<MorId> m(gamma.num_morphisms());
    for (ObjId c = 0; c < gamma.num_objects(); ++c) {
      const ObjId gx = a.act(g, inc(c));
      if (pos[gx] == static_cast<ObjId>(-1))
        throw Error(ErrorKind::InternalError, "skeleton objects are not closed under the action");
      o[c] = pos[gx];
    }
    for (MorId f = 0; f < gamma.num_morphisms(); ++f) m[f] = in_gamma.at(a.act_mor(g, inc.map(f)));
    restricted.on_objects.push_back(std::move(o));
    restricted.on_morphisms.push_back(std::move(m));
  }
  for (ObjId c = 0; c < gamma.num_objects(); ++c)
    if (r(inc(c)) != c) throw Error(ErrorKind::InternalError, "r∘i is not the identity");
  for (Elem g = 0; g < G.order(); ++g)
    for (ObjId o = 0; o < x.num_objects(); ++o)
      if (eta[a.act(g, o)] != a.act_mor(g, eta[o]))
        throw Error(ErrorKind::InternalError, "η is not equivariant at " + x.object_name(o));
  validate_action(restricted);
  return EquivariantSkeleton{sk, restricted};
}

// ---------------------------------------------------------------- χ

FinCat transport_groupoid(const ScwolAction& gset) {
  const FinCat& s = gset.space;
  for (MorId f = 0; f < s.num_morphisms(); ++f)
    if (!s.is_identity(f)) throw Error(ErrorKind::NotAnAction, "a G-set acts on a discrete category");
  try {
    validate_action(gset);
  } catch (const Error& e) {
    throw Error(ErrorKind::NotAnAction, e.what());
  }
  const FinGroup& G = gset.group;
  const std::size_t n = G.order();
  FinCat::Builder b;
  for (ObjId p = 0; p < s.num_objects(); ++p) b.add_object(s.object_name(p));
  for (ObjId p = 0; p < s.num_objects(); ++p)
    for (Elem g = 0; g < n; ++g) b.add_morphism(G.label(g) + "@" + s.object_name(p), p, gset.act(g, p));
  for (ObjId p = 0; p < s.num_objects(); ++p) b.set_identity(p, static_cast<MorId>(p * n + G.identity()));
  for (MorId f = 0; f < b.num_morphisms(); ++f) {
    const ObjId p = static_cast<ObjId>(f / n);
    const Elem g = static_cast<Elem>(f % n);
    const ObjId gp = gset.act(g, p);
    for (Elem h = 0; h < n; ++h) b.set_composite(static_cast<MorId>(gp * n + h), f, static_cast<MorId>(p * n + G.mul(h, g)));
  }
  FinCat t = b.build();
  const Rational direct = chi_L(t);
  const Rational via = chi_L(hocolim_groups(complex_of_groups(gset).complex));
  if (direct != via)
    throw Error(ErrorKind::InternalError, "transport groupoid disagrees with the hocolim of its complex of groups");
  return t;
}

ChiReport chi_theorems(const ScwolAction& a) {
  validate_action(a);
  ChiReport rep;
  rep.chi_space = chi_scwol(a.space);
  const ComplexResult cr = complex_of_groups(a);
  const FinCat& q = cr.quotient.quotient;
  rep.chi_quotient = chi_scwol(q);
  rep.group_order = a.group.order();
  rep.free_on_objects = a.free_on_objects();
  const BigInt order(static_cast<unsigned long>(rep.group_order));
  if (rep.free_on_objects) rep.free_quotient_law = rep.chi_quotient * order == rep.chi_space;

  const CellSpectrum spec = bar_spectrum(q);
  std::map<std::string, Rational> inv_order, ones;
  for (ObjId s = 0; s < q.num_objects(); ++s) {
    inv_order[q.object_name(s)] = Rational(1, static_cast<unsigned long>(cr.complex.local[s].order()));
    ones[q.object_name(s)] = 1;
  }
  rep.chi2_formula = formula_value(spec, inv_order);
  rep.chi2_hocolim = chi_L(hocolim_groups(cr.complex));
  rep.chi_space_over_order = Rational(rep.chi_space, order);
  rep.chi_space_over_order.canonicalize();
  rep.chi2_agrees = rep.chi2_formula == rep.chi2_hocolim && rep.chi2_hocolim == rep.chi_space_over_order;
  rep.chi_hocolim = formula_value(spec, ones);
  rep.chi_agrees = rep.chi_hocolim == Rational(rep.chi_quotient);
  return rep;
}

DevelopabilityReport developability_check(const ComplexOfGroups& f, const std::vector<DevelopabilityCandidate>& c) {
  f.validate();
  DevelopabilityReport rep;
  rep.r = chi_L(hocolim_groups(f));
  for (const auto& cand : c) {
    if (cand.group_order <= 0) throw Error(ErrorKind::DimensionMismatch, "group order must be positive");
    DevelopabilityVerdict v;
    v.candidate = cand;
    v.required_chi = rep.r * Rational(cand.group_order);
    v.integral = is_integer(v.required_chi);
    v.sign_ok = sgn(Rational(cand.chi_space)) == sgn(rep.r);
    v.pass = Rational(cand.chi_space) == v.required_chi;
    rep.verdicts.push_back(v);
  }
  return rep;
}

Rational haefliger_chi(const FinCat& i, const std::map<std::string, Rational>& vals) {
  if (!is_scwol(i)) throw Error(ErrorKind::NotScwol, "haefliger_chi needs a scwol");
  const PathCounts pc = path_counts(i);
  const FinCat& sk = pc.skeleton;
  Rational total = 0;
  for (ObjId s = 0; s < sk.num_objects(); ++s) {
    auto it = vals.find(sk.object_name(s));
    if (it == vals.end()) throw Error(ErrorKind::MissingValue, "no value for " + sk.object_name(s));
    const BigInt weight = 1 - chi_scwol(lower_link(sk, s));
    BigInt alt = 0;
    for (std::size_t n = 0; n < pc.starts[s].size(); ++n) alt += (n % 2 == 0 ? 1 : -1) * pc.starts[s][n];
    if (alt != weight)
      throw Error(ErrorKind::InternalError, "lower link at " + sk.object_name(s) + " disagrees with the path count");
    total += Rational(weight) * it->second;
  }
  return total;
}

std::size_t path_orbit_count(const ScwolAction& a, std::size_t n) {
  std::vector<ObjId> start;
  const auto paths = enumerate_paths(a.space, n, &start);
  std::set<std::vector<std::uint32_t>> seen;
  for (std::size_t k = 0; k < paths.size(); ++k) {
    std::vector<std::uint32_t> best;
    for (Elem g = 0; g < a.group.order(); ++g) {
      std::vector<std::uint32_t> img;
      if (n == 0) img.push_back(a.act(g, start[k]));
      for (MorId f : paths[k]) img.push_back(a.act_mor(g, f));
      if (best.empty() || img < best) best = std::move(img);
    }
    seen.insert(std::move(best));
  }
  return seen.size();
}

ScwolAction fatten(const ScwolAction& a, const std::vector<std::pair<ObjId, std::size_t>>& copies) {
  const FinCat& x = a.space;
  const FinGroup& G = a.group;
  std::vector<std::size_t> extra(x.num_objects(), 0);
  for (const auto& [o, k] : copies) {
    if (o >= x.num_objects()) throw Error(ErrorKind::UnknownObject, "object index out of range");
    std::set<ObjId> orbit;
    for (Elem g = 0; g < G.order(); ++g) orbit.insert(a.act(g, o));
    for (ObjId y : orbit) extra[y] += k;
  }
  std::vector<std::pair<std::string, ObjId>> layout;
  std::vector<std::vector<ObjId>> id_of(x.num_objects());
  for (ObjId o = 0; o < x.num_objects(); ++o) {
    id_of[o].push_back(static_cast<ObjId>(layout.size()));
    layout.emplace_back(x.object_name(o), o);
  }
  std::size_t max_extra = *std::max_element(extra.begin(), extra.end());
  for (std::size_t k = 1; k <= max_extra; ++k)
    for (ObjId o = 0; o < x.num_objects(); ++o)
      if (extra[o] >= k) {
        id_of[o].push_back(static_cast<ObjId>(layout.size()));
        layout.emplace_back(x.object_name(o) + "#" + std::to_string(k), o);
      }
  std::vector<std::size_t> copy_no(layout.size());
  for (ObjId o = 0; o < x.num_objects(); ++o)
    for (std::size_t k = 0; k < id_of[o].size(); ++k) copy_no[id_of[o][k]] = k;

  CatFunctor proj;
  FinCat y = inflate(x, layout, &proj);
  ScwolAction out{G, y, {}, {}};
  for (Elem g = 0; g < G.order(); ++g) {
    std::vector<ObjId> o(y.num_objects());
    std::vector<MorId> m(y.num_morphisms());
    for (ObjId p = 0; p < y.num_objects(); ++p) o[p] = id_of[a.act(g, proj(p))][copy_no[p]];
    for (MorId f = 0; f < y.num_morphisms(); ++f) {
      const MorId gf = a.act_mor(g, proj.map(f));
      const auto& base_hom = x.hom(x.source(gf), x.target(gf));
      const auto idx = std::find(base_hom.begin(), base_hom.end(), gf) - base_hom.begin();
      m[f] = y.hom(o[y.source(f)], o[y.target(f)])[idx];
    }
    out.on_objects.push_back(std::move(o));
    out.on_morphisms.push_back(std::move(m));
  }
  validate_action(out);
  return out;
}

}  // namespace eulcat
