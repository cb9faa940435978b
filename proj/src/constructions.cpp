#include "eulcat/constructions.hpp"

#include <algorithm>
#include <functional>
#include <map>

#include "eulcat/error.hpp"

namespace eulcat {

FinCat discrete(const std::vector<std::string>& objects) {
  FinCat::Builder b;
  for (const auto& o : objects) b.add_identity(b.add_object(o));
  return b.build();
}

FinCat one_object(const FinGroup& g) {
  FinCat::Builder b;
  ObjId star = b.add_object("*");
  for (Elem a = 0; a < g.order(); ++a) b.add_morphism(g.label(a), star, star);
  b.set_identity(star, g.identity());
  b.fill_composites([&](MorId x, MorId y) { return g.mul(x, y); });
  return b.build();
}

FinCat one_object_monoid(const std::vector<std::string>& labels, const std::vector<std::vector<std::size_t>>& table,
                         std::size_t unit) {
  FinCat::Builder b;
  ObjId star = b.add_object("*");
  for (const auto& l : labels) b.add_morphism(l, star, star);
  b.set_identity(star, static_cast<MorId>(unit));
  b.fill_composites([&](MorId x, MorId y) { return static_cast<MorId>(table.at(x).at(y)); });
  return b.build();
}

FinCat multiplicative_z2() { return one_object_monoid({"1", "0"}, {{0, 1}, {1, 1}}, 0); }

FinCat poset(const std::vector<std::string>& elements, const std::function<bool(std::size_t, std::size_t)>& leq) {
  const std::size_t n = elements.size();
  FinCat::Builder b;
  for (const auto& e : elements) b.add_object(e);
  std::map<std::pair<std::size_t, std::size_t>, MorId> arrow;
  for (std::size_t a = 0; a < n; ++a) {
    if (!leq(a, a)) throw Error(ErrorKind::BrokenIdentity, "order relation is not reflexive at " + elements[a]);
    for (std::size_t c = 0; c < n; ++c) {
      if (!leq(a, c)) continue;
      if (a != c && leq(c, a))
        throw Error(ErrorKind::BrokenIdentity, "order relation is not antisymmetric at " + elements[a]);
      MorId f = a == c ? b.add_identity(static_cast<ObjId>(a))
                       : b.add_morphism(elements[a] + "->" + elements[c], static_cast<ObjId>(a), static_cast<ObjId>(c));
      arrow[{a, c}] = f;
    }
  }
  b.fill_composites([&](MorId g, MorId f) {
    auto it = arrow.find({b.source(f), b.target(g)});
    if (it == arrow.end())
      throw Error(ErrorKind::IncompleteCompositionTable, "order relation is not transitive");
    return it->second;
  });
  return b.build();
}

FinCat opposite(const FinCat& c) {
  FinCat::Builder b;
  for (ObjId x = 0; x < c.num_objects(); ++x) b.add_object(c.object_name(x));
  for (MorId f = 0; f < c.num_morphisms(); ++f) b.add_morphism(c.morphism_name(f), c.target(f), c.source(f));
  for (ObjId x = 0; x < c.num_objects(); ++x) b.set_identity(x, c.identity(x));
  b.fill_composites([&](MorId g, MorId f) { return c.compose(f, g); });
  return b.build();
}

FinCat product(const FinCat& a, const FinCat& c) {
  FinCat::Builder b;
  const std::size_t nc = c.num_objects(), mc = c.num_morphisms();
  for (ObjId x = 0; x < a.num_objects(); ++x)
    for (ObjId y = 0; y < nc; ++y) b.add_object("(" + a.object_name(x) + "," + c.object_name(y) + ")");
  for (MorId f = 0; f < a.num_morphisms(); ++f)
    for (MorId g = 0; g < mc; ++g)
      b.add_morphism("(" + a.morphism_name(f) + "," + c.morphism_name(g) + ")",
                     static_cast<ObjId>(a.source(f) * nc + c.source(g)),
                     static_cast<ObjId>(a.target(f) * nc + c.target(g)));
  for (ObjId x = 0; x < a.num_objects(); ++x)
    for (ObjId y = 0; y < nc; ++y)
      b.set_identity(static_cast<ObjId>(x * nc + y), static_cast<MorId>(a.identity(x) * mc + c.identity(y)));
  b.fill_composites([&](MorId g, MorId f) {
    return static_cast<MorId>(a.compose(g / mc, f / mc) * mc + c.compose(g % mc, f % mc));
  });
  return b.build();
}

FinCat coproduct(const FinCat& a, const FinCat& c) {
  FinCat::Builder b;
  const auto oa = static_cast<ObjId>(a.num_objects());
  const auto ma = static_cast<MorId>(a.num_morphisms());
  for (ObjId x = 0; x < a.num_objects(); ++x) b.add_object(a.object_name(x));
  for (ObjId x = 0; x < c.num_objects(); ++x) b.add_object(c.object_name(x));
  for (MorId f = 0; f < a.num_morphisms(); ++f) b.add_morphism(a.morphism_name(f), a.source(f), a.target(f));
  for (MorId f = 0; f < c.num_morphisms(); ++f) b.add_morphism(c.morphism_name(f), c.source(f) + oa, c.target(f) + oa);
  for (ObjId x = 0; x < a.num_objects(); ++x) b.set_identity(x, a.identity(x));
  for (ObjId x = 0; x < c.num_objects(); ++x) b.set_identity(x + oa, c.identity(x) + ma);
  b.fill_composites([&](MorId g, MorId f) {
    if (f < ma) return a.compose(g, f);
    return c.compose(g - ma, f - ma) + ma;
  });
  return b.build();
}

FinCat free_category(const std::vector<std::string>& objects, const std::vector<Edge>& edges,
                     std::vector<std::vector<std::size_t>>* words) {
  const std::size_t n = objects.size();
  std::vector<std::vector<std::size_t>> out(n);
  for (std::size_t e = 0; e < edges.size(); ++e) {
    if (edges[e].source >= n || edges[e].target >= n)
      throw Error(ErrorKind::DanglingReference, "edge " + edges[e].name + " has an endpoint out of range");
    out[edges[e].source].push_back(e);
  }
  // acyclicity via depth-first colouring
  std::vector<int> colour(n, 0);
  std::function<void(std::size_t)> visit = [&](std::size_t v) {
    colour[v] = 1;
    for (std::size_t e : out[v]) {
      std::size_t w = edges[e].target;
      if (colour[w] == 1) throw Error(ErrorKind::NotScwol, "graph has a cycle through " + objects[w]);
      if (colour[w] == 0) visit(w);
    }
    colour[v] = 2;
  };
  for (std::size_t v = 0; v < n; ++v)
    if (colour[v] == 0) visit(v);

  FinCat::Builder b;
  for (const auto& o : objects) b.add_object(o);
  std::map<std::vector<std::size_t>, MorId> paths;  // edge sequence, first edge first
  std::vector<std::vector<std::size_t>> seq;
  for (std::size_t v = 0; v < n; ++v) {
    b.add_identity(static_cast<ObjId>(v));
    seq.emplace_back();
  }
  std::vector<std::size_t> path;
  std::function<void(std::size_t, std::size_t)> grow = [&](std::size_t origin, std::size_t at) {
    for (std::size_t e : out[at]) {
      path.push_back(e);
      std::string name;
      for (std::size_t k = path.size(); k-- > 0;) {
        name += edges[path[k]].name;
        if (k) name += '.';
      }
      MorId m = b.add_morphism(name, static_cast<ObjId>(origin), static_cast<ObjId>(edges[e].target));
      paths[path] = m;
      seq.push_back(path);
      grow(origin, edges[e].target);
      path.pop_back();
    }
  };
  for (std::size_t v = 0; v < n; ++v) grow(v, v);
  b.fill_composites([&](MorId g, MorId f) {
    std::vector<std::size_t> p = seq[f];
    p.insert(p.end(), seq[g].begin(), seq[g].end());
    return paths.at(p);
  });
  FinCat c = b.build();
  if (words) *words = std::move(seq);
  return c;
}

FinCat inflate(const FinCat& c, const std::vector<std::pair<std::string, ObjId>>& copies, CatFunctor* projection) {
  FinCat::Builder b;
  const std::size_t k = copies.size();
  for (const auto& [name, x] : copies) {
    if (x >= c.num_objects()) throw Error(ErrorKind::UnknownObject, "copy of an unknown object");
    b.add_object(name);
  }
  // index (p, q, position in hom_c) -> morphism
  std::vector<std::vector<MorId>> first(k, std::vector<MorId>(k));
  std::vector<MorId> over;
  for (ObjId p = 0; p < k; ++p) {
    for (ObjId q = 0; q < k; ++q) {
      first[p][q] = static_cast<MorId>(over.size());
      for (MorId f : c.hom(copies[p].second, copies[q].second)) {
        std::string name = (p == q && c.is_identity(f)) ? "id_" + copies[p].first
                                                         : c.morphism_name(f) + "@" + copies[p].first + "," + copies[q].first;
        MorId m = b.add_morphism(name, p, q);
        if (p == q && c.is_identity(f)) b.set_identity(p, m);
        over.push_back(f);
      }
    }
  }
  auto lookup = [&](ObjId p, ObjId q, MorId f) {
    const auto& h = c.hom(copies[p].second, copies[q].second);
    auto pos = std::find(h.begin(), h.end(), f) - h.begin();
    return static_cast<MorId>(first[p][q] + pos);
  };
  b.fill_composites([&](MorId g, MorId f) { return lookup(b.source(f), b.target(g), c.compose(over[g], over[f])); });
  FinCat result = b.build();
  if (projection) {
    std::vector<ObjId> obj;
    for (const auto& cp : copies) obj.push_back(cp.second);
    *projection = CatFunctor{result, c, obj, over};
  }
  return result;
}

std::optional<CatFunctor> find_isomorphism(const FinCat& a, const FinCat& b) {
  const std::size_t n = a.num_objects(), m = a.num_morphisms();
  if (n != b.num_objects() || m != b.num_morphisms()) return std::nullopt;
  std::vector<ObjId> obj(n, static_cast<ObjId>(-1));
  std::vector<char> used_obj(n, 0);
  std::vector<MorId> mor(m, static_cast<MorId>(-1));
  std::vector<char> used_mor(m, 0);
  std::vector<MorId> order;
  for (MorId f = 0; f < m; ++f)
    if (!a.is_identity(f)) order.push_back(f);

  auto consistent = [&](MorId f) {
    // every composite among assigned morphisms involving f must map correctly
    auto check = [&](MorId g, MorId h) {
      MorId gh = a.compose(g, h);
      if (mor[g] == static_cast<MorId>(-1) || mor[h] == static_cast<MorId>(-1) || mor[gh] == static_cast<MorId>(-1))
        return true;
      return b.compose(mor[g], mor[h]) == mor[gh];
    };
    for (MorId g : a.out(a.target(f)))
      if (!check(g, f)) return false;
    for (MorId h : a.in(a.source(f)))
      if (!check(f, h)) return false;
    // f as a composite
    for (MorId h : a.out(a.source(f)))
      for (MorId g : a.hom(a.target(h), a.target(f)))
        if (a.compose(g, h) == f && !check(g, h)) return false;
    return true;
  };

  std::function<bool(std::size_t)> assign_mor = [&](std::size_t k) -> bool {
    if (k == order.size()) return true;
    const MorId f = order[k];
    for (MorId t : b.hom(obj[a.source(f)], obj[a.target(f)])) {
      if (used_mor[t] || b.is_identity(t)) continue;
      mor[f] = t;
      used_mor[t] = 1;
      if (consistent(f) && assign_mor(k + 1)) return true;
      used_mor[t] = 0;
      mor[f] = static_cast<MorId>(-1);
    }
    return false;
  };

  std::function<bool(ObjId)> assign_obj = [&](ObjId x) -> bool {
    if (x == n) {
      std::fill(mor.begin(), mor.end(), static_cast<MorId>(-1));
      std::fill(used_mor.begin(), used_mor.end(), 0);
      for (ObjId y = 0; y < n; ++y) {
        mor[a.identity(y)] = b.identity(obj[y]);
        used_mor[b.identity(obj[y])] = 1;
      }
      return assign_mor(0);
    }
    for (ObjId t = 0; t < n; ++t) {
      if (used_obj[t]) continue;
      bool ok = true;
      obj[x] = t;
      for (ObjId y = 0; y <= x && ok; ++y)
        ok = a.hom(x, y).size() == b.hom(t, obj[y]).size() && a.hom(y, x).size() == b.hom(obj[y], t).size();
      if (!ok) continue;
      used_obj[t] = 1;
      if (assign_obj(x + 1)) return true;
      used_obj[t] = 0;
    }
    obj[x] = static_cast<ObjId>(-1);
    return false;
  };
  if (!assign_obj(0)) return std::nullopt;
  CatFunctor f{a, b, obj, mor};
  f.verify();
  return f;
}

CatFunctor one_object_functor(const FinCat& a, const FinCat& b, const GroupHom& h) {
  CatFunctor f{a, b, {0}, std::vector<MorId>(h.map.begin(), h.map.end())};
  f.verify();
  return f;
}

FinCat terminal_category() { return discrete({"*"}); }

FinCat parallel_pair() {
  FinCat::Builder b;
  ObjId j = b.add_object("j"), k = b.add_object("k");
  b.add_identity(j);
  b.add_identity(k);
  b.add_morphism("f", j, k);
  b.add_morphism("g", j, k);
  return b.build();
}

FinCat pushout_scwol() {
  FinCat::Builder b;
  ObjId j = b.add_object("j"), k = b.add_object("k"), l = b.add_object("l");
  b.add_identity(j);
  b.add_identity(k);
  b.add_identity(l);
  b.add_morphism("g", j, k);
  b.add_morphism("h", j, l);
  return b.build();
}

FinCat arrow_category() {
  FinCat::Builder b;
  ObjId x = b.add_object("0"), y = b.add_object("1");
  b.add_identity(x);
  b.add_identity(y);
  b.add_morphism("a", x, y);
  return b.build();
}

FinCat terminal_object_poset() {
  FinCat::Builder b;
  ObjId a = b.add_object("a"), t = b.add_object("t");
  b.add_identity(a);
  b.add_identity(t);
  b.add_morphism("u", a, t);
  return b.build();
}

FinCat subsets_poset(std::size_t q) {
  const std::size_t points = q + 1;
  if (points > 16) throw Error(ErrorKind::DimensionMismatch, "subsets poset too large");
  std::vector<unsigned> masks;
  for (unsigned s = 1; s < (1u << points); ++s) masks.push_back(s);
  std::stable_sort(masks.begin(), masks.end(),
                   [](unsigned x, unsigned y) { return __builtin_popcount(x) < __builtin_popcount(y); });
  std::vector<std::string> names;
  for (unsigned s : masks) {
    std::string name = "{";
    bool first = true;
    for (std::size_t i = 0; i < points; ++i) {
      if (!(s >> i & 1u)) continue;
      if (!first) name += ",";
      name += std::to_string(i);
      first = false;
    }
    names.push_back(name + "}");
  }
  // arrow J -> K iff K ⊆ J
  return poset(names, [&](std::size_t a, std::size_t c) { return (masks[c] & ~masks[a]) == 0; });
}

FinCat circle_scwol() {
  FinCat::Builder b;
  ObjId x = b.add_object("x"), xp = b.add_object("x'"), y = b.add_object("y"), z = b.add_object("z");
  for (ObjId o : {x, xp, y, z}) b.add_identity(o);
  b.add_morphism("g", x, y);
  b.add_morphism("g'", xp, y);
  b.add_morphism("h", x, z);
  b.add_morphism("h'", xp, z);
  return b.build();
}

FinCat biset_category(const PermutationGroup& g) {
  const std::size_t pts = 4;
  for (const auto& p : g.perms)
    if (p.size() != pts) throw Error(ErrorKind::DimensionMismatch, "biset group must act on 4 points");
  FinCat::Builder b;
  ObjId x = b.add_object("x"), y = b.add_object("y");
  b.add_identity(x);
  const FinGroup& G = g.group;
  std::vector<MorId> aut(G.order());
  for (Elem a = 0; a < G.order(); ++a) aut[a] = b.add_morphism(G.label(a), y, y);
  b.set_identity(y, aut[G.identity()]);
  std::vector<MorId> s(pts);
  for (std::size_t i = 0; i < pts; ++i) s[i] = b.add_morphism(std::to_string(i + 1), x, y);
  b.fill_composites([&](MorId u, MorId f) -> MorId {
    const Elem gu = u - aut[0];
    if (b.source(f) == y) return aut[G.mul(gu, f - aut[0])];
    return s[g.perms[gu][f - s[0]]];
  });
  return b.build();
}

FinCat gamma1() { return biset_category(permutation_group(4, {parse_cycles("(1 2 3 4)", 4)})); }

FinCat gamma2() {
  return biset_category(permutation_group(4, {parse_cycles("(1 2)", 4), parse_cycles("(3 4)", 4)}));
}

FinCat trivialized_groupoid(const std::vector<std::string>& objects, const FinGroup& g) {
  const std::size_t k = objects.size(), n = g.order();
  FinCat::Builder b;
  for (const auto& o : objects) b.add_object(o);
  // morphism (x, y, a) at index (x*k + y)*n + a
  for (ObjId x = 0; x < k; ++x)
    for (ObjId y = 0; y < k; ++y)
      for (Elem a = 0; a < n; ++a) b.add_morphism(g.label(a) + ":" + objects[x] + ">" + objects[y], x, y);
  for (ObjId x = 0; x < k; ++x) b.set_identity(x, static_cast<MorId>((x * k + x) * n + g.identity()));
  b.fill_composites([&](MorId h, MorId f) {
    const ObjId x = b.source(f), z = b.target(h);
    return static_cast<MorId>((x * k + z) * n + g.mul(h % n, f % n));
  });
  return b.build();
}

}  // namespace eulcat
