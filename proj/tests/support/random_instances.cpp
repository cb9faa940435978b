#include "random_instances.hpp"

#include <algorithm>
#include <map>

#include "eulcat/error.hpp"

namespace eulcat::testing {

std::size_t uniform(Rng& rng, std::size_t lo, std::size_t hi) {
  return std::uniform_int_distribution<std::size_t>(lo, hi)(rng);
}

bool coin(Rng& rng, double p) { return std::bernoulli_distribution(p)(rng); }

FreeDag random_free_dag(Rng& rng, std::size_t n, std::size_t max_edges) {
  FreeDag d;
  std::vector<std::string> objs;
  for (std::size_t k = 0; k < n; ++k) objs.push_back("o" + std::to_string(k));
  const std::size_t m = n < 2 ? 0 : uniform(rng, 0, max_edges);
  for (std::size_t e = 0; e < m; ++e) {
    std::size_t s = uniform(rng, 0, n - 2);
    std::size_t t = uniform(rng, s + 1, n - 1);
    d.edges.push_back({"e" + std::to_string(e), s, t});
  }
  d.category = free_category(objs, d.edges, &d.words);
  return d;
}

namespace {

std::vector<std::vector<char>> random_order(Rng& rng, std::size_t n) {
  std::vector<std::vector<char>> le(n, std::vector<char>(n, 0));
  for (std::size_t i = 0; i < n; ++i) le[i][i] = 1;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      if (coin(rng, 0.4)) le[i][j] = 1;
  for (std::size_t k = 0; k < n; ++k)
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j)
        if (le[i][k] && le[k][j]) le[i][j] = 1;
  return le;
}

}  // namespace

FinCat random_poset(Rng& rng, std::size_t n) {
  auto le = random_order(rng, n);
  std::vector<std::string> objs;
  for (std::size_t k = 0; k < n; ++k) objs.push_back("p" + std::to_string(k));
  return poset(objs, [&](std::size_t a, std::size_t b) { return le[a][b] != 0; });
}

FinCat random_scwol(Rng& rng, std::size_t max_objects, bool skeletal_only) {
  const std::size_t mode = uniform(rng, 0, skeletal_only || max_objects < 2 ? 1 : 2);
  if (mode == 0) {
    const std::size_t n = uniform(rng, 1, max_objects);
    return random_free_dag(rng, n, std::min<std::size_t>(n + 2, 10)).category;
  }
  if (mode == 1) return random_poset(rng, uniform(rng, 1, max_objects));
  const std::size_t n0 = uniform(rng, 1, max_objects - 1);
  FinCat base = coin(rng) ? random_free_dag(rng, n0, n0 + 1).category : random_poset(rng, n0);
  std::vector<std::pair<std::string, ObjId>> copies;
  for (ObjId x = 0; x < base.num_objects(); ++x) copies.emplace_back(base.object_name(x), x);
  while (copies.size() < max_objects && coin(rng, 0.6)) {
    const ObjId x = static_cast<ObjId>(uniform(rng, 0, n0 - 1));
    copies.emplace_back(base.object_name(x) + "_" + std::to_string(copies.size()), x);
  }
  return inflate(base, copies);
}

FinGroup random_group(Rng& rng, std::size_t max_order) {
  std::vector<FinGroup> pool;
  for (std::size_t n = 1; n <= max_order; ++n) pool.push_back(FinGroup::cyclic(n));
  for (std::size_t n = 2; 2 * n <= max_order; ++n) pool.push_back(FinGroup::dihedral(n));
  if (max_order >= 4) pool.push_back(FinGroup::direct_product(FinGroup::cyclic(2), FinGroup::cyclic(2)));
  if (max_order >= 6) pool.push_back(FinGroup::symmetric(3));
  if (max_order >= 8) pool.push_back(FinGroup::direct_product(FinGroup::cyclic(2), FinGroup::cyclic(4)));
  if (max_order >= 12) pool.push_back(permutation_group(4, {{1, 2, 0, 3}, {1, 0, 3, 2}}).group);
  return pool[uniform(rng, 0, pool.size() - 1)];
}

std::vector<Elem> random_subgroup(Rng& rng, const FinGroup& g) {
  std::vector<Elem> gens;
  const std::size_t k = uniform(rng, 0, 2);
  for (std::size_t i = 0; i < k; ++i) gens.push_back(static_cast<Elem>(uniform(rng, 0, g.order() - 1)));
  return g.generated(gens);
}

// ---------------------------------------------------------------- groupoids

std::size_t GroupoidSpec::total_objects() const {
  std::size_t n = 0;
  for (auto k : objects) n += k;
  return n;
}

ObjId GroupoidSpec::object(std::size_t comp, std::size_t x) const {
  std::size_t off = 0;
  for (std::size_t c = 0; c < comp; ++c) off += objects[c];
  return static_cast<ObjId>(off + x);
}

MorId GroupoidSpec::morphism(std::size_t comp, std::size_t x, std::size_t y, Elem a) const {
  std::size_t off = 0;
  for (std::size_t c = 0; c < comp; ++c) off += objects[c] * objects[c] * groups[c].order();
  return static_cast<MorId>(off + (x * objects[comp] + y) * groups[comp].order() + a);
}

FinCat GroupoidSpec::build() const {
  FinCat::Builder b;
  std::vector<std::string> names;
  for (std::size_t c = 0; c < objects.size(); ++c)
    for (std::size_t x = 0; x < objects[c]; ++x) {
      names.push_back(prefix + std::to_string(c) + "_" + std::to_string(x));
      b.add_object(names.back());
    }
  struct Info {
    std::size_t comp, x, y;
    Elem a;
  };
  std::vector<Info> info;
  for (std::size_t c = 0; c < objects.size(); ++c) {
    const FinGroup& g = groups[c];
    for (std::size_t x = 0; x < objects[c]; ++x)
      for (std::size_t y = 0; y < objects[c]; ++y)
        for (Elem a = 0; a < g.order(); ++a) {
          b.add_morphism(g.label(a) + ":" + names[object(c, x)] + ">" + names[object(c, y)], object(c, x), object(c, y));
          info.push_back({c, x, y, a});
        }
    for (std::size_t x = 0; x < objects[c]; ++x) b.set_identity(object(c, x), morphism(c, x, x, g.identity()));
  }
  b.fill_composites([&](MorId g, MorId f) {
    const Info& i = info[f];
    const Info& j = info[g];
    return morphism(i.comp, i.x, j.y, groups[i.comp].mul(j.a, i.a));
  });
  return b.build();
}

GroupoidSpec random_groupoid(Rng& rng, std::size_t max_objects, const std::string& prefix) {
  GroupoidSpec s;
  s.prefix = prefix;
  std::size_t left = uniform(rng, 1, max_objects);
  while (left > 0) {
    const std::size_t k = uniform(rng, 1, left);
    s.objects.push_back(k);
    s.groups.push_back(random_group(rng, coin(rng, 0.15) ? 6 : 4));
    left -= k;
  }
  return s;
}

Rational groupoid_chi_oracle(const GroupoidSpec& s) {
  Rational r = 0;
  for (const auto& g : s.groups) r += Rational(1, static_cast<unsigned long>(g.order()));
  return r;
}

namespace {

struct CompChoice {
  std::size_t target;
  std::vector<std::size_t> images;
  GroupHom hom;
  std::vector<Elem> gauge;
};

CatFunctor functor_from_choices(const GroupoidSpec& s, const FinCat& sc, const GroupoidSpec& t, const FinCat& tc,
                                const std::vector<CompChoice>& ch) {
  CatFunctor f{sc, tc, std::vector<ObjId>(sc.num_objects()), std::vector<MorId>(sc.num_morphisms())};
  for (std::size_t c = 0; c < s.objects.size(); ++c) {
    const CompChoice& k = ch[c];
    const FinGroup& B = t.groups[k.target];
    for (std::size_t x = 0; x < s.objects[c]; ++x) f.on_objects[s.object(c, x)] = t.object(k.target, k.images[x]);
    for (std::size_t x = 0; x < s.objects[c]; ++x)
      for (std::size_t y = 0; y < s.objects[c]; ++y)
        for (Elem a = 0; a < s.groups[c].order(); ++a) {
          const Elem img = B.mul(B.mul(k.gauge[y], k.hom(a)), B.inv(k.gauge[x]));
          f.on_morphisms[s.morphism(c, x, y, a)] = t.morphism(k.target, k.images[x], k.images[y], img);
        }
  }
  f.verify();
  return f;
}

CompChoice random_choice(Rng& rng, const GroupoidSpec& s, std::size_t c, const GroupoidSpec& t) {
  CompChoice k;
  k.target = uniform(rng, 0, t.objects.size() - 1);
  const FinGroup& B = t.groups[k.target];
  for (std::size_t x = 0; x < s.objects[c]; ++x) {
    k.images.push_back(uniform(rng, 0, t.objects[k.target] - 1));
    k.gauge.push_back(static_cast<Elem>(uniform(rng, 0, B.order() - 1)));
  }
  auto homs = all_homomorphisms(s.groups[c], B);
  k.hom = homs[uniform(rng, 0, homs.size() - 1)];
  return k;
}

CompChoice identity_choice(const GroupoidSpec& s, std::size_t c, std::size_t target) {
  CompChoice k{target, {}, GroupHom::identity(s.groups[c]), {}};
  for (std::size_t x = 0; x < s.objects[c]; ++x) {
    k.images.push_back(x);
    k.gauge.push_back(s.groups[c].identity());
  }
  return k;
}

}  // namespace

CatFunctor random_groupoid_functor(Rng& rng, const GroupoidSpec& s, const FinCat& sc, const GroupoidSpec& t,
                                   const FinCat& tc) {
  std::vector<CompChoice> ch;
  for (std::size_t c = 0; c < s.objects.size(); ++c) ch.push_back(random_choice(rng, s, c, t));
  return functor_from_choices(s, sc, t, tc, ch);
}

StrictDiagram random_groupoid_diagram(Rng& rng, std::size_t max_index) {
  StrictDiagram d;
  const std::size_t n = uniform(rng, 1, max_index);
  if (coin(rng)) {
    FreeDag dag = random_free_dag(rng, n, n + 1);
    d.index = dag.category;
    std::vector<GroupoidSpec> specs;
    for (std::size_t i = 0; i < n; ++i) {
      specs.push_back(random_groupoid(rng, 4, "g"));
      d.vertex.push_back(specs.back().build());
    }
    std::vector<CatFunctor> on_edge;
    for (const auto& e : dag.edges)
      on_edge.push_back(random_groupoid_functor(rng, specs[e.source], d.vertex[e.source], specs[e.target], d.vertex[e.target]));
    for (MorId u = 0; u < d.index.num_morphisms(); ++u) {
      const auto& w = dag.words[u];
      CatFunctor f = CatFunctor::identity(d.vertex[d.index.source(u)]);
      for (std::size_t e : w) f = compose(on_edge[e], f);
      d.edge.push_back(std::move(f));
    }
  } else {
    d.index = random_poset(rng, n);
    // C(i) = T ⊔ R_i; F(u) = inclusion of T after a retraction onto T.
    const GroupoidSpec t = random_groupoid(rng, 2, "g");
    const FinCat tc = t.build();
    std::vector<GroupoidSpec> specs;
    std::vector<CatFunctor> retract, include;
    for (std::size_t i = 0; i < n; ++i) {
      GroupoidSpec s = t;
      if (coin(rng, 0.7)) {
        GroupoidSpec r = random_groupoid(rng, 2, "g");
        for (std::size_t c = 0; c < r.objects.size(); ++c) {
          s.objects.push_back(r.objects[c]);
          s.groups.push_back(r.groups[c]);
        }
      }
      const FinCat sc = s.build();
      std::vector<CompChoice> down, up;
      for (std::size_t c = 0; c < s.objects.size(); ++c)
        down.push_back(c < t.objects.size() ? identity_choice(s, c, c) : random_choice(rng, s, c, t));
      for (std::size_t c = 0; c < t.objects.size(); ++c) up.push_back(identity_choice(t, c, c));
      retract.push_back(functor_from_choices(s, sc, t, tc, down));
      include.push_back(functor_from_choices(t, tc, s, sc, up));
      specs.push_back(s);
      d.vertex.push_back(sc);
    }
    for (MorId u = 0; u < d.index.num_morphisms(); ++u) {
      const ObjId i = d.index.source(u), j = d.index.target(u);
      d.edge.push_back(d.index.is_identity(u) ? CatFunctor::identity(d.vertex[i]) : compose(include[j], retract[i]));
    }
  }
  d.validate();
  return d;
}

// ---------------------------------------------------------------- actions

ScwolAction development(const FinCat& base, const FinGroup& g, const std::vector<std::vector<Elem>>& stab,
                        const std::vector<Elem>& voltage) {
  const std::size_t n = base.num_objects();
  std::vector<std::vector<std::size_t>> coset_of(n, std::vector<std::size_t>(g.order()));
  std::vector<std::vector<Elem>> coset_rep(n);
  for (ObjId y = 0; y < n; ++y) {
    std::vector<char> seen(g.order(), 0);
    for (Elem k = 0; k < g.order(); ++k) {
      if (seen[k]) continue;
      for (Elem h : stab[y]) {
        coset_of[y][g.mul(k, h)] = coset_rep[y].size();
        seen[g.mul(k, h)] = 1;
      }
      coset_rep[y].push_back(k);
    }
  }
  FinCat::Builder b;
  std::vector<std::vector<ObjId>> obj(n);
  for (ObjId y = 0; y < n; ++y)
    for (std::size_t k = 0; k < coset_rep[y].size(); ++k)
      obj[y].push_back(b.add_object(base.object_name(y) + "/" + std::to_string(k)));
  std::vector<std::vector<MorId>> mor(base.num_morphisms());
  std::vector<std::pair<MorId, std::size_t>> info;
  for (MorId a = 0; a < base.num_morphisms(); ++a) {
    const ObjId s = base.source(a), t = base.target(a);
    for (std::size_t k = 0; k < coset_rep[s].size(); ++k) {
      const std::size_t tk = coset_of[t][g.mul(coset_rep[s][k], voltage[a])];
      for (Elem h : stab[s])
        if (coset_of[t][g.mul(g.mul(coset_rep[s][k], h), voltage[a])] != tk)
          throw Error(ErrorKind::InvalidComplex, "voltage of " + base.morphism_name(a) + " is incompatible");
      mor[a].push_back(b.add_morphism(base.morphism_name(a) + "/" + std::to_string(k), obj[s][k], obj[t][tk]));
      info.emplace_back(a, k);
    }
  }
  for (ObjId y = 0; y < n; ++y)
    for (std::size_t k = 0; k < coset_rep[y].size(); ++k) b.set_identity(obj[y][k], mor[base.identity(y)][k]);
  b.fill_composites([&](MorId gg, MorId f) {
    const auto [a, k] = info[f];
    return mor[base.compose(info[gg].first, a)][k];
  });
  FinCat x = b.build();
  ScwolAction act{g, x, {}, {}};
  for (Elem e = 0; e < g.order(); ++e) {
    std::vector<ObjId> o(x.num_objects());
    std::vector<MorId> m(x.num_morphisms());
    for (ObjId y = 0; y < n; ++y)
      for (std::size_t k = 0; k < coset_rep[y].size(); ++k)
        o[obj[y][k]] = obj[y][coset_of[y][g.mul(e, coset_rep[y][k])]];
    for (MorId a = 0; a < base.num_morphisms(); ++a) {
      const ObjId s = base.source(a);
      for (std::size_t k = 0; k < coset_rep[s].size(); ++k)
        m[mor[a][k]] = mor[a][coset_of[s][g.mul(e, coset_rep[s][k])]];
    }
    act.on_objects.push_back(std::move(o));
    act.on_morphisms.push_back(std::move(m));
  }
  validate_action(act);
  return act;
}

ScwolAction random_action(Rng& rng, bool free, std::size_t max_objects, std::size_t max_order) {
  for (;;) {
    const FinGroup g = random_group(rng, std::min(max_order, max_objects));
    const std::size_t cap = free ? max_objects / g.order() : std::min<std::size_t>(5, max_objects);
    if (cap == 0) continue;
    const std::size_t n = uniform(rng, 1, std::min<std::size_t>(cap, 5));
    std::vector<std::vector<Elem>> stab(n);
    std::vector<Elem> voltage;
    FinCat base;
    auto extra = [&](std::vector<Elem> gens) {
      if (!free)
        for (Elem h : random_subgroup(rng, g)) gens.push_back(h);
      return g.generated(gens);
    };
    if (coin(rng)) {
      FreeDag dag = random_free_dag(rng, n, n + 1);
      base = dag.category;
      std::vector<Elem> edge_v;
      for (std::size_t e = 0; e < dag.edges.size(); ++e) edge_v.push_back(static_cast<Elem>(uniform(rng, 0, g.order() - 1)));
      for (ObjId y = 0; y < n; ++y) {
        std::vector<Elem> gens;
        for (std::size_t e = 0; e < dag.edges.size(); ++e)
          if (dag.edges[e].target == y)
            for (Elem h : stab[dag.edges[e].source]) gens.push_back(g.mul(g.mul(g.inv(edge_v[e]), h), edge_v[e]));
        stab[y] = extra(gens);
      }
      for (MorId u = 0; u < base.num_morphisms(); ++u) {
        Elem c = g.identity();
        for (std::size_t e : dag.words[u]) c = g.mul(c, edge_v[e]);
        voltage.push_back(c);
      }
    } else {
      base = random_poset(rng, n);
      for (ObjId y = 0; y < n; ++y) {
        std::vector<Elem> gens;
        for (MorId u : base.in(y))
          if (base.source(u) != y)
            for (Elem h : stab[base.source(u)]) gens.push_back(h);
        stab[y] = extra(gens);
      }
      voltage.assign(base.num_morphisms(), g.identity());
    }
    std::size_t total = 0;
    for (const auto& h : stab) total += g.order() / h.size();
    if (total > max_objects) continue;
    return development(base, g, stab, voltage);
  }
}

ScwolAction random_gset(Rng& rng, std::size_t max_order) {
  const FinGroup g = random_group(rng, max_order);
  const std::size_t orbits = uniform(rng, 1, 3);
  std::vector<std::string> names;
  for (std::size_t k = 0; k < orbits; ++k) names.push_back("s" + std::to_string(k));
  const FinCat base = discrete(names);
  std::vector<std::vector<Elem>> stab;
  for (std::size_t k = 0; k < orbits; ++k) stab.push_back(random_subgroup(rng, g));
  return development(base, g, stab, std::vector<Elem>(base.num_morphisms(), g.identity()));
}

std::vector<std::set<std::size_t>> random_set_system(Rng& rng, std::size_t count, std::size_t universe) {
  std::vector<std::set<std::size_t>> out(count);
  for (auto& s : out)
    for (std::size_t e = 0; e < universe; ++e)
      if (coin(rng)) s.insert(e);
  return out;
}

}  // namespace eulcat::testing
