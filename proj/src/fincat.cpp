#include "eulcat/fincat.hpp"

#include <algorithm>
#include <numeric>
#include <set>

#include "eulcat/error.hpp"

namespace eulcat {

namespace {
constexpr MorId kNone = static_cast<MorId>(-1);
}

FinCat::FinCat() : d_(std::make_shared<Data>()) {}

std::optional<ObjId> FinCat::find_object(std::string_view name) const {
  auto it = d_->obj_index.find(name);
  if (it == d_->obj_index.end()) return std::nullopt;
  return it->second;
}

std::optional<MorId> FinCat::find_morphism(std::string_view name) const {
  auto it = d_->mor_index.find(name);
  if (it == d_->mor_index.end()) return std::nullopt;
  return it->second;
}

ObjId FinCat::object(std::string_view name) const {
  if (auto x = find_object(name)) return *x;
  throw Error(ErrorKind::UnknownObject, "unknown object " + std::string(name));
}

MorId FinCat::morphism(std::string_view name) const {
  if (auto f = find_morphism(name)) return *f;
  throw Error(ErrorKind::UnknownObject, "unknown morphism " + std::string(name));
}

MorId FinCat::compose_checked(MorId g, MorId f) const {
  if (!composable(g, f))
    throw Error(ErrorKind::DanglingReference,
                "(" + morphism_name(g) + ", " + morphism_name(f) + ") is not a composable pair");
  return compose(g, f);
}

std::optional<MorId> FinCat::inverse(MorId f) const {
  const ObjId x = source(f), y = target(f);
  for (MorId g : hom(y, x))
    if (compose(g, f) == identity(x) && compose(f, g) == identity(y)) return g;
  return std::nullopt;
}

CategoryDescription FinCat::describe() const {
  CategoryDescription d;
  d.objects = d_->obj_names;
  for (MorId f = 0; f < num_morphisms(); ++f)
    d.morphisms.push_back({morphism_name(f), object_name(source(f)), object_name(target(f))});
  for (ObjId x = 0; x < num_objects(); ++x) d.identity[object_name(x)] = morphism_name(identity(x));
  for (MorId f = 0; f < num_morphisms(); ++f) {
    if (is_identity(f)) continue;
    for (MorId g : out(target(f))) {
      if (is_identity(g)) continue;
      d.compose.push_back({morphism_name(g), morphism_name(f), morphism_name(compose(g, f))});
    }
  }
  return d;
}

bool operator==(const FinCat& a, const FinCat& b) {
  if (a.d_ == b.d_) return true;
  const auto& x = *a.d_;
  const auto& y = *b.d_;
  return x.obj_names == y.obj_names && x.mor_names == y.mor_names && x.src == y.src && x.tgt == y.tgt &&
         x.ident == y.ident && x.table == y.table;
}

// ---------------------------------------------------------------- Builder

ObjId FinCat::Builder::add_object(std::string name) {
  objects_.push_back(std::move(name));
  identity_.emplace_back();
  return static_cast<ObjId>(objects_.size() - 1);
}

MorId FinCat::Builder::add_morphism(std::string name, ObjId source, ObjId target) {
  if (source >= objects_.size() || target >= objects_.size())
    throw Error(ErrorKind::DanglingReference, "morphism " + name + " has an endpoint out of range");
  morphisms_.push_back({std::move(name), source, target});
  return static_cast<MorId>(morphisms_.size() - 1);
}

MorId FinCat::Builder::add_identity(ObjId x, std::string name) {
  if (name.empty()) name = "id_" + objects_.at(x);
  MorId f = add_morphism(std::move(name), x, x);
  set_identity(x, f);
  return f;
}

void FinCat::Builder::set_identity(ObjId x, MorId f) { identity_.at(x) = f; }

void FinCat::Builder::set_composite(MorId g, MorId f, MorId gf) {
  auto [it, fresh] = composites_.emplace(std::make_pair(g, f), gf);
  if (!fresh && it->second != gf)
    throw Error(ErrorKind::DuplicateId, "composite " + morphisms_[g].name + "∘" + morphisms_[f].name +
                                            " given twice with different values");
}

void FinCat::Builder::fill_composites(const std::function<MorId(MorId, MorId)>& fn) {
  std::vector<char> ident(morphisms_.size(), 0);
  for (auto& id : identity_)
    if (id) ident[*id] = 1;
  std::vector<std::vector<MorId>> outs(objects_.size());
  for (MorId g = 0; g < morphisms_.size(); ++g) outs[morphisms_[g].s].push_back(g);
  for (MorId f = 0; f < morphisms_.size(); ++f) {
    if (ident[f]) continue;
    for (MorId g : outs[morphisms_[f].t])
      if (!ident[g]) set_composite(g, f, fn(g, f));
  }
}

FinCat FinCat::Builder::build() const {
  auto d = std::make_shared<Data>();
  const std::size_t n = objects_.size(), m = morphisms_.size();
  d->obj_names = objects_;
  for (ObjId x = 0; x < n; ++x)
    if (!d->obj_index.emplace(objects_[x], x).second)
      throw Error(ErrorKind::DuplicateId, "duplicate object id " + objects_[x]);
  for (MorId f = 0; f < m; ++f) {
    d->mor_names.push_back(morphisms_[f].name);
    d->src.push_back(morphisms_[f].s);
    d->tgt.push_back(morphisms_[f].t);
    if (!d->mor_index.emplace(morphisms_[f].name, f).second)
      throw Error(ErrorKind::DuplicateId, "duplicate morphism id " + morphisms_[f].name);
  }
  auto mname = [&](MorId f) { return morphisms_[f].name; };

  d->is_ident.assign(m, 0);
  d->ident.resize(n);
  for (ObjId x = 0; x < n; ++x) {
    if (!identity_[x]) throw Error(ErrorKind::BrokenIdentity, "object " + objects_[x] + " has no identity");
    MorId f = *identity_[x];
    if (f >= m) throw Error(ErrorKind::DanglingReference, "identity of " + objects_[x] + " out of range");
    if (morphisms_[f].s != x || morphisms_[f].t != x)
      throw Error(ErrorKind::BrokenIdentity, "identity " + mname(f) + " of " + objects_[x] + " is not an endomorphism of it");
    if (d->is_ident[f]) throw Error(ErrorKind::BrokenIdentity, mname(f) + " is the identity of two objects");
    d->is_ident[f] = 1;
    d->ident[x] = f;
  }

  d->homs.assign(n * n, {});
  d->outs.assign(n, {});
  d->ins.assign(n, {});
  d->out_pos.resize(m);
  for (MorId f = 0; f < m; ++f) {
    d->homs[d->src[f] * n + d->tgt[f]].push_back(f);
    d->out_pos[f] = static_cast<std::uint32_t>(d->outs[d->src[f]].size());
    d->outs[d->src[f]].push_back(f);
    d->ins[d->tgt[f]].push_back(f);
  }
  d->base.resize(m);
  std::size_t total = 0;
  for (MorId f = 0; f < m; ++f) {
    d->base[f] = total;
    total += d->outs[d->tgt[f]].size();
  }
  d->table.assign(total, kNone);
  auto slot = [&](MorId g, MorId f) -> MorId& { return d->table[d->base[f] + d->out_pos[g]]; };

  for (MorId f = 0; f < m; ++f) {
    slot(d->ident[d->tgt[f]], f) = f;
    slot(f, d->ident[d->src[f]]) = f;
  }
  for (const auto& [key, gf] : composites_) {
    auto [g, f] = key;
    if (g >= m || f >= m || gf >= m) throw Error(ErrorKind::DanglingReference, "composite index out of range");
    if (d->tgt[f] != d->src[g])
      throw Error(ErrorKind::DanglingReference,
                  "composite " + mname(g) + "∘" + mname(f) + " given for a pair that is not composable");
    if (d->src[gf] != d->src[f] || d->tgt[gf] != d->tgt[g])
      throw Error(ErrorKind::DanglingReference,
                  "composite " + mname(g) + "∘" + mname(f) + " = " + mname(gf) + " has the wrong source or target");
    MorId& s = slot(g, f);
    if (d->is_ident[g] || d->is_ident[f]) {
      if (s != gf)
        throw Error(ErrorKind::BrokenIdentity, "composite " + mname(g) + "∘" + mname(f) + " = " + mname(gf) +
                                                   " contradicts the identity law");
      continue;
    }
    s = gf;
  }
  for (MorId f = 0; f < m; ++f)
    for (MorId g : d->outs[d->tgt[f]])
      if (slot(g, f) == kNone)
        throw Error(ErrorKind::IncompleteCompositionTable, "missing composite " + mname(g) + "∘" + mname(f));
  for (MorId f = 0; f < m; ++f) {
    for (MorId g : d->outs[d->tgt[f]]) {
      const MorId gf = slot(g, f);
      for (MorId h : d->outs[d->tgt[g]]) {
        if (slot(h, gf) != slot(slot(h, g), f))
          throw Error(ErrorKind::NonAssociative,
                      "(" + mname(h) + "∘" + mname(g) + ")∘" + mname(f) + " differs from " + mname(h) + "∘(" +
                          mname(g) + "∘" + mname(f) + ")");
      }
    }
  }
  return FinCat(std::move(d));
}

FinCat validate(const CategoryDescription& desc) {
  FinCat::Builder b;
  std::map<std::string, ObjId> objs;
  for (const auto& o : desc.objects) {
    if (objs.count(o)) throw Error(ErrorKind::DuplicateId, "duplicate object id " + o);
    objs[o] = b.add_object(o);
  }
  auto obj = [&](const std::string& name, const std::string& where) {
    auto it = objs.find(name);
    if (it == objs.end()) throw Error(ErrorKind::DanglingReference, where + " refers to unknown object " + name);
    return it->second;
  };
  std::map<std::string, MorId> mors;
  for (const auto& r : desc.morphisms) {
    if (mors.count(r.id)) throw Error(ErrorKind::DuplicateId, "duplicate morphism id " + r.id);
    mors[r.id] = b.add_morphism(r.id, obj(r.source, "morphism " + r.id), obj(r.target, "morphism " + r.id));
  }
  auto mor = [&](const std::string& name, const std::string& where) {
    auto it = mors.find(name);
    if (it == mors.end()) throw Error(ErrorKind::DanglingReference, where + " refers to unknown morphism " + name);
    return it->second;
  };
  for (const auto& [o, f] : desc.identity) b.set_identity(obj(o, "identity map"), mor(f, "identity of " + o));
  for (const auto& o : desc.objects) {
    if (desc.identity.count(o)) continue;
    const std::string name = "id_" + o;
    auto it = mors.find(name);
    if (it != mors.end()) {
      b.set_identity(objs[o], it->second);
    } else {
      mors[name] = b.add_identity(objs[o], name);
    }
  }
  for (const auto& [g, f, gf] : desc.compose) {
    const std::string where = "composite " + g + "∘" + f;
    b.set_composite(mor(g, where), mor(f, where), mor(gf, where));
  }
  return b.build();
}

// ---------------------------------------------------------------- predicates

bool is_scwol(const FinCat& c) {
  for (ObjId x = 0; x < c.num_objects(); ++x)
    if (c.hom(x, x).size() != 1) return false;
  return true;
}

bool is_EI(const FinCat& c) {
  for (ObjId x = 0; x < c.num_objects(); ++x)
    for (MorId e : c.hom(x, x))
      if (!c.is_iso(e)) return false;
  return true;
}

bool is_directly_finite(const FinCat& c) {
  for (MorId u = 0; u < c.num_morphisms(); ++u) {
    const ObjId x = c.source(u), y = c.target(u);
    for (MorId v : c.hom(y, x))
      if (c.compose(v, u) == c.identity(x) && c.compose(u, v) != c.identity(y)) return false;
  }
  return true;
}

bool is_groupoid(const FinCat& c) {
  for (MorId f = 0; f < c.num_morphisms(); ++f)
    if (!c.is_iso(f)) return false;
  return true;
}

bool is_skeletal(const FinCat& c) {
  for (MorId f = 0; f < c.num_morphisms(); ++f)
    if (c.source(f) != c.target(f) && c.is_iso(f)) return false;
  return true;
}

bool is_connected(const FinCat& c) {
  const std::size_t n = c.num_objects();
  if (n == 0) return false;
  std::vector<std::size_t> parent(n);
  std::iota(parent.begin(), parent.end(), 0);
  auto root = [&](std::size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  std::size_t comps = n;
  for (MorId f = 0; f < c.num_morphisms(); ++f) {
    auto a = root(c.source(f)), b = root(c.target(f));
    if (a != b) {
      parent[a] = b;
      --comps;
    }
  }
  return comps == 1;
}

PredicateReport classify(const FinCat& c) {
  PredicateReport r;
  r.is_scwol = is_scwol(c);
  r.is_EI = is_EI(c);
  r.is_directly_finite = is_directly_finite(c);
  r.is_groupoid = is_groupoid(c);
  r.is_skeletal = is_skeletal(c);
  r.is_connected = is_connected(c);
  return r;
}

// ---------------------------------------------------------------- functors

void CatFunctor::verify() const {
  auto fail = [](const std::string& msg) { throw Error(ErrorKind::NotAFunctor, msg); };
  if (on_objects.size() != source.num_objects() || on_morphisms.size() != source.num_morphisms())
    fail("object or morphism map has the wrong size");
  for (ObjId x : on_objects)
    if (x >= target.num_objects()) fail("object image out of range");
  for (MorId f : on_morphisms)
    if (f >= target.num_morphisms()) fail("morphism image out of range");
  for (MorId f = 0; f < source.num_morphisms(); ++f) {
    const MorId Ff = on_morphisms[f];
    if (target.source(Ff) != on_objects[source.source(f)] || target.target(Ff) != on_objects[source.target(f)])
      fail("image of " + source.morphism_name(f) + " has the wrong endpoints");
  }
  for (ObjId x = 0; x < source.num_objects(); ++x)
    if (on_morphisms[source.identity(x)] != target.identity(on_objects[x]))
      fail("identity of " + source.object_name(x) + " not preserved");
  for (MorId f = 0; f < source.num_morphisms(); ++f)
    for (MorId g : source.out(source.target(f)))
      if (on_morphisms[source.compose(g, f)] != target.compose(on_morphisms[g], on_morphisms[f]))
        fail("composite " + source.morphism_name(g) + "∘" + source.morphism_name(f) + " not preserved");
}

CatFunctor CatFunctor::identity(const FinCat& c) {
  CatFunctor f{c, c, std::vector<ObjId>(c.num_objects()), std::vector<MorId>(c.num_morphisms())};
  std::iota(f.on_objects.begin(), f.on_objects.end(), 0);
  std::iota(f.on_morphisms.begin(), f.on_morphisms.end(), 0);
  return f;
}

CatFunctor compose(const CatFunctor& g, const CatFunctor& f) {
  CatFunctor h{f.source, g.target, {}, {}};
  h.on_objects.reserve(f.on_objects.size());
  for (ObjId x : f.on_objects) h.on_objects.push_back(g.on_objects[x]);
  for (MorId m : f.on_morphisms) h.on_morphisms.push_back(g.on_morphisms[m]);
  return h;
}

bool is_equivalence(const CatFunctor& f) {
  const FinCat& c = f.source;
  const FinCat& d = f.target;
  for (ObjId x = 0; x < c.num_objects(); ++x) {
    for (ObjId y = 0; y < c.num_objects(); ++y) {
      const auto& src = c.hom(x, y);
      const auto& tgt = d.hom(f(x), f(y));
      if (src.size() != tgt.size()) return false;
      std::set<MorId> image;
      for (MorId m : src) image.insert(f.map(m));
      if (image.size() != tgt.size()) return false;
    }
  }
  const auto classes = iso_classes(d);
  const auto cls = iso_class_index(d, classes);
  std::vector<char> hit(classes.size(), 0);
  for (ObjId x = 0; x < c.num_objects(); ++x) hit[cls[f(x)]] = 1;
  return std::all_of(hit.begin(), hit.end(), [](char h) { return h != 0; });
}

void NatIso::verify() const {
  auto fail = [](const std::string& msg) { throw Error(ErrorKind::NotANaturalIso, msg); };
  const FinCat& c = from.source;
  const FinCat& d = from.target;
  if (components.size() != c.num_objects()) fail("wrong number of components");
  for (ObjId x = 0; x < c.num_objects(); ++x) {
    const MorId e = components[x];
    if (e >= d.num_morphisms() || d.source(e) != from(x) || d.target(e) != to(x))
      fail("component at " + c.object_name(x) + " has the wrong endpoints");
    if (!d.is_iso(e)) fail("component at " + c.object_name(x) + " is not invertible");
  }
  for (MorId f = 0; f < c.num_morphisms(); ++f) {
    const ObjId x = c.source(f), y = c.target(f);
    if (d.compose(to.map(f), components[x]) != d.compose(components[y], from.map(f)))
      fail("naturality square fails at " + c.morphism_name(f));
  }
}

// ---------------------------------------------------------------- iso classes

std::vector<IsoClass> iso_classes(const FinCat& c) {
  const std::size_t n = c.num_objects();
  std::vector<std::size_t> parent(n);
  std::iota(parent.begin(), parent.end(), 0);
  auto root = [&](std::size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (MorId f = 0; f < c.num_morphisms(); ++f) {
    if (c.source(f) == c.target(f)) continue;
    auto a = root(c.source(f)), b = root(c.target(f));
    if (a != b && c.is_iso(f)) parent[a] = b;
  }
  std::map<std::size_t, std::vector<ObjId>> groups;
  for (ObjId x = 0; x < n; ++x) groups[root(x)].push_back(x);
  std::vector<IsoClass> out;
  for (auto& [r, members] : groups) {
    IsoClass cls;
    cls.members = members;
    cls.representative = *std::min_element(members.begin(), members.end(), [&](ObjId a, ObjId b) {
      return c.object_name(a) < c.object_name(b);
    });
    const ObjId rep = cls.representative;
    for (MorId e : c.hom(rep, rep)) {
      if (c.is_iso(e))
        cls.aut_morphisms.push_back(e);
      else
        cls.all_endomorphisms_invertible = false;
    }
    const auto& am = cls.aut_morphisms;
    std::map<MorId, Elem> pos;
    for (Elem i = 0; i < am.size(); ++i) pos[am[i]] = i;
    std::vector<std::string> labels;
    std::vector<std::vector<Elem>> table(am.size(), std::vector<Elem>(am.size()));
    for (Elem i = 0; i < am.size(); ++i) {
      labels.push_back(c.morphism_name(am[i]));
      for (Elem j = 0; j < am.size(); ++j) table[i][j] = pos.at(c.compose(am[i], am[j]));
    }
    cls.aut = FinGroup(std::move(labels), std::move(table), pos.at(c.identity(rep)));
    out.push_back(std::move(cls));
  }
  std::sort(out.begin(), out.end(), [&](const IsoClass& a, const IsoClass& b) {
    return c.object_name(a.representative) < c.object_name(b.representative);
  });
  return out;
}

std::vector<std::size_t> iso_class_index(const FinCat& c, const std::vector<IsoClass>& classes) {
  std::vector<std::size_t> idx(c.num_objects());
  for (std::size_t k = 0; k < classes.size(); ++k)
    for (ObjId x : classes[k].members) idx[x] = k;
  return idx;
}

FinCat full_subcategory(const FinCat& c, const std::vector<ObjId>& objects, CatFunctor* inclusion) {
  FinCat::Builder b;
  std::vector<ObjId> pos(c.num_objects(), static_cast<ObjId>(-1));
  for (ObjId x : objects) {
    if (pos[x] != static_cast<ObjId>(-1)) throw Error(ErrorKind::DuplicateId, "object listed twice");
    pos[x] = b.add_object(c.object_name(x));
  }
  std::vector<MorId> mpos(c.num_morphisms(), kNone);
  std::vector<MorId> back;
  for (MorId f = 0; f < c.num_morphisms(); ++f) {
    if (pos[c.source(f)] == static_cast<ObjId>(-1) || pos[c.target(f)] == static_cast<ObjId>(-1)) continue;
    mpos[f] = b.add_morphism(c.morphism_name(f), pos[c.source(f)], pos[c.target(f)]);
    back.push_back(f);
  }
  for (ObjId x : objects) b.set_identity(pos[x], mpos[c.identity(x)]);
  b.fill_composites([&](MorId g, MorId f) { return mpos[c.compose(back[g], back[f])]; });
  FinCat sub = b.build();
  if (inclusion) *inclusion = CatFunctor{sub, c, objects, back};
  return sub;
}

Skeleton skeleton(const FinCat& c) {
  const auto classes = iso_classes(c);
  std::vector<ObjId> reps;
  for (const auto& cls : classes) reps.push_back(cls.representative);
  std::sort(reps.begin(), reps.end());
  CatFunctor inc;
  FinCat gamma = full_subcategory(c, reps, &inc);
  std::vector<ObjId> rep_pos(c.num_objects());
  for (ObjId i = 0; i < reps.size(); ++i) rep_pos[reps[i]] = i;

  const auto cls_of = iso_class_index(c, classes);
  std::vector<MorId> eta(c.num_objects()), eta_inv(c.num_objects());
  std::vector<ObjId> r_obj(c.num_objects());
  for (ObjId x = 0; x < c.num_objects(); ++x) {
    const ObjId rep = classes[cls_of[x]].representative;
    r_obj[x] = rep_pos[rep];
    if (x == rep) {
      eta[x] = eta_inv[x] = c.identity(x);
      continue;
    }
    bool found = false;
    for (MorId e : c.hom(rep, x)) {
      if (auto inv = c.inverse(e)) {
        eta[x] = e;
        eta_inv[x] = *inv;
        found = true;
        break;
      }
    }
    if (!found) throw Error(ErrorKind::InternalError, "no isomorphism to representative of " + c.object_name(x));
  }
  std::map<MorId, MorId> in_gamma;
  for (MorId g = 0; g < gamma.num_morphisms(); ++g) in_gamma[inc.map(g)] = g;
  std::vector<MorId> r_mor(c.num_morphisms());
  for (MorId f = 0; f < c.num_morphisms(); ++f) {
    const ObjId x = c.source(f), y = c.target(f);
    r_mor[f] = in_gamma.at(c.compose(eta_inv[y], c.compose(f, eta[x])));
  }
  CatFunctor r{c, gamma, r_obj, r_mor};
  NatIso n{compose(inc, r), CatFunctor::identity(c), eta};
  return Skeleton{gamma, inc, r, n};
}

// ---------------------------------------------------------------- paths

BigInt PathCounts::alternating_sum() const {
  BigInt s = 0;
  for (std::size_t n = 0; n < c.size(); ++n) {
    if (n % 2 == 0)
      s += c[n];
    else
      s -= c[n];
  }
  return s;
}

PathCounts path_counts(const FinCat& x, std::optional<std::size_t> n_max) {
  if (!is_scwol(x)) throw Error(ErrorKind::NotScwol, "path counts need a category without loops");
  PathCounts pc;
  pc.skeleton = skeleton(x).gamma;
  const FinCat& g = pc.skeleton;
  const std::size_t n = g.num_objects();
  std::vector<std::vector<std::size_t>> nonid(n, std::vector<std::size_t>(n, 0));
  for (MorId f = 0; f < g.num_morphisms(); ++f)
    if (!g.is_identity(f)) ++nonid[g.source(f)][g.target(f)];

  std::vector<BigInt> v(n, 1);
  pc.starts.assign(n, {});
  for (ObjId a = 0; a < n; ++a) pc.starts[a].push_back(1);
  pc.c.push_back(static_cast<unsigned long>(n));
  for (std::size_t len = 1;; ++len) {
    std::vector<BigInt> next(n, 0);
    bool any = false;
    for (ObjId a = 0; a < n; ++a) {
      for (ObjId b = 0; b < n; ++b)
        if (nonid[a][b]) next[a] += BigInt(static_cast<unsigned long>(nonid[a][b])) * v[b];
      if (next[a] != 0) any = true;
    }
    if (!any) break;
    if (n_max && len > *n_max) {
      pc.truncated = true;
      break;
    }
    if (len > n) throw Error(ErrorKind::InternalError, "non-identity count matrix is not nilpotent");
    BigInt total = 0;
    for (ObjId a = 0; a < n; ++a) {
      pc.starts[a].push_back(next[a]);
      total += next[a];
    }
    pc.c.push_back(total);
    v = std::move(next);
  }
  return pc;
}

std::vector<std::vector<MorId>> enumerate_paths(const FinCat& x, std::size_t n, std::vector<ObjId>* start) {
  std::vector<std::vector<MorId>> out;
  if (start) start->clear();
  std::vector<MorId> path;
  std::function<void(ObjId, ObjId)> rec = [&](ObjId origin, ObjId at) {
    if (path.size() == n) {
      out.push_back(path);
      if (start) start->push_back(origin);
      return;
    }
    for (MorId f : x.out(at)) {
      if (x.is_identity(f)) continue;
      path.push_back(f);
      rec(origin, x.target(f));
      path.pop_back();
    }
  };
  for (ObjId o = 0; o < x.num_objects(); ++o) rec(o, o);
  return out;
}

FinCat lower_link(const FinCat& x, ObjId i) {
  if (i >= x.num_objects()) throw Error(ErrorKind::UnknownObject, "object index out of range");
  if (!is_scwol(x)) throw Error(ErrorKind::NotScwol, "lower links need a category without loops");
  FinCat::Builder b;
  std::map<MorId, ObjId> obj;
  for (MorId a : x.out(i))
    if (!x.is_identity(a)) obj[a] = b.add_object(x.morphism_name(a));
  // (a, u) with u∘a = b, keyed by (a, u)
  std::map<std::pair<MorId, MorId>, MorId> mor;
  for (const auto& [a, oa] : obj) {
    for (MorId u : x.out(x.target(a))) {
      auto it = obj.find(x.compose(u, a));
      if (it == obj.end()) continue;
      MorId m = b.add_morphism("(" + x.morphism_name(a) + "," + x.morphism_name(u) + ")", oa, it->second);
      mor[{a, u}] = m;
      if (x.is_identity(u)) b.set_identity(oa, m);
    }
  }
  std::vector<std::pair<MorId, MorId>> back(mor.size());
  for (const auto& [k, m] : mor) back[m] = k;
  b.fill_composites([&](MorId g, MorId f) {
    // g = (b, v), f = (a, u) with u∘a = b
    return mor.at({back[f].first, x.compose(back[g].second, back[f].second)});
  });
  return b.build();
}

}  // namespace eulcat
