#include <gtest/gtest.h>

#include <algorithm>
#include <functional>

#include "random_instances.hpp"

#include "eulcat/constructions.hpp"
#include "eulcat/error.hpp"
#include "eulcat/eulerchar.hpp"
#include "eulcat/hocolim.hpp"
#include "eulcat/ratlin.hpp"

using namespace eulcat;
namespace rt = eulcat::testing;

namespace {

ErrorKind kind_of(const std::function<void()>& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.kind();
  }
  ADD_FAILURE() << "no error thrown";
  return ErrorKind::InternalError;
}

Rational q(long p, long d) { return make_rational(BigInt(p), BigInt(d)); }

std::vector<BigInt> trimmed(std::vector<BigInt> v) {
  while (!v.empty() && v.back() == 0) v.pop_back();
  return v;
}

std::vector<BigInt> cells_at(const CellSpectrum& s, const std::string& obj) {
  return trimmed(s.cells[s.index.object(obj)]);
}

// Group-valued diagram over an index: one-object vertices and functors from homs.
StrictDiagram group_diagram(const FinCat& index, const std::vector<FinGroup>& groups,
                            const std::function<GroupHom(MorId)>& hom) {
  StrictDiagram d{index, {}, {}};
  for (const auto& g : groups) d.vertex.push_back(one_object(g));
  for (MorId u = 0; u < index.num_morphisms(); ++u)
    d.edge.push_back(one_object_functor(d.vertex[index.source(u)], d.vertex[index.target(u)], hom(u)));
  d.validate();
  return d;
}

// 0 -a-> 1 -b-> 2 with the group g at every vertex, identity homs and the
// twist t on (b, a).
PseudoDiagram twisted_chain(const FinGroup& g, Elem t) {
  const FinCat index = free_category({"0", "1", "2"}, {{"a", 0, 1}, {"b", 1, 2}});
  const StrictDiagram s = group_diagram(index, {g, g, g}, [&](MorId) { return GroupHom::identity(g); });
  PseudoDiagram p = PseudoDiagram::from_strict(s);
  p.comp[{index.morphism("b"), index.morphism("a")}] = {static_cast<MorId>(t)};
  return p;
}

}  // namespace

TEST(Grothendieck, ConstantDiagramIsTheProduct) {
  const FinCat i = pushout_scwol(), c = one_object(FinGroup::cyclic(3));
  const FinCat h = grothendieck(constant_diagram(i, c)).category;
  EXPECT_TRUE(find_isomorphism(h, product(i, c)).has_value());
  rt::Rng rng(41);
  for (int k = 0; k < 10; ++k) {
    const FinCat a = rt::random_scwol(rng, 4), b = rt::random_groupoid(rng, 3, "g").build();
    const FinCat hk = grothendieck(constant_diagram(a, b)).category;
    EXPECT_EQ(hk.num_morphisms(), a.num_morphisms() * b.num_morphisms());
    EXPECT_EQ(chi_L(hk), chi_L(a) * chi_L(b));
  }
}

TEST(Grothendieck, IntroPushout) {
  const GrothendieckResult g = grothendieck(intro_pushout_diagram());
  EXPECT_EQ(g.category.num_objects(), 4u);
  EXPECT_EQ(g.category.num_morphisms(), 8u);
  EXPECT_TRUE(is_scwol(g.category));
  EXPECT_EQ(chi_scwol(g.category), 0);
  EXPECT_TRUE(find_isomorphism(g.category, circle_scwol()).has_value());
  for (const auto& a : g.alphas) EXPECT_NO_THROW(a.verify());
}

TEST(Grothendieck, TrivialDiagramRecoversTheIndex) {
  rt::Rng rng(42);
  for (int k = 0; k < 20; ++k) {
    const FinCat i = rt::random_scwol(rng, 6);
    EXPECT_TRUE(find_isomorphism(grothendieck(trivial_diagram(i)).category, i).has_value());
  }
}

TEST(Grothendieck, NamesArePairs) {
  const FinCat h = grothendieck(intro_pushout_diagram()).category;
  for (const auto& n : h.object_names()) EXPECT_EQ(n.front(), '(');
  for (const auto& n : h.morphism_names()) EXPECT_EQ(n.front(), '(');
}

TEST(GrothendieckPseudo, StrictInputGivesTheSameCategory) {
  rt::Rng rng(43);
  for (int k = 0; k < 30; ++k) {
    const StrictDiagram d = rt::random_groupoid_diagram(rng, 4);
    EXPECT_EQ(grothendieck_pseudo(PseudoDiagram::from_strict(d)), grothendieck(d).category);
  }
}

TEST(GrothendieckPseudo, GroupComplexOverThePushout) {
  const FinGroup c2 = FinGroup::cyclic(2), one = FinGroup::trivial();
  const FinCat p = pushout_scwol();
  std::vector<FinGroup> groups(3);
  groups[p.object("j")] = one;
  groups[p.object("k")] = c2;
  groups[p.object("l")] = c2;
  const StrictDiagram d = group_diagram(p, groups, [&](MorId u) {
    return p.is_identity(u) ? GroupHom::identity(groups[p.source(u)]) : GroupHom::trivial(one, c2);
  });
  const FinCat h = grothendieck_pseudo(PseudoDiagram::from_strict(d));
  EXPECT_EQ(h.num_objects(), 3u);
  EXPECT_TRUE(is_EI(h));
  const auto cls = iso_classes(h);
  std::vector<std::size_t> orders;
  for (const auto& c : cls) orders.push_back(c.aut.order());
  std::sort(orders.begin(), orders.end());
  EXPECT_EQ(orders, (std::vector<std::size_t>{1, 2, 2}));
  const ObjId j = h.object("(j,*)"), k = h.object("(k,*)"), l = h.object("(l,*)");
  EXPECT_EQ(h.hom(j, k).size(), 2u);
  EXPECT_EQ(h.hom(j, l).size(), 2u);
  EXPECT_EQ(chi_L(h), 0);
}

TEST(GrothendieckPseudo, TwistsAndCoherence) {
  // abelian twist: valid; the hocolim has χ_L = 1/|G| (terminal object 2)
  const PseudoDiagram good = twisted_chain(FinGroup::cyclic(2), 1);
  EXPECT_NO_THROW(good.validate());
  const FinCat h = grothendieck_pseudo(good);
  EXPECT_EQ(chi_L(h), q(1, 2));
  EXPECT_EQ(chi_L(h), chi_L(grothendieck_pseudo(twisted_chain(FinGroup::cyclic(2), 0))));
  // a transposition in S3 does not commute with everything: not natural
  const FinGroup s3 = FinGroup::symmetric(3);
  Elem t = 0;
  while (s3.element_order(t) != 2) ++t;
  EXPECT_EQ(kind_of([&] { grothendieck_pseudo(twisted_chain(s3, t)); }), ErrorKind::CoherenceFailure);
  // a central twist in a non-abelian group is fine
  const FinGroup d4 = FinGroup::dihedral(4);
  Elem z = 0;
  for (Elem c = 1; c < d4.order(); ++c) {
    bool central = true;
    for (Elem x = 0; x < d4.order(); ++x) central = central && d4.mul(c, x) == d4.mul(x, c);
    if (central) z = c;
  }
  ASSERT_NE(z, 0u);
  EXPECT_EQ(chi_L(grothendieck_pseudo(twisted_chain(d4, z))), q(1, 8));
}

TEST(BarSpectrum, Examples) {
  const CellSpectrum p = bar_spectrum(pushout_scwol());
  EXPECT_EQ(cells_at(p, "j"), (std::vector<BigInt>{1, 2}));
  EXPECT_EQ(cells_at(p, "k"), (std::vector<BigInt>{1}));
  EXPECT_EQ(cells_at(p, "l"), (std::vector<BigInt>{1}));
  EXPECT_EQ(p.derived_weighting(), (std::vector<Rational>{-1, 1, 1}));
  const FinCat t = terminal_object_poset();
  const std::vector<Rational> wt = bar_spectrum(t).derived_weighting();
  EXPECT_EQ(wt[t.object("a")], 0);
  EXPECT_EQ(wt[t.object("t")], 1);
  EXPECT_EQ(cells_at(bar_spectrum(terminal_category()), "*"), (std::vector<BigInt>{1}));
  EXPECT_EQ(kind_of([] { bar_spectrum(one_object(FinGroup::cyclic(2))); }), ErrorKind::NotScwol);
}

TEST(BarSpectrum, DerivedWeightingMatchesOnRandomScwols) {
  rt::Rng rng(44);
  for (int k = 0; k < 40; ++k) {
    const FinCat i = rt::random_scwol(rng, 7);
    const CellSpectrum s = bar_spectrum(i);
    EXPECT_NO_THROW(s.verify());
    if (is_skeletal(i)) {
      EXPECT_EQ(s.derived_weighting(), weighting(i).values);
    }
    EXPECT_EQ(s.derived_weighting().size(), i.num_objects());
  }
}

TEST(BuiltinSpectrum, Examples) {
  const CellSpectrum p = builtin_spectrum(BuiltinKind::Pushout);
  EXPECT_EQ(cells_at(p, "k"), (std::vector<BigInt>{1}));
  EXPECT_EQ(cells_at(p, "l"), (std::vector<BigInt>{1}));
  EXPECT_EQ(cells_at(p, "j"), (std::vector<BigInt>{0, 1}));
  const CellSpectrum a = builtin_spectrum(BuiltinKind::ParallelPair);
  EXPECT_EQ(cells_at(a, "k"), (std::vector<BigInt>{1}));
  EXPECT_EQ(cells_at(a, "j"), (std::vector<BigInt>{0, 1}));
  const CellSpectrum s = builtin_spectrum(BuiltinKind::SubsetsPoset, {}, 1);
  EXPECT_EQ(cells_at(s, "{0}"), (std::vector<BigInt>{1}));
  EXPECT_EQ(cells_at(s, "{1}"), (std::vector<BigInt>{1}));
  EXPECT_EQ(cells_at(s, "{0,1}"), (std::vector<BigInt>{0, 1}));
  for (std::size_t n = 1; n <= 4; ++n) EXPECT_NO_THROW(builtin_spectrum(BuiltinKind::SubsetsPoset, {}, n).verify());
  const CellSpectrum t = builtin_spectrum(BuiltinKind::Terminal, terminal_object_poset(), 1);
  EXPECT_NO_THROW(t.verify());
  EXPECT_EQ(parse_builtin_kind("pushout"), BuiltinKind::Pushout);
  EXPECT_EQ(kind_of([] { parse_builtin_kind("torus"); }), ErrorKind::UnknownKind);
}

TEST(BuiltinSpectrum, VerifyRejectsNonWeightings) {
  CellSpectrum s = builtin_spectrum(BuiltinKind::Pushout);
  s.cells[s.index.object("j")] = {1, 1};
  EXPECT_EQ(kind_of([&] { s.verify(); }), ErrorKind::InvalidSpectrum);
  s.cells.pop_back();
  EXPECT_EQ(kind_of([&] { s.verify(); }), ErrorKind::InvalidSpectrum);
}

TEST(FormulaValue, Examples) {
  const CellSpectrum p = builtin_spectrum(BuiltinKind::Pushout);
  EXPECT_EQ(formula_value(p, {{"j", 1}, {"k", 1}, {"l", 1}}), 1);
  EXPECT_EQ(formula_value(p, {{"j", 1}, {"k", q(1, 2)}, {"l", q(1, 2)}}), 0);
  // S0 = {1,2}, S1 = {2,3}, S2 = {3}
  const std::map<std::string, Rational> inter = {{"{0}", 2},   {"{1}", 2},   {"{2}", 1},    {"{0,1}", 1},
                                                 {"{0,2}", 0}, {"{1,2}", 1}, {"{0,1,2}", 0}};
  EXPECT_EQ(formula_value(builtin_spectrum(BuiltinKind::SubsetsPoset, {}, 2), inter), 3);
  EXPECT_EQ(kind_of([&] { formula_value(p, {{"j", 1}}); }), ErrorKind::MissingValue);
}

TEST(FormulaValue, IndependentOfTheSpectrum) {
  rt::Rng rng(45);
  const CellSpectrum bar = bar_spectrum(pushout_scwol()), builtin = builtin_spectrum(BuiltinKind::Pushout);
  const CellSpectrum bar_a = bar_spectrum(parallel_pair()), builtin_a = builtin_spectrum(BuiltinKind::ParallelPair);
  for (int k = 0; k < 30; ++k) {
    std::map<std::string, Rational> v;
    for (const char* o : {"j", "k", "l"})
      v[o] = q(static_cast<long>(rt::uniform(rng, 0, 20)) - 10, static_cast<long>(rt::uniform(rng, 1, 7)));
    EXPECT_EQ(formula_value(bar, v), formula_value(builtin, v));
    EXPECT_EQ(formula_value(bar_a, v), formula_value(builtin_a, v));
  }
  for (std::size_t n = 1; n <= 3; ++n) {
    const CellSpectrum b = bar_spectrum(subsets_poset(n)), s = builtin_spectrum(BuiltinKind::SubsetsPoset, {}, n);
    std::map<std::string, Rational> v;
    for (const auto& o : b.index.object_names()) v[o] = static_cast<long>(rt::uniform(rng, 0, 9));
    EXPECT_EQ(formula_value(b, v), formula_value(s, v));
  }
}

TEST(CheckFormula, Examples) {
  const FormulaReport r = check_hocolim_formula(intro_pushout_diagram(), Invariant::ChiL);
  EXPECT_EQ(r.lhs, 0);
  EXPECT_EQ(r.rhs, 0);
  EXPECT_TRUE(r.equal);
  EXPECT_TRUE(check_hocolim_formula(intro_pushout_diagram(), Invariant::ChiScwol).equal);

  const StrictDiagram orbit = constant_diagram(one_object(FinGroup::cyclic(2)), terminal_category());
  EXPECT_EQ(kind_of([&] { check_hocolim_formula(orbit, Invariant::ChiL); }), ErrorKind::NotScwol);
  EXPECT_EQ(homotopy_orbit_chi(q(1, 2), 3), q(3, 2));

  const FinCat p = pushout_scwol();
  std::vector<FinGroup> groups(3);
  groups[p.object("j")] = FinGroup::cyclic(2);
  groups[p.object("k")] = FinGroup::cyclic(3);
  groups[p.object("l")] = FinGroup::trivial();
  const StrictDiagram d = group_diagram(p, groups, [&](MorId u) {
    return p.is_identity(u) ? GroupHom::identity(groups[p.source(u)])
                            : GroupHom::trivial(groups[p.source(u)], groups[p.target(u)]);
  });
  const FormulaReport g = check_hocolim_formula(d, Invariant::ChiL);
  EXPECT_EQ(g.lhs, q(5, 6));
  EXPECT_EQ(g.rhs, q(5, 6));
  EXPECT_TRUE(check_hocolim_formula(d, Invariant::Chi2).equal);
}

TEST(CheckFormula, ExplicitSpectrum) {
  const PseudoDiagram d = PseudoDiagram::from_strict(intro_pushout_diagram());
  const FormulaReport r = check_hocolim_formula(d, Invariant::ChiL, builtin_spectrum(BuiltinKind::Pushout));
  EXPECT_TRUE(r.equal);
  EXPECT_EQ(r.rhs, 0);
  CellSpectrum bad = builtin_spectrum(BuiltinKind::Pushout);
  bad.cells[0] = {2};
  EXPECT_EQ(kind_of([&] { check_hocolim_formula(d, Invariant::ChiL, bad); }), ErrorKind::InvalidSpectrum);
}

TEST(CheckFormula, RandomGroupoidDiagrams) {
  rt::Rng rng(46);
  for (int k = 0; k < 60; ++k) {
    const StrictDiagram d = rt::random_groupoid_diagram(rng, 5);
    const FormulaReport l = check_hocolim_formula(d, Invariant::ChiL);
    EXPECT_TRUE(l.equal) << to_string(l.lhs) << " vs " << to_string(l.rhs);
    EXPECT_TRUE(check_hocolim_formula(d, Invariant::Chi2).equal);
    const PredicateReport c = classify(grothendieck(d).category);
    EXPECT_TRUE(c.is_EI);
    EXPECT_TRUE(c.is_directly_finite);
  }
}

TEST(SetDiagrams, InclusionExclusion) {
  const StrictDiagram d = inclusion_exclusion_diagram({{1, 2}, {2, 3}, {3}});
  EXPECT_EQ(chi_L(grothendieck(d).category), 3);
  rt::Rng rng(47);
  for (int k = 0; k < 40; ++k) {
    const auto sets = rt::random_set_system(rng, rt::uniform(rng, 2, 4), rt::uniform(rng, 1, 8));
    std::set<std::size_t> un;
    for (const auto& s : sets) un.insert(s.begin(), s.end());
    EXPECT_EQ(chi_L(grothendieck(inclusion_exclusion_diagram(sets)).category), Rational(static_cast<long>(un.size())));
  }
}

TEST(SetDiagrams, Coequalizer) {
  // A = {a0, a1}, B = {b0..b4}; f, g injective with disjoint images
  const FinCat pp = parallel_pair();
  std::vector<std::vector<std::string>> sets(2);
  sets[pp.object("j")] = {"a0", "a1"};
  sets[pp.object("k")] = {"b0", "b1", "b2", "b3", "b4"};
  std::vector<std::vector<std::size_t>> maps(pp.num_morphisms());
  maps[pp.morphism("f")] = {0, 1};
  maps[pp.morphism("g")] = {2, 3};
  maps[pp.identity(pp.object("j"))] = {0, 1};
  maps[pp.identity(pp.object("k"))] = {0, 1, 2, 3, 4};
  EXPECT_EQ(chi_L(grothendieck(set_diagram(pp, sets, maps)).category), 3);
  maps[pp.morphism("g")] = {2, 7};
  EXPECT_THROW(set_diagram(pp, sets, maps), Error);
}
