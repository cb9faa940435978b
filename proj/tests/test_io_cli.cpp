#include <gtest/gtest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <functional>
#include <sstream>

#include <unistd.h>

#include "random_instances.hpp"

#include "eulcat/cli.hpp"
#include "eulcat/constructions.hpp"
#include "eulcat/error.hpp"
#include "eulcat/io.hpp"
#include "eulcat/ratlin.hpp"

using namespace eulcat;
namespace rt = eulcat::testing;
namespace fs = std::filesystem;

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

struct Outcome {
  int code;
  std::string out;
  std::string err;
};

Outcome run(const std::vector<std::string>& args) {
  std::ostringstream out, err;
  const int code = cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

class TempFiles {
 public:
  TempFiles() : dir_(fs::temp_directory_path() / ("eulcat_test_" + std::to_string(::getpid()))) {
    fs::create_directories(dir_);
  }
  ~TempFiles() {
    std::error_code ec;
    fs::remove_all(dir_, ec);
  }
  std::string write(const std::string& name, const std::string& text) {
    const fs::path p = dir_ / name;
    std::ofstream(p) << text;
    return p.string();
  }
  std::string manifest(const std::string& name, const std::string& kind, const Json& payload) {
    return write(name, dump(Manifest{kind, payload}));
  }

 private:
  fs::path dir_;
};

template <class T, class F>
T round_trip(const std::string& kind, const T& value, F parse) {
  const Manifest m = parse_manifest(dump(Manifest{kind, to_json(value)}));
  EXPECT_EQ(m.kind, kind);
  return parse(m.payload);
}

ComplexOfGroups one_arrow(const FinGroup& g0, const FinGroup& g1, const std::vector<Elem>& map) {
  ComplexOfGroups f;
  f.base = arrow_category();
  f.local = {g0, g1};
  for (MorId m = 0; m < f.base.num_morphisms(); ++m)
    f.homs.push_back(f.base.is_identity(m) ? GroupHom::identity(f.local[f.base.source(m)]) : GroupHom{g0, g1, map});
  f.validate();
  return f;
}

void expect_same(const ComplexOfGroups& a, const ComplexOfGroups& b) {
  EXPECT_EQ(a.base, b.base);
  ASSERT_EQ(a.local.size(), b.local.size());
  for (std::size_t s = 0; s < a.local.size(); ++s) EXPECT_EQ(a.local[s], b.local[s]);
  ASSERT_EQ(a.homs.size(), b.homs.size());
  for (std::size_t m = 0; m < a.homs.size(); ++m) EXPECT_EQ(a.homs[m].map, b.homs[m].map);
  EXPECT_EQ(a.twists, b.twists);
}

}  // namespace

TEST(Manifest, Envelope) {
  const Manifest m = parse_manifest(R"({"version": 1, "kind": "group", "payload": {"builtin": "cyclic", "n": 3}})");
  EXPECT_EQ(group_from_json(m.payload), FinGroup::cyclic(3));
  EXPECT_EQ(kind_of([] { parse_manifest(R"({"version": 2, "kind": "group", "payload": {}})"); }), ErrorKind::ParseError);
  EXPECT_EQ(kind_of([] { parse_manifest(R"({"version": 1, "kind": "torus", "payload": {}})"); }), ErrorKind::ParseError);
  EXPECT_EQ(kind_of([] { parse_manifest("{not json"); }), ErrorKind::ParseError);
  EXPECT_EQ(kind_of([] { read_manifest("/nonexistent/file.json"); }), ErrorKind::ParseError);
}

TEST(Manifest, Rationals) {
  EXPECT_EQ(rational_from_json(Json("3/6")), make_rational(1, 2));
  EXPECT_EQ(rational_from_json(Json(-4)), -4);
  EXPECT_EQ(rational_json(make_rational(-3, 2)), Json("-3/2"));
  EXPECT_EQ(integer_from_json(Json("123456789012345678901234567890")), BigInt("123456789012345678901234567890"));
  EXPECT_EQ(kind_of([] { integer_from_json(Json("1/2")); }), ErrorKind::ParseError);
}

TEST(RoundTrip, Categories) {
  rt::Rng rng(71);
  for (int k = 0; k < 30; ++k) {
    const FinCat c = k % 2 ? rt::random_scwol(rng, 7) : rt::random_groupoid(rng, 4, "g").build();
    EXPECT_EQ(round_trip("category", c, category_from_json), c);
  }
  for (const FinCat& c : {gamma1(), gamma2(), multiplicative_z2(), FinCat()})
    EXPECT_EQ(round_trip("category", c, category_from_json), c);
}

TEST(RoundTrip, Groups) {
  for (const FinGroup& g : {FinGroup::trivial(), FinGroup::dihedral(4), FinGroup::symmetric(3)})
    EXPECT_EQ(round_trip("group", g, group_from_json), g);
}

TEST(RoundTrip, Diagrams) {
  rt::Rng rng(72);
  for (int k = 0; k < 20; ++k) {
    const StrictDiagram d = rt::random_groupoid_diagram(rng, 4);
    const StrictDiagram e = round_trip("diagram", d, diagram_from_json);
    EXPECT_EQ(e.index, d.index);
    EXPECT_EQ(e.vertex, d.vertex);
    EXPECT_EQ(e.edge, d.edge);
  }
}

TEST(RoundTrip, PseudoDiagrams) {
  const FinCat index = free_category({"0", "1", "2"}, {{"a", 0, 1}, {"b", 1, 2}});
  const FinGroup g = FinGroup::cyclic(2);
  StrictDiagram s{index, {one_object(g), one_object(g), one_object(g)}, {}};
  for (MorId u = 0; u < index.num_morphisms(); ++u)
    s.edge.push_back(one_object_functor(s.vertex[index.source(u)], s.vertex[index.target(u)], GroupHom::identity(g)));
  PseudoDiagram p = PseudoDiagram::from_strict(s);
  p.comp[{index.morphism("b"), index.morphism("a")}] = {1};
  const PseudoDiagram r = round_trip("pseudo_diagram", p, pseudo_diagram_from_json);
  EXPECT_EQ(r.index, p.index);
  EXPECT_EQ(r.edge, p.edge);
  for (MorId v = 0; v < index.num_morphisms(); ++v)
    for (MorId u = 0; u < index.num_morphisms(); ++u)
      if (index.composable(v, u)) EXPECT_EQ(r.comp_at(v, u, 0), p.comp_at(v, u, 0));
  EXPECT_EQ(grothendieck_pseudo(r), grothendieck_pseudo(p));
}

TEST(RoundTrip, Actions) {
  rt::Rng rng(73);
  std::vector<ScwolAction> v{circle_action()};
  for (int k = 0; k < 15; ++k) v.push_back(rt::random_action(rng, rt::coin(rng), 8, 6));
  for (const auto& a : v) {
    const ScwolAction b = round_trip("action", a, action_from_json);
    EXPECT_EQ(b.group, a.group);
    EXPECT_EQ(b.space, a.space);
    EXPECT_EQ(b.on_objects, a.on_objects);
    EXPECT_EQ(b.on_morphisms, a.on_morphisms);
  }
}

TEST(RoundTrip, Complexes) {
  rt::Rng rng(74);
  for (int k = 0; k < 15; ++k) {
    const ComplexOfGroups f = complex_of_groups(rt::random_action(rng, false, 8, 6)).complex;
    expect_same(round_trip("complex", f, complex_from_json), f);
  }
  const ComplexOfGroups a = one_arrow(FinGroup::cyclic(2), FinGroup::cyclic(4), {0, 2});
  expect_same(round_trip("complex", a, complex_from_json), a);
}

TEST(RoundTrip, Spectra) {
  for (const CellSpectrum& s : {builtin_spectrum(BuiltinKind::Pushout), bar_spectrum(subsets_poset(2))}) {
    const CellSpectrum t = round_trip("spectrum", s, spectrum_from_json);
    EXPECT_EQ(t.index, s.index);
    EXPECT_EQ(t.derived_weighting(), s.derived_weighting());
  }
}

TEST(Parsing, ShapeAndValidationErrors) {
  EXPECT_EQ(kind_of([] { category_from_json(Json::parse(R"({"objects": "j"})")); }), ErrorKind::ParseError);
  const Json dangling = Json::parse(R"({"objects": ["j"], "morphisms": [{"id": "f", "source": "j", "target": "k"}]})");
  EXPECT_EQ(kind_of([&] { category_from_json(dangling); }), ErrorKind::DanglingReference);
  const Json bad_group = Json::parse(R"({"elements": ["e", "a"], "table": [["e", "a"], ["a", "a"]], "identity": "e"})");
  EXPECT_EQ(kind_of([&] { group_from_json(bad_group); }), ErrorKind::NotAGroup);
}

class Cli : public ::testing::Test {
 protected:
  TempFiles files;
};

TEST_F(Cli, ChiOfThePushout) {
  const std::string p = files.manifest("p.json", "category", to_json(pushout_scwol()));
  const Outcome r = run({"chi", p});
  EXPECT_EQ(r.code, cli::kOk);
  EXPECT_EQ(r.out, "1\n");
  const Outcome j = run({"chi", p, "--json"});
  EXPECT_EQ(Json::parse(j.out).begin().value(), Json("1"));
}

TEST_F(Cli, WeightingOfTheParallelPair) {
  const std::string a = files.manifest("a.json", "category", to_json(parallel_pair()));
  EXPECT_EQ(run({"weighting", a}).out, "j: -1, k: 1\n");
  const Json j = Json::parse(run({"weighting", a, "--json"}).out);
  EXPECT_EQ(j["weighting"]["j"], Json("-1"));
  EXPECT_EQ(j["weighting"]["k"], Json("1"));
  EXPECT_EQ(run({"weighting", "--co", a}).out, "j: 1, k: -1\n");
}

TEST_F(Cli, CategoryCommands) {
  const std::string g = files.manifest("g1.json", "category", to_json(gamma1()));
  EXPECT_EQ(run({"chil", g}).out, "1/4\n");
  EXPECT_EQ(run({"chi2", g}).out, "1/4\n");
  const Outcome c = run({"classify", g});
  EXPECT_NE(c.out.find("is_EI: true"), std::string::npos);
  EXPECT_NE(c.out.find("is_scwol: false"), std::string::npos);
  EXPECT_EQ(run({"validate", g}).code, cli::kOk);
  const std::string circle = files.manifest("circle.json", "category", to_json(circle_scwol()));
  const Outcome p = run({"paths", circle});
  EXPECT_NE(p.out.find("c_1: 4"), std::string::npos);
  EXPECT_NE(p.out.find("alternating sum: 0"), std::string::npos);
  const std::string gr = files.manifest("gr.json", "category", to_json(trivialized_groupoid({"x", "y"}, FinGroup::cyclic(2))));
  const Outcome sk = run({"skeleton", "--emit", gr});
  EXPECT_EQ(category_from_json(parse_manifest(sk.out).payload).num_objects(), 1u);
}

TEST_F(Cli, PathCountCap) {
  const std::string s = files.manifest("s.json", "category", to_json(subsets_poset(2)));
  ::setenv("EULCAT_MAX_DIM", "1", 1);
  const Outcome r = run({"paths", s});
  ::unsetenv("EULCAT_MAX_DIM");
  EXPECT_NE(r.out.find("truncated"), std::string::npos);
  EXPECT_EQ(run({"paths", s}).out.find("truncated"), std::string::npos);
}

TEST_F(Cli, HocolimAndFormula) {
  const std::string d = files.manifest("d.json", "diagram", to_json(intro_pushout_diagram()));
  const Outcome h = run({"hocolim", "--emit", d});
  EXPECT_EQ(h.code, cli::kOk);
  const FinCat c = category_from_json(parse_manifest(h.out).payload);
  EXPECT_EQ(c.num_objects(), 4u);
  const Outcome f = run({"check-formula", d});
  EXPECT_EQ(f.code, cli::kOk);
  EXPECT_NE(f.out.find("PASS"), std::string::npos);
  const std::string s = files.manifest("s.json", "spectrum", to_json(builtin_spectrum(BuiltinKind::Pushout)));
  EXPECT_EQ(run({"check-formula", "--spectrum", s, "--invariant", "chi", d}).code, cli::kOk);
  EXPECT_EQ(run({"check-formula", "--invariant", "nope", d}).code, cli::kInputError);
}

TEST_F(Cli, ActionCommands) {
  const std::string a = files.manifest("circle.json", "action", to_json(circle_action()));
  EXPECT_EQ(run({"chi-theorems", a}).code, cli::kOk);
  const Outcome q = run({"quotient", "--emit", a});
  EXPECT_TRUE(find_isomorphism(category_from_json(parse_manifest(q.out).payload), pushout_scwol()).has_value());
  const Outcome cx = run({"complex-of-groups", "--emit", a});
  const ComplexOfGroups f = complex_from_json(parse_manifest(cx.out).payload);
  EXPECT_EQ(f.local.size(), 3u);
  const std::string fc = files.write("complex.json", cx.out);
  EXPECT_EQ(run({"hocolim-groups", fc}).code, cli::kOk);
  EXPECT_EQ(run({"hocolim-groups", a}).code, cli::kOk);
  const std::string s3 = files.manifest(
      "s3.json", "action", to_json(permutation_gset(permutation_group(3, {{1, 0, 2}, {1, 2, 0}}))));
  const Outcome t = run({"transport", s3});
  EXPECT_NE(t.out.find("chi2: 1/2"), std::string::npos);
  EXPECT_NE(t.out.find("orbits: 1"), std::string::npos);
}

TEST_F(Cli, Developability) {
  const std::string f = files.manifest("f.json", "complex", to_json(one_arrow(FinGroup::trivial(), FinGroup::cyclic(2), {0})));
  EXPECT_EQ(run({"developability", f, "--candidate", "2:4"}).code, cli::kOk);
  EXPECT_EQ(run({"developability", f, "--candidate", "1:3"}).code, cli::kFail);
  EXPECT_EQ(run({"developability", f, "--candidate", "2:4", "--candidate", "1:3"}).code, cli::kFail);
  EXPECT_EQ(run({"developability", f, "--candidate", "2-4"}).code, cli::kInputError);
}

TEST_F(Cli, Haefliger) {
  const std::string p = files.manifest("p.json", "category", to_json(pushout_scwol()));
  EXPECT_EQ(run({"haefliger", p}).out, "1\n");
  EXPECT_EQ(run({"haefliger", p, "--vals", "j=1,k=1/2,l=1/2"}).out, "0\n");
  EXPECT_EQ(run({"haefliger", p, "--vals", "j=2", "--vals", "k=1/3,l=1"}).out, "-2/3\n");
  const Outcome missing = run({"haefliger", p, "--vals", "j=2"});
  EXPECT_EQ(missing.code, cli::kInputError);
  EXPECT_NE(missing.err.find("MissingValue"), std::string::npos);
}

TEST_F(Cli, Demos) {
  for (const auto& name : cli::demo_names()) {
    const Outcome r = run({"demo", name});
    EXPECT_EQ(r.code, cli::kOk) << name;
    if (name != "weightings") EXPECT_NE(r.out.find("PASS"), std::string::npos) << name;
    const Outcome j = run({"demo", name, "--json"});
    EXPECT_NO_THROW((void)Json::parse(j.out)) << name;
  }
  const Outcome intro = run({"demo", "intro-pushout"});
  EXPECT_NE(intro.out.find("chi(hocolim) = 0"), std::string::npos);
  EXPECT_NE(intro.out.find("= 1 + 1 - 2 = 0"), std::string::npos);
  EXPECT_NE(run({"demo", "weightings"}).out.find("parallel pair: j: -1, k: 1"), std::string::npos);
}

TEST_F(Cli, ErrorsAndExitCodes) {
  EXPECT_EQ(run({"chi", "/nonexistent.json"}).code, cli::kInputError);
  const std::string junk = files.write("junk.json", "{ nope");
  const Outcome j = run({"chi", junk});
  EXPECT_EQ(j.code, cli::kInputError);
  EXPECT_EQ(j.err.rfind("error: ", 0), 0u);
  const std::string g = files.manifest("z2.json", "category", to_json(one_object(FinGroup::cyclic(2))));
  const Outcome ns = run({"chi", g});
  EXPECT_EQ(ns.code, cli::kInputError);
  EXPECT_NE(ns.err.find("NotScwol"), std::string::npos);
  EXPECT_EQ(run({"demo", "nope"}).code, cli::kInputError);
  EXPECT_EQ(run({"frobnicate"}).code, cli::kInputError);
  EXPECT_EQ(run({"--help"}).code, cli::kOk);
  EXPECT_EQ(run({}).code, cli::kInputError);
}
