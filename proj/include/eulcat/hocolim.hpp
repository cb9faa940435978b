#ifndef EULCAT_HOCOLIM_HPP
#define EULCAT_HOCOLIM_HPP

#include <map>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "eulcat/fincat.hpp"
#include "eulcat/rational.hpp"

namespace eulcat {

/// A functor from `index` to finite categories.
struct StrictDiagram {
  FinCat index;
  std::vector<FinCat> vertex;     // per object of index
  std::vector<CatFunctor> edge;   // per morphism of index

  /// Identity and composition laws, exhaustively. Throws NotAFunctor.
  void validate() const;
};

/// Pseudo functor. `comp[(v,u)][c]` : C(v)C(u)c -> C(vu)c in C(t v);
/// `unit[i][c]` : c -> C(id_i)c. Pairs or objects left out stand for
/// identity components and require the corresponding equation to hold strictly.
struct PseudoDiagram {
  FinCat index;
  std::vector<FinCat> vertex;
  std::vector<CatFunctor> edge;
  std::map<std::pair<MorId, MorId>, std::vector<MorId>> comp;
  std::map<ObjId, std::vector<MorId>> unit;

  /// Comp/unit component lookup with identity defaults.
  MorId comp_at(MorId v, MorId u, ObjId c) const;
  MorId unit_at(ObjId i, ObjId c) const;

  /// Naturality, invertibility, associativity and unit coherence on every
  /// composable pair and triple. Throws CoherenceFailure.
  void validate() const;

  static PseudoDiagram from_strict(const StrictDiagram& d);
};

struct GrothendieckResult {
  FinCat category;
  /// alphas[i] : C(i) -> category, c ↦ (i,c), f ↦ (id_i, f).
  std::vector<CatFunctor> alphas;
};

/// Objects "(i,c)", morphisms "(u,f)".
GrothendieckResult grothendieck(const StrictDiagram& d);
FinCat grothendieck_pseudo(const PseudoDiagram& d);

/// Cells of a finite I-CW model, per object and dimension.
struct CellSpectrum {
  FinCat index;
  std::vector<std::vector<BigInt>> cells;  // per object of index

  /// q^i = Σ_n (-1)^n cells[i][n].
  std::vector<Rational> derived_weighting() const;
  /// The derived weighting solves the weighting equations. Throws InvalidSpectrum.
  void verify() const;
};

/// Cells based at skeleton representatives; other objects carry none.
/// Throws NotScwol.
CellSpectrum bar_spectrum(const FinCat& i);

enum class BuiltinKind { Terminal, ParallelPair, Pushout, SubsetsPoset };

/// Hand-built minimal models. `arg` is the terminal object for Terminal, q
/// for SubsetsPoset; `index` is used by Terminal only.
CellSpectrum builtin_spectrum(BuiltinKind kind, const FinCat& index = FinCat(), std::size_t arg = 0);
/// Parses "terminal", "parallel_pair", "pushout", "subsets_poset". Throws UnknownKind.
BuiltinKind parse_builtin_kind(const std::string& name);

/// Σ_i q^i vals(i) over objects carrying cells. Throws MissingValue.
Rational formula_value(const CellSpectrum& s, const std::map<std::string, Rational>& vals);

enum class Invariant { ChiL, Chi2, ChiScwol };

Rational invariant_value(const FinCat& c, Invariant inv);

struct FormulaReport {
  Rational lhs;
  Rational rhs;
  bool equal = false;
  std::map<std::string, Rational> vertex_values;
};

/// invariant(grothendieck(D)) against formula_value(bar_spectrum(I), invariants
/// of the vertices). Throws NotScwol when the index is not a scwol.
FormulaReport check_hocolim_formula(const StrictDiagram& d, Invariant inv);
FormulaReport check_hocolim_formula(const PseudoDiagram& d, Invariant inv);
/// Same with an explicit, verified spectrum over d.index.
FormulaReport check_hocolim_formula(const PseudoDiagram& d, Invariant inv, const CellSpectrum& s);

/// χ(H) = χ(BG)·χ(C) for the homotopy orbit of an action on C; χ(BG) is taken
/// from the caller.
Rational homotopy_orbit_chi(const Rational& chi_BG, const Rational& chi_C);

/// Constant diagram with value c over i.
StrictDiagram constant_diagram(const FinCat& i, const FinCat& c);
/// Every vertex the terminal category.
StrictDiagram trivial_diagram(const FinCat& i);
/// {y,z} -> {•} and {y,z} -> {•'} over the pushout scwol.
StrictDiagram intro_pushout_diagram();
/// Sets over an index, given as discrete categories and maps.
/// `maps[u][k]` is the image of element k under u.
StrictDiagram set_diagram(const FinCat& i, const std::vector<std::vector<std::string>>& sets,
                          const std::vector<std::vector<std::size_t>>& maps);

/// J ↦ ∩_{j∈J} sets[j] over subsets_poset(sets.size() - 1), with inclusions.
StrictDiagram inclusion_exclusion_diagram(const std::vector<std::set<std::size_t>>& sets);

}  // namespace eulcat

#endif  // EULCAT_HOCOLIM_HPP
