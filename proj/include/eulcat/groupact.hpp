#ifndef EULCAT_GROUPACT_HPP
#define EULCAT_GROUPACT_HPP

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "eulcat/fincat.hpp"
#include "eulcat/group.hpp"
#include "eulcat/rational.hpp"

namespace eulcat {

/// A finite group acting on a scwol by strictly invertible functors.
struct ScwolAction {
  FinGroup group;
  FinCat space;
  std::vector<std::vector<ObjId>> on_objects;    // [g][x]
  std::vector<std::vector<MorId>> on_morphisms;  // [g][f]

  ObjId act(Elem g, ObjId x) const { return on_objects[g][x]; }
  MorId act_mor(Elem g, MorId f) const { return on_morphisms[g][f]; }
  CatFunctor functor(Elem g) const;
  bool free_on_objects() const;
};

/// Throws NotScwol, NotAFunctorAction, NotAHomomorphism, AxiomIViolation,
/// AxiomIIViolation. Messages name the morphism and the group element.
void validate_action(const ScwolAction& a);

/// The trivial action.
ScwolAction trivial_action(const FinGroup& g, const FinCat& x);

/// A left G-set as an action on the discrete scwol on `points`;
/// perms[g][k] is the image of point k. Throws NotAnAction.
ScwolAction gset_action(const FinGroup& g, const std::vector<std::string>& points,
                        const std::vector<std::vector<std::size_t>>& perms);

/// Natural action of a permutation group on {1..n}.
ScwolAction permutation_gset(const PermutationGroup& g);

/// Z/2 acting on the circle scwol.
ScwolAction circle_action();

struct QuotientResult {
  FinCat quotient;
  CatFunctor projection;
};

/// Orbits named by their least member id. Throws InvalidQuotient.
QuotientResult quotient(const ScwolAction& a);

/// Elements fixing x, sorted by index.
std::vector<Elem> stabilizer_elements(const ScwolAction& a, ObjId x);
/// Throws UnknownObject.
FinGroup stabilizer(const ScwolAction& a, ObjId x, std::vector<Elem>* embedding = nullptr);

/// Group-valued pseudo functor over a scwol with injective structure maps.
struct ComplexOfGroups {
  FinCat base;
  std::vector<FinGroup> local;  // per object
  std::vector<GroupHom> homs;   // per morphism; identities map identically
  /// (b, a) for composable non-identity pairs; element of local[t b].
  /// Pairs left out carry the identity element.
  std::map<std::pair<MorId, MorId>, Elem> twists;

  Elem twist(MorId b, MorId a) const;
  /// Injectivity, conjugation identity and cocycle identity. Throws InvalidComplex.
  void validate() const;
};

struct ComplexChoices {
  /// Quotient object -> chosen lift in the space.
  std::map<ObjId, ObjId> representative;
  /// Quotient morphism -> h element.
  std::map<MorId, Elem> h;
};

struct ComplexResult {
  ComplexOfGroups complex;
  QuotientResult quotient;
  std::vector<ObjId> representative;  // per quotient object
  std::vector<Elem> h;                // per quotient morphism
  /// Inclusions of the local groups into G.
  std::vector<GroupHom> to_group;
};

/// Defaults: least-id representative, least-index h (identity element for
/// identities). Throws InvalidChoice on a choice that misses its target.
ComplexResult complex_of_groups(const ScwolAction& a, const ComplexChoices& choices = {});

/// Objects are those of the base; morphisms "(a,g)" with g in the local group
/// of the target.
FinCat hocolim_groups(const ComplexOfGroups& f);

/// Coordinated-choice comparison between an action and its skeleton.
struct ReductionReport {
  ScwolAction reduced;
  CatFunctor retraction;
  bool reduced_action_valid = false;
  bool r_equivariant = false;
  bool quotient_square_commutes = false;
  bool quotient_functor_equivalence = false;
  bool stabilizers_preserved = false;
  bool complexes_agree = false;
  bool hocolim_functor_equivalence = false;
  bool hocolim_chi_equal = false;
  bool freeness_preserved = false;
  Rational chi_hocolim_space;
  Rational chi_hocolim_skeleton;

  bool all() const {
    return reduced_action_valid && r_equivariant && quotient_square_commutes && quotient_functor_equivalence &&
           stabilizers_preserved && complexes_agree && hocolim_functor_equivalence && hocolim_chi_equal &&
           freeness_preserved;
  }
};

ReductionReport skeletal_reduction(const ScwolAction& a);

struct EquivariantSkeleton {
  Skeleton skeleton;
  ScwolAction action;  // restriction to the skeleton
};

/// Skeleton whose inclusion is G-equivariant. Throws InternalError if a
/// defining property fails.
EquivariantSkeleton equivariant_skeleton(const ScwolAction& a);

/// Groupoid with objects the points and morphisms "<g>@<s>" : s -> g s.
/// Cross-checked against the hocolim of the associated complex of groups.
FinCat transport_groupoid(const ScwolAction& gset);

struct ChiReport {
  BigInt chi_space;
  BigInt chi_quotient;
  std::size_t group_order = 0;
  bool free_on_objects = false;
  /// Free actions only.
  std::optional<bool> free_quotient_law;
  Rational chi2_formula;      // spectrum of the quotient, values 1/|G_σ|
  Rational chi2_hocolim;      // chi_L of the hocolim
  Rational chi_space_over_order;
  bool chi2_agrees = false;
  Rational chi_hocolim;       // spectrum of the quotient, values 1
  bool chi_agrees = false;

  bool all() const { return chi2_agrees && chi_agrees && free_quotient_law.value_or(true); }
};

ChiReport chi_theorems(const ScwolAction& a);

struct DevelopabilityCandidate {
  BigInt chi_space;
  BigInt group_order;
};

struct DevelopabilityVerdict {
  DevelopabilityCandidate candidate;
  Rational required_chi;  // r·|G|
  bool integral = false;
  bool sign_ok = false;
  bool pass = false;
};

struct DevelopabilityReport {
  Rational r;
  std::vector<DevelopabilityVerdict> verdicts;
};

DevelopabilityReport developability_check(const ComplexOfGroups& f, const std::vector<DevelopabilityCandidate>& c);

/// Σ_i (1 - χ(lower link at i)) vals(i) over the skeleton. Throws NotScwol,
/// MissingValue.
Rational haefliger_chi(const FinCat& i, const std::map<std::string, Rational>& vals);

/// Number of G-orbits of n-paths of non-identity morphisms.
std::size_t path_orbit_count(const ScwolAction& a, std::size_t n);

/// Clones every object of an orbit `copies` more times; g acts copy-wise.
ScwolAction fatten(const ScwolAction& a, const std::vector<std::pair<ObjId, std::size_t>>& copies);

}  // namespace eulcat

#endif  // EULCAT_GROUPACT_HPP
