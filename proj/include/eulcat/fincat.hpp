#ifndef EULCAT_FINCAT_HPP
#define EULCAT_FINCAT_HPP

#include <array>
#include <cstdint>
#include <functional>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "eulcat/group.hpp"
#include "eulcat/rational.hpp"

namespace eulcat {

using ObjId = std::uint32_t;
using MorId = std::uint32_t;

struct MorphismRecord {
  std::string id;
  std::string source;
  std::string target;
};

/// Unvalidated category data, as read from a file.
struct CategoryDescription {
  std::vector<std::string> objects;
  std::vector<MorphismRecord> morphisms;
  /// object -> identity morphism. Objects left out get an identity named
  /// "id_<object>", taken from `morphisms` if present, created otherwise.
  std::map<std::string, std::string> identity;
  /// (g, f, g∘f). Entries with an identity factor may be omitted.
  std::vector<std::array<std::string, 3>> compose;
};

/// A finite category with explicit composition table. Immutable value type;
/// copies share storage.
class FinCat {
 public:
  class Builder;

  /// The empty category.
  FinCat();

  std::size_t num_objects() const { return d_->obj_names.size(); }
  std::size_t num_morphisms() const { return d_->mor_names.size(); }

  const std::string& object_name(ObjId x) const { return d_->obj_names[x]; }
  const std::string& morphism_name(MorId f) const { return d_->mor_names[f]; }
  const std::vector<std::string>& object_names() const { return d_->obj_names; }
  const std::vector<std::string>& morphism_names() const { return d_->mor_names; }

  std::optional<ObjId> find_object(std::string_view name) const;
  std::optional<MorId> find_morphism(std::string_view name) const;
  /// Throw UnknownObject.
  ObjId object(std::string_view name) const;
  MorId morphism(std::string_view name) const;

  ObjId source(MorId f) const { return d_->src[f]; }
  ObjId target(MorId f) const { return d_->tgt[f]; }
  MorId identity(ObjId x) const { return d_->ident[x]; }
  bool is_identity(MorId f) const { return d_->is_ident[f] != 0; }

  const std::vector<MorId>& hom(ObjId x, ObjId y) const { return d_->homs[x * num_objects() + y]; }
  const std::vector<MorId>& out(ObjId x) const { return d_->outs[x]; }
  const std::vector<MorId>& in(ObjId y) const { return d_->ins[y]; }

  bool composable(MorId g, MorId f) const { return target(f) == source(g); }
  /// g∘f. Requires target(f) == source(g).
  MorId compose(MorId g, MorId f) const { return d_->table[d_->base[f] + d_->out_pos[g]]; }
  /// Throws DanglingReference when not composable.
  MorId compose_checked(MorId g, MorId f) const;

  std::optional<MorId> inverse(MorId f) const;
  bool is_iso(MorId f) const { return inverse(f).has_value(); }

  CategoryDescription describe() const;

  friend bool operator==(const FinCat& a, const FinCat& b);
  friend bool operator!=(const FinCat& a, const FinCat& b) { return !(a == b); }

 private:
  struct Data;
  explicit FinCat(std::shared_ptr<const Data> d) : d_(std::move(d)) {}

  struct Data {
    std::vector<std::string> obj_names, mor_names;
    std::map<std::string, ObjId, std::less<>> obj_index;
    std::map<std::string, MorId, std::less<>> mor_index;
    std::vector<ObjId> src, tgt;
    std::vector<MorId> ident;
    std::vector<char> is_ident;
    std::vector<std::vector<MorId>> homs, outs, ins;
    std::vector<std::uint32_t> out_pos;
    std::vector<std::size_t> base;
    std::vector<MorId> table;
  };

  std::shared_ptr<const Data> d_;
};

/// Incremental construction. build() validates every category axiom.
class FinCat::Builder {
 public:
  ObjId add_object(std::string name);
  MorId add_morphism(std::string name, ObjId source, ObjId target);
  /// Adds an identity morphism for x named `name` (default "id_<x>").
  MorId add_identity(ObjId x, std::string name = {});
  void set_identity(ObjId x, MorId f);
  /// Records g∘f = gf.
  void set_composite(MorId g, MorId f, MorId gf);
  /// Fills every non-identity composite from `fn`.
  void fill_composites(const std::function<MorId(MorId g, MorId f)>& fn);

  std::size_t num_objects() const { return objects_.size(); }
  std::size_t num_morphisms() const { return morphisms_.size(); }
  ObjId source(MorId f) const { return morphisms_[f].s; }
  ObjId target(MorId f) const { return morphisms_[f].t; }

  /// Throws NonAssociative, BrokenIdentity, IncompleteCompositionTable,
  /// DanglingReference, DuplicateId.
  FinCat build() const;

 private:
  struct Mor {
    std::string name;
    ObjId s, t;
  };
  std::vector<std::string> objects_;
  std::vector<Mor> morphisms_;
  std::vector<std::optional<MorId>> identity_;
  std::map<std::pair<MorId, MorId>, MorId> composites_;
};

/// Validates a raw description (errors name the offending ids).
FinCat validate(const CategoryDescription& desc);

struct PredicateReport {
  bool is_scwol = false;
  bool is_EI = false;
  bool is_directly_finite = false;
  bool is_groupoid = false;
  bool is_skeletal = false;
  bool is_connected = false;
};

PredicateReport classify(const FinCat& c);
bool is_scwol(const FinCat& c);
bool is_EI(const FinCat& c);
bool is_directly_finite(const FinCat& c);
bool is_groupoid(const FinCat& c);
bool is_skeletal(const FinCat& c);
/// The empty category counts as disconnected.
bool is_connected(const FinCat& c);

struct CatFunctor {
  FinCat source;
  FinCat target;
  std::vector<ObjId> on_objects;
  std::vector<MorId> on_morphisms;

  ObjId operator()(ObjId x) const { return on_objects[x]; }
  MorId map(MorId f) const { return on_morphisms[f]; }

  /// Exhaustive check. Throws NotAFunctor.
  void verify() const;
  static CatFunctor identity(const FinCat& c);
  friend bool operator==(const CatFunctor& a, const CatFunctor& b) {
    return a.on_objects == b.on_objects && a.on_morphisms == b.on_morphisms && a.source == b.source &&
           a.target == b.target;
  }
};

/// g∘f as functors; requires f.target == g.source.
CatFunctor compose(const CatFunctor& g, const CatFunctor& f);

/// Fully faithful and essentially surjective.
bool is_equivalence(const CatFunctor& f);

struct NatIso {
  CatFunctor from;
  CatFunctor to;
  /// components[x] : from(x) -> to(x)
  std::vector<MorId> components;

  /// Throws NotANaturalIso.
  void verify() const;
};

struct IsoClass {
  ObjId representative;
  std::vector<ObjId> members;
  /// Invertible endomorphisms of the representative, in morphism-id order.
  std::vector<MorId> aut_morphisms;
  /// Their group, elements labelled by morphism id.
  FinGroup aut;
  /// Whether every endomorphism of the representative is invertible.
  bool all_endomorphisms_invertible = true;
};

/// Isomorphism classes, sorted by representative name (the least member name).
std::vector<IsoClass> iso_classes(const FinCat& c);

/// Mutual-inverse pairs; result[x] = the class index of x.
std::vector<std::size_t> iso_class_index(const FinCat& c, const std::vector<IsoClass>& classes);

struct Skeleton {
  FinCat gamma;
  CatFunctor inclusion;   // gamma -> C
  CatFunctor retraction;  // C -> gamma
  NatIso eta;             // inclusion∘retraction => id_C
};

/// Full subcategory on the class representatives. Object and morphism names
/// are kept.
Skeleton skeleton(const FinCat& c);

/// Full subcategory on `objects`, names kept. `inclusion` receives the functor
/// into c when given.
FinCat full_subcategory(const FinCat& c, const std::vector<ObjId>& objects, CatFunctor* inclusion = nullptr);

struct PathCounts {
  FinCat skeleton;
  /// c[n] = number of n-paths of non-identity morphisms in the skeleton.
  std::vector<BigInt> c;
  /// starts[x][n] for x an object of `skeleton`; padded to c.size().
  std::vector<std::vector<BigInt>> starts;
  /// Set when n_max stopped the count before nilpotency.
  bool truncated = false;

  /// Σ (-1)^n c_n.
  BigInt alternating_sum() const;
};

/// Throws NotScwol.
PathCounts path_counts(const FinCat& x, std::optional<std::size_t> n_max = std::nullopt);

/// All n-paths (f_1, ..., f_n) of composable non-identity morphisms, f_1 first.
/// n = 0 yields one empty path per object; the object is returned separately
/// through `start` for each path.
std::vector<std::vector<MorId>> enumerate_paths(const FinCat& x, std::size_t n, std::vector<ObjId>* start = nullptr);

/// Objects: non-identity morphisms out of i. Morphisms a -> b: the morphisms u
/// with u∘a = b, named "(a,u)". Throws NotScwol, UnknownObject.
FinCat lower_link(const FinCat& x, ObjId i);

}  // namespace eulcat

#endif  // EULCAT_FINCAT_HPP
