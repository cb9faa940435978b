#ifndef EULCAT_GROUP_HPP
#define EULCAT_GROUP_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

namespace eulcat {

using Elem = std::uint32_t;

/// A finite group given by its Cayley table. Immutable once constructed.
class FinGroup {
 public:
  /// The trivial group with one element labelled "e".
  FinGroup();

  /// Validates closure, identity, inverses and associativity exhaustively.
  /// Throws NotAGroup.
  FinGroup(std::vector<std::string> labels, std::vector<std::vector<Elem>> table, Elem identity);

  std::size_t order() const { return labels_.size(); }
  Elem identity() const { return identity_; }
  Elem mul(Elem a, Elem b) const { return table_[a * order() + b]; }
  Elem inv(Elem a) const { return inverse_[a]; }
  Elem conj(Elem h, Elem g) const { return mul(mul(h, g), inv(h)); }

  const std::string& label(Elem a) const { return labels_[a]; }
  const std::vector<std::string>& labels() const { return labels_; }
  std::optional<Elem> find(std::string_view label) const;
  /// Throws UnknownObject.
  Elem element(std::string_view label) const;

  std::vector<std::vector<Elem>> table() const;

  bool is_abelian() const;
  std::size_t element_order(Elem a) const;

  /// Closure of `gens` under multiplication, sorted by index.
  std::vector<Elem> generated(const std::vector<Elem>& gens) const;

  /// The subgroup on `elements` (must be closed), labels kept.
  /// `embedding`, if given, receives the inclusion map.
  FinGroup subgroup(const std::vector<Elem>& elements, std::vector<Elem>* embedding = nullptr) const;

  /// A small generating set, chosen greedily by index.
  std::vector<Elem> generators() const;

  static FinGroup trivial() { return FinGroup(); }
  static FinGroup cyclic(std::size_t n);
  static FinGroup symmetric(std::size_t n);
  static FinGroup dihedral(std::size_t n);  // order 2n
  static FinGroup direct_product(const FinGroup& a, const FinGroup& b);

  friend bool operator==(const FinGroup& a, const FinGroup& b) {
    return a.labels_ == b.labels_ && a.table_ == b.table_ && a.identity_ == b.identity_;
  }

 private:
  void index_labels();

  std::vector<std::string> labels_;
  std::vector<Elem> table_;
  std::vector<Elem> inverse_;
  Elem identity_ = 0;
  std::unordered_map<std::string, Elem> index_;
};

/// Permutations of {0, ..., n-1}; p[i] is the image of i.
using Perm = std::vector<std::uint32_t>;

/// Cycle notation on points 1..n, "()" for the identity.
std::string cycle_notation(const Perm& p);

struct PermutationGroup {
  FinGroup group;
  std::vector<Perm> perms;  // perms[g] is the permutation of element g
};

/// Closure of `gens` in Sym(degree). Elements sorted lexicographically by
/// permutation, so the identity comes first. Product is composition: (ab)(i) = a(b(i)).
PermutationGroup permutation_group(std::size_t degree, const std::vector<Perm>& gens);

/// Parses cycle notation such as "(1 2)(3 4)" or "(1,2,3)" over `degree` points.
Perm parse_cycles(std::string_view text, std::size_t degree);

struct GroupHom {
  FinGroup source;
  FinGroup target;
  std::vector<Elem> map;

  Elem operator()(Elem g) const { return map[g]; }
  /// Throws NotAHomomorphism.
  void verify() const;
  bool injective() const;
  static GroupHom identity(const FinGroup& g);
  static GroupHom trivial(const FinGroup& from, const FinGroup& to);
};

/// Every homomorphism a -> b, by search over images of a generating set.
std::vector<GroupHom> all_homomorphisms(const FinGroup& a, const FinGroup& b);

}  // namespace eulcat

#endif  // EULCAT_GROUP_HPP
