#ifndef EULCAT_CONSTRUCTIONS_HPP
#define EULCAT_CONSTRUCTIONS_HPP

#include <functional>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "eulcat/fincat.hpp"
#include "eulcat/group.hpp"

namespace eulcat {

/// Objects as given, identities only.
FinCat discrete(const std::vector<std::string>& objects);

/// One object "*", morphisms labelled by the elements, composition = product.
FinCat one_object(const FinGroup& g);

/// One-object category of a finite monoid. table[a][b] = a·b, composition g∘f = g·f.
FinCat one_object_monoid(const std::vector<std::string>& labels, const std::vector<std::vector<std::size_t>>& table,
                         std::size_t unit);

/// The monoid ({1,0}, ×) as a one-object category.
FinCat multiplicative_z2();

/// Poset on `elements`; `leq(a, b)` must be a partial order. Morphisms
/// a -> b named "a->b", identities "id_a".
FinCat poset(const std::vector<std::string>& elements, const std::function<bool(std::size_t, std::size_t)>& leq);

FinCat opposite(const FinCat& c);

/// Objects "(c,d)", morphisms "(f,g)".
FinCat product(const FinCat& a, const FinCat& b);

/// Disjoint union; names must not clash.
FinCat coproduct(const FinCat& a, const FinCat& b);

struct Edge {
  std::string name;
  std::size_t source;
  std::size_t target;
};

/// Free category on a finite acyclic multigraph. Paths are named by their
/// edges joined with '.', last edge first ("e2.e1"). Throws NotScwol on cycles.
/// `words`, if given, receives each morphism's edge indices, first edge first.
FinCat free_category(const std::vector<std::string>& objects, const std::vector<Edge>& edges,
                     std::vector<std::vector<std::size_t>>* words = nullptr);

/// For each new object k: (name, copy_of[k]). The result has
/// hom(k, l) = hom_c(copy_of[k], copy_of[l]); morphism names are
/// "<f>@<k>,<l>", identities "id_<k>". `projection` receives the functor to c.
FinCat inflate(const FinCat& c, const std::vector<std::pair<std::string, ObjId>>& copies,
               CatFunctor* projection = nullptr);

/// An isomorphism a -> b by backtracking search, if one exists.
std::optional<CatFunctor> find_isomorphism(const FinCat& a, const FinCat& b);

/// Functor between one-object categories induced by a homomorphism.
CatFunctor one_object_functor(const FinCat& a, const FinCat& b, const GroupHom& h);

// Named categories.

FinCat terminal_category();               // object "*"
FinCat parallel_pair();                    // f, g : j -> k
FinCat pushout_scwol();                    // g : j -> k, h : j -> l
FinCat arrow_category();                   // a : 0 -> 1
FinCat terminal_object_poset();            // a -> t
/// Opposite of the poset of non-empty subsets of {0..q}: objects "{0,1}", an
/// arrow J -> K iff K ⊆ J.
FinCat subsets_poset(std::size_t q);
/// x -h-> z, x -g-> y, x' -g'-> y, x' -h'-> z.
FinCat circle_scwol();
/// Objects x, y; mor(x,y) = {1,2,3,4}; aut(x) trivial; aut(y) = G acting on
/// {1,2,3,4} through `perms`.
FinCat biset_category(const PermutationGroup& g);
FinCat gamma1();  // aut(y) = <(1 2 3 4)>
FinCat gamma2();  // aut(y) = <(1 2),(3 4)>

/// Connected groupoid: objects `objects`, hom(x,y) = group elements, named
/// "<g>:x>y"; composition multiplies (later element on the left).
FinCat trivialized_groupoid(const std::vector<std::string>& objects, const FinGroup& g);

}  // namespace eulcat

#endif  // EULCAT_CONSTRUCTIONS_HPP
