#ifndef EULCAT_TESTS_RANDOM_INSTANCES_HPP
#define EULCAT_TESTS_RANDOM_INSTANCES_HPP

#include <random>
#include <set>
#include <vector>

#include "eulcat/constructions.hpp"
#include "eulcat/fincat.hpp"
#include "eulcat/group.hpp"
#include "eulcat/groupact.hpp"
#include "eulcat/hocolim.hpp"

namespace eulcat::testing {

using Rng = std::mt19937_64;

std::size_t uniform(Rng& rng, std::size_t lo, std::size_t hi);  // inclusive
bool coin(Rng& rng, double p = 0.5);

struct FreeDag {
  FinCat category;
  std::vector<Edge> edges;
  std::vector<std::vector<std::size_t>> words;  // per morphism, first edge first
};

/// Edges only go from lower to higher index; parallel edges allowed.
FreeDag random_free_dag(Rng& rng, std::size_t n, std::size_t max_edges);
/// Transitive closure of a random DAG on n elements.
FinCat random_poset(Rng& rng, std::size_t n);
/// Free DAG, poset or an inflation of one of those (non-skeletal).
FinCat random_scwol(Rng& rng, std::size_t max_objects, bool skeletal_only = false);

/// A group of order at most max_order from a fixed pool.
FinGroup random_group(Rng& rng, std::size_t max_order);
/// Closure of a few random elements.
std::vector<Elem> random_subgroup(Rng& rng, const FinGroup& g);

/// Coproduct of trivialized groupoids: component c has `objects[c]` objects
/// and vertex group groups[c]. Morphism (x -> y, a) within a component, with
/// (y -> z, b)∘(x -> y, a) = (x -> z, b a).
struct GroupoidSpec {
  std::vector<std::size_t> objects;
  std::vector<FinGroup> groups;
  std::string prefix;

  std::size_t total_objects() const;
  ObjId object(std::size_t comp, std::size_t x) const;
  MorId morphism(std::size_t comp, std::size_t x, std::size_t y, Elem a) const;
  FinCat build() const;
};

GroupoidSpec random_groupoid(Rng& rng, std::size_t max_objects, const std::string& prefix);
/// Σ_c 1/|groups[c]|.
Rational groupoid_chi_oracle(const GroupoidSpec& s);

/// Componentwise: a target component, object images, a homomorphism and a gauge.
CatFunctor random_groupoid_functor(Rng& rng, const GroupoidSpec& s, const FinCat& sc, const GroupoidSpec& t,
                                   const FinCat& tc);

/// Index is a random scwol on at most max_index objects, vertices random
/// groupoids with at most 4 objects.
StrictDiagram random_groupoid_diagram(Rng& rng, std::size_t max_index);

/// Development of base with subgroups H_y and voltages c_a: objects (y, gH_y),
/// morphisms (a, gH_y) ending at (t a, g c_a H_{t a}). Requires
/// c_a⁻¹ H_y c_a ⊆ H_{t a} and c_{b∘a} ∈ c_a c_b H_{t b}.
ScwolAction development(const FinCat& base, const FinGroup& g, const std::vector<std::vector<Elem>>& stab,
                        const std::vector<Elem>& voltage);

/// A random development; free when `free` is set. At most max_objects objects.
ScwolAction random_action(Rng& rng, bool free, std::size_t max_objects, std::size_t max_order = 6);

/// Union of coset spaces G/H with |G| ≤ max_order.
ScwolAction random_gset(Rng& rng, std::size_t max_order);

/// Random subsets of {0..universe-1}.
std::vector<std::set<std::size_t>> random_set_system(Rng& rng, std::size_t count, std::size_t universe);

}  // namespace eulcat::testing

#endif  // EULCAT_TESTS_RANDOM_INSTANCES_HPP
