#include "eulcat/eulerchar.hpp"

#include <functional>
#include <optional>

#include "eulcat/error.hpp"
#include "eulcat/ratlin.hpp"

namespace eulcat {

Rational EulerVector::sum() const {
  Rational s = 0;
  for (const auto& [k, v] : values) s += v;
  return s;
}

BigInt chi_scwol(const FinCat& x) { return path_counts(x).alternating_sum(); }

EulerVector chi_f_scwol(const FinCat& x) {
  const PathCounts pc = path_counts(x);
  EulerVector ev{x, {}};
  for (ObjId a = 0; a < pc.skeleton.num_objects(); ++a) {
    BigInt s = 0;
    for (std::size_t n = 0; n < pc.starts[a].size(); ++n) {
      if (n % 2 == 0)
        s += pc.starts[a][n];
      else
        s -= pc.starts[a][n];
    }
    ev.values[pc.skeleton.object_name(a)] = Rational(s);
  }
  return ev;
}

Rational groupoid_chi2(const FinCat& g) {
  if (!is_groupoid(g)) throw Error(ErrorKind::NotGroupoid, "groupoid cardinality needs every morphism invertible");
  Rational s = 0;
  for (const auto& cls : iso_classes(g)) s += Rational(1, static_cast<unsigned long>(cls.aut.order()));
  return s;
}

Rational chi2_free_EI(const FinCat& c, FreenessWitness* witness) {
  const FinCat g = skeleton(c).gamma;
  if (!is_EI(g)) throw Error(ErrorKind::HypothesisNotMet, "category is not EI");
  const std::size_t n = g.num_objects();
  std::vector<unsigned long> aut(n);
  for (ObjId y = 0; y < n; ++y) aut[y] = static_cast<unsigned long>(g.hom(y, y).size());
  for (ObjId x = 0; x < n; ++x) {
    for (ObjId y = 0; y < n; ++y) {
      for (MorId a : g.hom(x, y)) {
        if (g.is_identity(a)) continue;
        for (MorId u : g.hom(y, y)) {
          if (g.is_identity(u) || g.compose(u, a) != a) continue;
          if (witness) *witness = {g.morphism_name(a), g.morphism_name(u)};
          throw Error(ErrorKind::HypothesisNotMet, "automorphism " + g.morphism_name(u) + " fixes morphism " +
                                                       g.morphism_name(a) + ", so the action is not free");
        }
      }
    }
  }
  // S(x) = Σ over distinct-object paths starting at x of the signed weight;
  // the hom graph of a skeletal EI category is acyclic, so memoized
  // depth-first search terminates
  std::vector<std::optional<Rational>> memo(n);
  std::vector<char> on_path(n, 0);
  std::function<Rational(ObjId)> from = [&](ObjId x) -> Rational {
    if (memo[x]) return *memo[x];
    if (on_path[x]) throw Error(ErrorKind::InternalError, "hom graph of a skeletal EI category has a cycle");
    on_path[x] = 1;
    Rational rest = 0;
    for (ObjId y = 0; y < n; ++y) {
      if (y == x) continue;
      const auto h = g.hom(x, y).size();
      if (h) rest += Rational(static_cast<unsigned long>(h)) * from(y);
    }
    on_path[x] = 0;
    memo[x] = (1 - rest) / Rational(aut[x]);
    return *memo[x];
  };
  Rational total = 0;
  for (ObjId x = 0; x < n; ++x) total += from(x);
  const Rational leinster = chi_L(c);
  if (leinster != total)
    throw Error(ErrorKind::InternalError,
                "free EI path sum " + to_string(total) + " differs from chi_L " + to_string(leinster));
  return total;
}

Rational chi2(const FinCat& c) {
  if (is_groupoid(c)) return groupoid_chi2(c);
  if (is_scwol(c)) return Rational(chi_scwol(c));
  try {
    return chi2_free_EI(c);
  } catch (const Error& e) {
    if (e.kind() != ErrorKind::HypothesisNotMet) throw;
    throw Error(ErrorKind::NoEulerCharacteristic,
                std::string("no computable L2 Euler characteristic: ") + e.what());
  }
}

}  // namespace eulcat
