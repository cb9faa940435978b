#ifndef EULCAT_EULERCHAR_HPP
#define EULCAT_EULERCHAR_HPP

#include <map>
#include <string>

#include "eulcat/fincat.hpp"
#include "eulcat/rational.hpp"

namespace eulcat {

/// Components keyed by iso-class representative name.
struct EulerVector {
  FinCat category;
  std::map<std::string, Rational> values;

  Rational sum() const;
};

/// Σ (-1)^n c_n over the skeleton. Throws NotScwol.
BigInt chi_scwol(const FinCat& x);

/// Component at x = Σ (-1)^n (n-paths starting at x). Throws NotScwol.
EulerVector chi_f_scwol(const FinCat& x);

/// Σ 1/|aut| over iso classes. Throws NotGroupoid.
Rational groupoid_chi2(const FinCat& g);

struct FreenessWitness {
  std::string morphism;      // a
  std::string automorphism;  // u with u∘a = a
};

/// Distinct-object path sum for EI categories with free left automorphism
/// actions. Throws HypothesisNotMet; fills `witness` when the action is not
/// free. Cross-checked against chi_L.
Rational chi2_free_EI(const FinCat& c, FreenessWitness* witness = nullptr);

/// Whichever computable formula applies: groupoid cardinality, the scwol path
/// sum, or the free EI path sum. Throws NoEulerCharacteristic.
Rational chi2(const FinCat& c);

}  // namespace eulcat

#endif  // EULCAT_EULERCHAR_HPP
