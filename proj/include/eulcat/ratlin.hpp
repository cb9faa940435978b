#ifndef EULCAT_RATLIN_HPP
#define EULCAT_RATLIN_HPP

#include <optional>
#include <vector>

#include "eulcat/fincat.hpp"
#include "eulcat/rational.hpp"

namespace eulcat {

class RatMatrix {
 public:
  RatMatrix() = default;
  RatMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), a_(rows * cols) {}
  /// Throws DimensionMismatch on ragged input.
  static RatMatrix from_rows(const std::vector<std::vector<Rational>>& rows);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  Rational& operator()(std::size_t i, std::size_t j) { return a_[i * cols_ + j]; }
  const Rational& operator()(std::size_t i, std::size_t j) const { return a_[i * cols_ + j]; }

  RatMatrix transpose() const;
  friend bool operator==(const RatMatrix& a, const RatMatrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.a_ == b.a_;
  }

 private:
  std::size_t rows_ = 0, cols_ = 0;
  std::vector<Rational> a_;
};

std::vector<Rational> operator*(const RatMatrix& a, const std::vector<Rational>& x);

struct LinearSolution {
  bool consistent = false;
  bool unique = false;
  /// Free variables set to 0. Empty when inconsistent.
  std::vector<Rational> x;
};

/// Gauss-Jordan elimination, pivot = first non-zero entry in row order.
/// Throws DimensionMismatch.
LinearSolution solve_linear(const RatMatrix& a, const std::vector<Rational>& b);

enum class Side { Weighting, Coweighting };

struct Weighting {
  FinCat category;
  Side side = Side::Weighting;
  /// values[x] for each object id of `category`.
  std::vector<Rational> values;
  bool unique = true;

  Rational sum() const;
};

/// M[x][y] = |mor(x, y)|.
RatMatrix hom_count_matrix(const FinCat& c);

/// Checks Σ_y |mor(x,y)| q^y = 1 (or the transposed condition) for every object.
bool is_weighting(const FinCat& c, const std::vector<Rational>& q, Side side = Side::Weighting);

std::optional<Weighting> find_weighting(const FinCat& c);
std::optional<Weighting> find_coweighting(const FinCat& c);
/// Throw NoWeighting.
Weighting weighting(const FinCat& c);
Weighting coweighting(const FinCat& c);

/// Leinster's Euler characteristic. Throws NoEulerCharacteristic when either
/// side is missing.
Rational chi_L(const FinCat& c);
/// Same, or nullopt.
std::optional<Rational> try_chi_L(const FinCat& c);

}  // namespace eulcat

#endif  // EULCAT_RATLIN_HPP
