#include "eulcat/ratlin.hpp"

#include "eulcat/error.hpp"

namespace eulcat {

RatMatrix RatMatrix::from_rows(const std::vector<std::vector<Rational>>& rows) {
  const std::size_t c = rows.empty() ? 0 : rows[0].size();
  RatMatrix m(rows.size(), c);
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (rows[i].size() != c) throw Error(ErrorKind::DimensionMismatch, "ragged matrix rows");
    for (std::size_t j = 0; j < c; ++j) m(i, j) = rows[i][j];
  }
  return m;
}

RatMatrix RatMatrix::transpose() const {
  RatMatrix t(cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
  return t;
}

std::vector<Rational> operator*(const RatMatrix& a, const std::vector<Rational>& x) {
  if (x.size() != a.cols()) throw Error(ErrorKind::DimensionMismatch, "matrix-vector size mismatch");
  std::vector<Rational> y(a.rows());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j)
      if (a(i, j) != 0) y[i] += a(i, j) * x[j];
  return y;
}

LinearSolution solve_linear(const RatMatrix& a, const std::vector<Rational>& b) {
  if (b.size() != a.rows()) throw Error(ErrorKind::DimensionMismatch, "right-hand side has the wrong length");
  const std::size_t m = a.rows(), n = a.cols();
  RatMatrix w(m, n + 1);
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = 0; j < n; ++j) w(i, j) = a(i, j);
    w(i, n) = b[i];
  }
  std::vector<std::size_t> pivot_col;
  std::size_t row = 0;
  for (std::size_t col = 0; col < n && row < m; ++col) {
    std::size_t p = row;
    while (p < m && w(p, col) == 0) ++p;
    if (p == m) continue;
    if (p != row)
      for (std::size_t j = 0; j <= n; ++j) std::swap(w(p, j), w(row, j));
    const Rational inv = 1 / w(row, col);
    for (std::size_t j = col; j <= n; ++j) w(row, j) *= inv;
    for (std::size_t i = 0; i < m; ++i) {
      if (i == row || w(i, col) == 0) continue;
      const Rational factor = w(i, col);
      for (std::size_t j = col; j <= n; ++j) w(i, j) -= factor * w(row, j);
    }
    pivot_col.push_back(col);
    ++row;
  }
  LinearSolution s;
  for (std::size_t i = row; i < m; ++i)
    if (w(i, n) != 0) return s;
  s.consistent = true;
  s.unique = pivot_col.size() == n;
  s.x.assign(n, Rational(0));
  for (std::size_t r = 0; r < pivot_col.size(); ++r) s.x[pivot_col[r]] = w(r, n);
  return s;
}

Rational Weighting::sum() const {
  Rational s = 0;
  for (const auto& v : values) s += v;
  return s;
}

RatMatrix hom_count_matrix(const FinCat& c) {
  const std::size_t n = c.num_objects();
  RatMatrix m(n, n);
  for (ObjId x = 0; x < n; ++x)
    for (ObjId y = 0; y < n; ++y) m(x, y) = static_cast<unsigned long>(c.hom(x, y).size());
  return m;
}

bool is_weighting(const FinCat& c, const std::vector<Rational>& q, Side side) {
  if (q.size() != c.num_objects()) return false;
  RatMatrix m = hom_count_matrix(c);
  if (side == Side::Coweighting) m = m.transpose();
  for (const auto& v : m * q)
    if (v != 1) return false;
  return true;
}

namespace {
std::optional<Weighting> solve_side(const FinCat& c, Side side) {
  RatMatrix m = hom_count_matrix(c);
  if (side == Side::Coweighting) m = m.transpose();
  auto s = solve_linear(m, std::vector<Rational>(c.num_objects(), Rational(1)));
  if (!s.consistent) return std::nullopt;
  return Weighting{c, side, std::move(s.x), s.unique};
}
}  // namespace

std::optional<Weighting> find_weighting(const FinCat& c) { return solve_side(c, Side::Weighting); }

std::optional<Weighting> find_coweighting(const FinCat& c) { return solve_side(c, Side::Coweighting); }

Weighting weighting(const FinCat& c) {
  if (auto w = find_weighting(c)) return *w;
  throw Error(ErrorKind::NoWeighting, "the weighting equations have no solution");
}

Weighting coweighting(const FinCat& c) {
  if (auto w = find_coweighting(c)) return *w;
  throw Error(ErrorKind::NoWeighting, "the coweighting equations have no solution");
}

std::optional<Rational> try_chi_L(const FinCat& c) {
  auto w = find_weighting(c);
  auto cw = find_coweighting(c);
  if (!w || !cw) return std::nullopt;
  Rational a = w->sum(), b = cw->sum();
  if (a != b)
    throw Error(ErrorKind::InternalError,
                "weighting sum " + to_string(a) + " differs from coweighting sum " + to_string(b));
  return a;
}

Rational chi_L(const FinCat& c) {
  if (auto v = try_chi_L(c)) return *v;
  throw Error(ErrorKind::NoEulerCharacteristic,
              find_weighting(c) ? "category has no coweighting" : "category has no weighting");
}

}  // namespace eulcat
