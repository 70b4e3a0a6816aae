#include "deformata/exactalg/matrix.hpp"

#include <numeric>

namespace deformata::exactalg {

namespace {

bool is_zero(const Scalar& s) { return s == 0; }
bool is_zero(const Poly& p) { return p.is_zero(); }
std::size_t weight(const Scalar&) { return 1; }
std::size_t weight(const Poly& p) { return p.size(); }

// Fraction-free echelon form in place. Every division by the previous pivot is
// exact because each entry is a minor of the original matrix. Returns the pivot
// columns; `sign` tracks row swaps.
template <typename T, typename Div>
std::vector<std::size_t> bareiss_echelon(Matrix<T>& m, const T& one, Div exact_div, int& sign) {
  std::vector<std::size_t> pivots;
  sign = 1;
  T prev = one;
  std::size_t row = 0;
  for (std::size_t col = 0; col < m.cols() && row < m.rows(); ++col) {
    std::size_t best = m.rows();
    for (std::size_t i = row; i < m.rows(); ++i) {
      if (is_zero(m(i, col))) continue;
      if (best == m.rows() || weight(m(i, col)) < weight(m(best, col))) best = i;
    }
    if (best == m.rows()) continue;
    if (best != row) {
      m.swap_rows(best, row);
      sign = -sign;
    }
    const T pivot = m(row, col);
    for (std::size_t i = row + 1; i < m.rows(); ++i) {
      const T lead = m(i, col);
      for (std::size_t j = col + 1; j < m.cols(); ++j) {
        T v = pivot * m(i, j) - lead * m(row, j);
        m(i, j) = exact_div(v, prev);
      }
      m(i, col) = T(one) - one;
    }
    prev = pivot;
    pivots.push_back(col);
    ++row;
  }
  return pivots;
}

ScalarMatrix integral_rows(const ScalarMatrix& m) {
  ScalarMatrix out = m;
  for (std::size_t i = 0; i < m.rows(); ++i) {
    mpz_class l = 1;
    for (std::size_t j = 0; j < m.cols(); ++j) l = lcm(l, mpz_class(m(i, j).get_den()));
    for (std::size_t j = 0; j < m.cols(); ++j) out(i, j) *= l;
  }
  return out;
}

Matrix<Poly> polynomial_rows(const RatFnMatrix& m) {
  Matrix<Poly> out(m.rows(), m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i) {
    Poly l = Poly::constant({}, 1);
    for (std::size_t j = 0; j < m.cols(); ++j) {
      const Poly& d = m(i, j).den();
      if (d.is_constant()) continue;
      l = divide_exact(l * d, gcd(l, d));
    }
    for (std::size_t j = 0; j < m.cols(); ++j) {
      const RatFn& e = m(i, j);
      out(i, j) = e.den().is_constant() ? e.num() * l : e.num() * divide_exact(l, e.den());
    }
  }
  return out;
}

Scalar scalar_div(const Scalar& a, const Scalar& b) { return a / b; }
Poly poly_div(const Poly& a, const Poly& b) { return divide_exact(a, b); }

}  // namespace

std::vector<ScalarVector> nullspace_scalar(const ScalarMatrix& m) {
  ScalarMatrix e = integral_rows(m);
  int sign = 1;
  auto pivots = bareiss_echelon(e, Scalar(1), scalar_div, sign);
  std::vector<bool> is_pivot(m.cols(), false);
  for (auto c : pivots) is_pivot[c] = true;

  std::vector<ScalarVector> basis;
  for (std::size_t free = 0; free < m.cols(); ++free) {
    if (is_pivot[free]) continue;
    ScalarVector v(m.cols(), 0);
    v[free] = 1;
    for (std::size_t r = pivots.size(); r-- > 0;) {
      const std::size_t pc = pivots[r];
      Scalar acc = 0;
      for (std::size_t j = pc + 1; j < m.cols(); ++j) {
        if (v[j] != 0) acc += e(r, j) * v[j];
      }
      v[pc] = -acc / e(r, pc);
    }
    basis.push_back(std::move(v));
  }
  return basis;
}

std::size_t rank_scalar(const ScalarMatrix& m) {
  ScalarMatrix e = integral_rows(m);
  int sign = 1;
  return bareiss_echelon(e, Scalar(1), scalar_div, sign).size();
}

Scalar determinant(const ScalarMatrix& m) {
  if (m.rows() != m.cols()) throw InputError("determinant of a non-square matrix");
  if (m.rows() == 0) return 1;
  ScalarMatrix e = m;
  int sign = 1;
  auto pivots = bareiss_echelon(e, Scalar(1), scalar_div, sign);
  if (pivots.size() < m.rows()) return 0;
  return e(m.rows() - 1, m.cols() - 1) * sign;
}

std::size_t rank_function_field(const RatFnMatrix& m) {
  Matrix<Poly> e = polynomial_rows(m);
  int sign = 1;
  return bareiss_echelon(e, Poly::constant({}, 1), poly_div, sign).size();
}

RatFn determinant(const RatFnMatrix& m) {
  if (m.rows() != m.cols()) throw InputError("determinant of a non-square matrix");
  if (m.rows() == 0) return RatFn(Poly::constant({}, 1));
  // Row i was scaled by the lcm of its denominators; undo that on the way out.
  Poly scale = Poly::constant({}, 1);
  for (std::size_t i = 0; i < m.rows(); ++i) {
    Poly l = Poly::constant({}, 1);
    for (std::size_t j = 0; j < m.cols(); ++j) {
      const Poly& d = m(i, j).den();
      if (d.is_constant()) continue;
      l = divide_exact(l * d, gcd(l, d));
    }
    scale *= l;
  }
  Matrix<Poly> e = polynomial_rows(m);
  int sign = 1;
  auto pivots = bareiss_echelon(e, Poly::constant({}, 1), poly_div, sign);
  if (pivots.size() < m.rows()) return RatFn(Poly(m(0, 0).num().shared_variables(), {}));
  return RatFn(e(m.rows() - 1, m.cols() - 1).scaled(sign), scale);
}

std::vector<RatFn> solve_left(const RatFnMatrix& a, const std::vector<RatFn>& b) {
  const std::size_t n = a.rows();
  if (a.cols() != n || b.size() != n) throw InputError("solve_left: dimension mismatch");
  // Work on the transposed system a^T x^T = b^T.
  RatFnMatrix t(n, n + 1);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) t(i, j) = a(j, i);
    t(i, n) = b[i];
  }
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t p = col;
    while (p < n && t(p, col).is_zero()) ++p;
    if (p == n) throw InputError("solve_left: singular matrix");
    t.swap_rows(p, col);
    const RatFn inv = RatFn(Poly::constant({}, 1)) / t(col, col);
    for (std::size_t j = col; j <= n; ++j) t(col, j) *= inv;
    for (std::size_t i = 0; i < n; ++i) {
      if (i == col || t(i, col).is_zero()) continue;
      const RatFn f = t(i, col);
      for (std::size_t j = col; j <= n; ++j) t(i, j) -= f * t(col, j);
    }
  }
  std::vector<RatFn> x(n);
  for (std::size_t i = 0; i < n; ++i) x[i] = t(i, n);
  return x;
}

RatFnMatrix multiply(const RatFnMatrix& a, const RatFnMatrix& b) {
  if (a.cols() != b.rows()) throw InputError("matrix product dimension mismatch");
  RatFnMatrix out(a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < b.cols(); ++j) {
      RatFn acc;
      for (std::size_t k = 0; k < a.cols(); ++k) acc += a(i, k) * b(k, j);
      out(i, j) = acc;
    }
  }
  return out;
}

std::vector<ScalarVector> row_basis(const std::vector<ScalarVector>& rows, std::size_t width) {
  std::vector<ScalarVector> m = rows;
  std::size_t r = 0;
  for (std::size_t col = 0; col < width && r < m.size(); ++col) {
    std::size_t p = r;
    while (p < m.size() && m[p][col] == 0) ++p;
    if (p == m.size()) continue;
    std::swap(m[p], m[r]);
    const Scalar inv = 1 / m[r][col];
    for (auto& x : m[r]) x *= inv;
    for (std::size_t i = 0; i < m.size(); ++i) {
      if (i == r || m[i][col] == 0) continue;
      const Scalar f = m[i][col];
      for (std::size_t j = 0; j < width; ++j) m[i][j] -= f * m[r][j];
    }
    ++r;
  }
  m.resize(r);
  return m;
}

}  // namespace deformata::exactalg
