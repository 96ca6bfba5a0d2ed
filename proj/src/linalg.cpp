#include "toric/linalg.hpp"

#include <algorithm>
#include <sstream>
#include <utility>

namespace toric {

Integer Covector::pair(const IntegerVector& v) const {
  if (v.size() != entries.size())
    throw DimensionError("covector pairing: length mismatch");
  Integer s = 0;
  for (std::size_t i = 0; i < v.size(); ++i) s += entries[i] * v[i];
  return s;
}

std::string to_string(const Integer& z) { return z.str(); }

std::string to_string(const Rational& q) {
  const Integer num = boost::multiprecision::numerator(q);
  const Integer den = boost::multiprecision::denominator(q);
  if (den == 1) return num.str();
  return num.str() + "/" + den.str();
}

Rational parse_rational(const std::string& text) {
  const auto slash = text.find('/');
  try {
    if (slash == std::string::npos) return Rational(Integer(text));
    Integer num(text.substr(0, slash));
    Integer den(text.substr(slash + 1));
    if (den == 0) throw std::invalid_argument("zero denominator");
    return Rational(num, den);
  } catch (const std::runtime_error&) {
    throw std::invalid_argument("not a rational: " + text);
  }
}

Integer determinant(const IntegerMatrix& m) {
  const std::size_t n = m.size();
  for (const auto& row : m)
    if (row.size() != n) throw DimensionError("determinant: matrix is not square");
  if (n == 0) return 1;

  IntegerMatrix a = m;
  Integer sign = 1;
  Integer prev = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (a[k][k] == 0) {
      std::size_t swap_row = k + 1;
      while (swap_row < n && a[swap_row][k] == 0) ++swap_row;
      if (swap_row == n) return 0;
      std::swap(a[k], a[swap_row]);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        // Bareiss: the division is exact.
        a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) / prev;
      }
      a[i][k] = 0;
    }
    prev = a[k][k];
  }
  return sign * a[n - 1][n - 1];
}

namespace {

// Solves A x = b for square A over the rationals; A given row-major.
std::vector<Rational> gauss_solve(std::vector<std::vector<Rational>> a,
                                  std::vector<Rational> b) {
  const std::size_t n = a.size();
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t pivot = col;
    while (pivot < n && a[pivot][col] == 0) ++pivot;
    if (pivot == n) throw SingularMatrixError("solve: singular basis");
    std::swap(a[pivot], a[col]);
    std::swap(b[pivot], b[col]);
    for (std::size_t r = 0; r < n; ++r) {
      if (r == col || a[r][col] == 0) continue;
      const Rational f = a[r][col] / a[col][col];
      for (std::size_t c = col; c < n; ++c) a[r][c] -= f * a[col][c];
      b[r] -= f * b[col];
    }
  }
  std::vector<Rational> x(n);
  for (std::size_t i = 0; i < n; ++i) x[i] = b[i] / a[i][i];
  return x;
}

void check_square_basis(std::span<const IntegerVector> basis) {
  const std::size_t d = basis.size();
  for (const auto& v : basis)
    if (v.size() != d) throw DimensionError("basis vectors must have length equal to their count");
}

}  // namespace

std::vector<Rational> solve_in_basis(std::span<const IntegerVector> basis,
                                     const IntegerVector& target) {
  check_square_basis(basis);
  const std::size_t d = basis.size();
  if (target.size() != d) throw DimensionError("solve_in_basis: target length mismatch");
  // Column i of the system matrix is basis[i].
  std::vector<std::vector<Rational>> a(d, std::vector<Rational>(d));
  std::vector<Rational> b(d);
  for (std::size_t r = 0; r < d; ++r) {
    for (std::size_t c = 0; c < d; ++c) a[r][c] = Rational(basis[c][r]);
    b[r] = Rational(target[r]);
  }
  return gauss_solve(std::move(a), std::move(b));
}

IntegerMatrix unimodular_inverse(const IntegerMatrix& m) {
  const std::size_t n = m.size();
  for (const auto& row : m)
    if (row.size() != n) throw DimensionError("inverse: matrix is not square");

  // Integer row reduction of [m | I] with unimodular steps only (Euclid on
  // each column), so the right half stays integral throughout.
  IntegerMatrix a(n, IntegerVector(2 * n, 0));
  for (std::size_t r = 0; r < n; ++r) {
    for (std::size_t c = 0; c < n; ++c) a[r][c] = m[r][c];
    a[r][n + r] = 1;
  }
  auto sub_row = [&](std::size_t dst, std::size_t src, Integer f) {
    for (std::size_t c = 0; c < 2 * n; ++c)
      if (a[src][c] != 0) a[dst][c] -= f * a[src][c];
  };
  for (std::size_t col = 0; col < n; ++col) {
    for (;;) {
      std::size_t best = n;
      for (std::size_t r = col; r < n; ++r) {
        if (a[r][col] == 0) continue;
        if (best == n || abs(a[r][col]) < abs(a[best][col])) best = r;
      }
      if (best == n) throw NotUnimodularError("inverse: singular matrix");
      std::swap(a[best], a[col]);
      bool done = true;
      for (std::size_t r = col + 1; r < n; ++r) {
        if (a[r][col] == 0) continue;
        sub_row(r, col, a[r][col] / a[col][col]);
        if (a[r][col] != 0) done = false;
      }
      if (done) break;
    }
    if (a[col][col] != 1 && a[col][col] != -1)
      throw NotUnimodularError("inverse: |det| != 1");
    if (a[col][col] == -1)
      for (auto& x : a[col]) x = -x;
  }
  for (std::size_t col = n; col-- > 0;)
    for (std::size_t r = 0; r < col; ++r)
      if (a[r][col] != 0) sub_row(r, col, a[r][col]);

  IntegerMatrix inv(n, IntegerVector(n));
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t c = 0; c < n; ++c) inv[r][c] = a[r][n + c];
  return inv;
}

std::vector<Covector> dual_basis(std::span<const IntegerVector> basis) {
  check_square_basis(basis);
  const std::size_t d = basis.size();
  // With the basis as rows of B, the dual functionals are the columns of B^-1.
  const IntegerMatrix inv = unimodular_inverse(IntegerMatrix(basis.begin(), basis.end()));
  std::vector<Covector> out(d);
  for (std::size_t i = 0; i < d; ++i) {
    out[i].entries.resize(d);
    for (std::size_t r = 0; r < d; ++r) out[i].entries[r] = inv[r][i];
  }
  return out;
}

Covector dual_functional(std::span<const IntegerVector> basis, std::size_t index) {
  if (index >= basis.size()) throw DimensionError("dual_functional: index out of range");
  return dual_basis(basis)[index];
}

Integer gcd_of(const IntegerVector& v) {
  Integer g = 0;
  for (const auto& x : v) g = boost::multiprecision::gcd(g, boost::multiprecision::abs(x));
  return g;
}

IntegerVector add(const IntegerVector& a, const IntegerVector& b) {
  if (a.size() != b.size()) throw DimensionError("add: length mismatch");
  IntegerVector r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] + b[i];
  return r;
}

IntegerVector scale(const Integer& s, const IntegerVector& v) {
  IntegerVector r(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) r[i] = s * v[i];
  return r;
}

IntegerVector mat_vec(const IntegerMatrix& m, const IntegerVector& v) {
  IntegerVector r(m.size(), 0);
  for (std::size_t i = 0; i < m.size(); ++i) {
    if (m[i].size() != v.size()) throw DimensionError("mat_vec: length mismatch");
    for (std::size_t j = 0; j < v.size(); ++j) r[i] += m[i][j] * v[j];
  }
  return r;
}

bool is_zero(const IntegerVector& v) {
  return std::all_of(v.begin(), v.end(), [](const Integer& x) { return x == 0; });
}

// ---------------------------------------------------------------------------

std::optional<std::vector<Rational>> lp_feasible_strict(
    std::span<const LinearConstraint> constraints, std::size_t num_unknowns) {
  for (const auto& c : constraints)
    if (c.form.size() != num_unknowns)
      throw DimensionError("lp_feasible_strict: constraint length mismatch");

  const std::size_t rows = constraints.size();
  if (rows == 0) return std::vector<Rational>(num_unknowns, Rational(0));

  // Columns: [p_0, q_0, p_1, q_1, ...] then one surplus per Positive row,
  // then one artificial per row, then the right-hand side.
  std::vector<std::size_t> surplus_col(rows, 0);
  std::size_t cols = 2 * num_unknowns;
  for (std::size_t i = 0; i < rows; ++i)
    if (constraints[i].kind == ConstraintKind::Positive) surplus_col[i] = cols++;
  const std::size_t first_artificial = cols;
  cols += rows;
  const std::size_t rhs = cols;

  std::vector<std::vector<Rational>> t(rows, std::vector<Rational>(cols + 1, Rational(0)));
  std::vector<std::size_t> basic(rows);
  for (std::size_t i = 0; i < rows; ++i) {
    const auto& c = constraints[i];
    for (std::size_t j = 0; j < num_unknowns; ++j) {
      t[i][2 * j] = Rational(c.form.entries[j]);
      t[i][2 * j + 1] = Rational(-c.form.entries[j]);
    }
    if (c.kind == ConstraintKind::Positive) {
      t[i][surplus_col[i]] = -1;
      t[i][rhs] = 1;
    }
    t[i][first_artificial + i] = 1;
    basic[i] = first_artificial + i;
  }

  // Reduced costs of the phase-one objective (sum of artificials).
  std::vector<Rational> cost(cols + 1, Rational(0));
  for (std::size_t i = 0; i < rows; ++i)
    for (std::size_t j = 0; j <= cols; ++j)
      if (j < first_artificial || j == rhs) cost[j] -= t[i][j];

  for (;;) {
    std::size_t enter = cols;
    for (std::size_t j = 0; j < cols; ++j) {
      if (cost[j] < 0) {
        enter = j;
        break;
      }
    }
    if (enter == cols) break;

    std::size_t leave = rows;
    Rational best_ratio;
    for (std::size_t i = 0; i < rows; ++i) {
      if (t[i][enter] <= 0) continue;
      const Rational ratio = t[i][rhs] / t[i][enter];
      if (leave == rows || ratio < best_ratio ||
          (ratio == best_ratio && basic[i] < basic[leave])) {
        leave = i;
        best_ratio = ratio;
      }
    }
    // Phase one is bounded below by zero, so a leaving row always exists.
    if (leave == rows) throw std::logic_error("lp_feasible_strict: unbounded phase one");

    const Rational piv = t[leave][enter];
    for (auto& x : t[leave]) x /= piv;
    for (std::size_t i = 0; i < rows; ++i) {
      if (i == leave || t[i][enter] == 0) continue;
      const Rational f = t[i][enter];
      for (std::size_t j = 0; j <= cols; ++j)
        if (t[leave][j] != 0) t[i][j] -= f * t[leave][j];
    }
    if (cost[enter] != 0) {
      const Rational f = cost[enter];
      for (std::size_t j = 0; j <= cols; ++j)
        if (t[leave][j] != 0) cost[j] -= f * t[leave][j];
    }
    basic[leave] = enter;
  }

  // cost[rhs] holds minus the phase-one optimum.
  if (cost[rhs] != 0) return std::nullopt;

  std::vector<Rational> value(cols, Rational(0));
  for (std::size_t i = 0; i < rows; ++i) value[basic[i]] = t[i][rhs];
  std::vector<Rational> x(num_unknowns);
  for (std::size_t j = 0; j < num_unknowns; ++j) x[j] = value[2 * j] - value[2 * j + 1];

  for (const auto& c : constraints) {
    Rational s = 0;
    for (std::size_t j = 0; j < num_unknowns; ++j) s += Rational(c.form.entries[j]) * x[j];
    const bool ok = c.kind == ConstraintKind::Positive ? s >= 1 : s == 0;
    if (!ok) throw std::logic_error("lp_feasible_strict: witness failed substitution");
  }
  return x;
}

}  // namespace toric
