#include <doctest.h>

#include <numeric>
#include <random>

#include "toric/linalg.hpp"

using namespace toric;

namespace {

// Leibniz expansion over all permutations.
Integer leibniz(const IntegerMatrix& m) {
  const std::size_t n = m.size();
  std::vector<std::size_t> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  Integer total = 0;
  do {
    int inversions = 0;
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = i + 1; j < n; ++j)
        if (perm[i] > perm[j]) ++inversions;
    Integer term = inversions % 2 ? -1 : 1;
    for (std::size_t i = 0; i < n; ++i) term *= m[i][perm[i]];
    total += term;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return total;
}

// a . x >= b
struct Ineq {
  std::vector<Rational> a;
  Rational b;
};

// Fourier-Motzkin elimination: true iff the system has a rational solution.
bool fm_feasible(std::vector<Ineq> sys, std::size_t n) {
  for (std::size_t v = 0; v < n; ++v) {
    std::vector<Ineq> pos, neg, keep;
    for (auto& q : sys) {
      if (q.a[v] > 0)
        pos.push_back(q);
      else if (q.a[v] < 0)
        neg.push_back(q);
      else
        keep.push_back(q);
    }
    for (const auto& p : pos)
      for (const auto& q : neg) {
        const Rational sp = -q.a[v], sq = p.a[v];
        Ineq r{std::vector<Rational>(n), sp * p.b + sq * q.b};
        for (std::size_t j = 0; j < n; ++j) r.a[j] = sp * p.a[j] + sq * q.a[j];
        keep.push_back(std::move(r));
      }
    sys = std::move(keep);
  }
  for (const auto& q : sys)
    if (q.b > 0) return false;
  return true;
}

bool fm_oracle(const std::vector<LinearConstraint>& cs, std::size_t n) {
  std::vector<Ineq> sys;
  for (const auto& c : cs) {
    std::vector<Rational> a(n), neg(n);
    for (std::size_t j = 0; j < n; ++j) {
      a[j] = Rational(c.form.entries[j]);
      neg[j] = -a[j];
    }
    if (c.kind == ConstraintKind::Positive) {
      sys.push_back({a, 1});
    } else {
      sys.push_back({a, 0});
      sys.push_back({neg, 0});
    }
  }
  return fm_feasible(sys, n);
}

}  // namespace

TEST_CASE("determinant examples") {
  CHECK(determinant({{1, 0, 0}, {0, 1, 0}, {0, 0, 1}}) == 1);
  CHECK(determinant({{1, 0}, {0, -1}}) == -1);
  CHECK(determinant({{1, 1, 0}, {0, 1, 1}, {1, 0, 1}}) == 2);
  CHECK(determinant({{0, 1}, {1, 0}}) == -1);
  CHECK(determinant({{2, 4}, {1, 2}}) == 0);
  CHECK_THROWS_AS(determinant({{1, 2, 3}, {4, 5, 6}}), DimensionError);
}

TEST_CASE("determinant agrees with the Leibniz expansion") {
  std::mt19937_64 rng(11);
  std::uniform_int_distribution<int> entry(-9, 9);
  for (int trial = 0; trial < 300; ++trial) {
    const std::size_t n = 1 + trial % 5;
    IntegerMatrix m(n, IntegerVector(n));
    for (auto& row : m)
      for (auto& x : row) x = entry(rng);
    CHECK(determinant(m) == leibniz(m));
  }
}

TEST_CASE("determinant does not overflow machine words") {
  const Integer big = Integer(1) << 80;
  CHECK(determinant({{big, 1}, {1, big}}) == big * big - 1);
}

TEST_CASE("solve_in_basis examples") {
  const std::vector<IntegerVector> e{{1, 0}, {0, 1}};
  CHECK(solve_in_basis(e, {3, 5}) == std::vector<Rational>{3, 5});
  const std::vector<IntegerVector> b{{1, 1}, {0, 1}};
  CHECK(solve_in_basis(b, {2, 3}) == std::vector<Rational>{2, 1});
  const std::vector<IntegerVector> h{{1, 0}, {0, 2}};
  CHECK(solve_in_basis(h, {1, 1}) == std::vector<Rational>{1, Rational(1, 2)});
  const std::vector<IntegerVector> sing{{1, 2}, {2, 4}};
  CHECK_THROWS_AS(solve_in_basis(sing, {1, 0}), SingularMatrixError);
}

TEST_CASE("solve_in_basis recombines to the target") {
  std::mt19937_64 rng(12);
  std::uniform_int_distribution<int> entry(-6, 6);
  int solved = 0;
  for (int trial = 0; trial < 200; ++trial) {
    const std::size_t n = 2 + trial % 4;
    std::vector<IntegerVector> basis(n, IntegerVector(n));
    for (auto& v : basis)
      for (auto& x : v) x = entry(rng);
    IntegerVector target(n);
    for (auto& x : target) x = entry(rng);
    if (determinant(basis) == 0) continue;
    const auto c = solve_in_basis(basis, target);
    for (std::size_t j = 0; j < n; ++j) {
      Rational s = 0;
      for (std::size_t i = 0; i < n; ++i) s += c[i] * basis[i][j];
      CHECK(s == target[j]);
    }
    ++solved;
  }
  CHECK(solved > 100);
}

TEST_CASE("dual_functional examples") {
  const std::vector<IntegerVector> e3{{1, 0, 0}, {0, 1, 0}, {0, 0, 1}};
  CHECK(dual_functional(e3, 1).entries == IntegerVector{0, 1, 0});
  const std::vector<IntegerVector> b{{1, 1}, {0, 1}};
  CHECK(dual_functional(b, 0).entries == IntegerVector{1, 0});
  CHECK(dual_functional(b, 1).entries == IntegerVector{-1, 1});
  const std::vector<IntegerVector> h{{1, 0}, {0, 2}};
  CHECK_THROWS_AS(dual_functional(h, 0), NotUnimodularError);
}

TEST_CASE("dual functionals of random unimodular bases pair to the Kronecker delta") {
  std::mt19937_64 rng(13);
  std::uniform_int_distribution<int> f(-3, 3);
  for (int trial = 0; trial < 100; ++trial) {
    const std::size_t n = 2 + trial % 5;
    IntegerMatrix m(n, IntegerVector(n, 0));
    for (std::size_t i = 0; i < n; ++i) m[i][i] = 1;
    for (std::size_t step = 0; step < 4 * n; ++step) {
      const std::size_t i = rng() % n, j = rng() % n;
      if (i == j) continue;
      const int c = f(rng);
      for (std::size_t k = 0; k < n; ++k) m[i][k] += c * m[j][k];
    }
    for (std::size_t i = 0; i < n; ++i) {
      const Covector d = dual_functional(m, i);
      for (std::size_t j = 0; j < n; ++j) CHECK(d.pair(m[j]) == (i == j ? 1 : 0));
    }
    const IntegerMatrix inv = unimodular_inverse(m);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) {
        Integer s = 0;
        for (std::size_t k = 0; k < n; ++k) s += m[i][k] * inv[k][j];
        CHECK(s == (i == j ? 1 : 0));
      }
  }
}

TEST_CASE("gcd and vector helpers") {
  CHECK(gcd_of({4, -6, 10}) == 2);
  CHECK(gcd_of({0, 0}) == 0);
  CHECK(gcd_of({-1, 0}) == 1);
  CHECK(add({1, 2}, {3, -4}) == IntegerVector{4, -2});
  CHECK(scale(-2, {1, 3}) == IntegerVector{-2, -6});
  CHECK(mat_vec({{1, 2}, {3, 4}}, {1, 1}) == IntegerVector{3, 7});
  CHECK(is_zero({0, 0, 0}));
}

TEST_CASE("lp_feasible_strict examples") {
  using K = ConstraintKind;
  {
    const std::vector<LinearConstraint> cs{{Covector{{1}}, K::Positive}};
    auto w = lp_feasible_strict(cs, 1);
    REQUIRE(w);
    CHECK((*w)[0] >= 1);
  }
  {
    const std::vector<LinearConstraint> cs{{Covector{{1}}, K::Positive}, {Covector{{-1}}, K::Positive}};
    CHECK_FALSE(lp_feasible_strict(cs, 1));
  }
  {
    const std::vector<LinearConstraint> cs{{Covector{{1, -1}}, K::Zero}, {Covector{{1, 0}}, K::Positive}};
    auto w = lp_feasible_strict(cs, 2);
    REQUIRE(w);
    CHECK((*w)[0] == (*w)[1]);
    CHECK((*w)[0] >= 1);
  }
  CHECK_THROWS_AS(lp_feasible_strict(std::vector<LinearConstraint>{{Covector{{1, 2}}, K::Positive}}, 1),
                  DimensionError);
}

TEST_CASE("lp_feasible_strict agrees with Fourier-Motzkin elimination") {
  std::mt19937_64 rng(14);
  std::uniform_int_distribution<int> entry(-2, 2);
  int feasible = 0, infeasible = 0;
  for (int trial = 0; trial < 400; ++trial) {
    const std::size_t n = 1 + trial % 3;
    const std::size_t m = 1 + (trial / 3) % 5;
    std::vector<LinearConstraint> cs;
    for (std::size_t i = 0; i < m; ++i) {
      IntegerVector f(n);
      for (auto& x : f) x = entry(rng);
      cs.push_back({Covector{f}, rng() % 4 == 0 ? ConstraintKind::Zero : ConstraintKind::Positive});
    }
    const auto w = lp_feasible_strict(cs, n);
    CHECK(w.has_value() == fm_oracle(cs, n));
    if (w) {
      ++feasible;
      for (const auto& c : cs) {
        Rational s = 0;
        for (std::size_t j = 0; j < n; ++j) s += (*w)[j] * c.form.entries[j];
        if (c.kind == ConstraintKind::Positive)
          CHECK(s >= 1);
        else
          CHECK(s == 0);
      }
    } else {
      ++infeasible;
    }
  }
  CHECK(feasible > 20);
  CHECK(infeasible > 20);
}

TEST_CASE("rational formatting") {
  CHECK(to_string(Rational(-3, 2)) == "-3/2");
  CHECK(to_string(Rational(4, 2)) == "2");
  CHECK(to_string(Rational(0)) == "0");
  CHECK(parse_rational("-6/4") == Rational(-3, 2));
  CHECK(parse_rational("7") == Rational(7));
}
