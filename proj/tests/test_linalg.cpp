#include <doctest.h>

#include <random>

#include "bicrossed/linalg.hpp"
#include "bicrossed/quadratic.hpp"

using namespace bicrossed;

namespace {

Matrix random_matrix(std::size_t r, std::size_t c, std::mt19937& rng, int zeros = 2) {
  Field f;
  std::uniform_int_distribution<int> d(-3, 3);
  Matrix m{r, c, {}};
  for (std::size_t j = 0; j < c; ++j) {
    std::vector<Term> t;
    for (std::size_t i = 0; i < r; ++i) {
      int v = d(rng);
      if (std::abs(v) >= zeros) t.push_back({i, f.from_int(v)});
    }
    m.columns.push_back(Vec::from_terms(std::move(t)));
  }
  return m;
}

// Dense Gaussian elimination over Q, written independently of EchelonBasis.
std::size_t dense_rank(const Matrix& m) {
  std::vector<std::vector<Rational>> a(m.rows, std::vector<Rational>(m.cols));
  for (std::size_t j = 0; j < m.cols; ++j)
    for (const auto& t : m.columns[j].terms()) a[t.index][j] = t.coeff.coeffs()[0];
  std::size_t r = 0;
  for (std::size_t c = 0; c < m.cols && r < m.rows; ++c) {
    std::size_t p = r;
    while (p < m.rows && a[p][c].is_zero()) ++p;
    if (p == m.rows) continue;
    std::swap(a[p], a[r]);
    for (std::size_t i = 0; i < m.rows; ++i) {
      if (i == r || a[i][c].is_zero()) continue;
      Rational f = a[i][c] / a[r][c];
      for (std::size_t k = c; k < m.cols; ++k) a[i][k] -= f * a[r][k];
    }
    ++r;
  }
  return r;
}

}  // namespace

TEST_CASE("sparse vectors drop zeros and merge terms") {
  Field f;
  Vec v = Vec::from_terms({{3, f.from_int(2)}, {1, f.from_int(1)}, {3, f.from_int(-2)}});
  CHECK(v.size() == 1);
  CHECK(v.at(1) == f.one());
  CHECK(v.at(3).is_zero());
  Vec w = Vec::basis(1) - Vec::basis(1);
  CHECK(w.is_zero());
}

TEST_CASE("tensor of basis vectors") {
  Vec t = tensor(Vec::basis(2), Vec::basis(1), 4);
  CHECK(t == Vec::basis(9));
}

TEST_CASE("rank agrees with dense elimination") {
  std::mt19937 rng(3);
  for (int rep = 0; rep < 40; ++rep) {
    Matrix m = random_matrix(2 + rep % 5, 1 + rep % 7, rng, rep % 3);
    CHECK(rank(m) == dense_rank(m));
  }
}

TEST_CASE("inverse, nullspace and solve") {
  std::mt19937 rng(5);
  int invertible = 0;
  for (int rep = 0; rep < 30; ++rep) {
    Matrix m = random_matrix(4, 4, rng, 1);
    auto inv = inverse(m);
    CHECK(inv.has_value() == (dense_rank(m) == 4));
    if (inv) {
      ++invertible;
      CHECK(compose(m, *inv) == Matrix::identity(4));
      CHECK(compose(*inv, m) == Matrix::identity(4));
    }
    Matrix wide = random_matrix(3, 6, rng, 1);
    auto ns = nullspace(wide);
    CHECK(ns.size() == 6 - dense_rank(wide));
    for (const Vec& x : ns) CHECK(wide.apply(x).is_zero());
    Vec b = wide.apply(Vec::basis(2) + Vec::basis(5));
    auto x = solve(wide, b);
    REQUIRE(x.has_value());
    CHECK(wide.apply(*x) == b);
  }
  CHECK(invertible > 0);
}

TEST_CASE("affine equation systems") {
  Field f;
  // x0 + x1 - 3 = 0, x1 - x2 = 0 over 3 variables (index 3 = constant).
  std::vector<Vec> eqs = {
      Vec::from_terms({{0, f.one()}, {1, f.one()}, {3, f.from_int(-3)}}),
      Vec::from_terms({{1, f.one()}, {2, f.from_int(-1)}})};
  AffineSolution s = solve_equations(eqs, 3);
  REQUIRE(s.consistent);
  CHECK(s.kernel.size() == 1);
  auto check = [&](const Vec& x) {
    for (const Vec& e : eqs) {
      Scalar v = e.at(3);
      for (std::size_t i = 0; i < 3; ++i) v += e.at(i) * x.at(i);
      CHECK(v.is_zero());
    }
  };
  check(s.particular);
  check(s.particular + s.kernel[0] * f.from_int(5));
  eqs.push_back(Vec::from_terms({{0, f.one()}, {1, f.one()}}));
  CHECK_FALSE(solve_equations(eqs, 3).consistent);
}

TEST_CASE("quadratic systems with rational solutions") {
  Field f;
  // t1 (1 - 5 t0) = 0 with t1 != 0 forces t0 = 1/5.
  Poly2 p(2);
  p.add_linear(1, f.one());
  p.add(0, 1, f.from_int(-5));
  QuadraticSearch s = solve_quadratic({p}, 2, f, [](const Vec& t) { return !t.at(1).is_zero(); });
  REQUIRE(s.solution);
  CHECK(s.solution->at(0) == f.from_rational(Rational(1, 5)));
  CHECK(s.exhaustive);

  // t0^2 + 1 = 0 has no rational point; nothing may be accepted.
  Poly2 circle(1);
  circle.add(0, 0, f.one());
  circle.add_constant(f.one());
  QuadraticSearch none = solve_quadratic({circle}, 1, f, [](const Vec&) { return true; });
  CHECK_FALSE(none.solution);
  CHECK_FALSE(none.exhaustive);
}
