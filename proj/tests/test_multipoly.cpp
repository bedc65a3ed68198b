#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include <jumploci/multipoly.hpp>

using namespace jumploci;

namespace {

MultiPoly x() { return MultiPoly::variable(2, 0); }
MultiPoly y() { return MultiPoly::variable(2, 1); }
MultiPoly c2(long v) { return MultiPoly::constant(2, Rational(v)); }

}  // namespace

TEST_CASE("arithmetic and evaluation") {
  const MultiPoly p = x() * x() + x() * y().scaled(Rational(2)) - c2(3);
  CHECK(p.eval({Rational(2), Rational(1)}) == Rational(5));
  CHECK(p.total_degree() == 2);
  CHECK((p - p).is_zero());
  const MultiPoly q = (x() + y()) * (x() - y());
  CHECK(q == x() * x() - y() * y());
  CHECK(q.eval({Rational(3), Rational(2)}) == Rational(5));
  CHECK(MultiPoly(2).is_zero());
}

TEST_CASE("substitution agrees with evaluation") {
  const MultiPoly p = x() * x() * y() - y() + c2(1);
  // x -> s + t, y -> s - t
  const MultiPoly s = MultiPoly::variable(2, 0), t = MultiPoly::variable(2, 1);
  const MultiPoly sub = p.substitute({s + t, s - t}, 2);
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 20; ++trial) {
    const Rational a = rational(static_cast<long>(rng() % 11) - 5, 1 + static_cast<long>(rng() % 3));
    const Rational b = rational(static_cast<long>(rng() % 11) - 5, 1 + static_cast<long>(rng() % 3));
    CHECK(sub.eval({a, b}) == p.eval({a + b, a - b}));
  }
}

TEST_CASE("derivative") {
  const MultiPoly p = x() * x() * y();
  CHECK(p.derivative(0) == x() * y().scaled(Rational(2)));
  CHECK(p.derivative(1) == x() * x());
  CHECK(c2(5).derivative(0).is_zero());
}

TEST_CASE("normalization scales the lex-leading coefficient to one") {
  const MultiPoly p = x().scaled(Rational(-2)) + y().scaled(Rational(4));
  const MultiPoly n = p.normalized();
  CHECK(n == x() - y().scaled(Rational(2)));
  CHECK(n.normalized() == n);
  CHECK(MultiPoly(2).normalized().is_zero());
}

TEST_CASE("ordering is a strict total order on distinct polynomials") {
  const std::vector<MultiPoly> ps = {c2(1), x(), y(), x() + y(), x() * y(), x() - y()};
  for (size_t i = 0; i < ps.size(); ++i) {
    CHECK_FALSE(MultiPoly::less(ps[i], ps[i]));
    for (size_t j = 0; j < ps.size(); ++j) {
      if (i == j) continue;
      CHECK(MultiPoly::less(ps[i], ps[j]) != MultiPoly::less(ps[j], ps[i]));
    }
  }
}

TEST_CASE("determinants") {
  const MultiPoly a = MultiPoly::variable(4, 0), b = MultiPoly::variable(4, 1);
  const MultiPoly c = MultiPoly::variable(4, 2), d = MultiPoly::variable(4, 3);
  CHECK(poly_determinant({{a, b}, {c, d}}, 4) == a * d - b * c);

  // Vandermonde in three variables
  const int n = 3;
  std::vector<std::vector<MultiPoly>> v(n, std::vector<MultiPoly>(n, MultiPoly(n)));
  for (int i = 0; i < n; ++i) {
    MultiPoly pw = MultiPoly::constant(n, Rational(1));
    for (int j = 0; j < n; ++j) {
      v[i][j] = pw;
      pw = pw * MultiPoly::variable(n, i);
    }
  }
  const MultiPoly det = poly_determinant(v, n);
  const MultiPoly x0 = MultiPoly::variable(n, 0), x1 = MultiPoly::variable(n, 1),
                  x2 = MultiPoly::variable(n, 2);
  CHECK(det == (x1 - x0) * (x2 - x0) * (x2 - x1));

  CHECK(poly_determinant({}, 2) == MultiPoly::constant(2, Rational(1)));
}

TEST_CASE("printing") {
  const std::vector<std::string> names = {"x", "y"};
  CHECK((x() * x() - y().scaled(Rational(2)) + c2(1)).str(names) == "x^2-2*y+1");
  CHECK(MultiPoly(2).str(names) == "0");
  CHECK(x().scaled(Rational(1, 2)).str(names) == "1/2*x");
}
