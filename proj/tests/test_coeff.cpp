#include <doctest.h>

#include <random>

#include "superlax/model.hpp"
#include "superlax/serialize.hpp"

using namespace superlax;

namespace {

// random rational function with small atoms; exponential charts also allow
// bare-coordinate atoms
RatCoeff random_coeff(std::mt19937_64& rng, int n, bool var_atoms) {
  std::uniform_int_distribution<long> coef(-4, 4);
  int nv = n + 2;
  Poly num(nv);
  int terms = 1 + static_cast<int>(rng() % 3);
  for (int t = 0; t < terms; ++t) {
    Exponents e(nv, 0);
    for (int v = 0; v < nv; ++v) e[v] = rng() % 3;
    num.add_term(e, Scalar::from(rational(coef(rng), 1 + (rng() % 3))));
  }
  std::map<Atom, std::uint32_t> den;
  for (int i = 1; i <= n; ++i)
    for (int j = i + 1; j <= n; ++j)
      if (rng() % 3 == 0) den[Atom::diff(i, j)] = 1 + (rng() % 2);
  if (var_atoms && rng() % 2) den[Atom::var(1 + (rng() % n))] = 1;
  return RatCoeff::fraction(std::move(num), std::move(den), n);
}

std::vector<Scalar> random_point(std::mt19937_64& rng, int n) {
  // distinct small rationals keep every atom nonzero
  std::vector<Scalar> point;
  long base = 2 + static_cast<long>(rng() % 5);
  for (int i = 0; i < n + 2; ++i)
    point.push_back(Scalar::from(rational(base + 3 * i + (rng() % 2), 2)));
  return point;
}

}  // namespace

TEST_CASE("antisymmetry of difference atoms") {
  int n = 2;
  RatCoeff f = RatCoeff::inv_diff(n, 1, 2) + RatCoeff::inv_diff(n, 2, 1);
  CHECK(f.is_zero());
}

TEST_CASE("atom cancellation is exact") {
  int n = 2;
  RatCoeff diff = RatCoeff::coordinate(n, 1) - RatCoeff::coordinate(n, 2);
  RatCoeff prod = diff * RatCoeff::inv_diff(n, 1, 2);
  CHECK(prod == RatCoeff::one(n));
  RatCoeff l = RatCoeff::param_l(n);
  CHECK((l * l - l * l).is_zero());
}

TEST_CASE("zero test by evaluation oracle") {
  int n = 2;
  RatCoeff a = RatCoeff::inv_diff(n, 1, 2) * RatCoeff::inv_diff(n, 1, 2);
  RatCoeff b = RatCoeff::inv_diff(n, 2, 1) * RatCoeff::inv_diff(n, 2, 1);
  RatCoeff diff = a - b;
  CHECK(diff.is_zero());
  std::mt19937_64 rng(3);
  for (int trial = 0; trial < 3; ++trial) {
    auto point = random_point(rng, n);
    CHECK(a.eval(point) == b.eval(point));
  }
}

TEST_CASE("cartesian derivative of the pair potential") {
  int n = 2;
  Chart cart{ChartKind::cartesian, n};
  RatCoeff v = RatCoeff::param_l(n) * RatCoeff::inv_diff(n, 1, 2);
  RatCoeff expect = RatCoeff::fraction(
      Poly::variable(n + 2, n).scaled(Scalar::from(-1)),
      {{Atom::diff(1, 2), 2}}, n);
  CHECK(v.derive(1, cart) == expect);
}

TEST_CASE("trigonometric chart reproduces the potential derivative") {
  ModelSpec ts = ModelSpec::make(Model::ts, 2);
  CHECK(ts.v(1, 2).derive(1, ts.chart()) == ts.vprime(1, 2));
}

TEST_CASE("parameters differentiate to zero") {
  int n = 3;
  Chart cart{ChartKind::cartesian, n};
  CHECK(RatCoeff::param_l(n).derive(2, cart).is_zero());
  CHECK(RatCoeff::param_omega(n).derive(1, cart).is_zero());
}

TEST_CASE("the potential table satisfies V' = dV under each chart") {
  for (auto model : {Model::free_calogero, Model::ts, Model::hs}) {
    for (int n = 2; n <= 4; ++n) {
      ModelSpec spec = ModelSpec::make(model, n);
      for (int i = 1; i <= n; ++i)
        for (int j = 1; j <= n; ++j) {
          if (i == j) continue;
          CHECK(spec.v(i, j).derive(i, spec.chart()) == spec.vprime(i, j));
          // V is odd, V' even
          CHECK(spec.v(i, j) == -spec.v(j, i));
          CHECK(spec.vprime(i, j) == spec.vprime(j, i));
        }
    }
  }
}

TEST_CASE("ring commutativity and evaluation homomorphism on random pairs") {
  std::mt19937_64 rng(17);
  for (int trial = 0; trial < 50; ++trial) {
    int n = 2 + static_cast<int>(rng() % 2);
    RatCoeff a = random_coeff(rng, n, false);
    RatCoeff b = random_coeff(rng, n, false);
    CHECK((a * b - b * a).is_zero());
    auto point = random_point(rng, n);
    CHECK((a * b).eval(point) == a.eval(point) * b.eval(point));
    CHECK((a + b).eval(point) == a.eval(point) + b.eval(point));
  }
}

TEST_CASE("Leibniz rule on random pairs") {
  std::mt19937_64 rng(23);
  for (int trial = 0; trial < 50; ++trial) {
    int n = 2 + static_cast<int>(rng() % 2);
    bool exp_chart = rng() % 2 == 0;
    Chart chart{exp_chart ? ChartKind::exp_hyperbolic : ChartKind::cartesian, n};
    RatCoeff f = random_coeff(rng, n, exp_chart);
    RatCoeff g = random_coeff(rng, n, exp_chart);
    int k = 1 + static_cast<int>(rng() % n);
    RatCoeff lhs = (f * g).derive(k, chart);
    RatCoeff rhs = f.derive(k, chart) * g + f * g.derive(k, chart);
    CHECK(lhs == rhs);
  }
}

TEST_CASE("division is restricted to scalar-atom monomials") {
  int n = 2;
  Chart cart{ChartKind::cartesian, n};
  RatCoeff f = RatCoeff::param_l(n) * RatCoeff::coordinate(n, 1);
  RatCoeff diff = RatCoeff::coordinate(n, 1) - RatCoeff::coordinate(n, 2);
  RatCoeff g = f.divide(diff.scaled(Scalar::from(2)), cart);
  CHECK(g == f * RatCoeff::inv_diff(n, 1, 2).scaled(Scalar::from(1, 2)));
  // dividing by a non-atom polynomial is rejected with a diagnostic
  RatCoeff bad = RatCoeff::coordinate(n, 1) + RatCoeff::coordinate(n, 2);
  CHECK_THROWS_AS(f.divide(bad, cart), Error);
  CHECK_THROWS_AS(f.divide(RatCoeff::param_l(n), cart), Error);
  CHECK_THROWS_AS(f.divide(RatCoeff::zero(n), cart), Error);
  // bare coordinates are atoms only in exponential charts
  Chart exp_chart{ChartKind::exp_hyperbolic, n};
  CHECK_THROWS_AS(f.divide(RatCoeff::coordinate(n, 2), cart), Error);
  CHECK_NOTHROW(f.divide(RatCoeff::coordinate(n, 2), exp_chart));
}

TEST_CASE("trigonometric conjugation inverts coordinates") {
  int n = 2;
  Chart trig{ChartKind::exp_trigonometric, n};
  // conj(v1) = 1/v1
  RatCoeff v1 = RatCoeff::coordinate(n, 1);
  RatCoeff expect = RatCoeff::fraction(Poly::constant(n + 2, Scalar::from(1)),
                                       {{Atom::var(1), 1}}, n);
  CHECK(v1.conjugate(trig) == expect);
  // the encoded cotangent is fixed by conjugation (a real function)
  ModelSpec ts = ModelSpec::make(Model::ts, 2);
  CHECK(ts.v(1, 2).conjugate(trig) == ts.v(1, 2));
  // double conjugation is the identity on random inputs
  std::mt19937_64 rng(31);
  for (int trial = 0; trial < 20; ++trial) {
    RatCoeff f = random_coeff(rng, n, true);
    CHECK(f.conjugate(trig).conjugate(trig) == f);
  }
}

TEST_CASE("omega negation is an involution") {
  std::mt19937_64 rng(37);
  for (int trial = 0; trial < 20; ++trial) {
    RatCoeff f = random_coeff(rng, 2, false);
    CHECK(f.negate_omega().negate_omega() == f);
  }
}
