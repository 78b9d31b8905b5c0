#include <doctest.h>

#include <random>

#include "superlax/jacobi.hpp"
#include "superlax/serialize.hpp"

using namespace superlax;

namespace {

Operator random_operator(std::mt19937_64& rng, const Chart& chart) {
  std::uniform_int_distribution<long> coef(-3, 3);
  int n = chart.particles;
  Operator out(chart);
  int terms = 1 + static_cast<int>(rng() % 3);
  std::uint32_t full = (1u << n) - 1;
  for (int t = 0; t < terms; ++t) {
    Exponents deriv(n, 0);
    deriv[rng() % n] = rng() % 2;
    FermionWord w{static_cast<std::uint32_t>(rng()) & full,
                  static_cast<std::uint32_t>(rng()) & full};
    Poly num(n + 2);
    Exponents e(n + 2, 0);
    e[rng() % (n + 2)] = rng() % 2;
    num.add_term(e, Scalar::from(rational(coef(rng), 1 + (rng() % 2))));
    std::map<Atom, std::uint32_t> den;
    if (rng() % 3 == 0) den[Atom::diff(1, 2)] = 1;
    RatCoeff c = RatCoeff::fraction(std::move(num), std::move(den), n);
    out += Operator::term(chart, c, deriv, w);
  }
  return out;
}

}  // namespace

TEST_CASE("derivative past a coordinate obeys the product rule") {
  Chart cart{ChartKind::cartesian, 2};
  Operator d1 = Operator::partial(cart, 1);
  Operator x1 = Operator::from_coeff(cart, RatCoeff::coordinate(2, 1));
  // d1 o x1 = x1 d1 + 1
  CHECK(d1 * x1 == x1 * d1 + Operator::identity(cart));
  CHECK(commutator(d1, x1) == Operator::identity(cart));
  CHECK(commutator(d1, Operator::partial(cart, 2)).is_zero());
}

TEST_CASE("fermionic projector squares to itself") {
  Chart cart{ChartKind::cartesian, 2};
  Operator n1 =
      Operator::from_fermion(cart, FermionPoly::from_word(2, FermionWord{1, 1}));
  CHECK(n1 * n1 == n1);
}

TEST_CASE("associativity on random triples") {
  std::mt19937_64 rng(53);
  for (int trial = 0; trial < 50; ++trial) {
    Chart chart{trial % 2 == 0 ? ChartKind::cartesian : ChartKind::exp_hyperbolic,
                2 + static_cast<int>(rng() % 2)};
    Operator a = random_operator(rng, chart);
    Operator b = random_operator(rng, chart);
    Operator c = random_operator(rng, chart);
    CHECK((a * b) * c == a * (b * c));
  }
}

TEST_CASE("adjoint involution and antimorphism on random pairs") {
  std::mt19937_64 rng(59);
  for (int trial = 0; trial < 50; ++trial) {
    Chart chart{ChartKind::cartesian, 2 + static_cast<int>(rng() % 2)};
    Operator a = random_operator(rng, chart);
    Operator b = random_operator(rng, chart);
    CHECK(a.adjoint().adjoint() == a);
    CHECK((a * b).adjoint() == b.adjoint() * a.adjoint());
    CHECK((a + b).adjoint() == a.adjoint() + b.adjoint());
  }
}

TEST_CASE("adjoint of the derivative flips its sign") {
  Chart cart{ChartKind::cartesian, 2};
  CHECK(Operator::partial(cart, 1).adjoint() == -Operator::partial(cart, 1));
  // i -> -i
  Operator i_op = Operator::from_scalar(cart, Scalar::imaginary_unit());
  CHECK(i_op.adjoint() == -i_op);
}

TEST_CASE("supercharges are adjoints of each other in every model") {
  for (auto model : {Model::free_calogero, Model::calogero, Model::ts, Model::hs})
    for (int n = 2; n <= 3; ++n) {
      ModelSpec spec = ModelSpec::make(model, n);
      CHECK(build::q_minus(spec).adjoint() == build::q_plus(spec));
      CHECK(build::q_plus(spec).adjoint() == build::q_minus(spec));
    }
}

TEST_CASE("exchange operators are self-adjoint as operators") {
  ModelSpec spec = ModelSpec::make(Model::ts, 3);
  for (int i = 1; i <= 3; ++i)
    for (int j = i + 1; j <= 3; ++j) {
      Operator k = Operator::from_fermion(spec.chart(),
                                          exchange_operator(3, i, j));
      CHECK(k.adjoint() == k);
    }
}

TEST_CASE("oscillator ladder adjoint pairing") {
  ModelSpec spec = ModelSpec::make(Model::calogero, 2);
  CHECK(build::lax_pm_operator(spec, +1).adjoint() ==
        build::lax_pm_operator(spec, -1));
}

TEST_CASE("sector blocks reject number-violating operators") {
  Chart cart{ChartKind::cartesian, 2};
  Operator bad = Operator::from_fermion(cart, FermionPoly::create(2, 1));
  CHECK_THROWS_AS(sector_block(bad, 1), Error);
}

TEST_CASE("sector block is an algebra morphism on the number commutant") {
  std::mt19937_64 rng(61);
  std::uniform_int_distribution<long> coef(-3, 3);
  for (int trial = 0; trial < 20; ++trial) {
    int n = 2 + static_cast<int>(rng() % 2);
    Chart chart{ChartKind::cartesian, n};
    auto random_bilinear = [&] {
      Operator out = Operator::zero(chart);
      for (int k = 1; k <= n; ++k)
        for (int m = 1; m <= n; ++m) {
          RatCoeff c = RatCoeff::constant(
              n, Scalar::from(rational(coef(rng), 1 + (rng() % 2))));
          if (rng() % 2) c = c * RatCoeff::coordinate(n, 1 + (rng() % n));
          out += Operator::from_fermion(
                     chart, FermionPoly::from_word(
                                n, FermionWord{1u << (k - 1), 1u << (m - 1)}))
                     .scaled(c);
        }
      return out;
    };
    Operator a = random_bilinear();
    Operator b = random_bilinear();
    for (int m = 0; m <= n; ++m) {
      Mat<Operator> lhs = sector_block(a * b, m);
      Mat<Operator> rhs = sector_block(a, m) * sector_block(b, m);
      CHECK(lhs == rhs);
    }
    // total-sum route through the CM state
    RadicalBasis basis(n);
    JacobiMatrix r = jacobi_matrix(n, basis);
    Operator phin = Operator::from_fermion(chart, jacobi_phi(r, n));
    Operator phin_dag =
        Operator::from_fermion(chart, jacobi_phi(r, n).adjoint());
    Operator ts = total_sum(sector_block(a, 1));
    Mat<Operator> vac_block = sector_block(phin * a * phin_dag, 0);
    CHECK(ts == vac_block.at(0, 0).scaled(Scalar::from(n)));
  }
}

TEST_CASE("gauge conjugation substitutes the logarithmic derivative") {
  ModelSpec spec = ModelSpec::make(Model::calogero, 2);
  auto weights = spec.ground_state_weights();
  const Chart& chart = spec.chart();
  // multiplication operators are fixed
  Operator x1 = Operator::from_coeff(chart, spec.x(1));
  CHECK(gauge_conjugate(x1, weights) == x1);
  // d_1 -> d_1 - w x_1 + l/(x_1-x_2)
  Operator expect =
      Operator::partial(chart, 1) +
      Operator::from_coeff(
          chart, RatCoeff::param_l(2) * RatCoeff::inv_diff(2, 1, 2) -
                     RatCoeff::param_omega(2) * spec.x(1));
  CHECK(gauge_conjugate(Operator::partial(chart, 1), weights) == expect);
  // multiplicativity
  std::mt19937_64 rng(67);
  for (int trial = 0; trial < 10; ++trial) {
    Operator a = random_operator(rng, chart);
    Operator b = random_operator(rng, chart);
    CHECK(gauge_conjugate(a * b, weights) ==
          gauge_conjugate(a, weights) * gauge_conjugate(b, weights));
  }
}

TEST_CASE("ground-state weights are unavailable for exponential charts") {
  CHECK_THROWS_AS(ModelSpec::make(Model::ts, 2).ground_state_weights(), Error);
  CHECK_THROWS_AS(ModelSpec::make(Model::hs, 2).ground_state_weights(), Error);
}

TEST_CASE("applying operators to wavefunctions") {
  Chart cart{ChartKind::cartesian, 2};
  int n = 2;
  // d_1 (x_1^2) = 2 x_1
  Poly x1sq(n + 2);
  x1sq.add_term(Exponents{2, 0, 0, 0}, Scalar::from(1));
  WaveFunction f =
      WaveFunction::state(cart, 0, RatCoeff::from_poly(x1sq, n));
  WaveFunction df = apply(Operator::partial(cart, 1), f);
  WaveFunction expect = WaveFunction::state(
      cart, 0, RatCoeff::coordinate(n, 1).scaled(Scalar::from(2)));
  CHECK(df == expect);
  // the number operator counts occupied modes
  WaveFunction two = WaveFunction::state(cart, 0b11, RatCoeff::one(n));
  CHECK(apply(number_op(cart), two) ==
        two.scaled(RatCoeff::constant(n, Scalar::from(2))));
}

TEST_CASE("omega negation of operators") {
  ModelSpec spec = ModelSpec::make(Model::calogero, 2);
  Operator h = build::superhamiltonian(spec);
  CHECK(h.negate_omega().negate_omega() == h);
  // hatted supercharges close on the omega-negated superhamiltonian
  Operator qhat_p = build::q_hat(spec, +1);
  Operator qhat_m = build::q_hat(spec, -1);
  CHECK(anticommutator(qhat_p, qhat_m) == h.negate_omega());
}

TEST_CASE("basis resolution of number-conserving operators") {
  std::mt19937_64 rng(71);
  std::uniform_int_distribution<long> coef(-3, 3);
  for (int trial = 0; trial < 20; ++trial) {
    int n = 2 + static_cast<int>(rng() % 3);
    RadicalBasis basis(n);
    JacobiMatrix r = jacobi_matrix(n, basis);
    FermionPoly phin = jacobi_phi(r, n);
    FermionPoly phin_dag = phin.adjoint();
    FermionPoly vac = vacuum_projector(n);
    // random conserving, generally non-bilinear operator
    FermionPoly a = FermionPoly::identity(n).scaled(
        Scalar::from(rational(coef(rng), 1 + (rng() % 2))));
    for (int f = 0; f < 2; ++f) {
      int i = 1 + static_cast<int>(rng() % n);
      int j = 1 + static_cast<int>(rng() % n);
      FermionPoly bil(n);
      bil.add_term(FermionWord{1u << (i - 1), 1u << (j - 1)},
                   Scalar::from(rational(coef(rng), 1 + (rng() % 2))));
      bil.add_term(FermionWord{}, Scalar::from(rational(coef(rng), 2)));
      a = a * bil;
    }
    FermionPoly lhs(n);
    for (int m = 0; m < n; ++m) {
      for (auto smask : jacobi_sector_masks(n, m))
        for (auto tmask : jacobi_sector_masks(n, m)) {
          FermionPoly ks = jacobi_ket(r, smask, false);
          FermionPoly kt = jacobi_ket(r, tmask, false);
          Scalar me = (ks.adjoint() * a * kt).vacuum_expectation();
          if (me.is_zero()) continue;
          FermionPoly ks_n = jacobi_ket(r, smask, true);
          FermionPoly kt_n = jacobi_ket(r, tmask, true);
          lhs += (ks * vac * kt.adjoint() + ks_n * vac * kt_n.adjoint())
                     .scaled(me);
        }
    }
    FermionPoly com = phin * a - a * phin;
    FermionPoly comd = phin_dag * a - a * phin_dag;
    FermionPoly anti = phin_dag * com + com * phin_dag;
    FermionPoly rhs = a + comd * phin - phin_dag * com +
                      anti * phin_dag * phin;
    CHECK(lhs == rhs);
  }
}
