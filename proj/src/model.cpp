#include "superlax/model.hpp"

#include "superlax/serialize.hpp"

namespace superlax {

std::string to_string(Model m) {
  switch (m) {
    case Model::free_calogero: return "free-calogero";
    case Model::calogero: return "calogero";
    case Model::ts: return "ts";
    case Model::hs: return "hs";
  }
  throw Error("unknown model");
}

Model parse_model(const std::string& name) {
  if (name == "free-calogero") return Model::free_calogero;
  if (name == "calogero") return Model::calogero;
  if (name == "ts") return Model::ts;
  if (name == "hs") return Model::hs;
  throw Error("unknown model: " + name);
}

ModelSpec ModelSpec::make(Model model, int n) {
  if (n < 2) throw Error("ModelSpec: need at least two particles");
  ChartKind kind = ChartKind::cartesian;
  if (model == Model::ts) kind = ChartKind::exp_trigonometric;
  if (model == Model::hs) kind = ChartKind::exp_hyperbolic;
  return ModelSpec(model, n, Chart{kind, n});
}

RatCoeff ModelSpec::v(int k, int m) const {
  if (k == m || k < 1 || m < 1 || k > n_ || m > n_)
    throw Error("ModelSpec::v: bad pair");
  int nv = n_ + 2;
  switch (model_) {
    case Model::free_calogero:
    case Model::calogero:
      // l / (x_k - x_m)
      return RatCoeff::inv_diff(n_, k, m) * RatCoeff::param_l(n_);
    case Model::ts: {
      // l cot(x_k - x_m) = i l (v_k + v_m) / (v_k - v_m)
      Poly num = (Poly::variable(nv, k - 1) + Poly::variable(nv, m - 1)) *
                 Poly::variable(nv, n_);
      return RatCoeff::from_poly(num.scaled(Scalar::imaginary_unit()), n_) *
             RatCoeff::inv_diff(n_, k, m);
    }
    case Model::hs: {
      // l coth(x_k - x_m) = l (v_k + v_m) / (v_k - v_m)
      Poly num = (Poly::variable(nv, k - 1) + Poly::variable(nv, m - 1)) *
                 Poly::variable(nv, n_);
      return RatCoeff::from_poly(std::move(num), n_) *
             RatCoeff::inv_diff(n_, k, m);
    }
  }
  throw Error("unknown model");
}

RatCoeff ModelSpec::vprime(int k, int m) const {
  if (k == m || k < 1 || m < 1 || k > n_ || m > n_)
    throw Error("ModelSpec::vprime: bad pair");
  int nv = n_ + 2;
  int lo = std::min(k, m), hi = std::max(k, m);
  Atom d = Atom::diff(lo, hi);
  switch (model_) {
    case Model::free_calogero:
    case Model::calogero: {
      // -l / (x_k - x_m)^2
      Poly num = Poly::variable(nv, n_).scaled(Scalar::from(-1));
      return RatCoeff::fraction(std::move(num), {{d, 2}}, n_);
    }
    case Model::ts: {
      // -l / sin^2 = 4 l v_k v_m / (v_k - v_m)^2
      Poly num = Poly::variable(nv, k - 1) * Poly::variable(nv, m - 1) *
                 Poly::variable(nv, n_).scaled(Scalar::from(4));
      return RatCoeff::fraction(std::move(num), {{d, 2}}, n_);
    }
    case Model::hs: {
      // -l / sinh^2 = -4 l v_k v_m / (v_k - v_m)^2
      Poly num = Poly::variable(nv, k - 1) * Poly::variable(nv, m - 1) *
                 Poly::variable(nv, n_).scaled(Scalar::from(-4));
      return RatCoeff::fraction(std::move(num), {{d, 2}}, n_);
    }
  }
  throw Error("unknown model");
}

RatCoeff ModelSpec::e0() const {
  long c = static_cast<long>(n_) * (n_ - 1) * (n_ - 2) / 3;
  RatCoeff l = RatCoeff::param_l(n_);
  switch (model_) {
    case Model::free_calogero:
    case Model::calogero:
      return RatCoeff::zero(n_);
    case Model::ts:
      // sign fixed by {Q+,Q-} closure: the trigonometric three-body sum has
      // the opposite sign of the hyperbolic one
      return (l * l).scaled(Scalar::from(c));
    case Model::hs:
      return (l * l).scaled(Scalar::from(-c));
  }
  throw Error("unknown model");
}

RatCoeff ModelSpec::x(int k) const {
  if (chart_.kind != ChartKind::cartesian)
    throw Error("ModelSpec::x: coordinate multiplication needs the cartesian chart");
  return RatCoeff::coordinate(n_, k);
}

std::vector<RatCoeff> ModelSpec::ground_state_weights() const {
  if (!has_ground_state())
    throw Error("ModelSpec: no ground-state weights for " + to_string(model_));
  std::vector<RatCoeff> w;
  RatCoeff l = RatCoeff::param_l(n_);
  for (int k = 1; k <= n_; ++k) {
    RatCoeff wk = RatCoeff::zero(n_);
    if (has_oscillator())
      wk = wk - RatCoeff::param_omega(n_) * x(k);
    for (int m = 1; m <= n_; ++m)
      if (m != k) wk = wk + l * RatCoeff::inv_diff(n_, k, m);
    w.push_back(std::move(wk));
  }
  return w;
}

Scalar ModelSpec::inv_sqrt_n() const {
  return Scalar::sqrt_of(n_, radicals_) *
         Scalar::from(rational(1, n_));
}

namespace build {

namespace {

Scalar i_unit() { return Scalar::imaginary_unit(); }

Operator fermion_word_op(const ModelSpec& spec, FermionWord w) {
  return Operator::from_fermion(spec.chart(),
                                FermionPoly::from_word(spec.n(), w));
}

}  // namespace

Operator q_body(const ModelSpec& spec, int k, int sign) {
  const Chart& chart = spec.chart();
  Operator out = Operator::partial(chart, k).scaled(Scalar::from(-sign));
  RatCoeff pot = RatCoeff::zero(spec.n());
  for (int m = 1; m <= spec.n(); ++m)
    if (m != k) pot = pot - spec.v(k, m);
  if (spec.has_oscillator())
    pot = pot + RatCoeff::param_omega(spec.n()) * spec.x(k);
  return out + Operator::from_coeff(chart, pot);
}

Operator q_body_free(const ModelSpec& spec, int k, int sign) {
  const Chart& chart = spec.chart();
  Operator out = Operator::partial(chart, k).scaled(Scalar::from(-sign));
  RatCoeff pot = RatCoeff::zero(spec.n());
  for (int m = 1; m <= spec.n(); ++m)
    if (m != k) pot = pot - spec.v(k, m);
  return out + Operator::from_coeff(chart, pot);
}

namespace {

Operator assemble_supercharge(const ModelSpec& spec, int sign,
                              Operator (*body)(const ModelSpec&, int, int)) {
  // sign = -1: Q^- = sum_j psi_j Q_j^+;  sign = +1: Q^+ = sum_j psi+_j Q_j^-
  Operator out = Operator::zero(spec.chart());
  for (int j = 1; j <= spec.n(); ++j) {
    std::uint32_t bit = 1u << (j - 1);
    FermionWord w = sign < 0 ? FermionWord{0, bit} : FermionWord{bit, 0};
    out = out + fermion_word_op(spec, w) * body(spec, j, -sign);
  }
  return out;
}

}  // namespace

Operator q_minus(const ModelSpec& spec) {
  return assemble_supercharge(spec, -1, &q_body);
}

Operator q_plus(const ModelSpec& spec) {
  return assemble_supercharge(spec, +1, &q_body);
}

Operator q_minus_free(const ModelSpec& spec) {
  return assemble_supercharge(spec, -1, &q_body_free);
}

Operator q_plus_free(const ModelSpec& spec) {
  return assemble_supercharge(spec, +1, &q_body_free);
}

Operator delta_q(const ModelSpec& spec, int sign) {
  if (!spec.has_oscillator())
    throw Error("delta_q: only defined for the oscillator model");
  Operator out = Operator::zero(spec.chart());
  RatCoeff omega = RatCoeff::param_omega(spec.n());
  for (int k = 1; k <= spec.n(); ++k) {
    std::uint32_t bit = 1u << (k - 1);
    FermionWord w = sign < 0 ? FermionWord{0, bit} : FermionWord{bit, 0};
    out = out + fermion_word_op(spec, w).scaled(omega * spec.x(k));
  }
  return out;
}

Operator q_hat(const ModelSpec& spec, int sign) {
  return (sign < 0 ? q_minus_free(spec) : q_plus_free(spec)) -
         delta_q(spec, sign);
}

Operator superhamiltonian(const ModelSpec& spec) {
  const Chart& chart = spec.chart();
  int n = spec.n();
  Operator h = -laplacian(chart);
  if (spec.is_free()) {
    RatCoeff vsq = RatCoeff::zero(n);
    for (int i = 1; i <= n; ++i)
      for (int l = 1; l <= n; ++l)
        if (l != i) vsq = vsq + spec.v(i, l) * spec.v(i, l);
    h = h + Operator::from_coeff(chart, vsq - spec.e0());
    for (int i = 1; i <= n; ++i)
      for (int j = 1; j <= n; ++j)
        if (j != i)
          h = h + Operator::from_fermion(chart, exchange_operator(n, i, j))
                      .scaled(spec.vprime(i, j));
  } else {
    RatCoeff omega = RatCoeff::param_omega(n);
    RatCoeff l = RatCoeff::param_l(n);
    RatCoeff xsq = RatCoeff::zero(n);
    for (int i = 1; i <= n; ++i) xsq = xsq + spec.x(i) * spec.x(i);
    h = h + Operator::from_coeff(chart, omega * omega * xsq);
    for (int i = 1; i <= n; ++i)
      for (int j = 1; j <= n; ++j) {
        if (j == i) continue;
        RatCoeff inv2 =
            RatCoeff::inv_diff(n, i, j) * RatCoeff::inv_diff(n, i, j);
        h = h + Operator::from_coeff(chart, l * l * inv2);
        h = h - Operator::from_fermion(chart, exchange_operator(n, i, j))
                    .scaled(l * inv2);
      }
    h = h + number_op(chart).scaled(omega.scaled(Scalar::from(2)));
    // -(1 + (N-1)(N l + 1)) omega
    RatCoeff c = RatCoeff::constant(n, Scalar::from(1 + (n - 1))) +
                 l.scaled(Scalar::from(static_cast<long>(n) * (n - 1)));
    h = h - Operator::from_coeff(chart, omega * c);
  }
  Operator closure = anticommutator(q_plus(spec), q_minus(spec));
  Operator diff = closure - h;
  if (!diff.is_zero())
    throw BuildError("superhamiltonian: closed form disagrees with {Q+,Q-}",
                     to_string(diff));
  return h;
}

Operator h0(const ModelSpec& spec) {
  const Chart& chart = spec.chart();
  int n = spec.n();
  Operator h = -laplacian(chart);
  if (spec.is_free()) {
    RatCoeff pot = RatCoeff::zero(n);
    for (int i = 1; i <= n; ++i)
      for (int j = 1; j <= n; ++j)
        if (j != i) pot = pot + spec.v(i, j) * spec.v(i, j) + spec.vprime(i, j);
    return h + Operator::from_coeff(chart, pot - spec.e0());
  }
  RatCoeff omega = RatCoeff::param_omega(n);
  RatCoeff l = RatCoeff::param_l(n);
  RatCoeff pot = RatCoeff::zero(n);
  for (int i = 1; i <= n; ++i) pot = pot + omega * omega * spec.x(i) * spec.x(i);
  for (int i = 1; i <= n; ++i)
    for (int j = 1; j <= n; ++j) {
      if (j == i) continue;
      RatCoeff inv2 = RatCoeff::inv_diff(n, i, j) * RatCoeff::inv_diff(n, i, j);
      pot = pot + (l * l - l) * inv2;
    }
  RatCoeff c = RatCoeff::constant(n, Scalar::from(1 + (n - 1))) +
               l.scaled(Scalar::from(static_cast<long>(n) * (n - 1)));
  return h + Operator::from_coeff(chart, pot - omega * c);
}

Operator h0_physical(const ModelSpec& spec) {
  const Chart& chart = spec.chart();
  int n = spec.n();
  int nv = n + 2;
  Operator h = -laplacian(chart);
  RatCoeff l = RatCoeff::param_l(n);
  RatCoeff lsq_minus_l = l * l - l;
  RatCoeff pot = RatCoeff::zero(n);
  switch (spec.model()) {
    case Model::calogero: {
      RatCoeff omega = RatCoeff::param_omega(n);
      for (int i = 1; i <= n; ++i)
        pot = pot + omega * omega * spec.x(i) * spec.x(i);
      [[fallthrough]];
    }
    case Model::free_calogero:
      for (int i = 1; i <= n; ++i)
        for (int j = 1; j <= n; ++j)
          if (j != i)
            pot = pot + lsq_minus_l * RatCoeff::inv_diff(n, i, j) *
                            RatCoeff::inv_diff(n, i, j);
      break;
    case Model::ts:
    case Model::hs: {
      long sign = spec.model() == Model::ts ? -4 : 4;
      for (int i = 1; i <= n; ++i)
        for (int j = 1; j <= n; ++j) {
          if (j == i) continue;
          // 1/sin^2 = -4 v_i v_j / (v_i - v_j)^2, 1/sinh^2 the same with +4
          Poly num = Poly::variable(nv, i - 1) * Poly::variable(nv, j - 1);
          RatCoeff inv = RatCoeff::fraction(
              num.scaled(Scalar::from(sign)),
              {{Atom::diff(std::min(i, j), std::max(i, j)), 2}}, n);
          pot = pot + lsq_minus_l * inv;
        }
      break;
    }
  }
  return h + Operator::from_coeff(chart, pot);
}

Operator lax_operator(const ModelSpec& spec) {
  const Chart& chart = spec.chart();
  int n = spec.n();
  Operator out = Operator::zero(chart);
  for (int k = 1; k <= n; ++k) {
    std::uint32_t bit = 1u << (k - 1);
    out = out + fermion_word_op(spec, FermionWord{bit, bit}) *
                    Operator::partial(chart, k).scaled(-i_unit());
    for (int m = 1; m <= n; ++m) {
      if (m == k) continue;
      std::uint32_t mbit = 1u << (m - 1);
      out = out + fermion_word_op(spec, FermionWord{bit, mbit})
                      .scaled(spec.v(k, m).scaled(i_unit()));
    }
  }
  return out;
}

Mat<Operator> lax_matrix(const ModelSpec& spec) {
  const Chart& chart = spec.chart();
  int n = spec.n();
  Mat<Operator> out(n, n, Operator::zero(chart));
  for (int k = 1; k <= n; ++k) {
    out.at(k - 1, k - 1) = Operator::partial(chart, k).scaled(-i_unit());
    for (int m = 1; m <= n; ++m)
      if (m != k)
        out.at(k - 1, m - 1) =
            Operator::from_coeff(chart, spec.v(k, m).scaled(i_unit()));
  }
  return out;
}

Operator delta_lax(const ModelSpec& spec) {
  if (!spec.has_oscillator())
    throw Error("delta_lax: only defined for the oscillator model");
  const Chart& chart = spec.chart();
  Operator out = Operator::zero(chart);
  RatCoeff omega = RatCoeff::param_omega(spec.n());
  for (int k = 1; k <= spec.n(); ++k) {
    std::uint32_t bit = 1u << (k - 1);
    out = out + fermion_word_op(spec, FermionWord{bit, bit})
                    .scaled((omega * spec.x(k)).scaled(i_unit()));
  }
  return out;
}

Operator lax_pm_operator(const ModelSpec& spec, int sign) {
  Operator d = delta_lax(spec);
  return sign > 0 ? lax_operator(spec) + d : lax_operator(spec) - d;
}

Mat<Operator> lax_pm_matrix(const ModelSpec& spec, int sign) {
  if (!spec.has_oscillator())
    throw Error("lax_pm_matrix: only defined for the oscillator model");
  Mat<Operator> out = lax_matrix(spec);
  RatCoeff omega = RatCoeff::param_omega(spec.n());
  for (int k = 1; k <= spec.n(); ++k) {
    RatCoeff shift = (omega * spec.x(k)).scaled(i_unit() * Scalar::from(sign));
    out.at(k - 1, k - 1) =
        out.at(k - 1, k - 1) + Operator::from_coeff(spec.chart(), shift);
  }
  return out;
}

Mat<Operator> m_matrix(const ModelSpec& spec) {
  const Chart& chart = spec.chart();
  int n = spec.n();
  Mat<Operator> out(n, n, Operator::zero(chart));
  for (int k = 1; k <= n; ++k) {
    RatCoeff diag = RatCoeff::zero(n);
    for (int j = 1; j <= n; ++j)
      if (j != k) diag = diag - spec.vprime(k, j).scaled(Scalar::from(2));
    out.at(k - 1, k - 1) = Operator::from_coeff(chart, diag);
    for (int m = 1; m <= n; ++m)
      if (m != k)
        out.at(k - 1, m - 1) = Operator::from_coeff(
            chart, spec.vprime(k, m).scaled(Scalar::from(2)));
  }
  return out;
}

Operator integral(const ModelSpec& spec, int power) {
  return total_sum(matrix_power(lax_matrix(spec), power));
}

Mat<Operator> l1_matrix(const ModelSpec& spec) {
  return lax_pm_matrix(spec, +1) * lax_pm_matrix(spec, -1);
}

Mat<Operator> l2_matrix(const ModelSpec& spec) {
  return lax_pm_matrix(spec, -1) * lax_pm_matrix(spec, +1);
}

Operator o_pm(const ModelSpec& spec, int p, int m) {
  if (p < 0 || m < 0) throw Error("o_pm: powers must be nonnegative");
  Mat<Operator> acc = identity_matrix(spec.chart(), spec.n());
  if (m > 0) acc = matrix_power(lax_pm_matrix(spec, -1), m);
  if (p > 0) {
    Mat<Operator> plus = matrix_power(lax_pm_matrix(spec, +1), p);
    acc = m > 0 ? acc * plus : plus;
  }
  return total_sum(acc);
}

}  // namespace build

}  // namespace superlax
