#include "superlax/jacobi.hpp"

#include "superlax/serialize.hpp"

namespace superlax {

JacobiMatrix jacobi_matrix(int n, const RadicalBasis& basis) {
  Mat<Scalar> r(n, n, Scalar());
  for (int kappa = 1; kappa < n; ++kappa) {
    Scalar root = Scalar::sqrt_of(static_cast<std::uint64_t>(kappa) * (kappa + 1),
                                  basis);
    Scalar inv = root.inverse();
    for (int k = 1; k <= kappa; ++k) r.at(kappa - 1, k - 1) = inv;
    r.at(kappa - 1, kappa) = -(Scalar::from(kappa) * inv);
  }
  Scalar invn = Scalar::sqrt_of(n, basis).inverse();
  for (int k = 1; k <= n; ++k) r.at(n - 1, k - 1) = invn;
  // exact orthogonality
  Mat<Scalar> prod = r * transpose(r);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      Scalar expect = i == j ? Scalar::from(1) : Scalar();
      if (!(prod.at(i, j) == expect))
        throw BuildError("jacobi_matrix: rotation is not orthogonal",
                         to_string(prod.at(i, j)));
    }
  return JacobiMatrix(n, std::move(r));
}

FermionPoly jacobi_phi(const JacobiMatrix& r, int kappa) {
  int n = r.n();
  if (kappa < 1 || kappa > n) throw Error("jacobi_phi: index out of range");
  FermionPoly out(n);
  for (int k = 1; k <= n; ++k)
    out.add_term(FermionWord{0, 1u << (k - 1)}, r.entry(kappa, k));
  return out;
}

FermionPoly clebsch(const JacobiMatrix& r, int xi) {
  int n = r.n();
  if (xi < 1 || xi >= n) throw Error("clebsch: index must be below N");
  FermionPoly out(n);
  for (int k = 1; k <= n; ++k) {
    std::uint32_t bit = 1u << (k - 1);
    out.add_term(FermionWord{bit, bit}, r.entry(xi, k));
  }
  return out;
}

std::vector<std::uint32_t> jacobi_sector_masks(int n, int m) {
  return sector_masks(n, m, n - 1);
}

FermionPoly jacobi_ket(const JacobiMatrix& r, std::uint32_t mask,
                       bool with_phi_n) {
  int n = r.n();
  FermionPoly out = FermionPoly::identity(n);
  if (with_phi_n) out = jacobi_phi(r, n).adjoint();
  for (int kappa = 1; kappa < n; ++kappa)
    if (mask & (1u << (kappa - 1)))
      out = out * jacobi_phi(r, kappa).adjoint();
  return out;
}

std::vector<FermionPoly> jacobi_kets(const JacobiMatrix& r, int m) {
  int n = r.n();
  std::vector<FermionPoly> kets;
  if (m <= n - 1)
    for (auto mask : jacobi_sector_masks(n, m))
      kets.push_back(jacobi_ket(r, mask, false));
  if (m >= 1)
    for (auto mask : jacobi_sector_masks(n, m - 1))
      kets.push_back(jacobi_ket(r, mask, true));
  return kets;
}

Mat<Operator> sector_block_jacobi(const Operator& a, int m,
                                  const JacobiMatrix& r) {
  return block_in_kets(a, jacobi_kets(r, m));
}

namespace {

Mat<Scalar> sector_matrix(const JacobiMatrix& r, const FermionPoly& op, int m) {
  auto masks = jacobi_sector_masks(r.n(), m);
  int dim = static_cast<int>(masks.size());
  std::vector<FermionPoly> kets;
  kets.reserve(masks.size());
  for (auto mask : masks) kets.push_back(jacobi_ket(r, mask, false));
  Mat<Scalar> out(dim, dim, Scalar());
  for (int i = 0; i < dim; ++i) {
    FermionPoly bra = kets[i].adjoint();
    for (int j = 0; j < dim; ++j)
      out.at(i, j) = (bra * op * kets[j]).vacuum_expectation();
  }
  return out;
}

}  // namespace

Mat<Scalar> rep_matrix(const JacobiMatrix& r, int m, int i, int j) {
  if (m < 0 || m >= r.n()) throw Error("rep_matrix: fermion number out of range");
  return sector_matrix(r, exchange_operator(r.n(), i, j), m);
}

Mat<Scalar> t1_matrix(int n, int i, int j) {
  Mat<Scalar> out(n, n, Scalar());
  for (int a = 1; a <= n; ++a) out.at(a - 1, a - 1) = Scalar::from(1);
  out.at(i - 1, i - 1) = Scalar();
  out.at(j - 1, j - 1) = Scalar();
  out.at(i - 1, j - 1) = Scalar::from(1);
  out.at(j - 1, i - 1) = Scalar::from(1);
  return out;
}

Mat<Scalar> clebsch_sector_matrix(const JacobiMatrix& r, int xi, int m) {
  return sector_matrix(r, clebsch(r, xi), m);
}

Operator dyn_partial(const ModelSpec& spec) {
  Operator out = Operator::zero(spec.chart());
  for (int k = 1; k <= spec.n(); ++k)
    out = out + Operator::partial(spec.chart(), k);
  return out.scaled(spec.inv_sqrt_n());
}

Operator yn_coordinate(const ModelSpec& spec) {
  RatCoeff sum = RatCoeff::zero(spec.n());
  for (int k = 1; k <= spec.n(); ++k) sum = sum + spec.x(k);
  return Operator::from_coeff(spec.chart(), sum).scaled(spec.inv_sqrt_n());
}

Operator qn_body(const ModelSpec& spec, int sign) {
  return dyn_partial(spec).scaled(Scalar::from(-sign)) +
         yn_coordinate(spec).scaled(RatCoeff::param_omega(spec.n()));
}

namespace {

Operator phi_n_op(const ModelSpec& spec, bool dagger) {
  JacobiMatrix r = jacobi_matrix(spec.n(), spec.radicals());
  FermionPoly phi = jacobi_phi(r, spec.n());
  return Operator::from_fermion(spec.chart(), dagger ? phi.adjoint() : phi);
}

}  // namespace

CmParts cm_split(const ModelSpec& spec) {
  const Chart& chart = spec.chart();
  Operator phin = phi_n_op(spec, false);
  Operator phin_dag = phi_n_op(spec, true);
  Operator dyn = dyn_partial(spec);
  CmParts parts{Operator::zero(chart), Operator::zero(chart),
                Operator::zero(chart), Operator::zero(chart),
                Operator::zero(chart), Operator::zero(chart)};
  if (spec.has_oscillator()) {
    parts.qc_minus = phin * qn_body(spec, +1);
    parts.qc_plus = phin_dag * qn_body(spec, -1);
    Operator yn = yn_coordinate(spec);
    RatCoeff omega = RatCoeff::param_omega(spec.n());
    parts.hc = -(dyn * dyn) + (yn * yn).scaled(omega * omega) +
               (phin_dag * phin).scaled(Scalar::from(2)).scaled(omega) -
               Operator::from_coeff(chart, omega);
  } else {
    parts.qc_minus = -(phin * dyn);
    parts.qc_plus = phin_dag * dyn;
    parts.hc = -(dyn * dyn);
  }
  parts.q_minus = build::q_minus(spec) - parts.qc_minus;
  parts.q_plus = build::q_plus(spec) - parts.qc_plus;
  Operator h_full = build::superhamiltonian(spec);
  parts.h = h_full - parts.hc;
  return parts;
}

CmParts cm_split_hat(const ModelSpec& spec) {
  if (!spec.has_oscillator())
    throw Error("cm_split_hat: only defined for the oscillator model");
  CmParts parts = cm_split(spec);
  return CmParts{parts.q_plus.negate_omega(),  parts.q_minus.negate_omega(),
                 parts.qc_plus.negate_omega(), parts.qc_minus.negate_omega(),
                 parts.h.negate_omega(),       parts.hc.negate_omega()};
}

Mat<Operator> local_dunkl(const ModelSpec& spec, int m, DunklVariant variant) {
  int n = spec.n();
  if (m < 0 || m >= n) throw Error("local_dunkl: fermion number out of range");
  if (variant != DunklVariant::plain && !spec.has_oscillator())
    throw Error("local_dunkl: +/- variants need the oscillator model");
  const Chart& chart = spec.chart();
  JacobiMatrix r = jacobi_matrix(n, spec.radicals());
  auto masks = jacobi_sector_masks(n, m);
  int dim = static_cast<int>(masks.size());
  Scalar iu = Scalar::imaginary_unit();

  // P_k = sum_xi R_{xi k} <.|C_xi|.>
  std::vector<Mat<Scalar>> p(n + 1, Mat<Scalar>(dim, dim, Scalar()));
  for (int xi = 1; xi < n; ++xi) {
    Mat<Scalar> c = clebsch_sector_matrix(r, xi, m);
    for (int k = 1; k <= n; ++k)
      for (int a = 0; a < dim; ++a)
        for (int b = 0; b < dim; ++b)
          p[k].at(a, b) = p[k].at(a, b) + r.entry(xi, k) * c.at(a, b);
  }
  std::map<std::pair<int, int>, Mat<Scalar>> reps;
  for (int i = 1; i <= n; ++i)
    for (int j = i + 1; j <= n; ++j)
      reps.emplace(std::make_pair(i, j), rep_matrix(r, m, i, j));

  Mat<Operator> out(dim, dim, Operator::zero(chart));
  for (int k = 1; k <= n; ++k) {
    Operator diag = Operator::partial(chart, k).scaled(-iu);
    if (variant != DunklVariant::plain) {
      Scalar pm = variant == DunklVariant::plus ? iu : -iu;
      diag = diag + Operator::from_coeff(
                        chart, RatCoeff::param_omega(n) * spec.x(k)).scaled(pm);
    }
    for (int a = 0; a < dim; ++a)
      for (int b = 0; b < dim; ++b)
        if (!p[k].at(a, b).is_zero())
          out.at(a, b) = out.at(a, b) + diag.scaled(p[k].at(a, b));
    for (int mm = 1; mm <= n; ++mm) {
      if (mm == k) continue;
      const Mat<Scalar>& t = reps.at({std::min(k, mm), std::max(k, mm)});
      Mat<Scalar> pt = p[k] * t;
      Operator vkm = Operator::from_coeff(chart, spec.v(k, mm)).scaled(iu);
      for (int a = 0; a < dim; ++a)
        for (int b = 0; b < dim; ++b)
          if (!pt.at(a, b).is_zero())
            out.at(a, b) = out.at(a, b) + vkm.scaled(pt.at(a, b));
    }
  }
  return out;
}

Mat<Operator> h_tilde(const ModelSpec& spec, int m) {
  int n = spec.n();
  const Chart& chart = spec.chart();
  JacobiMatrix r = jacobi_matrix(n, spec.radicals());
  auto masks = jacobi_sector_masks(n, m);
  int dim = static_cast<int>(masks.size());
  Mat<Operator> out(dim, dim, Operator::zero(chart));

  Operator scalar_part = -laplacian(chart);
  if (spec.is_free()) {
    RatCoeff vsq = RatCoeff::zero(n);
    for (int i = 1; i <= n; ++i)
      for (int l = 1; l <= n; ++l)
        if (l != i) vsq = vsq + spec.v(i, l) * spec.v(i, l);
    scalar_part = scalar_part + Operator::from_coeff(chart, vsq - spec.e0());
  } else {
    RatCoeff omega = RatCoeff::param_omega(n);
    RatCoeff l = RatCoeff::param_l(n);
    RatCoeff pot = RatCoeff::zero(n);
    for (int i = 1; i <= n; ++i)
      pot = pot + omega * omega * spec.x(i) * spec.x(i);
    for (int i = 1; i <= n; ++i)
      for (int j = 1; j <= n; ++j)
        if (j != i)
          pot = pot + l * l * RatCoeff::inv_diff(n, i, j) *
                          RatCoeff::inv_diff(n, i, j);
    RatCoeff c = RatCoeff::constant(n, Scalar::from(2 * m - 1 - (n - 1))) -
                 l.scaled(Scalar::from(static_cast<long>(n) * (n - 1)));
    scalar_part = scalar_part + Operator::from_coeff(chart, pot + omega * c);
  }
  for (int d = 0; d < dim; ++d) out.at(d, d) = scalar_part;

  for (int i = 1; i <= n; ++i)
    for (int j = 1; j <= n; ++j) {
      if (j == i) continue;
      Mat<Scalar> t = rep_matrix(r, m, std::min(i, j), std::max(i, j));
      Operator coeff_op =
          spec.is_free()
              ? Operator::from_coeff(chart, spec.vprime(i, j))
              : Operator::from_coeff(
                    chart, -(RatCoeff::param_l(n) * RatCoeff::inv_diff(n, i, j) *
                             RatCoeff::inv_diff(n, i, j)));
      for (int a = 0; a < dim; ++a)
        for (int b = 0; b < dim; ++b)
          if (!t.at(a, b).is_zero())
            out.at(a, b) = out.at(a, b) + coeff_op.scaled(t.at(a, b));
    }
  return out;
}

Operator dunkl_assembled(const ModelSpec& spec, DunklVariant variant) {
  int n = spec.n();
  const Chart& chart = spec.chart();
  JacobiMatrix r = jacobi_matrix(n, spec.radicals());
  FermionPoly vac = vacuum_projector(n);
  Operator out = Operator::zero(chart);
  for (int m = 0; m < n; ++m) {
    Mat<Operator> d = local_dunkl(spec, m, variant);
    auto masks = jacobi_sector_masks(n, m);
    int dim = static_cast<int>(masks.size());
    std::vector<FermionPoly> kets, kets_n;
    for (auto mask : masks) {
      kets.push_back(jacobi_ket(r, mask, false));
      kets_n.push_back(jacobi_ket(r, mask, true));
    }
    for (int a = 0; a < dim; ++a)
      for (int b = 0; b < dim; ++b) {
        if (d.at(a, b).is_zero()) continue;
        FermionPoly ketbra = kets[a] * vac * kets[b].adjoint() +
                             kets_n[a] * vac * kets_n[b].adjoint();
        out = out + d.at(a, b) * Operator::from_fermion(chart, ketbra);
      }
  }
  return out;
}

Operator dunkl_closed(const ModelSpec& spec, DunklVariant variant) {
  const Chart& chart = spec.chart();
  Scalar iu = Scalar::imaginary_unit();
  Operator phin = phi_n_op(spec, false);
  Operator phin_dag = phi_n_op(spec, true);
  Operator dyn = dyn_partial(spec);
  Operator nop = number_op(chart);
  Operator qp = build::q_plus_free(spec);
  Operator qm = build::q_minus_free(spec);
  Operator plain =
      build::lax_operator(spec) +
      (qp * phin - phin_dag * qm +
       (nop - (phin_dag * phin).scaled(Scalar::from(2))) * dyn)
          .scaled(iu * spec.inv_sqrt_n());
  if (variant == DunklVariant::plain) return plain;
  Operator delta = delta_dunkl_closed(spec);
  return variant == DunklVariant::plus ? plain + delta : plain - delta;
}

Operator delta_dunkl_closed(const ModelSpec& spec) {
  const Chart& chart = spec.chart();
  Scalar iu = Scalar::imaginary_unit();
  Operator phin = phi_n_op(spec, false);
  Operator phin_dag = phi_n_op(spec, true);
  Operator nop = number_op(chart);
  Operator yn = yn_coordinate(spec);
  RatCoeff omega = RatCoeff::param_omega(spec.n());
  Operator bracket =
      build::delta_q(spec, +1) * phin + phin_dag * build::delta_q(spec, -1);
  Operator tail =
      (yn * ((phin_dag * phin).scaled(Scalar::from(2)) - nop)).scaled(omega);
  return build::delta_lax(spec) - bracket.scaled(iu * spec.inv_sqrt_n()) +
         tail.scaled(iu * spec.inv_sqrt_n());
}

Operator dunkl_operator(const ModelSpec& spec, DunklVariant variant) {
  Operator assembled = dunkl_assembled(spec, variant);
  Operator closed = dunkl_closed(spec, variant);
  Operator diff = assembled - closed;
  if (!diff.is_zero())
    throw BuildError(
        "dunkl_operator: assembled blocks disagree with the closed form",
        to_string(diff));
  return assembled;
}

}  // namespace superlax
