#pragma once

#include "superlax/model.hpp"

namespace superlax {

/// Orthogonal rotation to Jacobi coordinates; the last row is the
/// center-of-mass direction with entries 1/sqrt(N).
class JacobiMatrix {
 public:
  JacobiMatrix(int n, Mat<Scalar> r) : n_(n), r_(std::move(r)) {}

  int n() const { return n_; }
  const Mat<Scalar>& matrix() const { return r_; }
  /// 1-based entry R_{kappa k}.
  const Scalar& entry(int kappa, int k) const { return r_.at(kappa - 1, k - 1); }

 private:
  int n_;
  Mat<Scalar> r_;
};

/// Standard Jacobi choice: R_{kk'} = 1/sqrt(k(k+1)) for k' <= k,
/// -k/sqrt(k(k+1)) for k' = k+1, zero beyond; orthogonality is verified
/// exactly at construction.
JacobiMatrix jacobi_matrix(int n, const RadicalBasis& basis);

/// phi_kappa = sum_l R_{kappa l} psi_l.
FermionPoly jacobi_phi(const JacobiMatrix& r, int kappa);
/// C_xi = sum_k R_{xi k} psi+_k psi_k (xi < N); self-adjoint.
FermionPoly clebsch(const JacobiMatrix& r, int xi);

/// phi-occupation masks of the m-fermion sector with indices <= n-1.
std::vector<std::uint32_t> jacobi_sector_masks(int n, int m);
/// Ket phi+_{b1}..phi+_{bm}|0> (optionally prefixed by phi+_N) as a psi-word
/// polynomial.
FermionPoly jacobi_ket(const JacobiMatrix& r, std::uint32_t mask,
                       bool with_phi_n);
/// Full m-sector basis in the Jacobi ordering: phi_N-free states first, then
/// the phi+_N-prefixed ones.
std::vector<FermionPoly> jacobi_kets(const JacobiMatrix& r, int m);

Mat<Operator> sector_block_jacobi(const Operator& a, int m,
                                  const JacobiMatrix& r);

/// Representation matrix of the transposition (i j) on the m-fermion Jacobi
/// sector; dimension C(n-1, m).
Mat<Scalar> rep_matrix(const JacobiMatrix& r, int m, int i, int j);
/// One-fermion particle-basis exchange matrix.
Mat<Scalar> t1_matrix(int n, int i, int j);
/// Matrix elements <zeta|C_xi|beta> on the m-fermion Jacobi sector.
Mat<Scalar> clebsch_sector_matrix(const JacobiMatrix& r, int xi, int m);

/// d/dy_N = N^{-1/2} sum_k d/dx_k.
Operator dyn_partial(const ModelSpec& spec);
/// Multiplication by y_N = N^{-1/2} sum_k x_k (cartesian models).
Operator yn_coordinate(const ModelSpec& spec);
/// Q_N^{sgn} = -sgn d/dy_N + omega y_N (oscillator model).
Operator qn_body(const ModelSpec& spec, int sign);

/// Center-of-mass separation Q = q + Q_C, H = h + H_C.
struct CmParts {
  Operator q_plus, q_minus;    // relative parts
  Operator qc_plus, qc_minus;  // center-of-mass supercharges
  Operator h, hc;
};
CmParts cm_split(const ModelSpec& spec);
/// Same with the sign of omega inverted (oscillator model).
CmParts cm_split_hat(const ModelSpec& spec);

enum class DunklVariant { plain, plus, minus };

/// Local Dunkl operator block for the m-fermion hook representation,
/// assembled from the Clebsch-Gordan coefficients and rep matrices.
Mat<Operator> local_dunkl(const ModelSpec& spec, int m, DunklVariant variant);
/// Matrix Hamiltonian intertwined by the local Dunkl blocks.
Mat<Operator> h_tilde(const ModelSpec& spec, int m);

/// The fermionic operator assembled from all local Dunkl blocks.
Operator dunkl_assembled(const ModelSpec& spec, DunklVariant variant);
/// Closed form of the same operator through supercharges and phi_N.
Operator dunkl_closed(const ModelSpec& spec, DunklVariant variant);
Operator delta_dunkl_closed(const ModelSpec& spec);
/// Assembled operator, cross-checked against the closed form.
Operator dunkl_operator(const ModelSpec& spec, DunklVariant variant);

}  // namespace superlax
