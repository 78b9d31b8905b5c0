#pragma once

#include <string>
#include <vector>

#include "superlax/op.hpp"

namespace superlax {

enum class Model { free_calogero, calogero, ts, hs };

std::string to_string(Model m);
Model parse_model(const std::string& name);

/// Model identity: particle count, coordinate chart, radical basis, and the
/// coefficient data (potential, constants, ground-state weights) every
/// builder draws from. l and omega stay symbolic throughout.
class ModelSpec {
 public:
  static ModelSpec make(Model model, int n);

  Model model() const { return model_; }
  int n() const { return n_; }
  const Chart& chart() const { return chart_; }
  const RadicalBasis& radicals() const { return radicals_; }
  bool is_free() const { return model_ != Model::calogero; }
  bool has_oscillator() const { return model_ == Model::calogero; }
  bool has_ground_state() const {
    return model_ == Model::calogero || model_ == Model::free_calogero;
  }

  /// V_{km} = V(x_k - x_m) in chart coordinates, k != m.
  RatCoeff v(int k, int m) const;
  /// V'_{km}; equals derive(V_{km}, k) by construction of the chart.
  RatCoeff vprime(int k, int m) const;
  /// Constant subtracted in the free-model superhamiltonian so that it equals
  /// {Q+, Q-} exactly.
  RatCoeff e0() const;
  /// Multiplication operator x_k (cartesian models only).
  RatCoeff x(int k) const;
  /// Logarithmic derivatives of the ground-state weight, one per particle.
  std::vector<RatCoeff> ground_state_weights() const;
  Scalar inv_sqrt_n() const;  // N^{-1/2}

 private:
  ModelSpec(Model model, int n, Chart chart)
      : model_(model), n_(n), chart_(chart), radicals_(n) {}

  Model model_;
  int n_;
  Chart chart_;
  RadicalBasis radicals_;
};

/// Constructors for the named operators of the workbench. All are pure
/// functions of the spec; the superhamiltonian constructor cross-checks its
/// closed form against {Q+, Q-} and throws BuildError on mismatch.
namespace build {

/// Supercharge bodies: Q_k^{sgn} with sgn = +1 or -1.
Operator q_body(const ModelSpec& spec, int k, int sign);
/// Same with the oscillator term dropped.
Operator q_body_free(const ModelSpec& spec, int k, int sign);
Operator q_minus(const ModelSpec& spec);  // sum_j psi_j Q_j^+
Operator q_plus(const ModelSpec& spec);   // sum_j psi+_j Q_j^-
/// Free-potential supercharges (for the oscillator model these drop the
/// omega x term; for free models they coincide with q_minus/q_plus).
Operator q_minus_free(const ModelSpec& spec);
Operator q_plus_free(const ModelSpec& spec);
/// delta Q^- = omega sum_k x_k psi_k, delta Q^+ its adjoint.
Operator delta_q(const ModelSpec& spec, int sign);
/// Oscillator supercharges with the sign of omega inverted.
Operator q_hat(const ModelSpec& spec, int sign);

Operator superhamiltonian(const ModelSpec& spec);
/// Scalar zero-fermion sector of the superhamiltonian, built directly.
Operator h0(const ModelSpec& spec);
/// Scalar Calogero Hamiltonian -Delta + w^2 sum x^2 + sum (l^2-l)/x_ij^2
/// without the superhamiltonian's additive constant.
Operator h0_physical(const ModelSpec& spec);

Operator lax_operator(const ModelSpec& spec);  // free super Lax, any model
Mat<Operator> lax_matrix(const ModelSpec& spec);
Operator delta_lax(const ModelSpec& spec);            // i w x_k psi+_k psi_k
Operator lax_pm_operator(const ModelSpec& spec, int sign);
Mat<Operator> lax_pm_matrix(const ModelSpec& spec, int sign);
Mat<Operator> m_matrix(const ModelSpec& spec);

Operator integral(const ModelSpec& spec, int power);  // I_n = Ts(L^n)
Mat<Operator> l1_matrix(const ModelSpec& spec);       // L+ L-
Mat<Operator> l2_matrix(const ModelSpec& spec);       // L- L+
/// O_p^m = Ts((L-)^m (L+)^p).
Operator o_pm(const ModelSpec& spec, int p, int m);

}  // namespace build

}  // namespace superlax
