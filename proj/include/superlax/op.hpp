#pragma once

#include <cstdint>
#include <map>
#include <vector>

#include "superlax/coeff.hpp"
#include "superlax/fermion.hpp"
#include "superlax/smallmat.hpp"

namespace superlax {

/// Term key: packed derivative multi-index over x_1..x_n plus a
/// normal-ordered fermionic word. Coefficients stay left of derivatives;
/// fermions commute with both.
struct OpKey {
  PackedExp deriv = 0;
  FermionWord word;

  bool operator==(const OpKey&) const = default;
};

struct OpKeyLess {
  bool operator()(const OpKey& a, const OpKey& b) const {
    if (a.deriv != b.deriv) return a.deriv < b.deriv;
    return a.word < b.word;
  }
};

/// Canonical finite sum of RatCoeff * d^alpha * FermionWord terms; the
/// universal container for supercharges, superhamiltonians, Lax and Dunkl
/// operators.
class Operator {
 public:
  explicit Operator(Chart chart) : chart_(chart) {}

  static Operator zero(const Chart& chart) { return Operator(chart); }
  static Operator identity(const Chart& chart);
  static Operator from_coeff(const Chart& chart, const RatCoeff& c);
  static Operator from_scalar(const Chart& chart, const Scalar& c);
  static Operator partial(const Chart& chart, int k);  // d/dx_k, 1-based
  static Operator from_fermion(const Chart& chart, const FermionPoly& p);
  static Operator term(const Chart& chart, RatCoeff c, Exponents deriv,
                       FermionWord w);

  const Chart& chart() const { return chart_; }
  int particles() const { return chart_.particles; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t term_count() const { return terms_.size(); }
  const std::map<OpKey, RatCoeff, OpKeyLess>& terms() const { return terms_; }
  void add_term(const OpKey& k, const RatCoeff& c);

  bool conserves_fermion_number() const;
  Operator scaled(const Scalar& c) const;
  /// Multiplication by a coefficient from the left.
  Operator scaled(const RatCoeff& c) const;
  Operator adjoint() const;
  Operator negate_omega() const;

  Operator& operator+=(const Operator& b);

  friend Operator operator+(const Operator& a, const Operator& b);
  friend Operator operator-(const Operator& a, const Operator& b);
  friend Operator operator*(const Operator& a, const Operator& b);
  friend Operator operator-(const Operator& a);
  friend bool operator==(const Operator& a, const Operator& b);

 private:
  Chart chart_;
  std::map<OpKey, RatCoeff, OpKeyLess> terms_;
};

inline bool operator!=(const Operator& a, const Operator& b) { return !(a == b); }

Operator commutator(const Operator& a, const Operator& b);
Operator anticommutator(const Operator& a, const Operator& b);

Operator laplacian(const Chart& chart);
Operator number_op(const Chart& chart);

/// Formal sum of RatCoeff * Fock state; what operators act on.
class WaveFunction {
 public:
  explicit WaveFunction(Chart chart) : chart_(chart) {}
  static WaveFunction unit(const Chart& chart);  // the constant function 1 at |0>
  static WaveFunction state(const Chart& chart, std::uint32_t mask,
                            RatCoeff coeff);

  const Chart& chart() const { return chart_; }
  bool is_zero() const { return comps_.empty(); }
  const std::map<std::uint32_t, RatCoeff>& components() const { return comps_; }
  void add(std::uint32_t mask, const RatCoeff& c);

  friend WaveFunction operator+(const WaveFunction& a, const WaveFunction& b);
  friend WaveFunction operator-(const WaveFunction& a, const WaveFunction& b);
  friend bool operator==(const WaveFunction& a, const WaveFunction& b);

  WaveFunction scaled(const RatCoeff& c) const;

 private:
  Chart chart_;
  std::map<std::uint32_t, RatCoeff> comps_;
};

WaveFunction apply(const Operator& a, const WaveFunction& f);

/// Matrix of a fermion-number-conserving operator on the m-fermion sector
/// spanned by the given kets (bras are the kets' adjoints). Entries are
/// fermion-free operators.
Mat<Operator> block_in_kets(const Operator& a,
                            const std::vector<FermionPoly>& kets);
/// Particle-basis sector block, states ordered by index list.
Mat<Operator> sector_block(const Operator& a, int m);

/// Conjugation by the ground state: substitutes d_k -> d_k + w_k where w_k is
/// the logarithmic derivative of the weight.
Operator gauge_conjugate(const Operator& a, const std::vector<RatCoeff>& weights);

Mat<Operator> identity_matrix(const Chart& chart, int dim);

}  // namespace superlax
