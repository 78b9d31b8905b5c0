#pragma once

#include <compare>
#include <cstdint>
#include <map>

#include "superlax/poly.hpp"

namespace superlax {

/// Coordinate chart. Cartesian keeps v_j = x_j; the exponential charts encode
/// v_j = exp(2 x_j) (hyperbolic) or v_j = exp(2 i x_j) (trigonometric), which
/// turns the cot/coth potentials into rational functions.
enum class ChartKind { cartesian, exp_hyperbolic, exp_trigonometric };

struct Chart {
  ChartKind kind = ChartKind::cartesian;
  int particles = 0;

  bool operator==(const Chart&) const = default;
  int nvars() const { return particles + 2; }
  int l_index() const { return particles; }
  int omega_index() const { return particles + 1; }
};

/// Admissible denominator factor: a pairwise difference v_i - v_j (i < j) or,
/// in exponential charts, a bare coordinate v_i. Indices are 1-based.
struct Atom {
  enum class Kind : std::uint8_t { diff, var };
  Kind kind = Kind::var;
  std::uint8_t i = 0, j = 0;

  auto operator<=>(const Atom&) const = default;

  static Atom diff(int i, int j) {
    if (i == j || i < 1 || j < 1) throw Error("Atom::diff: bad indices");
    if (i > j) throw Error("Atom::diff: indices must be ordered i < j");
    return {Kind::diff, static_cast<std::uint8_t>(i), static_cast<std::uint8_t>(j)};
  }
  static Atom var(int i) {
    if (i < 1) throw Error("Atom::var: bad index");
    return {Kind::var, static_cast<std::uint8_t>(i), 0};
  }
};

Poly atom_poly(int particles, const Atom& a);

/// Rational function over Scalar in v_1..v_n, l, omega whose denominator is a
/// monomial in the chart's atoms. Kept normalized: no denominator atom
/// divides the numerator.
class RatCoeff {
 public:
  explicit RatCoeff(int particles)
      : particles_(particles), num_(particles + 2) {}

  static RatCoeff zero(int particles) { return RatCoeff(particles); }
  static RatCoeff one(int particles) { return constant(particles, Scalar::from(1)); }
  static RatCoeff constant(int particles, const Scalar& c);
  static RatCoeff from_poly(Poly p, int particles);
  static RatCoeff fraction(Poly num, std::map<Atom, std::uint32_t> den,
                           int particles);
  static RatCoeff coordinate(int particles, int k);  // v_k, 1-based
  static RatCoeff param_l(int particles);
  static RatCoeff param_omega(int particles);
  /// 1/(v_i - v_j) for any i != j; the sign is folded into the numerator.
  static RatCoeff inv_diff(int particles, int i, int j);

  int particles() const { return particles_; }
  bool is_zero() const { return num_.is_zero(); }
  /// Free of the coordinates v_1..v_n (may still involve l and omega).
  bool is_coordinate_free() const;
  /// Literal constant (also free of l and omega); throws when it is not.
  Scalar constant_value() const;

  const Poly& numerator() const { return num_; }
  const std::map<Atom, std::uint32_t>& denominator() const { return den_; }

  RatCoeff scaled(const Scalar& c) const;
  /// Division restricted to divisors of the shape scalar * atom monomial.
  RatCoeff divide(const RatCoeff& g, const Chart& chart) const;
  /// d/dx_k through the chart (k is 1-based).
  RatCoeff derive(int k, const Chart& chart) const;
  /// Complex conjugation of the underlying function of real x: conjugates
  /// scalars, and in the trigonometric chart substitutes v -> 1/v.
  RatCoeff conjugate(const Chart& chart) const;
  RatCoeff negate_omega() const;
  Scalar eval(const std::vector<Scalar>& point) const;

  friend RatCoeff operator+(const RatCoeff& a, const RatCoeff& b);
  friend RatCoeff operator-(const RatCoeff& a, const RatCoeff& b);
  friend RatCoeff operator*(const RatCoeff& a, const RatCoeff& b);
  friend RatCoeff operator-(const RatCoeff& a);
  friend bool operator==(const RatCoeff& a, const RatCoeff& b);

 private:
  void normalize();

  int particles_;
  Poly num_;
  std::map<Atom, std::uint32_t> den_;
};

inline bool operator!=(const RatCoeff& a, const RatCoeff& b) { return !(a == b); }

}  // namespace superlax
