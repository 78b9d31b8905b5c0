#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <vector>

#include "superlax/scalar.hpp"

namespace superlax {

/// Exponent vector; the owning Poly fixes the arity.
using Exponents = std::vector<std::uint16_t>;

/// Monomials packed into one word: the top byte is the total degree, the
/// bytes below hold the exponents of variables 0..6 (variable 0 highest).
/// Plain integer order on the packed word is then graded-lexicographic, and
/// monomial products are plain integer sums. Exponents are capped at 127 so
/// sums never carry between bytes.
using PackedExp = std::uint64_t;

inline constexpr int kMaxPackedVars = 7;
inline constexpr PackedExp kPackedGuard = 0x8080808080808080ull;

PackedExp pack_exponents(const Exponents& e);
Exponents unpack_exponents(PackedExp key, int nvars);

inline unsigned packed_degree(PackedExp key) {
  return static_cast<unsigned>(key >> 56);
}
inline unsigned packed_exp(PackedExp key, int index) {
  return static_cast<unsigned>(key >> (8 * (6 - index))) & 0xffu;
}
inline PackedExp packed_product(PackedExp a, PackedExp b) {
  if ((a | b) & kPackedGuard) throw Error("Poly: exponent overflow");
  return a + b;
}
inline bool packed_divides(PackedExp divisor, PackedExp dividend) {
  // per-byte divisor <= dividend; bytes stay below 0x80
  return ((dividend - divisor) & kPackedGuard) == 0 &&
         packed_degree(dividend) >= packed_degree(divisor);
}
/// Bump the exponent of one variable (and the total degree) by delta.
inline PackedExp packed_shift(PackedExp key, int index, int delta) {
  return key + delta * ((1ull << 56) + (1ull << (8 * (6 - index))));
}

unsigned total_degree(const Exponents& e);

/// Multivariate polynomial over Scalar with a fixed number of variables
/// (at most 7).
class Poly {
 public:
  explicit Poly(int nvars) : nvars_(nvars) {
    if (nvars > kMaxPackedVars) throw Error("Poly: too many variables");
  }
  static Poly constant(int nvars, Scalar c);
  static Poly variable(int nvars, int index);

  int nvars() const { return nvars_; }
  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;
  Scalar constant_value() const;  // throws if not constant
  std::size_t term_count() const { return terms_.size(); }
  unsigned degree_in(int index) const;

  const std::map<PackedExp, Scalar>& terms() const { return terms_; }

  void add_term(PackedExp key, const Scalar& c);
  void add_term(const Exponents& e, const Scalar& c) {
    add_term(pack_exponents(e), c);
  }

  Poly derivative(int index) const;
  Scalar eval(const std::vector<Scalar>& point) const;
  /// Exact quotient by `divisor`, or nullopt when not divisible.
  std::optional<Poly> divide_exact(const Poly& divisor) const;
  /// Substitute variable `index` by its negative.
  Poly negate_variable(int index) const;
  Poly conjugate_scalars() const;

  Poly& operator+=(const Poly& b);

  friend Poly operator+(const Poly& a, const Poly& b);
  friend Poly operator-(const Poly& a, const Poly& b);
  friend Poly operator*(const Poly& a, const Poly& b);
  friend Poly operator-(const Poly& a);
  friend bool operator==(const Poly& a, const Poly& b);

  Poly scaled(const Scalar& c) const;

 private:
  int nvars_;
  std::map<PackedExp, Scalar> terms_;
};

inline bool operator!=(const Poly& a, const Poly& b) { return !(a == b); }

}  // namespace superlax
