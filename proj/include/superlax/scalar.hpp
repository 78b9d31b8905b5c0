#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <set>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace superlax {

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Raised when an operator constructor's built-in cross-check fails; carries
/// the serialized nonzero difference.
struct BuildError : Error {
  explicit BuildError(const std::string& what, std::string residual_text = {})
      : Error(what), residual(std::move(residual_text)) {}
  std::string residual;
};

using Rational = mpq_class;

inline Rational rational(long num, long den = 1) {
  Rational q(num, den);
  q.canonicalize();
  return q;
}

/// n = square_free * outer^2, by trial division.
struct SquareFreeSplit {
  std::uint64_t square_free = 1;
  std::uint64_t outer = 1;
};
SquareFreeSplit square_free_split(std::uint64_t n);

/// The set of radicals adjoined to the ground field for a run with n
/// particles: sqrt(k(k+1)) for k < n plus sqrt(n), reduced square-free and
/// closed under products. Radicands outside the closure are rejected at
/// construction time.
class RadicalBasis {
 public:
  explicit RadicalBasis(int particles);

  int particles() const { return particles_; }
  bool contains(std::uint64_t square_free_radicand) const {
    return closure_.count(square_free_radicand) != 0;
  }
  const std::set<std::uint64_t>& closure() const { return closure_; }

 private:
  int particles_;
  std::set<std::uint64_t> closure_;
};

struct GaussRational {
  Rational re = 0;
  Rational im = 0;

  bool is_zero() const { return re == 0 && im == 0; }
  GaussRational conjugate() const { return {re, -im}; }
};

GaussRational operator+(const GaussRational& a, const GaussRational& b);
GaussRational operator-(const GaussRational& a, const GaussRational& b);
GaussRational operator*(const GaussRational& a, const GaussRational& b);
GaussRational operator-(const GaussRational& a);
GaussRational operator/(const GaussRational& a, const GaussRational& b);
bool operator==(const GaussRational& a, const GaussRational& b);

/// Element of Q(i, sqrt(r_1), ..., sqrt(r_m)): square-free radicands with
/// Gaussian-rational coefficients, kept sorted with no zero entries. The
/// empty component list is the unique representation of zero; radicand 1
/// holds the rational part.
class Scalar {
 public:
  using Components = std::vector<std::pair<std::uint64_t, GaussRational>>;

  Scalar() = default;

  static Scalar from(long num, long den = 1) { return from(rational(num, den)); }
  static Scalar from(const Rational& q);
  static Scalar imaginary_unit();
  /// sqrt(k) reduced to square-free form; the reduced radicand must lie in
  /// the declared basis closure.
  static Scalar sqrt_of(std::uint64_t k, const RadicalBasis& basis);

  bool is_zero() const { return comps_.empty(); }
  bool is_rational() const;
  bool is_one() const;
  /// Rational value of a purely rational scalar; throws otherwise.
  Rational rational_value() const;

  Scalar conjugate() const;  // i -> -i; radicals are real and stay fixed
  Scalar inverse() const;    // exact field inverse
  Scalar pow(unsigned e) const;

  const Components& components() const { return comps_; }
  /// Adds into a component; zero results are dropped. The radicand must be
  /// square-free.
  void add_component(std::uint64_t radicand, const GaussRational& c);
  void set_component(std::uint64_t radicand, GaussRational c);

  Scalar& operator+=(const Scalar& b);

  friend Scalar operator+(const Scalar& a, const Scalar& b);
  friend Scalar operator-(const Scalar& a, const Scalar& b);
  friend Scalar operator*(const Scalar& a, const Scalar& b);
  friend Scalar operator-(const Scalar& a);
  friend bool operator==(const Scalar& a, const Scalar& b);

 private:
  Components comps_;  // sorted by radicand
};

inline Scalar operator/(const Scalar& a, const Scalar& b) { return a * b.inverse(); }
inline bool operator!=(const Scalar& a, const Scalar& b) { return !(a == b); }

Scalar operator*(const Rational& q, const Scalar& s);

}  // namespace superlax
