#include "superlax/scalar.hpp"

#include <algorithm>
#include <numeric>
#include <vector>

namespace superlax {

SquareFreeSplit square_free_split(std::uint64_t n) {
  if (n == 0) throw Error("square_free_split: radicand must be positive");
  SquareFreeSplit out;
  for (std::uint64_t p = 2; p * p <= n; ++p) {
    unsigned e = 0;
    while (n % p == 0) {
      n /= p;
      ++e;
    }
    for (unsigned i = 0; i + 1 < e; i += 2) out.outer *= p;
    if (e % 2 == 1) out.square_free *= p;
  }
  out.square_free *= n;  // leftover prime
  return out;
}

RadicalBasis::RadicalBasis(int particles) : particles_(particles) {
  if (particles < 1) throw Error("RadicalBasis: need at least one particle");
  closure_.insert(1);
  auto declare = [&](std::uint64_t r) {
    closure_.insert(square_free_split(r).square_free);
  };
  for (std::uint64_t k = 1; k + 1 <= static_cast<std::uint64_t>(particles); ++k)
    declare(k * (k + 1));
  declare(static_cast<std::uint64_t>(particles));
  // multiplicative closure: sqrt(r)*sqrt(s) = gcd * sqrt((r/g)(s/g))
  bool grew = true;
  while (grew) {
    grew = false;
    std::vector<std::uint64_t> items(closure_.begin(), closure_.end());
    for (auto r : items)
      for (auto s : items) {
        std::uint64_t g = std::gcd(r, s);
        std::uint64_t rs = (r / g) * (s / g);
        if (closure_.insert(rs).second) grew = true;
      }
  }
}

GaussRational operator+(const GaussRational& a, const GaussRational& b) {
  return {a.re + b.re, a.im + b.im};
}
GaussRational operator-(const GaussRational& a, const GaussRational& b) {
  return {a.re - b.re, a.im - b.im};
}
GaussRational operator*(const GaussRational& a, const GaussRational& b) {
  return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
}
GaussRational operator-(const GaussRational& a) { return {-a.re, -a.im}; }
GaussRational operator/(const GaussRational& a, const GaussRational& b) {
  Rational norm = b.re * b.re + b.im * b.im;
  if (norm == 0) throw Error("GaussRational: division by zero");
  GaussRational num = a * b.conjugate();
  return {num.re / norm, num.im / norm};
}
bool operator==(const GaussRational& a, const GaussRational& b) {
  return a.re == b.re && a.im == b.im;
}

Scalar Scalar::from(const Rational& q) {
  Scalar s;
  s.set_component(1, {q, 0});
  return s;
}

Scalar Scalar::imaginary_unit() {
  Scalar s;
  s.set_component(1, {0, 1});
  return s;
}

Scalar Scalar::sqrt_of(std::uint64_t k, const RadicalBasis& basis) {
  auto split = square_free_split(k);
  if (!basis.contains(split.square_free))
    throw Error("sqrt(" + std::to_string(k) + "): reduced radicand " +
                std::to_string(split.square_free) +
                " is outside the declared radical basis");
  Scalar s;
  s.set_component(split.square_free,
                  {rational(static_cast<long>(split.outer)), 0});
  return s;
}

bool Scalar::is_rational() const {
  if (comps_.empty()) return true;
  if (comps_.size() > 1) return false;
  const auto& [rad, c] = comps_.front();
  return rad == 1 && c.im == 0;
}

bool Scalar::is_one() const {
  return comps_.size() == 1 && comps_.front().first == 1 &&
         comps_.front().second == GaussRational{1, 0};
}

Rational Scalar::rational_value() const {
  if (comps_.empty()) return 0;
  if (!is_rational()) throw Error("Scalar: not a rational value");
  return comps_.front().second.re;
}

void Scalar::add_component(std::uint64_t radicand, const GaussRational& c) {
  if (c.is_zero()) return;
  auto it = std::lower_bound(
      comps_.begin(), comps_.end(), radicand,
      [](const auto& entry, std::uint64_t key) { return entry.first < key; });
  if (it == comps_.end() || it->first != radicand) {
    comps_.insert(it, {radicand, c});
    return;
  }
  it->second = it->second + c;
  if (it->second.is_zero()) comps_.erase(it);
}

void Scalar::set_component(std::uint64_t radicand, GaussRational c) {
  auto it = std::lower_bound(
      comps_.begin(), comps_.end(), radicand,
      [](const auto& entry, std::uint64_t key) { return entry.first < key; });
  if (it != comps_.end() && it->first == radicand) {
    if (c.is_zero())
      comps_.erase(it);
    else
      it->second = std::move(c);
    return;
  }
  if (!c.is_zero()) comps_.insert(it, {radicand, std::move(c)});
}

Scalar Scalar::conjugate() const {
  Scalar out;
  out.comps_.reserve(comps_.size());
  for (const auto& [rad, c] : comps_) out.comps_.emplace_back(rad, c.conjugate());
  return out;
}

Scalar& Scalar::operator+=(const Scalar& b) {
  for (const auto& [rad, c] : b.comps_) add_component(rad, c);
  return *this;
}

Scalar operator+(const Scalar& a, const Scalar& b) {
  Scalar out = a;
  out += b;
  return out;
}

Scalar operator-(const Scalar& a) {
  Scalar out;
  out.comps_.reserve(a.comps_.size());
  for (const auto& [rad, c] : a.comps_) out.comps_.emplace_back(rad, -c);
  return out;
}

Scalar operator-(const Scalar& a, const Scalar& b) {
  Scalar out = a;
  for (const auto& [rad, c] : b.comps_) out.add_component(rad, -c);
  return out;
}

Scalar operator*(const Scalar& a, const Scalar& b) {
  Scalar out;
  for (const auto& [ra, ca] : a.comps_)
    for (const auto& [rb, cb] : b.comps_) {
      std::uint64_t g = std::gcd(ra, rb);
      std::uint64_t rad = (ra / g) * (rb / g);
      GaussRational c = ca * cb;
      if (g != 1) {
        Rational gq(static_cast<long>(g));
        c = GaussRational{c.re * gq, c.im * gq};
      }
      out.add_component(rad, c);
    }
  return out;
}

bool operator==(const Scalar& a, const Scalar& b) {
  return a.comps_ == b.comps_;
}

Scalar operator*(const Rational& q, const Scalar& s) {
  return Scalar::from(q) * s;
}

Scalar Scalar::pow(unsigned e) const {
  Scalar out = Scalar::from(1);
  for (unsigned i = 0; i < e; ++i) out = out * *this;
  return out;
}

namespace {

// Flip the sign of every component whose radicand is divisible by p.
Scalar conjugate_prime(const Scalar& s, std::uint64_t p) {
  Scalar out;
  for (const auto& [rad, c] : s.components())
    out.set_component(rad, rad % p == 0 ? -c : c);
  return out;
}

}  // namespace

Scalar Scalar::inverse() const {
  if (is_zero()) throw Error("Scalar: division by zero");
  // Find a prime occurring in some radicand; descend the quadratic tower.
  std::uint64_t p = 0;
  for (const auto& [rad, c] : comps_) {
    (void)c;
    if (rad > 1) {
      std::uint64_t r = rad;
      for (std::uint64_t q = 2; q * q <= r; ++q)
        if (r % q == 0) {
          p = q;
          break;
        }
      if (p == 0) p = r;
      break;
    }
  }
  if (p == 0) {
    // purely Gaussian-rational
    Scalar out;
    out.set_component(1, GaussRational{1, 0} / comps_.front().second);
    return out;
  }
  Scalar conj = conjugate_prime(*this, p);
  Scalar norm = *this * conj;
  for (const auto& [rad, c] : norm.comps_) {
    (void)c;
    if (rad % p == 0)
      throw Error("Scalar::inverse: prime descent failed (internal)");
  }
  return conj * norm.inverse();
}

}  // namespace superlax
