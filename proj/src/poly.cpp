#include "superlax/poly.hpp"

namespace superlax {

unsigned total_degree(const Exponents& e) {
  unsigned d = 0;
  for (auto x : e) d += x;
  return d;
}

PackedExp pack_exponents(const Exponents& e) {
  if (e.size() > kMaxPackedVars) throw Error("Poly: too many variables");
  PackedExp key = 0;
  unsigned deg = 0;
  for (std::size_t i = 0; i < e.size(); ++i) {
    if (e[i] > 127) throw Error("Poly: exponent overflow");
    deg += e[i];
    key |= static_cast<PackedExp>(e[i]) << (8 * (6 - i));
  }
  if (deg > 127) throw Error("Poly: degree overflow");
  return key | (static_cast<PackedExp>(deg) << 56);
}

Exponents unpack_exponents(PackedExp key, int nvars) {
  Exponents e(nvars, 0);
  for (int i = 0; i < nvars; ++i)
    e[i] = static_cast<std::uint16_t>(packed_exp(key, i));
  return e;
}

Poly Poly::constant(int nvars, Scalar c) {
  Poly p(nvars);
  p.add_term(PackedExp{0}, c);
  return p;
}

Poly Poly::variable(int nvars, int index) {
  if (index < 0 || index >= nvars) throw Error("Poly::variable: index out of range");
  Poly p(nvars);
  p.add_term(packed_shift(0, index, 1), Scalar::from(1));
  return p;
}

bool Poly::is_constant() const {
  if (terms_.empty()) return true;
  return terms_.size() == 1 && terms_.begin()->first == 0;
}

Scalar Poly::constant_value() const {
  if (terms_.empty()) return Scalar();
  if (!is_constant()) throw Error("Poly: not a constant");
  return terms_.begin()->second;
}

unsigned Poly::degree_in(int index) const {
  unsigned d = 0;
  for (const auto& [e, c] : terms_) {
    (void)c;
    if (packed_exp(e, index) > d) d = packed_exp(e, index);
  }
  return d;
}

void Poly::add_term(PackedExp key, const Scalar& c) {
  if (c.is_zero()) return;
  auto it = terms_.find(key);
  if (it == terms_.end()) {
    terms_.emplace(key, c);
  } else {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

Poly Poly::derivative(int index) const {
  Poly out(nvars_);
  for (const auto& [e, c] : terms_) {
    unsigned exp = packed_exp(e, index);
    if (exp == 0) continue;
    out.add_term(packed_shift(e, index, -1),
                 Scalar::from(rational(exp)) * c);
  }
  return out;
}

Scalar Poly::eval(const std::vector<Scalar>& point) const {
  if (static_cast<int>(point.size()) != nvars_)
    throw Error("Poly::eval: wrong point arity");
  Scalar acc;
  for (const auto& [e, c] : terms_) {
    Scalar term = c;
    for (int i = 0; i < nvars_; ++i) {
      unsigned exp = packed_exp(e, i);
      if (exp > 0) term = term * point[i].pow(exp);
    }
    acc += term;
  }
  return acc;
}

std::optional<Poly> Poly::divide_exact(const Poly& divisor) const {
  if (divisor.is_zero()) throw Error("Poly: division by zero polynomial");
  Poly remainder = *this;
  Poly quotient(nvars_);
  const auto& lead = *divisor.terms_.rbegin();
  Scalar lead_inv = lead.second.inverse();
  while (!remainder.is_zero()) {
    const auto& rlead = *remainder.terms_.rbegin();
    if (!packed_divides(lead.first, rlead.first)) return std::nullopt;
    PackedExp t = rlead.first - lead.first;
    Scalar coef = rlead.second * lead_inv;
    quotient.add_term(t, coef);
    // remainder -= divisor * (coef, t)
    for (const auto& [e, c] : divisor.terms_)
      remainder.add_term(packed_product(e, t), -(c * coef));
  }
  return quotient;
}

Poly Poly::negate_variable(int index) const {
  Poly out(nvars_);
  for (const auto& [e, c] : terms_)
    out.terms_.emplace(e, packed_exp(e, index) % 2 == 0 ? c : -c);
  return out;
}

Poly Poly::conjugate_scalars() const {
  Poly out(nvars_);
  for (const auto& [e, c] : terms_) out.terms_.emplace(e, c.conjugate());
  return out;
}

Poly& Poly::operator+=(const Poly& b) {
  for (const auto& [e, c] : b.terms_) add_term(e, c);
  return *this;
}

Poly operator+(const Poly& a, const Poly& b) {
  Poly out = a;
  out += b;
  return out;
}

Poly operator-(const Poly& a) {
  Poly out(a.nvars_);
  for (const auto& [e, c] : a.terms_) out.terms_.emplace(e, -c);
  return out;
}

Poly operator-(const Poly& a, const Poly& b) {
  Poly out = a;
  for (const auto& [e, c] : b.terms_) out.add_term(e, -c);
  return out;
}

Poly operator*(const Poly& a, const Poly& b) {
  Poly out(a.nvars_);
  for (const auto& [ea, ca] : a.terms_)
    for (const auto& [eb, cb] : b.terms_)
      out.add_term(packed_product(ea, eb), ca * cb);
  return out;
}

bool operator==(const Poly& a, const Poly& b) {
  return a.nvars_ == b.nvars_ && a.terms_ == b.terms_;
}

Poly Poly::scaled(const Scalar& c) const {
  Poly out(nvars_);
  if (c.is_zero()) return out;
  for (const auto& [e, s] : terms_) out.add_term(e, s * c);
  return out;
}

}  // namespace superlax
