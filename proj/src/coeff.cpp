#include "superlax/coeff.hpp"

namespace superlax {

Poly atom_poly(int particles, const Atom& a) {
  int nv = particles + 2;
  if (a.kind == Atom::Kind::var) return Poly::variable(nv, a.i - 1);
  return Poly::variable(nv, a.i - 1) - Poly::variable(nv, a.j - 1);
}

RatCoeff RatCoeff::constant(int particles, const Scalar& c) {
  RatCoeff out(particles);
  out.num_ = Poly::constant(particles + 2, c);
  return out;
}

RatCoeff RatCoeff::from_poly(Poly p, int particles) {
  if (p.nvars() != particles + 2) throw Error("RatCoeff: arity mismatch");
  RatCoeff out(particles);
  out.num_ = std::move(p);
  return out;
}

RatCoeff RatCoeff::fraction(Poly num, std::map<Atom, std::uint32_t> den,
                            int particles) {
  if (num.nvars() != particles + 2) throw Error("RatCoeff: arity mismatch");
  RatCoeff out(particles);
  out.num_ = std::move(num);
  out.den_ = std::move(den);
  out.normalize();
  return out;
}

RatCoeff RatCoeff::coordinate(int particles, int k) {
  if (k < 1 || k > particles) throw Error("RatCoeff::coordinate: bad index");
  return from_poly(Poly::variable(particles + 2, k - 1), particles);
}

RatCoeff RatCoeff::param_l(int particles) {
  return from_poly(Poly::variable(particles + 2, particles), particles);
}

RatCoeff RatCoeff::param_omega(int particles) {
  return from_poly(Poly::variable(particles + 2, particles + 1), particles);
}

RatCoeff RatCoeff::inv_diff(int particles, int i, int j) {
  bool flip = i > j;
  Atom a = flip ? Atom::diff(j, i) : Atom::diff(i, j);
  Scalar sign = Scalar::from(flip ? -1 : 1);
  return fraction(Poly::constant(particles + 2, sign), {{a, 1}}, particles);
}

bool RatCoeff::is_coordinate_free() const {
  if (!den_.empty()) return false;
  for (const auto& [e, c] : num_.terms()) {
    (void)c;
    for (int i = 0; i < particles_; ++i)
      if (packed_exp(e, i) != 0) return false;
  }
  return true;
}

Scalar RatCoeff::constant_value() const {
  if (!den_.empty() || !num_.is_constant())
    throw Error("RatCoeff: not a literal constant");
  return num_.constant_value();
}

void RatCoeff::normalize() {
  if (num_.is_zero()) {
    den_.clear();
    return;
  }
  for (auto it = den_.begin(); it != den_.end();) {
    Poly ap = atom_poly(particles_, it->first);
    while (it->second > 0) {
      auto q = num_.divide_exact(ap);
      if (!q) break;
      num_ = std::move(*q);
      --it->second;
    }
    if (it->second == 0)
      it = den_.erase(it);
    else
      ++it;
  }
}

RatCoeff RatCoeff::scaled(const Scalar& c) const {
  RatCoeff out(particles_);
  if (c.is_zero()) return out;
  out.num_ = num_.scaled(c);
  out.den_ = den_;
  return out;
}

RatCoeff operator+(const RatCoeff& a, const RatCoeff& b) {
  if (a.particles_ != b.particles_) throw Error("RatCoeff: arity mismatch");
  // common denominator: per-atom maximum exponent
  std::map<Atom, std::uint32_t> lcm = a.den_;
  for (const auto& [atom, e] : b.den_) {
    auto it = lcm.find(atom);
    if (it == lcm.end())
      lcm[atom] = e;
    else if (it->second < e)
      it->second = e;
  }
  auto scale_num = [&](const RatCoeff& f) {
    Poly out = f.num_;
    for (const auto& [atom, e] : lcm) {
      auto it = f.den_.find(atom);
      std::uint32_t have = it == f.den_.end() ? 0 : it->second;
      Poly ap = atom_poly(f.particles_, atom);
      for (std::uint32_t i = have; i < e; ++i) out = out * ap;
    }
    return out;
  };
  Poly num = scale_num(a) + scale_num(b);
  return RatCoeff::fraction(std::move(num), std::move(lcm), a.particles_);
}

RatCoeff operator-(const RatCoeff& a) {
  RatCoeff out(a.particles_);
  out.num_ = -a.num_;
  out.den_ = a.den_;
  return out;
}

RatCoeff operator-(const RatCoeff& a, const RatCoeff& b) { return a + (-b); }

RatCoeff operator*(const RatCoeff& a, const RatCoeff& b) {
  if (a.particles_ != b.particles_) throw Error("RatCoeff: arity mismatch");
  std::map<Atom, std::uint32_t> den = a.den_;
  for (const auto& [atom, e] : b.den_) den[atom] += e;
  return RatCoeff::fraction(a.num_ * b.num_, std::move(den), a.particles_);
}

bool operator==(const RatCoeff& a, const RatCoeff& b) {
  return a.particles_ == b.particles_ && a.den_ == b.den_ && a.num_ == b.num_;
}

RatCoeff RatCoeff::divide(const RatCoeff& g, const Chart& chart) const {
  if (g.is_zero()) throw Error("RatCoeff: division by zero");
  if (g.particles_ != particles_) throw Error("RatCoeff: arity mismatch");
  // Factor the divisor's numerator into chart atoms times a scalar.
  std::vector<Atom> candidates;
  for (int i = 1; i <= particles_; ++i) {
    for (int j = i + 1; j <= particles_; ++j) candidates.push_back(Atom::diff(i, j));
    if (chart.kind != ChartKind::cartesian) candidates.push_back(Atom::var(i));
  }
  Poly rest = g.num_;
  std::map<Atom, std::uint32_t> extracted;
  for (const Atom& atom : candidates) {
    Poly ap = atom_poly(particles_, atom);
    while (true) {
      auto q = rest.divide_exact(ap);
      if (!q) break;
      rest = std::move(*q);
      ++extracted[atom];
    }
  }
  if (!rest.is_constant())
    throw Error(
        "RatCoeff::divide: divisor is not a scalar times an atom monomial "
        "for this chart");
  Scalar lead = rest.constant_value();
  // f / g = f * g.den / (lead * extracted)
  Poly num = num_.scaled(lead.inverse());
  for (const auto& [atom, e] : g.den_) {
    Poly ap = atom_poly(particles_, atom);
    for (std::uint32_t i = 0; i < e; ++i) num = num * ap;
  }
  std::map<Atom, std::uint32_t> den = den_;
  for (const auto& [atom, e] : extracted) den[atom] += e;
  return RatCoeff::fraction(std::move(num), std::move(den), particles_);
}

RatCoeff RatCoeff::derive(int k, const Chart& chart) const {
  if (k < 1 || k > particles_) throw Error("RatCoeff::derive: bad index");
  // plain d/dv_k by the quotient rule
  RatCoeff result = RatCoeff::fraction(num_.derivative(k - 1), den_, particles_);
  for (const auto& [atom, e] : den_) {
    int datom = 0;
    if (atom.kind == Atom::Kind::diff)
      datom = (atom.i == k) ? 1 : (atom.j == k ? -1 : 0);
    else
      datom = atom.i == k ? 1 : 0;
    if (datom == 0) continue;
    std::map<Atom, std::uint32_t> den = den_;
    den[atom] += 1;
    Scalar c = Scalar::from(-static_cast<long>(e) * datom);
    result = result + RatCoeff::fraction(num_.scaled(c), std::move(den), particles_);
  }
  switch (chart.kind) {
    case ChartKind::cartesian:
      return result;
    case ChartKind::exp_hyperbolic:
      return result * RatCoeff::coordinate(particles_, k).scaled(Scalar::from(2));
    case ChartKind::exp_trigonometric:
      return result * RatCoeff::coordinate(particles_, k)
                          .scaled(Scalar::from(2) * Scalar::imaginary_unit());
  }
  throw Error("RatCoeff::derive: unknown chart");
}

RatCoeff RatCoeff::conjugate(const Chart& chart) const {
  if (chart.kind != ChartKind::exp_trigonometric) {
    RatCoeff out(particles_);
    out.num_ = num_.conjugate_scalars();
    out.den_ = den_;
    return out;
  }
  // v_j lies on the unit circle: conj(v_j) = 1/v_j.
  int nv = particles_ + 2;
  RatCoeff acc(particles_);
  for (const auto& [e, c] : num_.terms()) {
    Exponents rest(nv, 0);
    rest[particles_] = static_cast<std::uint16_t>(packed_exp(e, particles_));
    rest[particles_ + 1] =
        static_cast<std::uint16_t>(packed_exp(e, particles_ + 1));
    Poly mono(nv);
    mono.add_term(rest, c.conjugate());
    std::map<Atom, std::uint32_t> den;
    for (int i = 0; i < particles_; ++i)
      if (packed_exp(e, i) > 0) den[Atom::var(i + 1)] = packed_exp(e, i);
    acc = acc + RatCoeff::fraction(std::move(mono), std::move(den), particles_);
  }
  // conj(1/(v_i - v_j)^e) = (-1)^e (v_i v_j)^e / (v_i - v_j)^e
  // conj(1/v_i^e)         = v_i^e
  for (const auto& [atom, e] : den_) {
    if (atom.kind == Atom::Kind::diff) {
      Poly grow = Poly::constant(nv, Scalar::from(e % 2 == 0 ? 1 : -1));
      Poly vij = Poly::variable(nv, atom.i - 1) * Poly::variable(nv, atom.j - 1);
      for (std::uint32_t t = 0; t < e; ++t) grow = grow * vij;
      acc = acc * RatCoeff::fraction(std::move(grow), {{atom, e}}, particles_);
    } else {
      Poly grow = Poly::constant(nv, Scalar::from(1));
      Poly vi = Poly::variable(nv, atom.i - 1);
      for (std::uint32_t t = 0; t < e; ++t) grow = grow * vi;
      acc = acc * RatCoeff::from_poly(std::move(grow), particles_);
    }
  }
  return acc;
}

RatCoeff RatCoeff::negate_omega() const {
  RatCoeff out(particles_);
  out.num_ = num_.negate_variable(particles_ + 1);
  out.den_ = den_;
  return out;
}

Scalar RatCoeff::eval(const std::vector<Scalar>& point) const {
  Scalar val = num_.eval(point);
  for (const auto& [atom, e] : den_) {
    Scalar av = atom_poly(particles_, atom).eval(point);
    if (av.is_zero()) throw Error("RatCoeff::eval: atom vanishes at the point");
    val = val * av.inverse().pow(e);
  }
  return val;
}

}  // namespace superlax
