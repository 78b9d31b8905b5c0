#include "superlax/op.hpp"

namespace superlax {

Operator Operator::identity(const Chart& chart) {
  return from_coeff(chart, RatCoeff::one(chart.particles));
}

Operator Operator::from_coeff(const Chart& chart, const RatCoeff& c) {
  Operator out(chart);
  out.add_term({PackedExp{0}, FermionWord{}}, c);
  return out;
}

Operator Operator::from_scalar(const Chart& chart, const Scalar& c) {
  return from_coeff(chart, RatCoeff::constant(chart.particles, c));
}

Operator Operator::partial(const Chart& chart, int k) {
  if (k < 1 || k > chart.particles) throw Error("Operator::partial: bad index");
  Operator out(chart);
  out.add_term({packed_shift(0, k - 1, 1), FermionWord{}},
               RatCoeff::one(chart.particles));
  return out;
}

Operator Operator::from_fermion(const Chart& chart, const FermionPoly& p) {
  if (p.modes() != chart.particles)
    throw Error("Operator::from_fermion: mode count mismatch");
  Operator out(chart);
  for (const auto& [w, c] : p.terms())
    out.add_term({PackedExp{0}, w}, RatCoeff::constant(chart.particles, c));
  return out;
}

Operator Operator::term(const Chart& chart, RatCoeff c, Exponents deriv,
                        FermionWord w) {
  Operator out(chart);
  out.add_term({pack_exponents(deriv), w}, c);
  return out;
}

void Operator::add_term(const OpKey& k, const RatCoeff& c) {
  if (c.is_zero()) return;
  auto it = terms_.find(k);
  if (it == terms_.end()) {
    terms_.emplace(k, c);
  } else {
    RatCoeff s = it->second + c;
    if (s.is_zero())
      terms_.erase(it);
    else
      it->second = std::move(s);
  }
}

bool Operator::conserves_fermion_number() const {
  for (const auto& [k, c] : terms_) {
    (void)c;
    if (k.word.number_shift() != 0) return false;
  }
  return true;
}

Operator Operator::scaled(const Scalar& c) const {
  Operator out(chart_);
  if (c.is_zero()) return out;
  for (const auto& [k, s] : terms_) out.add_term(k, s.scaled(c));
  return out;
}

Operator Operator::scaled(const RatCoeff& c) const {
  Operator out(chart_);
  if (c.is_zero()) return out;
  for (const auto& [k, s] : terms_) out.add_term(k, c * s);
  return out;
}

Operator Operator::negate_omega() const {
  Operator out(chart_);
  for (const auto& [k, s] : terms_) out.add_term(k, s.negate_omega());
  return out;
}

Operator& Operator::operator+=(const Operator& b) {
  if (!(chart_ == b.chart_)) throw Error("Operator: chart mismatch");
  for (const auto& [k, c] : b.terms_) add_term(k, c);
  return *this;
}

Operator operator+(const Operator& a, const Operator& b) {
  Operator out = a;
  out += b;
  return out;
}

Operator operator-(const Operator& a) {
  Operator out(a.chart_);
  for (const auto& [k, c] : a.terms_) out.terms_.emplace(k, -c);
  return out;
}

Operator operator-(const Operator& a, const Operator& b) {
  if (!(a.chart_ == b.chart_)) throw Error("Operator: chart mismatch");
  Operator out = a;
  for (const auto& [k, c] : b.terms_) out.add_term(k, -c);
  return out;
}

namespace {

long long binomial(unsigned n, unsigned k) {
  if (k > n) return 0;
  long long r = 1;
  for (unsigned i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

}  // namespace

Operator operator*(const Operator& a, const Operator& b) {
  if (!(a.chart_ == b.chart_)) throw Error("Operator: chart mismatch");
  const Chart& chart = a.chart_;
  int n = chart.particles;
  Operator out(chart);
  std::vector<std::pair<PackedExp, RatCoeff>> pieces, next;
  for (const auto& [ka, ca] : a.terms_)
    for (const auto& [kb, cb] : b.terms_) {
      FermionPoly words = multiply_words(n, ka.word, kb.word);
      if (words.is_zero()) continue;
      // push d^alpha through cb by the Leibniz rule:
      // d^a (cb .) = sum_g C(a,g) (d^{a-g} cb) d^g
      pieces.clear();
      pieces.emplace_back(PackedExp{0}, cb);
      for (int k = 0; k < n; ++k) {
        unsigned e = packed_exp(ka.deriv, k);
        if (e == 0) continue;
        next.clear();
        for (auto& [gamma, f] : pieces) {
          // successive chart derivatives of f, reused across the split
          RatCoeff df = f;
          for (unsigned down = 0; down <= e; ++down) {
            unsigned t = e - down;  // derivatives remaining on the right
            if (!df.is_zero())
              next.emplace_back(
                  packed_shift(gamma, k, static_cast<int>(t)),
                  df.scaled(Scalar::from(
                      static_cast<long>(binomial(e, t)))));
            if (t == 0) break;
            df = df.derive(k + 1, chart);
            if (df.is_zero()) break;
          }
        }
        pieces.swap(next);
      }
      for (const auto& [gamma, f] : pieces) {
        RatCoeff coeff = ca * f;
        if (coeff.is_zero()) continue;
        PackedExp deriv = packed_product(gamma, kb.deriv);
        for (const auto& [w, s] : words.terms())
          out.add_term({deriv, w}, coeff.scaled(s));
      }
    }
  return out;
}

bool operator==(const Operator& a, const Operator& b) {
  return a.chart_ == b.chart_ && a.terms_ == b.terms_;
}

Operator Operator::adjoint() const {
  const Chart& chart = chart_;
  int n = chart.particles;
  Operator out(chart);
  for (const auto& [k, c] : terms_) {
    // (c d^a w)^+ = (-1)^|a| d^a o conj(c) o w^+
    unsigned order = packed_degree(k.deriv);
    FermionPoly wdag = FermionPoly::from_word(n, k.word).adjoint();
    RatCoeff cc = c.conjugate(chart);
    if (order % 2 == 1) cc = -cc;
    Operator piece(chart);
    for (const auto& [w, s] : wdag.terms())
      piece.add_term({PackedExp{0}, w}, cc.scaled(s));
    Operator dpow(chart);
    dpow.add_term({k.deriv, FermionWord{}}, RatCoeff::one(n));
    out += dpow * piece;
  }
  return out;
}

Operator commutator(const Operator& a, const Operator& b) {
  return a * b - b * a;
}

Operator anticommutator(const Operator& a, const Operator& b) {
  return a * b + b * a;
}

Operator laplacian(const Chart& chart) {
  Operator out(chart);
  for (int k = 1; k <= chart.particles; ++k)
    out.add_term({packed_shift(0, k - 1, 2), FermionWord{}},
                 RatCoeff::one(chart.particles));
  return out;
}

Operator number_op(const Chart& chart) {
  return Operator::from_fermion(chart, number_operator(chart.particles));
}

WaveFunction WaveFunction::unit(const Chart& chart) {
  return state(chart, 0, RatCoeff::one(chart.particles));
}

WaveFunction WaveFunction::state(const Chart& chart, std::uint32_t mask,
                                 RatCoeff coeff) {
  WaveFunction f(chart);
  f.add(mask, coeff);
  return f;
}

void WaveFunction::add(std::uint32_t mask, const RatCoeff& c) {
  if (c.is_zero()) return;
  auto it = comps_.find(mask);
  if (it == comps_.end()) {
    comps_.emplace(mask, c);
  } else {
    RatCoeff s = it->second + c;
    if (s.is_zero())
      comps_.erase(it);
    else
      it->second = std::move(s);
  }
}

WaveFunction operator+(const WaveFunction& a, const WaveFunction& b) {
  if (!(a.chart_ == b.chart_)) throw Error("WaveFunction: chart mismatch");
  WaveFunction out = a;
  for (const auto& [m, c] : b.comps_) out.add(m, c);
  return out;
}

WaveFunction operator-(const WaveFunction& a, const WaveFunction& b) {
  if (!(a.chart_ == b.chart_)) throw Error("WaveFunction: chart mismatch");
  WaveFunction out = a;
  for (const auto& [m, c] : b.comps_) out.add(m, -c);
  return out;
}

bool operator==(const WaveFunction& a, const WaveFunction& b) {
  return a.chart_ == b.chart_ && a.comps_ == b.comps_;
}

WaveFunction WaveFunction::scaled(const RatCoeff& c) const {
  WaveFunction out(chart_);
  for (const auto& [m, f] : comps_) out.add(m, c * f);
  return out;
}

WaveFunction apply(const Operator& a, const WaveFunction& f) {
  if (!(a.chart() == f.chart())) throw Error("apply: chart mismatch");
  const Chart& chart = a.chart();
  WaveFunction out(chart);
  for (const auto& [k, c] : a.terms())
    for (const auto& [mask, g] : f.components()) {
      auto hit = apply_word_to_state(k.word, mask);
      if (!hit) continue;
      RatCoeff dg = g;
      for (int v = 0; v < chart.particles && !dg.is_zero(); ++v)
        for (unsigned t = 0; t < packed_exp(k.deriv, v) && !dg.is_zero(); ++t)
          dg = dg.derive(v + 1, chart);
      if (dg.is_zero()) continue;
      RatCoeff piece = c * dg;
      if (hit->second < 0) piece = -piece;
      out.add(hit->first, piece);
    }
  return out;
}

Mat<Operator> block_in_kets(const Operator& a,
                            const std::vector<FermionPoly>& kets) {
  if (!a.conserves_fermion_number())
    throw Error("sector_block: operator does not conserve fermion number");
  const Chart& chart = a.chart();
  int n = chart.particles;
  int dim = static_cast<int>(kets.size());
  if (dim == 0) throw Error("sector_block: empty basis");
  std::vector<FermionPoly> bras;
  bras.reserve(kets.size());
  for (const auto& ket : kets) bras.push_back(ket.adjoint());
  Mat<Operator> out(dim, dim, Operator::zero(chart));
  for (const auto& [k, c] : a.terms()) {
    FermionPoly w = FermionPoly::from_word(n, k.word);
    for (int r = 0; r < dim; ++r)
      for (int col = 0; col < dim; ++col) {
        Scalar s = (bras[r] * w * kets[col]).vacuum_expectation();
        if (s.is_zero()) continue;
        out.at(r, col).add_term({k.deriv, FermionWord{}}, c.scaled(s));
      }
  }
  return out;
}

Mat<Operator> sector_block(const Operator& a, int m) {
  int n = a.particles();
  std::vector<FermionPoly> kets;
  for (std::uint32_t mask : sector_masks(n, m, n))
    kets.push_back(FermionPoly::from_word(n, FermionWord{mask, 0}));
  return block_in_kets(a, kets);
}

Operator gauge_conjugate(const Operator& a,
                         const std::vector<RatCoeff>& weights) {
  const Chart& chart = a.chart();
  int n = chart.particles;
  if (static_cast<int>(weights.size()) != n)
    throw Error("gauge_conjugate: need one weight per particle");
  std::vector<Operator> gen;
  gen.reserve(n);
  for (int k = 1; k <= n; ++k)
    gen.push_back(Operator::partial(chart, k) +
                  Operator::from_coeff(chart, weights[k - 1]));
  Operator out(chart);
  for (const auto& [k, c] : a.terms()) {
    Operator piece = Operator::from_coeff(chart, c);
    for (int v = 0; v < n; ++v)
      for (unsigned t = 0; t < packed_exp(k.deriv, v); ++t)
        piece = piece * gen[v];
    piece = piece *
            Operator::from_fermion(chart, FermionPoly::from_word(n, k.word));
    out += piece;
  }
  return out;
}

Mat<Operator> identity_matrix(const Chart& chart, int dim) {
  Mat<Operator> out(dim, dim, Operator::zero(chart));
  for (int i = 0; i < dim; ++i) out.at(i, i) = Operator::identity(chart);
  return out;
}

}  // namespace superlax
