#include "superlax/serialize.hpp"

#include <bit>
#include <sstream>
#include <vector>

namespace superlax {

namespace {

std::string rat_str(const Rational& q) { return q.get_str(); }

// One printed summand per nonzero (radicand, re/im) pair.
std::vector<std::string> scalar_pieces(const Scalar& s) {
  std::vector<std::string> out;
  for (const auto& [rad, c] : s.components()) {
    std::string tail;
    if (rad != 1) tail = "*sqrt(" + std::to_string(rad) + ")";
    if (c.re != 0) out.push_back(rat_str(c.re) + tail);
    if (c.im != 0) out.push_back(rat_str(c.im) + "*I" + tail);
  }
  return out;
}

std::string join(const std::vector<std::string>& parts, const char* sep) {
  std::string out;
  for (std::size_t i = 0; i < parts.size(); ++i) {
    if (i) out += sep;
    out += parts[i];
  }
  return out;
}

std::string var_name(int index, int particles) {
  if (index < particles) return "v" + std::to_string(index + 1);
  if (index == particles) return "l";
  return "w";
}

std::string poly_term_str(const Exponents& e, const Scalar& c, int particles) {
  auto pieces = scalar_pieces(c);
  std::string coeff =
      pieces.size() == 1 ? pieces[0] : "(" + join(pieces, " + ") + ")";
  std::string mono;
  for (std::size_t i = 0; i < e.size(); ++i) {
    if (e[i] == 0) continue;
    if (!mono.empty()) mono += "*";
    mono += var_name(static_cast<int>(i), particles);
    if (e[i] > 1) mono += "^" + std::to_string(e[i]);
  }
  if (mono.empty()) return coeff;
  return coeff + "*" + mono;
}

}  // namespace

std::string to_string(const Scalar& s) {
  auto pieces = scalar_pieces(s);
  if (pieces.empty()) return "0";
  return join(pieces, " + ");
}

std::string to_string(const Atom& a) {
  if (a.kind == Atom::Kind::diff)
    return "(v" + std::to_string(a.i) + "-v" + std::to_string(a.j) + ")";
  return "v" + std::to_string(a.i);
}

std::string to_string(const Poly& p) {
  if (p.is_zero()) return "0";
  int particles = p.nvars() - 2;
  std::vector<std::string> parts;
  // leading term first
  for (auto it = p.terms().rbegin(); it != p.terms().rend(); ++it)
    parts.push_back(poly_term_str(unpack_exponents(it->first, p.nvars()),
                                  it->second, particles));
  return join(parts, " + ");
}

std::string to_string(const RatCoeff& c) {
  std::string den;
  for (const auto& [atom, e] : c.denominator()) {
    if (!den.empty()) den += "*";
    den += to_string(atom);
    if (e > 1) den += "^" + std::to_string(e);
  }
  if (den.empty()) den = "1";
  return "(" + to_string(c.numerator()) + ")/(" + den + ")";
}

std::string to_string(const FermionWord& w) {
  std::vector<std::string> parts;
  for (int i = 1; i <= 32; ++i)
    if (w.cre & (1u << (i - 1))) parts.push_back("psi+(" + std::to_string(i) + ")");
  for (int i = 1; i <= 32; ++i)
    if (w.ann & (1u << (i - 1))) parts.push_back("psi(" + std::to_string(i) + ")");
  return join(parts, " ");
}

std::string to_string(const FermionPoly& p) {
  if (p.is_zero()) return "0";
  std::vector<std::string> parts;
  for (const auto& [w, c] : p.terms()) {
    auto pieces = scalar_pieces(c);
    std::string coeff =
        pieces.size() == 1 ? pieces[0] : "(" + join(pieces, " + ") + ")";
    std::string f = to_string(w);
    parts.push_back(f.empty() ? coeff : coeff + " * " + f);
  }
  return join(parts, " + ");
}

std::string to_string(const Operator& a) {
  if (a.is_zero()) return "0";
  std::vector<std::string> parts;
  for (const auto& [k, c] : a.terms()) {
    std::string term = to_string(c);
    std::string dpart;
    for (int i = 0; i < a.particles(); ++i) {
      unsigned e = packed_exp(k.deriv, i);
      if (e == 0) continue;
      if (!dpart.empty()) dpart += " ";
      dpart += "d(" + std::to_string(i + 1) + ")";
      if (e > 1) dpart += "^" + std::to_string(e);
    }
    if (!dpart.empty()) term += " * " + dpart;
    std::string fpart = to_string(k.word);
    if (!fpart.empty()) term += " * " + fpart;
    parts.push_back(term);
  }
  return join(parts, " + ");
}

std::string to_string(const WaveFunction& f) {
  if (f.is_zero()) return "0";
  std::vector<std::string> parts;
  for (const auto& [mask, c] : f.components()) {
    std::string state = "|";
    bool first = true;
    for (int i = 1; i <= 32; ++i)
      if (mask & (1u << (i - 1))) {
        if (!first) state += " ";
        state += std::to_string(i);
        first = false;
      }
    if (first) state += "0";
    state += ">";
    parts.push_back(to_string(c) + " * " + state);
  }
  return join(parts, " + ");
}

// ---------------------------------------------------------------------------
// parsing

namespace {

class Cursor {
 public:
  explicit Cursor(const std::string& text) : text_(text) {}

  void skip_ws() {
    while (pos_ < text_.size() && text_[pos_] == ' ') ++pos_;
  }
  bool done() {
    skip_ws();
    return pos_ >= text_.size();
  }
  char peek() {
    skip_ws();
    if (pos_ >= text_.size()) throw Error("parse: unexpected end of input");
    return text_[pos_];
  }
  bool try_consume(const std::string& tok) {
    skip_ws();
    if (text_.compare(pos_, tok.size(), tok) == 0) {
      pos_ += tok.size();
      return true;
    }
    return false;
  }
  void expect(const std::string& tok) {
    if (!try_consume(tok))
      throw Error("parse: expected '" + tok + "' at position " +
                  std::to_string(pos_) + " in: " + text_);
  }
  std::string digits() {
    skip_ws();
    std::size_t start = pos_;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_])))
      ++pos_;
    if (start == pos_) throw Error("parse: expected digits in: " + text_);
    return text_.substr(start, pos_ - start);
  }
  unsigned uint_value() { return static_cast<unsigned>(std::stoul(digits())); }

 private:
  const std::string& text_;
  std::size_t pos_ = 0;
};

Rational parse_rational(Cursor& c) {
  bool neg = c.try_consume("-");
  std::string num = c.digits();
  std::string den = c.try_consume("/") ? c.digits() : "1";
  Rational q(num + "/" + den);
  q.canonicalize();
  return neg ? Rational(-q) : q;
}

// rational ['*I'] ['*sqrt(k)']
Scalar parse_piece(Cursor& c, const RadicalBasis* basis) {
  Rational q = parse_rational(c);
  bool imag = c.try_consume("*I");
  std::uint64_t rad = 1;
  if (c.try_consume("*sqrt(")) {
    rad = c.uint_value();
    c.expect(")");
  }
  auto split = square_free_split(rad);
  if (basis && !basis->contains(split.square_free))
    throw Error("parse: radical outside declared basis: sqrt(" +
                std::to_string(rad) + ")");
  Scalar s;
  Rational coeff = q * Rational(static_cast<long>(split.outer));
  s.set_component(split.square_free,
                  imag ? GaussRational{0, coeff} : GaussRational{coeff, 0});
  return s;
}

Scalar parse_scalar_sum(Cursor& c, const RadicalBasis* basis) {
  Scalar s = parse_piece(c, basis);
  while (c.try_consume("+")) s = s + parse_piece(c, basis);
  return s;
}

int parse_var_index(Cursor& c, int particles) {
  if (c.try_consume("v")) {
    int k = static_cast<int>(c.uint_value());
    if (k < 1 || k > particles) throw Error("parse: coordinate index out of range");
    return k - 1;
  }
  if (c.try_consume("l")) return particles;
  if (c.try_consume("w")) return particles + 1;
  throw Error("parse: expected a variable");
}

Poly parse_poly(Cursor& c, int particles, const RadicalBasis* basis) {
  int nv = particles + 2;
  Poly out(nv);
  while (true) {
    Scalar coeff;
    if (c.peek() == '(') {
      c.expect("(");
      coeff = parse_scalar_sum(c, basis);
      c.expect(")");
    } else {
      coeff = parse_piece(c, basis);
    }
    Exponents e(nv, 0);
    while (c.try_consume("*")) {
      int idx = parse_var_index(c, particles);
      unsigned pow = c.try_consume("^") ? c.uint_value() : 1;
      e[idx] = static_cast<std::uint16_t>(e[idx] + pow);
    }
    out.add_term(e, coeff);
    if (!c.try_consume("+")) break;
  }
  return out;
}

std::map<Atom, std::uint32_t> parse_den(Cursor& c, int particles) {
  std::map<Atom, std::uint32_t> den;
  if (c.try_consume("1")) return den;
  while (true) {
    Atom atom;
    if (c.peek() == '(') {
      c.expect("(");
      c.expect("v");
      int i = static_cast<int>(c.uint_value());
      c.expect("-");
      c.expect("v");
      int j = static_cast<int>(c.uint_value());
      c.expect(")");
      atom = Atom::diff(i, j);
    } else {
      c.expect("v");
      atom = Atom::var(static_cast<int>(c.uint_value()));
    }
    if (atom.i > particles || atom.j > particles)
      throw Error("parse: atom index out of range");
    unsigned pow = c.try_consume("^") ? c.uint_value() : 1;
    den[atom] += pow;
    if (!c.try_consume("*")) break;
  }
  return den;
}

RatCoeff parse_ratcoeff_inner(Cursor& c, int particles,
                              const RadicalBasis* basis) {
  c.expect("(");
  Poly num(particles + 2);
  if (c.try_consume("0")) {
    // zero numerator
  } else {
    num = parse_poly(c, particles, basis);
  }
  c.expect(")");
  c.expect("/");
  c.expect("(");
  auto den = parse_den(c, particles);
  c.expect(")");
  return RatCoeff::fraction(std::move(num), std::move(den), particles);
}

}  // namespace

Scalar parse_scalar(const std::string& text) {
  Cursor c(text);
  if (c.try_consume("0") && c.done()) return Scalar();
  Cursor c2(text);
  Scalar s = parse_scalar_sum(c2, nullptr);
  if (!c2.done()) throw Error("parse: trailing input in scalar: " + text);
  return s;
}

RatCoeff parse_ratcoeff(const std::string& text, int particles) {
  Cursor c(text);
  RadicalBasis basis(particles);
  RatCoeff out = parse_ratcoeff_inner(c, particles, &basis);
  if (!c.done()) throw Error("parse: trailing input in coefficient: " + text);
  return out;
}

Operator parse_operator(const std::string& text, const Chart& chart) {
  Cursor c(text);
  Operator out(chart);
  int n = chart.particles;
  RadicalBasis basis(n);
  if (c.try_consume("0") && c.done()) return out;
  Cursor cur(text);
  while (true) {
    RatCoeff coeff = parse_ratcoeff_inner(cur, n, &basis);
    Exponents deriv(n, 0);
    FermionWord word;
    while (cur.try_consume("*")) {
      while (true) {
        if (cur.try_consume("d(")) {
          int k = static_cast<int>(cur.uint_value());
          cur.expect(")");
          if (k < 1 || k > n) throw Error("parse: derivative index out of range");
          unsigned pow = cur.try_consume("^") ? cur.uint_value() : 1;
          deriv[k - 1] = static_cast<std::uint16_t>(deriv[k - 1] + pow);
        } else if (cur.try_consume("psi+(")) {
          int k = static_cast<int>(cur.uint_value());
          cur.expect(")");
          if (k < 1 || k > n) throw Error("parse: mode index out of range");
          word.cre |= 1u << (k - 1);
        } else if (cur.try_consume("psi(")) {
          int k = static_cast<int>(cur.uint_value());
          cur.expect(")");
          if (k < 1 || k > n) throw Error("parse: mode index out of range");
          word.ann |= 1u << (k - 1);
        } else {
          break;
        }
        if (cur.done()) break;
        char ch = cur.peek();
        if (ch == '+' || ch == '*') break;
      }
    }
    out.add_term({pack_exponents(deriv), word}, coeff);
    if (cur.done()) break;
    cur.expect("+");
  }
  return out;
}

}  // namespace superlax
