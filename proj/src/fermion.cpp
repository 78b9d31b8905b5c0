#include "superlax/fermion.hpp"

#include <algorithm>
#include <bit>

namespace superlax {

namespace {

struct Gen {
  std::uint8_t index;  // 1-based
  bool dagger;
};

std::vector<Gen> word_to_sequence(const FermionWord& w) {
  std::vector<Gen> seq;
  for (int i = 1; i <= 32; ++i)
    if (w.cre & (1u << (i - 1))) seq.push_back({static_cast<std::uint8_t>(i), true});
  for (int i = 1; i <= 32; ++i)
    if (w.ann & (1u << (i - 1))) seq.push_back({static_cast<std::uint8_t>(i), false});
  return seq;
}

}  // namespace

int FermionWord::number_shift() const {
  return std::popcount(cre) - std::popcount(ann);
}

FermionPoly FermionPoly::identity(int modes) {
  return from_word(modes, FermionWord{});
}

FermionPoly FermionPoly::create(int modes, int i) {
  if (i < 1 || i > modes) throw Error("FermionPoly::create: bad mode");
  return from_word(modes, FermionWord{1u << (i - 1), 0});
}

FermionPoly FermionPoly::annihilate(int modes, int i) {
  if (i < 1 || i > modes) throw Error("FermionPoly::annihilate: bad mode");
  return from_word(modes, FermionWord{0, 1u << (i - 1)});
}

FermionPoly FermionPoly::from_word(int modes, FermionWord w, Scalar c) {
  FermionPoly p(modes);
  p.add_term(w, c);
  return p;
}

void FermionPoly::add_term(const FermionWord& w, const Scalar& c) {
  if (c.is_zero()) return;
  auto it = terms_.find(w);
  if (it == terms_.end()) {
    terms_.emplace(w, c);
  } else {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

FermionPoly& FermionPoly::operator+=(const FermionPoly& b) {
  for (const auto& [w, c] : b.terms_) add_term(w, c);
  return *this;
}

FermionPoly FermionPoly::adjoint() const {
  FermionPoly out(modes_);
  for (const auto& [w, c] : terms_) {
    int m = std::popcount(w.cre);
    int p = std::popcount(w.ann);
    // (psi+_I psi_J)^dagger = psi+_J psi_I up to the reversal parities
    int swaps = p * (p - 1) / 2 + m * (m - 1) / 2;
    Scalar coeff = c.conjugate();
    if (swaps % 2 == 1) coeff = -coeff;
    out.add_term(FermionWord{w.ann, w.cre}, coeff);
  }
  return out;
}

FermionPoly FermionPoly::scaled(const Scalar& c) const {
  FermionPoly out(modes_);
  if (c.is_zero()) return out;
  for (const auto& [w, s] : terms_) out.add_term(w, s * c);
  return out;
}

Scalar FermionPoly::vacuum_expectation() const {
  auto it = terms_.find(FermionWord{});
  return it == terms_.end() ? Scalar() : it->second;
}

bool FermionPoly::conserves_number() const {
  for (const auto& [w, c] : terms_) {
    (void)c;
    if (w.number_shift() != 0) return false;
  }
  return true;
}

FermionPoly operator+(const FermionPoly& a, const FermionPoly& b) {
  FermionPoly out = a;
  for (const auto& [w, c] : b.terms_) out.add_term(w, c);
  return out;
}

FermionPoly operator-(const FermionPoly& a) {
  FermionPoly out(a.modes_);
  for (const auto& [w, c] : a.terms_) out.terms_.emplace(w, -c);
  return out;
}

FermionPoly operator-(const FermionPoly& a, const FermionPoly& b) {
  return a + (-b);
}

FermionPoly operator*(const FermionPoly& a, const FermionPoly& b) {
  FermionPoly out(a.modes_);
  for (const auto& [wa, ca] : a.terms_)
    for (const auto& [wb, cb] : b.terms_) {
      FermionPoly prod = multiply_words(a.modes_, wa, wb);
      Scalar c = ca * cb;
      for (const auto& [w, s] : prod.terms_) out.add_term(w, s * c);
    }
  return out;
}

bool operator==(const FermionPoly& a, const FermionPoly& b) {
  return a.modes_ == b.modes_ && a.terms_ == b.terms_;
}

FermionPoly multiply_words(int modes, const FermionWord& a,
                           const FermionWord& b) {
  FermionPoly out(modes);
  std::vector<Gen> start = word_to_sequence(a);
  {
    std::vector<Gen> tail = word_to_sequence(b);
    start.insert(start.end(), tail.begin(), tail.end());
  }
  // Worklist of (sign, sequence); rewrite adjacent pairs until normal order.
  std::vector<std::pair<int, std::vector<Gen>>> work;
  work.emplace_back(1, std::move(start));
  while (!work.empty()) {
    auto [sign, seq] = std::move(work.back());
    work.pop_back();
    bool rewritten = false;
    for (std::size_t i = 0; i + 1 < seq.size(); ++i) {
      const Gen& g1 = seq[i];
      const Gen& g2 = seq[i + 1];
      if (g1.dagger == g2.dagger) {
        if (g1.index == g2.index) {
          rewritten = true;  // nilpotency: branch dies
          break;
        }
        if (g1.index > g2.index) {
          std::vector<Gen> swapped = seq;
          std::swap(swapped[i], swapped[i + 1]);
          work.emplace_back(-sign, std::move(swapped));
          rewritten = true;
          break;
        }
      } else if (!g1.dagger && g2.dagger) {
        // psi_i psi+_j = delta_ij - psi+_j psi_i
        if (g1.index == g2.index) {
          std::vector<Gen> contracted;
          contracted.reserve(seq.size() - 2);
          contracted.insert(contracted.end(), seq.begin(), seq.begin() + i);
          contracted.insert(contracted.end(), seq.begin() + i + 2, seq.end());
          work.emplace_back(sign, std::move(contracted));
        }
        std::vector<Gen> swapped = seq;
        std::swap(swapped[i], swapped[i + 1]);
        work.emplace_back(-sign, std::move(swapped));
        rewritten = true;
        break;
      }
    }
    if (rewritten) continue;
    FermionWord w;
    for (const Gen& g : seq)
      (g.dagger ? w.cre : w.ann) |= 1u << (g.index - 1);
    out.add_term(w, Scalar::from(sign));
  }
  return out;
}

FermionPoly exchange_operator(int modes, int i, int j) {
  if (i == j) throw Error("exchange_operator: indices must differ");
  FermionPoly diff_c = FermionPoly::create(modes, i) - FermionPoly::create(modes, j);
  FermionPoly diff_a =
      FermionPoly::annihilate(modes, i) - FermionPoly::annihilate(modes, j);
  return FermionPoly::identity(modes) - diff_c * diff_a;
}

FermionPoly number_operator(int modes) {
  FermionPoly out(modes);
  for (int i = 1; i <= modes; ++i) {
    std::uint32_t bit = 1u << (i - 1);
    out.add_term(FermionWord{bit, bit}, Scalar::from(1));
  }
  return out;
}

FermionPoly vacuum_projector(int modes) {
  FermionPoly out = FermionPoly::identity(modes);
  for (int i = 1; i <= modes; ++i) {
    std::uint32_t bit = 1u << (i - 1);
    FermionPoly factor = FermionPoly::identity(modes);
    factor.add_term(FermionWord{bit, bit}, Scalar::from(-1));
    out = out * factor;
  }
  return out;
}

namespace {

// Lexicographic order on ascending index lists encoded as bitmasks.
bool mask_list_less(std::uint32_t a, std::uint32_t b) {
  while (a != 0 && b != 0) {
    int la = std::countr_zero(a);
    int lb = std::countr_zero(b);
    if (la != lb) return la < lb;
    a &= a - 1;
    b &= b - 1;
  }
  return a == 0 && b != 0;
}

}  // namespace

std::vector<std::uint32_t> sector_masks(int modes, int m, int max_index) {
  if (m < 0 || m > modes) throw Error("sector_masks: bad fermion number");
  std::vector<std::uint32_t> out;
  std::uint32_t limit = 1u << max_index;
  for (std::uint32_t mask = 0; mask < limit; ++mask)
    if (std::popcount(mask) == m) out.push_back(mask);
  std::sort(out.begin(), out.end(), mask_list_less);
  return out;
}

std::vector<std::uint32_t> fock_basis(int modes) {
  std::vector<std::uint32_t> out;
  for (int m = 0; m <= modes; ++m) {
    auto sect = sector_masks(modes, m, modes);
    out.insert(out.end(), sect.begin(), sect.end());
  }
  return out;
}

std::optional<std::pair<std::uint32_t, int>> apply_word_to_state(
    const FermionWord& w, std::uint32_t mask) {
  int sign = 1;
  auto parity_below = [&](int i) {
    return std::popcount(mask & ((1u << (i - 1)) - 1));
  };
  // annihilators act right-to-left: highest index first
  for (int i = 32; i >= 1; --i) {
    if (!(w.ann & (1u << (i - 1)))) continue;
    if (!(mask & (1u << (i - 1)))) return std::nullopt;
    if (parity_below(i) % 2 == 1) sign = -sign;
    mask &= ~(1u << (i - 1));
  }
  for (int i = 32; i >= 1; --i) {
    if (!(w.cre & (1u << (i - 1)))) continue;
    if (mask & (1u << (i - 1))) return std::nullopt;
    if (parity_below(i) % 2 == 1) sign = -sign;
    mask |= 1u << (i - 1);
  }
  return std::make_pair(mask, sign);
}

Mat<Scalar> fock_matrix(const FermionPoly& p) {
  auto basis = fock_basis(p.modes());
  std::map<std::uint32_t, int> pos;
  for (std::size_t i = 0; i < basis.size(); ++i)
    pos[basis[i]] = static_cast<int>(i);
  int dim = static_cast<int>(basis.size());
  Mat<Scalar> out(dim, dim, Scalar());
  for (int col = 0; col < dim; ++col)
    for (const auto& [w, c] : p.terms()) {
      auto hit = apply_word_to_state(w, basis[col]);
      if (!hit) continue;
      auto [m, sign] = *hit;
      int row = pos.at(m);
      out.at(row, col) = out.at(row, col) + Scalar::from(sign) * c;
    }
  return out;
}

}  // namespace superlax
