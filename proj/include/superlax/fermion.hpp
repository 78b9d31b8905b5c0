#pragma once

#include <compare>
#include <cstdint>
#include <map>
#include <optional>
#include <utility>
#include <vector>

#include "superlax/scalar.hpp"
#include "superlax/smallmat.hpp"

namespace superlax {

/// Normal-ordered word psi+_{i1}..psi+_{im} psi_{j1}..psi_{jp} with strictly
/// ascending index lists, stored as bitmasks (bit k-1 = mode k). Signs live in
/// the enclosing polynomial's coefficients.
struct FermionWord {
  std::uint32_t cre = 0;
  std::uint32_t ann = 0;

  auto operator<=>(const FermionWord&) const = default;
  bool is_identity() const { return cre == 0 && ann == 0; }
  /// Change in fermion number produced by the word.
  int number_shift() const;
};

/// Finite sum of normal-ordered words with Scalar coefficients.
class FermionPoly {
 public:
  explicit FermionPoly(int modes) : modes_(modes) {}

  static FermionPoly zero(int modes) { return FermionPoly(modes); }
  static FermionPoly identity(int modes);
  static FermionPoly create(int modes, int i);      // psi+_i, 1-based
  static FermionPoly annihilate(int modes, int i);  // psi_i
  static FermionPoly from_word(int modes, FermionWord w,
                               Scalar c = Scalar::from(1));

  int modes() const { return modes_; }
  bool is_zero() const { return terms_.empty(); }
  const std::map<FermionWord, Scalar>& terms() const { return terms_; }
  void add_term(const FermionWord& w, const Scalar& c);

  FermionPoly adjoint() const;
  FermionPoly scaled(const Scalar& c) const;
  Scalar vacuum_expectation() const;
  bool conserves_number() const;

  FermionPoly& operator+=(const FermionPoly& b);

  friend FermionPoly operator+(const FermionPoly& a, const FermionPoly& b);
  friend FermionPoly operator-(const FermionPoly& a, const FermionPoly& b);
  friend FermionPoly operator*(const FermionPoly& a, const FermionPoly& b);
  friend FermionPoly operator-(const FermionPoly& a);
  friend bool operator==(const FermionPoly& a, const FermionPoly& b);

 private:
  int modes_;
  std::map<FermionWord, Scalar> terms_;
};

inline bool operator!=(const FermionPoly& a, const FermionPoly& b) {
  return !(a == b);
}

/// Normal-ordered expansion of the product of two words; the coefficients
/// carry the anticommutation signs and contractions.
FermionPoly multiply_words(int modes, const FermionWord& a, const FermionWord& b);

/// 1 - (psi+_i - psi+_j)(psi_i - psi_j): the transposition (i j) on fermions.
FermionPoly exchange_operator(int modes, int i, int j);
FermionPoly number_operator(int modes);
/// |0><0| = prod_k (1 - psi+_k psi_k).
FermionPoly vacuum_projector(int modes);

/// Occupation masks of the m-fermion sector with all indices <= max_index,
/// sorted by the index lists lexicographically.
std::vector<std::uint32_t> sector_masks(int modes, int m, int max_index);
/// Full 2^modes basis ordered by (fermion number, index list).
std::vector<std::uint32_t> fock_basis(int modes);

/// Action of a word on an occupation basis state: the resulting mask and
/// sign, or nullopt when the state is annihilated.
std::optional<std::pair<std::uint32_t, int>> apply_word_to_state(
    const FermionWord& w, std::uint32_t mask);

/// Faithful matrix representation on the Fock basis; the independent oracle
/// for the word algebra.
Mat<Scalar> fock_matrix(const FermionPoly& p);

}  // namespace superlax
