#pragma once

#include <array>
#include <cstdint>
#include <random>
#include <utility>
#include <vector>

#include "coct/color.hpp"
#include "coct/pattern.hpp"

namespace coct {

inline constexpr int kL0Size = 12;

/// An element (x, y) of the 3-chain times the 4-element diamond, x in 1..3
/// and y in 1..4 (y = 1 bottom, y = 4 top).
struct L0Element {
  int x = 1;
  int y = 1;

  /// (x-1)*4 + (y-1); a linear extension of the order.
  int index() const { return (x - 1) * 4 + (y - 1); }
  static L0Element from_index(int d) { return {d / 4 + 1, d % 4 + 1}; }

  friend bool operator==(const L0Element&, const L0Element&) = default;
};

bool leq0(L0Element a, L0Element b);
L0Element join0(L0Element a, L0Element b);

/// 12^k, for k <= 8.
std::uint64_t num_states(int k);
/// The digit of `state` at label position `label` (1-based).
int state_digit(std::uint64_t state, int label);
/// Digit-wise join0 of two state indices.
std::uint64_t state_join(std::uint64_t a, std::uint64_t b, int k);
/// Digit-wise order.
bool state_leq(std::uint64_t a, std::uint64_t b, int k);

std::uint64_t rho(const CsPattern& p, Coloring c, int k);
std::pair<CsPattern, Coloring> rho_inv(std::uint64_t state, int k);

/// Packed bit vector over a state space.
class GF2Vector {
 public:
  GF2Vector() = default;
  explicit GF2Vector(std::size_t size) : size_(size), words_((size + 63) / 64, 0) {}

  static GF2Vector random(std::size_t size, std::mt19937_64& rng);
  static GF2Vector unit(std::size_t size, std::size_t index);

  std::size_t size() const { return size_; }
  bool get(std::size_t i) const { return (words_[i >> 6] >> (i & 63)) & 1U; }
  void set(std::size_t i, bool value);
  void flip(std::size_t i) { words_[i >> 6] ^= std::uint64_t{1} << (i & 63); }
  std::size_t count() const;

  GF2Vector& operator^=(const GF2Vector& other);
  friend bool operator==(const GF2Vector&, const GF2Vector&) = default;

 private:
  std::size_t size_ = 0;
  std::vector<std::uint64_t> words_;
};

/// Row z of a 12x12 GF(2) matrix as a bitmask over columns. Both transforms
/// below are lower unitriangular in the index order of L0Element.
using Matrix12 = std::array<std::uint16_t, kL0Size>;

/// zeta[z] has bit y iff y <= z.
const Matrix12& zeta_matrix();
/// The GF(2) inverse of zeta_matrix().
const Matrix12& mobius_matrix();
Matrix12 multiply(const Matrix12& a, const Matrix12& b);

enum class Exec { serial, parallel };

/// In-place coordinate-wise transform of a state-major table: `data` holds
/// 12^k consecutive rows of `row_words` words each, and every row is
/// treated as one vector entry.
void transform_rows(std::uint64_t* data, int k, std::size_t row_words, const Matrix12& m, Exec exec);
inline void zeta_rows(std::uint64_t* data, int k, std::size_t row_words, Exec exec) {
  transform_rows(data, k, row_words, zeta_matrix(), exec);
}
inline void mobius_rows(std::uint64_t* data, int k, std::size_t row_words, Exec exec) {
  transform_rows(data, k, row_words, mobius_matrix(), exec);
}

GF2Vector zeta(const GF2Vector& a, int k);
GF2Vector mobius(const GF2Vector& a, int k);

/// C[z] = sum over x join y = z of A[x] B[y], by direct double loop.
GF2Vector vee_product_naive(const GF2Vector& a, const GF2Vector& b, int k);
/// Same result through zeta, pointwise product and Moebius inversion.
GF2Vector vee_product_fast(const GF2Vector& a, const GF2Vector& b, int k, Exec exec = Exec::serial);

}  // namespace coct
