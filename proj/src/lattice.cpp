#include "coct/lattice.hpp"

#include <algorithm>
#include <bit>

#include "coct/error.hpp"

namespace coct {

bool leq0(L0Element a, L0Element b) {
  return a.x <= b.x && (b.y == 4 || a.y == 1 || a.y == b.y);
}

L0Element join0(L0Element a, L0Element b) {
  // y - 1 is the two-bit color mask, whose join is OR.
  return {std::max(a.x, b.x), (((a.y - 1) | (b.y - 1)) + 1)};
}

namespace {

constexpr int kMaxStateK = 8;

struct Tables {
  std::array<std::array<std::uint8_t, kL0Size>, kL0Size> join{};
  std::array<std::array<bool, kL0Size>, kL0Size> leq{};
  Matrix12 zeta{};
  Matrix12 mobius{};
};

Matrix12 invert(const Matrix12& m) {
  Matrix12 a = m;
  Matrix12 inv{};
  for (int r = 0; r < kL0Size; ++r) inv[r] = static_cast<std::uint16_t>(1U << r);
  for (int col = 0; col < kL0Size; ++col) {
    int pivot = col;
    while (pivot < kL0Size && !((a[pivot] >> col) & 1U)) ++pivot;
    if (pivot == kL0Size) throw InternalError("singular matrix over GF(2)");
    std::swap(a[pivot], a[col]);
    std::swap(inv[pivot], inv[col]);
    for (int r = 0; r < kL0Size; ++r) {
      if (r != col && ((a[r] >> col) & 1U)) {
        a[r] ^= a[col];
        inv[r] ^= inv[col];
      }
    }
  }
  return inv;
}

const Tables& tables() {
  static const Tables t = [] {
    Tables t;
    for (int a = 0; a < kL0Size; ++a) {
      for (int b = 0; b < kL0Size; ++b) {
        const auto ea = L0Element::from_index(a);
        const auto eb = L0Element::from_index(b);
        t.join[a][b] = static_cast<std::uint8_t>(join0(ea, eb).index());
        t.leq[a][b] = leq0(ea, eb);
        if (t.leq[a][b]) t.zeta[b] |= static_cast<std::uint16_t>(1U << a);
      }
    }
    t.mobius = invert(t.zeta);
    for (int z = 0; z < kL0Size; ++z) {
      // Both must be lower unitriangular for the in-place sweep.
      if ((t.zeta[z] >> z) != 1U || (t.mobius[z] >> z) != 1U) {
        throw InternalError("index order is not a linear extension");
      }
    }
    return t;
  }();
  return t;
}

}  // namespace

std::uint64_t num_states(int k) {
  if (k < 0 || k > kMaxStateK) throw InputError("state space supports k <= " + std::to_string(kMaxStateK));
  std::uint64_t n = 1;
  for (int i = 0; i < k; ++i) n *= kL0Size;
  return n;
}

int state_digit(std::uint64_t state, int label) {
  for (int i = 1; i < label; ++i) state /= kL0Size;
  return static_cast<int>(state % kL0Size);
}

std::uint64_t state_join(std::uint64_t a, std::uint64_t b, int k) {
  const auto& t = tables();
  std::uint64_t out = 0;
  std::uint64_t place = 1;
  for (int i = 0; i < k; ++i) {
    out += place * t.join[a % kL0Size][b % kL0Size];
    a /= kL0Size;
    b /= kL0Size;
    place *= kL0Size;
  }
  return out;
}

bool state_leq(std::uint64_t a, std::uint64_t b, int k) {
  const auto& t = tables();
  for (int i = 0; i < k; ++i) {
    if (!t.leq[a % kL0Size][b % kL0Size]) return false;
    a /= kL0Size;
    b /= kL0Size;
  }
  return true;
}

std::uint64_t rho(const CsPattern& p, Coloring c, int k) {
  num_states(k);
  std::uint64_t out = 0;
  for (int i = k; i >= 1; --i) {
    const std::uint32_t b = std::uint32_t{1} << (i - 1);
    const int x = (p.zero_labels() & b) ? 3 : (p.labels() & b) ? 2 : 1;
    const int y = static_cast<int>(c[i]) + 1;
    out = out * kL0Size + static_cast<std::uint64_t>(L0Element{x, y}.index());
  }
  return out;
}

std::pair<CsPattern, Coloring> rho_inv(std::uint64_t state, int k) {
  if (state >= num_states(k)) throw InputError("state index out of range");
  std::uint32_t x = 0;
  std::uint32_t y = 0;
  Coloring c;
  for (int i = 1; i <= k; ++i) {
    const auto e = L0Element::from_index(static_cast<int>(state % kL0Size));
    state /= kL0Size;
    const std::uint32_t b = std::uint32_t{1} << (i - 1);
    if (e.x >= 2) x |= b;
    if (e.x == 3) y |= b;
    c.set(i, static_cast<Color>(e.y - 1));
  }
  return {CsPattern(x, y), c};
}

GF2Vector GF2Vector::random(std::size_t size, std::mt19937_64& rng) {
  GF2Vector v(size);
  for (auto& w : v.words_) w = rng();
  if (size % 64 != 0 && !v.words_.empty()) v.words_.back() &= (std::uint64_t{1} << (size % 64)) - 1;
  return v;
}

GF2Vector GF2Vector::unit(std::size_t size, std::size_t index) {
  GF2Vector v(size);
  v.set(index, true);
  return v;
}

void GF2Vector::set(std::size_t i, bool value) {
  const auto mask = std::uint64_t{1} << (i & 63);
  if (value) {
    words_[i >> 6] |= mask;
  } else {
    words_[i >> 6] &= ~mask;
  }
}

std::size_t GF2Vector::count() const {
  std::size_t total = 0;
  for (auto w : words_) total += static_cast<std::size_t>(std::popcount(w));
  return total;
}

GF2Vector& GF2Vector::operator^=(const GF2Vector& other) {
  if (other.size_ != size_) throw InputError("vector sizes differ");
  for (std::size_t i = 0; i < words_.size(); ++i) words_[i] ^= other.words_[i];
  return *this;
}

const Matrix12& zeta_matrix() { return tables().zeta; }
const Matrix12& mobius_matrix() { return tables().mobius; }

Matrix12 multiply(const Matrix12& a, const Matrix12& b) {
  Matrix12 out{};
  for (int r = 0; r < kL0Size; ++r) {
    for (int m = 0; m < kL0Size; ++m) {
      if ((a[r] >> m) & 1U) out[r] ^= b[m];
    }
  }
  return out;
}

namespace {

// One 12-point transform of the rows base, base+stride, ..., base+11*stride.
// Rows are rewritten from the top of the linear extension down, so every
// row read is still untouched.
inline void transform_fiber(std::uint64_t* data, std::size_t base, std::size_t stride, std::size_t row_words,
                            const Matrix12& m) {
  for (int z = kL0Size - 1; z >= 0; --z) {
    std::uint64_t* dst = data + (base + static_cast<std::size_t>(z) * stride) * row_words;
    for (std::uint16_t rest = static_cast<std::uint16_t>(m[z] & ~(1U << z)); rest != 0; rest &= rest - 1) {
      const int y = std::countr_zero(rest);
      const std::uint64_t* src = data + (base + static_cast<std::size_t>(y) * stride) * row_words;
      for (std::size_t w = 0; w < row_words; ++w) dst[w] ^= src[w];
    }
  }
}

}  // namespace

void transform_rows(std::uint64_t* data, int k, std::size_t row_words, const Matrix12& m, Exec exec) {
  const std::uint64_t total = num_states(k);
  const std::size_t fibers = static_cast<std::size_t>(total / kL0Size);
  std::size_t stride = 1;
  for (int pos = 0; pos < k; ++pos) {
    const std::size_t block = stride * kL0Size;
    const auto fiber_base = [&](std::size_t f) { return (f / stride) * block + f % stride; };
    if (exec == Exec::parallel) {
      const long long count = static_cast<long long>(fibers);
#pragma omp parallel for schedule(static)
      for (long long f = 0; f < count; ++f) {
        transform_fiber(data, fiber_base(static_cast<std::size_t>(f)), stride, row_words, m);
      }
    } else {
      for (std::size_t f = 0; f < fibers; ++f) transform_fiber(data, fiber_base(f), stride, row_words, m);
    }
    stride = block;
  }
}

namespace {

std::vector<std::uint64_t> expand(const GF2Vector& a) {
  std::vector<std::uint64_t> rows(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) rows[i] = a.get(i) ? 1U : 0U;
  return rows;
}

GF2Vector compress(const std::vector<std::uint64_t>& rows) {
  GF2Vector out(rows.size());
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (rows[i] & 1U) out.flip(i);
  }
  return out;
}

void check_size(const GF2Vector& a, int k) {
  if (a.size() != num_states(k)) throw InputError("vector length must be 12^k");
}

}  // namespace

GF2Vector zeta(const GF2Vector& a, int k) {
  check_size(a, k);
  auto rows = expand(a);
  zeta_rows(rows.data(), k, 1, Exec::serial);
  return compress(rows);
}

GF2Vector mobius(const GF2Vector& a, int k) {
  check_size(a, k);
  auto rows = expand(a);
  mobius_rows(rows.data(), k, 1, Exec::serial);
  return compress(rows);
}

GF2Vector vee_product_naive(const GF2Vector& a, const GF2Vector& b, int k) {
  check_size(a, k);
  check_size(b, k);
  GF2Vector out(a.size());
  for (std::size_t x = 0; x < a.size(); ++x) {
    if (!a.get(x)) continue;
    for (std::size_t y = 0; y < b.size(); ++y) {
      if (b.get(y)) out.flip(state_join(x, y, k));
    }
  }
  return out;
}

GF2Vector vee_product_fast(const GF2Vector& a, const GF2Vector& b, int k, Exec exec) {
  check_size(a, k);
  check_size(b, k);
  auto ra = expand(a);
  auto rb = expand(b);
  zeta_rows(ra.data(), k, 1, exec);
  zeta_rows(rb.data(), k, 1, exec);
  for (std::size_t i = 0; i < ra.size(); ++i) ra[i] &= rb[i];
  mobius_rows(ra.data(), k, 1, exec);
  return compress(ra);
}

}  // namespace coct
