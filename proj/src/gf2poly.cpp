#include "coct/gf2poly.hpp"

#if defined(__x86_64__) || defined(__i386__)
#include <immintrin.h>
#define COCT_X86 1
#endif

namespace coct {

namespace {

inline void mul64_portable(std::uint64_t a, std::uint64_t b, std::uint64_t& lo, std::uint64_t& hi) {
  lo = 0;
  hi = 0;
  while (b != 0) {
    const int s = __builtin_ctzll(b);
    lo ^= a << s;
    if (s != 0) hi ^= a >> (64 - s);
    b &= b - 1;
  }
}

#ifdef COCT_X86
__attribute__((target("pclmul,sse4.1"))) void clmul_hw(std::uint64_t* out, const std::uint64_t* a, std::size_t na,
                                                     const std::uint64_t* b, std::size_t nb) {
  for (std::size_t i = 0; i < na; ++i) {
    if (a[i] == 0) continue;
    const __m128i va = _mm_cvtsi64_si128(static_cast<long long>(a[i]));
    std::uint64_t carry = 0;
    for (std::size_t j = 0; j < nb; ++j) {
      const __m128i vb = _mm_cvtsi64_si128(static_cast<long long>(b[j]));
      const __m128i prod = _mm_clmulepi64_si128(va, vb, 0x00);
      const auto lo = static_cast<std::uint64_t>(_mm_cvtsi128_si64(prod));
      const auto hi = static_cast<std::uint64_t>(_mm_extract_epi64(prod, 1));
      out[i + j] ^= lo ^ carry;
      carry = hi;
    }
    out[i + nb] ^= carry;
  }
}
#endif

bool detect() {
#ifdef COCT_X86
  __builtin_cpu_init();
  return __builtin_cpu_supports("pclmul") && __builtin_cpu_supports("sse4.1");
#else
  return false;
#endif
}

const bool kHardware = detect();

}  // namespace

bool clmul_hardware() { return kHardware; }

void clmul_accumulate_portable(std::uint64_t* out, const std::uint64_t* a, std::size_t na, const std::uint64_t* b,
                               std::size_t nb) {
  for (std::size_t i = 0; i < na; ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; j < nb; ++j) {
      std::uint64_t lo = 0;
      std::uint64_t hi = 0;
      mul64_portable(a[i], b[j], lo, hi);
      out[i + j] ^= lo;
      out[i + j + 1] ^= hi;
    }
  }
}

void clmul_accumulate(std::uint64_t* out, const std::uint64_t* a, std::size_t na, const std::uint64_t* b,
                      std::size_t nb) {
#ifdef COCT_X86
  if (kHardware) {
    clmul_hw(out, a, na, b, nb);
    return;
  }
#endif
  clmul_accumulate_portable(out, a, na, b, nb);
}

void xor_shifted(std::uint64_t* dst, const std::uint64_t* src, std::size_t n, std::size_t shift) {
  const std::size_t words = shift / 64;
  const unsigned bits = static_cast<unsigned>(shift % 64);
  std::uint64_t* d = dst + words;
  if (bits == 0) {
    for (std::size_t i = 0; i < n; ++i) d[i] ^= src[i];
    return;
  }
  std::uint64_t carry = 0;
  for (std::size_t i = 0; i < n; ++i) {
    d[i] ^= (src[i] << bits) | carry;
    carry = src[i] >> (64 - bits);
  }
  if (carry != 0) d[n] ^= carry;
}

std::size_t significant_words(const std::uint64_t* a, std::size_t n) {
  while (n > 0 && a[n - 1] == 0) --n;
  return n;
}

}  // namespace coct
