#pragma once

#include <cstddef>
#include <cstdint>

namespace coct {

// Polynomials over GF(2) packed little-endian into 64-bit words: bit b of
// word w is the coefficient of x^(64w + b).

/// out[0 .. na+nb) ^= a * b.
void clmul_accumulate(std::uint64_t* out, const std::uint64_t* a, std::size_t na, const std::uint64_t* b,
                      std::size_t nb);
/// Shift-and-add reference used to test clmul_accumulate.
void clmul_accumulate_portable(std::uint64_t* out, const std::uint64_t* a, std::size_t na, const std::uint64_t* b,
                               std::size_t nb);
/// Whether clmul_accumulate uses the carry-less multiply instruction.
bool clmul_hardware();

/// dst ^= src * x^shift, where dst has room for the shifted words.
void xor_shifted(std::uint64_t* dst, const std::uint64_t* src, std::size_t n, std::size_t shift);

/// Number of words up to and including the last nonzero one.
std::size_t significant_words(const std::uint64_t* a, std::size_t n);

}  // namespace coct
