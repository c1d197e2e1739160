#pragma once

#include <cstdint>
#include <string>

namespace coct {

// The diamond noc < black, white < bw. As two-bit masks join is OR and
// meet is AND.
enum class Color : std::uint8_t { noc = 0, black = 1, white = 2, bw = 3 };

constexpr Color color_join(Color a, Color b) {
  return static_cast<Color>(static_cast<unsigned>(a) | static_cast<unsigned>(b));
}
constexpr Color color_meet(Color a, Color b) {
  return static_cast<Color>(static_cast<unsigned>(a) & static_cast<unsigned>(b));
}
constexpr bool color_consistent(Color a, Color b) { return color_meet(a, b) == Color::noc; }
constexpr bool color_leq(Color a, Color b) { return color_join(a, b) == b; }

const char* to_string(Color c);

/// A map from labels 1..k (k <= 30) to colors, two bits per label.
class Coloring {
 public:
  static constexpr int kMaxLabel = 30;

  constexpr Coloring() = default;
  static constexpr Coloring from_bits(std::uint64_t bits) {
    Coloring c;
    c.bits_ = bits;
    return c;
  }
  static Coloring single(int label, Color color);

  Color operator[](int label) const {
    return static_cast<Color>((bits_ >> shift(label)) & 3U);
  }
  void set(int label, Color color);
  std::uint64_t bits() const { return bits_; }

  friend bool operator==(const Coloring&, const Coloring&) = default;
  friend auto operator<=>(const Coloring&, const Coloring&) = default;

 private:
  static constexpr int shift(int label) { return 2 * (label - 1); }
  std::uint64_t bits_ = 0;
};

inline Coloring coloring_join(Coloring a, Coloring b) { return Coloring::from_bits(a.bits() | b.bits()); }
inline bool coloring_leq(Coloring a, Coloring b) { return (a.bits() & ~b.bits()) == 0; }
/// Position i becomes noc and position j becomes c(i) joined with c(j).
Coloring coloring_relabel(Coloring c, int i, int j);

/// "(black, noc, bw)" for labels 1..k.
std::string to_string(Coloring c, int k);

}  // namespace coct
