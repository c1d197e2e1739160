#include "coct/color.hpp"

#include "coct/error.hpp"

namespace coct {

const char* to_string(Color c) {
  switch (c) {
    case Color::noc: return "noc";
    case Color::black: return "black";
    case Color::white: return "white";
    case Color::bw: return "bw";
  }
  return "?";
}

Coloring Coloring::single(int label, Color color) {
  Coloring c;
  c.set(label, color);
  return c;
}

void Coloring::set(int label, Color color) {
  if (label < 1 || label > kMaxLabel) throw InputError("coloring label out of range");
  bits_ = (bits_ & ~(std::uint64_t{3} << shift(label))) |
          (std::uint64_t{static_cast<std::uint8_t>(color)} << shift(label));
}

Coloring coloring_relabel(Coloring c, int i, int j) {
  if (i == j) throw InputError("relabel labels must differ");
  const Color moved = c[i];
  c.set(i, Color::noc);
  c.set(j, color_join(moved, c[j]));
  return c;
}

std::string to_string(Coloring c, int k) {
  std::string out = "(";
  for (int i = 1; i <= k; ++i) {
    if (i > 1) out += ", ";
    out += to_string(c[i]);
  }
  return out + ")";
}

}  // namespace coct
