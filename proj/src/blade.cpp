#include "g2cal/blade.hpp"

namespace g2cal {

std::string Blade::str() const {
  if (bits == 0) return "1";
  std::string out;
  if (has_dt()) out = "dt";
  std::string digits;
  for (int i = 1; i < 16; ++i)
    if (contains(i)) digits += std::to_string(i);
  if (!digits.empty()) {
    if (!out.empty()) out += ".";
    out += "e" + digits;
  }
  return out;
}

int wedge_sign(Blade a, Blade b) {
  if (a.bits & b.bits) return 0;
  // Count transpositions needed to merge b past the higher indices of a.
  int swaps = 0;
  for (int i = 0; i < 16; ++i) {
    if (!b.contains(i)) continue;
    swaps += std::popcount(std::uint16_t(a.bits >> (i + 1)));
  }
  return (swaps & 1) ? -1 : 1;
}

std::vector<Blade> blades_of(int degree, std::uint16_t slot_mask) {
  std::vector<Blade> out;
  for (std::uint16_t m = 0; m < (1u << 9); ++m) {
    if ((m & ~slot_mask) != 0) continue;
    if (std::popcount(m) != degree) continue;
    out.push_back(Blade(m));
  }
  return out;
}

}  // namespace g2cal
