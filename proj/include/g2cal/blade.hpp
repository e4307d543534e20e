#pragma once

#include <bit>
#include <compare>
#include <cstdint>
#include <initializer_list>
#include <string>
#include <vector>

namespace g2cal {

/// A basis monomial e^{i1} ∧ ... ∧ e^{ik} with strictly increasing indices,
/// stored as a bitmask. Index 0 is the distinguished dt slot; indices
/// 1..7 are the coframe covectors e^1..e^7.
struct Blade {
  std::uint16_t bits = 0;

  constexpr Blade() = default;
  constexpr explicit Blade(std::uint16_t b) : bits(b) {}
  Blade(std::initializer_list<int> indices) {
    for (int i : indices) bits |= std::uint16_t(1u << i);
  }

  static constexpr int kDt = 0;
  static Blade single(int index) { return Blade(std::uint16_t(1u << index)); }

  int degree() const { return std::popcount(bits); }
  bool contains(int index) const { return (bits >> index) & 1u; }
  bool has_dt() const { return contains(kDt); }
  bool empty() const { return bits == 0; }

  std::vector<int> indices() const {
    std::vector<int> out;
    for (int i = 0; i < 16; ++i)
      if (contains(i)) out.push_back(i);
    return out;
  }

  friend auto operator<=>(const Blade&, const Blade&) = default;

  std::string str() const;
};

/// Sign of e^A ∧ e^B relative to e^{A ∪ B}; 0 if the index sets overlap.
int wedge_sign(Blade a, Blade b);

inline Blade blade_union(Blade a, Blade b) {
  return Blade(std::uint16_t(a.bits | b.bits));
}
inline Blade blade_minus(Blade a, Blade b) {
  return Blade(std::uint16_t(a.bits & ~b.bits));
}
inline bool blade_subset(Blade a, Blade b) { return (a.bits & ~b.bits) == 0; }

/// All degree-k blades over the given slot mask, in increasing bit order.
std::vector<Blade> blades_of(int degree, std::uint16_t slot_mask);

}  // namespace g2cal
