#pragma once

#include <bit>
#include <compare>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>

namespace wpec {

// Bit i of a packed word is the i-th entry of the vector (qubit/generator i+1
// in 1-based reporting), and renders as the i-th character from the left.

inline constexpr uint64_t low_mask(int n) {
  return n >= 64 ? ~uint64_t{0} : ((uint64_t{1} << n) - 1);
}

inline int popcount(uint64_t w) { return std::popcount(w); }

inline int parity(uint64_t w) { return std::popcount(w) & 1; }

inline std::string bits_to_string(uint64_t word, int n) {
  std::string s(static_cast<size_t>(n), '0');
  for (int i = 0; i < n; ++i) {
    if ((word >> i) & 1) s[static_cast<size_t>(i)] = '1';
  }
  return s;
}

inline uint64_t bits_from_string(std::string_view s, int n) {
  if (static_cast<int>(s.size()) != n) {
    throw std::invalid_argument("expected " + std::to_string(n) + " bits, got '" +
                                std::string(s) + "'");
  }
  uint64_t w = 0;
  for (int i = 0; i < n; ++i) {
    if (s[static_cast<size_t>(i)] == '1') {
      w |= uint64_t{1} << i;
    } else if (s[static_cast<size_t>(i)] != '0') {
      throw std::invalid_argument("bit string contains '" + std::string(1, s[i]) + "'");
    }
  }
  return w;
}

/// Fixed-length bit vector with a tag so block parities, trivialities and flag
/// vectors cannot be mixed up.
template <int N, class Tag>
struct Bits {
  static_assert(N > 0 && N <= 64);
  static constexpr int size = N;

  uint64_t word = 0;

  constexpr Bits() = default;
  constexpr explicit Bits(uint64_t w) : word(w & low_mask(N)) {}

  static Bits parse(std::string_view s) { return Bits(bits_from_string(s, N)); }

  constexpr bool operator[](int i) const { return (word >> i) & 1; }
  constexpr void set(int i, bool v = true) {
    if (v) {
      word |= uint64_t{1} << i;
    } else {
      word &= ~(uint64_t{1} << i);
    }
  }
  int count() const { return popcount(word); }
  bool none() const { return word == 0; }
  std::string str() const { return bits_to_string(word, N); }

  constexpr Bits operator^(Bits o) const { return Bits(word ^ o.word); }
  constexpr Bits& operator^=(Bits o) {
    word ^= o.word;
    return *this;
  }
  constexpr auto operator<=>(const Bits&) const = default;
};

using BlockParity = Bits<7, struct BlockParityTag>;
using BlockTriviality = Bits<7, struct BlockTrivialityTag>;
using FlagVector = Bits<21, struct FlagVectorTag>;

/// Runtime-length syndrome; bit i is the indicator for generator i of the
/// family it was computed against.
struct Syndrome {
  uint64_t word = 0;
  int size = 0;

  bool trivial() const { return word == 0; }
  int weight() const { return popcount(word); }
  bool operator[](int i) const { return (word >> i) & 1; }
  std::string str() const { return bits_to_string(word, size); }
  static Syndrome parse(std::string_view s) {
    return {bits_from_string(s, static_cast<int>(s.size())), static_cast<int>(s.size())};
  }
  auto operator<=>(const Syndrome&) const = default;
};

enum class WeightParity : uint8_t { Even = 0, Odd = 1 };

inline WeightParity parity_of(uint64_t word) {
  return parity(word) ? WeightParity::Odd : WeightParity::Even;
}

}  // namespace wpec
