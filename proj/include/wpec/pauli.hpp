#pragma once

#include <cstdint>
#include <string>
#include <string_view>

#include "wpec/bits.hpp"

namespace wpec {

/// Phaseless n-qubit Pauli operator in binary symplectic form (n <= 64).
/// Qubit 1 of the usual left-to-right string is bit 0 of both words.
class PauliOp {
 public:
  static constexpr int kMaxQubits = 64;

  PauliOp() = default;
  explicit PauliOp(int n);
  PauliOp(int n, uint64_t x_bits, uint64_t z_bits);

  static PauliOp identity(int n) { return PauliOp(n); }
  static PauliOp z_type(int n, uint64_t support) { return PauliOp(n, 0, support); }
  static PauliOp x_type(int n, uint64_t support) { return PauliOp(n, support, 0); }
  /// Parses a string over {I,X,Y,Z}; '_' is accepted as I.
  static PauliOp parse(std::string_view text);

  int num_qubits() const { return n_; }
  uint64_t x_bits() const { return x_; }
  uint64_t z_bits() const { return z_; }
  uint64_t support() const { return x_ | z_; }

  bool is_identity() const { return (x_ | z_) == 0; }
  bool is_z_type() const { return x_ == 0; }
  bool is_x_type() const { return z_ == 0; }

  std::string str() const;

  bool operator==(const PauliOp&) const = default;
  auto operator<=>(const PauliOp&) const = default;

 private:
  int n_ = 0;
  uint64_t x_ = 0;
  uint64_t z_ = 0;
};

/// 0-based index of a 7-qubit subblock of the 49-qubit code.
struct BlockIndex {
  int index = 0;
  explicit BlockIndex(int i);
  int first_qubit() const { return 7 * index; }
};

inline constexpr int kBlockSize = 7;
inline constexpr int kNumBlocks = 7;
inline constexpr int kConcatQubits = 49;

int weight(const PauliOp& p);
bool commutes(const PauliOp& p, const PauliOp& q);
PauliOp multiply(const PauliOp& p, const PauliOp& q);
inline PauliOp operator*(const PauliOp& p, const PauliOp& q) { return multiply(p, q); }

/// The 7-qubit factor of a 49-qubit operator on subblock b.
PauliOp restrict_to_block(const PauliOp& p, BlockIndex b);
/// Places a 7-qubit operator on subblock b of an otherwise-identity 49-qubit operator.
PauliOp embed_in_block(const PauliOp& p, BlockIndex b);

inline uint64_t block_bits(uint64_t word49, int block) {
  return (word49 >> (kBlockSize * block)) & low_mask(kBlockSize);
}

}  // namespace wpec
